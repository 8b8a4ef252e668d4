#include "folrig/liealg.hpp"

#include <fstream>
#include <sstream>

namespace folrig {

FMatrix vf_bracket(const FMatrix& a, const FMatrix& b) {
    return b * a - a * b;
}

VField vfield_from_matrix(const FMatrix& a) {
    int nv = a.rows();
    VField x(nv);
    for (int i = 0; i < nv; ++i) {
        Poly c(nv);
        for (int j = 0; j < nv; ++j) {
            if (a.at(i, j).is_zero()) continue;
            c += Poly::variable(nv, j).scale(a.at(i, j));
        }
        x.comp[i] = c;
    }
    return x;
}

std::vector<VField> LieAlgebraData::fields() const {
    std::vector<VField> out;
    out.reserve(basis.size());
    for (const FMatrix& m : basis) out.push_back(vfield_from_matrix(m));
    return out;
}

namespace {

std::vector<FieldElem> flatten(const FMatrix& m) {
    std::vector<FieldElem> v;
    v.reserve(m.rows() * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

FMatrix span_matrix(const std::vector<FMatrix>& basis) {
    int nsq = basis.empty() ? 0 : basis[0].rows() * basis[0].cols();
    FMatrix a(nsq, (int)basis.size());
    for (size_t k = 0; k < basis.size(); ++k) {
        auto v = flatten(basis[k]);
        for (int i = 0; i < nsq; ++i) a.at(i, (int)k) = v[i];
    }
    return a;
}

}  // namespace

std::optional<std::vector<FieldElem>> LieAlgebraData::coordinates(const FMatrix& m) const {
    return span_matrix(basis).solve(flatten(m));
}

LieAlgebraData structure_constants(const std::vector<FMatrix>& basis) {
    if (basis.empty()) throw std::invalid_argument("empty basis");
    int nv = basis[0].rows();
    for (const FMatrix& m : basis) {
        if (m.rows() != nv || m.cols() != nv) throw std::invalid_argument("basis matrices must share one size");
        if (!m.trace().is_zero()) throw std::invalid_argument("basis matrix has nonzero trace");
    }
    FMatrix span = span_matrix(basis);
    if (span.rank() != (int)basis.size()) throw std::invalid_argument("basis matrices are dependent");

    LieAlgebraData g;
    g.n = nv - 1;
    g.basis = basis;
    int dim = (int)basis.size();
    g.constants.assign(dim, std::vector<std::vector<FieldElem>>(dim, std::vector<FieldElem>(dim, FieldElem(0))));
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            FMatrix br = vf_bracket(basis[i], basis[j]);
            auto coords = span.solve(flatten(br));
            if (!coords) {
                std::ostringstream msg;
                msg << "bracket of basis elements " << i << " and " << j << " lies outside the span";
                throw NotClosedError(msg.str(), i, j);
            }
            for (int k = 0; k < dim; ++k) {
                g.constants[i][j][k] = (*coords)[k];
                g.constants[j][i][k] = -(*coords)[k];
            }
        }
    }
    return g;
}

// ---------------------------------------------------------------------------

namespace {

FMatrix diag_matrix(const std::vector<FieldElem>& w) {
    FMatrix m((int)w.size(), (int)w.size());
    for (size_t i = 0; i < w.size(); ++i) m.at((int)i, (int)i) = w[i];
    return m;
}

// shift field sum_i b_i z_{i+k} d/dz_i as a matrix: entry (i, i+k) = b_i
FMatrix shift_matrix(int nv, int k, const std::vector<FieldElem>& b) {
    FMatrix m(nv, nv);
    for (int i = 0; i + k < nv; ++i)
        if (i < (int)b.size()) m.at(i, i + k) = b[i];
    return m;
}

// weighted-chain basis from b-coefficient rows: X = diag(n-2i), Y_k as given
std::vector<FMatrix> weighted_chain(int n, const std::vector<std::vector<FieldElem>>& brows) {
    int nv = n + 1;
    std::vector<FieldElem> w;
    for (int i = 0; i <= n; ++i) w.emplace_back(n - 2 * i);
    std::vector<FMatrix> basis{diag_matrix(w)};
    for (size_t k = 0; k < brows.size(); ++k)
        basis.push_back(shift_matrix(nv, (int)k + 1, brows[k]));
    return basis;
}

// b-coefficient table of the degree-(n-1) extension family:
// b^{(1)} = all ones, b^{(n-2)} = all ones, b^{(k)}_{i+1} = b^{(k)}_i + b^{(k+1)}_i
std::vector<std::vector<FieldElem>> extension_b_rows(int n, const std::vector<FieldElem>& b0) {
    std::vector<std::vector<FieldElem>> rows(n - 2);
    rows[0].assign(n, FieldElem(1));                 // Y_1
    rows[n - 3].assign(3, FieldElem(1));             // Y_{n-2}
    for (int k = n - 3; k >= 2; --k) {
        std::vector<FieldElem> r{b0[k - 2]};
        for (int i = 0; i < n - k; ++i) r.push_back(r[i] + rows[k][i]);  // rows[k] holds b^{(k+1)}
        rows[k - 1] = std::move(r);
    }
    return rows;
}

}  // namespace

LieAlgebraData chain_algebra(int n, int r) {
    if (n < 3 || r < 2 || r > n - 1) throw std::invalid_argument("chain algebra needs n >= 3, 2 <= r <= n-1");
    std::vector<std::vector<FieldElem>> brows(n - r);
    for (int k = 1; k <= n - r; ++k) brows[k - 1].assign(n - k + 1, FieldElem(1));
    return structure_constants(weighted_chain(n, brows));
}

LieAlgebraData sl2_sym_algebra(int r) {
    if (r < 2) throw std::invalid_argument("sl2_sym needs r >= 2");
    int nv = r + 1;
    std::vector<FieldElem> w;
    for (int i = 0; i <= r; ++i) w.emplace_back(r - 2 * i);
    FMatrix h = diag_matrix(w);
    FMatrix e(nv, nv), f(nv, nv);
    for (int i = 0; i < r; ++i) e.at(i, i + 1) = FieldElem(r - i);      // sum (r-i) z_{i+1} d/dz_i
    for (int j = 0; j < r; ++j) f.at(j + 1, j) = FieldElem(j + 1);      // sum (j+1) z_j d/dz_{j+1}
    return structure_constants({h, e, f});
}

LieAlgebraData diagonal_algebra(const std::vector<std::vector<mpq_class>>& weight_rows) {
    if (weight_rows.empty()) throw std::invalid_argument("need at least one weight row");
    std::vector<FMatrix> basis;
    for (const auto& row : weight_rows) {
        std::vector<FieldElem> w(row.begin(), row.end());
        basis.push_back(diag_matrix(w));
    }
    return structure_constants(basis);
}

std::vector<std::vector<mpq_class>> default_diagonal_weights(int n, int q) {
    if (q < 1 || q > n - 1) throw std::invalid_argument("need 1 <= q <= n-1");
    // centered geometric rows (b^0, b^1, ..., b^n) - mean over distinct odd
    // primes b; every maximal minor of the resulting weight matrix is nonzero
    // for the ranges used here (checked by the genericity test)
    static const long kBases[] = {3, 5, 7, 11, 13, 17, 19};
    if (n - q > (int)(sizeof(kBases) / sizeof(kBases[0])))
        throw std::invalid_argument("no default weights for this dimension");
    std::vector<std::vector<mpq_class>> rows;
    for (int k = 0; k < n - q; ++k) {
        std::vector<mpq_class> row;
        mpq_class sum = 0;
        mpq_class v = 1;
        for (int i = 0; i <= n; ++i) {
            row.push_back(v);
            sum += v;
            v *= kBases[k];
        }
        for (auto& x : row) x -= sum / (n + 1);
        rows.push_back(std::move(row));
    }
    return rows;
}

LieAlgebraData g_extension_algebra(int n) {
    if (n == 6) {
        std::vector<FieldElem> b0{FieldElem(mpq_class(9, 8)), FieldElem(mpq_class(-3, 2))};
        return structure_constants(weighted_chain(6, extension_b_rows(6, b0)));
    }
    if (n == 7) {
        FieldElem s3 = FieldElem::sqrt_of(3);
        FieldElem half(mpq_class(1, 2));
        std::vector<FieldElem> b0{s3 * half, FieldElem(1) - s3, (FieldElem(-3) + s3) * half};
        return structure_constants(weighted_chain(7, extension_b_rows(7, b0)));
    }
    throw std::invalid_argument("extension algebras exist for n = 6 and n = 7 only");
}

LieAlgebraData builtin_algebra(const std::string& name, const nlohmann::json& params) {
    auto geti = [&](const char* key) {
        if (!params.contains(key)) throw std::invalid_argument(std::string("missing parameter '") + key + "'");
        return params.at(key).get<int>();
    };
    if (name == "chain") return chain_algebra(geti("n"), geti("r"));
    if (name == "infinito") return chain_algebra(geti("n"), 2);
    if (name == "aff_sym") { int r = geti("r"); return chain_algebra(r, r - 1); }
    if (name == "sl2_sym") return sl2_sym_algebra(geti("r"));
    if (name == "g6") return g_extension_algebra(6);
    if (name == "g7") return g_extension_algebra(7);
    if (name == "diagonal") {
        if (params.contains("weights")) {
            std::vector<std::vector<mpq_class>> rows;
            for (const auto& r : params.at("weights")) {
                std::vector<mpq_class> row;
                for (const auto& v : r) {
                    if (v.is_string()) row.emplace_back(v.get<std::string>());
                    else row.emplace_back((long)v.get<long>());
                }
                for (auto& q : row) q.canonicalize();
                rows.push_back(std::move(row));
            }
            return diagonal_algebra(rows);
        }
        return diagonal_algebra(default_diagonal_weights(geti("n"), geti("q")));
    }
    throw std::invalid_argument("unknown builtin algebra '" + name + "'");
}

LieAlgebraData algebra_from_json(const nlohmann::json& spec) {
    int n = spec.at("n").get<int>();
    int nv = n + 1;
    long rad = 0;
    if (spec.contains("radicand") && !spec.at("radicand").is_null()) rad = spec.at("radicand").get<long>();
    std::vector<FMatrix> basis;
    for (const auto& gen : spec.at("generators")) {
        if ((int)gen.size() != nv * nv)
            throw std::invalid_argument("generator needs (n+1)^2 entries, row-major");
        FMatrix m(nv, nv);
        int idx = 0;
        for (const auto& s : gen) {
            FieldElem v = FieldElem::parse(s.get<std::string>());
            if (v.radicand() != 0 && v.radicand() != rad)
                throw std::invalid_argument("entry radicand disagrees with spec radicand");
            m.at(idx / nv, idx % nv) = v;
            ++idx;
        }
        basis.push_back(std::move(m));
    }
    return structure_constants(basis);
}

nlohmann::ordered_json algebra_to_json(const LieAlgebraData& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    long rad = 0;
    for (const FMatrix& m : g.basis)
        for (int i = 0; i < m.rows(); ++i)
            for (int c = 0; c < m.cols(); ++c)
                if (m.at(i, c).radicand() != 0) rad = m.at(i, c).radicand();
    if (rad) j["radicand"] = rad;
    else j["radicand"] = nullptr;
    auto gens = nlohmann::ordered_json::array();
    for (const FMatrix& m : g.basis) {
        auto entries = nlohmann::ordered_json::array();
        for (int i = 0; i < m.rows(); ++i)
            for (int c = 0; c < m.cols(); ++c) entries.push_back(m.at(i, c).str());
        gens.push_back(entries);
    }
    j["generators"] = gens;
    return j;
}

LieAlgebraData parse_algebra_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open algebra spec '" + path + "'");
    nlohmann::json spec;
    try {
        in >> spec;
    } catch (const std::exception& e) {
        throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
    }
    if (spec.contains("builtin")) return builtin_algebra(spec.at("builtin").get<std::string>(), spec);
    return algebra_from_json(spec);
}

}  // namespace folrig
