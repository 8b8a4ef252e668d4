#include "folrig/cohomology.hpp"

#include <algorithm>

namespace folrig {

std::vector<FMatrix> sl_basis(int nv) {
    std::vector<FMatrix> basis;
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            if (i == j) continue;
            FMatrix m(nv, nv);
            m.at(i, j) = FieldElem(1);
            basis.push_back(std::move(m));
        }
    for (int i = 0; i + 1 < nv; ++i) {
        FMatrix m(nv, nv);
        m.at(i, i) = FieldElem(1);
        m.at(i + 1, i + 1) = FieldElem(-1);
        basis.push_back(std::move(m));
    }
    return basis;
}

namespace {

std::vector<FieldElem> flatten(const FMatrix& m) {
    std::vector<FieldElem> v;
    v.reserve(m.rows() * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

// coordinates in the E_ij / H_i basis of sl(nv)
std::vector<FieldElem> sl_coords(const FMatrix& m) {
    int nv = m.rows();
    std::vector<FieldElem> v;
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            if (i != j) v.push_back(m.at(i, j));
    FieldElem acc(0);
    for (int i = 0; i + 1 < nv; ++i) {
        acc += m.at(i, i);
        v.push_back(acc);
    }
    return v;
}

}  // namespace

FMatrix ad_on_sl(const FMatrix& x) {
    int nv = x.rows();
    auto basis = sl_basis(nv);
    int dim = (int)basis.size();
    FMatrix a(dim, dim);
    for (int k = 0; k < dim; ++k) {
        auto col = sl_coords(vf_bracket(x, basis[k]));
        for (int i = 0; i < dim; ++i) a.at(i, k) = col[i];
    }
    return a;
}

std::vector<FieldElem> minimal_polynomial(const FMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("square matrix required");
    int n = a.rows();
    // Krylov on the flattened powers of the matrix itself
    std::vector<std::vector<FieldElem>> powers;
    FMatrix p = FMatrix::identity(n);
    powers.push_back(flatten(p));
    for (int deg = 1;; ++deg) {
        p = p * a;
        powers.push_back(flatten(p));
        // dependence test: solve sum_{i<deg} c_i A^i = A^deg
        FMatrix mat(n * n, deg);
        for (int c = 0; c < deg; ++c)
            for (int r = 0; r < n * n; ++r) mat.at(r, c) = powers[c][r];
        auto sol = mat.solve(powers[deg]);
        if (sol) {
            std::vector<FieldElem> mp;
            for (auto& c : *sol) mp.push_back(-c);
            mp.push_back(FieldElem(1));
            return mp;
        }
        if (deg > n) throw std::logic_error("minimal polynomial search exceeded dimension");
    }
}

namespace {

// univariate helpers over FieldElem, coefficients low-to-high
std::vector<FieldElem> poly_derivative(const std::vector<FieldElem>& f) {
    std::vector<FieldElem> d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(FieldElem((long)i) * f[i]);
    return d;
}

void poly_trim(std::vector<FieldElem>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

std::vector<FieldElem> poly_rem(std::vector<FieldElem> a, const std::vector<FieldElem>& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        FieldElem f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    return a;
}

int poly_gcd_degree(std::vector<FieldElem> a, std::vector<FieldElem> b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? -1 : (int)a.size() - 1;
}

}  // namespace

std::optional<std::vector<mpq_class>> semisimple_rational_spectrum(const FMatrix& a) {
    auto mp = minimal_polynomial(a);
    for (const auto& c : mp)
        if (!c.is_rational()) return std::nullopt;
    if (poly_gcd_degree(mp, poly_derivative(mp)) != 0) return std::nullopt;  // not squarefree
    // find rational roots by rational-root candidates, deflating as we go
    std::vector<FieldElem> f = mp;
    std::vector<mpq_class> roots;
    while (f.size() > 1) {
        // integer-coefficient primitive version
        mpz_class lcm_den = 1;
        for (const auto& c : f) {
            mpz_class d = c.rat().get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
            lcm_den = lcm_den / g * d;
        }
        std::vector<mpz_class> ic;
        for (const auto& c : f) ic.push_back(mpq_class(c.rat() * lcm_den).get_num());
        size_t lo = 0;
        while (lo < ic.size() && ic[lo] == 0) ++lo;
        if (lo > 0) {
            roots.push_back(0);
            std::vector<FieldElem> g(f.begin() + lo, f.end());
            f = std::move(g);
            continue;
        }
        mpz_class a0 = abs(ic.front()), an = abs(ic.back());
        bool found = false;
        // enumerate divisors p | a0, q | an; values are small in this artifact
        std::vector<mpz_class> ps, qs;
        for (mpz_class d = 1; d * d <= a0; ++d)
            if (mpz_divisible_p(a0.get_mpz_t(), d.get_mpz_t())) { ps.push_back(d); ps.push_back(a0 / d); }
        for (mpz_class d = 1; d * d <= an; ++d)
            if (mpz_divisible_p(an.get_mpz_t(), d.get_mpz_t())) { qs.push_back(d); qs.push_back(an / d); }
        for (const auto& pn : ps) {
            for (const auto& qn : qs) {
                for (int sign : {1, -1}) {
                    mpq_class cand(sign * pn, qn);
                    cand.canonicalize();
                    // evaluate
                    FieldElem val(0), x(cand);
                    for (size_t i = f.size(); i-- > 0;) val = val * x + f[i];
                    if (val.is_zero()) {
                        roots.push_back(cand);
                        // synthetic division by (t - cand)
                        std::vector<FieldElem> g(f.size() - 1);
                        FieldElem carry(0);
                        for (size_t i = f.size(); i-- > 1;) {
                            carry = f[i] + carry * x;
                            g[i - 1] = carry;
                        }
                        f = std::move(g);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;  // irrational eigenvalue
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------

namespace {

// greedy basis extension; `fixed` columns always kept, candidates added when
// they enlarge the span.  works on flat matrix coordinates.
struct SpanTracker {
    std::vector<std::vector<FieldElem>> rows;  // row-echelon workspace
    int rank = 0;

    bool try_add(std::vector<FieldElem> v) {
        for (auto& row : rows) {
            int lead = -1;
            for (size_t i = 0; i < row.size(); ++i)
                if (!row[i].is_zero()) { lead = (int)i; break; }
            if (lead < 0) continue;
            if (!v[lead].is_zero()) {
                FieldElem f = v[lead] / row[lead];
                for (size_t i = 0; i < v.size(); ++i) v[i] -= f * row[i];
            }
        }
        bool nonzero = std::any_of(v.begin(), v.end(), [](const FieldElem& x) { return !x.is_zero(); });
        if (!nonzero) return false;
        rows.push_back(std::move(v));
        ++rank;
        return true;
    }
};

QuotientModule finish_module(const LieAlgebraData& g, std::vector<FMatrix> complement,
                             std::optional<std::vector<long>> grading) {
    int nv = g.n + 1;
    int dimL = nv * nv - 1;
    int dimg = g.dim();
    int dimM = (int)complement.size();
    if (dimg + dimM != dimL) throw std::logic_error("complement has wrong dimension");

    QuotientModule m;
    m.g = g;
    m.complement = std::move(complement);
    m.grading = std::move(grading);

    FMatrix full(nv * nv, dimL);
    auto put_col = [&](int col, const FMatrix& mat) {
        auto v = flatten(mat);
        for (int r = 0; r < nv * nv; ++r) full.at(r, col) = v[r];
    };
    for (int i = 0; i < dimg; ++i) put_col(i, g.basis[i]);
    for (int i = 0; i < dimM; ++i) put_col(dimg + i, m.complement[i]);

    // choose dimL independent rows, invert that square block
    FMatrix work = full;
    std::vector<int> sel;
    {
        // row-reduce the transpose to find pivot rows
        FMatrix t = full.transpose();  // dimL x nv^2
        int rank = 0;
        std::vector<int> pivots;
        FMatrix red = t;
        for (int col = 0; col < red.cols() && rank < red.rows(); ++col) {
            int piv = -1;
            for (int r = rank; r < red.rows(); ++r)
                if (!red.at(r, col).is_zero()) { piv = r; break; }
            if (piv < 0) continue;
            for (int j = 0; j < red.cols(); ++j) std::swap(red.at(rank, j), red.at(piv, j));
            FieldElem inv = red.at(rank, col).inverse();
            for (int j = col; j < red.cols(); ++j) red.at(rank, j) *= inv;
            for (int r = 0; r < red.rows(); ++r) {
                if (r == rank || red.at(r, col).is_zero()) continue;
                FieldElem f = red.at(r, col);
                for (int j = col; j < red.cols(); ++j) red.at(r, j) -= f * red.at(rank, j);
            }
            pivots.push_back(col);
            ++rank;
        }
        if (rank != dimL) throw std::logic_error("basis + complement does not span sl");
        sel = pivots;
    }
    FMatrix square(dimL, dimL);
    for (int i = 0; i < dimL; ++i)
        for (int j = 0; j < dimL; ++j) square.at(i, j) = full.at(sel[i], j);
    // invert by solving against identity columns
    FMatrix inv(dimL, dimL);
    for (int c = 0; c < dimL; ++c) {
        std::vector<FieldElem> e(dimL, FieldElem(0));
        e[c] = FieldElem(1);
        auto x = square.solve(e);
        if (!x) throw std::logic_error("projection block not invertible");
        for (int r = 0; r < dimL; ++r) inv.at(r, c) = (*x)[r];
    }
    m.selected_rows = sel;
    m.solver = std::move(inv);

    // action of each g-basis element on the complement classes
    for (int a = 0; a < dimg; ++a) {
        FMatrix op(dimM, dimM);
        for (int c = 0; c < dimM; ++c) {
            auto coords = m.project(vf_bracket(g.basis[a], m.complement[c]));
            for (int r = 0; r < dimM; ++r) op.at(r, c) = coords[r];
        }
        m.action.push_back(std::move(op));
    }
    return m;
}

}  // namespace

std::vector<FieldElem> QuotientModule::project(const FMatrix& mat) const {
    int dimL = (int)selected_rows.size();
    int nv = g.n + 1;
    std::vector<FieldElem> rhs(dimL);
    auto v = flatten(mat);
    for (int i = 0; i < dimL; ++i) rhs[i] = v[selected_rows[i]];
    int dimg = g.dim();
    std::vector<FieldElem> out(dimL - dimg, FieldElem(0));
    for (int r = dimg; r < dimL; ++r) {
        FieldElem acc(0);
        for (int c = 0; c < dimL; ++c) {
            if (solver.at(r, c).is_zero() || rhs[c].is_zero()) continue;
            acc += solver.at(r, c) * rhs[c];
        }
        out[r - dimg] = acc;
    }
    (void)nv;
    return out;
}

std::vector<FieldElem> QuotientModule::g_part(const FMatrix& mat) const {
    int dimL = (int)selected_rows.size();
    std::vector<FieldElem> rhs(dimL);
    auto v = flatten(mat);
    for (int i = 0; i < dimL; ++i) rhs[i] = v[selected_rows[i]];
    int dimg = g.dim();
    std::vector<FieldElem> out(dimg, FieldElem(0));
    for (int r = 0; r < dimg; ++r) {
        FieldElem acc(0);
        for (int c = 0; c < dimL; ++c) {
            if (solver.at(r, c).is_zero() || rhs[c].is_zero()) continue;
            acc += solver.at(r, c) * rhs[c];
        }
        out[r] = acc;
    }
    return out;
}

QuotientModule quotient_module(const LieAlgebraData& g, std::optional<int> grading_element) {
    int nv = g.n + 1;
    auto slb = sl_basis(nv);

    if (!grading_element) {
        SpanTracker tracker;
        for (const FMatrix& b : g.basis)
            if (!tracker.try_add(flatten(b))) throw std::invalid_argument("dependent algebra basis");
        std::vector<FMatrix> comp;
        for (const FMatrix& cand : slb)
            if (tracker.try_add(flatten(cand))) comp.push_back(cand);
        return finish_module(g, std::move(comp), std::nullopt);
    }

    int gx = *grading_element;
    if (gx < 0 || gx >= g.dim()) throw std::out_of_range("grading element index");
    FMatrix ad = ad_on_sl(g.basis[gx]);
    auto spectrum = semisimple_rational_spectrum(ad);
    if (!spectrum)
        throw std::domain_error("grading element's ad is not semisimple over the working field");

    SpanTracker tracker;
    for (const FMatrix& b : g.basis)
        if (!tracker.try_add(flatten(b))) throw std::invalid_argument("dependent algebra basis");

    std::vector<FMatrix> comp;
    std::vector<long> grading;
    int dimL = nv * nv - 1;
    for (const mpq_class& lam : *spectrum) {
        // eigenspace basis: nullspace of (ad - lam I)
        FMatrix shifted = ad;
        for (int i = 0; i < dimL; ++i) shifted.at(i, i) -= FieldElem(lam);
        for (const auto& vec : shifted.nullspace()) {
            // rebuild the matrix from sl coordinates
            FMatrix mat(nv, nv);
            int idx = 0;
            for (int i = 0; i < nv; ++i)
                for (int j = 0; j < nv; ++j)
                    if (i != j) mat.at(i, j) = vec[idx++];
            // diagonal from partial sums: coeff_k of H_k gives d_0..d_{nv-1}
            FieldElem prev(0);
            for (int k = 0; k + 1 < nv; ++k) {
                mat.at(k, k) = vec[idx + k] - prev;
                prev = vec[idx + k];
            }
            mat.at(nv - 1, nv - 1) = -prev;
            if (tracker.try_add(flatten(mat))) {
                comp.push_back(mat);
                if (lam.get_den() != 1) throw std::logic_error("non-integer grading eigenvalue");
                grading.push_back(lam.get_num().get_si());
            }
        }
    }
    return finish_module(g, std::move(comp), std::move(grading));
}

QuotientModule quotient_module_with_complement(const LieAlgebraData& g, const std::vector<FMatrix>& complement) {
    return finish_module(g, complement, std::nullopt);
}

// ---------------------------------------------------------------------------

std::vector<FieldElem> Cochain::value(const IdxTuple& increasing) const {
    auto it = values.find(increasing);
    if (it != values.end()) return it->second;
    return std::vector<FieldElem>(module_dim, FieldElem(0));
}

std::vector<FieldElem> Cochain::value_signed(IdxTuple t) const {
    int sign = 1;
    for (size_t a = 1; a < t.size(); ++a) {
        size_t b = a;
        while (b > 0 && t[b - 1] >= t[b]) {
            if (t[b - 1] == t[b]) return std::vector<FieldElem>(module_dim, FieldElem(0));
            std::swap(t[b - 1], t[b]);
            sign = -sign;
            --b;
        }
    }
    auto v = value(t);
    if (sign < 0)
        for (auto& x : v) x = -x;
    return v;
}

Cochain ce_coboundary(const Cochain& f, const QuotientModule& m) {
    int dimg = m.g.dim();
    int dimM = m.dim();
    if (f.module_dim != dimM) throw std::invalid_argument("cochain module dimension mismatch");
    Cochain df;
    df.degree = f.degree + 1;
    df.module_dim = dimM;
    for (const IdxTuple& t : basis_multivectors(dimg, f.degree + 1)) {
        std::vector<FieldElem> acc(dimM, FieldElem(0));
        // sum_i (-1)^i v_i . f(..v^_i..)
        for (size_t i = 0; i < t.size(); ++i) {
            IdxTuple rest;
            for (size_t k = 0; k < t.size(); ++k)
                if (k != i) rest.push_back(t[k]);
            auto val = f.value(rest);
            const FMatrix& op = m.action[t[i]];
            for (int r = 0; r < dimM; ++r) {
                FieldElem s(0);
                for (int c = 0; c < dimM; ++c) {
                    if (op.at(r, c).is_zero() || val[c].is_zero()) continue;
                    s += op.at(r, c) * val[c];
                }
                if (i % 2) acc[r] -= s;
                else acc[r] += s;
            }
        }
        // sum_{i<j} (-1)^{i+j} f([v_i,v_j], ..)
        for (size_t i = 0; i < t.size(); ++i) {
            for (size_t j = i + 1; j < t.size(); ++j) {
                IdxTuple rest;
                for (size_t k = 0; k < t.size(); ++k)
                    if (k != i && k != j) rest.push_back(t[k]);
                const auto& c = m.g.constants[t[i]][t[j]];
                for (int l = 0; l < dimg; ++l) {
                    if (c[l].is_zero()) continue;
                    IdxTuple arg;
                    arg.push_back(l);
                    for (int r : rest) arg.push_back(r);
                    auto val = f.value_signed(arg);
                    int sgn = ((i + j) % 2) ? -1 : 1;
                    for (int r = 0; r < dimM; ++r) acc[r] += FieldElem(sgn) * c[l] * val[r];
                }
            }
        }
        bool nonzero = std::any_of(acc.begin(), acc.end(), [](const FieldElem& x) { return !x.is_zero(); });
        if (nonzero) df.values.emplace(t, std::move(acc));
    }
    return df;
}

FMatrix coboundary_matrix(const QuotientModule& m, int k) {
    int dimg = m.g.dim();
    int dimM = m.dim();
    auto dom = basis_multivectors(dimg, k);
    auto cod = basis_multivectors(dimg, k + 1);
    std::map<IdxTuple, int> cod_index;
    for (size_t i = 0; i < cod.size(); ++i) cod_index.emplace(cod[i], (int)i);
    FMatrix mat((int)cod.size() * dimM, (int)dom.size() * dimM);
    for (size_t col_t = 0; col_t < dom.size(); ++col_t) {
        for (int col_m = 0; col_m < dimM; ++col_m) {
            Cochain basis_cochain;
            basis_cochain.degree = k;
            basis_cochain.module_dim = dimM;
            std::vector<FieldElem> v(dimM, FieldElem(0));
            v[col_m] = FieldElem(1);
            basis_cochain.values.emplace(dom[col_t], std::move(v));
            Cochain df = ce_coboundary(basis_cochain, m);
            int col = (int)col_t * dimM + col_m;
            for (const auto& [t, val] : df.values) {
                int row0 = cod_index.at(t) * dimM;
                for (int r = 0; r < dimM; ++r)
                    if (!val[r].is_zero()) mat.at(row0 + r, col) = val[r];
            }
        }
    }
    return mat;
}

namespace {

int coboundary_rank(const QuotientModule& m, int k) {
    int dimg = m.g.dim();
    int dimM = m.dim();
    auto dom = basis_multivectors(dimg, k);
    auto cod = basis_multivectors(dimg, k + 1);
    std::map<IdxTuple, int> cod_index;
    for (size_t i = 0; i < cod.size(); ++i) cod_index.emplace(cod[i], (int)i);
    // assemble sparse rows (row = codomain coordinate)
    std::vector<std::map<int, FieldElem>> rows((int)cod.size() * dimM);
    for (size_t col_t = 0; col_t < dom.size(); ++col_t) {
        for (int col_m = 0; col_m < dimM; ++col_m) {
            Cochain basis_cochain;
            basis_cochain.degree = k;
            basis_cochain.module_dim = dimM;
            std::vector<FieldElem> v(dimM, FieldElem(0));
            v[col_m] = FieldElem(1);
            basis_cochain.values.emplace(dom[col_t], std::move(v));
            Cochain df = ce_coboundary(basis_cochain, m);
            int col = (int)col_t * dimM + col_m;
            for (const auto& [t, val] : df.values) {
                int row0 = cod_index.at(t) * dimM;
                for (int r = 0; r < dimM; ++r)
                    if (!val[r].is_zero()) rows[row0 + r][col] = val[r];
            }
        }
    }
    return sparse_rank(std::move(rows));
}

}  // namespace

int cohomology_dim(const QuotientModule& m, int k) {
    if (k < 0 || k > 2) throw std::invalid_argument("cohomology computed for k in {0,1,2} only");
    int dimg = m.g.dim();
    int dimM = m.dim();
    long dimCk = (long)basis_multivectors(dimg, k).size() * dimM;
    int rank_dk = coboundary_rank(m, k);
    int rank_prev = (k == 0) ? 0 : coboundary_rank(m, k - 1);
    return (int)(dimCk - rank_dk - rank_prev);
}

}  // namespace folrig
