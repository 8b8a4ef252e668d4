#include "folrig/singdim.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace folrig {

IdealSpec coefficient_ideal(const PForm& omega) {
    if (omega.is_zero()) throw std::invalid_argument("zero form has no coefficient ideal");
    IdealSpec ideal;
    ideal.num_vars = omega.num_vars();
    for (const auto& [t, c] : omega.terms()) ideal.generators.push_back(c);
    return ideal;
}

MinorMatrix build_infinito_matrix(int n) {
    if (n < 3) throw std::invalid_argument("requires n >= 3");
    int nv = n + 1;
    MinorMatrix m;
    m.rows = n - 1;
    m.cols = nv;
    m.entry.assign(m.rows, std::vector<Poly>(m.cols, Poly(nv)));
    for (int j = 0; j <= n; ++j) {
        long lam = (long)(n + 1) * (n - 2 * j) - (long)(n - 1) * (n - 2);
        m.entry[0][j] = Poly::variable(nv, j).scale(FieldElem(lam));
    }
    for (int k = 1; k <= n - 2; ++k)
        for (int j = 0; j + k <= n; ++j) m.entry[k][j] = Poly::variable(nv, j + k);
    return m;
}

Poly selected_minor(const MinorMatrix& m, const std::vector<int>& cols) {
    if ((int)cols.size() != m.rows) throw std::invalid_argument("need exactly `rows` columns");
    std::vector<std::vector<Poly>> sub(m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c : cols) {
            if (c < 0 || c >= m.cols) throw std::out_of_range("column index");
            sub[r].push_back(m.entry[r][c]);
        }
    return poly_det(sub);
}

// ---------------------------------------------------------------------------

namespace {

// splitmix64; per-(prime, trial) streams make trial results order-independent
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Rng {
    std::uint64_t state;
    std::uint64_t next() { return state = mix64(state); }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

int rank_rows_modp(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
    int rank = 0;
    int rows = (int)a.size();
    if (!rows) return 0;
    int cols = (int)a[0].size();
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] % p) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        std::uint64_t inv = mod_inv(a[rank][col], p);
        for (int j = col; j < cols; ++j) a[rank][j] = (__uint128_t)a[rank][j] * inv % p;
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][col] % p == 0) continue;
            std::uint64_t f = a[r][col];
            for (int j = col; j < cols; ++j)
                a[r][j] = (a[r][j] + (p - (__uint128_t)f * a[rank][j] % p)) % p;
        }
        ++rank;
    }
    return rank;
}

// scan all points of the slice; returns nonzero common zeros (up to cap)
std::vector<std::vector<std::uint64_t>> scan_slice(const std::vector<PolyMod>& gens,
                                                   const std::vector<std::vector<std::uint64_t>>& basis,
                                                   std::uint64_t p, int cap) {
    int c = (int)basis.size();
    int nv = gens.empty() ? 0 : gens[0].num_vars;
    std::vector<std::vector<std::uint64_t>> found;
    // restriction of the first generator drives the scan; remaining
    // generators are evaluated directly at surviving points
    PolyMod g0 = gens[0].restrict_to_span(basis, p);
    std::vector<std::uint64_t> t(c, 0);
    std::vector<std::uint64_t> point(nv);
    auto at_candidate = [&]() {
        bool zero_vec = std::all_of(t.begin(), t.end(), [](std::uint64_t v) { return v == 0; });
        if (zero_vec) return;
        for (int j = 0; j < nv; ++j) {
            __uint128_t acc = 0;
            for (int k = 0; k < c; ++k) acc += (__uint128_t)t[k] * basis[k][j] % p;
            point[j] = (std::uint64_t)(acc % p);
        }
        for (size_t gi = 1; gi < gens.size(); ++gi)
            if (gens[gi].eval(point, p) != 0) return;
        // exact re-check of every generator at the witness
        for (const PolyMod& g : gens)
            if (g.eval(point, p) != 0) return;
        found.push_back(point);
    };
    // recursive partial substitution; innermost level is univariate
    std::function<void(const PolyMod&, int)> rec = [&](const PolyMod& poly, int level) {
        if ((int)found.size() >= cap) return;
        if (level == c - 1) {
            // univariate in the last slice coordinate: evaluate for all values
            int deg = poly.degree_in(0);
            std::vector<std::uint64_t> coef(deg + 1, 0);
            for (const auto& [e, v] : poly.terms) coef[e[0]] = v;
            for (std::uint64_t val = 0; val < p; ++val) {
                std::uint64_t acc = 0;
                for (int d = deg; d >= 0; --d) acc = ((__uint128_t)acc * val + coef[d]) % p;
                if (acc == 0) {
                    t[level] = val;
                    at_candidate();
                    if ((int)found.size() >= cap) return;
                }
            }
            return;
        }
        for (std::uint64_t val = 0; val < p; ++val) {
            t[level] = val;
            rec(poly.substitute(0, val, p), level + 1);
            if ((int)found.size() >= cap) return;
        }
    };
    if (c == 0) return found;
    rec(g0, 0);
    return found;
}

}  // namespace

SliceCertificate slice_codim_certificate(const IdealSpec& ideal, int claimed_codim,
                                         const SliceOptions& opts, const std::string& ideal_id) {
    if (ideal.generators.empty()) throw std::invalid_argument("empty ideal");
    int nv = ideal.num_vars;
    if (claimed_codim < 1 || claimed_codim > nv) throw std::invalid_argument("claimed codim out of range");
    long radicand = 0;
    for (const Poly& g : ideal.generators)
        if (g.radicand() != 0) radicand = g.radicand();

    SliceCertificate cert;
    cert.ideal_id = ideal_id;
    cert.claimed_codim = claimed_codim;
    cert.trials = opts.trials;
    cert.seed = opts.seed;
    cert.certified = true;

    for (std::uint64_t pstart : opts.primes) {
        PrimeContext ctx = next_prime_context(pstart, radicand, ideal.generators);
        std::uint64_t p = ctx.p;
        cert.primes.push_back(p);
        std::vector<PolyMod> gens;
        for (const Poly& g : ideal.generators) {
            PolyMod gm = reduce_mod(g, ctx);
            if (!gm.terms.empty()) gens.push_back(std::move(gm));
        }
        if (gens.empty()) throw std::domain_error("all generators vanish mod p");
        int hits = 0;
        int recorded_here = 0;
        for (int trial = 0; trial < opts.trials; ++trial) {
            Rng rng{mix64(opts.seed ^ mix64(p) ^ mix64((std::uint64_t)trial + 1))};
            std::vector<std::vector<std::uint64_t>> basis;
            do {
                basis.assign(claimed_codim, std::vector<std::uint64_t>(nv));
                for (auto& v : basis)
                    for (auto& x : v) x = rng.below(p);
            } while (rank_rows_modp(basis, p) < claimed_codim);
            auto wit = scan_slice(gens, basis, p, opts.max_witnesses);
            if (!wit.empty()) ++hits;
            for (auto& w : wit)
                if (recorded_here < opts.max_witnesses) {
                    cert.witnesses.push_back({p, w});
                    ++recorded_here;
                }
        }
        cert.hits_per_prime.push_back(hits);
        if (hits * 2 > opts.trials) cert.certified = false;
    }
    return cert;
}

nlohmann::ordered_json SliceCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["ideal_id"] = ideal_id;
    j["claimed_codim"] = claimed_codim;
    j["primes"] = primes;
    j["trials"] = trials;
    j["verdict"] = certified ? "certified-geq" : "refuted-with-witnesses";
    j["hits_per_prime"] = hits_per_prime;
    auto w = nlohmann::ordered_json::array();
    for (const auto& wit : witnesses) {
        nlohmann::ordered_json e;
        e["prime"] = wit.prime;
        e["point"] = wit.point;
        w.push_back(e);
    }
    j["witnesses"] = w;
    j["seed"] = seed;
    return j;
}

CodimReport codim_report(const Distribution& dist, const SliceOptions& opts) {
    CodimReport rep;
    IdealSpec omega_ideal = coefficient_ideal(dist.omega);
    if (dist.q == 1) {
        PForm dw = exterior_derivative(dist.omega);
        rep.main = slice_codim_certificate(coefficient_ideal(dw), 3, opts, "sing(d_omega)");
    } else {
        rep.main = slice_codim_certificate(omega_ideal, 3, opts, "sing(omega)");
    }
    rep.welldef = slice_codim_certificate(omega_ideal, 2, opts, "sing(omega)");
    return rep;
}

nlohmann::ordered_json CodimReport::to_json() const {
    nlohmann::ordered_json j;
    j["main"] = main.to_json();
    j["well_defined"] = welldef.to_json();
    return j;
}

}  // namespace folrig
