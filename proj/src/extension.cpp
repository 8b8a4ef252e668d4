#include "folrig/extension.hpp"

#include <algorithm>
#include <set>

namespace folrig {

// ---------------------------------------------------------------------------
// system construction

ExtensionSystem build_extension_system(int n) {
    if (n < 5) throw std::invalid_argument("extension system needs n >= 5");
    ExtensionSystem sys;
    sys.n = n;
    sys.num_unknowns = n - 4;  // b0^(2) .. b0^(n-3)
    int m = sys.num_unknowns;

    auto unknown = [&](int k) { return Poly::variable(m, k - 2); };  // b0^(k)
    auto constant = [&](long v) { return Poly::constant(m, FieldElem(v)); };

    // rows[k-1][i] = b_i^{(k)}; Y_1 and Y_{n-2} are the all-ones fields,
    // the rest follow the recurrence b_{i+1}^{(k)} = b_i^{(k)} + b_i^{(k+1)}
    auto& rows = sys.coeff_table;
    rows.assign(n - 2, {});
    rows[0].assign(n, constant(1));
    rows[n - 3].assign(3, constant(1));
    for (int k = n - 3; k >= 2; --k) {
        std::vector<Poly> r{unknown(k)};
        for (int i = 0; i < n - k; ++i) r.push_back(r[i] + rows[k][i]);  // rows[k] = b^{(k+1)}
        rows[k - 1] = std::move(r);
    }

    // closed-form consistency: b_i^{(n-k)} = sum_l binom(i,l) b0^{(n-k+l)},
    // asserted as an exact identity in the unknowns
    for (int k = 3; k <= n - 2; ++k) {
        for (int i = 0; i <= k; ++i) {
            Poly rhs(m);
            mpz_class binom = 1;
            for (int l = 0; l <= k - 2; ++l) {
                if (l > 0) binom = binom * (i - l + 1) / l;
                if (binom == 0) continue;
                int kk = n - k + l;
                Poly b0kk = (kk == n - 2) ? constant(1) : unknown(kk);
                rhs += b0kk.scale(FieldElem(mpq_class(binom)));
            }
            if (!(rows[n - k - 1][i] == rhs))
                throw std::logic_error("recurrence disagrees with the closed form");
        }
    }

    // equations: all components of [Y_a, Y_c] for a + c in {n-1, n}
    auto b = [&](int k, int i) -> Poly {
        if (i < 0 || i >= (int)rows[k - 1].size()) return Poly(m);
        return rows[k - 1][i];
    };
    for (int a = 1; a <= n - 2; ++a) {
        for (int c = a + 1; c <= n - 2; ++c) {
            if (a + c != n - 1 && a + c != n) continue;
            for (int i = 0; i + a + c <= n; ++i) {
                Poly e = b(a, i + c) * b(c, i) - b(a, i) * b(c, i + a);
                if (!e.is_zero()) {
                    sys.equations.push_back(std::move(e));
                    sys.equation_sources.emplace_back(a, c);
                }
            }
        }
    }
    return sys;
}

// ---------------------------------------------------------------------------
// univariate machinery

namespace {

void trim(std::vector<FieldElem>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

std::vector<FieldElem> uni_rem(std::vector<FieldElem> a, const std::vector<FieldElem>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        FieldElem f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

std::vector<FieldElem> uni_gcd(std::vector<FieldElem> a, std::vector<FieldElem> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        FieldElem lead = a.back();
        for (auto& c : a) c = c / lead;
    }
    return a;
}

// extract univariate coefficients of `f` in variable `var` (f must not
// involve other variables)
std::vector<FieldElem> as_univariate(const Poly& f, int var) {
    std::vector<FieldElem> coeffs(f.degree_in(var) + 1, FieldElem(0));
    for (const auto& [e, c] : f.terms()) {
        for (int i = 0; i < f.num_vars(); ++i)
            if (i != var && e[i] != 0) throw std::logic_error("polynomial is not univariate");
        coeffs[e[var]] += c;
    }
    trim(coeffs);
    return coeffs;
}

FieldElem sqrt_or_adjoin(const FieldElem& x) {
    if (auto r = x.sqrt_in_field()) return *r;
    if (!x.is_rational())
        throw std::domain_error("root requires a second radical over Q(sqrt(d)) (unsupported)");
    // adjoin a fresh square root of the rational x
    mpq_class q = x.rat();
    bool neg = q < 0;
    auto [s, d] = split_square(neg ? mpq_class(-q) : q);
    long rad = neg ? -d : d;
    if (rad == 1) return FieldElem(s);  // perfect square (handled above, kept for safety)
    return FieldElem(0, s, rad);
}

}  // namespace

std::vector<FieldElem> univariate_roots(const std::vector<FieldElem>& coeffs_in) {
    std::vector<FieldElem> f = coeffs_in;
    trim(f);
    if (f.empty()) throw std::invalid_argument("zero polynomial has every root");
    std::vector<FieldElem> roots;
    if (f.size() == 1) return roots;
    if (f.size() == 2) {
        roots.push_back(-(f[0] / f[1]));
        return roots;
    }
    if (f.size() == 3) {
        FieldElem a = f[2], b = f[1], c = f[0];
        FieldElem disc = b * b - FieldElem(4) * a * c;
        if (disc.is_zero()) {
            roots.push_back(-(b / (FieldElem(2) * a)));
            return roots;
        }
        FieldElem s = sqrt_or_adjoin(disc);
        FieldElem two_a = FieldElem(2) * a;
        roots.push_back((-b + s) / two_a);
        roots.push_back((-b - s) / two_a);
        return roots;
    }
    // degree >= 3: peel off roots found in the current field; report failure
    // on what remains irreducible
    std::vector<FieldElem> g = f;
    bool progress = true;
    while (g.size() > 3 && progress) {
        progress = false;
        // rational-root candidates over Q (only for rational coefficient data)
        bool rational = std::all_of(g.begin(), g.end(), [](const FieldElem& x) { return x.is_rational(); });
        if (!rational) break;
        mpz_class lcm_den = 1;
        for (const auto& cf : g) {
            mpz_class d = cf.rat().get_den(), gg;
            mpz_gcd(gg.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
            lcm_den = lcm_den / gg * d;
        }
        std::vector<mpz_class> ic;
        for (const auto& cf : g) ic.push_back(mpq_class(cf.rat() * lcm_den).get_num());
        if (ic.front() == 0) {
            roots.emplace_back(0);
            g.erase(g.begin());
            progress = true;
            continue;
        }
        mpz_class a0 = abs(ic.front()), an = abs(ic.back());
        std::vector<mpz_class> ps{1}, qs{1};
        for (mpz_class d = 2; d * d <= a0; ++d)
            if (mpz_divisible_p(a0.get_mpz_t(), d.get_mpz_t())) { ps.push_back(d); ps.push_back(a0 / d); }
        ps.push_back(a0);
        for (mpz_class d = 2; d * d <= an; ++d)
            if (mpz_divisible_p(an.get_mpz_t(), d.get_mpz_t())) { qs.push_back(d); qs.push_back(an / d); }
        qs.push_back(an);
        for (const auto& pn : ps) {
            for (const auto& qn : qs) {
                for (int sign : {1, -1}) {
                    mpq_class cand(sign * pn, qn);
                    cand.canonicalize();
                    FieldElem x(cand), val(0);
                    for (size_t i = g.size(); i-- > 0;) val = val * x + g[i];
                    if (val.is_zero()) {
                        roots.push_back(x);
                        std::vector<FieldElem> h(g.size() - 1);
                        FieldElem carry(0);
                        for (size_t i = g.size(); i-- > 1;) {
                            carry = g[i] + carry * x;
                            h[i - 1] = carry;
                        }
                        g = std::move(h);
                        progress = true;
                    }
                    if (progress) break;
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    if (g.size() > 3) throw std::domain_error("irreducible factor of degree >= 3 (unsupported)");
    auto rest = univariate_roots(g);
    roots.insert(roots.end(), rest.begin(), rest.end());
    return roots;
}

// ---------------------------------------------------------------------------
// resultants and the small-system solver

Poly resultant(const Poly& f, const Poly& g, int var) {
    int df = f.degree_in(var), dg = g.degree_in(var);
    if (df < 1 || dg < 1) throw std::invalid_argument("resultant needs positive degrees in the variable");
    int nv = f.num_vars();
    auto coeff_of = [&](const Poly& p, int k) {
        Poly out(nv);
        for (const auto& [e, c] : p.terms()) {
            if (e[var] != k) continue;
            Exponents e2 = e;
            e2[var] = 0;
            out.add_term(e2, c);
        }
        return out;
    };
    int size = df + dg;
    std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size, Poly(nv)));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) s[r][r + df - k] = coeff_of(f, k);
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k) s[dg + r][r + dg - k] = coeff_of(g, k);
    return poly_det(s);
}

namespace {

bool is_constant(const Poly& p) { return p.total_degree() <= 0; }

Poly substitute_value(const Poly& p, int var, const FieldElem& v) {
    Poly r(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        FieldElem f = c;
        for (int k = 0; k < e[var]; ++k) f *= v;
        Exponents e2 = e;
        e2[var] = 0;
        r.add_term(e2, f);
    }
    return r;
}

struct CmpSolutions {
    bool operator()(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) const {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].rat() != b[i].rat()) return a[i].rat() < b[i].rat();
            if (a[i].rad() != b[i].rad()) return a[i].rad() < b[i].rad();
        }
        return false;
    }
};

// recursive elimination; `active` lists variable indices still to solve
std::vector<std::vector<FieldElem>> solve_rec(std::vector<Poly> eqs, std::vector<int> active, int nv) {
    // normalize
    std::vector<Poly> cleaned;
    for (auto& e : eqs) {
        if (e.is_zero()) continue;
        if (is_constant(e)) return {};  // nonzero constant: inconsistent
        cleaned.push_back(std::move(e));
    }
    if (active.empty()) {
        if (cleaned.empty()) return {std::vector<FieldElem>{}};
        return {};
    }
    if (cleaned.empty()) throw std::domain_error("underdetermined system (free variable)");

    int x = -1;
    for (int cand : active) {
        for (const Poly& e : cleaned)
            if (e.degree_in(cand) > 0) { x = cand; break; }
        if (x >= 0) break;
    }
    if (x < 0) throw std::domain_error("underdetermined system (free variable)");

    std::vector<int> rest;
    for (int v : active)
        if (v != x) rest.push_back(v);

    // reduced system in the remaining variables: resultants against the
    // minimal-degree equation plus the equations not involving x
    std::vector<Poly> reduced;
    const Poly* fmin = nullptr;
    for (const Poly& e : cleaned) {
        int d = e.degree_in(x);
        if (d == 0) {
            reduced.push_back(e);
        } else if (!fmin || d < fmin->degree_in(x)) {
            fmin = &e;
        }
    }
    std::vector<std::vector<FieldElem>> partials;
    if (rest.empty()) {
        partials = {std::vector<FieldElem>{}};
    } else {
        for (const Poly& e : cleaned) {
            if (&e == fmin || e.degree_in(x) == 0) continue;
            reduced.push_back(resultant(*fmin, e, x));
        }
        if (reduced.empty()) throw std::domain_error("underdetermined system (free variable)");
        partials = solve_rec(reduced, rest, nv);
    }

    std::vector<std::vector<FieldElem>> out;
    for (const auto& partial : partials) {
        // substitute the partial assignment, gather univariates in x
        std::vector<std::vector<FieldElem>> unis;
        bool inconsistent = false;
        for (const Poly& e : cleaned) {
            Poly s = e;
            for (size_t i = 0; i < rest.size(); ++i) s = substitute_value(s, rest[i], partial[i]);
            if (s.is_zero()) continue;
            if (is_constant(s)) { inconsistent = true; break; }
            unis.push_back(as_univariate(s, x));
        }
        if (inconsistent) continue;
        if (unis.empty()) throw std::domain_error("underdetermined system (free variable)");
        std::vector<FieldElem> g = unis[0];
        for (size_t i = 1; i < unis.size(); ++i) g = uni_gcd(g, unis[i]);
        if (g.empty()) throw std::domain_error("underdetermined system (free variable)");
        for (const FieldElem& root : univariate_roots(g)) {
            bool ok = true;
            for (const Poly& e : cleaned) {
                Poly s = e;
                for (size_t i = 0; i < rest.size(); ++i) s = substitute_value(s, rest[i], partial[i]);
                s = substitute_value(s, x, root);
                if (!s.is_zero()) { ok = false; break; }
            }
            if (!ok) continue;
            // assemble the row in `active` order
            std::vector<FieldElem> full(active.size(), FieldElem(0));
            for (size_t i = 0; i < active.size(); ++i) {
                if (active[i] == x) {
                    full[i] = root;
                } else {
                    size_t pos = std::find(rest.begin(), rest.end(), active[i]) - rest.begin();
                    full[i] = partial[pos];
                }
            }
            out.push_back(std::move(full));
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<FieldElem>> solve_small_system(const std::vector<Poly>& equations, int num_vars) {
    std::vector<int> active(num_vars);
    for (int i = 0; i < num_vars; ++i) active[i] = i;
    // rows come back in `active` order, i.e. variable order
    auto out = solve_rec(equations, active, num_vars);
    for (auto& row : out)
        if ((int)row.size() != num_vars) throw std::logic_error("solver arity mismatch");
    std::sort(out.begin(), out.end(), CmpSolutions{});
    out.erase(std::unique(out.begin(), out.end(),
                          [](const auto& a, const auto& b) { return a == b; }),
              out.end());
    return out;
}

std::vector<std::vector<FieldElem>> solve_extension_system(const ExtensionSystem& sys) {
    if (sys.num_unknowns == 0) {
        for (const Poly& e : sys.equations)
            if (!e.is_zero()) return {};
        return {std::vector<FieldElem>{}};
    }
    // verify every solution against the whole system once more at this level
    auto sols = solve_small_system(sys.equations, sys.num_unknowns);
    for (const auto& sol : sols) {
        for (const Poly& e : sys.equations) {
            Poly s = e;
            for (int i = 0; i < sys.num_unknowns; ++i) s = substitute_value(s, i, sol[i]);
            if (!s.is_zero()) throw std::logic_error("solver returned a non-solution");
        }
    }
    return sols;
}

// ---------------------------------------------------------------------------
// closure verdict and the affine T-operator

std::vector<FMatrix> extension_basis(const ExtensionSystem& sys, const std::vector<FieldElem>& solution) {
    if ((int)solution.size() != sys.num_unknowns) throw std::invalid_argument("solution arity");
    int n = sys.n, nv = n + 1;
    std::vector<FMatrix> basis;
    FMatrix x(nv, nv);
    for (int i = 0; i <= n; ++i) x.at(i, i) = FieldElem(n - 2 * i);
    basis.push_back(std::move(x));
    for (int k = 1; k <= n - 2; ++k) {
        FMatrix yk(nv, nv);
        for (int i = 0; i < (int)sys.coeff_table[k - 1].size() && i + k <= n; ++i) {
            Poly b = sys.coeff_table[k - 1][i];
            for (int u = 0; u < sys.num_unknowns; ++u) b = substitute_value(b, u, solution[u]);
            if (!is_constant(b)) throw std::logic_error("coefficient did not specialize to a constant");
            yk.at(i, i + k) = b.coeff(Exponents(sys.num_unknowns, 0));
        }
        basis.push_back(std::move(yk));
    }
    return basis;
}

ClosureVerdict lie_closure_verdict(const ExtensionSystem& sys, const std::vector<FieldElem>& solution) {
    ClosureVerdict verdict;
    auto basis = extension_basis(sys, solution);
    int dim = (int)basis.size();
    int n = sys.n;

    // span matrix for coordinate solves
    int nv = n + 1;
    FMatrix span(nv * nv, dim);
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j) span.at(i * nv + j, k) = basis[k].at(i, j);
    auto in_span = [&](const FMatrix& m) {
        std::vector<FieldElem> v;
        v.reserve(nv * nv);
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j) v.push_back(m.at(i, j));
        return span.solve(v);
    };

    verdict.closed = true;
    for (int a = 0; a < dim && verdict.closed; ++a) {
        for (int b = a + 1; b < dim; ++b) {
            FMatrix br = vf_bracket(basis[a], basis[b]);
            auto coords = in_span(br);
            if (!coords) {
                verdict.closed = false;
                verdict.failing_bracket = {a, b};  // 0 = X, k = Y_k
                break;
            }
        }
    }

    // the [Y_2, Y_3] bracket, when both exist
    if (n - 2 >= 3) {
        FMatrix br = vf_bracket(basis[2], basis[3]);
        if (br.is_zero()) {
            verdict.y23_coefficient = FieldElem(0);
        } else if (n - 2 >= 5) {
            // multiple of Y_5?
            const FMatrix& y5 = basis[5];
            std::optional<FieldElem> mu;
            bool multiple = true;
            for (int i = 0; i < nv && multiple; ++i)
                for (int j = 0; j < nv; ++j) {
                    if (y5.at(i, j).is_zero()) {
                        if (!br.at(i, j).is_zero()) { multiple = false; break; }
                    } else {
                        FieldElem q = br.at(i, j) / y5.at(i, j);
                        if (!mu) mu = q;
                        else if (!(*mu == q)) { multiple = false; break; }
                    }
                }
            if (multiple) verdict.y23_coefficient = mu;
        }
    }
    if (verdict.closed) verdict.algebra = structure_constants(basis);
    return verdict;
}

TOperator t_operator(const VField& x, int e) {
    if (e < 1) throw std::invalid_argument("degree must be >= 1");
    auto deg = x.homogeneous_degree();
    if (!deg || *deg != 1) throw std::invalid_argument("T-operator needs a linear field");
    int nv = x.num_vars;
    TOperator top;
    top.monomials = homogeneous_monomials(nv, e - 1);
    int dim = (int)top.monomials.size();
    std::map<Exponents, int> index;
    for (int i = 0; i < dim; ++i) index.emplace(top.monomials[i], i);
    top.matrix = FMatrix(dim, dim);
    for (int c = 0; c < dim; ++c) {
        Poly f = Poly::monomial(nv, top.monomials[c], FieldElem(1));
        Poly tf = x.apply(f) - f;
        for (const auto& [m, coef] : tf.terms()) top.matrix.at(index.at(m), c) = coef;
    }
    top.determinant = top.matrix.det();
    top.invertible = !top.determinant.is_zero();
    return top;
}

}  // namespace folrig
