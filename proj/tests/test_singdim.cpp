#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "folrig/liealg.hpp"
#include "folrig/singdim.hpp"

using namespace folrig;

namespace {

// chain fields X = sum (n-2i) z_i d_i, Y_k = sum z_{i+k} d_i
std::vector<VField> chain_fields(int n) {
    int nv = n + 1;
    std::vector<VField> out;
    VField x(nv);
    for (int i = 0; i <= n; ++i) x.comp[i] = Poly::variable(nv, i).scale(FieldElem(n - 2 * i));
    out.push_back(std::move(x));
    for (int k = 1; k <= n - 2; ++k) {
        VField y(nv);
        for (int i = 0; i + k <= n; ++i) y.comp[i] = Poly::variable(nv, i + k);
        out.push_back(std::move(y));
    }
    return out;
}

IdealSpec coordinate_ideal(int nv, int k) {
    IdealSpec ideal;
    ideal.num_vars = nv;
    for (int i = 0; i < k; ++i) ideal.generators.push_back(Poly::variable(nv, i));
    return ideal;
}

bool proportional(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    const auto& [e, c] = *a.terms().begin();
    FieldElem cb = b.coeff(e);
    if (cb.is_zero()) return false;
    return a.scale(cb) == b.scale(c);
}

}  // namespace

TEST_CASE("coefficient ideal") {
    PForm w(2, 1);
    w.add_term({1}, Poly::variable(2, 0));
    w.add_term({0}, -Poly::variable(2, 1));
    IdealSpec ideal = coefficient_ideal(w);
    CHECK(ideal.generators.size() == 2);
    CHECK_THROWS_AS((void)coefficient_ideal(PForm(2, 1)), std::invalid_argument);
}

TEST_CASE("minor matrix shape and entries") {
    CHECK_THROWS_AS((void)build_infinito_matrix(2), std::invalid_argument);
    for (int n : {3, 5, 7}) {
        MinorMatrix m = build_infinito_matrix(n);
        CHECK(m.rows == n - 1);
        CHECK(m.cols == n + 1);
        // first row: lambda_j z_j with lambda_j = (n+1)(n-2j) - (n-1)(n-2)
        for (int j = 0; j <= n; ++j) {
            long lam = (long)(n + 1) * (n - 2 * j) - (long)(n - 1) * (n - 2);
            CHECK(m.entry[0][j] == Poly::variable(n + 1, j).scale(FieldElem(lam)));
        }
        // the last three lambdas never vanish
        for (int j : {n, n - 1, n - 2}) {
            long lam = (long)(n + 1) * (n - 2 * j) - (long)(n - 1) * (n - 2);
            CHECK(lam != 0);
        }
        // row 2 carries the first shift field
        auto y1 = chain_fields(n)[1];
        for (int j = 0; j <= n; ++j) CHECK(m.entry[1][j] == y1.comp[j]);
    }
    // n = 3 lambdas as printed
    MinorMatrix m3 = build_infinito_matrix(3);
    std::vector<long> lam{10, 2, -6, -14};
    for (int j = 0; j < 4; ++j)
        CHECK(m3.entry[0][j] == Poly::variable(4, j).scale(FieldElem(lam[j])));
}

TEST_CASE("selected minors specialize to pure coordinate powers") {
    // frozen scalars from the symbolic determinant route
    std::map<int, std::array<long, 3>> scalars{
        {3, {14, 6, -2}}, {4, {26, 16, 6}}, {5, {-42, -30, -18}},
        {6, {-62, -48, -34}}, {7, {86, 70, 54}}};
    for (auto& [n, expect] : scalars) {
        MinorMatrix m = build_infinito_matrix(n);
        int nv = n + 1;
        auto power = [&](int var) {
            Exponents e(nv, 0);
            e[var] = n - 1;
            return e;
        };
        std::vector<int> cols;
        // omit the first two columns
        for (int c = 2; c <= n; ++c) cols.push_back(c);
        Poly m1 = selected_minor(m, cols);
        CHECK(m1 == Poly::monomial(nv, power(n), FieldElem(expect[0])));

        // z_n = 0, omit first and last columns
        MinorMatrix mz = m;
        for (auto& row : mz.entry)
            for (auto& e : row) e = e.substitute(n, Poly(nv));
        cols.clear();
        for (int c = 1; c <= n - 1; ++c) cols.push_back(c);
        Poly m2 = selected_minor(mz, cols);
        CHECK(m2 == Poly::monomial(nv, power(n - 1), FieldElem(expect[1])));

        // z_n = z_{n-1} = 0, omit the last two columns
        MinorMatrix mzz = mz;
        for (auto& row : mzz.entry)
            for (auto& e : row) e = e.substitute(n - 1, Poly(nv));
        cols.clear();
        for (int c = 0; c <= n - 2; ++c) cols.push_back(c);
        Poly m3 = selected_minor(mzz, cols);
        CHECK(m3 == Poly::monomial(nv, power(n - 2), FieldElem(expect[2])));
    }
}

TEST_CASE("selected minor against the permutation-sum oracle; duplicates vanish") {
    MinorMatrix m = build_infinito_matrix(4);
    std::vector<int> cols{1, 2, 4};
    Poly got = selected_minor(m, cols);
    // Leibniz oracle over the 3x3 selection
    int k = 3, nv = 5;
    std::vector<int> perm{0, 1, 2};
    Poly leibniz(nv);
    do {
        int inv = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (perm[a] > perm[b]) ++inv;
        Poly prod = Poly::constant(nv, FieldElem(1));
        for (int i = 0; i < k; ++i) prod = prod * m.entry[i][cols[perm[i]]];
        leibniz += (inv % 2) ? -prod : prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(got == leibniz);

    CHECK(selected_minor(m, {1, 1, 2}).is_zero());
    CHECK_THROWS_AS((void)selected_minor(m, {0, 1}), std::invalid_argument);
}

TEST_CASE("d omega of the weighted chain equals the minors of the adjusted matrix") {
    // The coefficients of d omega are (up to sign) the complementary minors of
    // the matrix whose first row carries Z = (n+1)X + (n-1)(n-2)R and whose
    // other rows are the shift fields.
    for (int n : {3, 4}) {
        int nv = n + 1;
        auto fields = chain_fields(n);
        PForm dw = exterior_derivative(omega_from_fields(fields)->omega);
        MinorMatrix adj = build_infinito_matrix(n);
        for (int j = 0; j <= n; ++j) {
            long lam = (long)(n + 1) * (n - 2 * j) + (long)(n - 1) * (n - 2);
            adj.entry[0][j] = Poly::variable(nv, j).scale(FieldElem(lam));
        }
        for (const auto& [t, coef] : dw.terms()) {
            std::vector<int> cols;
            for (int c = 0; c <= n; ++c)
                if (!std::binary_search(t.begin(), t.end(), c)) cols.push_back(c);
            Poly minor = selected_minor(adj, cols);
            CHECK(proportional(coef, minor));
        }
        // and the zero sets agree with the printed matrix's minors at n = 3:
        // both cut out the z0-axis, checked by slice certificates below
    }
}

TEST_CASE("slice certificates on coordinate ideals") {
    SliceOptions opts;
    opts.trials = 4;
    for (int k = 1; k <= 4; ++k) {
        int nv = 5;
        IdealSpec ideal = coordinate_ideal(nv, k);
        auto cert = slice_codim_certificate(ideal, k, opts, "coords");
        CHECK(cert.certified);
        SliceOptions ref = opts;
        ref.trials = 2;
        auto refuted = slice_codim_certificate(ideal, k + 1, ref, "coords");
        CHECK_FALSE(refuted.certified);
        CHECK(!refuted.witnesses.empty());
        // witnesses satisfy the ideal equations exactly mod p
        for (const auto& w : refuted.witnesses) {
            bool nonzero = false;
            for (int i = 0; i < k; ++i) CHECK(w.point[i] % w.prime == 0);
            for (auto v : w.point) nonzero |= (v % w.prime) != 0;
            CHECK(nonzero);
        }
    }
}

TEST_CASE("slice certificate on the hyperplane ideal") {
    IdealSpec ideal = coordinate_ideal(4, 1);
    SliceOptions opts;
    opts.trials = 4;
    CHECK(slice_codim_certificate(ideal, 1, opts).certified);
    auto r = slice_codim_certificate(ideal, 2, opts);
    CHECK_FALSE(r.certified);
}

TEST_CASE("certificates are reproducible for a fixed seed") {
    auto g = diagonal_algebra(default_diagonal_weights(3, 1));
    auto dist = *omega_from_fields(g.fields());
    SliceOptions opts;
    opts.trials = 3;
    opts.seed = 777;
    auto a = codim_report(dist, opts);
    auto b = codim_report(dist, opts);
    CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("diagonal family: codim sing(d omega) >= 3 certified") {
    for (int n : {3, 4}) {
        auto g = diagonal_algebra(default_diagonal_weights(n, 1));
        auto dist = *omega_from_fields(g.fields());
        SliceOptions opts;
        auto rep = codim_report(dist, opts);
        CHECK(rep.main.certified);
        CHECK(rep.welldef.certified);
        CHECK(rep.main.primes == std::vector<std::uint64_t>{101, 103});
    }
}

TEST_CASE("chain family: codim sing(d omega) >= 3 certified at n = 3, 4") {
    for (int n : {3, 4}) {
        auto dist = *omega_from_fields(chain_fields(n));
        SliceOptions opts;
        auto rep = codim_report(dist, opts);
        CHECK(rep.main.certified);
        CHECK(rep.welldef.certified);
    }
}

TEST_CASE("semisimple codim-one family is refuted (witnesses found)") {
    auto g = sl2_sym_algebra(4);  // codimension one on P^4
    auto dist = *omega_from_fields(g.fields());
    REQUIRE(dist.q == 1);
    SliceOptions opts;
    auto rep = codim_report(dist, opts);
    CHECK_FALSE(rep.main.certified);
    CHECK(rep.main.witnesses.size() >= 2);
    std::set<std::uint64_t> primes;
    for (const auto& w : rep.main.witnesses) primes.insert(w.prime);
    CHECK(primes.size() == 2);  // exact witnesses at both primes
}
