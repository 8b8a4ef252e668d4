#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "folrig/cohomology.hpp"
#include "folrig/modp.hpp"

using namespace folrig;

namespace {

struct Gen {
    std::uint64_t s;
    explicit Gen(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
    long small(long lo, long hi) { return lo + (long)(next() % (std::uint64_t)(hi - lo + 1)); }
};

void check_representation(const QuotientModule& m) {
    // action([x,y]) = action(x) action(y) - action(y) action(x)
    int dimg = m.g.dim();
    for (int i = 0; i < dimg; ++i)
        for (int j = 0; j < dimg; ++j) {
            FMatrix lhs(m.dim(), m.dim());
            for (int l = 0; l < dimg; ++l)
                if (!m.g.constants[i][j][l].is_zero())
                    lhs = lhs + m.action[l].scale(m.g.constants[i][j][l]);
            FMatrix rhs = m.action[i] * m.action[j] - m.action[j] * m.action[i];
            CHECK(lhs == rhs);
        }
}

}  // namespace

TEST_CASE("quotient module dimensions and the representation property") {
    for (auto g : {chain_algebra(4, 2), sl2_sym_algebra(4)}) {
        QuotientModule m = quotient_module(g);
        int nv = g.n + 1;
        CHECK(m.dim() == nv * nv - 1 - g.dim());
        check_representation(m);
    }
}

TEST_CASE("diagonal algebra acts diagonally with difference eigenvalues") {
    auto weights = default_diagonal_weights(3, 1);
    auto g = diagonal_algebra(weights);
    QuotientModule m = quotient_module(g);
    check_representation(m);
    // per action operator the eigenvalue multiset must be the weight
    // differences off the diagonal part (convention-free as a multiset)
    for (int a = 0; a < g.dim(); ++a) {
        std::multiset<mpq_class> expected;
        int nv = g.n + 1;
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j)
                if (i != j) expected.insert(mpq_class(weights[a][i] - weights[a][j]));
        // diagonal directions act by zero; the complement holds q of them
        for (int k = 0; k < m.dim() - (int)expected.size(); ++k) expected.insert(0);
        auto spec = semisimple_rational_spectrum(m.action[a]);
        REQUIRE(spec);
        // eigenvalue multiset via rank drops
        std::multiset<mpq_class> got;
        for (const auto& lam : *spec) {
            FMatrix shifted = m.action[a];
            for (int i = 0; i < m.dim(); ++i) shifted.at(i, i) -= FieldElem(lam);
            int mult = m.dim() - shifted.rank();
            for (int t = 0; t < mult; ++t) got.insert(lam);
        }
        CHECK(got == expected);
    }
}

TEST_CASE("graded complement for the chain algebra") {
    for (int n : {3, 4, 5, 6}) {
        auto g = chain_algebra(n, 2);
        QuotientModule m = quotient_module(g, 0);
        REQUIRE(m.grading);
        CHECK((int)m.grading->size() == m.dim());
        for (long lam : *m.grading) {
            CHECK(lam % 2 == 0);
            CHECK(lam >= -2 * n);
            CHECK(lam <= 2 * n);
        }
        check_representation(m);
    }
}

TEST_CASE("grading element must act semisimply") {
    // a strictly upper-triangular element is nilpotent, so ad is not
    // semisimple; index 1 of the chain picks Y_1
    auto g = chain_algebra(4, 2);
    CHECK_THROWS_AS((void)quotient_module(g, 1), std::domain_error);
}

TEST_CASE("coboundary in degree zero is the module action") {
    auto g = chain_algebra(3, 2);
    QuotientModule m = quotient_module(g);
    Gen gen(0xceu);
    for (int it = 0; it < 5; ++it) {
        Cochain v;
        v.degree = 0;
        v.module_dim = m.dim();
        std::vector<FieldElem> val;
        for (int i = 0; i < m.dim(); ++i) val.emplace_back(gen.small(-3, 3));
        v.values.emplace(IdxTuple{}, val);
        Cochain dv = ce_coboundary(v, m);
        for (int a = 0; a < g.dim(); ++a) {
            std::vector<FieldElem> expect(m.dim(), FieldElem(0));
            for (int r = 0; r < m.dim(); ++r)
                for (int c = 0; c < m.dim(); ++c) expect[r] += m.action[a].at(r, c) * val[c];
            CHECK(dv.value({a}) == expect);
        }
        // d(d v) = 0
        CHECK(ce_coboundary(dv, m).values.empty());
    }
}

TEST_CASE("d composed with d vanishes on random 1-cochains") {
    for (auto g : {chain_algebra(4, 2), sl2_sym_algebra(4)}) {
        QuotientModule m = quotient_module(g);
        Gen gen(0xddu);
        for (int it = 0; it < 4; ++it) {
            Cochain f;
            f.degree = 1;
            f.module_dim = m.dim();
            for (int a = 0; a < g.dim(); ++a) {
                std::vector<FieldElem> val;
                for (int i = 0; i < m.dim(); ++i) val.emplace_back(gen.small(-3, 3));
                f.values.emplace(IdxTuple{a}, val);
            }
            Cochain d2 = ce_coboundary(ce_coboundary(f, m), m);
            CHECK(d2.values.empty());
        }
    }
}

TEST_CASE("coboundary matrices compose to zero") {
    auto g = chain_algebra(4, 2);
    QuotientModule m = quotient_module(g, 0);
    FMatrix d0 = coboundary_matrix(m, 0);
    FMatrix d1 = coboundary_matrix(m, 1);
    CHECK((d1 * d0).is_zero());
}

TEST_CASE("abelian algebra acting trivially has zero coboundaries") {
    // the diagonal pair acting on itself would not be a quotient; emulate the
    // trivial action by checking d on invariant vectors instead: for the
    // diagonal algebra every diagonal complement direction is invariant
    auto g = diagonal_algebra(default_diagonal_weights(3, 1));
    QuotientModule m = quotient_module(g);
    // H^0 counts invariants: q diagonal directions plus coincident-weight
    // root pairs (none for generic weights)
    CHECK(cohomology_dim(m, 0) == 1);
}

TEST_CASE("H^1 vanishes for the chain family") {
    for (int n : {3, 4, 5}) {
        auto g = chain_algebra(n, 2);
        QuotientModule m = quotient_module(g, 0);
        CHECK(cohomology_dim(m, 0) == 0);
        CHECK(cohomology_dim(m, 1) == 0);
    }
}

TEST_CASE("H^1 vanishes for sl2 on binary quintics (Whitehead)") {
    auto g = sl2_sym_algebra(5);
    QuotientModule m = quotient_module(g, 0);
    CHECK(cohomology_dim(m, 1) == 0);
}

TEST_CASE("H^1 of the diagonal family matches its modulus count") {
    auto g = diagonal_algebra(default_diagonal_weights(3, 1));
    QuotientModule m = quotient_module(g);
    CHECK(cohomology_dim(m, 1) == 2);
}

TEST_CASE("H^1 is independent of the complement choice") {
    auto g = chain_algebra(4, 2);
    QuotientModule graded = quotient_module(g, 0);
    QuotientModule plain = quotient_module(g);
    REQUIRE(graded.grading);
    CHECK_FALSE(plain.grading);
    CHECK(cohomology_dim(graded, 1) == cohomology_dim(plain, 1));
    CHECK(cohomology_dim(graded, 0) == cohomology_dim(plain, 0));

    // and against a third, hand-shuffled complement
    std::vector<FMatrix> shuffled(plain.complement.rbegin(), plain.complement.rend());
    QuotientModule alt = quotient_module_with_complement(g, shuffled);
    CHECK(cohomology_dim(alt, 1) == cohomology_dim(graded, 1));
}

TEST_CASE("ranks cross-checked modulo two large primes") {
    auto g = chain_algebra(4, 2);
    QuotientModule m = quotient_module(g, 0);
    FMatrix d1 = coboundary_matrix(m, 1);
    int exact = d1.rank();
    for (std::uint64_t p : {1000003ull, 999983ull}) {
        PrimeContext ctx{p, 0, std::nullopt};
        CHECK(rank_mod_p(d1, ctx) == exact);
    }
}

TEST_CASE("minimal polynomial utilities") {
    FMatrix d(3, 3);
    d.at(0, 0) = FieldElem(1);
    d.at(1, 1) = FieldElem(2);
    d.at(2, 2) = FieldElem(2);
    auto mp = minimal_polynomial(d);
    CHECK(mp.size() == 3);  // (t-1)(t-2)
    auto spec = semisimple_rational_spectrum(d);
    REQUIRE(spec);
    CHECK(*spec == std::vector<mpq_class>{1, 2});

    FMatrix nilp(2, 2);
    nilp.at(0, 1) = FieldElem(1);
    CHECK_FALSE(semisimple_rational_spectrum(nilp).has_value());  // t^2 is not squarefree
}
