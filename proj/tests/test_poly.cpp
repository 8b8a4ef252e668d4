#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "folrig/poly.hpp"

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

    Poly homogeneous(int nv, int deg) {
        Poly p(nv);
        for (const auto& m : homogeneous_monomials(nv, deg))
            if (small(0, 2)) p.add_term(m, FieldElem(mpq_class(small(-5, 5), small(1, 3))));
        return p;
    }
};

// dense oracle: expand over all coefficient pairs
Poly dense_mul(const Poly& a, const Poly& b) {
    int nv = a.num_vars();
    Poly r(nv);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(nv);
            for (int i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

}  // namespace

TEST_CASE("basic products") {
    int nv = 2;
    Poly x0 = Poly::variable(nv, 0), x1 = Poly::variable(nv, 1);
    CHECK((x0 + x1) * (x0 - x1) == x0 * x0 - x1 * x1);
    CHECK((x0 * Poly(nv)).is_zero());
    CHECK(Poly(nv).term_count() == 0);
}

TEST_CASE("product of random homogeneous quadratics matches the dense oracle") {
    Gen gen(0xab5e1u);
    for (int it = 0; it < 50; ++it) {
        Poly a = gen.homogeneous(4, 2), b = gen.homogeneous(4, 2);
        Poly p = a * b;
        CHECK(p == dense_mul(a, b));
        if (!p.is_zero()) CHECK(*p.homogeneous_degree() == 4);
    }
}

TEST_CASE("partial derivatives") {
    int nv = 2;
    Poly x0 = Poly::variable(nv, 0), x1 = Poly::variable(nv, 1);
    Poly f = x0 * x0 * x1;
    CHECK(f.partial(0) == FieldElem(2) * (x0 * x1));
    CHECK((x0 * x0).partial(1).is_zero());
    CHECK_THROWS_AS((void)f.partial(5), std::out_of_range);
}

TEST_CASE("Euler identity on random homogeneous polynomials") {
    Gen gen(0xe01e4u);
    for (int it = 0; it < 40; ++it) {
        int nv = 3 + (int)gen.small(0, 2);
        int deg = 1 + (int)gen.small(0, 3);
        Poly f = gen.homogeneous(nv, deg);
        Poly acc(nv);
        for (int i = 0; i < nv; ++i) acc += Poly::variable(nv, i) * f.partial(i);
        CHECK(acc == f.scale(FieldElem(deg)));
    }
}

TEST_CASE("numVars mismatch is rejected") {
    CHECK_THROWS_AS((void)(Poly::variable(2, 0) * Poly::variable(3, 0)), std::invalid_argument);
}

TEST_CASE("text format round trip, lexicographic order") {
    Gen gen(0x7e57u);
    for (int it = 0; it < 20; ++it) {
        Poly f = gen.homogeneous(3, 2);
        CHECK(Poly::parse(f.str(), 3) == f);
    }
    Poly g(2);
    g.add_term({1, 0}, FieldElem(mpq_class(3, 2)));
    g.add_term({0, 2}, FieldElem(1, -1, 3));
    CHECK(g.str() == "(1 - sqrt(3)) * x0^0 x1^2 + 3/2 * x0^1 x1^0");
    CHECK(Poly::parse(g.str(), 2) == g);
}

TEST_CASE("substitution and extension") {
    int nv = 2;
    Poly x0 = Poly::variable(nv, 0), x1 = Poly::variable(nv, 1);
    Poly f = x0 * x0 + x1;
    CHECK(f.substitute(0, x1) == x1 * x1 + x1);
    Poly fx = f.extended(4);
    CHECK(fx.num_vars() == 4);
    CHECK(fx.total_degree() == 2);
}

TEST_CASE("determinant expansion agrees with the permutation-sum oracle") {
    Gen gen(0xde7u);
    for (int it = 0; it < 10; ++it) {
        int k = 3, nv = 2;
        std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k, Poly(nv)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = gen.homogeneous(nv, 1);
        std::vector<int> perm{0, 1, 2};
        Poly leibniz(nv);
        do {
            int inv = 0;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    if (perm[a] > perm[b]) ++inv;
            Poly prod = Poly::constant(nv, FieldElem(1));
            for (int i = 0; i < k; ++i) prod = prod * m[i][perm[i]];
            leibniz += (inv % 2) ? -prod : prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(poly_det(m) == leibniz);
    }
}
