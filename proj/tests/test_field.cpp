#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "folrig/field.hpp"

using namespace folrig;

namespace {

// deterministic small-value generator for the property checks
struct Gen {
    std::uint64_t s;
    explicit Gen(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
    long small(long lo, long hi) { return lo + (long)(next() % (std::uint64_t)(hi - lo + 1)); }
    FieldElem rational() { return FieldElem(mpq_class(small(-9, 9), small(1, 7))); }
    FieldElem quadratic(long d) {
        return FieldElem(mpq_class(small(-9, 9), small(1, 7)), mpq_class(small(-9, 9), small(1, 7)), d);
    }
};

}  // namespace

TEST_CASE("conjugate products and inverses") {
    FieldElem s3 = FieldElem::sqrt_of(3);
    FieldElem x = FieldElem(1) + s3;
    FieldElem y = FieldElem(1) - s3;
    CHECK(x * y == FieldElem(-2));

    CHECK(FieldElem(mpq_class(1, 2)).inverse() == FieldElem(2));

    FieldElem half_s3 = s3 * FieldElem(mpq_class(1, 2));
    CHECK(half_s3 * half_s3 == FieldElem(mpq_class(3, 4)));
}

TEST_CASE("field axioms on random triples") {
    Gen gen(0x5eedf1e1du);
    for (int it = 0; it < 200; ++it) {
        long d = (it % 2) ? 3 : 265;
        FieldElem a = gen.quadratic(d), b = gen.quadratic(d), c = gen.quadratic(d);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == FieldElem(1));
    }
}

TEST_CASE("mixed radicands") {
    FieldElem s3 = FieldElem::sqrt_of(3);
    FieldElem s5 = FieldElem::sqrt_of(5);
    CHECK_THROWS_AS((void)(s3 + s5), std::invalid_argument);
    CHECK_THROWS_AS((void)(s3 * s5), std::invalid_argument);
    CHECK(s3 + FieldElem(2) == FieldElem(2, 1, 3));
    CHECK_THROWS_AS((void)FieldElem(0).inverse(), std::domain_error);
}

TEST_CASE("square roots inside the field") {
    FieldElem x(mpq_class(9, 4));
    REQUIRE(x.sqrt_in_field());
    CHECK(*x.sqrt_in_field() == FieldElem(mpq_class(3, 2)));

    // 7 + 4 sqrt(3) = (2 + sqrt(3))^2
    FieldElem y(7, 4, 3);
    auto r = y.sqrt_in_field();
    REQUIRE(r);
    CHECK(*r * *r == y);

    CHECK_FALSE(FieldElem(2).sqrt_in_field().has_value());
    FieldElem z = FieldElem(0, 2, 3);
    CHECK(z * z == FieldElem(12));
}

TEST_CASE("parse and print round out") {
    for (const char* text : {"3/2", "-7", "1/2 + 1/2*sqrt(3)", "-sqrt(265)", "45/256 + 15/256*sqrt(265)",
                             "0", "2 - sqrt(3)"}) {
        FieldElem v = FieldElem::parse(text);
        CHECK(FieldElem::parse(v.str()) == v);
    }
    CHECK(FieldElem::parse("(1/2 + 1/2*sqrt(3))") == FieldElem(mpq_class(1, 2), mpq_class(1, 2), 3));
    CHECK(FieldElem::parse("2-sqrt(3)") == FieldElem(2, -1, 3));
    CHECK_THROWS(FieldElem::parse("sqrt(4)x"));
}

TEST_CASE("split_square") {
    auto [s, d] = split_square(mpq_class(12));
    CHECK(s == 2);
    CHECK(d == 3);
    auto [s2, d2] = split_square(mpq_class(49, 9));
    CHECK(s2 == mpq_class(7, 3));
    CHECK(d2 == 1);
    auto [s3v, d3] = split_square(mpq_class(265, 4));
    CHECK(s3v == mpq_class(1, 2));
    CHECK(d3 == 265);
}
