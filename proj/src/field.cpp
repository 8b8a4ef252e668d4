#include "folrig/field.hpp"

#include <cctype>
#include <cstdlib>

namespace folrig {

bool is_square_free(long d) {
    if (d < 0) d = -d;
    if (d < 2) return d == 1;
    for (long f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0) return false;
    }
    return true;
}

FieldElem::FieldElem(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    normalize();
}

FieldElem FieldElem::from_fraction(long num, long den) {
    return FieldElem(mpq_class(num, den));
}

void FieldElem::normalize() {
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ == 0 || d_ == 1) throw std::invalid_argument("radicand must be a square-free integer != 0, 1");
    if (!is_square_free(d_)) throw std::invalid_argument("radicand must be square-free");
}

static long merge_radicand(const FieldElem& x, const FieldElem& y) {
    if (x.radicand() == 0) return y.radicand();
    if (y.radicand() == 0 || x.radicand() == y.radicand()) return x.radicand();
    throw std::invalid_argument("mixed incompatible radicands");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    long d = merge_radicand(*this, o);
    return FieldElem(a_ + o.a_, b_ + o.b_, d);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    long d = merge_radicand(*this, o);
    // (a + b r)(c + e r) = ac + d be + (ae + bc) r
    mpq_class a = a_ * o.a_;
    if (d != 0) a += mpq_class(d) * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    return FieldElem(a, b, d);
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    return b_ == 0 || d_ == o.d_;
}

mpq_class FieldElem::norm() const {
    mpq_class n = a_ * a_;
    if (d_ != 0) n -= mpq_class(d_) * b_ * b_;
    return n;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (b_ == 0) return FieldElem(mpq_class(1) / a_);
    mpq_class n = norm();
    if (n == 0) throw std::domain_error("division by zero (zero norm)");
    return FieldElem(a_ / n, -b_ / n, d_);
}

std::optional<FieldElem> FieldElem::sqrt_in_field() const {
    if (is_zero()) return FieldElem(0);
    if (b_ == 0) {
        if (a_ >= 0)
            if (auto r = rational_sqrt(a_)) return FieldElem(*r);
        if (d_ == 0) return std::nullopt;
        // maybe a = d * s^2, then sqrt(a) = s*sqrt(d)
        mpq_class q = a_ / d_;
        if (q >= 0)
            if (auto s = rational_sqrt(q)) return FieldElem(0, *s, d_);
        return std::nullopt;
    }
    // solve (x + y sqrt(d))^2 = a + b sqrt(d): x^2 + d y^2 = a, 2xy = b
    // x^2 is a root of t^2 - a t + d (b/2)^2 = 0
    mpq_class disc = a_ * a_ - mpq_class(d_) * b_ * b_;  // = norm
    auto sd = rational_sqrt(disc);
    if (!sd) return std::nullopt;
    for (int sign : {+1, -1}) {
        mpq_class x2 = (a_ + sign * *sd) / 2;
        if (x2 < 0) continue;
        if (auto x = rational_sqrt(x2)) {
            if (*x == 0) continue;
            mpq_class y = b_ / (2 * *x);
            FieldElem cand(*x, y, d_);
            if (cand * cand == *this) return cand;
        }
    }
    return std::nullopt;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    if (rn * rn == num && rd * rd == den) return mpq_class(rn, rd);
    return std::nullopt;
}

std::pair<mpq_class, long> split_square(const mpq_class& q) {
    if (q <= 0) throw std::invalid_argument("split_square needs a positive rational");
    // q = num/den = (num*den)/den^2, so sqrt(q) = sqrt(num*den)/den
    mpz_class rest = q.get_num() * q.get_den();
    mpz_class s = 1;
    long d = 1;
    for (mpz_class f = 2; f * f <= rest; ++f) {
        int e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t())) {
            rest /= f;
            ++e;
        }
        for (int k = 0; k < e / 2; ++k) s *= f;
        if (e % 2) {
            if (!f.fits_slong_p()) throw std::overflow_error("radicand too large");
            d *= f.get_si();
        }
    }
    if (rest > 1) {
        if (!rest.fits_slong_p()) throw std::overflow_error("radicand too large");
        d *= rest.get_si();
    }
    mpq_class frac(s, q.get_den());
    frac.canonicalize();
    return {frac, d};
}

std::string FieldElem::str() const {
    auto rat_str = [](const mpq_class& q) {
        return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
    };
    if (b_ == 0) return rat_str(a_);
    std::string radpart;
    mpq_class babs = b_ < 0 ? mpq_class(-b_) : b_;
    if (babs == 1)
        radpart = "sqrt(" + std::to_string(d_) + ")";
    else
        radpart = rat_str(babs) + "*sqrt(" + std::to_string(d_) + ")";
    if (a_ == 0) return (b_ < 0 ? "-" : "") + radpart;
    return rat_str(a_) + (b_ < 0 ? " - " : " + ") + radpart;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool peek_digit() {
        skip_ws();
        return i < s.size() && std::isdigit((unsigned char)s[i]);
    }
};

mpq_class parse_rational(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
    while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) ++c.i;
    if (c.i < c.s.size() && c.s[c.i] == '/') {
        ++c.i;
        while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) ++c.i;
    }
    if (c.i == start) throw std::invalid_argument("expected number in '" + c.s + "'");
    mpq_class q(c.s.substr(start, c.i - start));
    q.canonicalize();
    return q;
}

// parses one term: either rational, or [rat *] sqrt(D); returns (rat part, rad part, d)
void parse_term(Cursor& c, mpq_class& a, mpq_class& b, long& d, int sign) {
    c.skip_ws();
    mpq_class coef = 1;
    bool have_coef = false;
    if (c.i < c.s.size() && (std::isdigit((unsigned char)c.s[c.i]) || c.s[c.i] == '+' || c.s[c.i] == '-')) {
        coef = parse_rational(c);
        have_coef = true;
        if (!c.eat('*')) {
            c.skip_ws();
            if (!(c.i + 4 <= c.s.size() && c.s.compare(c.i, 4, "sqrt") == 0)) {
                a += sign * coef;
                return;
            }
        }
    }
    c.skip_ws();
    if (c.i + 4 <= c.s.size() && c.s.compare(c.i, 4, "sqrt") == 0) {
        c.i += 4;
        if (!c.eat('(')) throw std::invalid_argument("expected '(' after sqrt");
        mpq_class dq = parse_rational(c);
        if (!c.eat(')')) throw std::invalid_argument("expected ')' after radicand");
        if (dq.get_den() != 1 || !dq.get_num().fits_slong_p())
            throw std::invalid_argument("radicand must be an integer");
        long dd = dq.get_num().get_si();
        if (d != 0 && d != dd) throw std::invalid_argument("mixed radicands in literal");
        d = dd;
        b += sign * coef;
        return;
    }
    if (!have_coef) throw std::invalid_argument("malformed field element '" + c.s + "'");
    a += sign * coef;
}

}  // namespace

FieldElem FieldElem::parse(const std::string& text) {
    Cursor c{text};
    bool paren = c.eat('(');
    mpq_class a = 0, b = 0;
    long d = 0;
    int sign = 1;
    c.skip_ws();
    if (c.eat('-')) sign = -1;
    else c.eat('+');
    parse_term(c, a, b, d, sign);
    c.skip_ws();
    while (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) {
        sign = c.s[c.i] == '-' ? -1 : 1;
        ++c.i;
        parse_term(c, a, b, d, sign);
        c.skip_ws();
    }
    if (paren && !c.eat(')')) throw std::invalid_argument("missing ')'");
    c.skip_ws();
    if (c.i != c.s.size()) throw std::invalid_argument("trailing characters in '" + text + "'");
    return b == 0 ? FieldElem(a) : FieldElem(a, b, d);
}

}  // namespace folrig
