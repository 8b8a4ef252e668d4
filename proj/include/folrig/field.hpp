#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace folrig {

// Exact scalar in Q or in a quadratic extension Q(sqrt(d)).
// radicand() == 0 means plain rational; otherwise d is a square-free integer
// (possibly negative) and the element is rat() + rad()*sqrt(d).  Arithmetic
// between two elements is defined when their radicands agree or one side is
// rational.
class FieldElem {
public:
    FieldElem() : a_(0), b_(0), d_(0) {}
    FieldElem(long v) : a_(v), b_(0), d_(0) {}
    FieldElem(const mpq_class& a) : a_(a), b_(0), d_(0) { a_.canonicalize(); }
    FieldElem(mpq_class a, mpq_class b, long d);

    static FieldElem sqrt_of(long d) { return FieldElem(0, 1, d); }
    static FieldElem from_fraction(long num, long den);

    const mpq_class& rat() const { return a_; }
    const mpq_class& rad() const { return b_; }
    long radicand() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    FieldElem operator-() const { return FieldElem(-a_, -b_, d_); }
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const { return *this + (-o); }
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }
    FieldElem& operator+=(const FieldElem& o) { *this = *this + o; return *this; }
    FieldElem& operator-=(const FieldElem& o) { *this = *this - o; return *this; }
    FieldElem& operator*=(const FieldElem& o) { *this = *this * o; return *this; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    // (a + b sqrt(d))^{-1} = (a - b sqrt(d)) / (a^2 - d b^2)
    FieldElem inverse() const;
    FieldElem conjugate() const { return FieldElem(a_, -b_, d_); }
    // a^2 - d b^2, rational
    mpq_class norm() const;

    // sqrt within the same field, if it exists there
    std::optional<FieldElem> sqrt_in_field() const;

    std::string str() const;
    // accepts "p/q", "p", "p/q + r/s*sqrt(d)", "r/s*sqrt(d)", optional
    // surrounding parentheses and whitespace, leading '-'
    static FieldElem parse(const std::string& text);

private:
    mpq_class a_, b_;
    long d_;
    void normalize();
};

inline FieldElem operator*(long s, const FieldElem& x) { return FieldElem(s) * x; }

bool is_square_free(long d);

// exact square root of a non-negative rational, if it is a perfect square
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

// writes q = s^2 * d with d square-free (q > 0); returns {s, d}
std::pair<mpq_class, long> split_square(const mpq_class& q);

}  // namespace folrig
