#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "folrig/field.hpp"

namespace folrig {

// exponent vector, one entry per variable; ordered lexicographically
using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Q or Q(sqrt(d)).  Terms are kept in a
// sorted map so iteration order (and printed output) is deterministic.
class Poly {
public:
    Poly() : num_vars_(0) {}
    explicit Poly(int num_vars) : num_vars_(num_vars) {}

    static Poly constant(int num_vars, const FieldElem& c);
    static Poly variable(int num_vars, int i);
    static Poly monomial(int num_vars, Exponents e, const FieldElem& c);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, FieldElem>& terms() const { return terms_; }

    FieldElem coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const FieldElem& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scale(const FieldElem& c) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    bool operator==(const Poly& o) const { return num_vars_ == o.num_vars_ && terms_ == o.terms_; }

    Poly partial(int i) const;
    FieldElem eval(std::span<const FieldElem> point) const;
    // substitute variable i by a polynomial (used by the small-system solver)
    Poly substitute(int i, const Poly& value) const;
    // reinterpret in a larger variable set (existing variables keep indices)
    Poly extended(int new_num_vars) const;

    int total_degree() const;  // -1 for the zero polynomial
    // degree when homogeneous; nullopt when not.  zero polynomial -> 0
    std::optional<int> homogeneous_degree() const;
    int degree_in(int i) const;

    // largest radicand appearing in the coefficients (0 if purely rational)
    long radicand() const;

    // text format: terms "coeff * x0^a0 x1^a1 ... xn^an" joined by " + ",
    // lexicographic exponent order; radical coefficients parenthesized
    std::string str() const;
    static Poly parse(const std::string& text, int num_vars);

private:
    int num_vars_;
    std::map<Exponents, FieldElem> terms_;
    void check_compat(const Poly& o) const;
};

inline Poly operator*(const FieldElem& c, const Poly& p) { return p.scale(c); }

// monomial exponent vectors of homogeneous degree d, lexicographic order
std::vector<Exponents> homogeneous_monomials(int num_vars, int d);

// exact determinant of a square polynomial matrix by column expansion with
// memoization over column subsets (fraction-free)
Poly poly_det(const std::vector<std::vector<Poly>>& m);

}  // namespace folrig
