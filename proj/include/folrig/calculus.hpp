#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folrig/poly.hpp"

namespace folrig {

// Polynomial vector field on C^{n+1}: one component polynomial per variable.
struct VField {
    int num_vars = 0;
    std::vector<Poly> comp;

    VField() = default;
    explicit VField(int nv) : num_vars(nv), comp(nv, Poly(nv)) {}

    static VField euler(int nv);           // R = sum x_i d/dx_i
    static VField coordinate(int nv, int i);  // d/dx_i

    bool is_zero() const;
    // derivation applied to a polynomial: X(f) = sum X^i df/dx_i
    Poly apply(const Poly& f) const;
    VField operator+(const VField& o) const;
    VField operator-(const VField& o) const;
    VField scale(const FieldElem& c) const;
    // X + g*R and friends
    VField plus_scaled(const VField& o, const Poly& factor) const;
    bool operator==(const VField& o) const { return num_vars == o.num_vars && comp == o.comp; }

    // common degree of the nonzero components when homogeneous
    std::optional<int> homogeneous_degree() const;
    VField extended(int new_num_vars) const;
};

// strictly increasing index tuple labelling dx_{i1} ^ ... ^ dx_{ip}
using IdxTuple = std::vector<int>;

// Alternating form with polynomial coefficients, stored sparsely per index
// tuple.  Tuples are strictly increasing; zero coefficients are pruned.
class PForm {
public:
    PForm() : num_vars_(0), arity_(0) {}
    PForm(int num_vars, int arity) : num_vars_(num_vars), arity_(arity) {}

    static PForm volume(int num_vars);  // dx_0 ^ ... ^ dx_{n}

    int num_vars() const { return num_vars_; }
    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<IdxTuple, Poly>& terms() const { return terms_; }

    Poly coeff(const IdxTuple& t) const;
    void add_term(const IdxTuple& t, const Poly& c);

    PForm operator+(const PForm& o) const;
    PForm operator-(const PForm& o) const;
    PForm operator-() const;
    PForm scale(const FieldElem& c) const;
    PForm scale_poly(const Poly& f) const;
    PForm& operator+=(const PForm& o) { *this = *this + o; return *this; }
    bool operator==(const PForm& o) const {
        return num_vars_ == o.num_vars_ && arity_ == o.arity_ && terms_ == o.terms_;
    }

    // common coefficient degree when homogeneous
    std::optional<int> homogeneous_degree() const;
    PForm extended(int new_num_vars) const;

    // text format, one entry per line: "(<poly>) * dx_i1^dx_i2^..."
    std::string str() const;

private:
    int num_vars_, arity_;
    std::map<IdxTuple, Poly> terms_;
};

// i_X omega; contracting slot j of a tuple contributes sign (-1)^j, so
// i_{d/dx_i}(dx_i ^ rest) = +rest
PForm interior_product(const VField& X, const PForm& omega);

// graded-commutative wedge
PForm wedge(const PForm& a, const PForm& b);

// exterior derivative
PForm exterior_derivative(const PForm& omega);

// [X,Y]^k = X(Y^k) - Y(X^k)
VField lie_bracket(const VField& X, const VField& Y);

// Cartan formula: L_X = i_X d + d i_X
PForm lie_derivative(const VField& X, const PForm& omega);
// Leibniz-rule definition, kept as an independent route for the identity
// checks: L_X(f dx_I) = X(f) dx_I + f sum_j dx_{i1}^...^d(X^{i_j})^...
PForm lie_derivative_leibniz(const VField& X, const PForm& omega);

Poly divergence(const VField& X);

// i_{f_1} ... i_{f_k} Omega applied right to left (f_k contracts first)
PForm contract_volume(const std::vector<VField>& fields);

// i_{e_{j1}} ... i_{e_{jk}} omega for a constant basis multivector
PForm interior_multi(const IdxTuple& idx, const PForm& omega);

// all strictly increasing k-tuples in {0..num_vars-1}
std::vector<IdxTuple> basis_multivectors(int num_vars, int k);

}  // namespace folrig
