#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folrig/calculus.hpp"

namespace folrig {

// Twisted q-form data for a codimension-q distribution on P^n.
// Invariants: i_R omega = 0, coefficients homogeneous of degree d+1.
struct Distribution {
    int n = 0;       // ambient projective dimension (num_vars = n+1)
    int q = 0;       // codimension = arity of omega
    PForm omega;
    int degree = 0;  // coefficient degree - 1
    std::optional<std::vector<int>> splitting_degrees;  // e_i = 1 - deg(X_i)
};

// omega = i_{X_1} ... i_{X_{n-q}} i_R Omega.  nullopt when the contraction is
// identically zero (degenerate input algebra).
std::optional<Distribution> omega_from_fields(const std::vector<VField>& fields);

struct DescendsResult {
    bool ok = false;
    int degree = 0;
    std::string violation;  // first violating term when !ok
};

// verifies i_R omega = 0 and homogeneity; degree = coefficient degree - 1
DescendsResult check_descends(const PForm& omega);

struct CheckResult {
    bool pass = false;
    std::optional<IdxTuple> counterexample;  // basis multivector v
};

// Pluecker / decomposability: (i_v omega) ^ omega = 0 for all basis
// v in Lambda^{q-1}; multilinearity reduces the quantifier to basis tuples
CheckResult check_pluecker(const PForm& omega);

// integrability: (i_v omega) ^ d omega = 0 for all basis v in Lambda^{q-1}
CheckResult check_integrability(const PForm& omega);

struct PreparaResult {
    std::vector<VField> adjusted;  // X~_i = X_i + nu_i * R, same degrees
    FieldElem c;                   // (-1)^q (n+1-q+sum deg X_i)
    std::vector<Poly> radial_factors;  // the nu_i
};

// Normalization for eta = i_{X_1}..i_{X_q} i_R Omega:
//   d eta = c * i_{X~_1} ... i_{X~_q} Omega   and
//   eta   = i_{X~_1} ... i_{X~_q} i_R Omega.
// Throws when c = 0 or when d eta is not in the expected span.
PreparaResult prepara_normalize(const std::vector<VField>& fields);

enum class TangentMode { Codim1, Grass };

// Tangent-direction conditions for deformations:
//  Codim1: theta ^ d eta + eta ^ d theta = 0, cross-checked against
//          d theta ^ d eta = 0 (the two are equivalent when i_R eta = 0)
//  Grass:  i_v(eta) ^ theta + i_v(theta) ^ eta = 0 over basis v
CheckResult deformation_tangent_check(const PForm& theta, const PForm& eta, TangentMode mode);

// same formula read in n+m+1 variables (pull-back under the linear projection
// dropping the new coordinates); appends one splitting degree 1 per new
// constant direction
Distribution pullback_linear(const Distribution& d, int extra_dims);

}  // namespace folrig
