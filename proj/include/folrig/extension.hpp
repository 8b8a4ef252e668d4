#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "folrig/liealg.hpp"
#include "folrig/poly.hpp"

namespace folrig {

// The weighted-chain extension system: unknowns are the leading coefficients
// b0^(2)..b0^(n-3); the coefficient table carries every b_i^(k) as a linear
// polynomial in the unknowns; the equations are the vanishing brackets
// [Y_a, Y_c] = 0 for a + c in {n-1, n}.
struct ExtensionSystem {
    int n = 0;
    int num_unknowns = 0;
    // table[k-1][i] = b_i^{(k)} for k = 1..n-2
    std::vector<std::vector<Poly>> coeff_table;
    std::vector<Poly> equations;
    // the bracket pair each equation came from
    std::vector<std::pair<int, int>> equation_sources;
};

ExtensionSystem build_extension_system(int n);

// all exact solutions, each re-verified by substitution into every equation;
// deterministic order.  throws on irreducible factors of degree >= 3
std::vector<std::vector<FieldElem>> solve_extension_system(const ExtensionSystem& sys);

struct ClosureVerdict {
    bool closed = false;
    std::optional<std::pair<int, int>> failing_bracket;  // shift indices (a, c)
    // [Y_2, Y_3] = mu * Y_5 when that bracket is a multiple (0 when it vanishes)
    std::optional<FieldElem> y23_coefficient;
    // present when closed
    std::optional<LieAlgebraData> algebra;
};

ClosureVerdict lie_closure_verdict(const ExtensionSystem& sys, const std::vector<FieldElem>& solution);

// the candidate basis {X, Y_1..Y_{n-2}} at a solution point
std::vector<FMatrix> extension_basis(const ExtensionSystem& sys, const std::vector<FieldElem>& solution);

// generic exact solver for small polynomial systems over Q / Q(sqrt(d));
// exposed for the solver's own tests
std::vector<std::vector<FieldElem>> solve_small_system(const std::vector<Poly>& equations, int num_vars);

// resultant of f and g with respect to variable `var` (Sylvester determinant)
Poly resultant(const Poly& f, const Poly& g, int var);

// roots of a univariate polynomial (coefficients low-to-high) in Q(sqrt(d)),
// adjoining one square root when needed; throws on irreducible degree >= 3
std::vector<FieldElem> univariate_roots(const std::vector<FieldElem>& coeffs);

// T(f) = X(f) - f on homogeneous polynomials of degree e-1
struct TOperator {
    std::vector<Exponents> monomials;  // basis, lexicographic
    FMatrix matrix;
    FieldElem determinant;
    bool invertible = false;
};

TOperator t_operator(const VField& x, int e);

}  // namespace folrig
