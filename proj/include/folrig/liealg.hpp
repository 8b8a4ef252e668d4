#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folrig/calculus.hpp"
#include "folrig/linalg.hpp"

#include "json.hpp"

namespace folrig {

// Bracket of the vector fields induced by matrices (X_A = sum (Az)_i d/dz_i):
// [X_A, X_B] = X_{BA - AB}.  All algebra structure below uses this bracket so
// that the vector-field relations hold literally.
FMatrix vf_bracket(const FMatrix& a, const FMatrix& b);

// the linear vector field z -> Az
VField vfield_from_matrix(const FMatrix& a);

// Lie subalgebra of sl(n+1) given by a basis of traceless matrices together
// with exact structure constants [b_i, b_j] = sum_k c[i][j][k] b_k.
struct LieAlgebraData {
    int n = 0;  // matrices are (n+1) x (n+1)
    std::vector<FMatrix> basis;
    std::vector<std::vector<std::vector<FieldElem>>> constants;

    int dim() const { return (int)basis.size(); }
    std::vector<VField> fields() const;
    // coordinates of a matrix in the basis, if it lies in the span
    std::optional<std::vector<FieldElem>> coordinates(const FMatrix& m) const;
};

// thrown when a candidate basis fails the subalgebra axioms; carries the
// offending bracket when closure fails
struct NotClosedError : std::runtime_error {
    int i = -1, j = -1;
    NotClosedError(const std::string& msg, int i_, int j_) : std::runtime_error(msg), i(i_), j(j_) {}
};

// exact structure constants; throws NotClosedError / invalid_argument on
// non-closure, dependent basis, or nonzero trace
LieAlgebraData structure_constants(const std::vector<FMatrix>& basis);

// built-in algebras:
//   chain(n, r): X = diag(n-2i) plus shifts Y_1..Y_{n-r}
//   infinito(n): alias of chain(n, 2)
//   aff_sym(r):  alias of chain(r, r-1)  (2-dimensional)
//   sl2_sym(r):  sl(2) acting on binary forms of degree r
//   diagonal:    given weight rows
//   g6, g7:      weighted chains on P^6 / P^7 from the degree-(n-1) extension
//                solutions (g7 lives in Q(sqrt(3)))
LieAlgebraData chain_algebra(int n, int r);
LieAlgebraData sl2_sym_algebra(int r);
LieAlgebraData diagonal_algebra(const std::vector<std::vector<mpq_class>>& weight_rows);
LieAlgebraData g_extension_algebra(int n);  // n = 6 or 7

// generic rational traceless weights for a diagonal algebra of dim n-q
std::vector<std::vector<mpq_class>> default_diagonal_weights(int n, int q);

// dispatcher for { "builtin": name, ... } parameter objects
LieAlgebraData builtin_algebra(const std::string& name, const nlohmann::json& params);

// JSON algebra-spec ingestion / emission:
// { "n": int, "radicand": int|null, "generators": [ (n+1)^2 strings ] }
LieAlgebraData algebra_from_json(const nlohmann::json& spec);
nlohmann::ordered_json algebra_to_json(const LieAlgebraData& g);

// loads either the matrix schema above or { "builtin": name, params }
LieAlgebraData parse_algebra_spec(const std::string& path);

}  // namespace folrig
