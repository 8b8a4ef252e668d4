#pragma once

#include <map>
#include <optional>
#include <vector>

#include "folrig/liealg.hpp"

namespace folrig {

// Action of g on sl(n+1)/g through a chosen linear complement.
struct QuotientModule {
    LieAlgebraData g;
    std::vector<FMatrix> complement;   // matrices spanning a complement of g in sl(n+1)
    std::vector<FMatrix> action;       // one (dimM x dimM) operator per g-basis element
    std::optional<std::vector<long>> grading;  // ad(X)-eigenvalue per complement element

    int dim() const { return (int)complement.size(); }
    // class of a traceless matrix: complement coordinates of its projection
    std::vector<FieldElem> project(const FMatrix& m) const;
    // g-coordinates of the part of m lying in g (complement of the projection)
    std::vector<FieldElem> g_part(const FMatrix& m) const;

    std::vector<int> selected_rows;  // rows making [g | complement] square
    FMatrix solver;                  // inverse of that square block
};

// Picks a complement of g in sl(n+1).  With a grading element (basis index)
// whose ad is semisimple with rational eigenvalues, the complement is chosen
// ad-invariant (per-eigenspace) and the eigenvalue grading is recorded;
// otherwise any deterministic linear complement is used.  An explicit
// complement basis may be supplied instead (used by the robustness tests).
QuotientModule quotient_module(const LieAlgebraData& g, std::optional<int> grading_element = std::nullopt);
QuotientModule quotient_module_with_complement(const LieAlgebraData& g, const std::vector<FMatrix>& complement);

// Alternating k-cochain on g with values in the module, given by its values
// on increasing basis k-tuples.
struct Cochain {
    int degree = 0;
    int module_dim = 0;
    std::map<IdxTuple, std::vector<FieldElem>> values;

    std::vector<FieldElem> value(const IdxTuple& increasing) const;
    // value on an arbitrary tuple, using antisymmetry (zero on repeats)
    std::vector<FieldElem> value_signed(IdxTuple t) const;
};

// Chevalley-Eilenberg coboundary:
// df(v_0..v_k) = sum_i (-1)^i v_i . f(..v^_i..)
//              + sum_{i<j} (-1)^{i+j} f([v_i,v_j], ..v^_i..v^_j..)
Cochain ce_coboundary(const Cochain& f, const QuotientModule& m);

// dim H^k(g, M) for k in {0,1,2} by exact rank computation
int cohomology_dim(const QuotientModule& m, int k);

// the coboundary matrix C^k -> C^{k+1} in basis-tuple coordinates (columns
// indexed by (k-tuple, module coordinate))
FMatrix coboundary_matrix(const QuotientModule& m, int k);

// minimal polynomial of a square matrix (monic, coefficients low-to-high)
std::vector<FieldElem> minimal_polynomial(const FMatrix& a);
// distinct rational roots when the minimal polynomial is squarefree and
// splits over Q; nullopt otherwise
std::optional<std::vector<mpq_class>> semisimple_rational_spectrum(const FMatrix& a);

// ad(X) as a matrix on sl(n+1) in the E_ij / H_i coordinates
FMatrix ad_on_sl(const FMatrix& x);
// that coordinate basis itself
std::vector<FMatrix> sl_basis(int nv);

}  // namespace folrig
