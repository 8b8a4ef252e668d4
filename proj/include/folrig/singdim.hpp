#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "folrig/foliation.hpp"
#include "folrig/modp.hpp"

#include "json.hpp"

namespace folrig {

// Homogeneous ideal given by explicit generators.
struct IdealSpec {
    int num_vars = 0;
    std::vector<Poly> generators;
};

// generators = the coefficient polynomials of omega
IdealSpec coefficient_ideal(const PForm& omega);

// The (n-1) x (n+1) matrix cutting out sing(d omega) for the weighted chain
// algebras: first row lambda_j z_j with lambda_j = (n+1)(n-2j) - (n-1)(n-2),
// row k+1 the components of the k-th shift field.
struct MinorMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<Poly>> entry;
};

MinorMatrix build_infinito_matrix(int n);

// exact determinant of the square submatrix on the chosen columns,
// expansion along columns with memoization (fraction-free)
Poly selected_minor(const MinorMatrix& m, const std::vector<int>& cols);

// Monte-Carlo linear-slice certificate for "codim >= c".
//
// A variety of codimension exactly c still meets a random c-dimensional
// slice away from the origin with probability O(deg/p) per trial, so a
// single stray hit must not refute.  A trial refutes when its slice carries
// nonzero common zeros; the prime refutes when a majority of its trials do
// (a codim <= c-1 variety meets essentially every slice in ~p points).
struct SliceCertificate {
    std::string ideal_id;
    int claimed_codim = 0;
    std::vector<std::uint64_t> primes;
    int trials = 0;
    std::uint64_t seed = 0;
    bool certified = false;          // certified-geq(c) vs refuted-with-witnesses
    std::vector<int> hits_per_prime;  // trials with nonzero slice points
    // nonzero common zeros found on slices, with their prime
    struct Witness {
        std::uint64_t prime;
        std::vector<std::uint64_t> point;
    };
    std::vector<Witness> witnesses;

    nlohmann::ordered_json to_json() const;
};

struct SliceOptions {
    std::vector<std::uint64_t> primes = {101, 103};
    int trials = 8;
    std::uint64_t seed = 12345;
    int max_witnesses = 3;
};

// Draws random c-dimensional linear subspaces of F_p^{n+1} and enumerates
// their points.  certified iff only the origin lies in V(I) on every slice.
// Refutation carries witness points re-checked exactly over F_p.
SliceCertificate slice_codim_certificate(const IdealSpec& ideal, int claimed_codim,
                                         const SliceOptions& opts, const std::string& ideal_id = "");

struct CodimReport {
    // q = 1: sing(d omega) >= 3;  q >= 2: sing(omega) >= 3; plus always
    // sing(omega) >= 2 (well-definedness)
    SliceCertificate main;       // the theorem hypothesis certificate
    SliceCertificate welldef;    // codim sing(omega) >= 2
    nlohmann::ordered_json to_json() const;
};

CodimReport codim_report(const Distribution& dist, const SliceOptions& opts);

}  // namespace folrig
