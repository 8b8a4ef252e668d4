#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "folrig/linalg.hpp"
#include "folrig/poly.hpp"

namespace folrig {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);
// smallest square root of d mod p, if d is a residue
std::optional<std::uint64_t> sqrt_mod(long d, std::uint64_t p);

// Reduction context: a prime together with a chosen image of sqrt(d) when the
// data lives in Q(sqrt(d)).
struct PrimeContext {
    std::uint64_t p;
    long radicand = 0;
    std::optional<std::uint64_t> sqrt_d;

    std::uint64_t reduce(const FieldElem& x) const;
    std::uint64_t reduce(const mpq_class& q) const;
};

// context for p if p is admissible for the radicand, else nullopt
std::optional<PrimeContext> make_prime_context(std::uint64_t p, long radicand);

// scans primes upward from `start`, skipping primes dividing any coefficient
// denominator of `data` and primes where the radicand is a non-residue
PrimeContext next_prime_context(std::uint64_t start, long radicand, std::span<const Poly> data);

// polynomial over F_p
struct PolyMod {
    int num_vars = 0;
    std::map<Exponents, std::uint64_t> terms;

    std::uint64_t eval(std::span<const std::uint64_t> point, std::uint64_t p) const;
    // substitute variable i by a constant, producing a polynomial in the rest
    PolyMod substitute(int i, std::uint64_t value, std::uint64_t p) const;
    // full restriction to the span of `basis` (c vectors in F_p^{num_vars}):
    // result is a polynomial in c slice coordinates
    PolyMod restrict_to_span(const std::vector<std::vector<std::uint64_t>>& basis, std::uint64_t p) const;
    int degree_in(int i) const;
};

PolyMod reduce_mod(const Poly& f, const PrimeContext& ctx);

int rank_mod_p(const FMatrix& m, const PrimeContext& ctx);

}  // namespace folrig
