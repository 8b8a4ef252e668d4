#include "folrig/modp.hpp"

namespace folrig {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = (__uint128_t)r * b % p;
        b = (__uint128_t)b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of 0 mod p");
    return mod_pow(a, p - 2, p);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n == f) return true;
        if (n % f == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = (__uint128_t)x * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<std::uint64_t> sqrt_mod(long d, std::uint64_t p) {
    std::uint64_t a = ((d % (long)p) + (long)p) % (long)p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
    // p is small in this artifact; a linear scan is plenty and deterministic
    for (std::uint64_t s = 1; s <= p / 2; ++s)
        if ((__uint128_t)s * s % p == a) return s;
    return std::nullopt;
}

std::uint64_t PrimeContext::reduce(const mpq_class& q) const {
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz((unsigned long)p);
    mpz_class dmod = den % pz;
    if (dmod == 0) throw std::domain_error("prime divides a denominator");
    mpz_class nmod = num % pz;
    if (nmod < 0) nmod += pz;
    std::uint64_t nn = nmod.get_ui();
    std::uint64_t dd = dmod.get_ui();
    return (__uint128_t)nn * mod_inv(dd, p) % p;
}

std::uint64_t PrimeContext::reduce(const FieldElem& x) const {
    std::uint64_t v = reduce(x.rat());
    if (!x.is_rational()) {
        if (x.radicand() != radicand || !sqrt_d)
            throw std::domain_error("context lacks a square root for this radicand");
        v = (v + (__uint128_t)reduce(x.rad()) * (*sqrt_d)) % p;
    }
    return v;
}

std::optional<PrimeContext> make_prime_context(std::uint64_t p, long radicand) {
    if (!is_prime_u64(p)) return std::nullopt;
    PrimeContext ctx{p, radicand, std::nullopt};
    if (radicand != 0) {
        auto s = sqrt_mod(radicand, p);
        if (!s) return std::nullopt;
        ctx.sqrt_d = s;
    }
    return ctx;
}

PrimeContext next_prime_context(std::uint64_t start, long radicand, std::span<const Poly> data) {
    auto divides_some_denominator = [&](std::uint64_t p) {
        mpz_class pz((unsigned long)p);
        for (const Poly& f : data)
            for (const auto& [e, c] : f.terms()) {
                if (mpz_divisible_p(c.rat().get_den().get_mpz_t(), pz.get_mpz_t())) return true;
                if (mpz_divisible_p(c.rad().get_den().get_mpz_t(), pz.get_mpz_t())) return true;
            }
        return false;
    };
    for (std::uint64_t p = start;; ++p) {
        if (!is_prime_u64(p)) continue;
        if (divides_some_denominator(p)) continue;
        auto ctx = make_prime_context(p, radicand);
        if (ctx) return *ctx;
    }
}

std::uint64_t PolyMod::eval(std::span<const std::uint64_t> point, std::uint64_t p) const {
    std::uint64_t acc = 0;
    for (const auto& [e, c] : terms) {
        std::uint64_t t = c;
        for (int i = 0; i < num_vars; ++i)
            for (int k = 0; k < e[i]; ++k) t = (__uint128_t)t * point[i] % p;
        acc = (acc + t) % p;
    }
    return acc;
}

PolyMod PolyMod::substitute(int i, std::uint64_t value, std::uint64_t p) const {
    PolyMod r;
    r.num_vars = num_vars - 1;
    for (const auto& [e, c] : terms) {
        std::uint64_t t = c;
        for (int k = 0; k < e[i]; ++k) t = (__uint128_t)t * value % p;
        if (t == 0) continue;
        Exponents e2;
        e2.reserve(num_vars - 1);
        for (int j = 0; j < num_vars; ++j)
            if (j != i) e2.push_back(e[j]);
        auto [it, inserted] = r.terms.emplace(std::move(e2), t);
        if (!inserted) {
            it->second = (it->second + t) % p;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

PolyMod PolyMod::restrict_to_span(const std::vector<std::vector<std::uint64_t>>& basis, std::uint64_t p) const {
    int c = (int)basis.size();
    // substitute x_j = sum_k t_k basis[k][j] and expand
    PolyMod r;
    r.num_vars = c;
    // linear forms in the slice coordinates, one per original variable
    std::vector<PolyMod> lin(num_vars);
    for (int j = 0; j < num_vars; ++j) {
        lin[j].num_vars = c;
        for (int k = 0; k < c; ++k) {
            if (basis[k][j] % p == 0) continue;
            Exponents e(c, 0);
            e[k] = 1;
            lin[j].terms[e] = basis[k][j] % p;
        }
    }
    auto mul = [&](const PolyMod& a, const PolyMod& b) {
        PolyMod out;
        out.num_vars = c;
        Exponents e(c);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                for (int i = 0; i < c; ++i) e[i] = ea[i] + eb[i];
                std::uint64_t v = (__uint128_t)ca * cb % p;
                auto [it, inserted] = out.terms.emplace(e, v);
                if (!inserted) {
                    it->second = (it->second + v) % p;
                    if (it->second == 0) out.terms.erase(it);
                }
            }
        return out;
    };
    for (const auto& [e, coef] : terms) {
        PolyMod t;
        t.num_vars = c;
        t.terms[Exponents(c, 0)] = coef;
        for (int j = 0; j < num_vars; ++j)
            for (int k = 0; k < e[j]; ++k) t = mul(t, lin[j]);
        for (const auto& [et, ct] : t.terms) {
            auto [it, inserted] = r.terms.emplace(et, ct);
            if (!inserted) {
                it->second = (it->second + ct) % p;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    }
    return r;
}

int PolyMod::degree_in(int i) const {
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e[i]);
    return d;
}

PolyMod reduce_mod(const Poly& f, const PrimeContext& ctx) {
    PolyMod r;
    r.num_vars = f.num_vars();
    for (const auto& [e, c] : f.terms()) {
        std::uint64_t v = ctx.reduce(c);
        if (v) r.terms.emplace(e, v);
    }
    return r;
}

int rank_mod_p(const FMatrix& m, const PrimeContext& ctx) {
    int rows = m.rows(), cols = m.cols();
    std::uint64_t p = ctx.p;
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = ctx.reduce(m.at(i, j));
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col]) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        std::uint64_t inv = mod_inv(a[rank][col], p);
        for (int j = col; j < cols; ++j) a[rank][j] = (__uint128_t)a[rank][j] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            std::uint64_t f = a[r][col];
            for (int j = col; j < cols; ++j)
                a[r][j] = (a[r][j] + (p - (__uint128_t)f * a[rank][j] % p)) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace folrig
