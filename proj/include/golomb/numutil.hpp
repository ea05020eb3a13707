#ifndef GOLOMB_NUMUTIL_HPP
#define GOLOMB_NUMUTIL_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace golomb {

/// Prime factorization by trial division, memoized. Pairs (prime, exponent)
/// in increasing prime order. Intended for desk-scale inputs (q - 1 of the
/// finite fields in play); not a general-purpose factoring engine.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

/// All positive divisors of n, ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

bool is_prime(const mpz_class& n);

/// v_p(n): exponent of p in n. Requires n >= 1.
unsigned long padic_valuation(const mpz_class& n, const mpz_class& p);

/// Binomial coefficient C(n, k) mod p via Lucas' theorem (p prime).
long binomial_mod_p(const mpz_class& n, const mpz_class& k, long p);

/// Multiplicative order of a modulo m, given gcd(a, m) = 1.
mpz_class order_mod(const mpz_class& a, const mpz_class& m);

/// Deterministic 64-bit generator (splitmix64). Same seed, same stream,
/// on every platform; used wherever an algorithm needs random splittings.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform value in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);

   private:
    std::uint64_t state_;
};

/// Runs fn(i) for i in [0, n). Parallel fan-out capped by the
/// GOLOMB_LAB_THREADS environment variable (default: hardware concurrency).
/// Tasks must be independent; results must be written to index i only, so
/// the merged output is deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace golomb

#endif
