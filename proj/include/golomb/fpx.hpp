#ifndef GOLOMB_FPX_HPP
#define GOLOMB_FPX_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace golomb::fpx {

// Dense polynomials over F_p as bare coefficient vectors, lowest degree
// first, no trailing zeros. This is the bottom arithmetic layer: extension
// fields reduce modulo an irreducible Vec, and F_p(T) stores reduced
// fractions of two Vecs. p fits in a long; coefficients are kept in [0, p).

using Vec = std::vector<long>;

void trim(Vec& a);
bool is_zero(const Vec& a);
long deg(const Vec& a);  // -1 for the zero vector (internal convention only)
Vec from_int(long c, long p);

Vec add(const Vec& a, const Vec& b, long p);
Vec sub(const Vec& a, const Vec& b, long p);
Vec neg(const Vec& a, long p);
Vec mul(const Vec& a, const Vec& b, long p);
Vec scale(const Vec& a, long c, long p);

/// (quotient, remainder) with b != 0.
std::pair<Vec, Vec> divrem(const Vec& a, const Vec& b, long p);
Vec mod(const Vec& a, const Vec& b, long p);

/// Monic gcd (zero when both inputs are zero).
Vec gcd(Vec a, Vec b, long p);

/// g = gcd, plus s, t with s*a + t*b = g.
struct ExtGcd {
    Vec g, s, t;
};
ExtGcd ext_gcd(const Vec& a, const Vec& b, long p);

Vec monic(const Vec& a, long p);
long inv_mod_p(long c, long p);

/// a^e mod m, e >= 0, m nonconstant.
Vec powmod(const Vec& a, const mpz_class& e, const Vec& m, long p);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
Vec invmod(const Vec& a, const Vec& m, long p);

long eval(const Vec& a, long x, long p);

bool irreducible(const Vec& a, long p);

/// k-th monic polynomial of the given degree, 0 <= k < p^degree.
/// Ordering is lexicographic on the coefficient tuple (c_0, c_1, ...).
Vec monic_by_index(const mpz_class& k, long degree, long p);

/// Lexicographically least monic irreducible of the given degree >= 1.
Vec least_irreducible(long degree, long p);

std::string to_string(const Vec& a, const std::string& var);

}  // namespace golomb::fpx

#endif
