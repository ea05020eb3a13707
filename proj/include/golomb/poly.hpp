#ifndef GOLOMB_POLY_HPP
#define GOLOMB_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "golomb/fields.hpp"

namespace golomb {

/// Degree of a polynomial; the zero polynomial gets a distinguished
/// NegInfinity value rather than an ordinary integer.
class Degree {
   public:
    static Degree neg_infinity() { return Degree(); }
    explicit Degree(long v) : finite_(true), v_(v) {}

    bool is_neg_infinity() const { return !finite_; }
    long value() const;

    bool operator==(const Degree& o) const { return finite_ == o.finite_ && v_ == o.v_; }
    bool operator!=(const Degree& o) const { return !(*this == o); }
    bool operator<(const Degree& o) const;
    bool operator<=(const Degree& o) const { return *this < o || *this == o; }
    bool operator>(const Degree& o) const { return o < *this; }
    bool operator>=(const Degree& o) const { return o <= *this; }
    bool operator==(long v) const { return finite_ && v_ == v; }
    bool operator!=(long v) const { return !(*this == v); }
    bool operator<(long v) const { return !finite_ || v_ < v; }
    bool operator<=(long v) const { return !finite_ || v_ <= v; }
    bool operator>(long v) const { return finite_ && v_ > v; }
    bool operator>=(long v) const { return finite_ && v_ >= v; }

    std::string to_string() const { return finite_ ? std::to_string(v_) : "-inf"; }

   private:
    Degree() : finite_(false), v_(0) {}
    bool finite_;
    long v_;
};

/// Dense univariate polynomial over a FieldDescriptor. Coefficients are
/// stored lowest degree first with no trailing zeros; the zero polynomial
/// is the empty sequence.
class Poly {
   public:
    Poly(FieldPtr F, std::vector<FieldElement> coeffs);

    static Poly zero(const FieldPtr& F) { return Poly(F, {}); }
    static Poly one(const FieldPtr& F) { return constant(F->one()); }
    static Poly X(const FieldPtr& F);
    static Poly constant(const FieldElement& c);
    /// Coefficients given as integers, lowest degree first.
    static Poly from_ints(const FieldPtr& F, const std::vector<long>& c);
    static Poly monomial(const FieldPtr& F, long degree, const FieldElement& lead);

    const FieldPtr& field() const { return owner_; }
    Degree degree() const;
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_unit() const { return c_.size() == 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    FieldElement coeff(long i) const;
    const FieldElement& leading() const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElement& s) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    /// Canonical order: by degree, then lexicographic on the coefficient
    /// tuple (lowest degree first).
    bool operator<(const Poly& o) const;

    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divrem(d).first; }
    Poly operator%(const Poly& d) const { return divrem(d).second; }
    bool divides(const Poly& other) const;  // *this | other

    Poly monic() const;
    Poly pow(unsigned long e) const;
    Poly pow_mod(const mpz_class& e, const Poly& m) const;
    Poly inverse_mod(const Poly& m) const;

    /// Iterated formal derivative (times >= 1).
    Poly derivative(unsigned long times = 1) const;

    /// a(x); x may live in the owner field or in an extension of it that the
    /// coefficients embed into.
    FieldElement evaluate(const FieldElement& x) const;

    /// a(alpha*X + beta).
    Poly substitute_affine(const FieldElement& alpha, const FieldElement& beta) const;

    std::string to_string() const;
    static Poly parse(const FieldPtr& F, const std::string& text);

   private:
    FieldPtr owner_;
    std::vector<FieldElement> c_;
    void trim();
};

Poly gcd(const Poly& a, const Poly& b);

struct PolyExtGcd {
    Poly g, s, t;  // s*a + t*b = g, g monic (or zero)
};
PolyExtGcd ext_gcd(const Poly& a, const Poly& b);

/// unit * prod factor_i^{e_i}, factors monic irreducible, pairwise distinct,
/// sorted canonically.
struct FactoredPoly {
    FieldElement unit;
    std::vector<std::pair<Poly, unsigned long>> factors;

    Poly reassemble() const;
    Poly radical() const;
};

/// Complete factorization over a finite field. Squarefree decomposition,
/// then distinct-degree splitting, then seeded equal-degree splitting; the
/// same seed always yields the same run.
FactoredPoly factor(const Poly& a, std::uint64_t seed = 1);

/// Exact over finite fields. Over Q the degree is capped at 3 (rational
/// root test), over F_p(T) at 2 (rational root theorem in F_p[T]).
bool is_irreducible(const Poly& a);

/// All q^degree monic polynomials of exactly the given degree.
class MonicEnumeration {
   public:
    MonicEnumeration(FieldPtr F, long degree);
    const mpz_class& size() const { return size_; }
    Poly at(const mpz_class& i) const;

   private:
    FieldPtr field_;
    long degree_;
    mpz_class size_;
};

MonicEnumeration enumerate_monic(const FieldPtr& F, long degree);

/// Image of a in the target field. Supported: identity, F_p into F_{p^M} or
/// F_p(T), and F_{p^j} into F_{p^M} with j | M (deterministic choice of the
/// embedding root).
FieldElement embed(const FieldElement& a, const FieldPtr& target);

/// Coefficient-wise embedding.
Poly embed_poly(const Poly& a, const FieldPtr& target);

/// All roots of a lying in F_{p^M}; owner must be F_{p^j} with j | M.
/// Returned in enumeration order.
std::vector<FieldElement> roots_in_extension(const Poly& a, long M);

}  // namespace golomb

#endif
