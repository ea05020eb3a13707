#ifndef GOLOMB_FIELDS_HPP
#define GOLOMB_FIELDS_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "golomb/fpx.hpp"

namespace golomb {

enum class FieldKind { Prime, Extension, Rationals, RationalFunctions };

class Field;
using FieldPtr = std::shared_ptr<const Field>;
class FieldElement;

/// Immutable descriptor of a coefficient field: F_p, F_{p^n} with an explicit
/// monic irreducible modulus over F_p, Q, or F_p(T). Descriptors are shared
/// by every element and polynomial built over them.
class Field : public std::enable_shared_from_this<Field> {
   public:
    static FieldPtr prime(long p);
    /// F_{p^n} with the canonical modulus: the lexicographically least monic
    /// irreducible of degree n over F_p.
    static FieldPtr extension(long p, long n);
    static FieldPtr extension(long p, fpx::Vec modulus);
    static FieldPtr rationals();
    static FieldPtr rational_functions(long p);

    /// Text form: "Fp:2", "Fq:2^4", "Q", "FpT:3".
    static FieldPtr parse(const std::string& text);
    std::string to_string() const;

    FieldKind kind() const { return kind_; }
    long characteristic() const { return p_; }  // 0 for Q
    long extension_degree() const { return n_; }
    const fpx::Vec& modulus() const;
    bool finite() const { return kind_ == FieldKind::Prime || kind_ == FieldKind::Extension; }
    mpz_class cardinality() const;  // finite fields only

    bool same(const Field& other) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long k) const;
    FieldElement from_rational(const mpq_class& q) const;
    /// Extension element from its coefficient vector over F_p.
    FieldElement from_coeffs(fpx::Vec c) const;
    /// Reduced fraction num/den in F_p(T).
    FieldElement from_fraction(fpx::Vec num, fpx::Vec den) const;
    /// Class of X in F_{p^n} (n >= 2), or T in F_p(T).
    FieldElement generator() const;

    FieldElement parse_element(const std::string& text) const;

   private:
    Field(FieldKind k, long p, long n, fpx::Vec mod)
        : kind_(k), p_(p), n_(n), modulus_(std::move(mod)) {}

    FieldKind kind_;
    long p_;  // 0 for Rationals
    long n_;  // 1 unless Extension
    fpx::Vec modulus_;
};

/// An exact element of one of the four field kinds, in canonical form:
/// residue in [0, p) for F_p; trimmed coefficient vector for F_{p^n};
/// reduced fraction with positive denominator for Q; reduced fraction with
/// monic denominator for F_p(T). Equal elements have equal representations.
class FieldElement {
   public:
    struct RatFun {
        fpx::Vec num, den;  // reduced, den monic (den = {1} when integral)
        bool operator==(const RatFun&) const = default;
    };
    using Rep = std::variant<long, fpx::Vec, mpq_class, RatFun>;

    FieldElement(FieldPtr owner, Rep rep) : owner_(std::move(owner)), rep_(std::move(rep)) {}

    const FieldPtr& field() const { return owner_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    /// a^e; negative e inverts first (a nonzero).
    FieldElement pow(const mpz_class& e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    /// Total order inside one field (enumeration order for finite fields);
    /// lets elements sit in std::set.
    bool operator<(const FieldElement& o) const;

    std::string to_string() const;

    long prime_residue() const;
    const fpx::Vec& ext_coeffs() const;
    const mpq_class& rational() const;
    const RatFun& rational_function() const;

   private:
    FieldPtr owner_;
    Rep rep_;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

/// Least k >= 1 with a^k = 1, or nullopt when no power is 1 (only possible
/// over Q and F_p(T)). a must be nonzero.
std::optional<mpz_class> element_order(const FieldElement& a);

bool is_root_of_unity(const FieldElement& a);

/// Generator of the unique subgroup of order d of F*, for finite F.
/// Throws NoSuchSubgroup unless d divides |F| - 1.
FieldElement subgroup_of_order(const FieldPtr& F, const mpz_class& d);

/// Index-addressable enumeration of a finite field, lexicographic on the
/// coefficient representation (so F_p comes out as 0, 1, ..., p-1).
class FieldEnumeration {
   public:
    explicit FieldEnumeration(FieldPtr F);
    const mpz_class& size() const { return size_; }
    FieldElement at(const mpz_class& i) const;

   private:
    FieldPtr field_;
    mpz_class size_;
};

FieldEnumeration enumerate_field(const FieldPtr& F);

}  // namespace golomb

#endif
