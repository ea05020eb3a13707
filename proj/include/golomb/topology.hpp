#ifndef GOLOMB_TOPOLOGY_HPP
#define GOLOMB_TOPOLOGY_HPP

#include <optional>
#include <vector>

#include "golomb/poly.hpp"

namespace golomb {

/// Ideal of K[X] with a monic generator (or zero). K[X] is a PID, so this
/// covers every ideal in play.
struct PrincipalIdeal {
    Poly generator;

    static PrincipalIdeal of(const Poly& g);
    bool is_zero() const { return generator.is_zero(); }
    bool operator==(const PrincipalIdeal& o) const { return generator == o.generator; }
};

/// Basic open set x + bK[X] of the Golomb topology: gcd(x, b) = 1, b
/// nonconstant and monic-normalized.
class CoprimeCoset {
   public:
    static CoprimeCoset make(const Poly& x, const Poly& b);

    const Poly& center() const { return center_; }
    const Poly& modulus() const { return modulus_; }
    bool contains(const Poly& y) const;

   private:
    CoprimeCoset(Poly x, Poly b) : center_(std::move(x)), modulus_(std::move(b)) {}
    Poly center_, modulus_;
};

/// Closure membership for the coset closure formula
/// cl(x + I) = intersection over I = prod P_i^{e_i} of (P_i* union (x + P_i^{e_i})).
bool golomb_closure_contains(const Poly& y, const CoprimeCoset& C, std::uint64_t seed = 1);

struct BruteForceResult {
    bool consistent;              // neighborhoods of y meet C for every modulus tried
    long bound;                   // degree bound D that was swept
    std::optional<Poly> witness;  // a modulus c with (y + cR) disjoint from C
};

/// Definition-level closure oracle: sweeps all moduli c with deg c <= D and
/// gcd(c, y) = 1 and decides disjointness of y + cR from C by exact coset
/// intersection. Independent of the formula path above.
BruteForceResult golomb_closure_bruteforce(const Poly& y, const CoprimeCoset& C, long D);

struct CosetIntersection {
    bool intersects;
    std::optional<Poly> witness;  // an element of both cosets
};

/// x1 + b1 R meets x2 + b2 R iff x1 = x2 mod gcd(b1, b2); the witness comes
/// from the extended gcd. Accepts arbitrary cosets, not only Golomb-open ones.
CosetIntersection cosets_intersect(const Poly& x1, const Poly& b1, const Poly& x2,
                                   const Poly& b2);
CosetIntersection cosets_intersect(const CoprimeCoset& C1, const CoprimeCoset& C2);

struct OrbitWitness {
    long depth;      // k
    mpz_class m;     // exponent
    FieldElement u;  // unit with f^k | lambda - u g^m
};

struct ClosureVerdict {
    enum class Status { In, NotIn, InUpToDepth };
    Status status;
    long depth;                          // examined depth; failing depth for NotIn
    std::vector<OrbitWitness> witnesses; // one per depth k = 1..depth for In/InUpToDepth
    std::optional<Poly> failing_residue; // lambda mod f^k for NotIn
};

/// Membership of lambda in the closure of <g> = {u g^m} in the (f)-topology,
/// decided exactly per depth k: the set S_k of power residues of g modulo f^k
/// is finite (powers are eventually periodic), and lambda mod f^k is tested
/// against S_k closed under unit multiples. Status In is reserved for lambda
/// literally of the form u g^m; depth-k membership is reported as
/// InUpToDepth(k), never promoted to In.
ClosureVerdict ptop_orbit_closure(const Poly& lambda, const Poly& g, const Poly& f,
                                  long depth);

/// Replays the certificate inside a verdict against the defining divisibility
/// (or, for NotIn, recomputes S_k and checks absence). Returns true when every
/// claim checks out.
bool verify_closure_verdict(const Poly& lambda, const Poly& g, const Poly& f,
                            const ClosureVerdict& v);

struct FrobeniusWitness {
    mpz_class m;     // p-power exponent
    FieldElement u;  // g(a)^{-m}
    long k;          // requested depth: (X - a)^k divides 1 - u g^m
};

/// Characteristic-p witness that 1 + (X-a)^k K[X] meets <g>: m = p^s with
/// p^s >= k and u = g(a)^{-m}. The divisibility is re-checked before
/// returning.
FrobeniusWitness frobenius_witness(const Poly& g, const FieldElement& a, long k);

}  // namespace golomb

#endif
