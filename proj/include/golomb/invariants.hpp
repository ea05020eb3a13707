#ifndef GOLOMB_INVARIANTS_HPP
#define GOLOMB_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "golomb/sequences.hpp"
#include "golomb/topology.hpp"

namespace golomb {

/// Prime-support class of a nonzero element: n = number of distinct monic
/// irreducible divisors, support = those primes.
struct GnClass {
    long n;
    std::vector<Poly> support;
};

GnClass gn_membership(const Poly& a, std::uint64_t seed = 1);

struct AlmostPrimeResult {
    std::optional<Poly> witness;  // least-degree monic irreducible in the coset
    long bound;                   // searched degrees 1..bound
};

/// Scans the coset by degree (residue-parameterized) for a monic irreducible
/// member; empty witness means NotFoundUpTo(bound).
AlmostPrimeResult almost_prime_search(const CoprimeCoset& C, long deg_bound);

/// Multiplicative order k of a modulo b, so a^{k+1} lies in a + bK[X]; the
/// divisibility b | a^{k+1} - a is re-checked before returning.
mpz_class isolated_point_witness(const Poly& a, const Poly& b);

struct ChainWitness {
    Poly A;       // element of G_n meeting a + bR, over the field of A
    Poly a, b;    // inputs lifted to that field
    long n;
    long m;       // class of a in the working field
    std::vector<std::pair<FieldElement, mpz_class>> tails;  // (t_i, k_i)
};

/// A = a * prod (X - t_i)^{k_i} with (X - t_i)^{k_i} = 1 mod b, pushing a
/// from G_m into G_n without leaving a + bR. Chooses t_i from the smallest
/// truncation with enough usable points; both postconditions are re-checked.
ChainWitness closure_chain_witness(const Poly& a, const Poly& b, long n,
                                   std::uint64_t seed = 1);

struct NonRegularityWitness {
    Poly pq, q;
    Poly p_elem, x, b;
    Poly helper;    // y for the divisible branch, z for the constructive one
    bool divisible_branch;  // x + b in p_elem K[X]
    long n;
};

/// Builds pq in (closure(x + bR) cap G_n) \ (1 + p_elem R) following the
/// two-branch construction, then replays all three memberships through
/// independent operations before returning.
NonRegularityWitness nonregularity_witness(const Poly& p_elem, const Poly& x, const Poly& b,
                                           long n, long search_degree_bound = 8,
                                           std::uint64_t seed = 1);

struct ObstructionReport {
    Poly center;       // coset center over F_{p^M}
    long modulus_degree;  // coset modulus X^d
    long k_bound;
    std::optional<Poly> irreducible_member;
    struct LinearPowerMember {
        FieldElement u, a;
        long k;
    };
    std::vector<LinearPowerMember> members;  // unit multiples of (X-a)^k inside
};

/// Checks the designated non-density coset over F_{p^M}: it contains an
/// irreducible (almost-Dirichlet side) yet no unit multiple u (X-a)^k with
/// k <= k_bound (separably-closed obstruction side). The coefficient
/// identities are evaluated through Lucas binomials for every a in F_{p^M}.
ObstructionReport sep_closed_obstruction(long p, long M, long k_bound);

/// Same sweep over an arbitrary coset center + X^d K[X] (control runs).
ObstructionReport sep_closed_obstruction_coset(const FieldPtr& F, const Poly& center, long d,
                                               long k_bound, long degree_slack = 6);

/// t with (c + (b^t - 1)R) disjoint from <b> = {u b^m}: starts from the
/// degree-function inequality 2^{t deg b} > 2^{(t-1) deg b} + 2^{deg c} + 1
/// and escalates until the exhaustive modular check over all units and
/// s < t passes.
long power_separation_witness(const Poly& b, const Poly& c);

struct DiscreteVerdict {
    enum class Kind { NotDiscrete, Discrete, Unknown };
    Kind kind;
    // NotDiscrete: lambda^e is a new point of <g> inside lambda + (f)
    std::optional<Poly> lambda, f;
    std::optional<mpz_class> exponent;
    // Discrete over F_p(T): value pair whose ratio is no root of unity
    std::optional<FieldElement> s1, s2, ratio;
};

struct DiscretenessOptions {
    std::optional<Poly> lambda;  // finite fields: point of <g> to move (default g)
    std::optional<Poly> f;       // finite fields: modulus (default: least coprime linear)
    long box_degree = 4;         // F_p(T): height box for the value search
};

/// Whether <g> is discrete in G(K[X]). Over F_{p^n} the answer is always
/// NotDiscrete, with the explicit exponent q'(q-1)+1 replayed by divisibility.
/// Over F_p(T) a value pair with non-root-of-unity ratio certifies Discrete;
/// an exhausted box reports Unknown rather than guessing.
DiscreteVerdict discreteness_decider(const Poly& g, const DiscretenessOptions& opt = {});

struct CharZeroRefutation {
    long m;
    mpq_class forced_u;       // the only constant with u alpha^m = lambda(alpha)
    bool degree_bound;        // refuted because deg h < n while h != 0
    long derivative_order;    // else: first j with h^{(j)}(alpha) != 0, j < n
    mpq_class derivative_value;
};

struct CharZeroVerdict {
    enum class Status { NotInClosure, Inconclusive };
    Status status;
    long depth;  // n
    long m_max;
    std::vector<CharZeroRefutation> refutations;
    bool symbolic_tail;  // every m > m_max ruled out by the derivative identity
};

/// Closedness evidence for <X> over Q in the (f)-topology, f = X - alpha:
/// for each exponent m the constant u is forced by evaluation at alpha and
/// the derivative identity refutes u X^m = lambda mod f^n. Exponents above
/// m_max >= n - 1 are covered symbolically.
CharZeroVerdict char_zero_obstruction(const Poly& lambda, const Poly& f, long depth_n,
                                      long m_max);

enum class Algebraicity { Yes, No, NotApplicable };

struct FieldFingerprint {
    std::string field;
    long characteristic;
    Algebraicity algebraic_over_prime_field;
    std::vector<mpz_class> unit_orders;  // realized finite orders <= order_bound
    long order_bound;
    std::vector<long> attainable;  // realizable limit-set cardinalities <= n_max
    long n_max;
};

FieldFingerprint fingerprint(const FieldPtr& F, long order_bound = 64, long n_max = 5);

struct BatteryResult {
    bool separated;
    std::vector<std::string> separating;  // invariant names in comparison order
    FieldFingerprint fp1, fp2;
};

/// Compares two fields through the invariant bundle, in order: characteristic,
/// algebraicity (both positive characteristic), unit orders, attainable limit
/// cardinalities. Lists every separating invariant; NotSeparated only means
/// this battery cannot tell them apart.
BatteryResult battery(const FieldPtr& F1, const FieldPtr& F2, long order_bound = 64,
                      long n_max = 5);

}  // namespace golomb

#endif
