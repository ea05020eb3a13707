#ifndef GOLOMB_SEQUENCES_HPP
#define GOLOMB_SEQUENCES_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "golomb/poly.hpp"

namespace golomb {

/// e_n = n + 1 (the divergent staircase; realizes the empty limit set).
struct LinearRule {
    bool operator==(const LinearRule&) const = default;
};

/// e_n = f_n * p^n where f_n is the order of the subgroup generated by the
/// first min(n+1, L) listed generators. With the full list of L generators,
/// f_n stabilizes at the order of the whole subgroup.
struct SubgroupRule {
    std::vector<FieldElement> generators;
    bool operator==(const SubgroupRule&) const = default;
};

/// Explicit exponents with an optional symbolic tail. Without a tail rule the
/// sequence is only known on its prefix and convergence stays undecided.
struct ExplicitRule {
    enum class Tail { None, Constant, PPower };

    std::vector<mpz_class> prefix;
    Tail tail = Tail::None;
    mpz_class tail_value = 0;  // Constant: e_n = v; PPower: e_n = v * p^{n - len}

    bool operator==(const ExplicitRule&) const = default;
};

using ExponentRule = std::variant<LinearRule, SubgroupRule, ExplicitRule>;

/// Unit coefficients u_n: an explicit prefix followed by a constant tail.
struct UnitRule {
    std::vector<FieldElement> prefix;
    FieldElement tail;

    static UnitRule constant(const FieldElement& u) { return {{}, u}; }
    bool operator==(const UnitRule&) const = default;
};

/// A finitely described r(X)-sequence {u_n r(X)^{e_n}} over a finite field of
/// characteristic p. The base must be irreducible and outside (X - 1).
class RSequenceSpec {
   public:
    RSequenceSpec(Poly base, UnitRule units, ExponentRule exponents);

    const Poly& base() const { return base_; }
    const UnitRule& units() const { return units_; }
    const ExponentRule& exponents() const { return exponents_; }
    long p() const { return base_.field()->characteristic(); }

    /// Index from which both the unit rule and the exponent rule have taken
    /// their symbolic tail form.
    long tail_start() const;

    bool can_materialize(long n) const;
    mpz_class exponent_at(long n) const;
    FieldElement unit_at(long n) const;
    /// u_n * r^{e_n} as a polynomial (use term_mod for large exponents).
    Poly term(long n) const;
    /// term(n) reduced modulo m, computed by modular exponentiation.
    Poly term_mod(long n, const Poly& m) const;

    /// For SubgroupRule: the stabilized subgroup order. For PPower tails: the
    /// tail coefficient. Otherwise nullopt.
    std::optional<mpz_class> stable_exponent_core() const;

   private:
    Poly base_;
    UnitRule units_;
    ExponentRule exponents_;
};

/// p-adic valuation of e >= 1.
mpz_class vp(const mpz_class& e, long p);

/// Instance check of the binomial valuation lemma: with p^z < e, if
/// p | C(e, p^t) for every 0 <= t <= z then v_p(e) >= z + 1. Returns
/// hypothesis => conclusion for the given instance.
bool binomial_lemma_check(const mpz_class& e, long p, long z);

enum class ClauseResult { Holds, Fails, Undecided };

struct ValuationClause {
    ClauseResult result;
    std::string reason;
    std::optional<long> witness_index;          // Fails: recurring index with
    std::optional<mpz_class> witness_valuation; // this bounded valuation
};

struct RootClause {
    FieldElement root;
    ClauseResult result;
    std::optional<long> witness_index;  // Fails: tail index with s_n(root) != s
};

struct ConvergenceVerdict {
    enum class Status { Converges, Diverges, Undecided };
    Status status;
    long undecided_depth;  // prefix bound reported with Undecided
    ValuationClause valuation;
    std::vector<RootClause> roots;
};

/// Exact convergence test of E to the unit s in the (q)-topology: the
/// valuation clause v_p(e_n) -> infinity and the evaluation clause
/// s_n(lambda) = s definitively at every root lambda of q inside F_{p^M}.
/// Both clauses are decided symbolically for symbolic rules; explicit rules
/// without a tail yield Undecided at the given prefix depth.
ConvergenceVerdict converges(const RSequenceSpec& E, const Poly& q, const FieldElement& s,
                             long M, long prefix = 8);

struct DirectCheck {
    bool consistent;
    long k, N;
    struct Violation {
        long j;  // depth with s_n - s outside (q)^j
        long n;  // term index
    };
    std::vector<Violation> violations;
};

/// Definition-level oracle: for each j <= k checks s_n - s in (q)^j across
/// the first N materializable terms (computed modulo q^k, which decides the
/// membership exactly). Consistent means no violation occurs in the second
/// half of the window; Refuted means some violation does.
DirectCheck converges_direct(const RSequenceSpec& E, const Poly& q, const FieldElement& s,
                             long k, long N);

/// Basic X-sequence {X^{f_n p^n}} realizing the subgroup generated by the
/// given nonzero elements of F_{p^M} as its limit-root set.
RSequenceSpec sequence_from_subgroup(const std::vector<FieldElement>& generators);

struct LimitSet {
    long truncation;                // M
    std::vector<Poly> ideals;       // minimal polynomials over the base field,
                                    // excluding (X) and (X - 1)
    std::vector<FieldElement> ell;  // roots in F_{p^M} where E -> 1
};

/// ell(E) inside the truncation F_{p^M} for a basic X-sequence, together with
/// the corresponding maximal ideals over the base coefficient field. Throws
/// NotBasic when convergence to 1 at (X - 1) fails or is undecided.
LimitSet limit_set(const RSequenceSpec& E, long M);

struct AttainableReport {
    long p, n_max;
    struct Realization {
        long n;               // |ell| realized
        long M;               // truncation used
        bool via_linear;      // n = 0 realized by the divergent staircase
        mpz_class subgroup_order;
    };
    std::vector<Realization> realized;
    std::vector<long> unrealized;  // values <= n_max no tested spec produced
};

/// Realizes every cardinality n <= n_max coprime to p through an explicit
/// subgroup sequence in the minimal truncation, realizes 0 through the
/// staircase, and reports positive multiples of p as unrealized by every
/// tested spec.
AttainableReport attainable_cardinalities(long p, long n_max);

}  // namespace golomb

#endif
