#include "golomb/sequences.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "golomb/error.hpp"
#include "golomb/numutil.hpp"

namespace golomb {

namespace {

mpz_class subgroup_order_of(const std::vector<FieldElement>& gens, std::size_t count) {
    // finite subgroups of F* are cyclic, so the generated order is the lcm
    mpz_class f = 1;
    for (std::size_t i = 0; i < count && i < gens.size(); ++i) {
        mpz_class o = *element_order(gens[i]);
        mpz_lcm(f.get_mpz_t(), f.get_mpz_t(), o.get_mpz_t());
    }
    return f;
}

mpz_class pow_int(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

}  // namespace

RSequenceSpec::RSequenceSpec(Poly base, UnitRule units, ExponentRule exponents)
    : base_(std::move(base)), units_(std::move(units)), exponents_(std::move(exponents)) {
    const FieldPtr& F = base_.field();
    if (!F->finite())
        throw Error(Err::UnsupportedField, "r(X)-sequences live over finite fields");
    if (!is_irreducible(base_))
        throw Error(Err::PreconditionViolated, "sequence base must be irreducible");
    // bases inside (X - 1) have no convergence convention; reject them
    if (base_.degree() == 1 && base_.evaluate(F->one()).is_zero())
        throw Error(Err::PreconditionViolated, "base r(X) lies in (X - 1)");
    if (units_.tail.is_zero())
        throw Error(Err::ZeroElement, "unit tail must be a nonzero constant");
    for (const auto& u : units_.prefix)
        if (u.is_zero()) throw Error(Err::ZeroElement, "unit prefix entries must be nonzero");
    if (const auto* sub = std::get_if<SubgroupRule>(&exponents_)) {
        if (sub->generators.empty())
            throw Error(Err::ZeroGenerator, "subgroup rule needs at least one generator");
        for (const auto& h : sub->generators) {
            if (h.is_zero()) throw Error(Err::ZeroGenerator, "subgroup generators must be nonzero");
            if (!h.field()->finite())
                throw Error(Err::UnsupportedField, "subgroup generators must be finite-field elements");
            if (h.field()->characteristic() != F->characteristic())
                throw Error(Err::MixedFields, "generator characteristic differs from the base's");
        }
    }
    if (const auto* ex = std::get_if<ExplicitRule>(&exponents_)) {
        for (const auto& e : ex->prefix)
            if (e < 1) throw Error(Err::ZeroArgument, "exponents must be >= 1");
        if (ex->tail != ExplicitRule::Tail::None && ex->tail_value < 1)
            throw Error(Err::ZeroArgument, "tail exponent value must be >= 1");
    }
}

long RSequenceSpec::tail_start() const {
    long unit_len = static_cast<long>(units_.prefix.size());
    long exp_len = 0;
    if (const auto* sub = std::get_if<SubgroupRule>(&exponents_))
        exp_len = static_cast<long>(sub->generators.size()) - 1;
    else if (const auto* ex = std::get_if<ExplicitRule>(&exponents_))
        exp_len = static_cast<long>(ex->prefix.size());
    return std::max({unit_len, exp_len, 0L});
}

bool RSequenceSpec::can_materialize(long n) const {
    if (n < 0) return false;
    if (const auto* ex = std::get_if<ExplicitRule>(&exponents_)) {
        if (ex->tail == ExplicitRule::Tail::None)
            return n < static_cast<long>(ex->prefix.size());
    }
    return true;
}

mpz_class RSequenceSpec::exponent_at(long n) const {
    if (n < 0) throw Error(Err::ZeroArgument, "term index must be >= 0");
    if (std::holds_alternative<LinearRule>(exponents_)) return mpz_class(n + 1);
    if (const auto* sub = std::get_if<SubgroupRule>(&exponents_)) {
        mpz_class f = subgroup_order_of(sub->generators, static_cast<std::size_t>(n) + 1);
        return f * pow_int(p(), n);
    }
    const auto& ex = std::get<ExplicitRule>(exponents_);
    long len = static_cast<long>(ex.prefix.size());
    if (n < len) return ex.prefix[n];
    switch (ex.tail) {
        case ExplicitRule::Tail::Constant: return ex.tail_value;
        case ExplicitRule::Tail::PPower: return ex.tail_value * pow_int(p(), n - len);
        case ExplicitRule::Tail::None:
            throw Error(Err::PreconditionViolated,
                        "explicit spec has no tail rule beyond its prefix");
    }
    throw Error(Err::PreconditionViolated, "bad tail kind");
}

FieldElement RSequenceSpec::unit_at(long n) const {
    if (n < 0) throw Error(Err::ZeroArgument, "term index must be >= 0");
    if (n < static_cast<long>(units_.prefix.size())) return units_.prefix[n];
    return units_.tail;
}

Poly RSequenceSpec::term(long n) const {
    mpz_class e = exponent_at(n);
    if (!e.fits_ulong_p())
        throw Error(Err::PreconditionViolated, "term exponent too large to materialize");
    return base_.pow(e.get_ui()) * unit_at(n);
}

Poly RSequenceSpec::term_mod(long n, const Poly& m) const {
    Poly b = embed_poly(base_, m.field());
    return (b.pow_mod(exponent_at(n), m) * Poly::constant(embed(unit_at(n), m.field()))) % m;
}

std::optional<mpz_class> RSequenceSpec::stable_exponent_core() const {
    if (const auto* sub = std::get_if<SubgroupRule>(&exponents_))
        return subgroup_order_of(sub->generators, sub->generators.size());
    if (const auto* ex = std::get_if<ExplicitRule>(&exponents_))
        if (ex->tail == ExplicitRule::Tail::PPower) return ex->tail_value;
    return std::nullopt;
}

mpz_class vp(const mpz_class& e, long p) {
    if (!is_prime(mpz_class(p))) throw Error(Err::PreconditionViolated, "p must be prime");
    return mpz_class(padic_valuation(e, mpz_class(p)));
}

bool binomial_lemma_check(const mpz_class& e, long p, long z) {
    if (z < 0) throw Error(Err::ZeroArgument, "z must be >= 0");
    mpz_class pz = pow_int(p, z);
    if (pz >= e) throw Error(Err::PreconditionViolated, "needs p^z < e");
    bool hypothesis = true;
    mpz_class pt = 1;
    for (long t = 0; t <= z && hypothesis; ++t) {
        mpz_class binom;
        if (!pt.fits_ulong_p())
            throw Error(Err::PreconditionViolated, "p^t too large for exact binomials");
        mpz_bin_ui(binom.get_mpz_t(), e.get_mpz_t(), pt.get_ui());
        if (!mpz_divisible_ui_p(binom.get_mpz_t(), p)) hypothesis = false;
        pt *= p;
    }
    if (!hypothesis) return true;  // vacuous
    return vp(e, p) >= z + 1;
}

// --- convergence criterion --------------------------------------------------

namespace {

ValuationClause decide_valuation(const RSequenceSpec& E) {
    long p = E.p();
    if (std::holds_alternative<LinearRule>(E.exponents())) {
        // e_n = n + 1 keeps hitting valuation 0
        long n = E.tail_start();
        while ((n + 1) % p == 0) ++n;
        return {ClauseResult::Fails, "e_n = n + 1 has v_p = 0 at infinitely many indices", n,
                mpz_class(0)};
    }
    if (std::holds_alternative<SubgroupRule>(E.exponents()))
        return {ClauseResult::Holds, "e_n = f_n p^n gives v_p(e_n) >= n", std::nullopt,
                std::nullopt};
    const auto& ex = std::get<ExplicitRule>(E.exponents());
    switch (ex.tail) {
        case ExplicitRule::Tail::Constant: {
            long n = static_cast<long>(ex.prefix.size());
            return {ClauseResult::Fails, "constant exponent tail pins v_p(e_n)", n,
                    vp(ex.tail_value, p)};
        }
        case ExplicitRule::Tail::PPower:
            return {ClauseResult::Holds, "v_p(e_n) grows by one per step along the tail",
                    std::nullopt, std::nullopt};
        case ExplicitRule::Tail::None:
            return {ClauseResult::Undecided, "no tail rule: valuation known only on the prefix",
                    std::nullopt, std::nullopt};
    }
    throw Error(Err::PreconditionViolated, "bad tail kind");
}

// Decides "u_n rho^{e_n} = s definitively" for the symbolic tails. The tail
// value sequence is purely periodic (multiplication by p is invertible on
// exponents mod ord(rho)), so definitively-constant means constant, which
// collapses to closed conditions on sigma = rho^{core}.
ClauseResult decide_eval_at(const RSequenceSpec& E, const FieldElement& rho,
                            const FieldElement& u, const FieldElement& s,
                            std::optional<long>* witness) {
    long p = E.p();
    const FieldPtr& EM = rho.field();
    // walks the tail values incrementally (one cheap step per index) until
    // one misses s; tail values are purely periodic, so a failing clause
    // yields a witness within one period (capped for pathological orders)
    auto scan_witness = [&](const FieldElement& first,
                            auto step) -> std::optional<long> {
        long n0 = E.tail_start();
        FieldElement val = first;
        for (long n = n0; n <= n0 + 1000000; ++n) {
            if (u * val != s) return n;
            val = step(val);
        }
        return std::nullopt;
    };
    bool holds;
    std::optional<long> found;
    if (std::holds_alternative<LinearRule>(E.exponents())) {
        holds = rho.is_one() && u == s;
        if (!holds && witness)
            found = scan_witness(rho.pow(E.tail_start() + 1),
                                 [&](const FieldElement& v) { return v * rho; });
    } else if (const auto* ex = std::get_if<ExplicitRule>(&E.exponents());
               ex && ex->tail == ExplicitRule::Tail::Constant) {
        holds = u * rho.pow(ex->tail_value) == s;
        if (!holds && witness) found = E.tail_start();  // the tail is constant
    } else if (auto core = E.stable_exponent_core()) {
        // tail terms are u sigma^{p^j}; constant iff sigma^p = sigma and u sigma = s
        FieldElement sigma = rho.pow(*core);
        holds = sigma.pow(p - 1).is_one() && u * sigma == s;
        if (!holds && witness) {
            mpz_class e0 = E.exponent_at(E.tail_start());
            found = scan_witness(rho.pow(e0),
                                 [&](const FieldElement& v) { return v.pow(p); });
        }
    } else {
        return ClauseResult::Undecided;
    }
    if (holds) return ClauseResult::Holds;
    if (witness) *witness = found;
    return ClauseResult::Fails;
}

}  // namespace

ConvergenceVerdict converges(const RSequenceSpec& E, const Poly& q, const FieldElement& s,
                             long M, long prefix) {
    const FieldPtr& Kq = q.field();
    if (!Kq->finite()) throw Error(Err::UnsupportedField, "convergence runs over finite fields");
    if (s.is_zero()) throw Error(Err::ZeroElement, "limit s must be a nonzero constant");
    if (!s.field()->same(*Kq)) throw Error(Err::MixedFields, "s must live in q's field");
    if (!is_irreducible(q)) throw Error(Err::PreconditionViolated, "q must be irreducible");
    Poly base_q = embed_poly(E.base(), Kq);
    if (gcd(q, base_q).degree() != 0)
        throw Error(Err::NotCoprime, "q must be coprime to the sequence base");

    std::vector<FieldElement> roots = roots_in_extension(q, M);
    if (static_cast<long>(roots.size()) != q.degree().value())
        throw Error(Err::RootsNotInTruncation,
                    "q does not split in F_{p^" + std::to_string(M) + "}");

    ConvergenceVerdict out{ConvergenceVerdict::Status::Undecided, prefix, decide_valuation(E), {}};
    const FieldPtr& EM = roots.empty() ? Kq : roots.front().field();
    FieldElement sM = embed(s, EM);
    FieldElement uM = embed(E.units().tail, EM);

    bool all_hold = out.valuation.result == ClauseResult::Holds;
    bool any_fails = out.valuation.result == ClauseResult::Fails;
    for (const auto& lambda : roots) {
        FieldElement rho = embed_poly(E.base(), EM).evaluate(lambda);
        RootClause rc{lambda, ClauseResult::Undecided, std::nullopt};
        rc.result = decide_eval_at(E, rho, uM, sM, &rc.witness_index);
        all_hold = all_hold && rc.result == ClauseResult::Holds;
        any_fails = any_fails || rc.result == ClauseResult::Fails;
        out.roots.push_back(std::move(rc));
    }
    if (any_fails)
        out.status = ConvergenceVerdict::Status::Diverges;
    else if (all_hold)
        out.status = ConvergenceVerdict::Status::Converges;
    return out;
}

DirectCheck converges_direct(const RSequenceSpec& E, const Poly& q, const FieldElement& s,
                             long k, long N) {
    const FieldPtr& Kq = q.field();
    if (k < 0 || N < 0) throw Error(Err::ZeroArgument, "window must be nonnegative");
    DirectCheck out{true, k, N, {}};
    if (k == 0 || N == 0) return out;
    Poly qk = q.pow(static_cast<unsigned long>(k));
    Poly sP = Poly::constant(embed(s, Kq));
    for (long n = 0; n < N && E.can_materialize(n); ++n) {
        Poly t = E.term_mod(n, qk);
        Poly diff = t - sP;
        for (long j = 1; j <= k; ++j) {
            if (!(diff % q.pow(static_cast<unsigned long>(j))).is_zero())
                out.violations.push_back({j, n});
        }
    }
    for (const auto& v : out.violations)
        if (v.n >= N / 2) out.consistent = false;
    return out;
}

RSequenceSpec sequence_from_subgroup(const std::vector<FieldElement>& generators) {
    if (generators.empty()) throw Error(Err::ZeroGenerator, "need at least one generator");
    for (const auto& h : generators)
        if (h.is_zero()) throw Error(Err::ZeroGenerator, "generators must be nonzero");
    FieldPtr Fp = Field::prime(generators.front().field()->characteristic());
    return RSequenceSpec(Poly::X(Fp), UnitRule::constant(Fp->one()),
                         SubgroupRule{generators});
}

// --- limit sets -------------------------------------------------------------

namespace {

constexpr long kExhaustiveScanBound = 1 << 16;

// Minimal polynomial over K of an element of E_M, as the product over the
// Frobenius orbit; coefficients are pulled back along the embedding.
Poly minimal_poly_over(const FieldPtr& K, const FieldElement& lambda,
                       const std::vector<FieldElement>& orbit) {
    const FieldPtr& EM = lambda.field();
    Poly prod = Poly::one(EM);
    for (const auto& mu : orbit) prod = prod * Poly(EM, {-mu, EM->one()});
    if (EM->same(*K)) return prod;
    std::vector<FieldElement> down;
    for (const auto& c : prod.coeffs()) {
        if (K->kind() == FieldKind::Prime) {
            const fpx::Vec& v = c.ext_coeffs();
            if (fpx::deg(v) > 0)
                throw Error(Err::PreconditionViolated,
                            "internal: orbit product left the prime field");
            down.push_back(K->from_integer(v.empty() ? 0 : v[0]));
        } else {
            // small base fields only: invert the embedding by lookup
            FieldEnumeration en(K);
            bool found = false;
            for (mpz_class i = 0; i < en.size(); ++i) {
                FieldElement cand = en.at(i);
                if (embed(cand, EM) == c) {
                    down.push_back(cand);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw Error(Err::PreconditionViolated,
                            "internal: orbit product left the base field");
        }
    }
    return Poly(K, std::move(down));
}

}  // namespace

LimitSet limit_set(const RSequenceSpec& E, long M) {
    const FieldPtr& K = E.base().field();
    if (E.base() != Poly::X(K))
        throw Error(Err::PreconditionViolated, "limit_set needs a basic X-sequence");
    long p = K->characteristic();
    long j = K->extension_degree();
    if (M < 1 || M % j != 0)
        throw Error(Err::IncompatibleExtension, "truncation must be a multiple of the base degree");

    // basic = converges to 1 in the (X - 1)-topology
    Poly x_minus_1 = Poly(K, {-K->one(), K->one()});
    ConvergenceVerdict basic = converges(E, x_minus_1, K->one(), j);
    if (basic.status != ConvergenceVerdict::Status::Converges)
        throw Error(Err::NotBasic, basic.status == ConvergenceVerdict::Status::Diverges
                                       ? "sequence diverges in the (X - 1)-topology"
                                       : "convergence at (X - 1) is undecided");

    FieldPtr EM = (M == j) ? K : Field::extension(p, M);
    mpz_class qM = EM->cardinality();
    FieldElement one_M = EM->one();
    std::vector<FieldElement> ell;

    bool trivial_units = E.units().tail.is_one();
    auto core = E.stable_exponent_core();
    if (qM <= kExhaustiveScanBound) {
        FieldEnumeration en(EM);
        for (mpz_class i = 1; i < en.size(); ++i) {
            FieldElement lambda = en.at(i);
            if (decide_eval_at(E, lambda, embed(E.units().tail, EM), one_M, nullptr) ==
                ClauseResult::Holds)
                ell.push_back(lambda);
        }
    } else if (trivial_units && core) {
        // ell = {lambda : lambda^core = 1}, the subgroup of order gcd(core, q - 1)
        mpz_class d;
        mpz_class units = qM - 1;
        mpz_gcd(d.get_mpz_t(), core->get_mpz_t(), units.get_mpz_t());
        FieldElement g = subgroup_of_order(EM, d);
        FieldElement acc = one_M;
        for (mpz_class i = 0; i < d; ++i) {
            ell.push_back(acc);
            acc = acc * g;
        }
        std::sort(ell.begin(), ell.end());
    } else {
        throw Error(Err::PreconditionViolated,
                    "truncation too large for an explicit scan with nontrivial unit tails");
    }

    // group ell \ {1} into Frobenius orbits over K and collect minimal polys
    LimitSet out{M, {}, ell};
    std::set<FieldElement> pending(ell.begin(), ell.end());
    pending.erase(one_M);
    mpz_class qK = K->cardinality();
    while (!pending.empty()) {
        FieldElement lambda = *pending.begin();
        std::vector<FieldElement> orbit;
        FieldElement mu = lambda;
        do {
            orbit.push_back(mu);
            pending.erase(mu);
            mu = mu.pow(qK);
        } while (mu != lambda);
        out.ideals.push_back(minimal_poly_over(K, lambda, orbit));
    }
    std::sort(out.ideals.begin(), out.ideals.end());
    return out;
}

AttainableReport attainable_cardinalities(long p, long n_max) {
    if (n_max < 1) throw Error(Err::ZeroArgument, "n_max must be >= 1");
    AttainableReport out{p, n_max, {}, {}};
    FieldPtr Fp = Field::prime(p);

    // 0 comes from the staircase: its valuation clause fails for every q at
    // once, so no P-topology sees a limit
    RSequenceSpec staircase(Poly::X(Fp), UnitRule::constant(Fp->one()), LinearRule{});
    Poly x_minus_1 = Poly(Fp, {-Fp->one(), Fp->one()});
    ConvergenceVerdict cv = converges(staircase, x_minus_1, Fp->one(), 1);
    if (cv.status != ConvergenceVerdict::Status::Diverges ||
        cv.valuation.result != ClauseResult::Fails)
        throw Error(Err::PreconditionViolated, "internal: staircase failed to diverge");
    out.realized.push_back({0, 1, true, 0});

    std::set<long> seen_cardinalities{0};
    for (long n = 1; n <= n_max; ++n) {
        if (n % p == 0) continue;
        long M = (n == 1) ? 1 : mpz_class(order_mod(mpz_class(p), mpz_class(n))).get_si();
        FieldPtr F = Field::extension(p, M);
        FieldElement g = subgroup_of_order(F, n);
        RSequenceSpec E = sequence_from_subgroup({g});
        LimitSet ls = limit_set(E, M);
        if (static_cast<long>(ls.ell.size()) != n)
            throw Error(Err::PreconditionViolated,
                        "internal: subgroup sequence realized the wrong cardinality");
        out.realized.push_back({n, M, false, mpz_class(n)});
        seen_cardinalities.insert(n);
    }
    for (long n = 1; n <= n_max; ++n)
        if (n % p == 0 && !seen_cardinalities.count(n)) out.unrealized.push_back(n);
    return out;
}

}  // namespace golomb
