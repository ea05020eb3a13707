#include "golomb/invariants.hpp"

#include <algorithm>
#include <set>

#include "golomb/error.hpp"
#include "golomb/numutil.hpp"

namespace golomb {

GnClass gn_membership(const Poly& a, std::uint64_t seed) {
    if (a.is_zero()) throw Error(Err::ZeroPolynomial, "0 has no prime support");
    if (!a.field()->finite())
        throw Error(Err::UnsupportedField, "support classification needs a finite field");
    FactoredPoly fac = factor(a, seed);
    GnClass out{static_cast<long>(fac.factors.size()), {}};
    for (const auto& [P, e] : fac.factors) {
        (void)e;
        out.support.push_back(P);
    }
    return out;
}

AlmostPrimeResult almost_prime_search(const CoprimeCoset& C, long deg_bound) {
    const FieldPtr& F = C.center().field();
    if (!F->finite())
        throw Error(Err::UnsupportedField, "irreducible search needs a finite field");
    Poly r0 = C.center() % C.modulus();
    long db = C.modulus().degree().value();
    for (long d = 1; d <= deg_bound; ++d) {
        if (d < db) {
            if (r0.degree() == d && r0.is_monic() && is_irreducible(r0)) return {r0, deg_bound};
            continue;
        }
        MonicEnumeration en(F, d - db);
        for (mpz_class i = 0; i < en.size(); ++i) {
            Poly cand = r0 + C.modulus() * en.at(i);
            if (is_irreducible(cand)) return {cand, deg_bound};
        }
    }
    return {std::nullopt, deg_bound};
}

namespace {

// order of the unit group (K[X]/(b))^*
mpz_class unit_group_order(const Poly& b, std::uint64_t seed) {
    mpz_class q = b.field()->cardinality();
    mpz_class N = 1;
    for (const auto& [P, e] : factor(b, seed).factors) {
        mpz_class qd;
        mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), P.degree().value());
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), qd.get_mpz_t(), e - 1);
        N *= (qd - 1) * pe;
    }
    return N;
}

// multiplicative order of a modulo b, gcd(a, b) = 1, b nonconstant
mpz_class order_mod_poly(const Poly& a, const Poly& b, std::uint64_t seed = 1) {
    mpz_class ord = unit_group_order(b, seed);
    for (const auto& [pf, e] : factor_integer(ord)) {
        (void)e;
        while (mpz_divisible_p(ord.get_mpz_t(), pf.get_mpz_t())) {
            mpz_class cand = ord / pf;
            if ((a.pow_mod(cand, b) % b == Poly::one(a.field()) % b))
                ord = cand;
            else
                break;
        }
    }
    return ord;
}

}  // namespace

mpz_class isolated_point_witness(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) throw Error(Err::ZeroPolynomial, "inputs must be nonzero");
    if (!a.field()->finite())
        throw Error(Err::UnsupportedField, "isolated-point witness needs a finite field");
    if (gcd(a, b).degree() != 0) throw Error(Err::NotCoprime, "a and b must be coprime");
    mpz_class k = 1;
    if (b.degree() > 0) k = order_mod_poly(a, b);
    if (!k.fits_ulong_p())
        throw Error(Err::SearchExhausted, "order too large to materialize the witness");
    Poly diff = a.pow(k.get_ui() + 1) - a;
    if (!(b.degree() == 0) && !(diff % b).is_zero())
        throw Error(Err::PreconditionViolated, "internal: isolated-point certificate failed");
    return k;
}

ChainWitness closure_chain_witness(const Poly& a, const Poly& b, long n, std::uint64_t seed) {
    const FieldPtr& F0 = a.field();
    if (!F0->finite()) throw Error(Err::UnsupportedField, "chain witness needs a finite field");
    if (a.is_zero()) throw Error(Err::ZeroPolynomial, "a must be nonzero");
    if (b.degree() < 1) throw Error(Err::ConstantPolynomial, "b must be nonconstant");
    if (gcd(a, b).degree() != 0) throw Error(Err::NotCoprime, "a and b must be coprime");

    long p = F0->characteristic();
    long n0 = F0->extension_degree();
    for (long grow = 1; grow <= 8; ++grow) {
        FieldPtr F = (grow == 1) ? F0 : Field::extension(p, n0 * grow);
        Poly aj = embed_poly(a, F), bj = embed_poly(b, F);
        long m = aj.is_constant() ? 0 : gn_membership(aj, seed).n;
        if (m > n)
            throw Error(Err::SearchExhausted,
                        "a splits into more than n primes over the truncation");
        long r = n - m;
        std::vector<FieldElement> ts;
        FieldEnumeration en(F);
        for (mpz_class i = 0; i < en.size() && static_cast<long>(ts.size()) < r; ++i) {
            FieldElement t = en.at(i);
            if (!aj.evaluate(t).is_zero() && !bj.evaluate(t).is_zero()) ts.push_back(t);
        }
        if (static_cast<long>(ts.size()) < r) continue;  // enlarge the truncation

        ChainWitness out{aj, aj, bj, n, m, {}};
        for (const auto& t : ts) {
            Poly lin(F, {-t, F->one()});
            mpz_class k = order_mod_poly(lin, bj);
            if (!k.fits_ulong_p())
                throw Error(Err::SearchExhausted, "tail order too large to materialize");
            out.tails.emplace_back(t, k);
            out.A = out.A * lin.pow(k.get_ui());
        }
        if (gn_membership(out.A, seed).n != n || !((out.A - aj) % bj).is_zero())
            throw Error(Err::PreconditionViolated, "internal: chain witness failed its checks");
        return out;
    }
    throw Error(Err::SearchExhausted, "no truncation offered enough evaluation points");
}

namespace {

// q in (z + bR) with exactly n_target primes, all coprime to p_elem
std::optional<Poly> search_gn_in_coset(const Poly& z, const Poly& b, long n_target,
                                       const Poly& p_elem, long degree_bound,
                                       std::uint64_t seed) {
    const FieldPtr& F = z.field();
    mpz_class q = F->cardinality();
    Poly z0 = z % b;
    auto check = [&](const Poly& cand) -> bool {
        if (cand.is_zero() || cand.is_constant()) return false;
        if (gcd(cand, p_elem).degree() != 0) return false;
        return gn_membership(cand, seed).n == n_target;
    };
    if (check(z0)) return z0;
    FieldEnumeration en(F);
    for (long dt = 0; dt <= degree_bound; ++dt) {
        MonicEnumeration mt(F, dt);
        for (mpz_class i = 0; i < mt.size(); ++i) {
            Poly base = mt.at(i);
            for (mpz_class l = 1; l < q; ++l) {  // all leading coefficients
                Poly cand = z0 + b * base * Poly::constant(en.at(l));
                if (check(cand)) return cand;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

NonRegularityWitness nonregularity_witness(const Poly& p_elem, const Poly& x, const Poly& b,
                                           long n, long search_degree_bound,
                                           std::uint64_t seed) {
    const FieldPtr& F = p_elem.field();
    if (!F->finite()) throw Error(Err::UnsupportedField, "needs a finite field");
    if (n < 2) throw Error(Err::ZeroArgument, "n must be >= 2");
    if (gcd(x, b).degree() != 0) throw Error(Err::NotCoprime, "x and b must be coprime");
    GnClass pcls = gn_membership(p_elem, seed);
    if (pcls.n != 1) throw Error(Err::PreconditionViolated, "p_elem must lie in G_1");
    if (!((x - Poly::one(F)) % p_elem).is_zero())
        throw Error(Err::PreconditionViolated, "x must lie in 1 + p_elem K[X]");
    const Poly& P = pcls.support.front();  // radical of p_elem

    NonRegularityWitness out{Poly::zero(F), Poly::zero(F), p_elem, x, b, Poly::zero(F), false, n};
    std::optional<Poly> q;
    if (((x + b) % p_elem).is_zero()) {
        // x + b = p_elem * y: points of p_elem(y + bR) stay inside x + bR
        out.divisible_branch = true;
        Poly y = (x + b) / p_elem;
        out.helper = y;
        q = search_gn_in_coset(y, b, n - 1, p_elem, search_degree_bound, seed);
    } else {
        // strip the p-part of b, solve p z = x mod b', pull z back to 1 mod P
        Poly bprime = b;
        while ((bprime % P).is_zero()) bprime = bprime / P;
        Poly z0 = bprime.degree() > 0
                      ? (p_elem.inverse_mod(bprime) * x) % bprime
                      : Poly::one(F);
        CosetIntersection crt = cosets_intersect(z0, bprime, Poly::one(F), P);
        if (!crt.intersects)
            throw Error(Err::PreconditionViolated, "internal: CRT for z cannot fail");
        out.helper = *crt.witness;
        q = search_gn_in_coset(out.helper, b, n - 1, p_elem, search_degree_bound, seed);
    }
    if (!q) throw Error(Err::SearchExhausted, "no G_{n-1} member found in the coset");
    out.q = *q;
    out.pq = p_elem * out.q;

    // replay all three certificates through independent operations
    bool c1 = golomb_closure_contains(out.pq, CoprimeCoset::make(x, b), seed);
    bool c2 = gn_membership(out.pq, seed).n == n;
    bool c3 = !((out.pq - Poly::one(F)) % p_elem).is_zero();
    if (!c1 || !c2 || !c3)
        throw Error(Err::PreconditionViolated, "internal: nonregularity certificates failed");
    return out;
}

ObstructionReport sep_closed_obstruction_coset(const FieldPtr& F, const Poly& center, long d,
                                               long k_bound, long degree_slack) {
    if (!F->finite()) throw Error(Err::UnsupportedField, "needs a finite field");
    long p = F->characteristic();
    ObstructionReport out{center, d, k_bound, std::nullopt, {}};

    Poly modulus = Poly::monomial(F, d, F->one());
    CoprimeCoset C = CoprimeCoset::make(center, modulus);
    out.irreducible_member = almost_prime_search(C, d + degree_slack).witness;

    // u (X - a)^k = center mod X^d: low coefficients are u C(k,j) (-a)^{k-j};
    // the constant u is forced by the first nonzero coefficient of (X - a)^k
    FieldEnumeration en(F);
    for (mpz_class ia = 0; ia < en.size(); ++ia) {
        FieldElement a = en.at(ia);
        for (long k = 1; k <= k_bound; ++k) {
            std::vector<FieldElement> low(d, F->zero());
            for (long j = 0; j < d && j <= k; ++j) {
                long binom = binomial_mod_p(mpz_class(k), mpz_class(j), p);
                low[j] = F->from_integer(binom) * (-a).pow(k - j);
            }
            Poly v(F, std::move(low));
            if (v.is_zero()) continue;  // center is nonzero mod X^d
            long j0 = 0;
            while (v.coeff(j0).is_zero()) ++j0;
            if (center.coeff(j0).is_zero()) continue;
            FieldElement u = center.coeff(j0) / v.coeff(j0);
            bool match = true;
            for (long j = 0; j < d && match; ++j)
                if (u * v.coeff(j) != center.coeff(j)) match = false;
            if (match) out.members.push_back({u, a, k});
        }
    }
    return out;
}

ObstructionReport sep_closed_obstruction(long p, long M, long k_bound) {
    FieldPtr F = Field::extension(p, M);
    Poly center = (p == 2) ? Poly::from_ints(F, {1, 1, 0, 1})  // 1 + X + X^3 mod X^4
                           : Poly::from_ints(F, {1, 0, 1});    // 1 + X^2 mod X^3
    return sep_closed_obstruction_coset(F, center, p == 2 ? 4 : 3, k_bound);
}

long power_separation_witness(const Poly& b, const Poly& c) {
    const FieldPtr& F = b.field();
    if (!F->finite()) throw Error(Err::UnsupportedField, "needs a finite field");
    if (b.degree() < 1) throw Error(Err::ConstantPolynomial, "b must be a nonunit");
    if (c.is_zero()) throw Error(Err::ZeroPolynomial, "c must be nonzero");

    // c in <b> means c = u b^s with a unit left after stripping all b's
    {
        Poly t = c;
        long s = 0;
        while (!t.is_constant() && (t % b).is_zero()) {
            t = t / b;
            ++s;
        }
        if (t.is_constant() && s >= 1) throw Error(Err::InOrbit, "c is a unit multiple of a power of b");
    }
    if (factor(b).radical() != factor(c).radical())
        throw Error(Err::RadicalMismatch, "b and c must share their radical");

    long db = b.degree().value(), dc = c.degree().value();
    // degree function d(x) = 2^{deg x}: find t with 2^{t db} > 2^{(t-1) db} + 2^{dc} + 1
    long t = 1;
    auto inequality_holds = [&](long tt) {
        mpz_class lhs, mid, low;
        mpz_ui_pow_ui(lhs.get_mpz_t(), 2, tt * db);
        mpz_ui_pow_ui(mid.get_mpz_t(), 2, (tt - 1) * db);
        mpz_ui_pow_ui(low.get_mpz_t(), 2, dc);
        return lhs > mid + low + 1;
    };
    while (!inequality_holds(t)) ++t;

    // exhaustive disjointness check, escalating t as a safety net
    FieldEnumeration en(F);
    for (;; ++t) {
        Poly modulus = b.pow(static_cast<unsigned long>(t)) - Poly::one(F);
        bool collision = false;
        for (long s = 0; s < t && !collision; ++s) {
            Poly bs = b.pow(static_cast<unsigned long>(s));
            for (mpz_class iu = 1; iu < en.size() && !collision; ++iu) {
                Poly cand = bs * Poly::constant(en.at(iu));
                if (((c - cand) % modulus).is_zero()) collision = true;
            }
        }
        if (!collision) return t;
    }
}

DiscreteVerdict discreteness_decider(const Poly& g, const DiscretenessOptions& opt) {
    const FieldPtr& F = g.field();
    if (F->characteristic() == 0)
        throw Error(Err::UnsupportedField, "decider needs a characteristic-p backend");
    if (g.degree() < 1) throw Error(Err::ConstantPolynomial, "g must be nonconstant");

    if (F->finite()) {
        // <g> is never discrete over an algebraic extension of F_p; produce
        // the explicit exponent witness
        Poly lambda = opt.lambda.value_or(g);
        {
            Poly t = lambda;
            long s = 0;
            while (!t.is_constant() && (t % g).is_zero()) {
                t = t / g;
                ++s;
            }
            if (!(t.is_constant() && s >= 1))
                throw Error(Err::PreconditionViolated, "lambda must lie in <g>");
        }
        Poly f = Poly::zero(F);
        if (opt.f) {
            f = *opt.f;
        } else {
            for (long d = 1; f.is_zero(); ++d) {
                MonicEnumeration en(F, d);
                for (mpz_class i = 0; i < en.size(); ++i) {
                    Poly cand = en.at(i);
                    if (is_irreducible(cand) && gcd(cand, g).degree() == 0) {
                        f = cand;
                        break;
                    }
                }
            }
        }
        if (gcd(f, lambda).degree() != 0)
            throw Error(Err::NotCoprime, "modulus must be coprime to lambda");
        long n = F->extension_degree();
        long d = f.degree().value();
        mpz_class q;
        mpz_ui_pow_ui(q.get_mpz_t(), F->characteristic(), n * d);
        mpz_class e = q * (q - 1) + 1;  // q' = q: irreducible moduli have simple roots
        Poly pw = lambda.pow_mod(e, f);
        if (pw != lambda % f)
            throw Error(Err::PreconditionViolated, "internal: exponent witness failed");
        return {DiscreteVerdict::Kind::NotDiscrete, lambda, f, e,
                std::nullopt, std::nullopt, std::nullopt};
    }

    // F_p(T): a value pair with non-torsion ratio certifies discreteness
    long p = F->characteristic();
    std::vector<FieldElement> box;
    for (long dd = 0; dd <= opt.box_degree; ++dd) {
        MonicEnumeration dens(Field::prime(p), dd);
        for (mpz_class i = 0; i < dens.size(); ++i) {
            fpx::Vec den;
            for (const auto& cc : dens.at(i).coeffs()) den.push_back(cc.prime_residue());
            mpz_class count;
            mpz_ui_pow_ui(count.get_mpz_t(), p, opt.box_degree + 1);
            for (mpz_class k = 0; k < count; ++k) {
                fpx::Vec num;
                mpz_class r = k;
                for (long j = 0; j <= opt.box_degree; ++j) {
                    num.push_back(mpz_class(r % p).get_si());
                    r /= p;
                }
                fpx::trim(num);
                box.push_back(F->from_fraction(num, den));
            }
        }
    }
    std::optional<FieldElement> s1;
    for (const auto& cand1 : box) {
        if (g.evaluate(cand1).is_zero()) continue;
        if (!s1) {
            s1 = cand1;
            continue;
        }
        FieldElement v1 = g.evaluate(*s1), v2 = g.evaluate(cand1);
        FieldElement ratio = v1 / v2;
        if (!is_root_of_unity(ratio))
            return {DiscreteVerdict::Kind::Discrete, std::nullopt, std::nullopt, std::nullopt,
                    s1, cand1, ratio};
    }
    return {DiscreteVerdict::Kind::Unknown, std::nullopt, std::nullopt, std::nullopt,
            std::nullopt, std::nullopt, std::nullopt};
}

CharZeroVerdict char_zero_obstruction(const Poly& lambda, const Poly& f, long depth_n,
                                      long m_max) {
    const FieldPtr& F = lambda.field();
    if (F->kind() != FieldKind::Rationals)
        throw Error(Err::UnsupportedField, "the derivative obstruction runs over Q");
    if (f.degree() != 1)
        throw Error(Err::UnsupportedDegree, "only linear moduli carry concrete certificates");
    mpq_class alpha = -(f.coeff(0) / f.leading()).rational();
    if (alpha == 0) throw Error(Err::PreconditionViolated, "f must be coprime to X");
    FieldElement alpha_e = F->from_rational(alpha);
    if (lambda.evaluate(alpha_e).is_zero())
        throw Error(Err::PreconditionViolated, "lambda must be coprime to f");
    {
        long nonzero = 0, top = -1;
        for (long i = 0; i <= lambda.degree().value(); ++i)
            if (!lambda.coeff(i).is_zero()) {
                ++nonzero;
                top = i;
            }
        if (nonzero == 1 && top >= 1)
            throw Error(Err::PreconditionViolated, "lambda already lies in <X>");
    }
    if (depth_n <= lambda.degree().value() + 1)
        throw Error(Err::PreconditionViolated, "depth must exceed deg(lambda) + 1");

    CharZeroVerdict out{CharZeroVerdict::Status::NotInClosure, depth_n, m_max, {}, false};
    if (m_max < depth_n - 1) {
        out.status = CharZeroVerdict::Status::Inconclusive;
        return out;
    }
    for (long m = 1; m <= m_max; ++m) {
        // u is forced by evaluation at alpha; then f^n | lambda - u X^m would
        // need alpha to be a zero of order >= n
        mpq_class u = lambda.evaluate(alpha_e).rational() / alpha_e.pow(m).rational();
        Poly h = lambda - Poly::monomial(F, m, F->from_rational(u));
        if (h.is_zero())
            throw Error(Err::PreconditionViolated, "internal: lambda in <X> slipped through");
        CharZeroRefutation ref{m, u, false, 0, mpq_class(0)};
        if (h.degree().value() < depth_n) {
            ref.degree_bound = true;  // deg h < n < n deg f
        } else {
            Poly d = h;
            long j = 0;
            while (d.evaluate(alpha_e).is_zero()) {
                d = d.derivative();
                ++j;
                if (j >= depth_n)
                    throw Error(Err::PreconditionViolated,
                                "internal: vanishing to depth n is impossible here");
            }
            ref.derivative_order = j;
            ref.derivative_value = d.evaluate(alpha_e).rational();
        }
        out.refutations.push_back(std::move(ref));
    }
    out.symbolic_tail = true;  // m > m_max >= n-1: the (deg lambda + 1)-th
                               // derivative of u X^m has its only zero at 0
    return out;
}

FieldFingerprint fingerprint(const FieldPtr& F, long order_bound, long n_max) {
    FieldFingerprint fp{F->to_string(), F->characteristic(), Algebraicity::NotApplicable,
                        {},          0,
                        {},          n_max};
    fp.order_bound = order_bound;
    switch (F->kind()) {
        case FieldKind::Prime:
        case FieldKind::Extension: {
            // the decider always produces an orbit-accumulation witness here
            DiscreteVerdict dv = discreteness_decider(Poly::X(F));
            if (dv.kind != DiscreteVerdict::Kind::NotDiscrete)
                throw Error(Err::SearchExhausted,
                            "could not certify algebraicity of a finite field");
            fp.algebraic_over_prime_field = Algebraicity::Yes;
            for (const auto& d : divisors(F->cardinality() - 1))
                if (d <= order_bound) fp.unit_orders.push_back(d);
            break;
        }
        case FieldKind::Rationals: {
            fp.algebraic_over_prime_field = Algebraicity::NotApplicable;
            if (order_bound >= 1) fp.unit_orders.push_back(1);
            if (order_bound >= 2) fp.unit_orders.push_back(2);
            break;
        }
        case FieldKind::RationalFunctions: {
            DiscreteVerdict dv = discreteness_decider(Poly::X(F));
            if (dv.kind != DiscreteVerdict::Kind::Discrete)
                throw Error(Err::SearchExhausted,
                            "could not certify transcendence of the function field");
            fp.algebraic_over_prime_field = Algebraicity::No;
            // torsion units are the constants F_p*
            for (const auto& d : divisors(mpz_class(F->characteristic() - 1)))
                if (d <= order_bound) fp.unit_orders.push_back(d);
            break;
        }
    }
    if (F->characteristic() > 0) {
        AttainableReport rep = attainable_cardinalities(F->characteristic(), n_max);
        for (const auto& r : rep.realized) fp.attainable.push_back(r.n);
        std::sort(fp.attainable.begin(), fp.attainable.end());
    }
    return fp;
}

BatteryResult battery(const FieldPtr& F1, const FieldPtr& F2, long order_bound, long n_max) {
    BatteryResult out{false, {}, fingerprint(F1, order_bound, n_max),
                      fingerprint(F2, order_bound, n_max)};
    const auto& a = out.fp1;
    const auto& b = out.fp2;
    if (a.characteristic != b.characteristic) out.separating.push_back("characteristic");
    if (a.characteristic > 0 && b.characteristic > 0 &&
        a.algebraic_over_prime_field != b.algebraic_over_prime_field)
        out.separating.push_back("algebraicity");
    if (a.unit_orders != b.unit_orders) out.separating.push_back("unit_orders");
    if (a.characteristic > 0 && b.characteristic > 0 && a.attainable != b.attainable)
        out.separating.push_back("attainable_limits");
    out.separated = !out.separating.empty();
    return out;
}

}  // namespace golomb
