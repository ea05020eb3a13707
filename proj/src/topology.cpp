#include "golomb/topology.hpp"

#include <map>

#include "golomb/error.hpp"

namespace golomb {

PrincipalIdeal PrincipalIdeal::of(const Poly& g) {
    return PrincipalIdeal{g.monic()};
}

CoprimeCoset CoprimeCoset::make(const Poly& x, const Poly& b) {
    if (x.is_zero()) throw Error(Err::ZeroCenter, "coset center must be nonzero");
    if (b.degree() < 1)
        throw Error(Err::ConstantPolynomial, "coset modulus must be nonconstant");
    Poly bm = b.monic();
    if (gcd(x, bm).degree() != 0)
        throw Error(Err::NotCoprime,
                    "gcd(" + x.to_string() + ", " + b.to_string() + ") is nonconstant");
    return CoprimeCoset(x, bm);
}

bool CoprimeCoset::contains(const Poly& y) const {
    return ((y - center_) % modulus_).is_zero();
}

bool golomb_closure_contains(const Poly& y, const CoprimeCoset& C, std::uint64_t seed) {
    if (y.is_zero()) throw Error(Err::ZeroPolynomial, "closure membership of zero");
    if (!y.field()->finite())
        throw Error(Err::UnsupportedField, "closure formula needs a factorable modulus");
    FactoredPoly fac = factor(C.modulus(), seed);
    for (const auto& [P, e] : fac.factors) {
        if (P.divides(y)) continue;
        Poly Pe = P.pow(e);
        if (((y - C.center()) % Pe).is_zero()) continue;
        return false;
    }
    return true;
}

BruteForceResult golomb_closure_bruteforce(const Poly& y, const CoprimeCoset& C, long D) {
    if (y.is_zero()) throw Error(Err::ZeroPolynomial, "closure membership of zero");
    const FieldPtr& F = y.field();
    for (long d = 1; d <= D; ++d) {
        MonicEnumeration en(F, d);
        for (mpz_class i = 0; i < en.size(); ++i) {
            Poly c = en.at(i);
            if (gcd(c, y).degree() != 0) continue;  // y + cR is not a neighborhood of y
            Poly g = gcd(c, C.modulus());
            if (!((y - C.center()) % g).is_zero()) return {false, D, c};
        }
    }
    return {true, D, std::nullopt};
}

CosetIntersection cosets_intersect(const Poly& x1, const Poly& b1, const Poly& x2,
                                   const Poly& b2) {
    if (b1.is_zero() || b2.is_zero())
        throw Error(Err::ZeroPolynomial, "coset modulus must be nonzero");
    PolyExtGcd e = ext_gcd(b1, b2);
    if (!((x1 - x2) % e.g).is_zero()) return {false, std::nullopt};
    // z = x1 + b1 * s * (x2 - x1)/g solves both congruences
    Poly diff = (x2 - x1) / e.g;
    Poly lcm = ((b1 * b2) / e.g).monic();
    Poly z = (x1 + b1 * e.s * diff) % lcm;
    if (z.is_zero()) z = lcm;
    if (!((z - x1) % b1).is_zero() || !((z - x2) % b2).is_zero())
        throw Error(Err::PreconditionViolated, "internal: CRT witness failed to verify");
    return {true, z};
}

CosetIntersection cosets_intersect(const CoprimeCoset& C1, const CoprimeCoset& C2) {
    return cosets_intersect(C1.center(), C1.modulus(), C2.center(), C2.modulus());
}

ClosureVerdict ptop_orbit_closure(const Poly& lambda, const Poly& g, const Poly& f,
                                  long depth) {
    const FieldPtr& F = lambda.field();
    if (!F->finite())
        throw Error(Err::UnsupportedField,
                    "ptop_orbit_closure runs over finite fields; see the characteristic-0 "
                    "obstruction for Q");
    if (depth < 1) throw Error(Err::ZeroArgument, "depth must be >= 1");
    if (g.degree() < 1 || f.degree() < 1)
        throw Error(Err::ConstantPolynomial, "g and f must be nonconstant");
    if (gcd(f, g).degree() != 0) throw Error(Err::NotCoprime, "f and g must be coprime");
    if (gcd(lambda, f).degree() != 0)
        throw Error(Err::NotCoprime, "lambda must avoid the prime ideal (f)");

    ClosureVerdict out{ClosureVerdict::Status::InUpToDepth, depth, {}, std::nullopt};

    // syntactic membership lambda = u g^m ends the search: In at every depth
    {
        Poly t = lambda;
        mpz_class m = 0;
        while (!t.is_constant() && (t % g).is_zero()) {
            t = t / g;
            ++m;
        }
        if (t.is_constant() && m >= 1) {
            out.status = ClosureVerdict::Status::In;
            for (long k = 1; k <= depth; ++k) out.witnesses.push_back({k, m, t.coeff(0)});
            return out;
        }
    }

    for (long k = 1; k <= depth; ++k) {
        Poly fk = f.pow(static_cast<unsigned long>(k));
        Poly lam_k = lambda % fk;
        // distinct residues of g^m mod f^k; powers are eventually periodic,
        // so the map fills once and the loop stops at the first repeat
        std::map<Poly, mpz_class> seen;
        Poly r = g % fk;
        mpz_class m = 1;
        std::optional<OrbitWitness> found;
        while (seen.find(r) == seen.end()) {
            seen.emplace(r, m);
            // u g^m = lambda mod f^k iff lambda * (g^m)^{-1} reduces to a unit
            Poly ratio = (lam_k * r.inverse_mod(fk)) % fk;
            if (ratio.is_unit()) {
                found = OrbitWitness{k, m, ratio.coeff(0)};
                break;
            }
            r = (r * g) % fk;
            ++m;
        }
        if (!found) {
            out.status = ClosureVerdict::Status::NotIn;
            out.depth = k;
            out.witnesses.clear();
            out.failing_residue = lam_k;
            return out;
        }
        out.witnesses.push_back(*found);
    }
    return out;
}

bool verify_closure_verdict(const Poly& lambda, const Poly& g, const Poly& f,
                            const ClosureVerdict& v) {
    if (v.status == ClosureVerdict::Status::NotIn) {
        // recompute S_k at the failing depth and confirm absence
        ClosureVerdict again = ptop_orbit_closure(lambda, g, f, v.depth);
        return again.status == ClosureVerdict::Status::NotIn && again.depth == v.depth &&
               again.failing_residue == v.failing_residue;
    }
    if (v.witnesses.size() != static_cast<std::size_t>(v.depth)) return false;
    for (const auto& w : v.witnesses) {
        if (w.m < 1 || w.u.is_zero()) return false;
        Poly fk = f.pow(static_cast<unsigned long>(w.depth));
        Poly gm = g.pow_mod(w.m, fk);
        Poly h = (lambda - gm * Poly::constant(w.u)) % fk;
        if (!h.is_zero()) return false;
    }
    return true;
}

FrobeniusWitness frobenius_witness(const Poly& g, const FieldElement& a, long k) {
    const FieldPtr& F = g.field();
    if (F->characteristic() == 0)
        throw Error(Err::UnsupportedField, "frobenius witness needs characteristic p > 0");
    if (k < 1) throw Error(Err::ZeroArgument, "depth k must be >= 1");
    FieldElement ga = g.evaluate(a);
    if (ga.is_zero()) throw Error(Err::BadEvaluation, "g(a) = 0: X - a is not coprime to g");

    long p = F->characteristic();
    mpz_class m = 1;
    while (m < k) m *= p;
    if (!m.fits_ulong_p())
        throw Error(Err::SearchExhausted, "p-power exponent too large to materialize");
    FieldElement u = ga.pow(-m);

    // (X - a)^k divides 1 - u g^m because X - a divides 1 - g/g(a)
    Poly gm = g.pow(m.get_ui());
    Poly h = Poly::one(F) - gm * Poly::constant(u);
    Poly fa = Poly(F, {-a, F->one()});
    Poly fk = fa.pow(static_cast<unsigned long>(k));
    if (!(h % fk).is_zero())
        throw Error(Err::PreconditionViolated, "internal: frobenius witness failed its check");
    return {m, u, k};
}

}  // namespace golomb
