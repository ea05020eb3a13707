#include <doctest.h>

#include "golomb/error.hpp"
#include "golomb/numutil.hpp"
#include "golomb/topology.hpp"

using namespace golomb;

TEST_CASE("coset construction") {
    auto F2 = Field::prime(2);
    auto F3 = Field::prime(3);
    CHECK_NOTHROW(CoprimeCoset::make(Poly::one(F2), Poly::from_ints(F2, {0, 0, 1})));
    CHECK_THROWS_AS(CoprimeCoset::make(Poly::X(F2), Poly::from_ints(F2, {0, 0, 1})), Error);
    CHECK_THROWS_AS(CoprimeCoset::make(Poly::zero(F2), Poly::X(F2)), Error);
    CHECK_THROWS_AS(CoprimeCoset::make(Poly::one(F2), Poly::one(F2)), Error);
    CHECK_NOTHROW(CoprimeCoset::make(Poly::from_ints(F3, {1, 1}), Poly::X(F3)));
    // modulus is monic-normalized
    CoprimeCoset c = CoprimeCoset::make(Poly::one(F3), Poly::from_ints(F3, {2, 0, 2}));
    CHECK(c.modulus().is_monic());
}

TEST_CASE("closure formula examples") {
    auto F2 = Field::prime(2);
    CoprimeCoset C1 = CoprimeCoset::make(Poly::one(F2), Poly::from_ints(F2, {0, 1, 1}));
    CHECK(golomb_closure_contains(Poly::X(F2), C1));  // X in P_X and X = 1 mod X+1
    CoprimeCoset C2 = CoprimeCoset::make(Poly::one(F2), Poly::from_ints(F2, {0, 0, 1}));
    CHECK_FALSE(golomb_closure_contains(Poly::from_ints(F2, {1, 1}), C2));
    CHECK(golomb_closure_contains(C2.center(), C2));  // the coset is inside its closure
    CHECK_THROWS_AS(golomb_closure_contains(Poly::zero(F2), C2), Error);
    auto Q = Field::rationals();
    CHECK_THROWS_AS(
        golomb_closure_contains(Poly::one(Q),
                                CoprimeCoset::make(Poly::one(Q), Poly::X(Q))),
        Error);
}

TEST_CASE("brute-force closure oracle examples") {
    auto F2 = Field::prime(2);
    CoprimeCoset C = CoprimeCoset::make(Poly::one(F2), Poly::from_ints(F2, {0, 0, 1}));
    BruteForceResult r = golomb_closure_bruteforce(Poly::from_ints(F2, {1, 1}), C, 2);
    CHECK_FALSE(r.consistent);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == Poly::from_ints(F2, {0, 0, 1}));  // X^2 itself refutes

    CHECK(golomb_closure_bruteforce(C.center(), C, 4).consistent);
    CoprimeCoset C1 = CoprimeCoset::make(Poly::one(F2), Poly::from_ints(F2, {0, 1, 1}));
    CHECK(golomb_closure_bruteforce(Poly::X(F2), C1, 3).consistent);
}

TEST_CASE("coset intersection with CRT witness") {
    auto F2 = Field::prime(2);
    CosetIntersection r = cosets_intersect(Poly::one(F2), Poly::X(F2),
                                           Poly::X(F2), Poly::from_ints(F2, {1, 1}));
    CHECK(r.intersects);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == Poly::one(F2));

    // same modulus, distinct residues (not Golomb-open, still answerable)
    CHECK_FALSE(cosets_intersect(Poly::one(F2), Poly::X(F2), Poly::X(F2), Poly::X(F2)).intersects);

    CoprimeCoset C = CoprimeCoset::make(Poly::one(F2), Poly::from_ints(F2, {0, 1, 1}));
    CosetIntersection self = cosets_intersect(C, C);
    CHECK(self.intersects);
    CHECK(C.contains(*self.witness));
}

TEST_CASE("orbit closure in the (f)-topology, per depth") {
    auto F2 = Field::prime(2);
    Poly g = Poly::X(F2), f = Poly::from_ints(F2, {1, 1});
    ClosureVerdict v = ptop_orbit_closure(Poly::one(F2), g, f, 2);
    CHECK(v.status == ClosureVerdict::Status::InUpToDepth);
    REQUIRE(v.witnesses.size() == 2);
    CHECK(v.witnesses[0].m == 1);
    CHECK(v.witnesses[0].u.is_one());
    CHECK(v.witnesses[1].m == 2);  // X^2 = 1 mod (X+1)^2
    CHECK(v.witnesses[1].u.is_one());
    CHECK(verify_closure_verdict(Poly::one(F2), g, f, v));

    // lambda inside the orbit is syntactically In
    ClosureVerdict in = ptop_orbit_closure(g, g, f, 3);
    CHECK(in.status == ClosureVerdict::Status::In);
    CHECK(in.witnesses.size() == 3);
    CHECK(verify_closure_verdict(g, g, f, in));

    auto Q = Field::rationals();
    CHECK_THROWS_AS(
        ptop_orbit_closure(Poly::one(Q), Poly::X(Q), Poly::from_ints(Q, {-2, 1}), 2), Error);
    CHECK_THROWS_AS(ptop_orbit_closure(Poly::one(F2), g, g, 2), Error);
}

TEST_CASE("orbit closure rejects and certifies NotIn") {
    // over F_3, powers of X mod (X+1) take values (-1)^m, so lambda with
    // lambda(-1) = 0 forbidden; pick lambda = X+2: lambda(-1) = 1, reachable;
    // go deeper to find genuine NotIn cases instead: X+2 mod (X+1)^2
    auto F3 = Field::prime(3);
    Poly g = Poly::X(F3), f = Poly::from_ints(F3, {1, 1});
    Poly lambda = Poly::from_ints(F3, {2, 1});
    ClosureVerdict v = ptop_orbit_closure(lambda, g, f, 4);
    if (v.status == ClosureVerdict::Status::NotIn) {
        CHECK(v.failing_residue.has_value());
        CHECK(verify_closure_verdict(lambda, g, f, v));
        // monotonicity: deeper runs stay NotIn at the same first failing depth
        ClosureVerdict v2 = ptop_orbit_closure(lambda, g, f, v.depth + 2);
        CHECK(v2.status == ClosureVerdict::Status::NotIn);
        CHECK(v2.depth == v.depth);
    } else {
        CHECK(verify_closure_verdict(lambda, g, f, v));
    }
}

TEST_CASE("NotIn monotonicity on a sweep") {
    auto F2 = Field::prime(2);
    Poly g = Poly::from_ints(F2, {1, 1});       // X+1
    Poly f = Poly::from_ints(F2, {1, 1, 1});    // X^2+X+1
    for (long d0 = 0; d0 <= 3; ++d0) {
        MonicEnumeration en(F2, d0);
        for (mpz_class i = 0; i < en.size(); ++i) {
            Poly lambda = en.at(i);
            if (lambda.is_zero() || gcd(lambda, f).degree() != 0) continue;
            ClosureVerdict v = ptop_orbit_closure(lambda, g, f, 3);
            CHECK(verify_closure_verdict(lambda, g, f, v));
            if (v.status == ClosureVerdict::Status::NotIn) {
                for (long deeper = v.depth + 1; deeper <= v.depth + 2; ++deeper) {
                    ClosureVerdict vd = ptop_orbit_closure(lambda, g, f, deeper);
                    CHECK(vd.status == ClosureVerdict::Status::NotIn);
                    CHECK(vd.depth == v.depth);
                }
            }
        }
    }
}

TEST_CASE("frobenius witnesses") {
    auto F2 = Field::prime(2);
    FrobeniusWitness w1 = frobenius_witness(Poly::from_ints(F2, {1, 1}), F2->zero(), 2);
    CHECK(w1.m == 2);
    CHECK(w1.u.is_one());

    auto F3 = Field::prime(3);
    FrobeniusWitness w2 = frobenius_witness(Poly::X(F3), F3->one(), 3);
    CHECK(w2.m == 3);
    CHECK(w2.u.is_one());

    FrobeniusWitness w3 = frobenius_witness(Poly::from_ints(F3, {1, 0, 1}), F3->one(), 1);
    CHECK(w3.m == 1);
    CHECK(w3.u == Poly::from_ints(F3, {1, 0, 1}).evaluate(F3->one()).inverse());

    CHECK_THROWS_AS(frobenius_witness(Poly::X(F2), F2->zero(), 1), Error);  // g(a) = 0
    CHECK_THROWS_AS(frobenius_witness(Poly::X(Field::rationals()),
                                      Field::rationals()->one(), 2),
                    Error);
}

TEST_CASE("closure contains its coset, exhaustively to degree 5") {
    for (long p : {2L, 3L}) {
        FieldPtr F = Field::prime(p);
        Rng rng(0x51 + p);
        MonicEnumeration moduli(F, 3);
        for (int pick = 0; pick < 6; ++pick) {
            Poly b = moduli.at(rng.below(moduli.size().get_ui()));
            // sample a coprime center
            Poly x = Poly::zero(F);
            while (x.is_zero() || gcd(x, b).degree() != 0) {
                MonicEnumeration cen(F, rng.below(3));
                FieldEnumeration units(F);
                x = cen.at(rng.below(cen.size().get_ui())) *
                    Poly::constant(units.at(1 + rng.below(units.size().get_ui() - 1)));
            }
            CoprimeCoset C = CoprimeCoset::make(x, b);
            for (long dz = 0; dz <= 5; ++dz) {
                MonicEnumeration zs(F, dz);
                for (mpz_class i = 0; i < zs.size(); ++i) {
                    Poly z = x + b * zs.at(i);
                    CHECK(golomb_closure_contains(z, C));
                }
            }
        }
    }
}

TEST_CASE("unit trace of closures: units meet the closure only inside the coset") {
    for (long p : {2L, 3L}) {
        FieldPtr F = Field::prime(p);
        Rng rng(0x6A + p);
        for (int pick = 0; pick < 10; ++pick) {
            MonicEnumeration moduli(F, 1 + rng.below(3));
            Poly b = moduli.at(rng.below(moduli.size().get_ui()));
            Poly x = Poly::zero(F);
            while (x.is_zero() || gcd(x, b).degree() != 0) {
                MonicEnumeration cen(F, rng.below(2));
                FieldEnumeration units(F);
                x = cen.at(rng.below(cen.size().get_ui())) *
                    Poly::constant(units.at(1 + rng.below(units.size().get_ui() - 1)));
            }
            CoprimeCoset C = CoprimeCoset::make(x, b);
            FieldEnumeration units(F);
            for (mpz_class l = 1; l < units.size(); ++l) {
                Poly u = Poly::constant(units.at(l));
                CHECK(golomb_closure_contains(u, C) == C.contains(u));
            }
        }
    }
}

TEST_CASE("intersection matches pointwise residue agreement on random pairs") {
    for (long p : {2L, 3L}) {
        FieldPtr F = Field::prime(p);
        Rng rng(0xC47 + p);
        MonicEnumeration b2(F, 2);
        for (int i = 0; i < 200; ++i) {
            Poly b1m = b2.at(rng.below(b2.size().get_ui()));
            Poly b2m = b2.at(rng.below(b2.size().get_ui()));
            MonicEnumeration xs(F, rng.below(2));
            Poly x1 = xs.at(rng.below(xs.size().get_ui()));
            Poly x2 = xs.at(rng.below(xs.size().get_ui()));
            CosetIntersection r = cosets_intersect(x1, b1m, x2, b2m);
            // oracle: scan representatives z = x1 + b1 t over small t
            bool found = false;
            for (long dt = 0; dt <= 4 && !found; ++dt) {
                MonicEnumeration ts(F, dt);
                FieldEnumeration un(F);
                for (mpz_class it = 0; it < ts.size() && !found; ++it) {
                    for (mpz_class l = 0; l < un.size() && !found; ++l) {
                        Poly z = x1 + b1m * ts.at(it) * Poly::constant(un.at(l));
                        if (((z - x2) % b2m).is_zero()) found = true;
                    }
                }
            }
            CHECK(r.intersects == found);
            if (r.intersects) {
                CHECK(((*r.witness - x1) % b1m).is_zero());
                CHECK(((*r.witness - x2) % b2m).is_zero());
            }
        }
    }
}
