#include <doctest.h>

#include <set>

#include "golomb/error.hpp"
#include "golomb/numutil.hpp"
#include "golomb/poly.hpp"

using namespace golomb;

namespace {
Poly random_poly(const FieldPtr& F, long max_deg, Rng& rng) {
    FieldEnumeration en(F);
    std::uint64_t q = en.size().get_ui();
    std::vector<FieldElement> c;
    long d = static_cast<long>(rng.below(max_deg + 1));
    for (long i = 0; i <= d; ++i) c.push_back(en.at(rng.below(q)));
    return Poly(F, std::move(c));
}
}  // namespace

TEST_CASE("degree sentinel") {
    auto F2 = Field::prime(2);
    CHECK(Poly::zero(F2).degree().is_neg_infinity());
    CHECK_THROWS_AS(Poly::zero(F2).degree().value(), Error);
    CHECK(Degree::neg_infinity() < Degree(0));
    CHECK(Poly::one(F2).degree() == 0);
}

TEST_CASE("gcd and division examples") {
    auto F2 = Field::prime(2);
    CHECK(gcd(Poly::from_ints(F2, {1, 0, 1}), Poly::from_ints(F2, {1, 1})) ==
          Poly::from_ints(F2, {1, 1}));  // X^2+1 = (X+1)^2
    CHECK(gcd(Poly::X(F2), Poly::from_ints(F2, {1, 1})) == Poly::one(F2));

    auto Q = Field::rationals();
    auto [q, r] = Poly::from_ints(Q, {0, 0, 0, 1}).divrem(Poly::from_ints(Q, {-2, 1}));
    CHECK(q == Poly::from_ints(Q, {4, 2, 1}));
    CHECK(r == Poly::from_ints(Q, {8}));
    CHECK_THROWS_AS(Poly::one(Q).divrem(Poly::zero(Q)), Error);
}

TEST_CASE("formal derivative") {
    auto F5 = Field::prime(5);
    CHECK(Poly::monomial(F5, 5, F5->one()).derivative().is_zero());  // d/dX X^p = 0
    auto F2 = Field::prime(2);
    CHECK(Poly::from_ints(F2, {0, 1, 0, 1}).derivative() == Poly::from_ints(F2, {1, 0, 1}));
    auto Q = Field::rationals();
    CHECK(Poly::monomial(Q, 4, Q->one()).derivative(2) == Poly::from_ints(Q, {0, 0, 12}));
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    for (long p : {2L, 3L, 5L}) {
        FieldPtr F = Field::prime(p);
        Rng rng(0xD0 + p);
        for (int i = 0; i < 1000; ++i) {
            Poly a = random_poly(F, 8, rng), b = random_poly(F, 8, rng);
            CHECK((a + b).derivative() == a.derivative() + b.derivative());
            CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        }
    }
}

TEST_CASE("derivative of p-th powers vanishes") {
    for (long p : {2L, 3L}) {
        FieldPtr F = Field::prime(p);
        Rng rng(0xAB + p);
        for (int i = 0; i < 50; ++i) {
            Poly a = random_poly(F, 4, rng);
            if (a.is_zero()) continue;
            CHECK(a.pow(static_cast<unsigned long>(p)).derivative().is_zero());
        }
    }
}

TEST_CASE("evaluation, also at extension points") {
    auto F2 = Field::prime(2);
    auto F4 = Field::extension(2, 2);
    Poly f = Poly::from_ints(F2, {1, 1, 1});
    CHECK(f.evaluate(F4->generator()).is_zero());  // w^2+w+1 = 0
    CHECK(Poly::X(F2).evaluate(F2->zero()).is_zero());
    auto Q = Field::rationals();
    CHECK(Poly::from_ints(Q, {-2, 1}).evaluate(Q->from_integer(2)).is_zero());
}

TEST_CASE("irreducibility over finite fields") {
    auto F2 = Field::prime(2);
    auto F3 = Field::prime(3);
    CHECK(is_irreducible(Poly::from_ints(F2, {1, 1, 1})));
    CHECK(is_irreducible(Poly::from_ints(F3, {1, 0, 1})));
    CHECK_FALSE(is_irreducible(Poly::from_ints(F2, {1, 0, 1})));
    CHECK_THROWS_AS(is_irreducible(Poly::one(F2)), Error);
    CHECK_THROWS_AS(is_irreducible(Poly::zero(F2)), Error);
}

TEST_CASE("irreducibility over Q within the degree cap") {
    auto Q = Field::rationals();
    CHECK(is_irreducible(Poly::from_ints(Q, {1, 0, 1})));        // X^2+1
    CHECK_FALSE(is_irreducible(Poly::from_ints(Q, {-1, 0, 1})));  // (X-1)(X+1)
    CHECK(is_irreducible(Poly::from_ints(Q, {2, 0, 0, 1})));      // X^3+2 has no rational root
    CHECK_FALSE(is_irreducible(Poly::from_ints(Q, {-8, 0, 0, 1})));  // root 2
    // scaled coefficients: 2X^2 - 2 factors
    std::vector<FieldElement> c{Q->from_integer(-2), Q->zero(), Q->from_integer(2)};
    CHECK_FALSE(is_irreducible(Poly(Q, c)));
    CHECK_THROWS_AS(is_irreducible(Poly::monomial(Q, 4, Q->one()) + Poly::one(Q)), Error);
}

TEST_CASE("irreducibility over F_p(T) within the degree cap") {
    auto F5T = Field::rational_functions(5);
    auto T = F5T->generator();
    Poly y2_minus_t(F5T, {-T, F5T->zero(), F5T->one()});
    CHECK(is_irreducible(y2_minus_t));
    Poly y2_minus_t2(F5T, {-(T * T), F5T->zero(), F5T->one()});
    CHECK_FALSE(is_irreducible(y2_minus_t2));
    // a root with denominator: (Y - 1/T)(Y - T)
    FieldElement invT = F5T->one() / T;
    Poly with_fraction_root(F5T, {invT * T, -(invT + T), F5T->one()});
    CHECK_FALSE(is_irreducible(with_fraction_root));
    CHECK_THROWS_AS(is_irreducible(Poly::monomial(F5T, 3, F5T->one()) - Poly::constant(T)), Error);
}

TEST_CASE("factor examples") {
    auto F2 = Field::prime(2);
    FactoredPoly f1 = factor(Poly::from_ints(F2, {0, 1, 1}));  // X^2+X
    CHECK(f1.unit.is_one());
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].first == Poly::X(F2));
    CHECK(f1.factors[0].second == 1);
    CHECK(f1.factors[1].first == Poly::from_ints(F2, {1, 1}));

    FactoredPoly f2 = factor(Poly::from_ints(F2, {0, 0, 1, 0, 1}));  // X^4+X^2 = X^2 (X+1)^2
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0].second == 2);
    CHECK(f2.factors[1].second == 2);

    auto F3 = Field::prime(3);
    FactoredPoly f3 = factor(Poly::from_ints(F3, {2, 2}));  // 2X+2 = 2 (X+1)
    CHECK(f3.unit == F3->from_integer(2));
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].first == Poly::from_ints(F3, {1, 1}));

    CHECK_THROWS_AS(factor(Poly::zero(F2)), Error);
    CHECK_THROWS_AS(factor(Poly::X(Field::rationals())), Error);
}

TEST_CASE("factor reconstruction and irreducibility agreement, exhaustive to degree 6") {
    for (long p : {2L, 3L}) {
        FieldPtr F = Field::prime(p);
        for (long d = 1; d <= 6; ++d) {
            MonicEnumeration en(F, d);
            for (mpz_class i = 0; i < en.size(); ++i) {
                Poly a = en.at(i);
                FactoredPoly fac = factor(a, 17);
                CHECK(fac.reassemble() == a);
                for (const auto& [P, e] : fac.factors) {
                    (void)e;
                    CHECK(P.is_monic());
                    CHECK(is_irreducible(P));
                }
                bool shape = fac.factors.size() == 1 && fac.factors[0].second == 1 &&
                             fac.unit.is_one();
                CHECK(shape == is_irreducible(a));
            }
        }
    }
}

TEST_CASE("factorization is deterministic in the seed") {
    auto F3 = Field::prime(3);
    Poly a = Poly::from_ints(F3, {1, 2, 0, 1, 1, 2, 1});
    FactoredPoly f1 = factor(a, 42), f2 = factor(a, 42), f3 = factor(a, 43);
    CHECK(f1.factors == f2.factors);
    CHECK(f1.reassemble() == f3.reassemble());
}

TEST_CASE("extended gcd certificate") {
    for (long p : {2L, 5L}) {
        FieldPtr F = Field::prime(p);
        Rng rng(0xE6 + p);
        for (int i = 0; i < 200; ++i) {
            Poly a = random_poly(F, 6, rng), b = random_poly(F, 6, rng);
            PolyExtGcd e = ext_gcd(a, b);
            CHECK(e.s * a + e.t * b == e.g);
            if (!a.is_zero()) CHECK(e.g.divides(a));
            if (!b.is_zero()) CHECK(e.g.divides(b));
        }
    }
}

TEST_CASE("enumerate_monic") {
    auto F2 = Field::prime(2);
    MonicEnumeration e1(F2, 1);
    CHECK(e1.size() == 2);
    CHECK(e1.at(0) == Poly::X(F2));
    CHECK(e1.at(1) == Poly::from_ints(F2, {1, 1}));
    CHECK(MonicEnumeration(F2, 2).size() == 4);
    auto F3 = Field::prime(3);
    MonicEnumeration e0(F3, 0);
    CHECK(e0.size() == 1);
    CHECK(e0.at(0) == Poly::one(F3));
    CHECK_THROWS_AS(enumerate_monic(Field::rationals(), 2), Error);
}

TEST_CASE("roots in extensions") {
    auto F2 = Field::prime(2);
    Poly f = Poly::from_ints(F2, {1, 1, 1});
    CHECK(roots_in_extension(f, 2).size() == 2);  // the two elements of order 3
    CHECK(roots_in_extension(f, 3).empty());      // F_8 has no cube roots of 1 but 1
    auto roots1 = roots_in_extension(Poly::X(F2), 1);
    REQUIRE(roots1.size() == 1);
    CHECK(roots1[0].is_zero());
    CHECK_THROWS_AS(roots_in_extension(Poly::X(Field::extension(2, 2)), 3), Error);
}

TEST_CASE("roots grow monotonically along subfield towers") {
    auto F2 = Field::prime(2);
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        Poly a = random_poly(F2, 6, rng);
        if (a.is_zero() || a.is_constant()) continue;
        for (auto [M1, M2] : std::vector<std::pair<long, long>>{{1, 2}, {2, 4}, {1, 3}, {3, 6}}) {
            auto r1 = roots_in_extension(a, M1);
            auto r2 = roots_in_extension(a, M2);
            FieldPtr big = Field::extension(2, M2);
            std::set<FieldElement> bigset(r2.begin(), r2.end());
            for (const auto& r : r1) CHECK(bigset.count(embed(r, big)) == 1);
        }
    }
}

TEST_CASE("embeddings respect arithmetic") {
    auto F4 = Field::extension(2, 2);
    auto F16 = Field::extension(2, 4);
    FieldEnumeration en(F4);
    for (mpz_class i = 0; i < 4; ++i) {
        for (mpz_class j = 0; j < 4; ++j) {
            FieldElement a = en.at(i), b = en.at(j);
            CHECK(embed(a + b, F16) == embed(a, F16) + embed(b, F16));
            CHECK(embed(a * b, F16) == embed(a, F16) * embed(b, F16));
        }
    }
    CHECK_THROWS_AS(embed(F4->generator(), Field::extension(2, 3)), Error);
}

TEST_CASE("polynomial printing and parsing") {
    auto F3 = Field::prime(3);
    Poly a = Poly::parse(F3, "X^3 + 2*X + 1");
    CHECK(a == Poly::from_ints(F3, {1, 2, 0, 1}));
    CHECK(Poly::parse(F3, a.to_string()) == a);
    CHECK(Poly::parse(F3, "X^2 - X") == Poly::from_ints(F3, {0, 2, 1}));

    auto F4 = Field::extension(2, 2);
    Poly b(F4, {F4->generator(), F4->one() + F4->generator()});
    CHECK(Poly::parse(F4, b.to_string()) == b);

    auto Q = Field::rationals();
    Poly c = Poly::parse(Q, "X^2 + (-3/2)*X + 1/2");
    CHECK(c.coeff(1) == Q->from_rational(mpq_class(-3, 2)));
    CHECK(Poly::parse(Q, c.to_string()) == c);
    CHECK_THROWS_AS(Poly::parse(Q, ""), Error);
    CHECK_THROWS_AS(Poly::parse(Q, "X^^2"), Error);
}

TEST_CASE("affine substitution") {
    auto F5 = Field::prime(5);
    Poly a = Poly::from_ints(F5, {1, 2, 3});
    FieldElement alpha = F5->from_integer(2), beta = F5->from_integer(3);
    Poly sub = a.substitute_affine(alpha, beta);
    FieldEnumeration en(F5);
    for (mpz_class i = 0; i < 5; ++i) {
        FieldElement x = en.at(i);
        CHECK(sub.evaluate(x) == a.evaluate(alpha * x + beta));
    }
}
