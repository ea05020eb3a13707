#include <doctest.h>

#include <set>

#include "golomb/error.hpp"
#include "golomb/fields.hpp"
#include "golomb/numutil.hpp"

using namespace golomb;

TEST_CASE("descriptor parsing and round trip") {
    for (const char* d : {"Fp:2", "Fp:7", "Fq:2^4", "Fq:3^2", "Q", "FpT:3"}) {
        FieldPtr F = Field::parse(d);
        CHECK(F->to_string() == d);
    }
    CHECK_THROWS_AS(Field::parse("Fq:6^2"), Error);  // 6 is not prime
    CHECK_THROWS_AS(Field::parse("Fp:91"), Error);
    CHECK_THROWS_AS(Field::parse("bogus"), Error);
}

TEST_CASE("canonical extension moduli are the least irreducibles") {
    CHECK(Field::extension(2, 2)->modulus() == fpx::Vec{1, 1, 1});     // X^2+X+1
    CHECK(Field::extension(2, 3)->modulus() == fpx::Vec{1, 0, 1, 1});  // X^3+X^2+1
    CHECK(Field::extension(3, 2)->modulus() == fpx::Vec{1, 0, 1});     // X^2+1
    CHECK_THROWS_AS(Field::extension(2, fpx::Vec{1, 0, 1}), Error);    // (X+1)^2
}

TEST_CASE("basic arithmetic per field kind") {
    auto F2 = Field::prime(2);
    CHECK((F2->one() + F2->one()).is_zero());

    auto F4 = Field::extension(2, 2);
    auto w = F4->generator();
    CHECK(w * w == w + F4->one());  // reduce X^2 mod X^2+X+1

    auto Q = Field::rationals();
    CHECK(Q->from_rational(mpq_class(1, 2)) + Q->from_rational(mpq_class(1, 3)) ==
          Q->from_rational(mpq_class(5, 6)));

    auto F5T = Field::rational_functions(5);
    auto T = F5T->generator();
    auto r = (T + F5T->one()) / (T * T);
    CHECK(r * (T * T) == T + F5T->one());
}

TEST_CASE("arithmetic error paths") {
    auto F2 = Field::prime(2);
    auto F3 = Field::prime(3);
    CHECK_THROWS_AS(field_arith(F2->one(), F3->one(), ArithOp::Add), Error);
    CHECK_THROWS_AS(field_arith(F2->one(), F2->zero(), ArithOp::Div), Error);
    CHECK_THROWS_AS(F2->zero().inverse(), Error);
}

TEST_CASE("element order") {
    auto F2 = Field::prime(2);
    CHECK(*element_order(F2->one()) == 1);

    auto F4 = Field::extension(2, 2);
    CHECK(*element_order(F4->generator()) == 3);

    auto Q = Field::rationals();
    CHECK(!element_order(Q->from_integer(2)).has_value());
    CHECK(*element_order(Q->from_integer(-1)) == 2);
    CHECK_THROWS_AS(element_order(Q->zero()), Error);
}

TEST_CASE("root-of-unity tests over infinite fields") {
    auto F5T = Field::rational_functions(5);
    CHECK_FALSE(is_root_of_unity(F5T->generator()));
    CHECK(is_root_of_unity(F5T->from_integer(3)));
    auto Q = Field::rationals();
    CHECK(is_root_of_unity(Q->from_integer(-1)));
    CHECK_FALSE(is_root_of_unity(Q->from_rational(mpq_class(1, 2))));
}

TEST_CASE("subgroup_of_order") {
    auto F16 = Field::extension(2, 4);
    CHECK(*element_order(subgroup_of_order(F16, 5)) == 5);

    auto F8 = Field::extension(2, 3);
    CHECK_THROWS_AS(subgroup_of_order(F8, 2), Error);  // 2 does not divide 7

    auto F4 = Field::extension(2, 2);
    CHECK(subgroup_of_order(F4, 3) == F4->generator());
}

TEST_CASE("enumeration") {
    auto F2 = Field::prime(2);
    FieldEnumeration e2(F2);
    CHECK(e2.size() == 2);
    CHECK(e2.at(0).is_zero());
    CHECK(e2.at(1).is_one());

    auto F4 = Field::extension(2, 2);
    FieldEnumeration e4(F4);
    CHECK(e4.size() == 4);
    std::set<FieldElement> all;
    for (mpz_class i = 0; i < 4; ++i) all.insert(e4.at(i));
    CHECK(all.size() == 4);

    CHECK_THROWS_AS(enumerate_field(Field::rationals()), Error);
}

TEST_CASE("finite multiplicative groups: a^(q-1) = 1 exhaustively for q <= 64") {
    for (auto [p, n] : std::vector<std::pair<long, long>>{
             {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
             {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2},
             {11, 1}, {13, 1}}) {
        FieldPtr F = Field::extension(p, n);
        FieldEnumeration en(F);
        mpz_class q = F->cardinality();
        for (mpz_class i = 1; i < en.size(); ++i) {
            FieldElement a = en.at(i);
            CHECK(a.pow(q - 1).is_one());
        }
    }
}

TEST_CASE("subgroup_of_order succeeds exactly on divisors of q-1 (q <= 64)") {
    for (auto [p, n] : std::vector<std::pair<long, long>>{{2, 4}, {2, 6}, {3, 3}, {5, 2}, {7, 2}}) {
        FieldPtr F = Field::extension(p, n);
        mpz_class units = F->cardinality() - 1;
        for (mpz_class d = 1; d <= units; ++d) {
            if (mpz_divisible_p(units.get_mpz_t(), d.get_mpz_t())) {
                CHECK(*element_order(subgroup_of_order(F, d)) == d);
            } else {
                CHECK_THROWS_AS(subgroup_of_order(F, d), Error);
            }
        }
    }
}

TEST_CASE("order of a product with trivially intersecting cyclic groups") {
    // <a> and <b> intersect trivially iff gcd(ord a, ord b) = 1 inside a
    // cyclic group; then ord(ab) = lcm divides lcm
    for (auto [p, n] : std::vector<std::pair<long, long>>{
             {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        FieldPtr F = Field::extension(p, n);
        FieldEnumeration en(F);
        for (mpz_class i = 1; i < en.size(); ++i) {
            for (mpz_class j = 1; j < en.size(); ++j) {
                FieldElement a = en.at(i), b = en.at(j);
                mpz_class oa = *element_order(a), ob = *element_order(b);
                mpz_class g, l;
                mpz_gcd(g.get_mpz_t(), oa.get_mpz_t(), ob.get_mpz_t());
                if (g != 1) continue;
                mpz_lcm(l.get_mpz_t(), oa.get_mpz_t(), ob.get_mpz_t());
                mpz_class oab = *element_order(a * b);
                CHECK(mpz_divisible_p(l.get_mpz_t(), oab.get_mpz_t()));
            }
        }
    }
}

TEST_CASE("root-of-unity agrees with order finiteness") {
    for (auto [p, n] : std::vector<std::pair<long, long>>{{2, 3}, {3, 2}, {5, 1}}) {
        FieldPtr F = Field::extension(p, n);
        FieldEnumeration en(F);
        for (mpz_class i = 1; i < en.size(); ++i) CHECK(is_root_of_unity(en.at(i)));
    }
    auto Q = Field::rationals();
    for (long num = -10; num <= 10; ++num) {
        for (long den = 1; den <= 10; ++den) {
            if (num == 0) continue;
            FieldElement a = Q->from_rational(mpq_class(num, den));
            CHECK(is_root_of_unity(a) == element_order(a).has_value());
            CHECK(is_root_of_unity(a) == (a == Q->one() || a == -Q->one()));
        }
    }
    auto F3T = Field::rational_functions(3);
    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        fpx::Vec num, den;
        for (int j = 0; j <= static_cast<int>(rng.below(5)); ++j)
            num.push_back(static_cast<long>(rng.below(3)));
        for (int j = 0; j <= static_cast<int>(rng.below(5)); ++j)
            den.push_back(static_cast<long>(rng.below(3)));
        fpx::trim(num);
        fpx::trim(den);
        if (num.empty() || den.empty()) continue;
        FieldElement a = F3T->from_fraction(num, den);
        CHECK(is_root_of_unity(a) == element_order(a).has_value());
    }
}

TEST_CASE("element parsing round trip") {
    auto F4 = Field::extension(2, 2);
    for (mpz_class i = 0; i < 4; ++i) {
        FieldElement a = FieldEnumeration(F4).at(i);
        CHECK(F4->parse_element(a.to_string()) == a);
    }
    auto F3T = Field::rational_functions(3);
    auto T = F3T->generator();
    FieldElement v = (T * T + F3T->from_integer(2)) / (T + F3T->one());
    CHECK(F3T->parse_element(v.to_string()) == v);
    auto Q = Field::rationals();
    CHECK(Q->parse_element("-5/6") == Q->from_rational(mpq_class(-5, 6)));
}

TEST_CASE("enumeration order is stable: last coordinate moves fastest") {
    auto F4 = Field::extension(2, 2);
    FieldEnumeration en(F4);
    CHECK(en.at(1) == F4->generator());           // (0,1) = w
    CHECK(en.at(2) == F4->one());                 // (1,0) = 1
    CHECK(en.at(3) == F4->one() + F4->generator());
}
