#include <doctest.h>

#include <set>

#include "golomb/error.hpp"
#include "golomb/json_io.hpp"
#include "golomb/numutil.hpp"
#include "golomb/sequences.hpp"

using namespace golomb;

TEST_CASE("p-adic valuation") {
    CHECK(vp(12, 2) == 2);
    CHECK(vp(7, 7) == 1);
    CHECK(vp(1, 5) == 0);
    CHECK_THROWS_AS(vp(0, 2), Error);
    CHECK_THROWS_AS(vp(4, 4), Error);  // p must be prime
}

TEST_CASE("binomial lemma instances") {
    CHECK(binomial_lemma_check(8, 2, 2));   // 8, 28, 70 all even and v_2(8) = 3
    CHECK(binomial_lemma_check(6, 2, 1));   // C(6,2) = 15 odd: vacuous
    CHECK(binomial_lemma_check(5, 5, 0));   // e = p
    CHECK_THROWS_AS(binomial_lemma_check(8, 2, 3), Error);  // p^z >= e
}

TEST_CASE("spec construction guards") {
    auto F2 = Field::prime(2);
    auto F3 = Field::prime(3);
    CHECK_THROWS_AS(RSequenceSpec(Poly::from_ints(F2, {1, 1}), UnitRule::constant(F2->one()),
                                  LinearRule{}),
                    Error);  // base X+1 = X-1 over F_2
    CHECK_THROWS_AS(RSequenceSpec(Poly::from_ints(F3, {2, 1}), UnitRule::constant(F3->one()),
                                  LinearRule{}),
                    Error);  // base X+2 = X-1 over F_3
    CHECK_THROWS_AS(RSequenceSpec(Poly::from_ints(F2, {0, 1, 1}),
                                  UnitRule::constant(F2->one()), LinearRule{}),
                    Error);  // reducible base
    CHECK_THROWS_AS(RSequenceSpec(Poly::X(F2), UnitRule::constant(F2->zero()), LinearRule{}),
                    Error);
    CHECK_THROWS_AS(sequence_from_subgroup({}), Error);
    CHECK_THROWS_AS(sequence_from_subgroup({F2->zero()}), Error);
}

TEST_CASE("subgroup sequences materialize f_n p^n") {
    auto F4 = Field::extension(2, 2);
    RSequenceSpec E = sequence_from_subgroup({F4->generator()});
    CHECK(E.exponent_at(0) == 3);
    CHECK(E.exponent_at(1) == 6);
    CHECK(E.exponent_at(4) == 48);

    auto F2 = Field::prime(2);
    RSequenceSpec trivial = sequence_from_subgroup({F2->one()});
    CHECK(trivial.exponent_at(3) == 8);  // 1 * p^n

    auto F16 = Field::extension(2, 4);
    RSequenceSpec e5 = sequence_from_subgroup({subgroup_of_order(F16, 5)});
    CHECK(e5.exponent_at(2) == 20);  // 5 * 2^2
}

TEST_CASE("convergence: subgroup sequence converges at its roots") {
    auto F4 = Field::extension(2, 2);
    RSequenceSpec E = sequence_from_subgroup({F4->generator()});
    Poly q(F4, {-F4->generator(), F4->one()});  // X - w over F_4
    ConvergenceVerdict v = converges(E, q, F4->one(), 2);
    CHECK(v.status == ConvergenceVerdict::Status::Converges);
    REQUIRE(v.roots.size() == 1);
    CHECK(v.roots[0].result == ClauseResult::Holds);
}

TEST_CASE("convergence: the staircase diverges everywhere") {
    auto F2 = Field::prime(2);
    RSequenceSpec E(Poly::X(F2), UnitRule::constant(F2->one()), LinearRule{});
    for (const auto& qv : {std::vector<long>{1, 1}, std::vector<long>{1, 1, 1}}) {
        Poly q = Poly::from_ints(F2, qv);
        ConvergenceVerdict v = converges(E, q, F2->one(), 2);
        CHECK(v.status == ConvergenceVerdict::Status::Diverges);
        CHECK(v.valuation.result == ClauseResult::Fails);
        CHECK(v.valuation.witness_index.has_value());
    }
}

TEST_CASE("convergence: p-power tails with matched units converge") {
    auto F3 = Field::prime(3);
    // s * X^{p^n} at the root 1 of X-1: values s * 1 = s
    ExplicitRule ex;
    ex.tail = ExplicitRule::Tail::PPower;
    ex.tail_value = 1;
    FieldElement s = F3->from_integer(2);
    RSequenceSpec E(Poly::X(F3), UnitRule::constant(s), ex);
    Poly q = Poly::from_ints(F3, {-1, 1});  // X - 1
    ConvergenceVerdict v = converges(E, q, s, 1);
    CHECK(v.status == ConvergenceVerdict::Status::Converges);
    // but it diverges toward the wrong limit
    ConvergenceVerdict v2 = converges(E, q, F3->one(), 1);
    CHECK(v2.status == ConvergenceVerdict::Status::Diverges);
}

TEST_CASE("convergence: explicit prefixes without a tail stay undecided") {
    auto F2 = Field::prime(2);
    ExplicitRule ex;
    ex.prefix = {mpz_class(2), mpz_class(4)};
    ex.tail = ExplicitRule::Tail::None;
    RSequenceSpec E(Poly::X(F2), UnitRule::constant(F2->one()), ex);
    ConvergenceVerdict v = converges(E, Poly::from_ints(F2, {1, 1}), F2->one(), 1, 6);
    CHECK(v.status == ConvergenceVerdict::Status::Undecided);
    CHECK(v.undecided_depth == 6);
}

TEST_CASE("convergence preconditions") {
    auto F2 = Field::prime(2);
    RSequenceSpec E(Poly::X(F2), UnitRule::constant(F2->one()), LinearRule{});
    CHECK_THROWS_AS(converges(E, Poly::X(F2), F2->one(), 1), Error);  // q not coprime to base
    CHECK_THROWS_AS(converges(E, Poly::from_ints(F2, {1, 1}), F2->zero(), 1), Error);
    // q = X^2+X+1 splits only in even truncations
    CHECK_THROWS_AS(converges(E, Poly::from_ints(F2, {1, 1, 1}), F2->one(), 3), Error);
}

TEST_CASE("definition oracle on the spec's examples") {
    auto F4 = Field::extension(2, 2);
    RSequenceSpec E = sequence_from_subgroup({F4->generator()});
    Poly q(F4, {-F4->generator(), F4->one()});
    DirectCheck d = converges_direct(E, q, F4->one(), 4, 8);
    CHECK(d.consistent);

    auto F2 = Field::prime(2);
    RSequenceSpec lin(Poly::X(F2), UnitRule::constant(F2->one()), LinearRule{});
    DirectCheck d2 = converges_direct(lin, Poly::from_ints(F2, {1, 1}), F2->one(), 2, 6);
    CHECK_FALSE(d2.consistent);

    DirectCheck d3 = converges_direct(lin, Poly::from_ints(F2, {1, 1}), F2->one(), 0, 6);
    CHECK(d3.consistent);  // vacuous at k = 0
}

TEST_CASE("limit sets of subgroup sequences") {
    auto F4 = Field::extension(2, 2);
    RSequenceSpec E = sequence_from_subgroup({F4->generator()});
    LimitSet ls = limit_set(E, 4);
    CHECK(ls.ell.size() == 3);  // the subgroup of order 3 inside F_16
    for (const auto& l : ls.ell) {
        mpz_class o = *element_order(l);
        CHECK(mpz_divisible_p(mpz_class(3).get_mpz_t(), o.get_mpz_t()));
    }
    // conjugate pair w, w^2 collapses to one ideal over F_2; (X-1) is excluded
    REQUIRE(ls.ideals.size() == 1);
    CHECK(ls.ideals[0] == Poly::from_ints(Field::prime(2), {1, 1, 1}));

    auto F2 = Field::prime(2);
    RSequenceSpec pp = sequence_from_subgroup({F2->one()});
    LimitSet one_only = limit_set(pp, 3);
    REQUIRE(one_only.ell.size() == 1);
    CHECK(one_only.ell[0].is_one());
    CHECK(one_only.ideals.empty());

    RSequenceSpec lin(Poly::X(F2), UnitRule::constant(F2->one()), LinearRule{});
    CHECK_THROWS_AS(limit_set(lin, 2), Error);  // NotBasic
}

TEST_CASE("limit roots form a torsion group closed under the operations") {
    // whenever 1 is a limit root, ell is a subgroup of the truncation units
    for (long p : {2L, 3L}) {
        for (long d : {1L, 2L, 3L, 4L, 5L}) {
            if (d % p == 0) continue;
            long M = (d == 1) ? 1 : order_mod(mpz_class(p), mpz_class(d)).get_si();
            FieldPtr F = Field::extension(p, M);
            RSequenceSpec E = sequence_from_subgroup({subgroup_of_order(F, d)});
            LimitSet ls = limit_set(E, M);
            std::set<FieldElement> ell(ls.ell.begin(), ls.ell.end());
            bool has_one = false;
            for (const auto& a : ell) {
                if (a.is_one()) has_one = true;
                CHECK(element_order(a).has_value());
                CHECK(ell.count(a.inverse()) == 1);
                for (const auto& b : ell) CHECK(ell.count(a * b) == 1);
            }
            CHECK(has_one);
        }
    }
}

TEST_CASE("attainable cardinalities, small runs") {
    AttainableReport r = attainable_cardinalities(2, 5);
    std::set<long> got;
    for (const auto& e : r.realized) got.insert(e.n);
    CHECK(got == std::set<long>{0, 1, 3, 5});
    CHECK(r.unrealized == std::vector<long>{2, 4});

    AttainableReport r3 = attainable_cardinalities(3, 2);
    std::set<long> got3;
    for (const auto& e : r3.realized) got3.insert(e.n);
    CHECK(got3 == std::set<long>{0, 1, 2});
    // n = 2 realized in F_3 itself (2 divides 3 - 1)
    for (const auto& e : r3.realized)
        if (e.n == 2) CHECK(e.M == 1);
}

TEST_CASE("no tested spec realizes a positive multiple of p") {
    for (long p : {2L, 3L}) {
        AttainableReport r = attainable_cardinalities(p, 7);
        for (const auto& e : r.realized) CHECK((e.n == 0 || e.n % p != 0));
    }
}

TEST_CASE("spec JSON round trip") {
    auto F4 = Field::extension(2, 2);
    RSequenceSpec E = sequence_from_subgroup({F4->generator()});
    json j = sequence_spec_to_json(E);
    RSequenceSpec back = sequence_spec_from_json(j);
    CHECK(back.base() == E.base());
    CHECK(back.exponent_at(3) == E.exponent_at(3));
    CHECK(back.units().tail == E.units().tail);

    ExplicitRule ex;
    ex.prefix = {mpz_class(3)};
    ex.tail = ExplicitRule::Tail::PPower;
    ex.tail_value = 2;
    auto F3 = Field::prime(3);
    RSequenceSpec E2(Poly::X(F3), UnitRule::constant(F3->from_integer(2)), ex);
    RSequenceSpec back2 = sequence_spec_from_json(sequence_spec_to_json(E2));
    CHECK(back2.exponent_at(0) == 3);
    CHECK(back2.exponent_at(2) == 6);
    CHECK(back2.unit_at(5) == F3->from_integer(2));
}
