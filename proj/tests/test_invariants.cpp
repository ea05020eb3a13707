#include <doctest.h>

#include <set>

#include "golomb/error.hpp"
#include "golomb/invariants.hpp"
#include "golomb/numutil.hpp"

using namespace golomb;

TEST_CASE("support classification") {
    auto F2 = Field::prime(2);
    GnClass g = gn_membership(Poly::from_ints(F2, {0, 1, 1}));
    CHECK(g.n == 2);
    REQUIRE(g.support.size() == 2);
    CHECK(g.support[0] == Poly::X(F2));
    CHECK(g.support[1] == Poly::from_ints(F2, {1, 1}));

    CHECK(gn_membership(Poly::one(F2)).n == 0);
    auto F3 = Field::prime(3);
    GnClass cube = gn_membership(Poly::monomial(F3, 3, F3->one()));
    CHECK(cube.n == 1);
    CHECK(cube.support[0] == Poly::X(F3));
    CHECK_THROWS_AS(gn_membership(Poly::zero(F2)), Error);
}

TEST_CASE("almost prime search examples") {
    auto F2 = Field::prime(2);
    AlmostPrimeResult r1 = almost_prime_search(
        CoprimeCoset::make(Poly::one(F2), Poly::from_ints(F2, {0, 1, 1})), 8);
    REQUIRE(r1.witness.has_value());
    CHECK(*r1.witness == Poly::from_ints(F2, {1, 1, 1}));

    AlmostPrimeResult r2 = almost_prime_search(
        CoprimeCoset::make(Poly::X(F2), Poly::from_ints(F2, {1, 1})), 8);
    REQUIRE(r2.witness.has_value());
    CHECK(*r2.witness == Poly::X(F2));  // X = 1 = X mod (X+1), already irreducible

    AlmostPrimeResult r3 =
        almost_prime_search(CoprimeCoset::make(Poly::one(F2), Poly::X(F2)), 0);
    CHECK_FALSE(r3.witness.has_value());
    CHECK(r3.bound == 0);
}

TEST_CASE("isolated point witnesses") {
    auto F2 = Field::prime(2);
    CHECK(isolated_point_witness(Poly::X(F2), Poly::from_ints(F2, {1, 1})) == 1);
    CHECK(isolated_point_witness(Poly::X(F2), Poly::from_ints(F2, {1, 1, 1})) == 3);
    CHECK(isolated_point_witness(Poly::one(F2), Poly::X(F2)) == 1);
    CHECK_THROWS_AS(isolated_point_witness(Poly::X(F2), Poly::from_ints(F2, {0, 1, 1})), Error);
}

TEST_CASE("closure chain witnesses") {
    auto F4 = Field::extension(2, 2);
    ChainWitness w = closure_chain_witness(Poly::X(F4), Poly::from_ints(F4, {1, 1}), 2);
    REQUIRE(w.tails.size() == 1);
    CHECK(w.tails[0].first == F4->generator());  // first usable point is w
    CHECK(w.tails[0].second == 3);               // 1 - w has order 3
    Poly lin(F4, {-F4->generator(), F4->one()});
    CHECK(w.A == Poly::X(F4) * lin.pow(3));

    // m = n: nothing to add
    auto F2 = Field::prime(2);
    ChainWitness same = closure_chain_witness(Poly::X(F2), Poly::from_ints(F2, {1, 1}), 1);
    CHECK(same.A == Poly::X(F2));
    CHECK(same.tails.empty());

    // a unit start: 1 enters G_1 through (X+1)^1
    ChainWitness unit = closure_chain_witness(Poly::one(F2), Poly::X(F2), 1);
    CHECK(unit.A == Poly::from_ints(F2, {1, 1}));
    REQUIRE(unit.tails.size() == 1);
    CHECK(unit.tails[0].second == 1);

    CHECK_THROWS_AS(closure_chain_witness(Poly::X(F2), Poly::from_ints(F2, {0, 1, 1}), 2), Error);
}

TEST_CASE("chain witnesses may need a larger truncation") {
    auto F2 = Field::prime(2);
    // over F_2 only t = 0, 1 exist; pushing X far needs new points
    ChainWitness w = closure_chain_witness(Poly::X(F2), Poly::from_ints(F2, {1, 1}), 3);
    CHECK(w.A.field()->cardinality() > 2);
    CHECK(gn_membership(w.A).n == 3);
    CHECK(((w.A - w.a) % w.b).is_zero());
}

TEST_CASE("nonregularity witness, both branches") {
    auto F2 = Field::prime(2);
    // divisible branch: x + b = X^2+X+1 + X^3+X+1 = X^3+X^2 is divisible by X
    NonRegularityWitness w1 = nonregularity_witness(
        Poly::X(F2), Poly::from_ints(F2, {1, 1, 1}), Poly::from_ints(F2, {1, 1, 0, 1}), 2);
    CHECK(w1.divisible_branch);
    CHECK(gn_membership(w1.pq).n == 2);
    CHECK(golomb_closure_contains(w1.pq, CoprimeCoset::make(w1.x, w1.b)));
    CHECK_FALSE(((w1.pq - Poly::one(F2)) % w1.p_elem).is_zero());

    auto F3 = Field::prime(3);
    NonRegularityWitness w2 = nonregularity_witness(
        Poly::X(F3), Poly::from_ints(F3, {1, 1}), Poly::from_ints(F3, {1, 0, 1}), 2);
    CHECK_FALSE(w2.divisible_branch);
    CHECK(gn_membership(w2.pq).n == 2);
    CHECK(golomb_closure_contains(w2.pq, CoprimeCoset::make(w2.x, w2.b)));

    // b sharing a factor with x is rejected: b = (X^2+X+1)(X+1) = X^3+1
    CHECK_THROWS_AS(nonregularity_witness(Poly::X(F2), Poly::from_ints(F2, {1, 1, 1}),
                                          Poly::from_ints(F2, {1, 0, 0, 1}), 2),
                    Error);
    // x outside 1 + p R is rejected
    CHECK_THROWS_AS(nonregularity_witness(Poly::X(F2), Poly::from_ints(F2, {0, 1, 1}),
                                          Poly::from_ints(F2, {1, 1, 0, 1}), 2),
                    Error);
}

TEST_CASE("separably-closed obstruction cosets") {
    ObstructionReport r3 = sep_closed_obstruction(3, 2, 60);
    CHECK(r3.irreducible_member.has_value());
    CHECK(r3.members.empty());

    ObstructionReport r2 = sep_closed_obstruction(2, 3, 60);
    CHECK(r2.irreducible_member.has_value());
    CHECK(r2.members.empty());

    // control: the coset 1 + X K[X] does contain linear powers, e.g. X + 1
    FieldPtr F = Field::extension(3, 2);
    ObstructionReport control =
        sep_closed_obstruction_coset(F, Poly::one(F), 1, 10);
    CHECK_FALSE(control.members.empty());
}

TEST_CASE("power separation witnesses") {
    auto F2 = Field::prime(2);
    // c = X against b = X^2: same radical, not in the orbit
    long t = power_separation_witness(Poly::from_ints(F2, {0, 0, 1}), Poly::X(F2));
    CHECK(t == 2);

    auto F4 = Field::extension(2, 2);
    Poly wx = Poly::X(F4) * F4->generator();
    CHECK_THROWS_AS(power_separation_witness(Poly::X(F4), wx), Error);  // InOrbit
    CHECK_THROWS_AS(power_separation_witness(Poly::X(F2), Poly::from_ints(F2, {0, 0, 1, 1})),
                    Error);  // radical mismatch

    // verify the claimed disjointness independently for a couple of cases
    for (auto [bv, cv] : std::vector<std::pair<std::vector<long>, std::vector<long>>>{
             {{0, 0, 1}, {0, 1}},        // b = X^2, c = X
             {{0, 0, 0, 1}, {0, 0, 1}},  // b = X^3, c = X^2
         }) {
        Poly b = Poly::from_ints(F2, bv), c = Poly::from_ints(F2, cv);
        long tt = power_separation_witness(b, c);
        Poly modulus = b.pow(static_cast<unsigned long>(tt)) - Poly::one(F2);
        for (long s = 0; s < tt; ++s)
            CHECK_FALSE(((c - b.pow(static_cast<unsigned long>(s))) % modulus).is_zero());
    }
}

TEST_CASE("discreteness decider over finite fields") {
    auto F4 = Field::extension(2, 2);
    DiscretenessOptions opt;
    opt.lambda = Poly::X(F4);
    opt.f = Poly::from_ints(F4, {1, 1});
    DiscreteVerdict v = discreteness_decider(Poly::X(F4), opt);
    CHECK(v.kind == DiscreteVerdict::Kind::NotDiscrete);
    CHECK(*v.exponent == 13);  // q = 4, e = q(q-1)+1

    auto F2 = Field::prime(2);
    DiscretenessOptions opt2;
    opt2.lambda = Poly::X(F2);
    opt2.f = Poly::from_ints(F2, {1, 1, 1});
    DiscreteVerdict v2 = discreteness_decider(Poly::X(F2), opt2);
    CHECK(v2.kind == DiscreteVerdict::Kind::NotDiscrete);
    Poly lam = *v2.lambda;
    CHECK(lam.pow_mod(*v2.exponent, *v2.f) == lam % *v2.f);

    // defaults pick lambda = g and the least coprime linear modulus
    DiscreteVerdict v3 = discreteness_decider(Poly::X(F2));
    CHECK(v3.kind == DiscreteVerdict::Kind::NotDiscrete);
    CHECK_THROWS_AS(discreteness_decider(Poly::X(Field::rationals())), Error);
}

TEST_CASE("discreteness decider over F_p(T)") {
    auto F3T = Field::rational_functions(3);
    DiscreteVerdict v = discreteness_decider(Poly::X(F3T));
    CHECK(v.kind == DiscreteVerdict::Kind::Discrete);
    REQUIRE(v.ratio.has_value());
    CHECK_FALSE(is_root_of_unity(*v.ratio));
    // the certified pair replays
    Poly g = Poly::X(F3T);
    CHECK_FALSE(g.evaluate(*v.s1).is_zero());
    CHECK_FALSE(g.evaluate(*v.s2).is_zero());
    CHECK(g.evaluate(*v.s1) / g.evaluate(*v.s2) == *v.ratio);
}

TEST_CASE("characteristic-zero obstruction") {
    auto Q = Field::rationals();
    CharZeroVerdict v = char_zero_obstruction(Poly::from_ints(Q, {3}),
                                              Poly::from_ints(Q, {-2, 1}), 2, 10);
    CHECK(v.status == CharZeroVerdict::Status::NotInClosure);
    CHECK(v.symbolic_tail);
    CHECK(v.refutations.size() == 10);
    CHECK(v.refutations[0].forced_u == mpq_class(3, 2));

    CHECK_THROWS_AS(char_zero_obstruction(Poly::X(Q), Poly::from_ints(Q, {-2, 1}), 2, 10),
                    Error);  // lambda in <X>

    CharZeroVerdict v2 = char_zero_obstruction(Poly::from_ints(Q, {1, 1}),
                                               Poly::from_ints(Q, {-2, 1}), 3, 10);
    CHECK(v2.status == CharZeroVerdict::Status::NotInClosure);

    // m_max below n - 1 cannot cover the gap before the symbolic tail
    CharZeroVerdict v3 = char_zero_obstruction(Poly::from_ints(Q, {1, 1}),
                                               Poly::from_ints(Q, {-2, 1}), 6, 3);
    CHECK(v3.status == CharZeroVerdict::Status::Inconclusive);
}

TEST_CASE("fingerprints") {
    FieldFingerprint f4 = fingerprint(Field::extension(2, 2), 64, 5);
    CHECK(f4.characteristic == 2);
    CHECK(f4.algebraic_over_prime_field == Algebraicity::Yes);
    CHECK(f4.unit_orders == std::vector<mpz_class>{1, 3});

    FieldFingerprint f2 = fingerprint(Field::prime(2), 64, 5);
    CHECK(f2.unit_orders == std::vector<mpz_class>{1});

    FieldFingerprint fq = fingerprint(Field::rationals(), 64, 5);
    CHECK(fq.characteristic == 0);
    CHECK(fq.unit_orders == std::vector<mpz_class>{1, 2});
    CHECK(fq.attainable.empty());

    FieldFingerprint ft = fingerprint(Field::rational_functions(3), 64, 5);
    CHECK(ft.algebraic_over_prime_field == Algebraicity::No);
    CHECK(ft.unit_orders == std::vector<mpz_class>{1, 2});
}

TEST_CASE("battery separations and symmetry") {
    BatteryResult r1 = battery(Field::prime(2), Field::extension(2, 2));
    CHECK(r1.separated);
    CHECK(r1.separating == std::vector<std::string>{"unit_orders"});

    BatteryResult r2 = battery(Field::rationals(), Field::prime(2));
    CHECK(r2.separated);
    CHECK(r2.separating.front() == "characteristic");

    BatteryResult r3 = battery(Field::extension(2, 2), Field::extension(2, 2));
    CHECK_FALSE(r3.separated);

    BatteryResult r4 = battery(Field::prime(3), Field::rational_functions(3));
    CHECK(r4.separating == std::vector<std::string>{"algebraicity"});

    // symmetry: same separating list both ways
    std::vector<FieldPtr> fields{Field::rationals(), Field::prime(2), Field::extension(2, 2),
                                 Field::rational_functions(3)};
    for (const auto& a : fields) {
        for (const auto& b : fields) {
            BatteryResult ab = battery(a, b), ba = battery(b, a);
            CHECK(ab.separated == ba.separated);
            CHECK(ab.separating == ba.separating);
        }
    }
}
