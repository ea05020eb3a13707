#include "golomb/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "golomb/error.hpp"
#include "golomb/invariants.hpp"
#include "golomb/numutil.hpp"

namespace golomb {

namespace {

using Clock = std::chrono::steady_clock;

Poly random_monic_irreducible(const FieldPtr& F, long degree, Rng& rng, bool avoid_x_minus_1) {
    MonicEnumeration en(F, degree);
    std::uint64_t size = en.size().get_ui();
    while (true) {
        Poly cand = en.at(rng.below(size));
        if (!is_irreducible(cand)) continue;
        if (avoid_x_minus_1 && degree == 1 && cand.evaluate(F->one()).is_zero()) continue;
        return cand;
    }
}

FieldElement random_unit(const FieldPtr& F, Rng& rng) {
    FieldEnumeration en(F);
    std::uint64_t size = en.size().get_ui();
    return en.at(1 + rng.below(size - 1));
}

// --- criterion 1 ------------------------------------------------------------

CriterionResult criterion_closure_formula() {
    FieldPtr F = Field::prime(2);
    long checked = 0, mismatches = 0;
    for (long db = 1; db <= 4; ++db) {
        MonicEnumeration moduli(F, db);
        for (mpz_class ib = 0; ib < moduli.size(); ++ib) {
            Poly b = moduli.at(ib);
            // canonical centers: nonzero residues mod b coprime to b
            for (long dx = 0; dx < db; ++dx) {
                MonicEnumeration centers(F, dx);
                for (mpz_class ix = 0; ix < centers.size(); ++ix) {
                    Poly x = centers.at(ix);  // over F_2 every nonzero poly is monic
                    if (gcd(x, b).degree() != 0) continue;
                    CoprimeCoset C = CoprimeCoset::make(x, b);
                    for (long dy = 0; dy <= 4; ++dy) {
                        MonicEnumeration ys(F, dy);
                        for (mpz_class iy = 0; iy < ys.size(); ++iy) {
                            Poly y = ys.at(iy);
                            bool formula = golomb_closure_contains(y, C);
                            ++checked;
                            if (formula) {
                                if (!golomb_closure_bruteforce(y, C, 4).consistent) ++mismatches;
                            } else {
                                // a refuting modulus must appear by deg(modulus)
                                if (golomb_closure_bruteforce(y, C, db).consistent) ++mismatches;
                            }
                        }
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << checked << " (y, coset) pairs, " << mismatches << " mismatches";
    return {1, "closure formula vs brute force (F_2, deg <= 4)", mismatches == 0, os.str(), 0};
}

// --- criterion 2 ------------------------------------------------------------

CriterionResult criterion_binomial_lemma() {
    long checked = 0, failures = 0;
    for (long p : {2L, 3L, 5L, 7L}) {
        for (long e = 2; e <= 200; ++e) {
            mpz_class pz = 1;
            for (long z = 0; pz < e; ++z, pz *= p) {
                ++checked;
                if (!binomial_lemma_check(mpz_class(e), p, z)) ++failures;
            }
        }
    }
    std::ostringstream os;
    os << checked << " instances, " << failures << " counterexamples";
    return {2, "binomial valuation lemma (p in {2,3,5,7}, e <= 200)", failures == 0, os.str(), 0};
}

// --- criterion 3 ------------------------------------------------------------

struct SampledSpec {
    RSequenceSpec E;
    Poly q;
    FieldElement s;
    long M;
};

SampledSpec sample_spec(long p, Rng& rng);

// One candidate draw; the caller retries when the visibility filter rejects.
std::optional<SampledSpec> try_sample_spec(long p, Rng& rng) {
    FieldPtr Fp = Field::prime(p);
    long M = 1 + static_cast<long>(rng.below(p == 2 ? 4 : 3));
    long rdeg = rng.below(4) == 0 ? 2 : 1;
    Poly r = random_monic_irreducible(Fp, rdeg, rng, true);

    UnitRule units = UnitRule::constant(random_unit(Fp, rng));
    long uplen = static_cast<long>(rng.below(3));
    for (long i = 0; i < uplen; ++i) units.prefix.push_back(random_unit(Fp, rng));

    ExponentRule rule = LinearRule{};
    switch (rng.below(5)) {
        case 0: {
            FieldPtr FM = Field::extension(p, M);
            SubgroupRule sub;
            long count = 1 + static_cast<long>(rng.below(2));
            for (long i = 0; i < count; ++i) sub.generators.push_back(random_unit(FM, rng));
            rule = sub;
            break;
        }
        case 1: {
            ExplicitRule ex;
            long len = static_cast<long>(rng.below(3));
            for (long i = 0; i < len; ++i) ex.prefix.emplace_back(1 + rng.below(6));
            ex.tail = ExplicitRule::Tail::PPower;
            ex.tail_value = 1 + rng.below(6);
            rule = ex;
            break;
        }
        case 2: rule = LinearRule{}; break;
        case 3: {
            ExplicitRule ex;
            long len = static_cast<long>(rng.below(3));
            for (long i = 0; i < len; ++i) ex.prefix.emplace_back(1 + rng.below(6));
            ex.tail = ExplicitRule::Tail::Constant;
            ex.tail_value = 1 + rng.below(8);
            rule = ex;
            break;
        }
        default: {
            ExplicitRule ex;
            long len = 1 + static_cast<long>(rng.below(3));
            for (long i = 0; i < len; ++i) ex.prefix.emplace_back(1 + rng.below(6));
            ex.tail = ExplicitRule::Tail::None;
            rule = ex;
            break;
        }
    }
    RSequenceSpec E(r, units, rule);

    // q: an irreducible whose degree divides M, coprime to r
    auto divs = divisors(mpz_class(M));
    FieldElement s = random_unit(Fp, rng);
    for (int attempt = 0; attempt < 16; ++attempt) {
        long dq = divs[rng.below(divs.size())].get_si();
        Poly q = random_monic_irreducible(Fp, dq, rng, false);
        if (gcd(q, r).degree() != 0) continue;
        // keep constant tails visible to the (k=5, N=10) window oracle: the
        // eventual constant term must leave s before depth 5
        if (const auto* ex = std::get_if<ExplicitRule>(&E.exponents());
            ex && ex->tail == ExplicitRule::Tail::Constant) {
            Poly h = r.pow(ex->tail_value.get_ui()) * E.units().tail - Poly::constant(s);
            long v = 0;
            while (v < 5 && !h.is_zero() && (h % q).is_zero()) {
                h = h / q;
                ++v;
            }
            if (v >= 5) continue;
        }
        return SampledSpec{E, q, s, M};
    }
    return std::nullopt;
}

SampledSpec sample_spec(long p, Rng& rng) {
    while (true) {
        if (auto sp = try_sample_spec(p, rng)) return *sp;
    }
}

CriterionResult criterion_convergence_oracle() {
    long converges_n = 0, diverges_n = 0, undecided_n = 0, disagreements = 0;
    for (long p : {2L, 3L}) {
        Rng rng(0xC3000 + static_cast<std::uint64_t>(p));
        for (int i = 0; i < 500; ++i) {
            SampledSpec sp = sample_spec(p, rng);
            ConvergenceVerdict v = converges(sp.E, sp.q, sp.s, sp.M, 8);
            DirectCheck d = converges_direct(sp.E, sp.q, sp.s, 5, 10);
            switch (v.status) {
                case ConvergenceVerdict::Status::Converges:
                    ++converges_n;
                    if (!d.consistent) ++disagreements;
                    break;
                case ConvergenceVerdict::Status::Diverges:
                    ++diverges_n;
                    if (d.consistent) ++disagreements;
                    break;
                case ConvergenceVerdict::Status::Undecided: ++undecided_n; break;
            }
        }
    }
    std::ostringstream os;
    os << converges_n << " converge / " << diverges_n << " diverge / " << undecided_n
       << " undecided; " << disagreements << " oracle disagreements";
    return {3, "convergence criterion vs definition oracle (500 specs per p)", disagreements == 0,
            os.str(), 0};
}

// --- criterion 4 ------------------------------------------------------------

CriterionResult criterion_subgroup_roundtrip() {
    long checked = 0, failures = 0;
    std::ostringstream bad;
    for (long p : {2L, 3L, 5L}) {
        for (long d = 1; d <= 20; ++d) {
            if (d % p == 0) continue;
            long M = (d == 1) ? 1 : order_mod(mpz_class(p), mpz_class(d)).get_si();
            FieldPtr F = Field::extension(p, M);
            FieldElement g = subgroup_of_order(F, d);
            std::set<FieldElement> H;
            FieldElement acc = F->one();
            for (long i = 0; i < d; ++i) {
                H.insert(acc);
                acc = acc * g;
            }
            LimitSet ls = limit_set(sequence_from_subgroup({g}), M);
            std::set<FieldElement> ell(ls.ell.begin(), ls.ell.end());
            ++checked;
            if (ell != H) {
                ++failures;
                bad << " p=" << p << ",|H|=" << d;
            }
        }
    }
    std::ostringstream os;
    os << checked << " subgroups, " << failures << " mismatches" << bad.str();
    return {4, "limit-set round trip of cyclic subgroups (|H| <= 20, p in {2,3,5})",
            failures == 0, os.str(), 0};
}

// --- criterion 5 ------------------------------------------------------------

CriterionResult criterion_lambda_shape() {
    bool ok = true;
    std::ostringstream os;

    AttainableReport r2 = attainable_cardinalities(2, 9);
    std::set<long> got2;
    for (const auto& e : r2.realized) got2.insert(e.n);
    std::set<long> want2{0, 1, 3, 5, 7, 9};
    if (got2 != want2) ok = false;
    for (long n : got2)
        if (n > 0 && n % 2 == 0) ok = false;
    os << "p=2: {";
    for (long n : got2) os << n << " ";
    os << "}";

    AttainableReport r3 = attainable_cardinalities(3, 10);
    std::set<long> got3;
    for (const auto& e : r3.realized) got3.insert(e.n);
    std::set<long> want3{0, 1, 2, 4, 5, 7, 8, 10};
    if (got3 != want3) ok = false;
    for (long n : {3L, 6L, 9L})
        if (got3.count(n)) ok = false;
    os << "; p=3: {";
    for (long n : got3) os << n << " ";
    os << "}";
    return {5, "attainable limit-set cardinalities are N minus pN+", ok, os.str(), 0};
}

// --- criterion 6 ------------------------------------------------------------

CriterionResult criterion_dirichlet() {
    long total = 0, missing = 0;
    for (long p : {2L, 3L}) {
        FieldPtr F = Field::prime(p);
        struct Task {
            Poly b, x;
        };
        std::vector<Task> tasks;
        for (long db = 1; db <= 4; ++db) {
            MonicEnumeration moduli(F, db);
            for (mpz_class ib = 0; ib < moduli.size(); ++ib) {
                Poly b = moduli.at(ib);
                for (long dx = 0; dx < db; ++dx) {
                    MonicEnumeration centers(F, dx);
                    FieldEnumeration units(F);
                    for (mpz_class ix = 0; ix < centers.size(); ++ix) {
                        for (mpz_class l = 1; l < units.size(); ++l) {
                            Poly x = centers.at(ix) * Poly::constant(units.at(l));
                            if (gcd(x, b).degree() == 0) tasks.push_back({b, x});
                        }
                    }
                }
            }
        }
        std::vector<char> found(tasks.size(), 0);
        parallel_for(tasks.size(), [&](std::size_t i) {
            long bound = tasks[i].b.degree().value() + 6;
            AlmostPrimeResult r =
                almost_prime_search(CoprimeCoset::make(tasks[i].x, tasks[i].b), bound);
            found[i] = r.witness.has_value() ? 1 : 0;
        });
        total += static_cast<long>(tasks.size());
        for (char f : found)
            if (!f) ++missing;
    }
    std::ostringstream os;
    os << total << " coprime cosets, " << missing << " without an irreducible";
    return {6, "almost-Dirichlet sweep (F_2, F_3; modulus degree <= 4, slack 6)", missing == 0,
            os.str(), 0};
}

// --- criterion 7 ------------------------------------------------------------

CriterionResult criterion_obstruction() {
    bool ok = true;
    std::ostringstream os;
    const std::vector<std::pair<long, long>> cases{{3, 3}, {2, 4}, {5, 2}};
    for (auto [p, M] : cases) {
        ObstructionReport r = sep_closed_obstruction(p, M, 200);
        bool good = r.irreducible_member.has_value() && r.members.empty();
        if (!good) ok = false;
        os << "F_" << p << "^" << M << ": irr=" << (r.irreducible_member ? "yes" : "NO")
           << " members=" << r.members.size() << "; ";
    }
    return {7, "non-density coset: irreducible inside, no linear powers (k <= 200)", ok, os.str(),
            0};
}

// --- criterion 8 ------------------------------------------------------------

CriterionResult criterion_isolated_points() {
    FieldPtr F = Field::prime(2);
    long checked = 0, failures = 0;
    for (long da = 1; da <= 3; ++da) {
        MonicEnumeration as(F, da);
        for (mpz_class ia = 0; ia < as.size(); ++ia) {
            Poly a = as.at(ia);
            for (long db = 0; db <= 3; ++db) {
                MonicEnumeration bs(F, db);
                for (mpz_class ib = 0; ib < bs.size(); ++ib) {
                    Poly b = bs.at(ib);
                    if (gcd(a, b).degree() != 0) continue;
                    ++checked;
                    try {
                        mpz_class k = isolated_point_witness(a, b);
                        Poly moved = a.pow(k.get_ui() + 1);
                        if (moved == a) ++failures;  // a nonunit must actually move
                        if (b.degree() > 0 && !((moved - a) % b).is_zero()) ++failures;
                    } catch (const Error&) {
                        ++failures;
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << checked << " coprime pairs, " << failures << " failures";
    return {8, "isolated-point witnesses for all coprime pairs (F_2, deg <= 3)", failures == 0,
            os.str(), 0};
}

// --- criterion 9 ------------------------------------------------------------

CriterionResult criterion_nonregularity() {
    long produced = 0, failures = 0;
    for (long p : {2L, 3L}) {
        FieldPtr F = Field::prime(p);
        Rng rng(0x9e0 + static_cast<std::uint64_t>(p));
        int guard = 0;
        while (produced < (p == 2 ? 10 : 20) && guard++ < 500) {
            try {
                Poly p_elem = random_monic_irreducible(F, 1 + rng.below(2), rng, false);
                if (rng.below(3) == 0) p_elem = p_elem * p_elem;  // allow prime squares in G_1
                long n = 2 + static_cast<long>(rng.below(2));
                MonicEnumeration ts(F, rng.below(2) ? 1 : 2);
                Poly x = Poly::one(F) + p_elem * ts.at(rng.below(ts.size().get_ui()));
                Poly b = random_monic_irreducible(F, 2 + rng.below(2), rng, false);
                if (rng.below(2)) b = b * random_monic_irreducible(F, 1, rng, false);
                if (gcd(x, b).degree() != 0 || x.is_zero()) continue;
                NonRegularityWitness w = nonregularity_witness(p_elem, x, b, n, 8);
                ++produced;
                // replay the three certificates once more, independently
                bool c1 = golomb_closure_contains(w.pq, CoprimeCoset::make(x, b));
                bool c2 = gn_membership(w.pq).n == n;
                bool c3 = !((w.pq - Poly::one(F)) % p_elem).is_zero();
                if (!c1 || !c2 || !c3) ++failures;
            } catch (const Error& e) {
                if (e.kind() == Err::SearchExhausted) continue;  // resample
                throw;
            }
        }
    }
    std::ostringstream os;
    os << produced << " witnesses, " << failures << " replay failures";
    return {9, "non-regularity witnesses replay (20 sampled inputs, F_2 and F_3)",
            produced >= 20 && failures == 0, os.str(), 0};
}

// --- criterion 10 -----------------------------------------------------------

CriterionResult criterion_battery() {
    std::vector<FieldPtr> fields{Field::rationals(),    Field::prime(2),
                                 Field::prime(3),       Field::extension(2, 2),
                                 Field::extension(2, 3), Field::extension(3, 2),
                                 Field::rational_functions(3)};
    bool ok = true;
    std::ostringstream os;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        for (std::size_t j = 0; j < fields.size(); ++j) {
            BatteryResult r = battery(fields[i], fields[j], 64, 5);
            if (i == j) {
                if (r.separated) {
                    ok = false;
                    os << "identical pair separated: " << fields[i]->to_string() << "; ";
                }
            } else if (!r.separated) {
                ok = false;
                os << "pair not separated: " << fields[i]->to_string() << " vs "
                   << fields[j]->to_string() << "; ";
            }
        }
    }
    auto first_separator = [](const FieldPtr& a, const FieldPtr& b) {
        return battery(a, b, 64, 5).separating.front();
    };
    if (first_separator(Field::prime(2), Field::extension(2, 2)) != "unit_orders") {
        ok = false;
        os << "(F_2,F_4) not separated by unit_orders first; ";
    }
    if (first_separator(Field::rationals(), Field::prime(2)) != "characteristic" ||
        first_separator(Field::rationals(), Field::prime(3)) != "characteristic") {
        ok = false;
        os << "(Q,F_p) not separated by characteristic first; ";
    }
    if (first_separator(Field::prime(3), Field::rational_functions(3)) != "algebraicity") {
        ok = false;
        os << "(F_3,F_3(T)) not separated by algebraicity first; ";
    }
    if (ok) os << "21 distinct pairs separated, named separators as expected";
    return {10, "field battery separates the desk set with the expected invariants", ok, os.str(),
            0};
}

// --- criterion 11 -----------------------------------------------------------

CriterionResult criterion_char_zero_evidence() {
    long failures = 0;
    FieldPtr Q = Field::rationals();
    Rng rng(0xC0FE);
    auto rand_q = [&](long height) {
        long num = static_cast<long>(rng.below(2 * height + 1)) - height;
        long den = 1 + static_cast<long>(rng.below(height));
        return mpq_class(num, den);
    };
    long produced = 0;
    while (produced < 50) {
        long dl = static_cast<long>(rng.below(4));
        std::vector<FieldElement> coeffs;
        for (long i = 0; i <= dl; ++i) coeffs.push_back(Q->from_rational(rand_q(20)));
        Poly lambda(Q, std::move(coeffs));
        if (lambda.is_zero()) continue;
        long nz = 0, top = -1;
        for (long i = 0; i <= lambda.degree().value(); ++i)
            if (!lambda.coeff(i).is_zero()) {
                ++nz;
                top = i;
            }
        if (nz == 1 && top >= 1) continue;  // lambda in <X>
        mpq_class alpha = rand_q(20);
        if (alpha == 0) continue;
        FieldElement alpha_e = Q->from_rational(alpha);
        if (lambda.evaluate(alpha_e).is_zero()) continue;
        Poly f(Q, {-alpha_e, Q->one()});
        long n = lambda.degree().value() + 2;
        CharZeroVerdict v = char_zero_obstruction(lambda, f, n, std::max(n - 1, 10L));
        if (v.status != CharZeroVerdict::Status::NotInClosure || !v.symbolic_tail) ++failures;
        ++produced;
    }

    long frob_failures = 0;
    for (long p : {2L, 3L}) {
        FieldPtr F = Field::prime(p);
        Rng frng(0xF40B + static_cast<std::uint64_t>(p));
        for (int i = 0; i < 25; ++i) {
            Poly g = random_monic_irreducible(F, 1 + frng.below(3), frng, false);
            FieldEnumeration en(F);
            FieldElement a = en.at(frng.below(en.size().get_ui()));
            if (g.evaluate(a).is_zero()) {
                --i;
                continue;
            }
            long k = 1 + static_cast<long>(frng.below(8));
            try {
                FrobeniusWitness w = frobenius_witness(g, a, k);
                Poly fa = Poly(F, {-a, F->one()});
                Poly h = Poly::one(F) - g.pow(w.m.get_ui()) * Poly::constant(w.u);
                if (!(h % fa.pow(static_cast<unsigned long>(k))).is_zero()) ++frob_failures;
            } catch (const Error&) {
                ++frob_failures;
            }
        }
    }
    std::ostringstream os;
    os << "50 derivative obstructions (" << failures << " failed), 50 frobenius witnesses ("
       << frob_failures << " failed)";
    return {11, "char-0 closedness evidence and char-p frobenius witnesses", failures == 0 &&
            frob_failures == 0, os.str(), 0};
}

CriterionResult timed(CriterionResult (*fn)()) {
    auto t0 = Clock::now();
    CriterionResult r = fn();
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"closure", "dirichlet", "sequences", "obstructions", "battery", "all"};
}

std::vector<CriterionResult> run_suite(const std::string& name) {
    std::vector<CriterionResult (*)()> fns;
    if (name == "closure") {
        fns = {criterion_closure_formula};
    } else if (name == "dirichlet") {
        fns = {criterion_dirichlet};
    } else if (name == "sequences") {
        fns = {criterion_binomial_lemma, criterion_convergence_oracle,
               criterion_subgroup_roundtrip, criterion_lambda_shape};
    } else if (name == "obstructions") {
        fns = {criterion_obstruction, criterion_isolated_points, criterion_nonregularity,
               criterion_char_zero_evidence};
    } else if (name == "battery") {
        fns = {criterion_battery};
    } else if (name == "all") {
        fns = {criterion_closure_formula,  criterion_binomial_lemma,
               criterion_convergence_oracle, criterion_subgroup_roundtrip,
               criterion_lambda_shape,       criterion_dirichlet,
               criterion_obstruction,        criterion_isolated_points,
               criterion_nonregularity,      criterion_battery,
               criterion_char_zero_evidence};
    } else {
        throw Error(Err::ConfigError, "unknown suite '" + name + "'");
    }
    std::vector<CriterionResult> out;
    out.reserve(fns.size());
    for (auto fn : fns) out.push_back(timed(fn));
    std::sort(out.begin(), out.end(),
              [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
    return out;
}

}  // namespace golomb
