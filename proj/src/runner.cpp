#include "golomb/runner.hpp"

#include <chrono>
#include <exception>
#include <sstream>

#include "golomb/error.hpp"
#include "golomb/numutil.hpp"

namespace golomb {

namespace {

std::string where(const ConfigEntry& e) {
    return "[" + e.op + "] (line " + std::to_string(e.line) + ")";
}

const std::string& require(const ConfigEntry& e, const std::string& key) {
    auto it = e.params.find(key);
    if (it == e.params.end())
        throw Error(Err::ConfigError, where(e) + ": missing required key '" + key + "'");
    return it->second;
}

std::string optional_param(const ConfigEntry& e, const std::string& key,
                           const std::string& fallback) {
    auto it = e.params.find(key);
    return it == e.params.end() ? fallback : it->second;
}

long require_long(const ConfigEntry& e, const std::string& key) {
    try {
        return std::stol(require(e, key));
    } catch (const Error&) {
        throw;
    } catch (...) {
        throw Error(Err::ConfigError, where(e) + ": '" + key + "' must be an integer");
    }
}

long optional_long(const ConfigEntry& e, const std::string& key, long fallback) {
    auto it = e.params.find(key);
    if (it == e.params.end()) return fallback;
    try {
        return std::stol(it->second);
    } catch (...) {
        throw Error(Err::ConfigError, where(e) + ": '" + key + "' must be an integer");
    }
}

FieldPtr require_field(const ConfigEntry& e, const std::string& key = "field") {
    try {
        return Field::parse(require(e, key));
    } catch (const Error& err) {
        if (err.kind() != Err::ParseError) throw;
        throw Error(Err::ConfigError, where(e) + ": " + err.what());
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ';') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

RSequenceSpec spec_from_entry(const ConfigEntry& e) {
    if (e.params.count("spec_json"))
        return sequence_spec_from_json(json::parse(e.params.at("spec_json")));
    FieldPtr F = require_field(e);
    Poly base = Poly::parse(F, optional_param(e, "base", "X"));
    UnitRule units = UnitRule::constant(F->parse_element(optional_param(e, "unit_tail", "1")));
    for (const auto& u : split_list(optional_param(e, "unit_prefix", "")))
        units.prefix.push_back(F->parse_element(u));
    std::string rule = require(e, "rule");
    if (rule == "linear") return RSequenceSpec(base, units, LinearRule{});
    if (rule == "subgroup") {
        FieldPtr Fg = Field::parse(require(e, "generators_field"));
        SubgroupRule sub;
        for (const auto& h : split_list(require(e, "generators")))
            sub.generators.push_back(Fg->parse_element(h));
        return RSequenceSpec(base, units, sub);
    }
    if (rule == "explicit") {
        ExplicitRule ex;
        for (const auto& v : split_list(optional_param(e, "exp_prefix", "")))
            ex.prefix.emplace_back(v);
        std::string tail = require(e, "exp_tail");
        if (tail == "none") ex.tail = ExplicitRule::Tail::None;
        else if (tail == "constant") ex.tail = ExplicitRule::Tail::Constant;
        else if (tail == "ppower") ex.tail = ExplicitRule::Tail::PPower;
        else throw Error(Err::ConfigError, where(e) + ": exp_tail must be none|constant|ppower");
        if (ex.tail != ExplicitRule::Tail::None)
            ex.tail_value = mpz_class(require(e, "exp_tail_value"));
        return RSequenceSpec(base, units, ex);
    }
    throw Error(Err::ConfigError, where(e) + ": rule must be subgroup|linear|explicit");
}

// --- per-op handlers --------------------------------------------------------

json handle_field(const ConfigEntry& e, std::uint64_t) {
    FieldPtr F = require_field(e);
    json r{{"desc", F->to_string()}, {"characteristic", F->characteristic()}};
    if (F->finite()) {
        r["cardinality"] = F->cardinality().get_str();
        r["extension_degree"] = F->extension_degree();
        if (F->kind() == FieldKind::Extension) r["modulus"] = F->modulus();
    }
    return json{{"inputs", json{{"field", F->to_string()}}}, {"result", r}, {"finding", false}};
}

json handle_closure(const ConfigEntry& e, std::uint64_t seed) {
    FieldPtr F = require_field(e);
    Poly x = Poly::parse(F, require(e, "center"));
    Poly b = Poly::parse(F, require(e, "modulus"));
    Poly y = Poly::parse(F, require(e, "y"));
    CoprimeCoset C = CoprimeCoset::make(x, b);
    bool in_closure = golomb_closure_contains(y, C, seed);
    json result{{"in_closure", in_closure}};
    if (e.params.count("bruteforce_depth")) {
        long D = require_long(e, "bruteforce_depth");
        BruteForceResult bf = golomb_closure_bruteforce(y, C, D);
        result["bruteforce"] = bruteforce_to_json(bf);
        result["agreement"] = in_closure == bf.consistent;
    }
    json inputs{{"field", F->to_string()},
                {"center", poly_to_json(x)},
                {"modulus", poly_to_json(b)},
                {"y", poly_to_json(y)}};
    return json{{"inputs", inputs}, {"result", result}, {"finding", false}};
}

json handle_intersect(const ConfigEntry& e, std::uint64_t) {
    FieldPtr F = require_field(e);
    Poly x1 = Poly::parse(F, require(e, "x1")), b1 = Poly::parse(F, require(e, "b1"));
    Poly x2 = Poly::parse(F, require(e, "x2")), b2 = Poly::parse(F, require(e, "b2"));
    CosetIntersection r = cosets_intersect(x1, b1, x2, b2);
    json inputs{{"field", F->to_string()},
                {"x1", poly_to_json(x1)},
                {"b1", poly_to_json(b1)},
                {"x2", poly_to_json(x2)},
                {"b2", poly_to_json(b2)}};
    return json{{"inputs", inputs}, {"result", intersection_to_json(r)}, {"finding", false}};
}

json handle_ptop(const ConfigEntry& e, std::uint64_t) {
    FieldPtr F = require_field(e);
    Poly lambda = Poly::parse(F, require(e, "lambda"));
    Poly g = Poly::parse(F, require(e, "g"));
    Poly f = Poly::parse(F, require(e, "f"));
    long depth = require_long(e, "depth");
    ClosureVerdict v = ptop_orbit_closure(lambda, g, f, depth);
    json inputs{{"field", F->to_string()},
                {"lambda", poly_to_json(lambda)},
                {"g", poly_to_json(g)},
                {"f", poly_to_json(f)},
                {"depth", depth}};
    return json{{"inputs", inputs}, {"result", closure_verdict_to_json(v)}, {"finding", false}};
}

json handle_frobenius(const ConfigEntry& e, std::uint64_t) {
    FieldPtr F = require_field(e);
    Poly g = Poly::parse(F, require(e, "g"));
    FieldElement a = F->parse_element(require(e, "a"));
    long k = require_long(e, "k");
    FrobeniusWitness w = frobenius_witness(g, a, k);
    json inputs{{"field", F->to_string()},
                {"g", poly_to_json(g)},
                {"a", a.to_string()},
                {"k", k}};
    return json{{"inputs", inputs}, {"result", frobenius_to_json(w)}, {"finding", false}};
}

json handle_sequence(const ConfigEntry& e, std::uint64_t) {
    RSequenceSpec E = spec_from_entry(e);
    FieldPtr Fq = e.params.count("q_field") ? Field::parse(e.params.at("q_field"))
                                            : E.base().field();
    Poly q = Poly::parse(Fq, require(e, "q"));
    FieldElement s = Fq->parse_element(optional_param(e, "s", "1"));
    long M = require_long(e, "truncation");
    long prefix = require_long(e, "prefix");
    ConvergenceVerdict v = converges(E, q, s, M, prefix);
    json result{{"converges", convergence_to_json(v)}};
    if (e.params.count("direct_k")) {
        long k = require_long(e, "direct_k");
        long N = require_long(e, "direct_N");
        result["direct"] = direct_check_to_json(converges_direct(E, q, s, k, N));
    }
    if (optional_param(e, "limit_set", "") == "true")
        result["limit_set"] = limit_set_to_json(limit_set(E, M));
    json inputs{{"spec", sequence_spec_to_json(E)},
                {"q", poly_to_json(q)},
                {"s", s.to_string()},
                {"truncation", M},
                {"prefix", prefix}};
    bool finding = v.status == ConvergenceVerdict::Status::Undecided;
    return json{{"inputs", inputs}, {"result", result}, {"finding", finding}};
}

json handle_limits(const ConfigEntry& e, std::uint64_t) {
    long p = require_long(e, "p");
    long n_max = require_long(e, "n_max");
    AttainableReport r = attainable_cardinalities(p, n_max);
    return json{{"inputs", json{{"p", p}, {"n_max", n_max}}},
                {"result", attainable_to_json(r)},
                {"finding", false}};
}

json handle_gn(const ConfigEntry& e, std::uint64_t seed) {
    FieldPtr F = require_field(e);
    Poly a = Poly::parse(F, require(e, "a"));
    GnClass g = gn_membership(a, seed);
    return json{{"inputs", json{{"field", F->to_string()}, {"a", poly_to_json(a)}}},
                {"result", gn_to_json(g)},
                {"finding", false}};
}

json handle_almost_prime(const ConfigEntry& e, std::uint64_t) {
    FieldPtr F = require_field(e);
    Poly x = Poly::parse(F, require(e, "center"));
    Poly b = Poly::parse(F, require(e, "modulus"));
    long bound = require_long(e, "degree_bound");
    AlmostPrimeResult r = almost_prime_search(CoprimeCoset::make(x, b), bound);
    json inputs{{"field", F->to_string()},
                {"center", poly_to_json(x)},
                {"modulus", poly_to_json(b)},
                {"degree_bound", bound}};
    return json{{"inputs", inputs},
                {"result", almost_prime_to_json(r)},
                {"finding", !r.witness.has_value()}};
}

json handle_dirichlet(const ConfigEntry& e, std::uint64_t) {
    FieldPtr F = require_field(e);
    long max_deg = require_long(e, "max_modulus_degree");
    long slack = require_long(e, "degree_slack");

    struct Task {
        Poly modulus, center;
    };
    std::vector<Task> tasks;
    for (long d = 1; d <= max_deg; ++d) {
        MonicEnumeration moduli(F, d);
        for (mpz_class i = 0; i < moduli.size(); ++i) {
            Poly b = moduli.at(i);
            for (long dx = 0; dx < d; ++dx) {
                MonicEnumeration centers(F, dx);
                FieldEnumeration units(F);
                for (mpz_class j = 0; j < centers.size(); ++j) {
                    for (mpz_class l = 1; l < units.size(); ++l) {
                        Poly x = centers.at(j) * Poly::constant(units.at(l));
                        if (gcd(x, b).degree() == 0) tasks.push_back({b, x});
                    }
                }
            }
        }
    }
    std::vector<json> rows(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t i) {
        try {
            const Task& t = tasks[i];
            long bound = t.modulus.degree().value() + slack;
            AlmostPrimeResult r = almost_prime_search(CoprimeCoset::make(t.center, t.modulus), bound);
            json row{{"modulus", t.modulus.to_string()},
                     {"center", t.center.to_string()},
                     {"found", r.witness.has_value()}};
            if (r.witness) {
                row["witness"] = r.witness->to_string();
                row["witness_degree"] = r.witness->degree().value();
            }
            rows[i] = std::move(row);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    long missing = 0;
    json jrows = json::array();
    for (auto& row : rows) {
        if (!row.at("found").get<bool>()) ++missing;
        jrows.push_back(std::move(row));
    }
    json result{{"cosets", jrows.size()}, {"missing", missing}, {"rows", jrows}};
    json inputs{{"field", F->to_string()},
                {"max_modulus_degree", max_deg},
                {"degree_slack", slack}};
    return json{{"inputs", inputs}, {"result", result}, {"finding", missing > 0}};
}

json handle_isolated(const ConfigEntry& e, std::uint64_t) {
    FieldPtr F = require_field(e);
    Poly a = Poly::parse(F, require(e, "a"));
    Poly b = Poly::parse(F, require(e, "b"));
    mpz_class k = isolated_point_witness(a, b);
    json inputs{{"field", F->to_string()}, {"a", poly_to_json(a)}, {"b", poly_to_json(b)}};
    return json{{"inputs", inputs}, {"result", json{{"k", k.get_str()}}}, {"finding", false}};
}

json handle_chain(const ConfigEntry& e, std::uint64_t seed) {
    FieldPtr F = require_field(e);
    Poly a = Poly::parse(F, require(e, "a"));
    Poly b = Poly::parse(F, require(e, "b"));
    long n = require_long(e, "n");
    ChainWitness w = closure_chain_witness(a, b, n, seed);
    json inputs{{"field", F->to_string()},
                {"a", poly_to_json(a)},
                {"b", poly_to_json(b)},
                {"n", n}};
    return json{{"inputs", inputs}, {"result", chain_to_json(w)}, {"finding", false}};
}

json handle_nonregularity(const ConfigEntry& e, std::uint64_t seed) {
    FieldPtr F = require_field(e);
    Poly p_elem = Poly::parse(F, require(e, "p_elem"));
    Poly x = Poly::parse(F, require(e, "x"));
    Poly b = Poly::parse(F, require(e, "b"));
    long n = require_long(e, "n");
    long bound = require_long(e, "search_degree_bound");
    NonRegularityWitness w = nonregularity_witness(p_elem, x, b, n, bound, seed);
    json inputs{{"field", F->to_string()},
                {"p_elem", poly_to_json(p_elem)},
                {"x", poly_to_json(x)},
                {"b", poly_to_json(b)},
                {"n", n},
                {"search_degree_bound", bound}};
    return json{{"inputs", inputs}, {"result", nonregularity_to_json(w)}, {"finding", false}};
}

json handle_obstruction(const ConfigEntry& e, std::uint64_t) {
    long p = require_long(e, "p");
    long M = require_long(e, "M");
    long k_bound = require_long(e, "k_bound");
    json inputs{{"p", p}, {"M", M}, {"k_bound", k_bound}};
    ObstructionReport r = [&]() {
        if (!e.params.count("center")) return sep_closed_obstruction(p, M, k_bound);
        FieldPtr F = Field::extension(p, M);
        Poly center = Poly::parse(F, e.params.at("center"));
        long d = require_long(e, "modulus_degree");
        long slack = optional_long(e, "degree_slack", 6);
        inputs["center"] = poly_to_json(center);
        inputs["modulus_degree"] = d;
        return sep_closed_obstruction_coset(F, center, d, k_bound, slack);
    }();
    bool finding = !r.irreducible_member.has_value() || !r.members.empty();
    return json{{"inputs", inputs}, {"result", obstruction_to_json(r)}, {"finding", finding}};
}

json handle_power_separation(const ConfigEntry& e, std::uint64_t) {
    FieldPtr F = require_field(e);
    Poly b = Poly::parse(F, require(e, "b"));
    Poly c = Poly::parse(F, require(e, "c"));
    long t = power_separation_witness(b, c);
    json inputs{{"field", F->to_string()}, {"b", poly_to_json(b)}, {"c", poly_to_json(c)}};
    return json{{"inputs", inputs}, {"result", json{{"t", t}}}, {"finding", false}};
}

json handle_discreteness(const ConfigEntry& e, std::uint64_t) {
    FieldPtr F = require_field(e);
    Poly g = Poly::parse(F, require(e, "g"));
    DiscretenessOptions opt;
    if (e.params.count("lambda")) opt.lambda = Poly::parse(F, e.params.at("lambda"));
    if (e.params.count("f")) opt.f = Poly::parse(F, e.params.at("f"));
    opt.box_degree = optional_long(e, "box_degree", 4);
    DiscreteVerdict v = discreteness_decider(g, opt);
    json inputs{{"field", F->to_string()}, {"g", poly_to_json(g)}, {"box_degree", opt.box_degree}};
    return json{{"inputs", inputs},
                {"result", discreteness_to_json(v)},
                {"finding", v.kind == DiscreteVerdict::Kind::Unknown}};
}

json handle_char_zero(const ConfigEntry& e, std::uint64_t) {
    FieldPtr Q = Field::rationals();
    Poly lambda = Poly::parse(Q, require(e, "lambda"));
    Poly f = Poly::parse(Q, require(e, "f"));
    long depth = require_long(e, "depth");
    long m_max = require_long(e, "m_max");
    CharZeroVerdict v = char_zero_obstruction(lambda, f, depth, m_max);
    json inputs{{"lambda", poly_to_json(lambda)},
                {"f", poly_to_json(f)},
                {"depth", depth},
                {"m_max", m_max}};
    return json{{"inputs", inputs},
                {"result", char_zero_to_json(v)},
                {"finding", v.status == CharZeroVerdict::Status::Inconclusive}};
}

json handle_fingerprint(const ConfigEntry& e, std::uint64_t) {
    FieldPtr F = require_field(e);
    long B = require_long(e, "order_bound");
    long n_max = require_long(e, "n_max");
    FieldFingerprint fp = fingerprint(F, B, n_max);
    json inputs{{"field", F->to_string()}, {"order_bound", B}, {"n_max", n_max}};
    return json{{"inputs", inputs}, {"result", fingerprint_to_json(fp)}, {"finding", false}};
}

json handle_battery(const ConfigEntry& e, std::uint64_t) {
    FieldPtr F1 = require_field(e, "field1");
    FieldPtr F2 = require_field(e, "field2");
    long B = require_long(e, "order_bound");
    long n_max = require_long(e, "n_max");
    BatteryResult r = battery(F1, F2, B, n_max);
    json inputs{{"field1", F1->to_string()},
                {"field2", F2->to_string()},
                {"order_bound", B},
                {"n_max", n_max}};
    bool finding = !r.separated && !F1->same(*F2);
    return json{{"inputs", inputs}, {"result", battery_to_json(r)}, {"finding", finding}};
}

using Handler = json (*)(const ConfigEntry&, std::uint64_t);

const std::map<std::string, Handler>& handler_table() {
    static const std::map<std::string, Handler> table{
        {"field", handle_field},
        {"closure", handle_closure},
        {"intersect", handle_intersect},
        {"ptop", handle_ptop},
        {"frobenius", handle_frobenius},
        {"sequence", handle_sequence},
        {"limits", handle_limits},
        {"gn", handle_gn},
        {"almost-prime", handle_almost_prime},
        {"dirichlet", handle_dirichlet},
        {"isolated", handle_isolated},
        {"chain", handle_chain},
        {"nonregularity", handle_nonregularity},
        {"obstruction", handle_obstruction},
        {"power-separation", handle_power_separation},
        {"discreteness", handle_discreteness},
        {"char-zero", handle_char_zero},
        {"fingerprint", handle_fingerprint},
        {"battery", handle_battery},
    };
    return table;
}

}  // namespace

json run_entry(const ConfigEntry& entry, std::uint64_t seed) {
    auto it = handler_table().find(entry.op);
    if (it == handler_table().end())
        throw Error(Err::ConfigError, where(entry) + ": unknown operation");
    json out = it->second(entry, seed);
    out["op"] = entry.op;
    out["line"] = entry.line;
    return out;
}

json run_config(const Config& cfg) {
    auto started = std::chrono::steady_clock::now();
    std::vector<json> results(cfg.entries.size());
    std::vector<std::exception_ptr> errors(cfg.entries.size());
    parallel_for(cfg.entries.size(), [&](std::size_t i) {
        try {
            results[i] = run_entry(cfg.entries[i], cfg.seed);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    json entries = json::array();
    for (auto& r : results) entries.push_back(std::move(r));
    json config_echo = json::array();
    for (const auto& e : cfg.entries)
        config_echo.push_back(json{{"op", e.op}, {"line", e.line}, {"params", e.params}});
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    return json{{"toolkit", kToolkitVersion},
                {"seed", cfg.seed},
                {"config", config_echo},
                {"entries", entries},
                {"duration_ms", elapsed}};
}

// --- certificate verification -----------------------------------------------

namespace {

bool verify_entry(const json& entry, std::uint64_t seed, std::string& message) {
    const std::string op = entry.at("op").get<std::string>();
    const json& in = entry.at("inputs");
    const json& res = entry.at("result");

    auto fail = [&](const std::string& why) {
        message = why;
        return false;
    };

    if (op == "closure") {
        FieldPtr F = Field::parse(in.at("field").get<std::string>());
        Poly x = poly_from_json(in.at("center"));
        Poly b = poly_from_json(in.at("modulus"));
        Poly y = poly_from_json(in.at("y"));
        CoprimeCoset C = CoprimeCoset::make(x, b);
        if (golomb_closure_contains(y, C, seed) != res.at("in_closure").get<bool>())
            return fail("closure formula verdict does not replay");
        if (res.contains("bruteforce")) {
            const json& bf = res["bruteforce"];
            if (bf.contains("witness")) {
                Poly c = poly_from_json(bf["witness"]);
                if (gcd(c, y).degree() != 0) return fail("bruteforce witness not coprime to y");
                if (((y - x) % gcd(c, b)).is_zero())
                    return fail("bruteforce witness coset actually meets C");
            } else if (bf.at("consistent").get<bool>()) {
                BruteForceResult again =
                    golomb_closure_bruteforce(y, C, bf.at("bound").get<long>());
                if (!again.consistent) return fail("consistency claim does not replay");
            }
        }
        return true;
    }
    if (op == "intersect") {
        FieldPtr F = Field::parse(in.at("field").get<std::string>());
        Poly x1 = poly_from_json(in.at("x1")), b1 = poly_from_json(in.at("b1"));
        Poly x2 = poly_from_json(in.at("x2")), b2 = poly_from_json(in.at("b2"));
        bool claimed = res.at("intersects").get<bool>();
        if (claimed) {
            if (!res.contains("witness")) return fail("intersection lacks a witness");
            Poly z = poly_from_json(res["witness"]);
            if (!((z - x1) % b1).is_zero() || !((z - x2) % b2).is_zero())
                return fail("intersection witness not in both cosets");
        } else {
            if (cosets_intersect(x1, b1, x2, b2).intersects)
                return fail("claimed-disjoint cosets intersect");
        }
        return true;
    }
    if (op == "ptop") {
        FieldPtr F = Field::parse(in.at("field").get<std::string>());
        Poly lambda = poly_from_json(in.at("lambda"));
        Poly g = poly_from_json(in.at("g"));
        Poly f = poly_from_json(in.at("f"));
        ClosureVerdict v = closure_verdict_from_json(res, F);
        if (!verify_closure_verdict(lambda, g, f, v))
            return fail("orbit-closure certificate does not replay");
        return true;
    }
    if (op == "frobenius") {
        FieldPtr F = Field::parse(in.at("field").get<std::string>());
        Poly g = poly_from_json(in.at("g"));
        FieldElement a = F->parse_element(in.at("a").get<std::string>());
        mpz_class m(res.at("m").get<std::string>());
        FieldElement u = F->parse_element(res.at("u").get<std::string>());
        long k = res.at("k").get<long>();
        Poly fa = Poly(F, {-a, F->one()});
        Poly h = Poly::one(F) - g.pow(m.get_ui()) * Poly::constant(u);
        if (!(h % fa.pow(static_cast<unsigned long>(k))).is_zero())
            return fail("frobenius divisibility fails");
        return true;
    }
    if (op == "sequence") {
        RSequenceSpec E = sequence_spec_from_json(in.at("spec"));
        Poly q = poly_from_json(in.at("q"));
        FieldElement s = q.field()->parse_element(in.at("s").get<std::string>());
        long M = in.at("truncation").get<long>();
        long prefix = in.at("prefix").get<long>();
        json again = convergence_to_json(converges(E, q, s, M, prefix));
        if (again != res.at("converges")) return fail("convergence verdict does not replay");
        if (res.contains("direct")) {
            DirectCheck d = converges_direct(E, q, s, res["direct"].at("k").get<long>(),
                                             res["direct"].at("N").get<long>());
            if (direct_check_to_json(d) != res["direct"])
                return fail("direct check does not replay");
        }
        if (res.contains("limit_set")) {
            if (limit_set_to_json(limit_set(E, M)) != res["limit_set"])
                return fail("limit set does not replay");
        }
        return true;
    }
    if (op == "limits") {
        AttainableReport r = attainable_cardinalities(in.at("p").get<long>(),
                                                      in.at("n_max").get<long>());
        if (attainable_to_json(r) != res) return fail("attainable set does not replay");
        return true;
    }
    if (op == "gn") {
        Poly a = poly_from_json(in.at("a"));
        GnClass g = gn_membership(a, seed);
        if (gn_to_json(g) != res) return fail("support class does not replay");
        return true;
    }
    if (op == "almost-prime") {
        Poly x = poly_from_json(in.at("center"));
        Poly b = poly_from_json(in.at("modulus"));
        CoprimeCoset C = CoprimeCoset::make(x, b);
        if (res.at("found").get<bool>()) {
            Poly w = poly_from_json(res.at("witness"));
            if (!w.is_monic() || !is_irreducible(w)) return fail("witness is not monic irreducible");
            if (!C.contains(w)) return fail("witness is outside the coset");
        } else {
            AlmostPrimeResult r = almost_prime_search(C, res.at("bound").get<long>());
            if (r.witness) return fail("a witness exists below the claimed bound");
        }
        return true;
    }
    if (op == "dirichlet") {
        for (const auto& row : res.at("rows")) {
            if (!row.at("found").get<bool>()) continue;
            FieldPtr F = Field::parse(in.at("field").get<std::string>());
            Poly b = Poly::parse(F, row.at("modulus").get<std::string>());
            Poly x = Poly::parse(F, row.at("center").get<std::string>());
            Poly w = Poly::parse(F, row.at("witness").get<std::string>());
            if (!is_irreducible(w)) return fail("sweep witness is reducible");
            if (!CoprimeCoset::make(x, b).contains(w))
                return fail("sweep witness is outside its coset");
        }
        return true;
    }
    if (op == "isolated") {
        Poly a = poly_from_json(in.at("a"));
        Poly b = poly_from_json(in.at("b"));
        mpz_class k(res.at("k").get<std::string>());
        if (isolated_point_witness(a, b) != k) return fail("order witness does not replay");
        return true;
    }
    if (op == "chain") {
        Poly A = poly_from_json(res.at("A"));
        Poly a = poly_from_json(res.at("a"));
        Poly b = poly_from_json(res.at("b"));
        long n = res.at("n").get<long>();
        if (gn_membership(A, seed).n != n) return fail("A is not in G_n");
        if (!((A - a) % b).is_zero()) return fail("A is not congruent to a mod b");
        for (const auto& tail : res.at("tails")) {
            FieldElement t = A.field()->parse_element(tail.at("t").get<std::string>());
            mpz_class k(tail.at("k").get<std::string>());
            Poly lin = Poly(A.field(), {-t, A.field()->one()});
            if (!((lin.pow_mod(k, b) - Poly::one(A.field()) % b) % b).is_zero())
                return fail("tail power is not 1 mod b");
        }
        return true;
    }
    if (op == "nonregularity") {
        Poly pq = poly_from_json(res.at("pq"));
        Poly p_elem = poly_from_json(res.at("p_elem"));
        Poly x = poly_from_json(res.at("x"));
        Poly b = poly_from_json(res.at("b"));
        long n = res.at("n").get<long>();
        const FieldPtr& F = pq.field();
        if (!golomb_closure_contains(pq, CoprimeCoset::make(x, b), seed))
            return fail("pq is not in the closure of x + bR");
        if (gn_membership(pq, seed).n != n) return fail("pq is not in G_n");
        if (((pq - Poly::one(F)) % p_elem).is_zero()) return fail("pq lies in 1 + p_elem R");
        return true;
    }
    if (op == "obstruction") {
        long p = in.at("p").get<long>();
        long M = in.at("M").get<long>();
        long k_bound = in.at("k_bound").get<long>();
        ObstructionReport r = [&]() {
            if (!in.contains("center")) return sep_closed_obstruction(p, M, k_bound);
            Poly center = poly_from_json(in.at("center"));
            return sep_closed_obstruction_coset(center.field(), center,
                                                in.at("modulus_degree").get<long>(), k_bound);
        }();
        if (obstruction_to_json(r) != res) return fail("obstruction sweep does not replay");
        return true;
    }
    if (op == "power-separation") {
        Poly b = poly_from_json(in.at("b"));
        Poly c = poly_from_json(in.at("c"));
        long t = res.at("t").get<long>();
        const FieldPtr& F = b.field();
        Poly modulus = b.pow(static_cast<unsigned long>(t)) - Poly::one(F);
        FieldEnumeration en(F);
        for (long s = 0; s < t; ++s) {
            Poly bs = b.pow(static_cast<unsigned long>(s));
            for (mpz_class iu = 1; iu < en.size(); ++iu)
                if (((c - bs * Poly::constant(en.at(iu))) % modulus).is_zero())
                    return fail("separation collision at s = " + std::to_string(s));
        }
        return true;
    }
    if (op == "discreteness") {
        FieldPtr F = Field::parse(in.at("field").get<std::string>());
        Poly g = poly_from_json(in.at("g"));
        std::string kind = res.at("kind").get<std::string>();
        if (kind == "NotDiscrete") {
            Poly lambda = poly_from_json(res.at("lambda"));
            Poly f = poly_from_json(res.at("f"));
            mpz_class e(res.at("exponent").get<std::string>());
            if (lambda.pow_mod(e, f) != lambda % f) return fail("exponent witness fails");
            if (e <= 1) return fail("exponent must move lambda");
        } else if (kind == "Discrete") {
            FieldElement s1 = element_from_json(res.at("s1"));
            FieldElement s2 = element_from_json(res.at("s2"));
            FieldElement v1 = g.evaluate(s1), v2 = g.evaluate(s2);
            if (v1.is_zero() || v2.is_zero()) return fail("pair hits a zero of g");
            if (is_root_of_unity(v1 / v2)) return fail("ratio is a root of unity");
        }
        return true;
    }
    if (op == "char-zero") {
        Poly lambda = poly_from_json(in.at("lambda"));
        Poly f = poly_from_json(in.at("f"));
        CharZeroVerdict v = char_zero_obstruction(lambda, f, in.at("depth").get<long>(),
                                                  in.at("m_max").get<long>());
        if (char_zero_to_json(v) != res) return fail("refutations do not replay");
        return true;
    }
    if (op == "fingerprint") {
        FieldPtr F = Field::parse(in.at("field").get<std::string>());
        FieldFingerprint fp = fingerprint(F, in.at("order_bound").get<long>(),
                                          in.at("n_max").get<long>());
        if (fingerprint_to_json(fp) != res) return fail("fingerprint does not replay");
        return true;
    }
    if (op == "battery") {
        BatteryResult r = battery(Field::parse(in.at("field1").get<std::string>()),
                                  Field::parse(in.at("field2").get<std::string>()),
                                  in.at("order_bound").get<long>(), in.at("n_max").get<long>());
        if (battery_to_json(r) != res) return fail("battery verdict does not replay");
        return true;
    }
    // field, sequence echoes and other certificate-free ops verify vacuously
    return true;
}

}  // namespace

std::vector<ClaimCheck> verify_report(const json& report) {
    if (!report.contains("entries"))
        throw Error(Err::ReportError, "report has no entries array");
    std::uint64_t seed = report.value("seed", std::uint64_t{1});
    std::vector<ClaimCheck> out;
    const json& entries = report["entries"];
    for (std::size_t i = 0; i < entries.size(); ++i) {
        ClaimCheck c{i, entries[i].value("op", "?"), true, "ok"};
        try {
            if (!verify_entry(entries[i], seed, c.message)) c.pass = false;
        } catch (const std::exception& ex) {
            c.pass = false;
            c.message = ex.what();
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string report_to_csv(const json& report) {
    std::ostringstream os;
    os << "index,op,finding,summary\n";
    const json& entries = report.at("entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const json& e = entries[i];
        std::string summary;
        if (e.at("op") == "dirichlet") {
            summary = std::to_string(e["result"]["cosets"].get<long>()) + " cosets, " +
                      std::to_string(e["result"]["missing"].get<long>()) + " missing";
        } else if (e["result"].contains("status")) {
            summary = e["result"]["status"].get<std::string>();
        } else if (e["result"].contains("separated")) {
            summary = e["result"]["separated"].get<bool>() ? "Separated" : "NotSeparated";
        }
        os << i << "," << e.at("op").get<std::string>() << ","
           << (e.value("finding", false) ? 1 : 0) << "," << summary << "\n";
        if (e.at("op") == "dirichlet") {
            for (const auto& row : e["result"]["rows"]) {
                os << i << ",dirichlet-coset,0,\"" << row["modulus"].get<std::string>() << " | "
                   << row["center"].get<std::string>() << " -> "
                   << (row["found"].get<bool>() ? row["witness"].get<std::string>() : "MISSING")
                   << "\"\n";
            }
        }
    }
    return os.str();
}

int findings_exit_code(const json& report) {
    for (const auto& e : report.at("entries"))
        if (e.value("finding", false)) return 2;
    return 0;
}

}  // namespace golomb
