#include "golomb/json_io.hpp"

#include "golomb/error.hpp"

namespace golomb {

json field_to_json(const FieldPtr& F) {
    json j;
    j["desc"] = F->to_string();
    if (F->kind() == FieldKind::Extension) j["modulus"] = F->modulus();
    return j;
}

FieldPtr field_from_json(const json& j) {
    if (j.is_string()) return Field::parse(j.get<std::string>());
    std::string desc = j.at("desc").get<std::string>();
    if (j.contains("modulus")) {
        FieldPtr probe = Field::parse(desc);
        return Field::extension(probe->characteristic(), j["modulus"].get<fpx::Vec>());
    }
    return Field::parse(desc);
}

json element_to_json(const FieldElement& a) {
    return json{{"field", field_to_json(a.field())}, {"value", a.to_string()}};
}

FieldElement element_from_json(const json& j) {
    FieldPtr F = field_from_json(j.at("field"));
    return F->parse_element(j.at("value").get<std::string>());
}

json poly_to_json(const Poly& a) {
    json coeffs = json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(c.to_string());
    return json{{"field", field_to_json(a.field())}, {"coeffs", coeffs}, {"text", a.to_string()}};
}

Poly poly_from_json(const json& j) {
    FieldPtr F = field_from_json(j.at("field"));
    std::vector<FieldElement> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(F->parse_element(c.get<std::string>()));
    return Poly(F, std::move(coeffs));
}

json closure_verdict_to_json(const ClosureVerdict& v) {
    json j;
    switch (v.status) {
        case ClosureVerdict::Status::In: j["status"] = "In"; break;
        case ClosureVerdict::Status::NotIn: j["status"] = "NotIn"; break;
        case ClosureVerdict::Status::InUpToDepth: j["status"] = "InUpToDepth"; break;
    }
    j["depth"] = v.depth;
    json ws = json::array();
    for (const auto& w : v.witnesses)
        ws.push_back(json{{"depth", w.depth}, {"m", w.m.get_str()}, {"u", w.u.to_string()}});
    j["witnesses"] = ws;
    if (v.failing_residue) j["failing_residue"] = poly_to_json(*v.failing_residue);
    return j;
}

ClosureVerdict closure_verdict_from_json(const json& j, const FieldPtr& F) {
    ClosureVerdict v{ClosureVerdict::Status::InUpToDepth, j.at("depth").get<long>(), {}, {}};
    std::string st = j.at("status").get<std::string>();
    if (st == "In") v.status = ClosureVerdict::Status::In;
    else if (st == "NotIn") v.status = ClosureVerdict::Status::NotIn;
    else if (st == "InUpToDepth") v.status = ClosureVerdict::Status::InUpToDepth;
    else throw Error(Err::ReportError, "bad closure status '" + st + "'");
    for (const auto& w : j.at("witnesses")) {
        v.witnesses.push_back({w.at("depth").get<long>(),
                               mpz_class(w.at("m").get<std::string>()),
                               F->parse_element(w.at("u").get<std::string>())});
    }
    if (j.contains("failing_residue")) v.failing_residue = poly_from_json(j["failing_residue"]);
    return v;
}

json bruteforce_to_json(const BruteForceResult& r) {
    json j{{"consistent", r.consistent}, {"bound", r.bound}};
    if (r.witness) j["witness"] = poly_to_json(*r.witness);
    return j;
}

json intersection_to_json(const CosetIntersection& r) {
    json j{{"intersects", r.intersects}};
    if (r.witness) j["witness"] = poly_to_json(*r.witness);
    return j;
}

json frobenius_to_json(const FrobeniusWitness& w) {
    return json{{"m", w.m.get_str()}, {"u", w.u.to_string()}, {"k", w.k}};
}

json sequence_spec_to_json(const RSequenceSpec& E) {
    json j;
    j["base"] = poly_to_json(E.base());
    j["p"] = E.p();
    json units{{"tail", E.units().tail.to_string()}};
    json uprefix = json::array();
    for (const auto& u : E.units().prefix) uprefix.push_back(u.to_string());
    units["prefix"] = uprefix;
    j["unit_rule"] = units;
    json exps;
    if (std::holds_alternative<LinearRule>(E.exponents())) {
        exps["kind"] = "linear";
    } else if (const auto* sub = std::get_if<SubgroupRule>(&E.exponents())) {
        exps["kind"] = "subgroup";
        exps["field"] = field_to_json(sub->generators.front().field());
        json gens = json::array();
        for (const auto& h : sub->generators) gens.push_back(h.to_string());
        exps["generators"] = gens;
        j["M"] = sub->generators.front().field()->extension_degree();
    } else {
        const auto& ex = std::get<ExplicitRule>(E.exponents());
        exps["kind"] = "explicit";
        json prefix = json::array();
        for (const auto& e : ex.prefix) prefix.push_back(e.get_str());
        exps["prefix"] = prefix;
        switch (ex.tail) {
            case ExplicitRule::Tail::None: exps["tail"] = "none"; break;
            case ExplicitRule::Tail::Constant: exps["tail"] = "constant"; break;
            case ExplicitRule::Tail::PPower: exps["tail"] = "ppower"; break;
        }
        if (ex.tail != ExplicitRule::Tail::None) exps["tail_value"] = ex.tail_value.get_str();
    }
    j["exponent_rule"] = exps;
    return j;
}

RSequenceSpec sequence_spec_from_json(const json& j) {
    Poly base = poly_from_json(j.at("base"));
    const FieldPtr& K = base.field();
    const json& ju = j.at("unit_rule");
    UnitRule units{{}, K->parse_element(ju.at("tail").get<std::string>())};
    if (ju.contains("prefix"))
        for (const auto& u : ju["prefix"])
            units.prefix.push_back(K->parse_element(u.get<std::string>()));
    const json& je = j.at("exponent_rule");
    std::string kind = je.at("kind").get<std::string>();
    if (kind == "linear") return RSequenceSpec(base, units, LinearRule{});
    if (kind == "subgroup") {
        FieldPtr Fg = field_from_json(je.at("field"));
        SubgroupRule rule;
        for (const auto& h : je.at("generators"))
            rule.generators.push_back(Fg->parse_element(h.get<std::string>()));
        return RSequenceSpec(base, units, rule);
    }
    if (kind == "explicit") {
        ExplicitRule rule;
        for (const auto& e : je.at("prefix")) rule.prefix.emplace_back(e.get<std::string>());
        std::string tail = je.at("tail").get<std::string>();
        if (tail == "none") rule.tail = ExplicitRule::Tail::None;
        else if (tail == "constant") rule.tail = ExplicitRule::Tail::Constant;
        else if (tail == "ppower") rule.tail = ExplicitRule::Tail::PPower;
        else throw Error(Err::ReportError, "bad tail kind '" + tail + "'");
        if (rule.tail != ExplicitRule::Tail::None)
            rule.tail_value = mpz_class(je.at("tail_value").get<std::string>());
        return RSequenceSpec(base, units, rule);
    }
    throw Error(Err::ReportError, "bad exponent rule kind '" + kind + "'");
}

namespace {
const char* clause_name(ClauseResult r) {
    switch (r) {
        case ClauseResult::Holds: return "holds";
        case ClauseResult::Fails: return "fails";
        case ClauseResult::Undecided: return "undecided";
    }
    return "?";
}
}  // namespace

json convergence_to_json(const ConvergenceVerdict& v) {
    json j;
    switch (v.status) {
        case ConvergenceVerdict::Status::Converges: j["status"] = "Converges"; break;
        case ConvergenceVerdict::Status::Diverges: j["status"] = "Diverges"; break;
        case ConvergenceVerdict::Status::Undecided:
            j["status"] = "UndecidedAtDepth";
            j["depth"] = v.undecided_depth;
            break;
    }
    json val{{"result", clause_name(v.valuation.result)}, {"reason", v.valuation.reason}};
    if (v.valuation.witness_index) val["witness_index"] = *v.valuation.witness_index;
    if (v.valuation.witness_valuation)
        val["witness_valuation"] = v.valuation.witness_valuation->get_str();
    j["valuation_clause"] = val;
    json roots = json::array();
    for (const auto& rc : v.roots) {
        json r{{"root", rc.root.to_string()}, {"result", clause_name(rc.result)}};
        if (rc.witness_index) r["witness_index"] = *rc.witness_index;
        roots.push_back(r);
    }
    j["evaluation_clause"] = roots;
    return j;
}

json direct_check_to_json(const DirectCheck& d) {
    json j{{"consistent", d.consistent}, {"k", d.k}, {"N", d.N}};
    json vs = json::array();
    for (const auto& v : d.violations) vs.push_back(json{{"j", v.j}, {"n", v.n}});
    j["violations"] = vs;
    return j;
}

json limit_set_to_json(const LimitSet& ls) {
    json j{{"truncation", ls.truncation}};
    json ideals = json::array();
    for (const auto& q : ls.ideals) ideals.push_back(poly_to_json(q));
    j["ideals"] = ideals;
    json ell = json::array();
    for (const auto& l : ls.ell) ell.push_back(l.to_string());
    j["ell"] = ell;
    j["ell_field"] = ls.ell.empty() ? json() : field_to_json(ls.ell.front().field());
    j["cardinality"] = ls.ell.size();
    return j;
}

json attainable_to_json(const AttainableReport& r) {
    json j{{"p", r.p}, {"n_max", r.n_max}};
    json realized = json::array();
    for (const auto& e : r.realized)
        realized.push_back(json{{"n", e.n},
                                {"M", e.M},
                                {"via_linear", e.via_linear},
                                {"subgroup_order", e.subgroup_order.get_str()}});
    j["realized"] = realized;
    j["unrealized"] = r.unrealized;
    return j;
}

json gn_to_json(const GnClass& g) {
    json j{{"n", g.n}};
    json sup = json::array();
    for (const auto& P : g.support) sup.push_back(poly_to_json(P));
    j["support"] = sup;
    return j;
}

json almost_prime_to_json(const AlmostPrimeResult& r) {
    json j{{"bound", r.bound}, {"found", r.witness.has_value()}};
    if (r.witness) j["witness"] = poly_to_json(*r.witness);
    return j;
}

json chain_to_json(const ChainWitness& w) {
    json j{{"A", poly_to_json(w.A)}, {"a", poly_to_json(w.a)}, {"b", poly_to_json(w.b)},
           {"n", w.n},               {"m", w.m}};
    json tails = json::array();
    for (const auto& [t, k] : w.tails)
        tails.push_back(json{{"t", t.to_string()}, {"k", k.get_str()}});
    j["tails"] = tails;
    return j;
}

json nonregularity_to_json(const NonRegularityWitness& w) {
    return json{{"pq", poly_to_json(w.pq)},
                {"q", poly_to_json(w.q)},
                {"p_elem", poly_to_json(w.p_elem)},
                {"x", poly_to_json(w.x)},
                {"b", poly_to_json(w.b)},
                {"helper", poly_to_json(w.helper)},
                {"divisible_branch", w.divisible_branch},
                {"n", w.n}};
}

json obstruction_to_json(const ObstructionReport& r) {
    json j{{"center", poly_to_json(r.center)},
           {"modulus_degree", r.modulus_degree},
           {"k_bound", r.k_bound},
           {"irreducible_found", r.irreducible_member.has_value()},
           {"linear_power_member_count", r.members.size()}};
    if (r.irreducible_member) j["irreducible"] = poly_to_json(*r.irreducible_member);
    json ms = json::array();
    for (const auto& m : r.members)
        ms.push_back(json{{"u", m.u.to_string()}, {"a", m.a.to_string()}, {"k", m.k}});
    j["members"] = ms;
    return j;
}

json discreteness_to_json(const DiscreteVerdict& v) {
    json j;
    switch (v.kind) {
        case DiscreteVerdict::Kind::NotDiscrete: j["kind"] = "NotDiscrete"; break;
        case DiscreteVerdict::Kind::Discrete: j["kind"] = "Discrete"; break;
        case DiscreteVerdict::Kind::Unknown: j["kind"] = "Unknown"; break;
    }
    if (v.lambda) j["lambda"] = poly_to_json(*v.lambda);
    if (v.f) j["f"] = poly_to_json(*v.f);
    if (v.exponent) j["exponent"] = v.exponent->get_str();
    if (v.s1) j["s1"] = element_to_json(*v.s1);
    if (v.s2) j["s2"] = element_to_json(*v.s2);
    if (v.ratio) j["ratio"] = element_to_json(*v.ratio);
    return j;
}

json char_zero_to_json(const CharZeroVerdict& v) {
    json j;
    j["status"] =
        v.status == CharZeroVerdict::Status::NotInClosure ? "NotInClosure" : "Inconclusive";
    j["depth"] = v.depth;
    j["m_max"] = v.m_max;
    j["symbolic_tail"] = v.symbolic_tail;
    json refs = json::array();
    for (const auto& r : v.refutations) {
        json e{{"m", r.m}, {"forced_u", r.forced_u.get_str()}};
        if (r.degree_bound) {
            e["refuted_by"] = "degree_bound";
        } else {
            e["refuted_by"] = "derivative";
            e["derivative_order"] = r.derivative_order;
            e["derivative_value"] = r.derivative_value.get_str();
        }
        refs.push_back(e);
    }
    j["refutations"] = refs;
    return j;
}

json fingerprint_to_json(const FieldFingerprint& fp) {
    json j{{"field", fp.field},
           {"characteristic", fp.characteristic},
           {"order_bound", fp.order_bound},
           {"n_max", fp.n_max}};
    switch (fp.algebraic_over_prime_field) {
        case Algebraicity::Yes: j["algebraic_over_prime_field"] = "Yes"; break;
        case Algebraicity::No: j["algebraic_over_prime_field"] = "No"; break;
        case Algebraicity::NotApplicable: j["algebraic_over_prime_field"] = "NotApplicable"; break;
    }
    json orders = json::array();
    for (const auto& d : fp.unit_orders) orders.push_back(d.get_str());
    j["unit_orders"] = orders;
    j["attainable_limits"] = fp.attainable;
    return j;
}

json battery_to_json(const BatteryResult& b) {
    return json{{"separated", b.separated},
                {"separating", b.separating},
                {"fingerprint1", fingerprint_to_json(b.fp1)},
                {"fingerprint2", fingerprint_to_json(b.fp2)}};
}

}  // namespace golomb
