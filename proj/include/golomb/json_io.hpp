#ifndef GOLOMB_JSON_IO_HPP
#define GOLOMB_JSON_IO_HPP

#include <json.hpp>

#include "golomb/invariants.hpp"
#include "golomb/sequences.hpp"
#include "golomb/topology.hpp"

namespace golomb {

using json = nlohmann::json;

// Fields, elements and polynomials travel as descriptor strings plus
// canonical element strings; coefficient lists are lowest degree first.
json field_to_json(const FieldPtr& F);
FieldPtr field_from_json(const json& j);

json element_to_json(const FieldElement& a);
FieldElement element_from_json(const json& j);

json poly_to_json(const Poly& a);
Poly poly_from_json(const json& j);

json closure_verdict_to_json(const ClosureVerdict& v);
ClosureVerdict closure_verdict_from_json(const json& j, const FieldPtr& F);

json bruteforce_to_json(const BruteForceResult& r);
json intersection_to_json(const CosetIntersection& r);
json frobenius_to_json(const FrobeniusWitness& w);

json sequence_spec_to_json(const RSequenceSpec& E);
RSequenceSpec sequence_spec_from_json(const json& j);

json convergence_to_json(const ConvergenceVerdict& v);
json direct_check_to_json(const DirectCheck& d);
json limit_set_to_json(const LimitSet& ls);
json attainable_to_json(const AttainableReport& r);

json gn_to_json(const GnClass& g);
json almost_prime_to_json(const AlmostPrimeResult& r);
json chain_to_json(const ChainWitness& w);
json nonregularity_to_json(const NonRegularityWitness& w);
json obstruction_to_json(const ObstructionReport& r);
json discreteness_to_json(const DiscreteVerdict& v);
json char_zero_to_json(const CharZeroVerdict& v);
json fingerprint_to_json(const FieldFingerprint& fp);
json battery_to_json(const BatteryResult& b);

}  // namespace golomb

#endif
