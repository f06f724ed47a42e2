#pragma once

#include "json.hpp"

#include "hopf/boundary_model.hpp"
#include "hopf/domains.hpp"
#include "hopf/flows.hpp"
#include "hopf/invariants.hpp"
#include "hopf/levi.hpp"
#include "hopf/quotient.hpp"
#include "hopf/robin.hpp"

namespace hopf {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

json to_json(cplx x);
json to_json(CPair p);
json to_json(const RationalityResult& r);
json to_json(const InvariantSet& inv);
json to_json(const HopfPoint& p);
json to_json(const LeafSpec& leaf);
json to_json(const DomainSpec& spec);
json to_json(const ClassificationResult& c);
json to_json(const FiberSet& f, bool with_samples = false);
json to_json(const ClosureClass& c);
json to_json(const TangencyReport& t);
json to_json(const LeviScanReport& r);
json to_json(const DiamondResult& d);
json to_json(const SweepReport& s);
json to_json(const RobinEstimate& e);
json to_json(const DistanceBracket& d);
json to_json(const BoundaryRow& r);
json to_json(const PshReport& r);
json to_json(const NemirovskiiQuotientReport& r);

/// Top-level document: {"schema": 1, "command": name, ...body}.
json document(std::string_view command, json body);

/// Walk-on-spheres settings from {"walks", "eps_shell", "r_max_factor", "seed", "shards"}.
void apply_wos_json(const json& j, RobinBudget& budget);

}  // namespace hopf
