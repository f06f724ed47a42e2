#include "hopf/serialize.hpp"

#include <cmath>

namespace hopf {

namespace {

/// Non-finite numbers become the strings "inf", "-inf" or "nan".
json num(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

json fraction(const Fraction& f) { return {{"num", f.num}, {"den", f.den}}; }

}  // namespace

json to_json(cplx x) { return json::array({num(x.real()), num(x.imag())}); }

json to_json(CPair p) { return {{"z", to_json(p.z)}, {"w", to_json(p.w)}}; }

json to_json(const RationalityResult& r) {
  return {{"kind", r.is_rational() ? "ExactRational" : "HeuristicIrrational"},
          {"value", fraction(r.value)},
          {"residual", num(r.residual)},
          {"tolerance", num(r.tolerance)},
          {"max_denominator", r.max_denominator},
          {"declared", r.declared}};
}

json to_json(const InvariantSet& inv) {
  json j;
  j["a"] = to_json(inv.params.a());
  j["b"] = to_json(inv.params.b());
  j["rho"] = num(inv.rho);
  j["rho_rationality"] = to_json(inv.rho_rationality);
  j["tau"] = inv.tau ? num(*inv.tau) : json(nullptr);
  j["tau_rationality"] = inv.tau_rationality ? to_json(*inv.tau_rationality) : json(nullptr);
  j["p"] = inv.p;
  j["q"] = inv.q;
  j["l"] = inv.l;
  j["m"] = inv.m;
  j["g"] = inv.g;
  j["nu"] = inv.nu;
  json K = json::array();
  for (const cplx& k : inv.K) K.push_back(to_json(k));
  j["K"] = K;
  j["case_tag"] = to_string(inv.case_tag);
  return j;
}

json to_json(const HopfPoint& p) {
  return {{"rep", to_json(p.rep)}, {"lift_index", p.lift_index}, {"on_Ta", p.on_Ta}, {"on_Tb", p.on_Tb}};
}

json to_json(const LeafSpec& leaf) {
  static constexpr const char* kinds[] = {"ModulusLeaf", "ComplexLeaf", "Ta", "Tb"};
  return {{"kind", kinds[static_cast<int>(leaf.kind)]}, {"c", to_json(leaf.c)}, {"description", leaf.describe()}};
}

json to_json(const DomainSpec& spec) {
  json j{{"kind", spec.kind_name()}};
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LevelBand>) {
          j["k1"] = s.k1;
          j["k2"] = s.k2;
        } else if constexpr (std::is_same_v<T, SubLevel> || std::is_same_v<T, SuperLevel>) {
          j["k"] = s.k;
        } else if constexpr (std::is_same_v<T, LeafFamily>) {
          j["delta"] = s.label;
          j["zero"] = to_string(s.zero);
          j["infinity"] = to_string(s.infinity);
        } else if constexpr (std::is_same_v<T, Nemirovskii>) {
          j["A"] = s.A;
          j["B"] = s.B;
        } else {
          j["psi"] = s.label;
          j["boundary_contains_Ta"] = s.boundary_contains_Ta;
          j["boundary_contains_Tb"] = s.boundary_contains_Tb;
        }
      },
      spec.kind);
  return j;
}

json to_json(const ClassificationResult& c) {
  json verdict{{"kind", to_string(c.stein_verdict.kind)},
               {"witness", c.stein_verdict.witness ? to_json(*c.stein_verdict.witness) : json(nullptr)},
               {"reason", c.stein_verdict.reason}};
  return {{"theorem1_type", to_string(c.theorem1_type)},
          {"delta", c.delta_description.empty() ? json(nullptr) : json(c.delta_description)},
          {"stein_verdict", verdict},
          {"notes", c.notes}};
}

json to_json(const FiberSet& f, bool with_samples) {
  json j{{"z_prime", to_json(f.z_prime)},
         {"cardinality", f.samples.size()},
         {"min_abs", num(f.min_abs)},
         {"max_abs", num(f.max_abs)},
         {"star_discrepancy", num(star_discrepancy(f.arguments))},
         {"n_axis_degenerate", f.n_axis_degenerate},
         {"k_axis_degenerate", f.k_axis_degenerate}};
  if (with_samples) {
    json s = json::array();
    for (const auto& x : f.samples) s.push_back({{"n", x.n}, {"k", x.k}, {"w", to_json(x.w)}});
    j["samples"] = s;
  }
  return j;
}

json to_json(const ClosureClass& c) {
  json decay_a = json::array(), decay_b = json::array();
  for (double v : c.evidence.ta_decay) decay_a.push_back(num(v));
  for (double v : c.evidence.tb_decay) decay_b.push_back(num(v));
  return {{"tag", to_string(c.tag)},
          {"sheets", c.sheets},
          {"evidence",
           {{"modulus_residual", num(c.evidence.modulus_residual)},
            {"fiber_discrepancy", num(c.evidence.fiber_discrepancy)},
            {"fiber_cardinality", c.evidence.fiber_cardinality},
            {"ta_decay", decay_a},
            {"tb_decay", decay_b}}}};
}

json to_json(const TangencyReport& t) {
  return {{"tangential", t.tangential},
          {"max_drift", num(t.max_drift)},
          {"boundary_samples", t.boundary_samples},
          {"interior_samples", t.interior_samples},
          {"escapes", t.escapes},
          {"skipped", t.skipped},
          {"symbolic_rate", t.symbolic_rate ? num(*t.symbolic_rate) : json(nullptr)}};
}

json to_json(const LeviScanReport& r) {
  json v = json::array();
  for (const auto& s : r.violations) v.push_back({{"point", to_json(s.point)}, {"levi", num(s.levi)}});
  return {{"pseudoconvex", r.pseudoconvex},
          {"min_levi", num(r.min_levi)},
          {"max_abs_levi", num(r.max_abs_levi)},
          {"boundary_samples", r.boundary_samples},
          {"skipped", r.skipped},
          {"violations", v}};
}

json to_json(const DiamondResult& d) {
  return {{"found", d.found},
          {"z_star", d.found ? to_json(d.z_star) : json(nullptr)},
          {"p0_value", d.found ? num(d.p0_value) : json(nullptr)},
          {"case", d.case_taken ? json(to_string(*d.case_taken)) : json(nullptr)},
          {"halvings", d.halvings},
          {"trace", d.trace},
          {"warnings", d.warnings}};
}

json to_json(const SweepReport& s) {
  json samples = json::array();
  for (const auto& x : s.samples) samples.push_back({{"w", to_json(x.w)}, {"t", x.t}, {"residual", num(x.residual)}});
  return {{"certified", s.certified},
          {"r_prime", num(s.r_prime)},
          {"halvings", s.halvings},
          {"max_residual", num(s.max_residual)},
          {"diamond", to_json(s.diamond)},
          {"samples", samples}};
}

json to_json(const RobinEstimate& e) {
  return {{"lambda_hat", num(e.lambda_hat)},
          {"stderr", num(e.stderr_)},
          {"n_walks", e.n_walks},
          {"c_weight", e.c_weight},
          {"kernel_normalization", e.kernel_normalization},
          {"seed", e.seed},
          {"truncated_walks", e.truncated_walks},
          {"escaped_walks", e.escaped_walks},
          {"mean_steps", num(e.mean_steps)},
          {"escape_bias_bound", num(e.escape_bias_bound)},
          {"qualitative", e.qualitative}};
}

json to_json(const DistanceBracket& d) { return {{"lower", num(d.lower)}, {"upper", num(d.upper)}}; }

json to_json(const BoundaryRow& r) {
  return {{"anchor", to_json(r.anchor)},
          {"theta", r.theta ? num(*r.theta) : json(nullptr)},
          {"dist", to_json(r.dist)},
          {"estimate", to_json(r.est)}};
}

json to_json(const PshReport& r) {
  json ring = json::array();
  for (double v : r.ring_values) ring.push_back(num(v));
  return {{"center_value", num(r.center_value)},
          {"ring_mean", num(r.ring_mean)},
          {"residual", num(r.residual)},
          {"combined_stderr", num(r.combined_stderr)},
          {"consistent", r.consistent},
          {"ring_values", ring}};
}

json to_json(const NemirovskiiQuotientReport& r) {
  return {{"all_pass", r.all_pass()},
          {"forward_samples", r.forward_samples},
          {"forward_pass", r.forward_pass},
          {"case1", r.case1},
          {"case2", r.case2},
          {"converse_samples", r.converse_samples},
          {"converse_pass", r.converse_pass},
          {"negative_samples", r.negative_samples},
          {"negative_rejected", r.negative_rejected}};
}

json document(std::string_view command, json body) {
  json j{{"schema", kSchemaVersion}, {"command", command}};
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

void apply_wos_json(const json& j, RobinBudget& budget) {
  if (j.contains("walks")) budget.walks = j.at("walks").get<std::uint64_t>();
  if (j.contains("seed")) budget.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("eps_shell")) budget.wos.eps_shell = j.at("eps_shell").get<double>();
  if (j.contains("r_max_factor")) budget.wos.r_max_factor = j.at("r_max_factor").get<double>();
  if (j.contains("shards")) budget.wos.shards = j.at("shards").get<int>();
  if (j.contains("max_steps")) budget.wos.max_steps = j.at("max_steps").get<std::uint64_t>();
  if (j.contains("c_weight")) budget.c_weight = j.at("c_weight").get<double>();
}

}  // namespace hopf
