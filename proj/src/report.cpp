#include "balanced/report.hpp"

#include "balanced/balance.hpp"
#include "balanced/designs.hpp"
#include "balanced/errors.hpp"
#include "balanced/symmetry.hpp"

namespace balanced {

AnalysisReport analyze(const Configuration& c, unsigned cap, unsigned threads) {
  AnalysisReport r;
  r.label = c.label();
  r.size = c.size();
  r.ambient_dim = c.ambient_dim();
  r.spectrum = inner_product_spectrum(c);
  r.balanced = check_balanced(c, threads).balanced;

  const TheoremOneVerdict t1 = theorem1_check(c, cap);
  r.design_cap = cap;
  r.design_strength = t1.strength;
  r.distance_counts = t1.distance_counts;
  r.theorem1_applies = t1.applies;

  const PermutationGroup group = symmetry_group(c);
  r.symmetry_order = group.order_string();
  for (const auto& orbit : orbits(group)) r.orbit_sizes.push_back(orbit.size());
  const GroupBalanceReport gb = check_group_balanced(c, group);
  r.group_balanced = gb.group_balanced;
  r.witnesses = gb.witnesses;

  if (r.theorem1_applies && !r.balanced) throw ConsistencyError("design criterion holds on an unbalanced configuration");
  if (r.group_balanced && !r.balanced) throw ConsistencyError("group-balanced configuration is not balanced");
  return r;
}

Json to_json(const AnalysisReport& r) {
  Json doc;
  doc["label"] = r.label;
  doc["points"] = r.size;
  doc["ambient_dim"] = r.ambient_dim;
  Json spectrum = Json::array();
  for (const auto& u : r.spectrum) spectrum.push_back(u.str());
  doc["spectrum"] = std::move(spectrum);
  doc["balanced"] = r.balanced;
  doc["design_cap"] = r.design_cap;
  doc["design_strength"] = r.design_strength;
  doc["distance_counts"] = r.distance_counts;
  doc["theorem1_applies"] = r.theorem1_applies;
  doc["symmetry_order"] = r.symmetry_order;
  doc["orbit_sizes"] = r.orbit_sizes;
  doc["group_balanced"] = r.group_balanced;
  doc["witnesses"] = r.witnesses;
  return doc;
}

}  // namespace balanced
