#include <doctest.h>

#include "balanced/report.hpp"
#include "support.hpp"

using namespace balanced;

TEST_CASE("C'7 report") {
  const AnalysisReport r = analyze(c7_prime(), 5);
  CHECK(r.size == 28);
  CHECK(r.ambient_dim == 7);
  CHECK(r.spectrum == std::vector<Rational>{Rational(-1, 3), Rational(1, 3)});
  CHECK(r.balanced);
  CHECK_FALSE(r.group_balanced);
  CHECK(r.symmetry_order == "384");
  std::vector<std::size_t> sizes = r.orbit_sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{4, 24});
  CHECK(r.design_strength == 2);
  CHECK(r.theorem1_applies);
}

TEST_CASE("asymmetric strongly regular graph report") {
  const Configuration c = srg_spectral_embedding(load_graph("figure1"));
  const AnalysisReport r = analyze(c, 4);
  CHECK(r.symmetry_order == "1");
  CHECK(r.orbit_sizes.size() == 25);
  CHECK(r.balanced);
  CHECK(r.theorem1_applies);
  CHECK_FALSE(r.group_balanced);
}

TEST_CASE("report JSON is deterministic") {
  const Configuration c = antipodal_union(simplex_midpoints(7));
  const std::string a = to_json(analyze(c, 7)).dump(2);
  const std::string b = to_json(analyze(c, 7, 4)).dump(2);
  CHECK(a == b);
  const Json doc = Json::parse(a);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"label", "points", "ambient_dim", "spectrum", "balanced", "design_cap",
                                         "design_strength", "distance_counts", "theorem1_applies", "symmetry_order",
                                         "orbit_sizes", "group_balanced", "witnesses"});
}

TEST_CASE("reports are internally consistent on bundled configurations") {
  for (const auto& [name, c] : testing::bundled_configurations()) {
    CAPTURE(name);
    const AnalysisReport r = analyze(c, 7);
    if (r.theorem1_applies || r.group_balanced) CHECK(r.balanced);
    std::size_t total = 0;
    for (std::size_t s : r.orbit_sizes) total += s;
    CHECK(total == c.size());
  }
}
