#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "balanced/errors.hpp"
#include "balanced/io.hpp"
#include "support.hpp"

using namespace balanced;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("balanced_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("configuration JSON round trip") {
  for (const auto& [name, c] : testing::bundled_configurations()) {
    CAPTURE(name);
    const Json doc = configuration_to_json(c);
    const Configuration back = configuration_from_json(Json::parse(doc.dump()));
    CHECK(back.gram() == c.gram());
    CHECK(back.label() == c.label());
    CHECK(back.point_labels() == c.point_labels());
  }
  const auto path = std::filesystem::temp_directory_path() / "balanced_test_roundtrip.json";
  write_json_file(path, configuration_to_json(c7_prime()));
  CHECK(configuration_from_json(read_json_file(path)).gram() == c7_prime().gram());
  std::filesystem::remove(path);
}

TEST_CASE("integer and string Gram entries") {
  const Json doc = Json::parse(R"({"gram": [[1, "-1/3"], ["-1/3", "1"]]})");
  const Configuration c = configuration_from_json(doc);
  CHECK(c.inner(0, 1) == Rational(-1, 3));
  CHECK(std::holds_alternative<Configuration>(any_configuration_from_json(doc)));
  CHECK(std::holds_alternative<CoordinateSet>(any_configuration_from_json(Json::parse(R"({"coords": [[1, 0], [0, 1]]})"))));
}

TEST_CASE("field diagnostics") {
  CHECK(error_of([] { configuration_from_json(Json::parse("[1]")); }).find("top level") != std::string::npos);
  CHECK(error_of([] { configuration_from_json(Json::parse("{}")); }).find("\"gram\"") != std::string::npos);
  CHECK(error_of([] { configuration_from_json(Json::parse(R"({"gram": [[1, "x"], [0, 1]]})")); })
            .find("gram[0][1]") != std::string::npos);
  CHECK(error_of([] { configuration_from_json(Json::parse(R"({"gram": [[1, 0], [0]]})")); }).find("gram[1]") !=
        std::string::npos);
  CHECK(error_of([] { configuration_from_json(Json::parse(R"({"gram": [[1, 0], [0, 1]], "labels": [1, 2]})")); })
            .find("labels[0]") != std::string::npos);
  CHECK(error_of([] { coordinates_from_json(Json::parse(R"({"coords": [[1, "a"]]})")); }).find("coords[0][1]") !=
        std::string::npos);
  CHECK(error_of([] { any_configuration_from_json(Json::parse(R"({"points": []})")); }).find("gram") !=
        std::string::npos);
}

TEST_CASE("malformed files") {
  const auto bad = temp_file("bad.json", "{\"gram\": [[1, 0],");
  CHECK(error_of([&] { read_json_file(bad); }).find(bad.string()) == 0);
  std::filesystem::remove(bad);
  CHECK_THROWS_AS(read_json_file("/nonexistent/balanced.json"), InputError);
}

TEST_CASE("graph files") {
  std::istringstream good("0 1 1\n1 0 1\n\n1 1 0\n");
  CHECK(read_graph(good).rows() == 3);
  std::istringstream ragged("0 1\n1 0 1\n");
  CHECK(error_of([&] { read_graph(ragged); }).find("line 2") != std::string::npos);
  std::istringstream token("0 2\n2 0\n");
  CHECK(error_of([&] { read_graph(token); }).find("line 1") != std::string::npos);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_graph(empty), InputError);
  std::istringstream wide("0 1 1\n1 0 1\n");
  CHECK_THROWS_AS(read_graph(wide), InputError);
  CHECK(load_graph("figure1").rows() == 25);
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.txt"), InputError);
}

TEST_CASE("lattice JSON") {
  const LatticeGram g = lattice_from_json(Json::parse(R"({"label": "A2", "gram": [[2, 1], [1, 2]]})"));
  CHECK(g.dim() == 2);
  CHECK(g.label() == "A2");
  CHECK(error_of([] { lattice_from_json(Json::parse(R"({"gram": [[2, 1], [1, 2.5]]})")); }).find("gram[1][1]") !=
        std::string::npos);
  CHECK_THROWS_AS(lattice_from_json(Json::parse(R"({"gram": [[1, 2], [2, 1]]})")), InputError);
  CHECK_THROWS_AS(load_lattice("no-such-lattice"), InputError);
}

TEST_CASE("euclidean JSON") {
  const EuclideanPointSet e = euclidean_from_json(
      Json::parse(R"({"points": [["0", "0"], ["1/2", "1/2"]], "period": [[1, 0], [0, 1]], "cutoff": "3/2"})"));
  CHECK(e.points.size() == 2);
  REQUIRE(e.period.has_value());
  CHECK(e.period->rows() == 2);
  CHECK(e.cutoff == Rational(3, 2));
  CHECK(check_balanced_euclidean(e).balanced);
  CHECK_THROWS_AS(euclidean_from_json(Json::parse(R"({"points": [[0, 0]], "period": [[1, 0, 0]]})")), InputError);
}

TEST_CASE("report serializers") {
  const Json b = to_json(check_balanced(cube()));
  CHECK(b["balanced"] == true);
  CHECK(b["violations"].empty());
  const Json d = to_json(design_strength(cube(), 5));
  CHECK(d["strength"] == 3);
  const Json g = group_to_json(symmetry_group(cube()));
  CHECK(g["order"] == "48");
}
