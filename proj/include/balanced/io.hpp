#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <variant>

#include <json.hpp>

#include "balanced/automorphism.hpp"
#include "balanced/balance.hpp"
#include "balanced/configuration.hpp"
#include "balanced/constructors.hpp"
#include "balanced/designs.hpp"
#include "balanced/lattice.hpp"
#include "balanced/numerics.hpp"
#include "balanced/permutation_group.hpp"
#include "balanced/symmetry.hpp"

namespace balanced {

using Json = nlohmann::ordered_json;

/// Parses a file as JSON; InputError carries the path and parser position.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& doc);

/// { "label"?, "gram": [["p/q", ...], ...], "labels"? }. Entries may be
/// rational strings or JSON integers. Throws InputError naming the field.
Configuration configuration_from_json(const Json& doc);
Json configuration_to_json(const Configuration& c);

/// { "label"?, "coords": [[numbers]] }.
CoordinateSet coordinates_from_json(const Json& doc);
Json coordinates_to_json(const CoordinateSet& p);

/// A configuration file holds either an exact Gram or float coordinates.
using AnyConfiguration = std::variant<Configuration, CoordinateSet>;
AnyConfiguration any_configuration_from_json(const Json& doc);

/// { "points": [[rational]], "period"?: [[rational]], "cutoff"?: rational }.
EuclideanPointSet euclidean_from_json(const Json& doc);

/// { "label"?, "gram": [[integers]] }.
LatticeGram lattice_from_json(const Json& doc);

/// Whitespace-separated 0/1 rows, one row per line; blank lines ignored.
AdjacencyMatrix read_graph(std::istream& in);
AdjacencyMatrix read_graph_file(const std::filesystem::path& path);

/// Directory of bundled assets (figure1.txt, lattices/).
std::filesystem::path data_dir();
/// A bundled lattice by name (z2, d4, e8, k12, leech) or a path to a lattice file.
LatticeGram load_lattice(const std::string& name_or_path);
/// The bundled (25,12,5,6) graph ("figure1"), or a graph file.
AdjacencyMatrix load_graph(const std::string& name_or_path);

Json to_json(const BalanceReport& r);
Json to_json(const FloatBalanceReport& r);
Json to_json(const DesignVerdict& v);
Json to_json(const FloatDesignVerdict& v);
Json to_json(const TheoremOneVerdict& v);
Json to_json(const GroupBalanceReport& r);
Json to_json(const ForceReport& r);
/// { "order", "generators", "orbits" }.
Json group_to_json(const PermutationGroup& g);

}  // namespace balanced
