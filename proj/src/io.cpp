#include "balanced/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "balanced/errors.hpp"

namespace balanced {

namespace {

Rational rational_field(const Json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InputError(where + ": expected a rational string such as \"-1/3\"");
}

const Json& required(const Json& doc, const char* key) {
  if (!doc.is_object()) throw InputError("top level: expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string optional_label(const Json& doc) {
  const auto it = doc.find("label");
  if (it == doc.end() || it->is_null()) return {};
  if (!it->is_string()) throw InputError("label: expected a string");
  return it->get<std::string>();
}

RationalMatrix rational_rows(const Json& rows, const std::string& field, std::size_t width = 0) {
  if (!rows.is_array() || rows.empty()) throw InputError(field + ": expected a nonempty array of rows");
  const std::size_t cols = width != 0 ? width : rows.front().is_array() ? rows.front().size() : 0;
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) throw InputError(where + ": expected an array");
    if (rows[i].size() != cols) throw InputError(where + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational_field(rows[i][j], where + "[" + std::to_string(j) + "]");
  }
  return m;
}

Json indices(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t x : v) out.push_back(x);
  return out;
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << doc.dump(2) << '\n';
}

Configuration configuration_from_json(const Json& doc) {
  RationalMatrix gram = rational_rows(required(doc, "gram"), "gram");
  if (!gram.is_square()) throw InputError("gram: matrix is not square");
  std::vector<std::string> labels;
  if (const auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array()) throw InputError("labels: expected an array of strings");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) throw InputError("labels[" + std::to_string(i) + "]: expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
  }
  return Configuration::from_gram(std::move(gram), optional_label(doc), std::move(labels));
}

Json configuration_to_json(const Configuration& c) {
  Json doc;
  doc["label"] = c.label();
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < c.size(); ++j) row.push_back(c.inner(i, j).str());
    rows.push_back(std::move(row));
  }
  doc["gram"] = std::move(rows);
  if (!c.point_labels().empty()) doc["labels"] = c.point_labels();
  return doc;
}

CoordinateSet coordinates_from_json(const Json& doc) {
  const Json& rows = required(doc, "coords");
  if (!rows.is_array() || rows.empty()) throw InputError("coords: expected a nonempty array of points");
  std::vector<Point> points;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "coords[" + std::to_string(i) + "]";
    if (!rows[i].is_array()) throw InputError(where + ": expected an array");
    Point x;
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      if (!rows[i][k].is_number()) throw InputError(where + "[" + std::to_string(k) + "]: expected a number");
      x.push_back(rows[i][k].get<double>());
    }
    points.push_back(std::move(x));
  }
  return make_coordinates(std::move(points), optional_label(doc));
}

Json coordinates_to_json(const CoordinateSet& p) {
  Json doc;
  doc["label"] = p.label;
  doc["coords"] = p.points;
  return doc;
}

AnyConfiguration any_configuration_from_json(const Json& doc) {
  if (doc.is_object() && doc.contains("gram")) return configuration_from_json(doc);
  if (doc.is_object() && doc.contains("coords")) return coordinates_from_json(doc);
  throw InputError("configuration file needs a \"gram\" or a \"coords\" field");
}

EuclideanPointSet euclidean_from_json(const Json& doc) {
  EuclideanPointSet out;
  const RationalMatrix pts = rational_rows(required(doc, "points"), "points");
  for (std::size_t i = 0; i < pts.rows(); ++i) out.points.emplace_back(pts.row(i).begin(), pts.row(i).end());
  if (const auto it = doc.find("period"); it != doc.end() && !it->is_null()) {
    out.period = rational_rows(*it, "period", pts.cols());
  }
  if (const auto it = doc.find("cutoff"); it != doc.end() && !it->is_null()) out.cutoff = rational_field(*it, "cutoff");
  return out;
}

LatticeGram lattice_from_json(const Json& doc) {
  const Json& rows = required(doc, "gram");
  if (!rows.is_array() || rows.empty()) throw InputError("gram: expected a nonempty array of rows");
  Matrix<std::int64_t> m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "gram[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != rows.size()) throw InputError(where + ": expected " + std::to_string(rows.size()) + " integers");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!rows[i][j].is_number_integer()) throw InputError(where + "[" + std::to_string(j) + "]: expected an integer");
      m(i, j) = rows[i][j].get<std::int64_t>();
    }
  }
  return LatticeGram::from_matrix(std::move(m), optional_label(doc));
}

AdjacencyMatrix read_graph(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<int> row;
    std::string tok;
    while (tokens >> tok) {
      if (tok != "0" && tok != "1") throw InputError("line " + std::to_string(line_no) + ": expected 0 or 1, got '" + tok + "'");
      row.push_back(tok == "1" ? 1 : 0);
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("line " + std::to_string(line_no) + ": row length " + std::to_string(row.size()) + " differs from " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("graph file is empty");
  if (rows.size() != rows.front().size()) throw InputError("adjacency matrix is not square");
  AdjacencyMatrix a(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = rows[i][j];
  }
  return a;
}

AdjacencyMatrix read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return read_graph(in);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("BALANCED_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return BALANCED_DATA_DIR;
}

LatticeGram load_lattice(const std::string& name_or_path) {
  const auto bundled = data_dir() / "lattices" / (name_or_path + ".json");
  const std::filesystem::path path = std::filesystem::exists(bundled) ? bundled : std::filesystem::path(name_or_path);
  try {
    return lattice_from_json(read_json_file(path));
  } catch (const InputError& e) {
    if (std::string(e.what()).starts_with(path.string())) throw;
    throw InputError(path.string() + ": " + e.what());
  }
}

AdjacencyMatrix load_graph(const std::string& name_or_path) {
  if (name_or_path == "figure1") return read_graph_file(data_dir() / "figure1.txt");
  return read_graph_file(name_or_path);
}

Json to_json(const BalanceReport& r) {
  Json doc;
  doc["balanced"] = r.balanced;
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e;
    e["point"] = x.point;
    e["shell"] = x.shell_value.str();
    e["deviation"] = rationals(x.deviation);
    v.push_back(std::move(e));
  }
  doc["violations"] = std::move(v);
  return doc;
}

Json to_json(const FloatBalanceReport& r) {
  Json doc;
  doc["balanced"] = r.balanced;
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e;
    e["point"] = x.point;
    e["shell"] = x.shell_value;
    e["deviation"] = x.deviation;
    v.push_back(std::move(e));
  }
  doc["violations"] = std::move(v);
  return doc;
}

Json to_json(const DesignVerdict& v) {
  Json doc;
  doc["strength"] = v.strength;
  doc["cap"] = v.cap;
  doc["moments"] = rationals(v.moments);
  return doc;
}

Json to_json(const FloatDesignVerdict& v) {
  Json doc;
  doc["strength"] = v.strength;
  doc["cap"] = v.cap;
  doc["moments"] = v.moments;
  return doc;
}

Json to_json(const TheoremOneVerdict& v) {
  Json doc;
  doc["applies"] = v.applies;
  doc["strength"] = v.strength;
  doc["distance_counts"] = v.distance_counts;
  return doc;
}

Json to_json(const GroupBalanceReport& r) {
  Json doc;
  doc["group_balanced"] = r.group_balanced;
  doc["witnesses"] = indices(r.witnesses);
  doc["fixed_dims"] = indices(r.fixed_dims);
  return doc;
}

Json to_json(const ForceReport& r) {
  Json doc;
  doc["s"] = r.s;
  doc["max_tangential"] = r.max_tangential;
  doc["forces"] = r.forces;
  return doc;
}

Json group_to_json(const PermutationGroup& g) {
  Json doc;
  doc["order"] = g.order_string();
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(indices(p.images()));
  doc["generators"] = std::move(gens);
  Json orbs = Json::array();
  for (const auto& o : orbits(g)) orbs.push_back(indices(o));
  doc["orbits"] = std::move(orbs);
  return doc;
}

}  // namespace balanced
