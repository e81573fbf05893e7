// Command-line front end. Exit codes: 0 property holds, 1 property fails,
// 2 input error, 3 resource limit, 4 internal consistency failure.

#include <chrono>
#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "balanced/errors.hpp"
#include "balanced/io.hpp"
#include "balanced/report.hpp"

namespace {

using namespace balanced;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kResourceLimit = 3;
constexpr int kInternalError = 4;

// Lattices at or above this dimension are only enumerated with --allow-slow.
constexpr std::size_t kSlowDimension = 20;

struct Options {
  unsigned threads = 1;
  std::string output;
  std::string file;
  unsigned cap = 12;
  double tol = 1e-9;
  double s = 1;
  unsigned n = 3;
  unsigned k = 5;
  std::string eigen = "r";
  bool complement = false;
  bool allow_slow = false;
  std::size_t max_points = 20000;
  bool show_orbits = false;
  std::optional<std::size_t> stabilizer;
  std::string name;
  unsigned samples = 16;
};

void emit(const Options& opt, const Json& doc) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << doc.dump(2) << '\n';
  } else {
    write_json_file(opt.output, doc);
  }
}

AnyConfiguration load_any(const std::string& path) { return any_configuration_from_json(read_json_file(path)); }

Configuration load_exact(const std::string& path) {
  auto any = load_any(path);
  if (auto* c = std::get_if<Configuration>(&any)) return std::move(*c);
  throw InputError(path + ": this command needs an exact \"gram\" configuration");
}

CoordinateSet load_coordinates(const std::string& path) {
  auto any = load_any(path);
  if (auto* p = std::get_if<CoordinateSet>(&any)) return std::move(*p);
  return coordinates_from_gram(std::get<Configuration>(any));
}

void require_feasible(const LatticeGram& g, const Options& opt) {
  if (g.dim() >= kSlowDimension && !opt.allow_slow) {
    throw ResourceLimitError("lattice of dimension " + std::to_string(g.dim()) +
                             " needs --allow-slow (enumeration may take minutes)");
  }
}

Configuration build_configuration(const std::string& kind, const Options& opt) {
  if (kind == "simplex-midpoints") return simplex_midpoints(opt.n);
  if (kind == "c7prime") return c7_prime();
  if (kind == "srg-embedding") {
    AdjacencyMatrix a = load_graph(opt.file);
    if (opt.complement) a = complement(a);
    if (opt.eigen != "r" && opt.eigen != "s") throw InputError("--eigen must be r or s");
    return srg_spectral_embedding(a, opt.eigen == "r" ? Eigenspace::larger : Eigenspace::smaller);
  }
  if (kind == "kissing") {
    const LatticeGram g = load_lattice(opt.file);
    require_feasible(g, opt);
    return kissing_configuration(g, opt.max_points);
  }
  if (kind == "antipodal-union") return antipodal_union(load_exact(opt.file));
  return standard_polytope(opt.name, opt.n);
}

int run_construct(const std::string& kind, const Options& opt) {
  if (kind == "polytope" && opt.name == "poles-and-ring") {
    emit(opt, coordinates_to_json(poles_and_ring(opt.k)));
  } else {
    emit(opt, configuration_to_json(build_configuration(kind, opt)));
  }
  return kPass;
}

int run_check(const std::string& what, const Options& opt) {
  if (what == "euclidean") {
    const BalanceReport r = check_balanced_euclidean(euclidean_from_json(read_json_file(opt.file)));
    emit(opt, to_json(r));
    return r.balanced ? kPass : kFail;
  }
  if (what == "group-balanced") {
    const GroupBalanceReport r = check_group_balanced(load_exact(opt.file));
    emit(opt, to_json(r));
    return r.group_balanced ? kPass : kFail;
  }
  const AnyConfiguration any = load_any(opt.file);
  const auto* exact = std::get_if<Configuration>(&any);
  const auto* coords = std::get_if<CoordinateSet>(&any);
  if (what == "balanced") {
    if (exact != nullptr) {
      const BalanceReport r = check_balanced(*exact, opt.threads);
      emit(opt, to_json(r));
      return r.balanced ? kPass : kFail;
    }
    const FloatBalanceReport r = check_balanced_float(*coords, opt.tol);
    emit(opt, to_json(r));
    return r.balanced ? kPass : kFail;
  }
  if (what == "design") {
    if (exact != nullptr) {
      emit(opt, to_json(design_strength(*exact, opt.cap)));
    } else {
      emit(opt, to_json(design_strength_float(*coords, opt.cap, opt.tol)));
    }
    return kPass;
  }
  const TheoremOneVerdict v = exact != nullptr ? theorem1_check(*exact, opt.cap) : theorem1_check_float(*coords, opt.cap, opt.tol);
  emit(opt, to_json(v));
  return v.applies ? kPass : kFail;
}

int run_symmetry(const Options& opt) {
  const Configuration c = load_exact(opt.file);
  const PermutationGroup g = symmetry_group(c);
  Json doc = group_to_json(g);
  if (!opt.show_orbits) doc.erase("orbits");
  if (opt.stabilizer) {
    if (*opt.stabilizer >= c.size()) throw InputError("--stabilizer: point index out of range");
    const PermutationGroup h = point_stabilizer(g, *opt.stabilizer);
    Json stab = group_to_json(h);
    stab["fixed_subspace_dim"] = fixed_subspace_dim(c, h);
    doc["stabilizer"] = std::move(stab);
  }
  emit(opt, doc);
  return kPass;
}

int run_energy(const Options& opt, bool forces) {
  if (!(opt.s > 0)) throw InputError("-s must be positive");
  const CoordinateSet p = load_coordinates(opt.file);
  if (forces) {
    emit(opt, to_json(tangential_force(p, opt.s)));
  } else {
    Json doc;
    doc["s"] = opt.s;
    doc["energy"] = energy(p, opt.s);
    emit(opt, doc);
  }
  return kPass;
}

int run_saddle_demo(const Options& opt) {
  if (!(opt.s > 0)) throw InputError("-s must be positive");
  if (opt.samples == 0) throw InputError("--samples must be positive");
  const double e0 = cube_facet_rotation(0, opt.s);
  constexpr double h = 1e-5;
  const double slope = (energy(rotated_cube(h), opt.s) - energy(rotated_cube(-h), opt.s)) / (2 * h);
  Json samples = Json::array();
  double best_theta = 0;
  double best = e0;
  for (unsigned i = 0; i <= opt.samples; ++i) {
    const double theta = std::numbers::pi / 4 * i / opt.samples;
    const double e = cube_facet_rotation(theta, opt.s);
    if (e < best) {
      best = e;
      best_theta = theta;
    }
    samples.push_back(Json{{"theta", theta}, {"energy", e}});
  }
  Json doc;
  doc["s"] = opt.s;
  doc["cube_energy"] = e0;
  doc["slope_at_zero"] = slope;
  doc["best_theta"] = best_theta;
  doc["best_energy"] = best;
  doc["samples"] = std::move(samples);
  emit(opt, doc);
  return kPass;
}

int run_report(const Options& opt) {
  emit(opt, to_json(analyze(load_exact(opt.file), opt.cap, opt.threads)));
  return kPass;
}

int run_lattice(const Options& opt) {
  const LatticeGram g = load_lattice(opt.file);
  require_feasible(g, opt);
  const auto start = std::chrono::steady_clock::now();
  const ShortVectorSet minimal = minimal_vectors(g);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json doc;
  doc["label"] = g.label();
  doc["dim"] = g.dim();
  doc["min_norm"] = minimal.norm;
  doc["kissing_number"] = minimal.vectors.size();
  emit(opt, doc);
  std::clog << "enumeration took " << seconds << " s\n";
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced spherical configurations: construction, checks and reports"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "Worker threads for parallel checks")->check(CLI::Range(1U, 256U));

  const auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", opt.output, "Write JSON here instead of stdout"); };
  const auto add_file = [&](CLI::App* cmd, const char* what) { cmd->add_option("FILE", opt.file, what)->required(); };

  auto* construct = app.add_subcommand("construct", "Build a configuration and write it as JSON");
  construct->require_subcommand(1);
  auto* c_mid = construct->add_subcommand("simplex-midpoints", "Edge midpoints of a regular simplex");
  c_mid->add_option("N", opt.n, "Simplex dimension")->required();
  construct->add_subcommand("c7prime", "Midpoints of the 7-simplex with one tetrahedron inverted");
  auto* c_srg = construct->add_subcommand("srg-embedding", "Spectral embedding of a strongly regular graph");
  add_file(c_srg, "Adjacency matrix file, or 'figure1' for the bundled graph");
  c_srg->add_option("--eigen", opt.eigen, "Eigenspace: r (larger) or s (smaller)");
  c_srg->add_flag("--complement", opt.complement, "Use the complement graph");
  auto* c_kiss = construct->add_subcommand("kissing", "Minimal vectors of a lattice on the unit sphere");
  add_file(c_kiss, "Lattice file, or a bundled name: z2 d4 e8 k12 leech");
  c_kiss->add_flag("--allow-slow", opt.allow_slow, "Permit high-dimensional enumeration");
  c_kiss->add_option("--max-points", opt.max_points, "Refuse larger kissing configurations");
  auto* c_anti = construct->add_subcommand("antipodal-union", "A configuration together with its antipodes");
  add_file(c_anti, "Configuration file");
  auto* c_poly = construct->add_subcommand("polytope", "cube, cross-polytope, simplex or poles-and-ring");
  c_poly->add_option("NAME", opt.name, "Polytope name")->required();
  c_poly->add_option("--n", opt.n, "Dimension for cross-polytope and simplex");
  c_poly->add_option("--k", opt.k, "Ring size for poles-and-ring");
  for (auto* cmd : construct->get_subcommands([](CLI::App*) { return true; })) add_output(cmd);

  auto* check = app.add_subcommand("check", "Run one check; exit 0 if it holds, 1 if not");
  check->require_subcommand(1);
  auto* k_bal = check->add_subcommand("balanced", "Shell-sum balance test");
  auto* k_des = check->add_subcommand("design", "Spherical design strength (always exits 0)");
  auto* k_t1 = check->add_subcommand("theorem1", "Design strength versus distance counts");
  auto* k_gb = check->add_subcommand("group-balanced", "Stabilizer fixed-space test");
  auto* k_euc = check->add_subcommand("euclidean", "Centroid test for finite or periodic sets in Rⁿ");
  for (auto* cmd : {k_bal, k_des, k_t1, k_gb, k_euc}) {
    add_file(cmd, "Input file");
    add_output(cmd);
  }
  for (auto* cmd : {k_bal, k_des, k_t1}) cmd->add_option("--tol", opt.tol, "Tolerance for coordinate input");
  for (auto* cmd : {k_des, k_t1}) cmd->add_option("--cap", opt.cap, "Highest degree tested")->check(CLI::Range(1U, 200U));

  auto* sym = app.add_subcommand("symmetry", "Isometry group as permutations of the points");
  add_file(sym, "Configuration file");
  add_output(sym);
  sym->add_flag("--orbits", opt.show_orbits, "Include the orbit partition");
  sym->add_option("--stabilizer", opt.stabilizer, "Also report the stabilizer of this point");

  auto* en = app.add_subcommand("energy", "Inverse-power energy sum of |x-y|^-s");
  auto* fo = app.add_subcommand("force", "Tangential forces under the r^-s potential");
  for (auto* cmd : {en, fo}) {
    add_file(cmd, "Configuration file (gram or coords)");
    add_output(cmd);
    cmd->add_option("-s", opt.s, "Exponent")->required();
  }
  auto* saddle = app.add_subcommand("saddle-demo", "Energy of the cube as one facet rotates");
  add_output(saddle);
  saddle->add_option("-s", opt.s, "Exponent");
  saddle->add_option("--samples", opt.samples, "Sample count on [0, pi/4]");

  auto* rep = app.add_subcommand("report", "All verdicts for one configuration");
  add_file(rep, "Configuration file");
  add_output(rep);
  rep->add_option("--cap", opt.cap, "Highest design degree tested")->check(CLI::Range(1U, 200U));

  auto* lat = app.add_subcommand("lattice", "Minimal norm and kissing number of a lattice");
  add_file(lat, "Lattice file, or a bundled name: z2 d4 e8 k12 leech");
  add_output(lat);
  lat->add_flag("--allow-slow", opt.allow_slow, "Permit high-dimensional enumeration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*construct) {
      for (auto* sub : construct->get_subcommands()) return run_construct(sub->get_name(), opt);
    }
    if (*check) {
      for (auto* sub : check->get_subcommands()) return run_check(sub->get_name(), opt);
    }
    if (*sym) return run_symmetry(opt);
    if (*en) return run_energy(opt, false);
    if (*fo) return run_energy(opt, true);
    if (*saddle) return run_saddle_demo(opt);
    if (*rep) return run_report(opt);
    if (*lat) return run_lattice(opt);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
