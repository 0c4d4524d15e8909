#pragma once

// Command-line front end: input loading, JSON encodings and the five
// subcommands.

#include "kromatic/graph.hpp"
#include "kromatic/symfunc.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kromatic::cli {

using Json = nlohmann::ordered_json;

/// Invalid flags, unreadable or malformed input. Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { Expand, QExpand, Verify, Lyndon, Independence };

std::string mode_name(Mode m);

struct RunConfig {
  Mode mode = Mode::Expand;
  /// Path to a graph JSON file, or the name of a bundled graph.
  std::string graph;
  /// Path to a unit interval model JSON file, or a bundled model name.
  std::string model;
  std::string basis = "pbar";
  bool omega = false;
  /// 0 picks the mode default.
  int degree = 0;
  /// 0 means "same as degree".
  int vars = 0;
  /// Specialization of q for qexpand, as an integer or "a/b".
  std::optional<std::string> q;
  std::string out;
  int jobs = 1;
  /// Comma-separated suite names for verify, or "all".
  std::string suite = "all";
};

int default_degree(Mode m);

/// Effective degree and variable count after defaults.
int effective_degree(const RunConfig& c);
int effective_vars(const RunConfig& c);

/// Throws ConfigError.
void validate(const RunConfig& c);

/// Runs one subcommand. Results go to c.out when set and to `out`
/// otherwise; verify always prints its per-check report to `out`.
/// Returns 0, 1 (failed verification) or 2 (configuration error).
int run(const RunConfig& c, std::ostream& out, std::ostream& err);

std::string data_dir();

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct NamedModel {
  std::string name;
  UnitIntervalModel model;
};

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
UnitIntervalModel model_from_json(const Json& j);

/// A readable path, or otherwise a bundled name such as "K2" or "paw".
NamedGraph load_graph(const std::string& path_or_name);
NamedModel load_model(const std::string& path_or_name);

std::vector<std::string> bundled_graph_names();
std::vector<std::string> bundled_model_names();

/// Label used in check names: "211" for (2,1,1), parts joined with '.'
/// once any part exceeds 9.
std::string partition_label(const Partition& lambda);

BigRational parse_rational(const std::string& text);

/// Integral values that fit become JSON integers, anything else a string.
Json number_to_json(const BigRational& x);
Json qpoly_to_json(const RatQPoly& p);

Json expansion_to_json(const Expansion<BigRational>& e, bool omega, int vars);
Json expansion_to_json(const Expansion<RatQPoly>& e, bool omega, int vars);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

const std::vector<std::string>& suite_names();

/// The named checks of the requested suites, in a fixed order.
std::vector<Check> run_checks(const std::vector<std::string>& suites, const std::vector<NamedGraph>& graphs,
                              const std::vector<NamedModel>& models, int degree, int jobs);

}  // namespace kromatic::cli
