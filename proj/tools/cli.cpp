#include "cli.hpp"

#include "kromatic/heaps.hpp"
#include "kromatic/kromatic.hpp"
#include "kromatic/quasisym.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#ifndef KROMATIC_DATA_DIR
#define KROMATIC_DATA_DIR "data"
#endif

namespace kromatic::cli {

namespace fs = std::filesystem;

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Expand: return "expand";
    case Mode::QExpand: return "qexpand";
    case Mode::Verify: return "verify";
    case Mode::Lyndon: return "lyndon";
    case Mode::Independence: return "independence";
  }
  return "?";
}

int default_degree(Mode m) { return m == Mode::QExpand ? 4 : 5; }

int effective_degree(const RunConfig& c) { return c.degree > 0 ? c.degree : default_degree(c.mode); }

int effective_vars(const RunConfig& c) { return c.vars > 0 ? c.vars : effective_degree(c); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"oracles",   "theorems", "claims",    "classical",
                                                 "corollary", "q",        "properties"};
  return names;
}

namespace {

std::vector<std::string> split_suites(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      out = suite_names();
      return out;
    }
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.degree < 0) throw ConfigError("--degree must be positive");
  if (c.vars < 0) throw ConfigError("--vars must be positive");
  const int n = effective_degree(c), m = effective_vars(c);
  if (n < 1) throw ConfigError("--degree must be at least 1");
  if (m < n) throw ConfigError("--vars must be at least --degree (M >= N)");
  if (c.jobs < 1) throw ConfigError("--jobs must be at least 1");
  try {
    parse_basis(c.basis);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (c.q && c.mode != Mode::QExpand) throw ConfigError("--q only applies to qexpand");
  switch (c.mode) {
    case Mode::Expand:
    case Mode::Lyndon:
    case Mode::Independence:
      if (c.graph.empty()) throw ConfigError(mode_name(c.mode) + " needs --graph");
      break;
    case Mode::QExpand:
      if (c.model.empty() && c.graph.empty()) throw ConfigError("qexpand needs --model or --graph");
      if (c.q) parse_rational(*c.q);
      break;
    case Mode::Verify: {
      auto suites = split_suites(c.suite);
      if (suites.empty()) throw ConfigError("--suite is empty");
      for (const auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
          throw ConfigError("unknown suite '" + s + "'");
      break;
    }
  }
}

std::string data_dir() {
  if (const char* env = std::getenv("KROMATIC_DATA_DIR"); env && *env) return env;
  return KROMATIC_DATA_DIR;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ConfigError("graph JSON needs \"n\" and \"edges\"");
  if (!j["n"].is_number_integer()) throw ConfigError("graph \"n\" must be an integer");
  if (!j["edges"].is_array()) throw ConfigError("graph \"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ConfigError("each edge must be a pair of vertex numbers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph(j["n"].get<int>(), edges);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

UnitIntervalModel model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("bounds"))
    throw ConfigError("model JSON needs \"n\" and \"bounds\"");
  UnitIntervalModel m;
  try {
    m.n = j["n"].get<int>();
    m.bounds = j["bounds"].get<std::vector<int>>();
    m.validate();
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("malformed model: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return m;
}

namespace {

Json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

fs::path resolve(const std::string& path_or_name, const char* kind) {
  if (fs::is_regular_file(path_or_name)) return path_or_name;
  fs::path bundled = fs::path(data_dir()) / kind / (path_or_name + ".json");
  if (fs::is_regular_file(bundled)) return bundled;
  throw ConfigError("no file or bundled " + std::string(kind) + " named '" + path_or_name + "'");
}

std::vector<std::string> list_bundled(const char* kind) {
  std::vector<std::string> names;
  fs::path dir = fs::path(data_dir()) / kind;
  if (!fs::is_directory(dir)) return names;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

NamedGraph load_graph(const std::string& path_or_name) {
  fs::path p = resolve(path_or_name, "graphs");
  return {p.stem().string(), graph_from_json(read_json(p))};
}

NamedModel load_model(const std::string& path_or_name) {
  fs::path p = resolve(path_or_name, "models");
  return {p.stem().string(), model_from_json(read_json(p))};
}

std::vector<std::string> bundled_graph_names() { return list_bundled("graphs"); }
std::vector<std::string> bundled_model_names() { return list_bundled("models"); }

std::string partition_label(const Partition& lambda) {
  const bool wide = lambda.largest() > 9;
  std::string out;
  for (int i = 0; i < lambda.length(); ++i) {
    if (wide && i) out += '.';
    out += std::to_string(lambda[i]);
  }
  return out.empty() ? "empty" : out;
}

BigRational parse_rational(const std::string& text) {
  BigRational x;
  if (text.empty() || x.set_str(text, 10) != 0) throw ConfigError("not a rational number: '" + text + "'");
  if (x.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
  x.canonicalize();
  return x;
}

Json number_to_json(const BigRational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return to_string(x);
}

Json qpoly_to_json(const RatQPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(number_to_json(c));
  return a;
}

namespace {

Json partition_json(const Partition& lambda) { return lambda.parts(); }

template <class F, class Fn>
Json expansion_json(const Expansion<F>& e, bool omega, int vars, Fn encode) {
  Json terms = Json::array();
  for (const auto& [lam, c] : e.terms) terms.push_back(Json{{"partition", partition_json(lam)}, {"coeff", encode(c)}});
  return Json{{"basis", basis_name(e.basis)}, {"omega", omega}, {"N", e.cap}, {"M", vars}, {"terms", terms}};
}

}  // namespace

Json expansion_to_json(const Expansion<BigRational>& e, bool omega, int vars) {
  return expansion_json(e, omega, vars, [](const BigRational& c) { return to_string(c); });
}

Json expansion_to_json(const Expansion<RatQPoly>& e, bool omega, int vars) {
  return expansion_json(e, omega, vars, [](const RatQPoly& c) { return qpoly_to_json(c); });
}

// ---------------------------------------------------------------------------
// Verification checks
// ---------------------------------------------------------------------------

namespace {

using Checks = std::vector<Check>;

Check make_check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, ok ? std::string() : std::move(detail)};
}

// Exceptions inside a check make it fail instead of aborting the run.
template <class Fn>
void guarded(Checks& out, const std::string& name, Fn fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    out.push_back(make_check(name, false, std::string("exception: ") + e.what()));
  }
}

std::string subset_label(VertexSubset w) {
  std::string s;
  for (int v : subset_vertices(w)) s += (s.empty() ? "" : ".") + std::to_string(v);
  return s.empty() ? "none" : s;
}

Checks oracle_checks(const NamedGraph& ng, int degree) {
  Checks out;
  const Graph& g = ng.graph;
  const int n = std::min(degree, 4);
  guarded(out, "oracle-kromatic-" + ng.name, [&] {
    out.push_back(make_check("oracle-kromatic-" + ng.name, kromatic_function(g, n, n) == brute_force_kromatic(g, n, n),
                             "subset formula differs from set-coloring enumeration"));
  });
  guarded(out, "oracle-kromatic-q-" + ng.name, [&] {
    out.push_back(make_check("oracle-kromatic-q-" + ng.name,
                             kromatic_q_via_clans(g, n, n) == brute_force_kromatic_q(g, n, n),
                             "clan-graph sum differs from ascent-weighted enumeration"));
  });
  guarded(out, "oracle-omega-" + ng.name, [&] {
    out.push_back(make_check("oracle-omega-" + ng.name,
                             omega_kromatic(g, degree, degree) == omega(kromatic_function(g, degree, degree)),
                             "heap-series formula differs from omega of the subset formula"));
  });
  return out;
}

Checks theorem_checks(const NamedGraph& ng, int degree) {
  Checks out;
  const Graph& g = ng.graph;
  const auto x = kromatic_function(g, degree, degree);
  const auto w = omega_kromatic(g, degree, degree);
  const LyndonTable table(g, degree);
  for (Theorem t : {Theorem::T1_2, Theorem::T1_3, Theorem::T1_4, Theorem::T1_5}) {
    const auto target = theorem_target(t);
    const std::string prefix = "thm-" + theorem_name(t) + "-" + ng.name + "-lambda-";
    Expansion<BigInt> e;
    try {
      e = lower(extract(target.omega ? w : x, target.basis));
    } catch (const std::exception& ex) {
      out.push_back(make_check(prefix + "all", false, std::string("extraction failed: ") + ex.what()));
      continue;
    }
    for (const auto& lam : partitions_up_to(degree)) {
      if (lam.empty()) continue;
      const std::string name = prefix + partition_label(lam);
      guarded(out, name, [&] {
        BigInt extracted = e.coefficient(lam);
        if (!target.omega) extracted *= omega_sign(lam);
        BigInt ie = theorem_coefficient(table, g.vertex_count(), lam, t, Coverage::InclusionExclusion);
        BigInt direct = theorem_coefficient(table, g.vertex_count(), lam, t, Coverage::Direct);
        bool ok = extracted == ie && ie == direct && sgn(ie) >= 0;
        out.push_back(make_check(name, ok,
                                 "extracted " + to_string(extracted) + ", counted " + to_string(ie) + " / " +
                                     to_string(direct)));
      });
    }
  }
  return out;
}

Checks claim_checks(const NamedGraph& ng, int degree) {
  Checks out;
  const Graph& g = ng.graph;
  const std::pair<FactorizationVariant, const char*> variants[] = {{FactorizationVariant::A, "a"},
                                                                   {FactorizationVariant::B, "b"},
                                                                   {FactorizationVariant::C, "c"},
                                                                   {FactorizationVariant::D, "d"}};
  for (const auto& [v, tag] : variants) {
    const std::string name = std::string("claim-") + tag + "-" + ng.name;
    guarded(out, name, [&] {
      std::string failed;
      for (VertexSubset w = 0; w <= g.all_vertices(); ++w)
        if (!verify_factorization(g, w, v, degree, degree)) failed += " W=" + subset_label(w);
      out.push_back(make_check(name, failed.empty(), "factorization fails at" + failed));
    });
  }
  const std::string name = "claim-b-series-" + ng.name;
  guarded(out, name, [&] {
    const LyndonTable table(g, degree);
    std::string failed;
    for (VertexSubset w = 0; w <= g.all_vertices(); ++w) {
      auto b = exponents_b_from_series(independence_polynomial(induced_subgraph(g, w).graph), degree);
      for (int k = 1; k <= degree; ++k)
        if (b[k - 1] != exponent_b(table, w, k)) failed += " W=" + subset_label(w) + ",k=" + std::to_string(k);
    }
    out.push_back(make_check(name, failed.empty(), "series exponents differ from Lyndon counts at" + failed));
  });
  return out;
}

Checks classical_checks(const NamedGraph& ng) {
  Checks out;
  const Graph& g = ng.graph;
  const int n = g.vertex_count();
  if (n == 0) return out;
  const auto x = kromatic_function(g, n, n);
  const auto e = lower(extract(x, Basis::PBar));
  const auto oracles = chromatic_p_expansion_oracles(g);
  auto lookup = [](const std::map<Partition, BigInt>& m, const Partition& lam) {
    auto it = m.find(lam);
    return it == m.end() ? BigInt(0) : it->second;
  };
  for (const auto& lam : partitions_of(n)) {
    const std::string name = "thm-1.1-" + ng.name + "-lambda-" + partition_label(lam);
    BigInt a = e.coefficient(lam), b = lookup(oracles.source_components, lam), c = lookup(oracles.edge_subsets, lam);
    out.push_back(make_check(name, a == b && b == c,
                             "pbar " + to_string(a) + ", source components " + to_string(b) + ", edge subsets " +
                                 to_string(c)));
  }
  return out;
}

Checks corollary_checks(const NamedGraph& ng, int degree) {
  Checks out;
  const Graph& g = ng.graph;
  const std::string rt = "cor-1.6-" + ng.name + "-multiset";
  guarded(out, rt, [&] {
    bool ok = kromatic_from_multiset(independence_multiset(g), degree, degree) == kromatic_function(g, degree, degree);
    out.push_back(make_check(rt, ok, "alternating independence-polynomial sum differs"));
  });
  const int K = g.vertex_count() <= 3 ? 4 : 3;
  const std::string rec = "cor-1.6-" + ng.name + "-recover-K" + std::to_string(K);
  guarded(out, rec, [&] {
    OmegaPbarCoefficients coef(g, K);
    auto recovered =
        recover_signed_exponent_multiset([&](const Partition& lam) { return coef(lam); }, exponent_caps(g, K));
    bool ok = recovered == direct_signed_exponent_multiset(g, K) &&
              independence_truncations(recovered) == independence_truncations(independence_multiset(g), K);
    out.push_back(make_check(rec, ok, "recovered exponent family differs from Lyndon enumeration"));
  });
  const std::string cross = "cor-1.6-" + ng.name + "-pbar-coefficients";
  guarded(out, cross, [&] {
    auto e = lower(extract(omega_kromatic(g, degree, degree), Basis::PBar));
    OmegaPbarCoefficients coef(g, degree);
    std::string failed;
    for (const auto& lam : partitions_up_to(degree))
      if (e.coefficient(lam) != coef(lam)) failed += " " + partition_label(lam);
    out.push_back(make_check(cross, failed.empty(), "binomial formula differs from extraction at" + failed));
  });
  return out;
}

Checks q_checks(const NamedModel& nm, int degree) {
  Checks out;
  const int n = std::min(degree, 4);
  const Graph g = unit_interval_graph(nm.model);
  const std::string id = nm.name;
  SymPoly<IntQPoly> x(n, n);
  try {
    x = brute_force_kromatic_q(g, n, n).to_symmetric();
  } catch (const std::exception& e) {
    out.push_back(make_check("q-symmetric-" + id, false, e.what()));
    return out;
  }
  const auto w = omega_q(x);
  guarded(out, "eq-5.1-" + id, [&] {
    out.push_back(make_check("eq-5.1-" + id, kromatic_q_via_clans(g, n, n) == to_monomials(x),
                             "clan-graph sum differs from brute force"));
  });
  const auto sums = pyramid_p_expansion_q(g, n);
  guarded(out, "eq-5.3-" + id, [&] {
    out.push_back(make_check("eq-5.3-" + id, reassemble_pyramid_expansion(sums, n, n) == lift(w),
                             "pyramid-list expansion differs from omega of brute force"));
  });
  guarded(out, "asc-convention-" + id, [&] {
    bool ok = pyramid_p_expansion_q(g, n, PyramidSet::AllVertices, AscentConvention::HigherFirst) == sums;
    out.push_back(make_check("asc-convention-" + id, ok, "the two ascent conventions give different sums"));
  });
  for (Proposition p : {Proposition::P5_1, Proposition::P5_2, Proposition::P5_3, Proposition::P5_4}) {
    const auto target = proposition_target(p);
    const std::string prefix = "prop-" + proposition_name(p) + "-" + id + "-lambda-";
    Expansion<RatQPoly> e;
    try {
      e = extract(target.omega ? w : x, target.basis);
    } catch (const std::exception& ex) {
      out.push_back(make_check(prefix + "all", false, std::string("extraction failed: ") + ex.what()));
      continue;
    }
    for (const auto& lam : partitions_up_to(n)) {
      if (lam.empty()) continue;
      RatQPoly c = proposition_coefficient(sums, lam, p);
      out.push_back(make_check(prefix + partition_label(lam), c == e.coefficient(lam),
                               "formula " + to_string(c) + ", extracted " + to_string(e.coefficient(lam))));
    }
  }
  guarded(out, "q1-" + id, [&] {
    bool ok = evaluate_q(x, BigInt(1)) == kromatic_function(g, n, n);
    const LyndonTable table(g, n);
    for (Proposition p : {Proposition::P5_1, Proposition::P5_2, Proposition::P5_3, Proposition::P5_4}) {
      // 5.1 ↔ 1.5, 5.2 ↔ 1.4, 5.3 ↔ 1.3, 5.4 ↔ 1.2.
      const Theorem t = p == Proposition::P5_1   ? Theorem::T1_5
                        : p == Proposition::P5_2 ? Theorem::T1_4
                        : p == Proposition::P5_3 ? Theorem::T1_3
                                                 : Theorem::T1_2;
      for (const auto& lam : partitions_up_to(n)) {
        if (lam.empty()) continue;
        BigRational at1 = proposition_coefficient(sums, lam, p).evaluate(BigRational(1));
        BigInt counted = theorem_coefficient(table, g.vertex_count(), lam, t);
        if (!theorem_target(t).omega) counted *= omega_sign(lam);
        ok = ok && at1 == BigRational(counted);
      }
    }
    out.push_back(make_check("q1-" + id, ok, "q = 1 specialization differs from the integer results"));
  });
  return out;
}

bool canonical_class_invariance(int trials, std::uint32_t seed, std::string& detail) {
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() % 2) edges.emplace_back(u, v);
    const Graph g(n, edges);
    const int len = 1 + static_cast<int>(rng() % 8);
    std::vector<int> word(len);
    for (int& c : word) c = 1 + static_cast<int>(rng() % n);
    const auto canon = standard_word(g, word);
    for (int step = 0; step < 30; ++step) {
      if (len < 2) break;
      const int i = static_cast<int>(rng() % (len - 1));
      if (commute(g, word[i], word[i + 1])) std::swap(word[i], word[i + 1]);
      if (standard_word(g, word) != canon) {
        detail = "trial " + std::to_string(t);
        return false;
      }
    }
  }
  return true;
}

Checks property_checks(const std::vector<NamedGraph>& graphs, int degree) {
  Checks out;
  guarded(out, "property-canonical-classes", [&] {
    std::string detail;
    bool ok = canonical_class_invariance(200, 12345u, detail);
    out.push_back(make_check("property-canonical-classes", ok, "canonical form changed under commutation, " + detail));
  });
  guarded(out, "property-dirichlet-64", [&] {
    bool ok = true;
    for (int n = 1; n <= 64; ++n) {
      BigInt acc = 0;
      for (int d : divisors(n)) acc += mu_hat(d) * ((n / d) % 2 ? 1 : -1);
      ok = ok && acc == (n == 1 ? 1 : 0);
    }
    out.push_back(make_check("property-dirichlet-64", ok, "mu_hat is not the Dirichlet inverse of (-1)^(n+1)"));
  });
  guarded(out, "property-omega-bases", [&] {
    bool ok = true;
    for (int k = 1; k <= degree; ++k) ok = ok && verify_omega_basis_identities(k, degree, degree);
    out.push_back(make_check("property-omega-bases", ok, "omega does not swap the K-power-sum generators"));
  });
  for (const auto& ng : graphs) {
    const auto x = kromatic_function(ng.graph, degree, degree);
    const std::string inv = "property-omega-involution-" + ng.name;
    guarded(out, inv, [&] { out.push_back(make_check(inv, omega(omega(x)) == x, "omega is not an involution")); });
    for (Basis b : {Basis::P, Basis::PBar, Basis::PBarPrime}) {
      const std::string rt = "property-roundtrip-" + basis_name(b) + "-" + ng.name;
      guarded(out, rt, [&] {
        out.push_back(make_check(rt, expand(extract(x, b), degree) == lift(x), "expand(extract(f)) != f"));
      });
    }
  }
  return out;
}

}  // namespace

std::vector<Check> run_checks(const std::vector<std::string>& suites, const std::vector<NamedGraph>& graphs,
                              const std::vector<NamedModel>& models, int degree, int jobs) {
  std::vector<std::function<Checks()>> tasks;
  auto has = [&](const char* s) { return std::find(suites.begin(), suites.end(), s) != suites.end(); };
  for (const auto& ng : graphs) {
    if (has("oracles")) tasks.emplace_back([&ng, degree] { return oracle_checks(ng, degree); });
    if (has("theorems")) tasks.emplace_back([&ng, degree] { return theorem_checks(ng, degree); });
    if (has("claims")) tasks.emplace_back([&ng, degree] { return claim_checks(ng, degree); });
    if (has("classical")) tasks.emplace_back([&ng] { return classical_checks(ng); });
    if (has("corollary")) tasks.emplace_back([&ng, degree] { return corollary_checks(ng, degree); });
  }
  if (has("q"))
    for (const auto& nm : models) tasks.emplace_back([&nm, degree] { return q_checks(nm, degree); });
  if (has("properties")) tasks.emplace_back([&graphs, degree] { return property_checks(graphs, degree); });

  std::vector<Checks> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = {make_check("task-" + std::to_string(i), false, std::string("exception: ") + e.what())};
      }
    }
  };
  std::vector<std::thread> pool;
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<Check> all;
  for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
  return all;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

namespace {

void emit(const RunConfig& c, const Json& j, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + c.out);
  f << text;
}

int run_expand(const RunConfig& c, std::ostream& out) {
  const auto ng = load_graph(c.graph);
  const int n = effective_degree(c), m = effective_vars(c);
  const auto f = c.omega ? omega_kromatic(ng.graph, n, m, c.jobs) : kromatic_function(ng.graph, n, m, c.jobs);
  Json j = expansion_to_json(extract(f, parse_basis(c.basis)), c.omega, m);
  j["graph"] = ng.name;
  emit(c, j, out);
  return 0;
}

Graph qexpand_graph(const RunConfig& c, std::string& name) {
  if (!c.model.empty()) {
    auto nm = load_model(c.model);
    name = nm.name;
    return unit_interval_graph(nm.model);
  }
  auto ng = load_graph(c.graph);
  if (!is_unit_interval_ordering(ng.graph))
    throw ConfigError("graph '" + ng.name + "' is not a natural unit interval graph");
  name = ng.name;
  return ng.graph;
}

int run_qexpand(const RunConfig& c, std::ostream& out) {
  std::string name;
  const Graph g = qexpand_graph(c, name);
  const int n = effective_degree(c), m = effective_vars(c);
  auto x = kromatic_q_via_clans(g, n, m).to_symmetric();
  if (c.omega) x = omega_q(x);
  const Basis basis = parse_basis(c.basis);
  Json j;
  if (c.q) {
    const BigRational value = parse_rational(*c.q);
    j = expansion_to_json(extract(evaluate_q(lift(x), value), basis), c.omega, m);
    j["q"] = to_string(value);
  } else {
    j = expansion_to_json(extract(x, basis), c.omega, m);
  }
  j["model"] = name;
  emit(c, j, out);
  return 0;
}

int run_lyndon(const RunConfig& c, std::ostream& out) {
  const auto ng = load_graph(c.graph);
  const int n = effective_degree(c);
  auto g = std::make_shared<const Graph>(ng.graph);
  std::vector<BigInt> pyramid_counts;
  Json sizes = Json::array();
  for (int k = 1; k <= n; ++k) {
    auto words = enumerate_lyndon(g, k);
    pyramid_counts.emplace_back(static_cast<unsigned long>(enumerate_pyramids(g, k).size()));
    Json list = Json::array();
    for (const auto& h : words) list.push_back(h.to_string());
    sizes.push_back(Json{{"size", k}, {"count", words.size()}, {"pyramids", number_to_json(pyramid_counts.back())},
                         {"words", list}});
  }
  const auto by_mobius = lyndon_counts_from_pyramids(pyramid_counts);
  Json mobius = Json::array();
  bool agree = true;
  for (int k = 1; k <= n; ++k) {
    mobius.push_back(number_to_json(by_mobius[k - 1]));
    agree = agree && by_mobius[k - 1] == sizes[k - 1]["count"].get<long>();
  }
  Json j{{"graph", ng.name}, {"n", n}, {"sizes", sizes}, {"counts_from_pyramids", mobius}, {"consistent", agree}};
  emit(c, j, out);
  return agree ? 0 : 1;
}

int run_independence(const RunConfig& c, std::ostream& out) {
  const auto ng = load_graph(c.graph);
  auto poly = [](const IntPoly& p) {
    Json a = Json::array();
    for (const auto& x : p.coefficients()) a.push_back(number_to_json(x));
    return a;
  };
  const auto ms = independence_multiset(ng.graph);
  Json entries = Json::array();
  for (const auto& e : ms.entries)
    entries.push_back(Json{{"size", e.subset_size},
                           {"sign", (ms.vertex_count - e.subset_size) % 2 == 0 ? 1 : -1},
                           {"polynomial", poly(e.polynomial)}});
  Json j{{"graph", ng.name},
         {"n", ng.graph.vertex_count()},
         {"polynomial", poly(independence_polynomial(ng.graph))},
         {"multiset", entries}};
  emit(c, j, out);
  return 0;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  std::vector<NamedGraph> graphs;
  std::vector<NamedModel> models;
  if (!c.graph.empty()) {
    graphs.push_back(load_graph(c.graph));
  } else {
    for (const auto& name : bundled_graph_names()) graphs.push_back(load_graph(name));
  }
  if (!c.model.empty()) {
    models.push_back(load_model(c.model));
  } else if (c.graph.empty()) {
    for (const auto& name : bundled_model_names()) models.push_back(load_model(name));
  } else if (is_unit_interval_ordering(graphs.front().graph)) {
    // A natural unit interval graph is its own model: h_i is its largest
    // neighbor above i.
    const Graph& g = graphs.front().graph;
    UnitIntervalModel m{g.vertex_count(), {}};
    for (int i = 1; i <= g.vertex_count(); ++i) {
      int h = i;
      for (int j = i + 1; j <= g.vertex_count(); ++j)
        if (g.adjacent(i, j)) h = j;
      m.bounds.push_back(h);
    }
    models.push_back({graphs.front().name, m});
  }
  if (graphs.empty()) throw ConfigError("no graphs to verify (data directory " + data_dir() + ")");

  const auto checks = run_checks(split_suites(c.suite), graphs, models, effective_degree(c), c.jobs);
  int failed = 0;
  Json list = Json::array();
  for (const auto& ch : checks) {
    out << (ch.passed ? "PASS " : "FAIL ") << ch.name;
    if (!ch.passed && !ch.detail.empty()) out << ": " << ch.detail;
    out << "\n";
    failed += !ch.passed;
    list.push_back(Json{{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
  }
  out << checks.size() << " checks, " << failed << " failed\n";
  if (!c.out.empty()) emit(c, Json{{"checks", list}, {"failed", failed}}, out);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
    switch (c.mode) {
      case Mode::Expand: return run_expand(c, out);
      case Mode::QExpand: return run_qexpand(c, out);
      case Mode::Verify: return run_verify(c, out);
      case Mode::Lyndon: return run_lyndon(c, out);
      case Mode::Independence: return run_independence(c, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace kromatic::cli
