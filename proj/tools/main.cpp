#include "cli.hpp"

#include "CLI11.hpp"

#include <iostream>

using kromatic::cli::Mode;
using kromatic::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Kromatic symmetric functions: expansions, q-analogues and verification"};
  app.require_subcommand(1);

  RunConfig config;
  std::string q;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--degree", config.degree, "Degree truncation N");
    sub->add_option("--out", config.out, "Write JSON output to this file");
    sub->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto add_expansion = [&](CLI::App* sub) {
    sub->add_option("--basis", config.basis, "p, pbar or pbarprime")->check(CLI::IsMember({"p", "pbar", "pbarprime"}));
    sub->add_flag("--omega", config.omega, "Expand omega of the function instead");
    sub->add_option("--vars", config.vars, "Number of variables M (default N)");
  };

  auto* expand = app.add_subcommand("expand", "Expand the Kromatic function of a graph in a power sum basis");
  expand->add_option("--graph", config.graph, "Graph JSON file or bundled graph name")->required();
  add_expansion(expand);
  add_common(expand);

  auto* qexpand = app.add_subcommand("qexpand", "Expand the q-analogue for a natural unit interval graph");
  qexpand->add_option("--model", config.model, "Unit interval model JSON file or bundled model name");
  qexpand->add_option("--graph", config.graph, "Graph JSON file (must be a natural unit interval graph)");
  qexpand->add_option("--q", q, "Specialize q to this rational value");
  add_expansion(qexpand);
  add_common(qexpand);

  auto* verify = app.add_subcommand("verify", "Run the named identity checks");
  verify->add_option("--graph", config.graph, "Restrict to one graph (default: every bundled graph)");
  verify->add_option("--model", config.model, "Restrict the q suite to one unit interval model");
  verify->add_option("--suite", config.suite,
                     "Comma-separated suites: oracles, theorems, claims, classical, corollary, q, properties, all");
  add_common(verify);

  auto* lyndon = app.add_subcommand("lyndon", "List Lyndon heaps by size");
  lyndon->add_option("--graph", config.graph, "Graph JSON file or bundled graph name")->required();
  add_common(lyndon);

  auto* independence = app.add_subcommand("independence", "Independence polynomial and the induced-subgraph multiset");
  independence->add_option("--graph", config.graph, "Graph JSON file or bundled graph name")->required();
  independence->add_option("--out", config.out, "Write JSON output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (*expand) config.mode = Mode::Expand;
  if (*qexpand) config.mode = Mode::QExpand;
  if (*verify) config.mode = Mode::Verify;
  if (*lyndon) config.mode = Mode::Lyndon;
  if (*independence) config.mode = Mode::Independence;
  if (qexpand->count("--q")) config.q = q;

  return kromatic::cli::run(config, std::cout, std::cerr);
}
