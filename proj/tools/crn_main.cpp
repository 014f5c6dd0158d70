#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "crn/analysis.hpp"
#include "crn/graphs.hpp"
#include "crn/parser.hpp"
#include "crn/reduction.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;     // parse or validation failure
constexpr int kExitInternalError = 2;  // a guaranteed invariance failed
constexpr int kExitIoError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  out << content;
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

crn::ReactionNetwork load_network(const std::string& path) {
  return crn::parse_network(read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphical convergence analysis and intermediate removal for "
               "reaction networks"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;

  auto* analyze_cmd =
      app.add_subcommand("analyze", "run every check and report a verdict");
  bool assume_bp = false;
  analyze_cmd->add_option("file", file, "network file (.crn)")->required();
  analyze_cmd->add_flag("--assume-bounded-persistence", assume_bp,
                        "assert bounded persistence of the flow (checked "
                        "elsewhere, never here)");
  analyze_cmd->add_flag("--json", as_json, "machine-readable report");

  auto* reduce_cmd = app.add_subcommand(
      "reduce", "remove intermediates until none remain and print the result");
  bool with_trace = false;
  reduce_cmd->add_option("file", file, "network file (.crn)")->required();
  reduce_cmd->add_flag("--trace", with_trace,
                       "print the reduction trace as JSON instead");

  auto* verify_cmd = app.add_subcommand(
      "verify-invariance",
      "compare the analysis of a network and of its minimal reduction");
  verify_cmd->add_option("file", file, "network file (.crn)")->required();
  verify_cmd->add_flag("--json", as_json, "machine-readable report");

  auto* export_cmd =
      app.add_subcommand("export-dot", "write a graph in DOT format");
  std::string graph_kind = "sr";
  std::string out_path;
  export_cmd->add_option("file", file, "network file (.crn)")->required();
  export_cmd->add_option("--graph", graph_kind, "sr | dsr | r")
      ->check(CLI::IsMember({"sr", "dsr", "r"}));
  export_cmd->add_option("-o,--output", out_path,
                         "output path (stdout when omitted)");

  auto* selftest_cmd = app.add_subcommand(
      "selftest", "randomized cross-checks against the built-in oracles");
  int seeds = 25;
  selftest_cmd->add_option("--seeds", seeds, "networks per family")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd) {
      const crn::AnalysisReport report =
          crn::analyze(load_network(file), assume_bp);
      std::cout << (as_json ? crn::to_json_text(report) + "\n"
                            : crn::to_text(report));
      return kExitOk;
    }
    if (*reduce_cmd) {
      auto [reduced, trace] = crn::reduce_fully(load_network(file));
      if (with_trace)
        std::cout << crn::trace_to_json_text(trace) << "\n";
      else
        std::cout << crn::serialize_network(reduced) << "\n";
      return kExitOk;
    }
    if (*verify_cmd) {
      const crn::InvarianceReport report =
          crn::verify_invariance(load_network(file));
      std::cout << (as_json ? crn::to_json_text(report) + "\n"
                            : crn::to_text(report));
      return report.internal_error ? kExitInternalError : kExitOk;
    }
    if (*export_cmd) {
      const crn::ReactionNetwork net = load_network(file);
      const crn::RationalMatrix stoich = crn::stoichiometric_matrix(net);
      std::string dot;
      if (graph_kind == "sr")
        dot = crn::export_dot(crn::build_sr_graph(net, stoich));
      else if (graph_kind == "dsr")
        dot = crn::export_dot(crn::build_directed_sr_graph(net, stoich));
      else
        dot = crn::export_dot(crn::build_r_graph(net, stoich));
      if (out_path.empty())
        std::cout << dot;
      else
        write_file(out_path, dot);
      return kExitOk;
    }
    if (*selftest_cmd)
      return crn::run_selftest(seeds, std::cout) ? kExitOk
                                                 : kExitInternalError;
  } catch (const crn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const crn::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitOk;
}
