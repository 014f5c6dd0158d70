#include "crn/analysis.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "crn/parser.hpp"
#include "crn/random_network.hpp"

namespace crn {

using nlohmann::json;

namespace {

std::set<int> irreversible_indices(const ReactionNetwork& net) {
  std::set<int> out;
  for (int j = 0; j < net.reaction_count(); ++j)
    if (!net.reactions[static_cast<std::size_t>(j)].reversible) out.insert(j);
  return out;
}

constexpr const char* kKineticAssumptions =
    "rates are nonnegative, vanish when a reactant species is absent, and "
    "depend monotonically on reactant concentrations only (stated, not "
    "checked)";

}  // namespace

bool AnalysisReport::structural_hypotheses_hold() const {
  return g1_no_autocatalysis.holds && g2_at_most_two_reactions.holds &&
         g3_conservative.holds && g4_consistent.holds;
}

AnalysisReport analyze(const ReactionNetwork& net,
                       bool assume_bounded_persistence) {
  AnalysisReport report;
  report.network = net;
  report.assume_bounded_persistence = assume_bounded_persistence;

  auto [g1, g2] = check_structural_hypotheses(net);
  report.g1_no_autocatalysis = std::move(g1);
  report.g2_at_most_two_reactions = std::move(g2);

  const RationalMatrix stoich = stoichiometric_matrix(net);
  report.g3_conservative = check_conservative(stoich);
  report.g4_consistent = check_consistent(stoich, irreversible_indices(net));

  const SRGraph sr = build_sr_graph(net, stoich);
  const DirectedSRGraph dsr = build_directed_sr_graph(net, stoich);
  const RGraph rg = build_r_graph(net, stoich);
  report.sr_connected = graph_connected(sr);
  report.r_connected = graph_connected(rg);
  report.r_components = component_count(rg);
  report.dsr_r_strongly_connected = r_strongly_connected(dsr);
  report.plp = positive_loop_property(rg);
  if (report.plp.holds) {
    report.sigma = sign_pattern(rg);
    report.orthant = classify_kernel_orthant(stoich, *report.sigma);
  }

  auto& verdict = report.verdict;
  if (!report.g1_no_autocatalysis.holds)
    verdict.missing_premises.push_back("no auto-catalysis (G1)");
  if (!report.g2_at_most_two_reactions.holds)
    verdict.missing_premises.push_back(
        "every species in at most two reactions (G2)");
  if (!report.g3_conservative.holds)
    verdict.missing_premises.push_back("conservative network (G3)");
  if (!report.g4_consistent.holds)
    verdict.missing_premises.push_back("consistent network (G4)");
  if (!report.r_connected)
    verdict.missing_premises.push_back("connected R-graph");
  if (!report.plp.holds)
    verdict.missing_premises.push_back("positive loop property");
  if (!assume_bounded_persistence)
    verdict.missing_premises.push_back(
        "bounded persistence (assert with --assume-bounded-persistence)");

  if (!verdict.missing_premises.empty()) {
    verdict.conclusion = Conclusion::Inconclusive;
    verdict.statement = "inconclusive: missing premises";
    return report;
  }
  switch (report.orthant->cls) {
    case OrthantClass::P2:
      verdict.conclusion = Conclusion::GlobalConvergence;
      verdict.statement =
          "global convergence: every positive solution converges to an "
          "equilibrium, unique within its stoichiometric compatibility class";
      break;
    case OrthantClass::P1:
      verdict.conclusion = Conclusion::GenericConvergence;
      verdict.statement =
          "generic convergence: all positive solutions outside a measure-zero "
          "set converge to the set of equilibria";
      break;
    case OrthantClass::Neither:
      // Unreachable when the premises above hold; reported honestly anyway.
      verdict.conclusion = Conclusion::Inconclusive;
      verdict.statement =
          "inconclusive: kernel meets the orthant only on its boundary, "
          "outside the dichotomy's scope";
      verdict.missing_premises.push_back("kernel-orthant dichotomy");
      break;
  }
  return report;
}

InvarianceReport verify_invariance(const ReactionNetwork& net) {
  InvarianceReport report;
  report.original = analyze(net, false);
  auto [reduced_net, trace] = reduce_fully(net);
  report.trace = std::move(trace);
  report.reduced = analyze(reduced_net, false);

  const bool hypotheses = report.original.structural_hypotheses_hold();
  report.r_connectivity.applies = hypotheses;
  report.r_connectivity.agree =
      report.original.r_connected == report.reduced.r_connected;
  report.r_connectivity.guarantee =
      "R-graph connectivity is invariant under removal of intermediates for "
      "networks satisfying (G1)-(G4)";

  report.positive_loop_property.applies = hypotheses;
  report.positive_loop_property.agree =
      report.original.plp.holds == report.reduced.plp.holds;
  report.positive_loop_property.guarantee =
      "the positive loop property is invariant under removal of "
      "intermediates for networks satisfying (G1)-(G4)";

  report.kernel_orthant_class.applies =
      hypotheses && report.reduced.plp.holds;
  report.kernel_orthant_class.agree =
      report.original.orthant.has_value() &&
      report.reduced.orthant.has_value() &&
      report.original.orthant->cls == report.reduced.orthant->cls;
  if (!report.original.orthant && !report.reduced.orthant)
    report.kernel_orthant_class.agree = true;  // neither side classifiable
  report.kernel_orthant_class.guarantee =
      "the kernel-orthant class (P1/P2) is invariant under removal of "
      "intermediates when the reduced network keeps the positive loop "
      "property";

  report.internal_error =
      (report.r_connectivity.applies && !report.r_connectivity.agree) ||
      (report.positive_loop_property.applies &&
       !report.positive_loop_property.agree) ||
      (report.kernel_orthant_class.applies &&
       !report.kernel_orthant_class.agree);
  return report;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

json hypothesis_to_json(const HypothesisResult& h, const ReactionNetwork& net) {
  json out;
  out["holds"] = h.holds;
  if (!h.violations.empty()) {
    json violations = json::array();
    for (const auto& v : h.violations) {
      json item;
      item["species"] = net.species[static_cast<std::size_t>(v.species)];
      if (v.reaction >= 0) item["reaction_index"] = v.reaction;
      violations.push_back(std::move(item));
    }
    out["violations"] = std::move(violations);
  }
  if (h.certificate.size() > 0)
    out[h.holds ? "certificate" : "impossibility_witness"] =
        to_strings(h.certificate);
  return out;
}

json witness_to_json(const LoopWitness& w,
                     const std::vector<std::string>& reaction_names) {
  json out;
  json vertices = json::array();
  for (int v : w.vertices)
    vertices.push_back(reaction_names[static_cast<std::size_t>(v)]);
  out["reaction_loop"] = std::move(vertices);
  out["parity"] = w.parity == LoopParity::OddRLoop ? "odd" : "even";
  return out;
}

json network_to_json(const ReactionNetwork& net) {
  json out;
  out["species"] = net.species;
  out["species_count"] = net.species_count();
  out["reaction_count"] = net.reaction_count();
  out["reversible_count"] = net.reversible_count();
  json reactions = json::array();
  for (const Reaction& r : net.reactions)
    reactions.push_back(serialize_reaction(net, r));
  out["reactions"] = std::move(reactions);
  return out;
}

std::vector<std::string> report_reaction_names(const ReactionNetwork& net) {
  std::vector<std::string> names;
  for (int j = 0; j < net.reaction_count(); ++j) {
    const std::string& label = net.reactions[static_cast<std::size_t>(j)].label;
    names.push_back(label.empty() ? "R" + std::to_string(j + 1) : label);
  }
  return names;
}

json report_to_json(const AnalysisReport& r) {
  json out;
  out["schema_version"] = 1;
  out["network"] = network_to_json(r.network);

  json hyp;
  hyp["g1_no_autocatalysis"] = hypothesis_to_json(r.g1_no_autocatalysis, r.network);
  hyp["g2_at_most_two_reactions"] =
      hypothesis_to_json(r.g2_at_most_two_reactions, r.network);
  hyp["g3_conservative"] = hypothesis_to_json(r.g3_conservative, r.network);
  hyp["g4_consistent"] = hypothesis_to_json(r.g4_consistent, r.network);
  out["hypotheses"] = std::move(hyp);

  json graphs;
  graphs["sr_connected"] = r.sr_connected;
  graphs["r_connected"] = r.r_connected;
  graphs["r_components"] = r.r_components;
  graphs["dsr_r_strongly_connected"] = r.dsr_r_strongly_connected;
  json plp;
  plp["holds"] = r.plp.holds;
  if (r.plp.witness)
    plp["odd_loop"] =
        witness_to_json(*r.plp.witness, report_reaction_names(r.network));
  graphs["positive_loop_property"] = std::move(plp);
  if (r.sigma) graphs["sign_pattern"] = *r.sigma;
  out["graphs"] = std::move(graphs);

  if (r.orthant) {
    json cls;
    switch (r.orthant->cls) {
      case OrthantClass::P1: cls["class"] = "P1"; break;
      case OrthantClass::P2: cls["class"] = "P2"; break;
      case OrthantClass::Neither: cls["class"] = "neither"; break;
    }
    if (r.orthant->certificate.size() > 0)
      cls["certificate"] = to_strings(r.orthant->certificate);
    out["kernel_orthant"] = std::move(cls);
  }

  json verdict;
  switch (r.verdict.conclusion) {
    case Conclusion::GlobalConvergence:
      verdict["conclusion"] = "global-convergence";
      break;
    case Conclusion::GenericConvergence:
      verdict["conclusion"] = "generic-convergence";
      break;
    case Conclusion::Inconclusive:
      verdict["conclusion"] = "inconclusive";
      break;
  }
  verdict["statement"] = r.verdict.statement;
  verdict["missing_premises"] = r.verdict.missing_premises;
  verdict["assumed_bounded_persistence"] = r.assume_bounded_persistence;
  verdict["kinetic_assumptions"] = kKineticAssumptions;
  out["verdict"] = std::move(verdict);
  return out;
}

json step_to_json(const ReductionStep& s) {
  json out;
  out["removed"] = s.removed_species;
  out["cancelled_catalysts"] = s.cancelled_catalysts;
  out["producing_index"] = s.producing;
  out["consuming_index"] = s.consuming;
  out["contracted_index"] = s.contracted_index;
  out["contracted"] = s.contracted_text;
  json map = json::array();
  for (int v : s.index_map) map.push_back(v);
  out["index_map"] = std::move(map);
  return out;
}

json trace_to_json(const ReductionTrace& t) {
  json out;
  out["initial"] = network_to_json(t.initial);
  out["reduced"] = network_to_json(t.final_network);
  json steps = json::array();
  for (const ReductionStep& s : t.steps) steps.push_back(step_to_json(s));
  out["steps"] = std::move(steps);
  return out;
}

json agreement_to_json(const AgreementFlag& f) {
  json out;
  out["applies"] = f.applies;
  out["agree"] = f.agree;
  out["guarantee"] = f.guarantee;
  return out;
}

}  // namespace

std::string to_json_text(const AnalysisReport& report, int indent) {
  return report_to_json(report).dump(indent);
}

std::string to_json_text(const InvarianceReport& report, int indent) {
  json out;
  out["schema_version"] = 1;
  out["original"] = report_to_json(report.original);
  out["reduced"] = report_to_json(report.reduced);
  out["trace"] = trace_to_json(report.trace);
  json agreement;
  agreement["r_connectivity"] = agreement_to_json(report.r_connectivity);
  agreement["positive_loop_property"] =
      agreement_to_json(report.positive_loop_property);
  agreement["kernel_orthant_class"] =
      agreement_to_json(report.kernel_orthant_class);
  out["agreement"] = std::move(agreement);
  out["internal_error"] = report.internal_error;
  return out.dump(indent);
}

std::string trace_to_json_text(const ReductionTrace& trace, int indent) {
  return trace_to_json(trace).dump(indent);
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void hypothesis_line(std::ostringstream& os, const char* name,
                     const HypothesisResult& h, const ReactionNetwork& net) {
  os << "  " << name << ": " << (h.holds ? "holds" : "fails");
  if (!h.holds && !h.violations.empty()) {
    os << " (";
    for (std::size_t i = 0; i < h.violations.size(); ++i) {
      if (i) os << ", ";
      os << net.species[static_cast<std::size_t>(h.violations[i].species)];
      if (h.violations[i].reaction >= 0)
        os << " in R" << h.violations[i].reaction + 1;
    }
    os << ")";
  }
  if (h.holds && h.certificate.size() > 0) {
    os << ", certificate (";
    const auto strings = to_strings(h.certificate);
    for (std::size_t i = 0; i < strings.size(); ++i)
      os << (i ? ", " : "") << strings[i];
    os << ")";
  }
  os << "\n";
}

}  // namespace

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "network: " << r.network.species_count() << " species, "
     << r.network.reaction_count() << " reactions ("
     << r.network.reversible_count() << " reversible)\n";
  os << "hypotheses:\n";
  hypothesis_line(os, "(G1) no auto-catalysis", r.g1_no_autocatalysis,
                  r.network);
  hypothesis_line(os, "(G2) species in at most two reactions",
                  r.g2_at_most_two_reactions, r.network);
  hypothesis_line(os, "(G3) conservative", r.g3_conservative, r.network);
  hypothesis_line(os, "(G4) consistent", r.g4_consistent, r.network);
  os << "graphs:\n";
  os << "  SR-graph connected: " << yes_no(r.sr_connected) << "\n";
  os << "  R-graph connected: " << yes_no(r.r_connected) << " ("
     << r.r_components << " component" << (r.r_components == 1 ? "" : "s")
     << ")\n";
  os << "  directed SR-graph R-strongly connected: "
     << yes_no(r.dsr_r_strongly_connected) << "\n";
  os << "  positive loop property: " << (r.plp.holds ? "holds" : "fails");
  if (r.plp.witness) {
    os << " (odd loop: ";
    const auto names = report_reaction_names(r.network);
    for (std::size_t i = 0; i < r.plp.witness->vertices.size(); ++i)
      os << (i ? " - " : "")
         << names[static_cast<std::size_t>(r.plp.witness->vertices[i])];
    os << ")";
  }
  os << "\n";
  if (r.sigma) {
    os << "  sign pattern: (";
    for (std::size_t i = 0; i < r.sigma->size(); ++i)
      os << (i ? ", " : "") << ((*r.sigma)[i] > 0 ? "+1" : "-1");
    os << ")\n";
  }
  if (r.orthant) {
    os << "kernel vs orthant: ";
    switch (r.orthant->cls) {
      case OrthantClass::P1:
        os << "P1 (kernel meets the orthant only at 0)";
        break;
      case OrthantClass::P2:
        os << "P2 (kernel meets the orthant interior)";
        break;
      case OrthantClass::Neither:
        os << "neither (kernel touches only the orthant boundary)";
        break;
    }
    if (r.orthant->certificate.size() > 0) {
      os << ", certificate (";
      const auto strings = to_strings(r.orthant->certificate);
      for (std::size_t i = 0; i < strings.size(); ++i)
        os << (i ? ", " : "") << strings[i];
      os << ")";
    }
    os << "\n";
  }
  os << "verdict: " << r.verdict.statement;
  if (!r.verdict.missing_premises.empty()) {
    os << " [missing: ";
    for (std::size_t i = 0; i < r.verdict.missing_premises.size(); ++i)
      os << (i ? "; " : "") << r.verdict.missing_premises[i];
    os << "]";
  }
  os << "\n";
  if (r.verdict.conclusion != Conclusion::Inconclusive)
    os << "kinetic preconditions: " << kKineticAssumptions << "\n";
  return os.str();
}

std::string to_text(const InvarianceReport& r) {
  std::ostringstream os;
  os << "=== original ===\n" << to_text(r.original);
  os << "=== reduction (" << r.trace.steps.size() << " steps) ===\n";
  for (const auto& step : r.trace.steps) {
    os << "  removed " << step.removed_species;
    if (!step.cancelled_catalysts.empty()) {
      os << ", cancelled ";
      for (std::size_t i = 0; i < step.cancelled_catalysts.size(); ++i)
        os << (i ? ", " : "") << step.cancelled_catalysts[i];
    }
    os << "\n";
  }
  os << "=== reduced ===\n" << to_text(r.reduced);
  os << "=== agreement ===\n";
  const auto flag_line = [&](const char* name, const AgreementFlag& f) {
    os << "  " << name << ": " << (f.agree ? "agree" : "DISAGREE")
       << (f.applies ? " (guaranteed)" : " (no guarantee applies)") << "\n";
  };
  flag_line("R-graph connectivity", r.r_connectivity);
  flag_line("positive loop property", r.positive_loop_property);
  flag_line("kernel-orthant class", r.kernel_orthant_class);
  if (r.internal_error)
    os << "INTERNAL ERROR: a guaranteed invariance failed; this is a bug in "
          "the analyzer, not a property of the network\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Randomized selftest
// ---------------------------------------------------------------------------

namespace {

bool plp_matches_loop_oracle(const ReactionNetwork& net) {
  const RationalMatrix stoich = stoichiometric_matrix(net);
  const SRGraph sr = build_sr_graph(net, stoich);
  if (sr.vertex_count() > 24) return true;  // oracle bound
  const RGraph rg = build_r_graph(net, stoich);
  const bool plp = positive_loop_property(rg).holds;
  bool all_e_loops = true;
  for (const LoopWitness& loop : enumerate_simple_loops(sr))
    if (loop.parity != LoopParity::ELoop) all_e_loops = false;
  return plp == all_e_loops;
}

bool connectivity_predicates_agree(const ReactionNetwork& net) {
  const RationalMatrix stoich = stoichiometric_matrix(net);
  const bool a = r_strongly_connected(build_directed_sr_graph(net, stoich));
  const bool b = graph_connected(build_sr_graph(net, stoich));
  const bool c = graph_connected(build_r_graph(net, stoich));
  return a == b && b == c;
}

bool hypotheses_preserved_by_removal(const ReactionNetwork& net) {
  const auto candidates = find_intermediates(net);
  if (candidates.empty()) return true;
  const auto [reduced, step] = remove_intermediate(net, candidates.front());
  const auto [g1, g2] = check_structural_hypotheses(reduced);
  if (!g1.holds || !g2.holds) return false;
  const RationalMatrix stoich = stoichiometric_matrix(reduced);
  std::set<int> irreversible;
  for (int j = 0; j < reduced.reaction_count(); ++j)
    if (!reduced.reactions[static_cast<std::size_t>(j)].reversible)
      irreversible.insert(j);
  return check_conservative(stoich).holds &&
         check_consistent(stoich, irreversible).holds;
}

}  // namespace

bool run_selftest(int seeds, std::ostream& out) {
  int failures = 0;
  const auto report = [&](const char* family, int bad, int total) {
    out << family << ": " << (total - bad) << "/" << total << " passed\n";
    failures += bad;
  };

  {
    int bad = 0;
    for (int s = 0; s < seeds; ++s) {
      RandomNetworkParams p;
      p.seed = 1000 + static_cast<std::uint64_t>(s);
      p.max_species = 8;
      p.max_reactions = 5;
      if (!plp_matches_loop_oracle(random_network(p))) ++bad;
    }
    report("positive loop property vs simple-loop oracle", bad, seeds);
  }
  {
    int bad = 0;
    for (int s = 0; s < seeds; ++s) {
      RandomNetworkParams p;
      p.seed = 2000 + static_cast<std::uint64_t>(s);
      p.structured_only = true;
      p.require_conservative = p.require_consistent = true;
      p.intermediates = s % 3;
      if (!connectivity_predicates_agree(random_network(p))) ++bad;
    }
    report("connectivity predicates (R-strong / SR / R)", bad, seeds);
  }
  {
    int bad = 0;
    for (int s = 0; s < seeds; ++s) {
      RandomNetworkParams p;
      p.seed = 3000 + static_cast<std::uint64_t>(s);
      p.structured_only = true;
      p.require_conservative = p.require_consistent = true;
      p.intermediates = 1 + s % 3;
      if (verify_invariance(random_network(p)).internal_error) ++bad;
    }
    report("invariance of the reduction", bad, seeds);
  }
  {
    int bad = 0;
    for (int s = 0; s < seeds; ++s) {
      RandomNetworkParams p;
      p.seed = 4000 + static_cast<std::uint64_t>(s);
      p.structured_only = true;
      p.require_conservative = p.require_consistent = true;
      p.intermediates = 1 + s % 2;
      if (!hypotheses_preserved_by_removal(random_network(p))) ++bad;
    }
    report("hypotheses preserved by a single removal", bad, seeds);
  }
  {
    int bad = 0;
    std::mt19937_64 order_rng(99);
    for (int s = 0; s < seeds; ++s) {
      RandomNetworkParams p;
      p.seed = 5000 + static_cast<std::uint64_t>(s);
      p.structured_only = true;
      p.unit_free_complexes = true;
      p.intermediates = 2 + s % 2;
      p.allow_chains = false;
      const ReactionNetwork net = random_network(p);
      const auto [first, trace1] = reduce_fully(net);
      const auto picker =
          [&order_rng](const std::vector<IntermediateCandidate>& cands) {
            return std::uniform_int_distribution<std::size_t>(
                0, cands.size() - 1)(order_rng);
          };
      const auto [second, trace2] = reduce_fully(net, picker);
      if (!networks_equal(first, second)) ++bad;
    }
    report("removal order independence", bad, seeds);
  }

  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0;
}

}  // namespace crn
