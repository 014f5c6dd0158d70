#ifndef CRN_ANALYSIS_HPP
#define CRN_ANALYSIS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "crn/graphs.hpp"
#include "crn/linalg.hpp"
#include "crn/model.hpp"
#include "crn/reduction.hpp"

namespace crn {

enum class Conclusion { GlobalConvergence, GenericConvergence, Inconclusive };

struct Verdict {
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string statement;
  std::vector<std::string> missing_premises;
};

/// Everything the analyzer can say about one network, certificates
/// included so the report can be re-verified without trusting it.
struct AnalysisReport {
  ReactionNetwork network;
  HypothesisResult g1_no_autocatalysis;
  HypothesisResult g2_at_most_two_reactions;
  HypothesisResult g3_conservative;
  HypothesisResult g4_consistent;
  bool sr_connected = false;
  bool r_connected = false;
  int r_components = 0;
  bool dsr_r_strongly_connected = false;
  PlpResult plp;
  std::optional<SignPattern> sigma;                // when PLP holds
  std::optional<KernelOrthantClass> orthant;       // when PLP holds
  bool assume_bounded_persistence = false;
  Verdict verdict;

  bool structural_hypotheses_hold() const;  // G1-G4 all hold
};

AnalysisReport analyze(const ReactionNetwork& net,
                       bool assume_bounded_persistence);

/// One invariance comparison between a network and its minimal reduction.
/// `applies` means the guarantee's hypotheses held, in which case any
/// disagreement is an implementation bug, not a property of the network.
struct AgreementFlag {
  bool applies = false;
  bool agree = false;
  std::string guarantee;
};

struct InvarianceReport {
  AnalysisReport original;
  AnalysisReport reduced;
  ReductionTrace trace;
  AgreementFlag r_connectivity;
  AgreementFlag positive_loop_property;
  AgreementFlag kernel_orthant_class;
  bool internal_error = false;  // some applicable flag disagreed
};

InvarianceReport verify_invariance(const ReactionNetwork& net);

std::string to_json_text(const AnalysisReport& report, int indent = 2);
std::string to_json_text(const InvarianceReport& report, int indent = 2);
std::string trace_to_json_text(const ReductionTrace& trace, int indent = 2);

std::string to_text(const AnalysisReport& report);
std::string to_text(const InvarianceReport& report);

/// Randomized cross-checks of the analyzer against its oracles; prints a
/// summary per family and returns false when any check failed.
bool run_selftest(int seeds, std::ostream& out);

}  // namespace crn

#endif
