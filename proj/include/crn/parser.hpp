#ifndef CRN_PARSER_HPP
#define CRN_PARSER_HPP

#include <stdexcept>
#include <string>

#include "crn/model.hpp"

namespace crn {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : std::runtime_error(format(span, message)),
        span(span),
        message(message) {}

  SourceSpan span;
  std::string message;

 private:
  static std::string format(const SourceSpan& s, const std::string& msg);
};

/// Parses the line-oriented reaction format:
///   [label ":"] complex ("->" | "<->") complex
/// where a complex is "0" or "+"-separated terms, a term is an optional
/// positive integer or "a/b" coefficient followed by a species identifier,
/// "#" starts a comment, and blank lines are skipped. Repeated species in
/// one complex sum their coefficients; species order is first appearance.
/// The result is passed through validate_network. LF and CRLF both work.
ReactionNetwork parse_network(const std::string& text);

/// One reaction per line in stored order, coefficients in lowest terms
/// with unit coefficients omitted, labels kept. parse_network of the
/// output is canonical-equal to the input.
std::string serialize_network(const ReactionNetwork& net);

std::string serialize_complex(const ReactionNetwork& net, const Complex& c);
std::string serialize_reaction(const ReactionNetwork& net, const Reaction& r);

}  // namespace crn

#endif
