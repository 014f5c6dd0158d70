#include "crn/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace crn {

std::string ParseError::format(const SourceSpan& s, const std::string& msg) {
  std::ostringstream os;
  os << "line " << s.line << ", column " << s.column << ": " << msg;
  return os.str();
}

namespace {

struct Token {
  enum Kind { Ident, Number, Plus, Slash, Colon, Arrow, RevArrow, End } kind;
  std::string text;
  SourceSpan span;
};

std::vector<Token> tokenize_line(const std::string& line, int line_no) {
  std::vector<Token> tokens;
  std::size_t at = 0;
  const auto span_at = [&](std::size_t start, std::size_t len) {
    return SourceSpan{line_no, static_cast<int>(start) + 1,
                      static_cast<int>(len)};
  };
  while (at < line.size()) {
    const char c = line[at];
    if (c == '#') break;  // comment to end of line
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++at;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = at;
      while (at < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[at])) ||
              line[at] == '_'))
        ++at;
      tokens.push_back({Token::Ident, line.substr(start, at - start),
                        span_at(start, at - start)});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = at;
      while (at < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[at])))
        ++at;
      tokens.push_back({Token::Number, line.substr(start, at - start),
                        span_at(start, at - start)});
      continue;
    }
    switch (c) {
      case '+':
        tokens.push_back({Token::Plus, "+", span_at(at, 1)});
        ++at;
        continue;
      case '/':
        tokens.push_back({Token::Slash, "/", span_at(at, 1)});
        ++at;
        continue;
      case ':':
        tokens.push_back({Token::Colon, ":", span_at(at, 1)});
        ++at;
        continue;
      case '-':
        if (at + 1 < line.size() && line[at + 1] == '>') {
          tokens.push_back({Token::Arrow, "->", span_at(at, 2)});
          at += 2;
          continue;
        }
        throw ParseError(span_at(at, 1), "stray '-' (expected '->')");
      case '<':
        if (line.compare(at, 3, "<->") == 0) {
          tokens.push_back({Token::RevArrow, "<->", span_at(at, 3)});
          at += 3;
          continue;
        }
        throw ParseError(span_at(at, 1), "stray '<' (expected '<->')");
      default:
        throw ParseError(span_at(at, 1),
                         std::string("unexpected character '") + c + "'");
    }
  }
  tokens.push_back(
      {Token::End, "", span_at(line.size(), 1)});
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::vector<std::string>& species,
             std::map<std::string, int>& index_of)
      : tokens_(std::move(tokens)), species_(species), index_of_(index_of) {}

  Reaction parse() {
    Reaction reaction;
    if (peek().kind == Token::Ident && peek(1).kind == Token::Colon) {
      reaction.label = next().text;
      next();  // colon
    }
    reaction.reactant = parse_complex();
    const Token& arrow = peek();
    if (arrow.kind != Token::Arrow && arrow.kind != Token::RevArrow)
      throw ParseError(arrow.span, "expected '->' or '<->'");
    reaction.reversible = arrow.kind == Token::RevArrow;
    next();
    reaction.product = parse_complex();
    if (peek().kind != Token::End)
      throw ParseError(peek().span, "unexpected trailing input");
    return reaction;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t at = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[at];
  }
  const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  int intern(const std::string& name) {
    auto it = index_of_.find(name);
    if (it != index_of_.end()) return it->second;
    const int index = static_cast<int>(species_.size());
    species_.push_back(name);
    index_of_.emplace(name, index);
    return index;
  }

  Complex parse_complex() {
    Complex complex;
    // the bare zero complex
    if (peek().kind == Token::Number && peek().text == "0" &&
        peek(1).kind != Token::Ident && peek(1).kind != Token::Slash) {
      next();
      return complex;
    }
    for (;;) {
      parse_term(complex);
      if (peek().kind != Token::Plus) break;
      const Token plus = next();
      if (peek().kind != Token::Number && peek().kind != Token::Ident)
        throw ParseError(plus.span, "dangling '+' (expected another term)");
    }
    return complex;
  }

  void parse_term(Complex& complex) {
    Rational coefficient(1);
    if (peek().kind == Token::Number) {
      const Token& num = next();
      coefficient = Rational(Integer(num.text));
      SourceSpan coeff_span = num.span;
      if (peek().kind == Token::Slash) {
        next();
        if (peek().kind != Token::Number)
          throw ParseError(peek().span, "expected denominator after '/'");
        const Token& den = next();
        const Integer denominator(den.text);
        if (denominator == 0)
          throw ParseError(den.span, "zero denominator");
        coefficient /= Rational(denominator);
        coeff_span.length =
            den.span.column + den.span.length - coeff_span.column;
      }
      if (coefficient <= 0)
        throw ParseError(coeff_span, "coefficient must be positive");
    }
    if (peek().kind != Token::Ident)
      throw ParseError(peek().span, "expected a species name");
    complex.add(intern(next().text), coefficient);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string>& species_;
  std::map<std::string, int>& index_of_;
};

}  // namespace

ReactionNetwork parse_network(const std::string& text) {
  ReactionNetwork net;
  std::map<std::string, int> index_of;
  std::vector<int> reaction_lines;

  int line_no = 0;
  std::size_t at = 0;
  while (at <= text.size()) {
    std::size_t end = text.find('\n', at);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(at, end - at);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;

    std::vector<Token> tokens = tokenize_line(line, line_no);
    if (tokens.size() > 1) {  // more than the End marker
      LineParser parser(std::move(tokens), net.species, index_of);
      net.reactions.push_back(parser.parse());
      reaction_lines.push_back(line_no);
    }
    if (end == text.size()) break;
    at = end + 1;
  }

  try {
    return validate_network(net);
  } catch (const ValidationError& e) {
    SourceSpan span{1, 1, 1};
    if (e.reaction_index >= 0 &&
        e.reaction_index < static_cast<int>(reaction_lines.size()))
      span.line = reaction_lines[static_cast<std::size_t>(e.reaction_index)];
    throw ParseError(span, e.what());
  }
}

std::string serialize_complex(const ReactionNetwork& net, const Complex& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, coeff] : c.terms()) {
    if (!first) out += " + ";
    first = false;
    if (coeff != 1) out += to_string(coeff) + " ";
    out += net.species[static_cast<std::size_t>(i)];
  }
  return out;
}

std::string serialize_reaction(const ReactionNetwork& net, const Reaction& r) {
  std::string out;
  if (!r.label.empty()) out += r.label + ": ";
  out += serialize_complex(net, r.reactant);
  out += r.reversible ? " <-> " : " -> ";
  out += serialize_complex(net, r.product);
  return out;
}

std::string serialize_network(const ReactionNetwork& net) {
  std::string out;
  for (std::size_t j = 0; j < net.reactions.size(); ++j) {
    if (j) out += "\n";
    out += serialize_reaction(net, net.reactions[j]);
  }
  return out;
}

}  // namespace crn
