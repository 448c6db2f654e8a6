#include "belnap/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace belnap {

ParseError::ParseError(std::size_t offset, std::string expected, std::string found)
    : Error("at offset " + std::to_string(offset) + ": expected " + expected + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

UnknownAtomError::UnknownAtomError(std::string atom)
    : Error("atom '" + atom + "' is not assigned by the agent"), atom_(std::move(atom)) {}

DomainTooLargeError::DomainTooLargeError(std::size_t cap, std::size_t requested)
    : Error("enumeration over " + std::to_string(requested) + " atoms exceeds the cap of " +
            std::to_string(cap) + " atoms"),
      cap_(cap),
      requested_(requested) {}

RuleError::RuleError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

struct Formula::Node {
  Connective connective;
  std::string name;
  std::vector<Formula> children;
  std::size_t depth;
  std::size_t connectives;
};

Formula Formula::atom(std::string name) {
  if (!is_atom_name(name)) throw Error("invalid atom name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Connective::atom, std::move(name), {}, 1, 0}));
}

Formula Formula::negation(Formula operand) {
  std::size_t d = operand.depth() + 1;
  std::size_t c = operand.connectives() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::negation, {}, {std::move(operand)}, d, c}));
}

Formula Formula::conjunction(Formula left, Formula right) {
  std::size_t d = std::max(left.depth(), right.depth()) + 1;
  std::size_t c = left.connectives() + right.connectives() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::conjunction, {}, {std::move(left), std::move(right)}, d, c}));
}

Formula Formula::disjunction(Formula left, Formula right) {
  std::size_t d = std::max(left.depth(), right.depth()) + 1;
  std::size_t c = left.connectives() + right.connectives() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::disjunction, {}, {std::move(left), std::move(right)}, d, c}));
}

Connective Formula::connective() const noexcept { return node_->connective; }
const std::string& Formula::name() const noexcept { return node_->name; }
std::size_t Formula::depth() const noexcept { return node_->depth; }
std::size_t Formula::connectives() const noexcept { return node_->connectives; }

const Formula& Formula::operand() const {
  if (node_->connective != Connective::negation) throw Error("operand() on a non-negation");
  return node_->children[0];
}

const Formula& Formula::left() const {
  if (node_->children.size() != 2) throw Error("left() on a non-binary formula");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (node_->children.size() != 2) throw Error("right() on a non-binary formula");
  return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->connective <=> b.node_->connective; c != 0) return c;
  if (a.is_atom()) return a.node_->name.compare(b.node_->name) <=> 0;
  const auto& ca = a.node_->children;
  const auto& cb = b.node_->children;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (auto c = ca[i] <=> cb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool is_atom_name(std::string_view name) noexcept {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

enum class Token { atom, negation, conjunction, disjunction, lparen, rparen, end, invalid };

// Recursive-descent parser over the byte string; offsets are byte offsets.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = disjunction();
    skip_space();
    if (pos_ < text_.size()) fail("'&', '|' or end of input");
    return f;
  }

 private:
  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Token::disjunction)) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = negation();
    while (accept(Token::conjunction)) f = Formula::conjunction(std::move(f), negation());
    return f;
  }

  Formula negation() {
    if (accept(Token::negation)) return Formula::negation(negation());
    return atomic();
  }

  Formula atomic() {
    skip_space();
    std::size_t start = pos_;
    Token t = peek();
    if (t == Token::lparen) {
      advance();
      Formula f = disjunction();
      if (!accept(Token::rparen)) fail("')'");
      return f;
    }
    if (t == Token::atom) {
      advance();
      return Formula::atom(std::string(text_.substr(start, pos_ - start)));
    }
    fail("atom, '~' or '('");
  }

  bool accept(Token t) {
    skip_space();
    if (peek() != t) return false;
    advance();
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  // Classifies the token at pos_ and records its byte length in len_.
  Token peek() {
    if (pos_ >= text_.size()) {
      len_ = 0;
      return Token::end;
    }
    char c = text_[pos_];
    len_ = 1;
    switch (c) {
      case '~': return Token::negation;
      case '&': return Token::conjunction;
      case '|': return Token::disjunction;
      case '(': return Token::lparen;
      case ')': return Token::rparen;
      default: break;
    }
    if (starts_with("¬")) {
      len_ = 2;
      return Token::negation;
    }
    if (starts_with("∧")) {
      len_ = 3;
      return Token::conjunction;
    }
    if (starts_with("∨")) {
      len_ = 3;
      return Token::disjunction;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      len_ = end - pos_;
      return Token::atom;
    }
    return Token::invalid;
  }

  void advance() { pos_ += len_; }

  [[noreturn]] void fail(const std::string& expected) {
    skip_space();
    std::string found;
    if (pos_ >= text_.size()) {
      found = "end of input";
    } else {
      peek();
      std::size_t n = std::max<std::size_t>(len_, 1);
      found = "'" + std::string(text_.substr(pos_, n)) + "'";
    }
    throw ParseError(pos_, expected, found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t len_ = 0;
};

int precedence(Connective c) {
  switch (c) {
    case Connective::disjunction: return 1;
    case Connective::conjunction: return 2;
    case Connective::negation: return 3;
    case Connective::atom: return 4;
  }
  return 4;
}

void render_into(const Formula& f, std::string& out, int min_prec) {
  int prec = precedence(f.connective());
  bool paren = prec < min_prec;
  if (paren) out += '(';
  switch (f.connective()) {
    case Connective::atom:
      out += f.name();
      break;
    case Connective::negation:
      out += '~';
      render_into(f.operand(), out, 3);
      break;
    case Connective::conjunction:
    case Connective::disjunction:
      // Left-associative: a right operand at the same level needs parentheses.
      render_into(f.left(), out, prec);
      out += f.connective() == Connective::conjunction ? " & " : " | ";
      render_into(f.right(), out, prec + 1);
      break;
  }
  if (paren) out += ')';
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.connective()) {
    case Connective::atom:
      out.insert(f.name());
      break;
    case Connective::negation:
      collect_atoms(f.operand(), out);
      break;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out, 0);
  return out;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::set<std::string> atoms(const FormulaSet& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) collect_atoms(f, out);
  return out;
}

}  // namespace belnap
