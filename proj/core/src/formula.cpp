#include "glprover/formula.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "glprover/error.hpp"

namespace glprover {

struct Formula::Node {
  Kind kind;
  std::string name;
  Formula a;
  Formula b;
  std::size_t size;
  std::size_t depth;
};

Formula::Formula() : Formula(falsum()) {}

Formula Formula::make(Kind kind, std::string name, const Formula* a, const Formula* b) {
  std::size_t size = 1;
  std::size_t depth = 0;
  if (a != nullptr) {
    size += a->size();
    depth = a->modal_depth();
  }
  if (b != nullptr) {
    size += b->size();
    depth = std::max(depth, b->modal_depth());
  }
  if (kind == Kind::Box) ++depth;
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  if (a != nullptr) node->a = *a;
  if (b != nullptr) node->b = *b;
  node->size = size;
  node->depth = depth;
  return Formula(std::move(node));
}

// Leaves carry null children; lhs()/rhs() are never read on them.
Formula Formula::falsum() {
  static const Formula f = [] {
    auto node = std::shared_ptr<Node>(new Node{Kind::Falsum, {}, Formula(nullptr), Formula(nullptr), 1, 0});
    return Formula(std::move(node));
  }();
  return f;
}

Formula Formula::verum() {
  static const Formula f = [] {
    auto node = std::shared_ptr<Node>(new Node{Kind::Verum, {}, Formula(nullptr), Formula(nullptr), 1, 0});
    return Formula(std::move(node));
  }();
  return f;
}

Formula Formula::atom(std::string name) {
  auto node = std::shared_ptr<Node>(
      new Node{Kind::Atom, std::move(name), Formula(nullptr), Formula(nullptr), 1, 0});
  return Formula(std::move(node));
}

Formula Formula::neg(Formula a) { return make(Kind::Not, {}, &a, nullptr); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, {}, &a, &b); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, {}, &a, &b); }
Formula Formula::imp(Formula a, Formula b) { return make(Kind::Imp, {}, &a, &b); }
Formula Formula::iff(Formula a, Formula b) { return make(Kind::Iff, {}, &a, &b); }
Formula Formula::box(Formula a) { return make(Kind::Box, {}, &a, nullptr); }
Formula Formula::diam(Formula a) { return neg(box(neg(std::move(a)))); }

Kind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::name() const noexcept { return node_->name; }
const Formula& Formula::lhs() const noexcept { return node_->a; }
const Formula& Formula::rhs() const noexcept { return node_->b; }

bool Formula::is_leaf() const noexcept {
  const Kind k = kind();
  return k == Kind::Falsum || k == Kind::Verum || k == Kind::Atom;
}

bool Formula::is_binary() const noexcept {
  const Kind k = kind();
  return k == Kind::And || k == Kind::Or || k == Kind::Imp || k == Kind::Iff;
}

std::size_t Formula::size() const noexcept { return node_->size; }

std::size_t Formula::connectives() const noexcept {
  std::size_t leaves = 0;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->is_leaf()) {
      ++leaves;
    } else {
      stack.push_back(&f->lhs());
      if (f->is_binary()) stack.push_back(&f->rhs());
    }
  }
  return size() - leaves;
}

std::size_t Formula::modal_depth() const noexcept { return node_->depth; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Kind::Falsum:
    case Kind::Verum:
      return std::strong_ordering::equal;
    case Kind::Atom: {
      const int c = a.name().compare(b.name());
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    case Kind::Not:
    case Kind::Box:
      return a.lhs() <=> b.lhs();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.size() != b.size()) return false;
  return (a <=> b) == 0;
}

FormulaSet subformulas(const Formula& f) {
  FormulaSet out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!out.insert(g).second) continue;
    if (g.is_leaf()) continue;
    stack.push_back(g.lhs());
    if (g.is_binary()) stack.push_back(g.rhs());
  }
  return out;
}

FormulaSet subsentences(const Formula& f) {
  FormulaSet out = subformulas(f);
  std::vector<Formula> negated;
  negated.reserve(out.size());
  for (const auto& g : out) negated.push_back(Formula::neg(g));
  out.insert(negated.begin(), negated.end());
  return out;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  for (const auto& g : subformulas(f)) {
    if (g.is(Kind::Atom)) out.insert(g.name());
  }
  return out;
}

bool occurs_in(const Formula& needle, const Formula& haystack) {
  if (needle.size() > haystack.size()) return false;
  if (needle == haystack) return true;
  if (haystack.is_leaf()) return false;
  if (occurs_in(needle, haystack.lhs())) return true;
  return haystack.is_binary() && occurs_in(needle, haystack.rhs());
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength; a subterm printed where `required` is expected gets
// parentheses when its own level is lower.
constexpr int kIffLevel = 0;
constexpr int kImpLevel = 1;
constexpr int kOrLevel = 2;
constexpr int kAndLevel = 3;
constexpr int kPrefixLevel = 4;
constexpr int kAtomicLevel = 5;

bool is_diamond(const Formula& f) {
  return f.is(Kind::Not) && f.body().is(Kind::Box) && f.body().body().is(Kind::Not);
}

int level(const Formula& f) {
  switch (f.kind()) {
    case Kind::Iff: return kIffLevel;
    case Kind::Imp: return kImpLevel;
    case Kind::Or: return kOrLevel;
    case Kind::And: return kAndLevel;
    case Kind::Not:
    case Kind::Box: return kPrefixLevel;
    default: return kAtomicLevel;
  }
}

void print(std::string& out, const Formula& f, int required) {
  const bool paren = level(f) < required;
  if (paren) out += '(';
  switch (f.kind()) {
    case Kind::Falsum: out += "False"; break;
    case Kind::Verum: out += "True"; break;
    case Kind::Atom: out += f.name(); break;
    case Kind::Not:
      if (is_diamond(f)) {
        out += "Diam ";
        print(out, f.body().body().body(), kPrefixLevel);
      } else {
        out += "Not ";
        print(out, f.body(), kPrefixLevel);
      }
      break;
    case Kind::Box:
      out += "Box ";
      print(out, f.body(), kPrefixLevel);
      break;
    case Kind::And:
      print(out, f.lhs(), kAndLevel);
      out += " && ";
      print(out, f.rhs(), kPrefixLevel);
      break;
    case Kind::Or:
      print(out, f.lhs(), kOrLevel);
      out += " || ";
      print(out, f.rhs(), kAndLevel);
      break;
    case Kind::Imp:
      print(out, f.lhs(), kOrLevel);
      out += " --> ";
      print(out, f.rhs(), kImpLevel);
      break;
    case Kind::Iff:
      print(out, f.lhs(), kImpLevel);
      out += " <-> ";
      print(out, f.rhs(), kImpLevel);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(out, f, kIffLevel);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { End, Ident, LParen, RParen, And, Or, Imp, Iff, Not, Box, Diam, False, True };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_rest(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '(') {
      out.push_back({Tok::LParen, start, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, start, ")"});
      ++i;
    } else if (s.substr(i, 2) == "&&") {
      out.push_back({Tok::And, start, "&&"});
      i += 2;
    } else if (s.substr(i, 2) == "||") {
      out.push_back({Tok::Or, start, "||"});
      i += 2;
    } else if (s.substr(i, 3) == "-->") {
      out.push_back({Tok::Imp, start, "-->"});
      i += 3;
    } else if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, start, "<->"});
      i += 3;
    } else if (ident_start(c)) {
      while (i < s.size() && ident_rest(s[i])) ++i;
      std::string word(s.substr(start, i - start));
      Tok t = Tok::Ident;
      if (word == "Not") t = Tok::Not;
      else if (word == "Box") t = Tok::Box;
      else if (word == "Diam") t = Tok::Diam;
      else if (word == "False") t = Tok::False;
      else if (word == "True") t = Tok::True;
      out.push_back({t, start, std::move(word)});
    } else {
      std::size_t j = i + 1;
      while (j < s.size() && std::ispunct(static_cast<unsigned char>(s[j])) != 0 && s[j] != '(' &&
             s[j] != ')') {
        ++j;
      }
      throw ParseError(ParseError::Kind::UnknownToken, start,
                       "unknown token '" + std::string(s.substr(start, j - start)) + "'");
    }
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, peek().pos, what);
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (accept(Tok::Iff)) {
      Formula rhs = parse_imp();
      if (peek().kind == Tok::Iff) fail("'<->' is not associative; add parentheses");
      return Formula::iff(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept(Tok::Imp)) return Formula::imp(std::move(lhs), parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (accept(Tok::Or)) acc = Formula::disj(std::move(acc), parse_and());
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    while (accept(Tok::And)) acc = Formula::conj(std::move(acc), parse_unary());
    return acc;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not: next(); return Formula::neg(parse_unary());
      case Tok::Box: next(); return Formula::box(parse_unary());
      case Tok::Diam: next(); return Formula::diam(parse_unary());
      case Tok::False: next(); return Formula::falsum();
      case Tok::True: next(); return Formula::verum();
      case Tok::Ident: return Formula::atom(next().text);
      case Tok::LParen: {
        next();
        Formula f = parse_iff();
        if (!accept(Tok::RParen)) fail("expected ')'");
        return f;
      }
      case Tok::End: fail("unexpected end of input");
      default: fail("unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : Error("at position " + std::to_string(position) + ": " + message),
      kind_(kind),
      position_(position) {}

}  // namespace glprover
