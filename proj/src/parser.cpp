#include "trop/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "trop/errors.hpp"

namespace trop {

namespace {

struct Token {
  enum Kind { Ident, Number, Sym, End } kind = End;
  std::string text;
};

class Lexer {
 public:
  Lexer(const std::string& line, int lineno) : s_(line), lineno_(lineno) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  bool accept_sym(const std::string& sym) {
    if (tok_.kind == Token::Sym && tok_.text == sym) {
      advance();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "line " << lineno_ << ": " << msg;
    throw MalformedInputError(os.str());
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size() || s_[pos_] == '#') {
      tok_ = {Token::End, ""};
      return;
    }
    const char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = pos_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      tok_ = {Token::Ident, s_.substr(pos_, j - pos_)};
      pos_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = pos_;
      while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '.' ||
                               s_[j] == '/'))
        ++j;
      tok_ = {Token::Number, s_.substr(pos_, j - pos_)};
      pos_ = j;
      return;
    }
    for (const char* sym : {">=", "==", "<=", "<", ">", "+", "*", "^", "(", ")", ":", "~", "-"}) {
      const std::size_t len = std::string(sym).size();
      if (s_.compare(pos_, len, sym) == 0) {
        tok_ = {Token::Sym, sym};
        pos_ += len;
        return;
      }
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string s_;
  int lineno_;
  std::size_t pos_ = 0;
  Token tok_;
};

Rat parse_number(Lexer& lx) {
  if (lx.accept_sym("(")) {
    if (!lx.accept_sym("-")) lx.fail("expected '-' inside parenthesized coefficient");
    const Token t = lx.take();
    if (t.kind != Token::Number) lx.fail("expected a number after '(-'");
    if (!lx.accept_sym(")")) lx.fail("expected ')' after negative coefficient");
    return -parse_rational(t.text);
  }
  const Token t = lx.take();
  if (t.kind != Token::Number) lx.fail("expected a number");
  return parse_rational(t.text);
}

long parse_exponent(Lexer& lx) {
  bool neg = false;
  bool paren = lx.accept_sym("(");
  if (lx.accept_sym("-")) neg = true;
  const Token t = lx.take();
  if (t.kind != Token::Number) lx.fail("expected an integer exponent");
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c))) lx.fail("exponent must be an integer");
  if (paren && !lx.accept_sym(")")) lx.fail("expected ')' after exponent");
  const long v = std::stol(t.text);
  return neg ? -v : v;
}

TPoly parse_poly_tokens(Lexer& lx, const std::map<std::string, int>& var_index, int n) {
  TPoly f;
  f.n = n;
  while (true) {
    // One term: coefficient and/or variable powers.
    Rat coeff(0);
    Expo e(n, 0);
    bool saw = false;
    while (true) {
      const Token& t = lx.peek();
      if (t.kind == Token::Number || (t.kind == Token::Sym && t.text == "(")) {
        coeff += parse_number(lx);
        saw = true;
      } else if (t.kind == Token::Ident) {
        auto it = var_index.find(t.text);
        if (it == var_index.end()) lx.fail("unknown variable '" + t.text + "'");
        lx.take();
        long k = 1;
        if (lx.accept_sym("^")) k = parse_exponent(lx);
        e[it->second] += k;
        saw = true;
      } else if (t.kind == Token::Sym && t.text == "-") {
        lx.fail("negative coefficients are written (-q)");
      } else {
        break;
      }
      if (!lx.accept_sym("*")) {
        const Token& nx = lx.peek();
        const bool more = nx.kind == Token::Ident || nx.kind == Token::Number ||
                          (nx.kind == Token::Sym && nx.text == "(");
        if (!more) break;
      }
    }
    if (!saw) lx.fail("expected a term");
    if (f.terms.count(e) > 0) lx.fail("duplicate monomial in one polynomial");
    f.terms.emplace(std::move(e), Two(coeff));
    if (!lx.accept_sym("+")) break;
  }
  return f;
}

}  // namespace

PolySystem parse_system(const std::string& text) {
  PolySystem sys;
  std::map<std::string, int> var_index;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_vars = false;
  while (std::getline(in, line)) {
    ++lineno;
    Lexer lx(line, lineno);
    if (lx.peek().kind == Token::End) continue;

    if (!have_vars) {
      const Token head = lx.take();
      if (head.kind != Token::Ident || head.text != "vars")
        lx.fail("expected a 'vars' line first");
      while (lx.peek().kind == Token::Ident) {
        const std::string name = lx.take().text;
        if (var_index.count(name) > 0) lx.fail("duplicate variable '" + name + "'");
        var_index[name] = static_cast<int>(sys.vars.size());
        sys.vars.push_back(name);
      }
      if (lx.peek().kind != Token::End) lx.fail("junk after variable list");
      if (sys.vars.empty()) lx.fail("at least one variable is required");
      sys.n = static_cast<int>(sys.vars.size());
      have_vars = true;
      continue;
    }

    // Optional "label :" prefix.
    {
      Lexer probe = lx;
      if (probe.peek().kind == Token::Ident) {
        probe.take();
        if (probe.accept_sym(":")) {
          lx.take();
          lx.accept_sym(":");
        }
      }
    }

    Relation rel;
    rel.plus = parse_poly_tokens(lx, var_index, sys.n);
    const Token op = lx.take();
    if (op.kind != Token::Sym) lx.fail("expected a relation operator");
    if (op.text == "~") {
      const Token z = lx.take();
      if (z.kind != Token::Number || parse_rational(z.text) != 0)
        lx.fail("a root constraint ends with '~ 0'");
      rel.kind = RelKind::Nabla;
    } else {
      TPoly rhs = parse_poly_tokens(lx, var_index, sys.n);
      if (op.text == ">=") {
        rel.kind = RelKind::Geq;
        rel.minus = std::move(rhs);
      } else if (op.text == ">") {
        rel.kind = RelKind::Gt;
        rel.minus = std::move(rhs);
      } else if (op.text == "==") {
        rel.kind = RelKind::Eq;
        rel.minus = std::move(rhs);
      } else if (op.text == "<=") {
        rel.kind = RelKind::Geq;
        rel.minus = std::move(rel.plus);
        rel.plus = std::move(rhs);
      } else if (op.text == "<") {
        rel.kind = RelKind::Gt;
        rel.minus = std::move(rel.plus);
        rel.plus = std::move(rhs);
      } else {
        lx.fail("unknown relation operator '" + op.text + "'");
      }
    }
    if (lx.peek().kind != Token::End) lx.fail("junk after relation");
    sys.rels.push_back(std::move(rel));
  }
  if (!have_vars) throw MalformedInputError("empty input: expected a 'vars' line");
  return sys;
}

PolySystem parse_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

TPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  std::map<std::string, int> var_index;
  for (std::size_t i = 0; i < vars.size(); ++i) var_index[vars[i]] = static_cast<int>(i);
  Lexer lx(text, 1);
  TPoly f = parse_poly_tokens(lx, var_index, static_cast<int>(vars.size()));
  if (lx.peek().kind != Token::End) lx.fail("junk after polynomial");
  return f;
}

}  // namespace trop
