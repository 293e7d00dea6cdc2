#include "trop/poly.hpp"

#include <algorithm>

#include "trop/errors.hpp"

namespace trop {

long total_degree(const Expo& e) {
  long d = 0;
  for (long v : e) d += v;
  return d;
}

bool GrlexLess::operator()(const Expo& x, const Expo& y) const {
  require(x.size() == y.size(), "grlex: mixed arities");
  long dx = total_degree(x), dy = total_degree(y);
  if (dx != dy) return dx < dy;
  return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
}

bool grlex_less(const Expo& x, const Expo& y) { return GrlexLess{}(x, y); }

std::string expo_to_string(const Expo& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<Expo> TPoly::support() const {
  std::vector<Expo> s;
  s.reserve(terms.size());
  for (const auto& [e, c] : terms) s.push_back(e);
  return s;
}

TropScalar TPoly::coeff(const Expo& e) const {
  auto it = terms.find(e);
  if (it == terms.end()) return TropScalar::bottom();
  return TropScalar(it->second);
}

TropScalar TPoly::evaluate(const std::vector<Two>& x) const {
  require(static_cast<int>(x.size()) == n, "evaluate: arity mismatch");
  TropScalar best = TropScalar::bottom();
  for (const auto& [e, c] : terms) {
    Two val = c;
    for (int i = 0; i < n; ++i) val += Rat(e[i]) * x[i];
    TropScalar t{val};
    if (best < t) best = t;
  }
  return best;
}

std::vector<Expo> TPoly::argmax_set(const std::vector<Two>& x) const {
  std::vector<Expo> arg;
  TropScalar best = evaluate(x);
  if (best.is_bottom()) return arg;
  for (const auto& [e, c] : terms) {
    Two val = c;
    for (int i = 0; i < n; ++i) val += Rat(e[i]) * x[i];
    if (val == best.v) arg.push_back(e);
  }
  return arg;
}

bool TPoly::is_root(const std::vector<Two>& x) const {
  return argmax_set(x).size() >= 2;
}

void TPoly::tadd_term(const Expo& e, const Two& c) {
  auto [it, fresh] = terms.emplace(e, c);
  if (!fresh && it->second < c) it->second = c;
}

std::string TPoly::str(const std::vector<std::string>& vars) const {
  if (terms.empty()) return "bot";
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += " (+) ";
    out += c.str() + "*" + expo_to_string(e, vars);
  }
  return out;
}

std::string relkind_name(RelKind k) {
  switch (k) {
    case RelKind::Nabla: return "nabla";
    case RelKind::Geq: return ">=";
    case RelKind::Eq: return "==";
    case RelKind::Gt: return ">";
  }
  return "?";
}

bool Relation::holds(const std::vector<Two>& x) const {
  switch (kind) {
    case RelKind::Nabla:
      return plus.is_root(x);
    case RelKind::Geq:
      return plus.evaluate(x) >= minus.evaluate(x);
    case RelKind::Eq:
      return plus.evaluate(x) == minus.evaluate(x);
    case RelKind::Gt:
      return plus.evaluate(x) > minus.evaluate(x);
  }
  return false;
}

std::vector<Expo> Relation::support_union() const {
  std::vector<Expo> s = plus.support();
  for (const auto& e : minus.support()) s.push_back(e);
  std::sort(s.begin(), s.end(), grlex_less);
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool PolySystem::is_solution(const std::vector<Two>& x) const {
  for (const auto& r : rels)
    if (!r.holds(x)) return false;
  return true;
}

bool PolySystem::is_ordinary() const {
  for (const auto& r : rels)
    if (r.kind != RelKind::Nabla) return false;
  return true;
}

bool PolySystem::has_natural_supports() const {
  for (const auto& r : rels) {
    for (const auto& [e, c] : r.plus.terms)
      for (long v : e)
        if (v < 0) return false;
    for (const auto& [e, c] : r.minus.terms)
      for (long v : e)
        if (v < 0) return false;
  }
  return true;
}

std::string PolySystem::str() const {
  std::string out;
  for (const auto& r : rels) {
    if (r.kind == RelKind::Nabla) {
      out += r.plus.str(vars) + " ~ 0\n";
    } else {
      out += r.plus.str(vars) + " " + relkind_name(r.kind) + " " + r.minus.str(vars) + "\n";
    }
  }
  return out;
}

std::vector<std::string> default_vars(int n) {
  std::vector<std::string> v;
  v.reserve(n);
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

}  // namespace trop
