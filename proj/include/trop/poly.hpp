#pragma once

#include <map>
#include <string>
#include <vector>

#include "trop/scalar.hpp"

namespace trop {

/// Exponent vector of a (Laurent) monomial.
using Expo = std::vector<long>;

long total_degree(const Expo& e);

/// Graded order: ascending total degree, ties broken by lexicographically
/// larger exponent vector first.  So in two variables the order starts
/// (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
struct GrlexLess {
  bool operator()(const Expo& x, const Expo& y) const;
};

bool grlex_less(const Expo& x, const Expo& y);

std::string expo_to_string(const Expo& e, const std::vector<std::string>& vars);

/// Tropical polynomial: finite coefficients indexed by exponent; an absent
/// exponent has coefficient Bottom.  Terms iterate in graded order.
struct TPoly {
  int n = 0;
  std::map<Expo, Two, GrlexLess> terms;

  bool empty() const { return terms.empty(); }

  /// Support as a graded-ordered list.
  std::vector<Expo> support() const;

  TropScalar coeff(const Expo& e) const;

  /// max over terms of coeff + <e, x>.  Bottom when the polynomial has no terms.
  TropScalar evaluate(const std::vector<Two>& x) const;

  /// Exponents attaining the evaluation maximum, in graded order.
  std::vector<Expo> argmax_set(const std::vector<Two>& x) const;

  /// True when the maximum is attained by at least two terms.
  bool is_root(const std::vector<Two>& x) const;

  /// Adds c * monomial(e), tropically (keeps the larger coefficient on clash).
  void tadd_term(const Expo& e, const Two& c);

  std::string str(const std::vector<std::string>& vars) const;
};

enum class RelKind { Nabla, Geq, Eq, Gt };

std::string relkind_name(RelKind k);

/// One constraint row.  Nabla uses only `plus` (the maximum must be attained
/// twice); the two-sided kinds compare plus against minus.
struct Relation {
  RelKind kind = RelKind::Nabla;
  TPoly plus;
  TPoly minus;

  bool holds(const std::vector<Two>& x) const;

  /// Union of the supports of both sides, graded order.
  std::vector<Expo> support_union() const;
};

struct PolySystem {
  int n = 0;
  std::vector<std::string> vars;
  std::vector<Relation> rels;

  bool is_solution(const std::vector<Two>& x) const;

  /// True when every relation is Nabla.
  bool is_ordinary() const;

  /// True when no exponent is negative anywhere.
  bool has_natural_supports() const;

  std::string str() const;
};

/// Default variable names x1..xn.
std::vector<std::string> default_vars(int n);

}  // namespace trop
