#include "trop/macaulay.hpp"

#include <algorithm>
#include <set>

#include "trop/errors.hpp"

namespace trop {

namespace {

int support_affine_dim(const std::vector<Expo>& support, int n) {
  if (support.empty()) return -1;
  return newton_polytope(support, n).adim;
}

}  // namespace

std::vector<long> dilation_profile(const PolySystem& sys) {
  std::vector<long> r;
  r.reserve(sys.rels.size());
  for (const auto& rel : sys.rels) {
    switch (rel.kind) {
      case RelKind::Nabla:
        r.push_back(1);
        break;
      case RelKind::Geq:
      case RelKind::Gt:
        r.push_back(support_affine_dim(rel.minus.support(), sys.n) + 1);
        break;
      case RelKind::Eq: {
        int dp = support_affine_dim(rel.plus.support(), sys.n);
        int dm = support_affine_dim(rel.minus.support(), sys.n);
        r.push_back(std::max(dp, dm) + 1);
        break;
      }
    }
  }
  return r;
}

MacaulayView make_view(const PolySystem& sys) {
  require(sys.n > 0, "make_view: system has no variables");
  MacaulayView v;
  v.n = sys.n;
  v.system = sys;
  std::vector<long> prof = dilation_profile(sys);

  std::vector<std::pair<FactorHull, long>> factors;
  for (std::size_t j = 0; j < sys.rels.size(); ++j) {
    const Relation& rel = sys.rels[j];
    RelView rv;
    rv.kind = rel.kind;
    rv.dilation = prof[j];
    require(!rel.plus.terms.empty() || !rel.minus.terms.empty(),
            "make_view: relation with empty supports");
    for (const auto& [e, c] : rel.plus.terms) rv.plus.emplace(e, c);
    for (const auto& [e, c] : rel.minus.terms) {
      Two cc = c;
      if (rel.kind == RelKind::Gt) cc += Two::eps();
      rv.minus.emplace(e, cc);
    }
    rv.merged.n = sys.n;
    for (const auto& [e, c] : rv.plus) rv.merged.tadd_term(e, c);
    for (const auto& [e, c] : rv.minus) rv.merged.tadd_term(e, c);
    rv.union_support = rv.merged.support();
    rv.hull = build_factor_hull(rv.merged);
    factors.push_back({rv.hull, rv.dilation});
    v.rels.push_back(std::move(rv));
  }
  v.lifted = sup_convolution(std::move(factors));
  return v;
}

CEData ce_set(const MacaulayView& view, unsigned long seed) {
  ShiftResult s = generic_shift(view.lifted, seed);
  return CEData{std::move(s.delta), std::move(s.points), s.attempts};
}

std::string LinearSystem::row_label(const Row& r, const std::vector<std::string>& vars) const {
  std::string mono = expo_to_string(r.shift, vars);
  std::string base = "f" + std::to_string(r.rel + 1);
  if (mono == "1") return base;
  return mono + "*" + base;
}

namespace {

Expo expo_add(const Expo& a, const Expo& b) {
  Expo c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Expo expo_sub(const Expo& a, const Expo& b) {
  Expo c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

LinearSystem::Row build_row(const MacaulayView& view, int rel, const Expo& shift,
                            const std::map<Expo, int, GrlexLess>& col_index) {
  LinearSystem::Row row;
  row.rel = rel;
  row.shift = shift;
  row.kind = view.rels[rel].kind;
  for (const auto& [e, c] : view.rels[rel].plus) {
    auto it = col_index.find(expo_add(shift, e));
    require(it != col_index.end(), "linearize: inadmissible row");
    row.plus.push_back({it->second, c});
  }
  for (const auto& [e, c] : view.rels[rel].minus) {
    auto it = col_index.find(expo_add(shift, e));
    require(it != col_index.end(), "linearize: inadmissible row");
    row.minus.push_back({it->second, c});
  }
  return row;
}

}  // namespace

LinearSystem macaulay_view(const MacaulayView& view, const std::vector<Expo>& cols) {
  LinearSystem sys;
  sys.n = view.n;
  sys.cols = cols;
  std::sort(sys.cols.begin(), sys.cols.end(), grlex_less);
  std::map<Expo, int, GrlexLess> col_index;
  for (std::size_t i = 0; i < sys.cols.size(); ++i) col_index.emplace(sys.cols[i], i);

  for (std::size_t j = 0; j < view.rels.size(); ++j) {
    const auto& supp = view.rels[j].union_support;
    // Candidate shifts: a shift is admissible only if it places the first
    // support point on some column.
    std::set<Expo, GrlexLess> cands;
    for (const auto& c : sys.cols) cands.insert(expo_sub(c, supp[0]));
    for (const auto& beta : cands) {
      bool ok = true;
      for (const auto& e : supp)
        if (!col_index.count(expo_add(beta, e))) { ok = false; break; }
      if (ok) sys.rows.push_back(build_row(view, static_cast<int>(j), beta, col_index));
    }
  }
  return sys;
}

LinearSystem truncated_view(const MacaulayView& view, long N) {
  require(N >= 0, "truncated_view: negative degree");
  require(view.system.has_natural_supports(), "truncated_view: negative exponents");
  LinearSystem sys;
  sys.n = view.n;

  // Columns: all monomials of total degree <= N.
  std::map<Expo, int, GrlexLess> col_index;
  {
    Expo e(view.n, 0);
    for (;;) {
      if (total_degree(e) <= N) sys.cols.push_back(e);
      int j = view.n - 1;
      while (j >= 0) {
        ++e[j];
        if (total_degree(e) <= N) break;
        e[j] = 0;
        --j;
      }
      if (j < 0) break;
    }
    std::sort(sys.cols.begin(), sys.cols.end(), grlex_less);
    for (std::size_t i = 0; i < sys.cols.size(); ++i) col_index.emplace(sys.cols[i], i);
  }

  for (std::size_t j = 0; j < view.rels.size(); ++j) {
    long dj = 0;
    for (const auto& e : view.rels[j].union_support) dj = std::max(dj, total_degree(e));
    // Admission by the dense apriori support: shift + degree-dj simplex fits.
    long room = N - dj;
    if (room < 0) continue;
    for (const auto& beta : sys.cols) {
      if (total_degree(beta) > room) continue;
      sys.rows.push_back(build_row(view, static_cast<int>(j), beta, col_index));
    }
  }
  return sys;
}

TVec veronese(const std::vector<Expo>& cols, const TVec& x) {
  TVec v;
  v.reserve(cols.size());
  for (const auto& c : cols) {
    Two val;
    for (std::size_t i = 0; i < c.size(); ++i) val += Rat(c[i]) * x[i];
    v.push_back(val);
  }
  return v;
}

}  // namespace trop
