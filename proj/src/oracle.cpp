#include "trop/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "trop/errors.hpp"
#include "trop/par.hpp"

namespace trop {

namespace {

bool zero_row_ok(const LinCon& c) {
  // 0 <= rhs, strictly when the row is strict.
  return c.strict ? Two() < c.rhs : !(c.rhs < Two());
}

// Scale so the first nonzero coefficient has absolute value one, then keep
// only the strongest right-hand side per coefficient vector.
void normalize_and_dedupe(std::vector<LinCon>& list) {
  std::map<RVec, std::pair<Two, bool>> best;
  for (LinCon& c : list) {
    Rat scale;
    bool found = false;
    for (const Rat& v : c.coef)
      if (v != 0) {
        scale = abs(v);
        found = true;
        break;
      }
    if (!found) continue;  // zero rows are handled by the caller
    if (scale != 1) {
      for (Rat& v : c.coef) v /= scale;
      c.rhs = c.rhs / scale;
    }
    auto it = best.find(c.coef);
    if (it == best.end()) {
      best.emplace(std::move(c.coef), std::make_pair(std::move(c.rhs), c.strict));
    } else {
      auto& [rhs, strict] = it->second;
      if (c.rhs < rhs || (c.rhs == rhs && c.strict && !strict)) {
        rhs = std::move(c.rhs);
        strict = c.strict;
      }
    }
  }
  list.clear();
  for (auto& [coef, rs] : best) list.push_back({coef, rs.first, rs.second});
}

}  // namespace

bool fm_feasible(int nvars, std::vector<LinCon> cons, TVec* sample) {
  for (const LinCon& c : cons)
    require(static_cast<int>(c.coef.size()) == nvars, "fm_feasible: ragged constraint");

  std::vector<std::vector<LinCon>> stages;
  for (int k = 0; k < nvars; ++k) {
    std::vector<LinCon> carry;
    for (LinCon& c : cons) {
      bool allz = true;
      for (const Rat& v : c.coef)
        if (v != 0) {
          allz = false;
          break;
        }
      if (allz) {
        if (!zero_row_ok(c)) return false;
      } else {
        carry.push_back(std::move(c));
      }
    }
    normalize_and_dedupe(carry);
    stages.push_back(carry);

    std::vector<LinCon> next;
    std::vector<const LinCon*> uppers, lowers;
    for (const LinCon& c : carry) {
      if (c.coef[k] > 0)
        uppers.push_back(&c);
      else if (c.coef[k] < 0)
        lowers.push_back(&c);
      else
        next.push_back(c);
    }
    for (const LinCon* u : uppers)
      for (const LinCon* l : lowers) {
        const Rat mu = -l->coef[k];  // > 0
        const Rat ml = u->coef[k];   // > 0
        LinCon c;
        c.coef = rvec_zero(nvars);
        for (int d = 0; d < nvars; ++d) c.coef[d] = mu * u->coef[d] + ml * l->coef[d];
        c.rhs = u->rhs * mu + l->rhs * ml;
        c.strict = u->strict || l->strict;
        next.push_back(std::move(c));
      }
    require(next.size() <= 200000, "fm_feasible: elimination blowup");
    cons = std::move(next);
  }
  for (const LinCon& c : cons)
    if (!zero_row_ok(c)) return false;

  if (!sample) return true;
  TVec x(nvars);
  for (int k = nvars - 1; k >= 0; --k) {
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Two lo, hi;
    for (const LinCon& c : stages[k]) {
      if (c.coef[k] == 0) continue;
      Two s = c.rhs;
      for (int d = k + 1; d < nvars; ++d) s -= x[d] * c.coef[d];
      const Two bound = s / c.coef[k];
      if (c.coef[k] > 0) {
        if (!has_hi || bound < hi || (bound == hi && c.strict)) hi_strict = c.strict;
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      } else {
        if (!has_lo || bound > lo || (bound == lo && c.strict)) lo_strict = c.strict;
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      }
    }
    // Prefer zero whenever the interval allows it; samples stay canonical.
    const Two zero;
    const bool zero_ok = (!has_lo || lo < zero || (lo == zero && !lo_strict)) &&
                         (!has_hi || zero < hi || (hi == zero && !hi_strict));
    if (zero_ok) {
      x[k] = zero;
    } else if (has_lo && has_hi) {
      require(lo < hi || (lo == hi && !lo_strict && !hi_strict),
              "fm_feasible: inconsistent bounds after elimination");
      x[k] = (lo == hi) ? lo : (lo + hi) / Rat(2);
    } else if (has_lo) {
      x[k] = lo + Two(Rat(1));
    } else {
      x[k] = hi - Two(Rat(1));
    }
  }
  *sample = std::move(x);
  return true;
}

namespace {

// One candidate argmax pattern of a relation, as linear constraints.
using Pattern = std::vector<LinCon>;

void dominance(Pattern& out, int n, const Expo& ea, const Two& ca, const Expo& eg, const Two& cg,
               bool strict) {
  // value(a) >= value(g):  <eg - ea, x> <= ca - cg.
  LinCon c;
  c.coef = rvec_zero(n);
  for (int d = 0; d < n; ++d) c.coef[d] = Rat(eg[d]) - Rat(ea[d]);
  c.rhs = ca - cg;
  c.strict = strict;
  out.push_back(std::move(c));
}

// All patterns of one relation, or nullopt when the relation cannot hold at
// any finite point.
std::optional<std::vector<Pattern>> relation_patterns(const Relation& rel, int n) {
  std::vector<Pattern> pats;
  const auto& P = rel.plus.terms;
  const auto& M = rel.minus.terms;
  switch (rel.kind) {
    case RelKind::Nabla: {
      if (P.size() < 2) return std::nullopt;
      for (auto ia = P.begin(); ia != P.end(); ++ia)
        for (auto ib = std::next(ia); ib != P.end(); ++ib) {
          Pattern pat;
          dominance(pat, n, ia->first, ia->second, ib->first, ib->second, false);
          dominance(pat, n, ib->first, ib->second, ia->first, ia->second, false);
          for (const auto& [eg, cg] : P) {
            if (eg == ia->first || eg == ib->first) continue;
            dominance(pat, n, ia->first, ia->second, eg, cg, false);
          }
          pats.push_back(std::move(pat));
        }
      break;
    }
    case RelKind::Geq:
    case RelKind::Gt: {
      const bool strict = rel.kind == RelKind::Gt;
      if (P.empty()) {
        if (M.empty() && !strict) {
          pats.push_back({});
          break;
        }
        return std::nullopt;
      }
      if (M.empty()) {
        pats.push_back({});
        break;
      }
      for (const auto& [ea, ca] : P) {
        Pattern pat;
        for (const auto& [eg, cg] : M) dominance(pat, n, ea, ca, eg, cg, strict);
        pats.push_back(std::move(pat));
      }
      break;
    }
    case RelKind::Eq: {
      if (P.empty() != M.empty()) return std::nullopt;
      if (P.empty()) {
        pats.push_back({});
        break;
      }
      for (const auto& [ea, ca] : P)
        for (const auto& [eb, cb] : M) {
          Pattern pat;
          dominance(pat, n, ea, ca, eb, cb, false);
          dominance(pat, n, eb, cb, ea, ca, false);
          for (const auto& [eg, cg] : P) {
            if (eg == ea) continue;
            dominance(pat, n, ea, ca, eg, cg, false);
          }
          for (const auto& [eg, cg] : M) {
            if (eg == eb) continue;
            dominance(pat, n, eb, cb, eg, cg, false);
          }
          pats.push_back(std::move(pat));
        }
      break;
    }
  }
  return pats;
}

}  // namespace

OracleResult brute_feasibility(const PolySystem& sys) {
  std::vector<std::vector<Pattern>> rel_pats;
  for (const Relation& rel : sys.rels) {
    auto pats = relation_patterns(rel, sys.n);
    if (!pats) return {};
    require(!pats->empty(), "oracle: relation produced no patterns");
    rel_pats.push_back(std::move(*pats));
  }

  std::size_t total = 1;
  for (const auto& pats : rel_pats) {
    total *= pats.size();
    require(total <= 1000000, "oracle: pattern product too large");
  }

  auto assemble = [&](std::size_t idx) {
    std::vector<LinCon> cons;
    for (const auto& pats : rel_pats) {
      const std::size_t k = idx % pats.size();
      idx /= pats.size();
      cons.insert(cons.end(), pats[k].begin(), pats[k].end());
    }
    return cons;
  };

  const std::size_t hit = find_first_index(
      total, [&](std::size_t idx) { return fm_feasible(sys.n, assemble(idx), nullptr); });
  if (hit == total) return {};

  OracleResult res;
  res.feasible = true;
  require(fm_feasible(sys.n, assemble(hit), &res.witness), "oracle: sample extraction failed");
  require(sys.is_solution(res.witness), "oracle: sample fails the system");
  return res;
}

NontoricResult nontoric_search(const PolySystem& sys) {
  require(sys.n >= 1 && sys.n <= 20, "nontoric_search: variable count out of range");
  for (int size = sys.n; size >= 0; --size) {
    for (unsigned long mask = 0; mask < (1ul << sys.n); ++mask) {
      if (__builtin_popcountl(mask) != size) continue;
      std::vector<int> alive;
      for (int i = 0; i < sys.n; ++i)
        if (mask & (1ul << i)) alive.push_back(i);

      // Terms with positive exponent on a dropped variable vanish; negative
      // exponents there have no finite value, killing the stratum.
      bool valid = true;
      auto restrict_poly = [&](const TPoly& f) {
        TPoly g;
        g.n = size;
        for (const auto& [e, c] : f.terms) {
          bool keep = true;
          for (int i = 0; i < sys.n && keep; ++i) {
            if (mask & (1ul << i)) continue;
            if (e[i] > 0) keep = false;
            if (e[i] < 0) valid = false;
          }
          if (!keep) continue;
          Expo pe(alive.size());
          for (std::size_t d = 0; d < alive.size(); ++d) pe[d] = e[alive[d]];
          g.terms.emplace(std::move(pe), c);
        }
        return g;
      };

      PolySystem rsys;
      rsys.n = size;
      for (int d = 0; d < size; ++d) rsys.vars.push_back(sys.vars[alive[d]]);
      bool dead = false;
      for (const Relation& rel : sys.rels) {
        Relation r;
        r.kind = rel.kind;
        r.plus = restrict_poly(rel.plus);
        r.minus = restrict_poly(rel.minus);
        if (!valid) break;
        const bool pe = r.plus.empty(), me = r.minus.empty();
        switch (rel.kind) {
          case RelKind::Nabla:
            if (r.plus.terms.size() == 1) dead = true;
            if (r.plus.terms.size() >= 2) rsys.rels.push_back(std::move(r));
            break;
          case RelKind::Geq:
            if (pe && !me) dead = true;
            if (!pe && !me) rsys.rels.push_back(std::move(r));
            break;
          case RelKind::Gt:
            if (pe) dead = true;
            if (!pe && !me) rsys.rels.push_back(std::move(r));
            break;
          case RelKind::Eq:
            if (pe != me) dead = true;
            if (!pe && !me) rsys.rels.push_back(std::move(r));
            break;
        }
        if (dead) break;
      }
      if (!valid || dead) continue;

      OracleResult r;
      if (rsys.rels.empty()) {
        r.feasible = true;
        r.witness.assign(size, Two());
      } else {
        r = brute_feasibility(rsys);
      }
      if (!r.feasible) continue;

      NontoricResult out;
      out.found = true;
      out.witness.assign(sys.n, TropScalar::bottom());
      for (std::size_t d = 0; d < alive.size(); ++d) out.witness[alive[d]] = TropScalar(r.witness[d]);
      return out;
    }
  }
  return {};
}

}  // namespace trop
