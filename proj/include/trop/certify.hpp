#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trop/macaulay.hpp"
#include "trop/tropsolve.hpp"

namespace trop {

/// Why the selected row entry dominates its row after column scaling:
///   SingleArgmax  - a root row whose scaled maximum is attained once;
///   MinusExceeds  - a weak or strict row whose dominated side wins;
///   PlusExceeds   - an equality row whose plus side strictly wins.
enum class CertRowKind { SingleArgmax, MinusExceeds, PlusExceeds };

std::string cert_row_kind_name(CertRowKind k);
std::optional<CertRowKind> cert_row_kind_from_name(const std::string& s);

struct CertRow {
  Expo p;    // column this row is assigned to
  int rel = 0;
  Expo a;    // support point selecting the row shift p - a
  CertRowKind kind = CertRowKind::SingleArgmax;
  TVec x;    // evaluation point of the cell around the shifted column
};

/// Scaled diagonal-dominance certificate: one admissible row per column,
/// stored with the full two-layer coefficient matrices and the column
/// scaling.  Verification needs only the original system and this data.
struct Certificate {
  int n = 0;
  RVec delta;
  std::vector<Expo> points;
  std::vector<long> dilation;
  std::vector<CertRow> rows;  // aligned with points
  TVec scaling;               // envelope value at point - delta, per column
  std::vector<std::vector<TropScalar>> plus_m, minus_m;  // square layers
};

struct CertifyOutcome {
  bool found_solution = false;
  TVec solution;            // two-level point, set when found_solution
  RVec solution_rational;   // exact instantiation of the above
  Certificate cert;         // set when !found_solution
};

/// Walks the shifted columns; if some column admits no dominating row the
/// cell around it evaluates the system to a verified finite solution,
/// otherwise the per-column selections assemble an infeasibility
/// certificate (self-checked before returning).
CertifyOutcome build_certificate(const MacaulayView& view, const CEData& ce);

/// Independent check: recomputes admissibility, matrix entries, and the
/// dominance inequalities from the input system and the certificate alone.
/// No envelopes or linear programs are involved.
bool verify_certificate(const PolySystem& sys, const Certificate& cert,
                        std::string* why = nullptr);

enum class TropSingularity { NonsingularUnique, Inconclusive };

struct TropDetResult {
  TropSingularity status = TropSingularity::Inconclusive;
  TropScalar value;  // optimal assignment sum; Bottom when none exists
};

/// Tropical determinant via exact maximum assignment; NonsingularUnique
/// exactly when a finite optimal assignment exists and is unique.
TropDetResult is_trop_nonsingular(const std::vector<std::vector<TropScalar>>& m);

}  // namespace trop
