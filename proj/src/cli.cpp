#include "trop/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "trop/errors.hpp"
#include "trop/game.hpp"
#include "trop/jsonio.hpp"
#include "trop/macaulay.hpp"
#include "trop/oracle.hpp"
#include "trop/parser.hpp"
#include "trop/tropsolve.hpp"

namespace trop {
namespace {

constexpr int kOk = 0;
constexpr int kInvalidCert = 1;
constexpr int kError = 2;
constexpr int kInfeasible = 10;
constexpr int kInconclusive = 20;

struct Options {
  std::string input;
  std::string cert_path;
  std::string set = "ce";
  std::string method = "game";
  unsigned long seed = 1;
  bool json = false;
  bool nontoric = false;
  std::string out;
  std::string dump_game;
};

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (content.empty() || content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(path);
  if (!os) throw MalformedInputError("cannot open '" + path + "' for writing");
  os << content;
  if (content.empty() || content.back() != '\n') os << '\n';
}

/// Column sets: "ce" draws a generic shift of the common support, "qbar"
/// takes the lattice points of the unshifted support, "degree:N" truncates
/// the natural-support view at total degree N.  Nullopt means the shifted
/// polytope holds no lattice points, so no columns exist to linearize over.
std::optional<LinearSystem> linearize(const MacaulayView& view, const Options& opt, CEData* ce) {
  if (opt.set == "ce") {
    *ce = ce_set(view, opt.seed);
    if (ce->points.empty()) return std::nullopt;
    return macaulay_view(view, ce->points);
  }
  if (opt.set == "qbar") return macaulay_view(view, lattice_points(view.lifted.support));
  if (opt.set.rfind("degree:", 0) == 0) {
    long deg = -1;
    try {
      std::size_t used = 0;
      deg = std::stol(opt.set.substr(7), &used);
      if (used != opt.set.size() - 7) deg = -1;
    } catch (const std::exception&) {
      deg = -1;
    }
    if (deg < 0) throw MalformedInputError("bad degree in --set '" + opt.set + "'");
    return truncated_view(view, deg);
  }
  throw MalformedInputError("unknown --set '" + opt.set + "' (expected ce, qbar, or degree:N)");
}

json point_json(const PolySystem& sys, const TVec& x) {
  json j = json::object();
  for (int i = 0; i < sys.n; ++i) j[sys.vars[i]] = json_of_two(x[i]);
  return j;
}

json rational_json(const PolySystem& sys, const RVec& x) {
  json j = json::object();
  for (int i = 0; i < sys.n; ++i) j[sys.vars[i]] = json_of_rat(x[i]);
  return j;
}

void print_point(const PolySystem& sys, const TVec& x, const RVec& xr) {
  std::cout << "solution:\n";
  for (int i = 0; i < sys.n; ++i)
    std::cout << "  " << sys.vars[i] << " = " << x[i].str() << "  (rational " << rat_to_string(xr[i])
              << ")\n";
}

int report_inconclusive(const Options& opt) {
  if (opt.json) {
    json j;
    j["verdict"] = "inconclusive";
    j["reason"] = "empty column set";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "inconclusive: the shifted support polytope holds no lattice points\n";
  }
  return kInconclusive;
}

/// Tries to read a coordinate point off a feasible linearization.  The
/// veronese structure is not enforced by the linear rows, so the candidate
/// is only reported after checking it against the original system.
struct PointOut {
  TVec x;
  RVec xr;
};

std::optional<PointOut> recover_point(const PolySystem& sys, const LinearSystem& lin, const TVec& y) {
  const auto x = extract_point(lin, y);
  if (!x) return std::nullopt;
  const auto xr = rational_point(sys, *x);
  if (!xr) return std::nullopt;
  return PointOut{*x, *xr};
}

int do_check(const Options& opt) {
  const PolySystem sys = parse_system_file(opt.input);
  json j;
  j["method"] = opt.method;

  if (opt.method == "oracle") {
    const OracleResult r = brute_feasibility(sys);
    if (!r.feasible) {
      j["verdict"] = "infeasible";
      if (opt.json) std::cout << j.dump(2) << "\n";
      else std::cout << "infeasible\n";
      return kInfeasible;
    }
    const auto xr = rational_point(sys, r.witness);
    require(xr.has_value(), "check: oracle witness failed verification");
    j["verdict"] = "feasible";
    j["point"] = point_json(sys, r.witness);
    j["point_rational"] = rational_json(sys, *xr);
    if (opt.json) std::cout << j.dump(2) << "\n";
    else {
      std::cout << "feasible\n";
      print_point(sys, r.witness, *xr);
    }
    return kOk;
  }

  if (opt.method != "game") throw MalformedInputError("unknown --method '" + opt.method + "'");

  const MacaulayView view = make_view(sys);
  CEData ce;
  const auto lin = linearize(view, opt, &ce);
  if (!lin) return report_inconclusive(opt);
  j["set"] = opt.set;
  j["columns"] = static_cast<long>(lin->cols.size());

  const LinearSystem two = nabla_to_two_sided(*lin);
  if (!opt.dump_game.empty()) emit(opt.dump_game, game_to_json(to_game(two)).dump(2));

  const FeasResult r = feasibility(two);
  if (r.verdict == Verdict::Infeasible) {
    j["verdict"] = "infeasible";
    if (opt.json) std::cout << j.dump(2) << "\n";
    else std::cout << "infeasible\n";
    return kInfeasible;
  }

  j["verdict"] = "feasible";
  json w = json::object();
  for (std::size_t c = 0; c < lin->cols.size(); ++c)
    w[expo_to_string(lin->cols[c], sys.vars)] = json_of_two(r.witness[c]);
  j["witness"] = w;
  j["eps"] = json_of_rat(r.eps_value);
  const auto pt = recover_point(sys, *lin, r.witness);
  if (pt) {
    j["point"] = point_json(sys, pt->x);
    j["point_rational"] = rational_json(sys, pt->xr);
  }
  if (opt.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "feasible\n";
    std::cout << "witness (eps = " << rat_to_string(r.eps_value) << "):\n";
    for (std::size_t c = 0; c < lin->cols.size(); ++c)
      std::cout << "  " << expo_to_string(lin->cols[c], sys.vars) << " = " << r.witness[c].str()
                << "\n";
    if (pt) print_point(sys, pt->x, pt->xr);
  }
  return kOk;
}

int do_certify(const Options& opt) {
  const PolySystem sys = parse_system_file(opt.input);
  const MacaulayView view = make_view(sys);
  const CEData ce = ce_set(view, opt.seed);
  if (ce.points.empty()) return report_inconclusive(opt);

  const CertifyOutcome outcome = build_certificate(view, ce);
  if (outcome.found_solution) {
    if (opt.json) {
      json j;
      j["verdict"] = "feasible";
      j["point"] = point_json(sys, outcome.solution);
      j["point_rational"] = rational_json(sys, outcome.solution_rational);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "feasible\n";
      print_point(sys, outcome.solution, outcome.solution_rational);
    }
    return kOk;
  }

  const std::string doc = certificate_to_json(outcome.cert).dump(2);
  if (opt.out.empty()) {
    std::cerr << "infeasible: certificate follows on stdout\n";
    emit("", doc);
  } else {
    emit(opt.out, doc);
    std::cout << "infeasible: certificate written to " << opt.out << "\n";
  }
  return kInfeasible;
}

int do_verify_cert(const Options& opt) {
  const PolySystem sys = parse_system_file(opt.input);
  Certificate cert;
  try {
    std::ifstream in(opt.cert_path);
    if (!in) throw MalformedInputError("cannot read '" + opt.cert_path + "'");
    json j;
    in >> j;
    cert = certificate_from_json(j);
  } catch (const std::exception& e) {
    std::cout << "INVALID: " << e.what() << "\n";
    return kInvalidCert;
  }
  std::string why;
  if (verify_certificate(sys, cert, &why)) {
    std::cout << "valid: scaled diagonal dominance confirms infeasibility\n";
    return kOk;
  }
  std::cout << "INVALID: " << why << "\n";
  return kInvalidCert;
}

int do_macaulay(const Options& opt) {
  const PolySystem sys = parse_system_file(opt.input);
  const MacaulayView view = make_view(sys);
  CEData ce;
  const auto lin = linearize(view, opt, &ce);
  if (!lin) return report_inconclusive(opt);
  const std::string doc =
      opt.json ? linear_system_to_json(*lin, sys.vars).dump(2) : linear_system_csv(*lin, sys.vars);
  emit(opt.out, doc);
  return kOk;
}

int do_solve(const Options& opt) {
  const PolySystem sys = parse_system_file(opt.input);

  if (opt.nontoric) {
    const NontoricResult r = nontoric_search(sys);
    if (!r.found) {
      if (opt.json) {
        json j;
        j["verdict"] = "infeasible";
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "no solution, even with bottom coordinates\n";
      }
      return kInfeasible;
    }
    if (opt.json) {
      json j;
      j["verdict"] = "feasible";
      json p = json::object();
      for (int i = 0; i < sys.n; ++i) p[sys.vars[i]] = json_of_trop(r.witness[i]);
      j["point"] = p;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "solution (bottom coordinates allowed):\n";
      for (int i = 0; i < sys.n; ++i)
        std::cout << "  " << sys.vars[i] << " = " << r.witness[i].str() << "\n";
    }
    return kOk;
  }

  auto finish_with = [&](const TVec& x) {
    const auto xr = rational_point(sys, x);
    require(xr.has_value(), "solve: witness failed verification");
    if (opt.json) {
      json j;
      j["verdict"] = "feasible";
      j["point"] = point_json(sys, x);
      j["point_rational"] = rational_json(sys, *xr);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "feasible\n";
      print_point(sys, x, *xr);
    }
    return kOk;
  };
  auto finish_infeasible = [&]() {
    if (opt.json) {
      json j;
      j["verdict"] = "infeasible";
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "infeasible\n";
    }
    return kInfeasible;
  };

  if (opt.method == "oracle") {
    const OracleResult r = brute_feasibility(sys);
    return r.feasible ? finish_with(r.witness) : finish_infeasible();
  }
  if (opt.method != "game") throw MalformedInputError("unknown --method '" + opt.method + "'");

  const MacaulayView view = make_view(sys);
  CEData ce;
  const auto lin = linearize(view, opt, &ce);
  if (!lin) return report_inconclusive(opt);
  const FeasResult r = feasibility(nabla_to_two_sided(*lin));
  if (r.verdict == Verdict::Infeasible) return finish_infeasible();
  const auto pt = recover_point(sys, *lin, r.witness);
  if (pt) return finish_with(pt->x);
  // The column witness did not project onto a point of the original system;
  // fall back to the exact search for one.
  const OracleResult br = brute_feasibility(sys);
  return br.feasible ? finish_with(br.witness) : finish_infeasible();
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact feasibility for sparse max-plus polynomial systems"};
  app.require_subcommand(1);
  Options opt;

  auto add_set = [&](CLI::App* cmd) {
    cmd->add_option("--set", opt.set, "column set: ce, qbar, or degree:N")->capture_default_str();
  };
  auto add_method = [&](CLI::App* cmd) {
    cmd->add_option("--method", opt.method, "decision engine: game or oracle")
        ->capture_default_str();
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "seed for the generic shift")->capture_default_str();
  };

  CLI::App* check = app.add_subcommand("check", "decide feasibility of a system");
  check->add_option("input", opt.input, "system file")->required()->check(CLI::ExistingFile);
  add_set(check);
  add_method(check);
  add_seed(check);
  check->add_flag("--json", opt.json, "machine-readable report");
  check->add_option("--dump-game", opt.dump_game, "write the mean-payoff game as JSON");

  CLI::App* certify = app.add_subcommand("certify", "decide and emit a checkable artifact");
  certify->add_option("input", opt.input, "system file")->required()->check(CLI::ExistingFile);
  add_seed(certify);
  certify->add_flag("--json", opt.json, "machine-readable report for the feasible case");
  certify->add_option("--out", opt.out, "write the infeasibility certificate here");

  CLI::App* verify = app.add_subcommand("verify-cert", "check a certificate against a system");
  verify->add_option("input", opt.input, "system file")->required()->check(CLI::ExistingFile);
  verify->add_option("certificate", opt.cert_path, "certificate JSON")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* macaulay = app.add_subcommand("macaulay", "print the linearized row system");
  macaulay->add_option("input", opt.input, "system file")->required()->check(CLI::ExistingFile);
  add_set(macaulay);
  add_seed(macaulay);
  macaulay->add_flag("--json", opt.json, "JSON instead of CSV");
  macaulay->add_option("--out", opt.out, "write to a file instead of stdout");

  CLI::App* solve = app.add_subcommand("solve", "produce a concrete solution or report none");
  solve->add_option("input", opt.input, "system file")->required()->check(CLI::ExistingFile);
  add_set(solve);
  add_method(solve);
  add_seed(solve);
  solve->add_flag("--json", opt.json, "machine-readable report");
  solve->add_flag("--nontoric", opt.nontoric, "also search strata with bottom coordinates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (check->parsed()) return do_check(opt);
    if (certify->parsed()) return do_certify(opt);
    if (verify->parsed()) return do_verify_cert(opt);
    if (macaulay->parsed()) return do_macaulay(opt);
    if (solve->parsed()) return do_solve(opt);
    return kError;
  } catch (const EmptyCESetError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const MalformedInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace trop
