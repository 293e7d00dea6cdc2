#include "trop/jsonio.hpp"

#include <sstream>

#include "trop/errors.hpp"

namespace trop {

json json_of_rat(const Rat& r) { return rat_to_string(r); }

json json_of_two(const Two& v) {
  if (v.is_rational()) return json_of_rat(v.a);
  return json::array({json_of_rat(v.a), json_of_rat(v.b)});
}

json json_of_trop(const TropScalar& v) {
  if (!v.finite) return nullptr;
  return json_of_two(v.v);
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw MalformedInputError("expected a rational (string or integer)");
}

Two two_from_json(const json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw MalformedInputError("two-level value needs two parts");
    return Two(rat_from_json(j[0]), rat_from_json(j[1]));
  }
  return Two(rat_from_json(j));
}

TropScalar trop_from_json(const json& j) {
  if (j.is_null()) return TropScalar::bottom();
  return TropScalar(two_from_json(j));
}

json json_of_expo(const Expo& e) {
  json out = json::array();
  for (long v : e) out.push_back(v);
  return out;
}

Expo expo_from_json(const json& j) {
  if (!j.is_array()) throw MalformedInputError("expected an exponent array");
  Expo e;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw MalformedInputError("exponents must be integers");
    e.push_back(v.get<long>());
  }
  return e;
}

json certificate_to_json(const Certificate& cert) {
  json out;
  out["format"] = "trop-cert-v1";
  out["n"] = cert.n;
  json delta = json::array();
  for (const Rat& d : cert.delta) delta.push_back(json_of_rat(d));
  out["delta"] = delta;
  json pts = json::array();
  for (const Expo& p : cert.points) pts.push_back(json_of_expo(p));
  out["points"] = pts;
  out["dilation"] = cert.dilation;
  json rows = json::array();
  for (const CertRow& r : cert.rows) {
    json row;
    row["p"] = json_of_expo(r.p);
    row["rel"] = r.rel;
    row["a"] = json_of_expo(r.a);
    row["kind"] = cert_row_kind_name(r.kind);
    json x = json::array();
    for (const Two& v : r.x) x.push_back(json_of_two(v));
    row["x"] = x;
    rows.push_back(std::move(row));
  }
  out["rows"] = rows;
  json scaling = json::array();
  for (const Two& s : cert.scaling) scaling.push_back(json_of_two(s));
  out["scaling"] = scaling;
  auto matrix = [](const std::vector<std::vector<TropScalar>>& m) {
    json rows_j = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const TropScalar& t : row) r.push_back(json_of_trop(t));
      rows_j.push_back(std::move(r));
    }
    return rows_j;
  };
  out["matrix_plus"] = matrix(cert.plus_m);
  out["matrix_minus"] = matrix(cert.minus_m);
  out["verdict"] = "infeasible";
  return out;
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("format") || j["format"] != "trop-cert-v1")
    throw MalformedInputError("not a trop-cert-v1 certificate");
  Certificate cert;
  cert.n = j.at("n").get<int>();
  for (const auto& d : j.at("delta")) cert.delta.push_back(rat_from_json(d));
  for (const auto& p : j.at("points")) cert.points.push_back(expo_from_json(p));
  for (const auto& d : j.at("dilation")) cert.dilation.push_back(d.get<long>());
  for (const auto& row : j.at("rows")) {
    CertRow r;
    r.p = expo_from_json(row.at("p"));
    r.rel = row.at("rel").get<int>();
    r.a = expo_from_json(row.at("a"));
    const auto kind = cert_row_kind_from_name(row.at("kind").get<std::string>());
    if (!kind) throw MalformedInputError("unknown certificate row kind");
    r.kind = *kind;
    for (const auto& v : row.at("x")) r.x.push_back(two_from_json(v));
    cert.rows.push_back(std::move(r));
  }
  for (const auto& s : j.at("scaling")) cert.scaling.push_back(two_from_json(s));
  auto matrix = [](const json& m) {
    std::vector<std::vector<TropScalar>> out;
    for (const auto& row : m) {
      std::vector<TropScalar> r;
      for (const auto& t : row) r.push_back(trop_from_json(t));
      out.push_back(std::move(r));
    }
    return out;
  };
  cert.plus_m = matrix(j.at("matrix_plus"));
  cert.minus_m = matrix(j.at("matrix_minus"));
  return cert;
}

json game_to_json(const GameInstance& g) {
  json out;
  json nodes = json::array();
  for (int v = 0; v < g.nodes(); ++v) {
    json node;
    node["id"] = v;
    node["owner"] = g.is_max[v] ? "max" : "min";
    node["label"] = g.labels[v];
    nodes.push_back(std::move(node));
  }
  out["nodes"] = nodes;
  json arcs = json::array();
  for (const auto& a : g.arcs) {
    json arc;
    arc["from"] = a.from;
    arc["to"] = a.to;
    arc["w"] = json_of_two(a.w);
    arcs.push_back(std::move(arc));
  }
  out["arcs"] = arcs;
  return out;
}

json linear_system_to_json(const LinearSystem& sys, const std::vector<std::string>& vars) {
  json out;
  out["n"] = sys.n;
  json cols = json::array(), mons = json::array();
  for (const Expo& c : sys.cols) {
    cols.push_back(json_of_expo(c));
    mons.push_back(expo_to_string(c, vars));
  }
  out["cols"] = cols;
  out["col_monomials"] = mons;
  json rows = json::array();
  for (const auto& r : sys.rows) {
    json row;
    row["rel"] = r.rel;
    row["shift"] = json_of_expo(r.shift);
    row["kind"] = relkind_name(r.kind);
    row["label"] = sys.row_label(r, vars);
    auto side = [](const std::vector<std::pair<int, Two>>& entries) {
      json s = json::array();
      for (const auto& [c, v] : entries) s.push_back(json::array({c, json_of_two(v)}));
      return s;
    };
    row["plus"] = side(r.plus);
    row["minus"] = side(r.minus);
    rows.push_back(std::move(row));
  }
  out["rows"] = rows;
  return out;
}

std::string linear_system_csv(const LinearSystem& sys, const std::vector<std::string>& vars) {
  std::ostringstream os;
  for (const Expo& c : sys.cols) os << ',' << expo_to_string(c, vars);
  os << '\n';
  for (const auto& r : sys.rows) {
    std::vector<TropScalar> merged(sys.cols.size(), TropScalar::bottom());
    for (const auto& [c, v] : r.plus) merged[c] = tadd(merged[c], TropScalar(v));
    for (const auto& [c, v] : r.minus) merged[c] = tadd(merged[c], TropScalar(v));
    os << sys.row_label(r, vars);
    for (const TropScalar& t : merged) {
      os << ',';
      if (t.finite) os << t.v.str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace trop
