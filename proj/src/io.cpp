#include "clustertrop/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace clustertrop {

namespace {

const Json& member(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) throw ParseError(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(field + "." + key, "missing");
  return *it;
}

std::int64_t int_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field, "expected an integer");
  return j.get<std::int64_t>();
}

IntVector ints_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field, "expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

Json labels_json(const std::vector<Label>& v) { return Json(v); }

Json optional_count(const std::optional<std::uint64_t>& c) { return c ? Json(*c) : Json(nullptr); }

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const ExchangeMatrix& eps) {
  Json rows = Json::object();
  for (Label r : eps.mutable_labels()) rows[std::to_string(r)] = eps.row(r);
  return Json{{"cols", eps.columns()}, {"frozen", eps.frozen_labels()}, {"d", eps.skew_symmetrizer()}, {"rows", rows}};
}

Json to_json(const MutationTrace& t) {
  return Json{{"initial", to_json(t.initial)}, {"seq", labels_json(t.seq)}, {"result", to_json(t.result)}};
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows) arrows.push_back({a.from, a.to, a.count});
  Json frozen = Json::array();
  for (const auto& e : q.frozen_entries) frozen.push_back({e.row, e.frozen, e.value});
  return Json{{"vertices", q.vertices}, {"frozen", q.frozen}, {"arrows", arrows}, {"frozen_entries", frozen}};
}

Json to_json(const RationalPolytope& p) {
  Json v = Json::array();
  for (const auto& x : p.vertices()) v.push_back(to_json(x));
  return Json{{"vertices", v}};
}

Json to_json(const PolytopePiece& p) {
  Json v = Json::array();
  for (const auto& x : p.vertices) v.push_back(to_json(x));
  return Json{{"dimension", p.dimension}, {"vertices", v}};
}

Json to_json(const QGFCertificate& c) {
  Json normals = Json::array();
  for (const auto& n : c.normals) {
    Json row = Json::array();
    for (const auto& x : n) row.push_back(x.str());
    normals.push_back(row);
  }
  return Json{{"center", to_json(c.center)},
              {"nu", c.nu.str()},
              {"normals", normals},
              {"primitive", c.primitive},
              {"dual", to_json(c.dual)}};
}

Json to_json(const TropImage& img) {
  Json out{{"convex", img.convex}};
  out["polytope"] = img.polytope ? to_json(*img.polytope) : Json(nullptr);
  out["pieces"] = Json::array({to_json(img.plus_image), to_json(img.minus_image)});
  return out;
}

Json to_json(const FamilySpec& f) {
  Json stages = Json::array();
  for (const auto& s : f.stages) {
    Json st{{"seq", labels_json(s.seq)}, {"r", s.r}, {"s", s.s}};
    if (s.polytope) st["polytope"] = to_json(*s.polytope);
    stages.push_back(st);
  }
  return Json{{"matrix", to_json(f.matrix)}, {"polytope", to_json(f.polytope)}, {"stages", stages}};
}

Json to_json(const DistinguishCertificate& c) {
  Json stages = Json::array();
  for (const auto& s : c.stages) {
    Json st{{"seq", labels_json(s.seq)},
            {"r", s.r},
            {"s", s.s},
            {"epsilon", s.epsilon},
            {"replay_convex", s.replay_convex},
            {"explicit_matches", s.explicit_matches ? Json(*s.explicit_matches) : Json(nullptr)},
            {"condition2", s.condition2},
            {"condition3", s.condition3},
            {"supported", s.supported},
            {"qgf_consistent", s.qgf_consistent},
            {"a_s", to_json(s.a_s)},
            {"p", s.p.str()},
            {"q", s.q},
            {"lower_bound", s.lower_bound.str()},
            {"segment_count", optional_count(s.segment_count)},
            {"dual_count", optional_count(s.dual_count)},
            {"valid", s.valid},
            {"diagnostics", s.diagnostics}};
    stages.push_back(st);
  }
  Json out{{"origin_in_initial", c.origin_in_initial}};
  out["initial_qgf"] = c.initial_qgf ? to_json(*c.initial_qgf) : Json(nullptr);
  out["center_fixed"] = c.center.fixed;
  out["center_fixed_by_mutation"] = c.center.fixed_by_mutation;
  out["center_violations"] = c.center.violating;
  out["initial_ok"] = c.initial_ok;
  out["stages"] = stages;
  out["strictly_increasing"] = c.strictly_increasing;
  out["distinct"] = c.distinct;
  out["diagnostics"] = c.diagnostics;
  return out;
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError(field, "expected a rational written as \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(field, e.what());
  }
}

RationalVector point_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field, "expected an array of rationals");
  RationalVector out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Label> labels_from_json(const Json& j, const std::string& field) {
  const auto v = ints_from_json(j, field);
  std::vector<Label> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < std::numeric_limits<Label>::min() || v[i] > std::numeric_limits<Label>::max())
      throw ParseError(field + "[" + std::to_string(i) + "]", "label out of range");
    out.push_back(static_cast<Label>(v[i]));
  }
  return out;
}

ExchangeMatrix matrix_from_json(const Json& j, const std::string& field) {
  const auto cols = labels_from_json(member(j, "cols", field), field + ".cols");
  const auto frozen = j.contains("frozen") ? labels_from_json(j["frozen"], field + ".frozen") : std::vector<Label>{};
  IntVector d = j.contains("d") ? ints_from_json(j["d"], field + ".d") : IntVector(cols.size(), 1);
  const auto& rows_json = member(j, "rows", field);
  if (!rows_json.is_object()) throw ParseError(field + ".rows", "expected an object keyed by row label");
  std::map<Label, IntVector> rows;
  for (const auto& [key, value] : rows_json.items()) {
    const std::string f = field + ".rows." + key;
    Label label;
    try {
      std::size_t used = 0;
      label = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError(f, "row key is not an integer label");
    }
    rows[label] = ints_from_json(value, f);
  }
  try {
    return ExchangeMatrix(cols, frozen, d, rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(field, e.what());
  }
}

MutationTrace trace_from_json(const Json& j, const std::string& field) {
  MutationTrace t;
  t.initial = matrix_from_json(member(j, "initial", field), field + ".initial");
  t.seq = labels_from_json(member(j, "seq", field), field + ".seq");
  t.result = matrix_from_json(member(j, "result", field), field + ".result");
  if (!t.replays()) throw ParseError(field + ".result", "does not equal initial mutated along seq");
  return t;
}

Quiver quiver_from_json(const Json& j, const std::string& field) {
  Quiver q;
  q.vertices = labels_from_json(member(j, "vertices", field), field + ".vertices");
  q.frozen = labels_from_json(member(j, "frozen", field), field + ".frozen");
  auto triples = [&](const std::string& key) {
    const auto& arr = member(j, key, field);
    if (!arr.is_array()) throw ParseError(field + "." + key, "expected an array");
    std::vector<std::vector<Label>> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string f = field + "." + key + "[" + std::to_string(i) + "]";
      auto t = labels_from_json(arr[i], f);
      if (t.size() != 3) throw ParseError(f, "expected three integers");
      out.push_back(std::move(t));
    }
    return out;
  };
  for (const auto& t : triples("arrows")) q.arrows.push_back({t[0], t[1], t[2]});
  for (const auto& t : triples("frozen_entries")) q.frozen_entries.push_back({t[0], t[1], t[2]});
  return q;
}

RationalPolytope polytope_from_json(const Json& j, const std::string& field) {
  const auto& v = member(j, "vertices", field);
  if (!v.is_array() || v.empty()) throw ParseError(field + ".vertices", "expected a nonempty array of points");
  std::vector<RationalVector> pts;
  for (std::size_t i = 0; i < v.size(); ++i)
    pts.push_back(point_from_json(v[i], field + ".vertices[" + std::to_string(i) + "]"));
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].size() != pts[0].size())
      throw ParseError(field + ".vertices[" + std::to_string(i) + "]", "dimension differs from the first point");
  try {
    return RationalPolytope::hull(pts);
  } catch (const DegeneratePolytopeError& e) {
    throw ParseError(field + ".vertices", e.what());
  }
}

FamilySpec family_from_json(const Json& j, const std::string& field) {
  FamilySpec f;
  f.matrix = matrix_from_json(member(j, "matrix", field), field + ".matrix");
  f.polytope = polytope_from_json(member(j, "polytope", field), field + ".polytope");
  const auto& stages = member(j, "stages", field);
  if (!stages.is_array()) throw ParseError(field + ".stages", "expected an array");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const std::string sf = field + ".stages[" + std::to_string(i) + "]";
    FamilyStage s;
    s.seq = labels_from_json(member(stages[i], "seq", sf), sf + ".seq");
    s.r = static_cast<Label>(int_from_json(member(stages[i], "r", sf), sf + ".r"));
    s.s = static_cast<Label>(int_from_json(member(stages[i], "s", sf), sf + ".s"));
    if (stages[i].contains("polytope")) s.polytope = polytope_from_json(stages[i]["polytope"], sf + ".polytope");
    f.stages.push_back(std::move(s));
  }
  return f;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path, e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::vector<Label> parse_label_list(const std::string& text, const std::string& field) {
  std::vector<Label> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(field, "'" + item + "' is not an integer label");
    }
  }
  return out;
}

}  // namespace clustertrop
