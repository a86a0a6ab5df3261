#include "clustertrop/fixtures.hpp"

#include "clustertrop/glsseed.hpp"
#include "clustertrop/quiver.hpp"
#include "clustertrop/search.hpp"

#include <algorithm>
#include <filesystem>
#include <set>
#include <tuple>

namespace clustertrop {

namespace {

using Entry = std::tuple<Label, Label, std::int64_t, std::int64_t>;  // row, col, expected, got

ExchangeMatrix build_input(const Json& f) {
  ExchangeMatrix eps;
  if (f.contains("input")) {
    eps = matrix_from_json(f["input"], "input");
  } else {
    if (!f.contains("type") || !f.contains("word")) throw ParseError("input", "need either input or type and word");
    eps = gls_exchange_matrix(parse_cartan_type(f["type"].get<std::string>()), parse_word(f["word"].get<std::string>()));
  }
  if (f.contains("keep")) eps = restrict_to(eps, labels_from_json(f["keep"], "keep"));
  if (f.contains("seq")) eps = mutate_sequence(eps, labels_from_json(f["seq"], "seq"));
  return eps;
}

// Compares labels and entries against {"cols","frozen","rows"} without
// requiring the expected block to carry a skew-symmetrizer.
void diff_matrix(const ExchangeMatrix& got, const Json& expected, std::vector<std::string>& diff,
                 std::vector<Entry>& entries) {
  const auto cols = labels_from_json(expected.at("cols"), "expected.cols");
  if (cols != got.columns()) {
    diff.push_back("columns differ");
    return;
  }
  if (expected.contains("frozen")) {
    auto frozen = labels_from_json(expected["frozen"], "expected.frozen");
    std::sort(frozen.begin(), frozen.end());
    auto have = got.frozen_labels();
    std::sort(have.begin(), have.end());
    if (frozen != have) diff.push_back("frozen labels differ");
  }
  if (expected.contains("d") && labels_from_json(expected["d"], "expected.d") !=
                                    std::vector<Label>(got.skew_symmetrizer().begin(), got.skew_symmetrizer().end()))
    diff.push_back("skew-symmetrizer differs");
  const auto& rows = expected.at("rows");
  for (Label r : got.mutable_labels()) {
    const std::string key = std::to_string(r);
    if (!rows.contains(key)) {
      diff.push_back("row " + key + " missing from expected");
      continue;
    }
    const auto want = labels_from_json(rows[key], "expected.rows." + key);
    if (want.size() != cols.size()) {
      diff.push_back("row " + key + " has the wrong length");
      continue;
    }
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (want[c] != got.row(r)[c]) {
        entries.emplace_back(r, cols[c], want[c], got.row(r)[c]);
        diff.push_back("entry (" + key + "," + std::to_string(cols[c]) + "): expected " + std::to_string(want[c]) +
                       ", got " + std::to_string(got.row(r)[c]));
      }
  }
  if (rows.size() != got.num_rows()) diff.push_back("expected has extra rows");
}

FixtureStatus matrix_fixture(const Json& f, std::vector<std::string>& diff) {
  const auto got = build_input(f);
  std::vector<Entry> entries;
  diff_matrix(got, f.at("expected"), diff, entries);
  if (diff.empty()) return FixtureStatus::Pass;
  if (!f.contains("documented") || entries.size() != diff.size()) return FixtureStatus::Fail;
  std::set<Entry> documented;
  for (const auto& d : f["documented"])
    documented.emplace(d.at("row").get<Label>(), d.at("col").get<Label>(), d.at("printed").get<std::int64_t>(),
                       d.at("computed").get<std::int64_t>());
  return std::set<Entry>(entries.begin(), entries.end()) == documented ? FixtureStatus::Documented : FixtureStatus::Fail;
}

FixtureStatus quiver_fixture(const Json& f, std::vector<std::string>& diff) {
  const auto q = gls_quiver(parse_cartan_type(f.at("type").get<std::string>()), parse_word(f.at("word").get<std::string>()));
  std::set<Arrow> want;
  for (const auto& a : f.at("arrows")) want.insert({a.at(0).get<Label>(), a.at(1).get<Label>(), a.at(2).get<std::int64_t>()});
  const std::set<Arrow> got(q.arrows.begin(), q.arrows.end());
  for (const auto& a : want)
    if (!got.count(a))
      diff.push_back("missing arrow " + std::to_string(a.from) + " -> " + std::to_string(a.to) + " x" + std::to_string(a.count));
  for (const auto& a : got)
    if (!want.count(a))
      diff.push_back("extra arrow " + std::to_string(a.from) + " -> " + std::to_string(a.to) + " x" + std::to_string(a.count));
  if (f.contains("frozen") && labels_from_json(f["frozen"], "frozen") != q.frozen) diff.push_back("frozen vertices differ");
  return diff.empty() ? FixtureStatus::Pass : FixtureStatus::Fail;
}

FixtureStatus qgf_fixture(const Json& f, std::vector<std::string>& diff) {
  const auto p = polytope_from_json(f.at("polytope"));
  std::string why;
  const auto c = qgf_certificate(p, &why);
  const auto& e = f.at("expected");
  if (e.is_null()) {
    if (c) diff.push_back("expected no certificate, got size " + c->nu.str());
  } else if (!c) {
    diff.push_back("expected a certificate: " + why);
  } else {
    if (point_from_json(e.at("center"), "expected.center") != c->center) diff.push_back("center differs");
    if (rational_from_json(e.at("nu"), "expected.nu") != Rational(c->nu)) diff.push_back("size differs: got " + c->nu.str());
  }
  return diff.empty() ? FixtureStatus::Pass : FixtureStatus::Fail;
}

FixtureStatus family_fixture(const Json& f, std::vector<std::string>& diff) {
  const auto family = family_from_json(f.at("family"));
  const auto c = distinguish_certificate(family);
  const auto& e = f.at("expected");
  const auto eps = labels_from_json(e.at("epsilons"), "expected.epsilons");
  const auto bounds = labels_from_json(e.at("min_counts"), "expected.min_counts");
  if (eps.size() != c.stages.size() || bounds.size() != c.stages.size()) {
    diff.push_back("stage count differs");
    return FixtureStatus::Fail;
  }
  for (std::size_t i = 0; i < c.stages.size(); ++i) {
    const auto& s = c.stages[i];
    const std::string tag = "stage " + std::to_string(i) + ": ";
    if (!s.valid) diff.push_back(tag + "not valid");
    if (s.epsilon != eps[i]) diff.push_back(tag + "epsilon " + std::to_string(s.epsilon));
    if (!s.dual_count || *s.dual_count < static_cast<std::uint64_t>(bounds[i])) diff.push_back(tag + "count below bound");
  }
  if (c.distinct != e.at("distinct").get<bool>()) diff.push_back("distinctness verdict differs");
  return diff.empty() ? FixtureStatus::Pass : FixtureStatus::Fail;
}

FixtureStatus ft_fixture(const Json& f, std::vector<std::string>& diff) {
  const auto eps = matrix_from_json(f.at("input"), "input");
  const auto w = ft_infinite_witness(eps, f.value("budget", std::size_t{100000}));
  if (!w) {
    diff.push_back("no witness within budget");
    return FixtureStatus::Fail;
  }
  if (!w->trace.replays()) diff.push_back("trace does not replay");
  const auto& e = f.at("expected");
  if (e.contains("v1") && w->v1 != e["v1"].get<Label>()) diff.push_back("v1 = " + std::to_string(w->v1));
  if (e.contains("b1_positive") && (w->b1 > 0) != e["b1_positive"].get<bool>()) diff.push_back("b1 = " + std::to_string(w->b1));
  if (e.contains("b2") && w->b2 != e["b2"].get<std::int64_t>()) diff.push_back("b2 = " + std::to_string(w->b2));
  return diff.empty() ? FixtureStatus::Pass : FixtureStatus::Fail;
}

}  // namespace

std::string to_string(FixtureStatus s) {
  switch (s) {
    case FixtureStatus::Pass: return "PASS";
    case FixtureStatus::Documented: return "DOCUMENTED";
    case FixtureStatus::Fail: return "FAIL";
    case FixtureStatus::Error: return "ERROR";
  }
  return "ERROR";
}

FixtureResult run_fixture(const Json& f, const std::string& fallback_name) {
  FixtureResult r;
  r.name = fallback_name;
  try {
    if (f.contains("name")) r.name = f["name"].get<std::string>();
    r.source = f.value("source", "");
    const auto kind = f.at("kind").get<std::string>();
    if (kind == "matrix")
      r.status = matrix_fixture(f, r.diff);
    else if (kind == "quiver")
      r.status = quiver_fixture(f, r.diff);
    else if (kind == "qgf")
      r.status = qgf_fixture(f, r.diff);
    else if (kind == "family")
      r.status = family_fixture(f, r.diff);
    else if (kind == "ft_witness")
      r.status = ft_fixture(f, r.diff);
    else
      throw ParseError("kind", "unknown fixture kind '" + kind + "'");
  } catch (const std::exception& e) {
    r.status = FixtureStatus::Error;
    r.diff.push_back(e.what());
  }
  return r;
}

std::vector<FixtureResult> run_fixture_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<FixtureResult> out;
  for (const auto& p : files) {
    const auto stem = p.stem().string();
    try {
      out.push_back(run_fixture(read_json_file(p.string()), stem));
    } catch (const std::exception& e) {
      out.push_back({stem, "", FixtureStatus::Error, {e.what()}});
    }
  }
  return out;
}

Json to_json(const FixtureResult& r) {
  return Json{{"name", r.name}, {"source", r.source}, {"status", to_string(r.status)}, {"diff", r.diff}};
}

}  // namespace clustertrop
