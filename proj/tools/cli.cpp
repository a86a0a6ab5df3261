#include "cli.hpp"

#include "clustertrop/fixtures.hpp"
#include "clustertrop/glsseed.hpp"
#include "clustertrop/io.hpp"
#include "clustertrop/lattice.hpp"
#include "clustertrop/search.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>

#ifndef CLUSTERTROP_FIXTURE_DIR
#define CLUSTERTROP_FIXTURE_DIR "fixtures"
#endif

namespace clustertrop::cli {

namespace {

struct Options {
  std::string type;
  std::string word;
  std::string in;
  std::string matrix;
  std::string seq;
  std::string keep;
  std::string family;
  std::string out;
  std::string normal;
  std::string offset = "0";
  std::string dir = CLUSTERTROP_FIXTURE_DIR;
  std::int64_t target = 2;
  std::size_t budget = 0;
  std::size_t beam = 64;
  std::int64_t entry_cap = 1000;
  std::int64_t q = 1;
  bool trace = false;
  bool serial = false;
};

// A command yields its JSON result and an exit code.
struct Outcome {
  Json json;
  int code = kOk;
};

Exec exec_of(const Options& o) { return o.serial ? Exec::Serial : Exec::Parallel; }

ExchangeMatrix load_matrix(const std::string& path) { return matrix_from_json(read_json_file(path), "matrix"); }

ExchangeMatrix matrix_input(const Options& o) {
  if (!o.in.empty()) return load_matrix(o.in);
  if (o.type.empty() || o.word.empty()) throw ParseError("--in", "give a matrix file or --type and --word");
  return gls_exchange_matrix(parse_cartan_type(o.type), parse_word(o.word));
}

RationalPolytope polytope_input(const Options& o) {
  if (o.in.empty()) throw ParseError("--in", "a polytope file is required");
  return polytope_from_json(read_json_file(o.in), "polytope");
}

Outcome cmd_seed(const Options& o) {
  if (o.type.empty()) throw ParseError("--type", "required");
  if (o.word.empty()) throw ParseError("--word", "required");
  return {to_json(gls_exchange_matrix(parse_cartan_type(o.type), parse_word(o.word)))};
}

Outcome cmd_mutate(const Options& o) {
  const auto eps = matrix_input(o);
  const auto t = make_trace(eps, parse_label_list(o.seq, "--seq"));
  return {o.trace ? to_json(t) : to_json(t.result)};
}

Outcome cmd_restrict(const Options& o) {
  return {to_json(restrict_to(matrix_input(o), parse_label_list(o.keep, "--keep")))};
}

Outcome cmd_quiver(const Options& o) {
  auto eps = matrix_input(o);
  if (!o.keep.empty()) eps = restrict_to(eps, parse_label_list(o.keep, "--keep"));
  try {
    return {to_json(to_quiver(eps))};
  } catch (const std::invalid_argument& e) {
    return {Json{{"error", e.what()}}, kNegative};
  }
}

Outcome cmd_large_entry(const Options& o) {
  LargeEntryOptions opts;
  if (o.budget) opts.budget = o.budget;
  opts.beam = o.beam;
  opts.exec = exec_of(o);
  const auto r = large_entry_search(matrix_input(o), o.target, opts);
  if (!r) return {Json{{"target", o.target}, {"found", false}}, kBudget};
  return {Json{{"target", o.target}, {"found", true}, {"r", r->r}, {"s", r->s}, {"value", r->value},
               {"trace", to_json(r->trace)}}};
}

Outcome cmd_class_bfs(const Options& o) {
  const auto res = mutation_class_bfs(matrix_input(o), o.budget ? o.budget : 10000, o.entry_cap, exec_of(o));
  Json j{{"explored", res.explored}};
  switch (res.kind) {
    case ClassBfsResult::Kind::Finite: {
      j["kind"] = "finite";
      Json members = Json::array();
      for (const auto& m : res.members) members.push_back(to_json(m));
      j["size"] = res.members.size();
      j["members"] = members;
      return {j};
    }
    case ClassBfsResult::Kind::EntryExceeded:
      j["kind"] = "entry_exceeded";
      j["trace"] = to_json(*res.trace);
      return {j, kNegative};
    case ClassBfsResult::Kind::CapExhausted:
      j["kind"] = "cap_exhausted";
      return {j, kBudget};
  }
  return {j, kBudget};
}

Outcome cmd_hull(const Options& o) { return {to_json(polytope_input(o))}; }

Outcome cmd_dual(const Options& o) {
  const auto p = polytope_input(o);
  if (!p.contains_in_interior(RationalVector(p.dimension(), Rational(0))))
    return {Json{{"error", "origin is not interior, the polar dual is unbounded"}}, kNegative};
  return {to_json(polar_dual(p))};
}

Outcome cmd_qgf(const Options& o) {
  std::string why;
  const auto c = qgf_certificate(polytope_input(o), &why);
  if (!c) return {Json{{"qgf", false}, {"reason", why}}, kNegative};
  return {to_json(*c)};
}

Outcome cmd_lattice(const Options& o) {
  if (o.q < 1) throw ParseError("--q", "must be a positive integer");
  const auto p = polytope_input(o);
  const std::uint64_t limit = o.budget ? o.budget : kLatticeBoxLimit;
  try {
    const auto pts = lattice_points(p, o.q, exec_of(o), limit);
    Json arr = Json::array();
    for (const auto& x : pts) arr.push_back(to_json(x));
    return {Json{{"q", o.q}, {"count", pts.size()}, {"points", arr}}};
  } catch (const EnumerationTooLarge& e) {
    return {Json{{"q", o.q}, {"error", e.what()}}, kBudget};
  }
}

Outcome cmd_slice(const Options& o) {
  const auto p = polytope_input(o);
  if (o.normal.empty()) throw ParseError("--normal", "required");
  RationalVector n;
  for (const auto& part : CLI::detail::split(o.normal, ','))
    n.push_back(rational_from_json(Json(part), "--normal"));
  if (n.size() != p.dimension()) throw ParseError("--normal", "dimension differs from the polytope");
  const auto s = slice(p, {n, rational_from_json(Json(o.offset), "--offset")});
  return {Json{{"plus", to_json(s.plus)}, {"minus", to_json(s.minus)}, {"section", to_json(s.section)}}};
}

// Applies the mutations in --seq one after another, carrying the matrix along.
Outcome cmd_trop_mutate(const Options& o) {
  if (o.matrix.empty()) throw ParseError("--matrix", "required");
  auto eps = load_matrix(o.matrix);
  auto p = polytope_input(o);
  const auto seq = parse_label_list(o.seq, "--seq");
  if (seq.empty()) throw ParseError("--seq", "at least one label is required");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!eps.is_mutable(seq[i])) throw ParseError("--seq", "label " + std::to_string(seq[i]) + " is not mutable");
    const auto img = trop_mutate_polytope(eps, seq[i], p);
    if (!img.convex) {
      auto j = to_json(img);
      j["step"] = i;
      return {j, kNegative};
    }
    p = *img.polytope;
    eps = mutate(eps, seq[i]);
  }
  return {Json{{"matrix", to_json(eps)}, {"polytope", to_json(p)}}};
}

Outcome cmd_certify(const Options& o) {
  if (o.family.empty()) throw ParseError("--family", "required");
  CertificateOptions opt;
  if (o.budget) opt.box_limit = o.budget;
  const auto c = distinguish_certificate(family_from_json(read_json_file(o.family), "family"), opt);
  return {to_json(c), c.distinct ? kOk : kNegative};
}

Outcome cmd_fixtures(const Options& o) {
  const auto results = run_fixture_dir(o.dir);
  Json arr = Json::array();
  bool ok = !results.empty();
  for (const auto& r : results) {
    arr.push_back(to_json(r));
    ok &= r.status == FixtureStatus::Pass || r.status == FixtureStatus::Documented;
  }
  return {Json{{"fixtures", arr}, {"all_pass", ok}}, ok ? kOk : kNegative};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cluster mutation and tropical polytope tools", "clustertrop-cli"};
  app.require_subcommand(1);
  Options o;
  std::function<Outcome(const Options&)> action;

  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                 std::function<Outcome(const Options&)> f) {
    auto* s = parent->add_subcommand(name, desc);
    s->add_option("--out", o.out, "write the JSON result here instead of stdout");
    s->add_flag("--serial", o.serial, "use the serial reference kernels");
    s->callback([&action, f] { action = f; });
    return s;
  };
  auto seed_flags = [&](CLI::App* s) {
    s->add_option("--in", o.in, "matrix JSON file");
    s->add_option("--type", o.type, "Cartan type such as C3");
    s->add_option("--word", o.word, "reduced word such as 3,2,3");
  };

  auto* s = sub(&app, "seed", "exchange matrix of a reduced word", cmd_seed);
  s->add_option("--type", o.type)->required();
  s->add_option("--word", o.word)->required();

  s = sub(&app, "mutate", "mutate a matrix along a label sequence", cmd_mutate);
  seed_flags(s);
  s->add_option("--seq", o.seq, "labels, applied left to right")->required();
  s->add_flag("--trace", o.trace, "emit the full trace");

  s = sub(&app, "restrict", "keep a subset of columns", cmd_restrict);
  seed_flags(s);
  s->add_option("--keep", o.keep)->required();

  s = sub(&app, "quiver", "quiver of a skew-symmetric matrix", cmd_quiver);
  seed_flags(s);
  s->add_option("--keep", o.keep);

  s = sub(&app, "search-large-entry", "beam search for -eps_{r,s} >= target with s frozen", cmd_large_entry);
  seed_flags(s);
  s->add_option("--target", o.target)->required();
  s->add_option("--budget", o.budget, "matrices generated (default 200000)");
  s->add_option("--beam", o.beam, "beam width")->capture_default_str();

  s = sub(&app, "class-bfs", "enumerate the labeled mutation class", cmd_class_bfs);
  seed_flags(s);
  s->add_option("--budget", o.budget, "node cap (default 10000)");
  s->add_option("--entry-cap", o.entry_cap, "stop once an entry exceeds this")->capture_default_str();

  auto* poly = app.add_subcommand("polytope", "polytope operations");
  poly->require_subcommand(1);
  s = sub(poly, "hull", "vertices of the convex hull of a point set", cmd_hull);
  s->add_option("--in", o.in)->required();
  s = sub(poly, "dual", "polar dual", cmd_dual);
  s->add_option("--in", o.in)->required();
  s = sub(poly, "qgf", "Q-Gorenstein Fano certificate", cmd_qgf);
  s->add_option("--in", o.in)->required();
  s = sub(poly, "lattice-points", "points in (1/q) Z^m", cmd_lattice);
  s->add_option("--in", o.in)->required();
  s->add_option("--q", o.q)->capture_default_str();
  s->add_option("--budget", o.budget, "box points visited (default 200000000)");
  s = sub(poly, "slice", "cut by <u, normal> + offset >= 0", cmd_slice);
  s->add_option("--in", o.in)->required();
  s->add_option("--normal", o.normal, "comma-separated rationals")->required();
  s->add_option("--offset", o.offset)->capture_default_str();

  s = sub(&app, "trop-mutate", "tropical mutation of a polytope", cmd_trop_mutate);
  s->add_option("--in", o.in, "polytope JSON file")->required();
  s->add_option("--matrix", o.matrix, "matrix JSON file")->required();
  s->add_option("--seq", o.seq)->required();

  s = sub(&app, "certify-distinct", "distinguishing certificate of a family", cmd_certify);
  s->add_option("--family", o.family)->required();
  s->add_option("--budget", o.budget, "box points per lattice count (default 50000000)");

  auto* fix = app.add_subcommand("fixtures", "fixture suite");
  fix->require_subcommand(1);
  s = sub(fix, "run", "evaluate every fixture file", cmd_fixtures);
  s->add_option("--dir", o.dir)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  Outcome res;
  try {
    res = action(o);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  }
  if (o.out.empty()) {
    out << res.json.dump(2) << "\n";
  } else {
    try {
      write_json_file(o.out, res.json);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  return res.code;
}

}  // namespace clustertrop::cli
