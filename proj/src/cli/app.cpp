// Subcommand dispatch for rueppel-lab.

#include <omp.h>

#include <filesystem>
#include <ostream>
#include <regex>

#include "CLI11.hpp"
#include "json.hpp"
#include "rueppel/catalog.hpp"
#include "rueppel/cfrac.hpp"
#include "rueppel/cli.hpp"
#include "rueppel/error.hpp"
#include "rueppel/expr.hpp"
#include "rueppel/hankel.hpp"
#include "rueppel/riordan.hpp"

namespace rueppel {

namespace {

/// Bad arguments: exit code 2.
class UsageFailure : public std::runtime_error {
 public:
  UsageFailure(std::string code, const std::string& what, std::optional<std::int64_t> where = std::nullopt)
      : std::runtime_error(what), code_(std::move(code)), where_(where) {}
  const std::string& code() const noexcept { return code_; }
  std::optional<std::int64_t> where() const noexcept { return where_; }

 private:
  std::string code_;
  std::optional<std::int64_t> where_;
};

bool is_usage(Errc c) {
  return c == Errc::Usage || c == Errc::UnknownCheck || c == Errc::UnknownSequence || c == Errc::DepthInfeasible;
}

GfExpr parse_expr(const std::string& text) {
  try {
    return GfExpr::parse(text);
  } catch (const Error& e) {
    throw UsageFailure(std::string(errc_name(e.code())), e.what(), e.where());
  }
}

bool is_anumber(const std::string& s) {
  static const std::regex re("A[0-9]{6}");
  return std::regex_match(s, re);
}

template <typename T>
OutputList make_list(std::string name, long offset, const std::vector<T>& values) {
  static const std::regex integer("-?[0-9]+");
  OutputList l{std::move(name), offset, {}, true};
  for (const auto& v : values) {
    l.values.push_back(to_string(v));
    if (!std::regex_match(l.values.back(), integer)) l.integral = false;
  }
  return l;
}

template <typename R>
std::vector<std::vector<std::string>> matrix_rows(const Matrix<R>& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(to_string(m(i, j)));
  }
  return rows;
}

template <typename F>
OutputRecord with_ring(const std::string& ring, F&& f) {
  if (ring == "int") return f.template operator()<Integer>();
  if (ring == "rat") return f.template operator()<Rational>();
  if (ring == "poly-bc") return f.template operator()<Poly2>();
  throw UsageFailure("Usage", "unknown ring '" + ring + "' (int, rat, poly-bc)");
}

const char* domain_name(CheckDomain d) {
  switch (d) {
    case CheckDomain::integer: return "integer";
    case CheckDomain::polynomial: return "polynomial";
    case CheckDomain::catalog: return "catalog";
  }
  return "?";
}

struct Options {
  // global
  std::string format, ring, depth_profile, config, reference;
  int jobs = -1;
  std::size_t truncation = 0;
  // subcommands
  std::string expr, source, kind = "s", g, f, apply, id, check = "all";
  std::size_t n = 0, d = 0;
  long shift = 0;
  bool strip = false, list = false, network = false;
};

struct Run {
  Options o;
  LabConfig cfg;
  CliHooks hooks;
  OutputRecord rec;
  int status = 0;
};

void cmd_expand(Run& run) {
  const GfExpr e = parse_expr(run.o.expr);
  const std::size_t n = run.o.n ? run.o.n : 16;
  run.rec.parameters = {{"expr", e.text()}, {"n", std::to_string(n)}, {"ring", run.cfg.ring}};
  run.rec.lists = with_ring(run.cfg.ring, [&]<typename R>() {
                   OutputRecord r;
                   r.lists.push_back(make_list("coefficients", 0, e.expand<R>(n, run.cfg.truncation).coeffs()));
                   return r;
                 }).lists;
}

void cmd_hankel(Run& run) {
  const std::size_t n = run.o.n ? run.o.n : 10;
  const long k = run.o.shift;
  const std::size_t need = 2 * n + 1 + std::size_t(std::max(k, 0L));
  run.rec.parameters = {{"source", run.o.source}, {"n", std::to_string(n)}, {"shift", std::to_string(k)},
                        {"ring", run.cfg.ring}};
  const bool seq = is_anumber(run.o.source);
  std::optional<GfExpr> e;
  if (!seq) e = parse_expr(run.o.source);
  const OutputRecord r = with_ring(run.cfg.ring, [&]<typename R>() {
    Series<R> s;
    if (seq) {
      s = convert<R>(Series<Integer>(catalog_terms(run.o.source, need).terms));
    } else {
      s = e->expand<R>(need, run.cfg.truncation);
    }
    s = series_shift(s, k);
    OutputRecord out;
    out.lists.push_back(make_list("hankel", 0, hankel_transform(s, n).terms));
    return out;
  });
  run.rec.lists = r.lists;
}

void cmd_cfrac(Run& run) {
  const GfExpr e = parse_expr(run.o.expr);
  const std::size_t d = run.o.d ? run.o.d : 10;
  const std::string& kind = run.o.kind;
  if (kind != "s" && kind != "j") throw UsageFailure("Usage", "--kind is s or j");
  run.rec.parameters = {{"expr", e.text()}, {"kind", kind}, {"d", std::to_string(d)}, {"ring", run.cfg.ring}};
  const OutputRecord r = with_ring(run.cfg.ring, [&]<typename R>() {
    OutputRecord out;
    if (kind == "s") {
      const auto sf = stieltjes_expand(e.expand<R>(d + 1, run.cfg.truncation), d);
      out.lists.push_back(make_list("alphas", 1, sf.alphas));
      out.summary = {{"a0", to_string(sf.a0)}, {"finite", sf.finite ? "yes" : "no"}};
    } else {
      const auto jf = jacobi_expand(e.expand<R>(2 * d + 1, run.cfg.truncation), d);
      out.lists.push_back(make_list("alphas", 0, jf.alphas));
      out.lists.push_back(make_list("betas", 1, jf.betas));
      out.summary = {{"a0", to_string(jf.a0)}, {"finite", jf.finite ? "yes" : "no"}};
      if (jf.terminated_at) out.summary.emplace_back("terminated_at", std::to_string(*jf.terminated_at));
    }
    return out;
  });
  run.rec.lists = r.lists;
  run.rec.summary = r.summary;
}

void cmd_riordan(Run& run) {
  const GfExpr g = parse_expr(run.o.g);
  const GfExpr f = parse_expr(run.o.f);
  std::optional<GfExpr> h;
  if (!run.o.apply.empty()) h = parse_expr(run.o.apply);
  const std::size_t n = run.o.n ? run.o.n : 8;
  run.rec.parameters = {{"g", g.text()}, {"f", f.text()}, {"n", std::to_string(n)},
                        {"strip_first_row", run.o.strip ? "yes" : "no"}, {"ring", run.cfg.ring}};
  if (h) run.rec.parameters.emplace_back("apply", h->text());
  const OutputRecord r = with_ring(run.cfg.ring, [&]<typename R>() {
    const Series<R> gs = g.expand<R>(n, run.cfg.truncation);
    const Series<R> fs = f.expand<R>(n, run.cfg.truncation);
    Matrix<R> m = riordan_build(gs, fs, n);
    if (run.o.strip) m = strip_first_row(m);
    OutputRecord out;
    out.matrix = matrix_rows(m);
    if (h) {
      const Series<R> hs = h->expand<R>(n, run.cfg.truncation);
      const Series<R> applied = matrix_apply(m, hs);
      out.lists.push_back(make_list("applied", 0, applied.coeffs()));
      // The matrix action should agree with g(x) h(f(x)), shifted when the first row is gone.
      Series<R> direct = riordan_apply(gs, fs, hs);
      if (run.o.strip) direct = shift_left(direct, 1);
      const bool agrees = direct.truncated(applied.order()) == applied;
      out.summary.emplace_back("agrees_with_g_h_of_f", agrees ? "yes" : "no");
    }
    return out;
  });
  run.rec.matrix = r.matrix;
  run.rec.lists = r.lists;
  run.rec.summary = r.summary;
}

void cmd_catalog(Run& run) {
  if (run.o.id.empty()) {
    run.rec.matrix_header = {"id", "offset", "kind", "description"};
    for (const auto& e : catalog()) {
      run.rec.matrix.push_back({e.id, std::to_string(e.offset), to_string(e.kind), e.description});
    }
    return;
  }
  const std::size_t n = run.o.n ? run.o.n : 16;
  const auto seq = catalog_terms(run.o.id, n);
  run.rec.parameters = {{"id", run.o.id}, {"n", std::to_string(n)}};
  run.rec.lists.push_back(make_list(run.o.id, seq.offset, seq.terms));
}

void cmd_verify(Run& run) {
  if (run.o.list) {
    run.rec.matrix_header = {"id", "domain", "unit", "printed", "default", "min", "max", "claim"};
    for (const auto& c : check_registry()) {
      run.rec.matrix.push_back({c.id, domain_name(c.domain), c.depth_unit, std::to_string(c.printed_depth),
                                std::to_string(c.default_depth), std::to_string(c.min_depth),
                                std::to_string(c.max_depth), c.claim});
    }
    return;
  }
  std::unique_ptr<ReferenceSource> ref;
  if (run.cfg.reference == "catalog") {
    ref = std::make_unique<CatalogReference>();
  } else if (run.cfg.reference == "fixtures") {
    ref = std::make_unique<FixtureReference>(run.cfg.oeis.fixture_dir);
  } else {
    throw UsageFailure("Usage", "reference is fixtures or catalog");
  }
  DepthProfile profile = DepthProfile::parse(run.cfg.depth_profile);
  if (run.o.d) {
    profile.kind = DepthProfile::Kind::uniform;
    profile.uniform = run.o.d;
  }
  run.rec.parameters = {{"check", run.o.check}, {"depth_profile", profile.str()}, {"reference", ref->name()}};
  if (run.o.check == "all") {
    run.rec.reports = run_all(profile, *ref, run.cfg.jobs);
  } else {
    const CheckInfo& info = check_info(run.o.check);
    run.rec.reports.push_back(run_check(info.id, run.o.d ? run.o.d : profile.depth_for(info), *ref));
  }
  const RunSummary s = summarize(run.rec.reports);
  run.rec.summary = {{"passed", std::to_string(s.passed)},
                     {"failed", std::to_string(s.failed)},
                     {"inconclusive", std::to_string(s.inconclusive)}};
  if (s.failed) {
    run.status = 3;
  } else if (s.inconclusive) {
    run.status = 1;
  }
}

void cmd_compare(Run& run) {
  const std::string& id = run.o.id;
  const FetchMode mode = run.o.network ? FetchMode::network_with_cache : FetchMode::fixture_only;
  const OeisClient client(run.cfg.oeis, run.hooks.fetcher);
  const BFile b = client.fetch_bfile(id, mode);
  const CatalogEntry& entry = catalog_entry(id);
  std::size_t count = run.o.n;
  if (!count) {
    const long last = b.entries.empty() ? entry.offset : b.entries.back().index;
    count = std::size_t(std::max(0L, last - entry.offset + 1 + std::max(run.o.shift, 0L)));
  }
  const auto local = catalog_terms(id, count);
  const DiffReport d = compare(local, b, run.o.shift);
  run.rec.parameters = {{"id", id}, {"shift", std::to_string(run.o.shift)}, {"n", std::to_string(count)},
                        {"mode", run.o.network ? "network-with-cache" : "fixture-only"}};
  run.rec.summary = {{"source", to_string(b.source)},
                     {"equal", d.equal() ? "yes" : "no"},
                     {"compared", std::to_string(d.compared)},
                     {"first_index", std::to_string(d.first_index)},
                     {"last_index", std::to_string(d.last_index)},
                     {"network_calls", std::to_string(client.network_calls())}};
  if (d.first_mismatch) {
    run.rec.summary.emplace_back("first_mismatch_index", std::to_string(d.first_mismatch->index));
    run.rec.summary.emplace_back("local", d.first_mismatch->local.str());
    run.rec.summary.emplace_back("remote", d.first_mismatch->remote.str());
    run.status = 3;
  }
}

void print_error(std::ostream& out, std::ostream& err, const OutputRecord& rec, OutputFormat fmt,
                 const std::string& code, const std::string& what, std::optional<std::int64_t> where, int exit_code) {
  err << "rueppel-lab: " << what << '\n';
  if (fmt != OutputFormat::json) return;
  nlohmann::ordered_json j;
  j["schema"] = kOutputSchema;
  j["command"] = rec.command;
  j["error"] = {{"code", code}, {"message", what}};
  j["error"]["where"] = where ? nlohmann::ordered_json(*where) : nlohmann::ordered_json(nullptr);
  j["exit_code"] = exit_code;
  out << j.dump(2) << '\n';
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
  Run run;
  run.hooks = hooks;
  for (int i = 1; i < argc; ++i) run.rec.command.emplace_back(argv[i]);
  Options& o = run.o;

  CLI::App app{"Exact Hankel, continued-fraction and Riordan computations for Catalan and Rueppel sequences.",
               "rueppel-lab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "plain, json, csv or bfile");
  app.add_option("--ring", o.ring, "int, rat or poly-bc");
  app.add_option("--depth-profile", o.depth_profile, "default, printed, extended, N, ID=N (comma separated)");
  app.add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  app.add_option("--truncation", o.truncation, "minimum working truncation order");
  app.add_option("--reference", o.reference, "verification reference: fixtures or catalog");
  app.add_option("--config", o.config, "key = value file (default ./rueppel-lab.toml when present)");

  auto* expand = app.add_subcommand("expand", "coefficients of a generating function");
  expand->add_option("expr", o.expr, "generating-function expression")->required();
  expand->add_option("-n", o.n, "number of coefficients");

  auto* hankel = app.add_subcommand("hankel", "Hankel transform h_0..h_n");
  hankel->add_option("source", o.source, "expression or catalog A-number")->required();
  hankel->add_option("-n", o.n, "largest order");
  hankel->add_option("--shift", o.shift, "use a_{n+k} (negative k prepends zeros)");

  auto* cfrac = app.add_subcommand("cfrac", "Stieltjes or Jacobi continued-fraction parameters");
  cfrac->add_option("expr", o.expr, "generating-function expression")->required();
  cfrac->add_option("--kind", o.kind, "s or j");
  cfrac->add_option("-d", o.d, "depth");

  auto* riordan = app.add_subcommand("riordan", "Riordan array (g, f)");
  riordan->add_option("--g", o.g, "g(x), nonzero constant term")->required();
  riordan->add_option("--f", o.f, "f(x), zero constant term")->required();
  riordan->add_option("-n", o.n, "matrix order");
  riordan->add_flag("--strip-first-row", o.strip, "drop row 0");
  riordan->add_option("--apply", o.apply, "apply the matrix to h(x)");

  auto* cat = app.add_subcommand("catalog", "catalog sequences (list them without an id)");
  cat->add_option("id", o.id, "A-number");
  cat->add_option("-n", o.n, "number of terms");

  auto* verify = app.add_subcommand("verify", "run registered checks");
  verify->add_option("check", o.check, "check id or all");
  verify->add_option("-d", o.d, "depth for the selected checks");
  verify->add_flag("--list", o.list, "list the registered checks");

  auto* cmp = app.add_subcommand("compare", "compare a catalog generator with its b-file");
  cmp->add_option("id", o.id, "A-number")->required();
  cmp->add_option("-n", o.n, "number of local terms (default covers the b-file)");
  cmp->add_option("--shift", o.shift, "compare local a_{n+k} with b-file index n");
  cmp->add_flag("--network", o.network, "fetch from the OEIS (cached) instead of the fixtures");

  OutputFormat fmt = OutputFormat::plain;
  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      throw UsageFailure("Usage", e.what());
    }

    run.cfg = LabConfig::defaults();
    try {
      if (!o.config.empty()) {
        run.cfg.load(o.config);
      } else if (std::filesystem::exists("rueppel-lab.toml")) {
        run.cfg.load("rueppel-lab.toml");
      }
    } catch (const Error& e) {
      throw UsageFailure(std::string(errc_name(e.code())), e.what(), e.where());
    }
    run.cfg.apply_env();
    if (!o.format.empty()) run.cfg.format = o.format;
    if (!o.ring.empty()) run.cfg.ring = o.ring;
    if (!o.depth_profile.empty()) run.cfg.depth_profile = o.depth_profile;
    if (!o.reference.empty()) run.cfg.reference = o.reference;
    if (o.jobs >= 0) run.cfg.jobs = o.jobs;
    if (o.truncation) run.cfg.truncation = o.truncation;
    try {
      fmt = parse_output_format(run.cfg.format);
    } catch (const Error& e) {
      throw UsageFailure("Usage", e.what());
    }
    if (run.cfg.jobs > 0) omp_set_num_threads(run.cfg.jobs);

    if (*expand) cmd_expand(run);
    if (*hankel) cmd_hankel(run);
    if (*cfrac) cmd_cfrac(run);
    if (*riordan) cmd_riordan(run);
    if (*cat) cmd_catalog(run);
    if (*verify) cmd_verify(run);
    if (*cmp) cmd_compare(run);
    out << render(run.rec, fmt);
    return run.status;
  } catch (const UsageFailure& e) {
    print_error(out, err, run.rec, fmt, e.code(), e.what(), e.where(), 2);
    return 2;
  } catch (const Error& e) {
    const int code = is_usage(e.code()) ? 2 : 1;
    print_error(out, err, run.rec, fmt, std::string(errc_name(e.code())), e.what(), e.where(), code);
    return code;
  }
}

}  // namespace rueppel
