#include "cli.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "probfubini/fubini.hpp"
#include "probfubini/identities.hpp"
#include "probfubini/stirling.hpp"

namespace probfubini::cli {

namespace {

using nlohmann::json;

// Shortest round-trip decimal for doubles, via the JSON serializer so CSV and
// JSON-lines cells agree byte-for-byte.
std::string float_str(double v) { return json(v).dump(); }

int default_threads() {
  if (const char* env = std::getenv("PROBFUBINI_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

// Runs fn(i) for i in [0, count) on `threads` workers; results land indexed,
// so output order is input order regardless of scheduling.
void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min<int>(threads, static_cast<int>(count));
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct Options {
  std::string dist;
  std::string x;
  std::string r = "2";
  std::string order_alpha;  // fubini --order (rational alpha)
  std::string route = "all";
  std::string identity;
  std::string g = "exp";
  std::string v = "1";
  std::string format = "csv";
  int n = 4;
  int trunc = 200;
  int series_order = -1;  // verify --order
  double tol = 1e-9;
  long samples = 100000;
  std::uint64_t seed = 1;
  bool as_float = false;
};

Rational parse_rat(const std::string& s, const char* flag) {
  try {
    return Rational::parse(s);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(std::string(flag) + ": expected a rational 'num' or 'num/den', got '" + s + "'");
  }
}

std::string value_cell(const Rational& v, bool as_float) {
  return as_float ? float_str(v.to_double()) : v.str();
}

// The first csv_count fields form the CSV row (matching the header); JSON
// lines carry every field.
void emit(std::ostream& out, const std::string& format, const std::string& command,
          const std::vector<std::pair<std::string, json>>& fields, size_t csv_count) {
  if (format == "jsonl") {
    json j;
    j["command"] = command;
    for (const auto& [k, v] : fields) j[k] = v;
    out << j.dump() << "\n";
  } else {
    for (size_t i = 0; i < csv_count && i < fields.size(); ++i) {
      if (i > 0) out << ",";
      const json& v = fields[i].second;
      if (v.is_string())
        out << v.get<std::string>();
      else
        out << v.dump();
    }
    out << "\n";
  }
}

void csv_header(std::ostream& out, const std::string& format, const std::string& header) {
  if (format == "csv") out << header << "\n";
}

int run_stirling(const Options& opt, std::ostream& out) {
  csv_header(out, opt.format, "n,k,value");
  const bool probabilistic = !opt.dist.empty();
  const TriTable table = probabilistic
                             ? prob_stirling_table(DistSpec::parse(opt.dist), opt.n)
                             : stirling2_table(opt.n);
  for (int n = 0; n <= table.max_n(); ++n)
    for (int k = 0; k <= n; ++k)
      emit(out, opt.format, "stirling",
           {{"n", n}, {"k", k}, {"value", value_cell(table.at(n, k), opt.as_float)}}, 3);
  return 0;
}

int run_bell(const Options& opt, std::ostream& out) {
  const DistSpec dist = DistSpec::parse(opt.dist);
  const Rational x = parse_rat(opt.x.empty() ? "1" : opt.x, "--x");
  csv_header(out, opt.format, "n,value");
  for (int n = 0; n <= opt.n; ++n) {
    const Rational v = prob_bell_poly(dist, static_cast<unsigned>(n)).eval(x);
    emit(out, opt.format, "bell",
         {{"n", n},
          {"value", value_cell(v, opt.as_float)},
          {"dist", dist.str()},
          {"x", x.str()}},
         2);
  }
  return 0;
}

int run_fubini(const Options& opt, std::ostream& out) {
  const DistSpec dist = DistSpec::parse(opt.dist);
  const Rational x = parse_rat(opt.x.empty() ? "1" : opt.x, "--x");

  if (!opt.order_alpha.empty()) {
    // Alpha-th order family only has the definitional route.
    if (opt.route != "def" && opt.route != "all")
      throw CLI::ValidationError("--order: only the 'def' route applies to alpha-th order polynomials");
    const Rational alpha = parse_rat(opt.order_alpha, "--order");
    csv_header(out, opt.format, "n,route,value");
    for (int n = 0; n <= opt.n; ++n) {
      const Rational v = prob_fubini_higher(dist, static_cast<unsigned>(n), alpha).eval(x);
      emit(out, opt.format, "fubini",
           {{"n", n},
            {"route", "def"},
            {"value", value_cell(v, opt.as_float)},
            {"dist", dist.str()},
            {"x", x.str()},
            {"alpha", alpha.str()}},
           3);
    }
    return 0;
  }

  std::vector<std::string> routes;
  if (opt.route == "all")
    routes = {"def", "rec", "det", "trudi"};
  else if (opt.route == "def" || opt.route == "rec" || opt.route == "det" || opt.route == "trudi")
    routes = {opt.route};
  else
    throw CLI::ValidationError("--route: expected one of def|rec|det|trudi|all");

  const FubiniFamily fam(dist, opt.n);
  const std::vector<RatPoly> rec_polys = fubini_polys_by_recurrence(fam.moments(), opt.n);

  struct Item {
    int n;
    std::string route;
    Rational value;
  };
  std::vector<Item> items;
  for (int n = 0; n <= opt.n; ++n)
    for (const auto& route : routes) items.push_back({n, route, Rational(0)});

  parallel_for(items.size(), default_threads(), [&](size_t i) {
    Item& item = items[i];
    const unsigned n = static_cast<unsigned>(item.n);
    if (item.route == "def")
      item.value = fam.poly(item.n).eval(x);
    else if (item.route == "rec")
      item.value = rec_polys[static_cast<size_t>(item.n)].eval(x);
    else if (item.route == "det")
      item.value = fubini_det_at(fam.moments(), n, x);
    else
      item.value = fubini_trudi_at(fam.moments(), n, x);
  });

  csv_header(out, opt.format, "n,route,value");
  for (const auto& item : items)
    emit(out, opt.format, "fubini",
         {{"n", item.n},
          {"route", item.route},
          {"value", value_cell(item.value, opt.as_float)},
          {"dist", dist.str()},
          {"x", x.str()}},
         3);
  return 0;
}

json report_json(const TailReport& rep) {
  json j;
  j["partial_sum"] = rep.partial_sum;
  j["exact"] = rep.reference;
  j["terms"] = rep.terms_used;
  j["last_term"] = rep.last_term_magnitude;
  return j;
}

int run_verify(const Options& opt, std::ostream& out) {
  const DistSpec dist = DistSpec::parse(opt.dist);
  bool all_ok = true;

  auto emit_line = [&](json j, const std::string& status) {
    j["command"] = "verify";
    j["identity"] = opt.identity;
    j["dist"] = dist.str();
    j["status"] = status;
    out << j.dump() << "\n";
    if (status != "ok") all_ok = false;
  };

  auto tail_line = [&](int n, const Rational& x, const std::function<TailReport()>& check) {
    json j;
    j["n"] = n;
    j["x"] = x.str();
    j["trunc"] = opt.trunc;
    j["tol"] = opt.tol;
    try {
      const TailReport rep = check();
      j.update(report_json(rep));
      emit_line(j, rep.converged ? "ok" : "failed");
    } catch (const std::domain_error& e) {
      j["error"] = e.what();
      emit_line(j, "diverged");
    }
  };

  auto bool_line = [&](int n, const Rational& x, const std::function<bool()>& check) {
    json j;
    j["n"] = n;
    j["x"] = x.str();
    try {
      const bool ok = check();
      j["result"] = ok;
      emit_line(j, ok ? "ok" : "failed");
    } catch (const std::domain_error& e) {
      j["error"] = e.what();
      emit_line(j, "diverged");
    }
  };

  const std::string id = opt.identity;
  for (int n = 0; n <= opt.n; ++n) {
    const unsigned un = static_cast<unsigned>(n);
    if (id == "transform") {
      GSpec g = GSpec::exp();
      if (opt.g == "geom") g = GSpec::geom();
      else if (opt.g == "negbin") g = GSpec::negbin(parse_rat(opt.r, "--r"));
      else if (opt.g != "exp") throw CLI::ValidationError("--g: expected exp|geom|negbin");
      const Rational x = parse_rat(opt.x.empty() ? (g.kind == GSpec::Kind::Exp ? "1" : "1/2") : opt.x, "--x");
      const RatPoly f = RatPoly::monomial(Rational(1), n);  // f(t) = t^n
      tail_line(n, x, [&] { return series_transform_check(f, g, dist, x, opt.trunc, opt.tol); });
    } else if (id == "powersum") {
      const Rational x = parse_rat(opt.x.empty() ? "1/2" : opt.x, "--x");
      tail_line(n, x, [&] { return power_sum_identity(dist, un, x, opt.trunc, opt.tol); });
    } else if (id == "fubini-series") {
      tail_line(n, Rational(1, 2), [&] { return fubini_number_series_check(dist, un, opt.trunc, opt.tol); });
    } else if (id == "negbin") {
      const Rational r = parse_rat(opt.r, "--r");
      const Rational x = parse_rat(opt.x.empty() ? "1/4" : opt.x, "--x");
      tail_line(n, x, [&] { return negbin_transform_check(dist, un, r, x, opt.trunc, opt.tol); });
    } else if (id == "dobinski") {
      const Rational x = parse_rat(opt.x.empty() ? "1" : opt.x, "--x");
      tail_line(n, x, [&] { return dobinski_check(dist, un, x, opt.trunc, opt.tol); });
    } else if (id == "mixture") {
      const Rational x = parse_rat(opt.x.empty() ? "1" : opt.x, "--x");
      tail_line(n, x, [&] { return geometric_mixture_check(dist, un, x, opt.trunc, opt.tol); });
    } else if (id == "polylog") {
      const Rational x = parse_rat(opt.x.empty() ? "1" : opt.x, "--x");
      tail_line(n, x, [&] { return polylog_limit_check(dist, un, x, opt.trunc, opt.tol); });
    } else if (id == "apostol") {
      const auto* bern = dist.get_if<Bernoulli>();
      if (bern == nullptr) throw CLI::ValidationError("apostol: --dist must be bernoulli:p");
      const Rational c = parse_rat(opt.x.empty() ? "-1" : opt.x, "--x");
      const int order = opt.series_order >= 0 ? opt.series_order : std::max(opt.n, 1);
      bool_line(n, c, [&] { return apostol_euler_check(bern->p, c, un, order); });
    } else if (id == "prop31") {
      const Rational x = parse_rat(opt.x.empty() ? "1/3" : opt.x, "--x");
      const Rational v = parse_rat(opt.v, "--v");
      const int order = opt.series_order >= 0 ? opt.series_order : 10;
      bool_line(n, x, [&] { return prop31_check(dist, un, x, v, std::max(order, n)); });
    } else if (id == "prop32") {
      const Rational x = parse_rat(opt.x.empty() ? "1/3" : opt.x, "--x");
      const int order = opt.series_order >= 0 ? opt.series_order : 6;
      tail_line(n, x, [&] { return prop32_check(dist, un, x, opt.trunc, order, opt.tol); });
    } else {
      throw CLI::ValidationError(
          "--identity: expected one of transform|powersum|fubini-series|negbin|dobinski|mixture|"
          "polylog|apostol|prop31|prop32");
    }
  }
  return all_ok ? 0 : 1;
}

int run_mc(const Options& opt, std::ostream& out) {
  const DistSpec dist = DistSpec::parse(opt.dist);
  const Rational x = parse_rat(opt.x.empty() ? "1" : opt.x, "--x");
  const Estimate est = mc_fubini(dist, static_cast<unsigned>(opt.n), x, opt.samples, opt.seed);
  const double exact = prob_fubini_poly(dist, static_cast<unsigned>(opt.n)).eval(x).to_double();
  double z = 0.0;
  if (est.stderr_ > 0.0)
    z = std::abs(est.value - exact) / est.stderr_;
  else if (est.value != exact)
    z = std::numeric_limits<double>::infinity();
  json j;
  j["command"] = "mc";
  j["dist"] = dist.str();
  j["n"] = opt.n;
  j["x"] = x.str();
  j["samples"] = est.samples;
  j["seed"] = est.seed;
  j["estimate"] = est.value;
  j["stderr"] = est.stderr_;
  j["exact"] = exact;
  j["zscore"] = z;
  out << j.dump() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact probabilistic Fubini polynomial calculator and identity verifier"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool dist_required) {
    auto* d = sub->add_option("--dist", opt.dist,
                              "distribution: degenerate:c | bernoulli:p | poisson:l | geometric:r | exponential");
    if (dist_required) d->required();
    sub->add_option("--format", opt.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    sub->add_flag("--float", opt.as_float, "print values as doubles instead of exact rationals");
  };

  CLI::App* stirling = app.add_subcommand("stirling", "emit the (probabilistic) Stirling triangle as n,k,value");
  stirling->add_option("--n", opt.n, "maximum n")->required()->check(CLI::NonNegativeNumber);
  add_common(stirling, false);

  CLI::App* bell = app.add_subcommand("bell", "emit probabilistic Bell polynomial values B_n^Y(x)");
  bell->add_option("--n", opt.n, "maximum n")->required()->check(CLI::NonNegativeNumber);
  bell->add_option("--x", opt.x, "evaluation point (rational), default 1");
  add_common(bell, true);

  CLI::App* fubini = app.add_subcommand("fubini", "emit W_n^Y(x) by one or all routes as n,route,value");
  fubini->add_option("--n", opt.n, "maximum n")->required()->check(CLI::NonNegativeNumber);
  fubini->add_option("--x", opt.x, "evaluation point (rational), default 1");
  fubini->add_option("--order", opt.order_alpha, "alpha-th order family (rational alpha)");
  fubini->add_option("--route", opt.route, "def | rec | det | trudi | all");
  add_common(fubini, true);

  CLI::App* verify = app.add_subcommand("verify", "verify an identity for n = 0..N; JSON lines, exit 1 on failure");
  verify->add_option("--identity", opt.identity,
                     "transform|powersum|fubini-series|negbin|dobinski|mixture|polylog|apostol|prop31|prop32")
      ->required();
  verify->add_option("--n", opt.n, "maximum n (or k), default 4");
  verify->add_option("--x", opt.x, "evaluation point / c parameter (rational)");
  verify->add_option("--r", opt.r, "order r for negbin/transform (rational), default 2");
  verify->add_option("--g", opt.g, "outer function for transform: exp|geom|negbin");
  verify->add_option("--v", opt.v, "v scaling for prop31 (rational), default 1");
  verify->add_option("--trunc", opt.trunc, "series truncation, default 200");
  verify->add_option("--order", opt.series_order, "series order for prop31/prop32/apostol");
  verify->add_option("--tol", opt.tol, "tolerance, default 1e-9");
  verify->add_option("--dist", opt.dist, "distribution spec")->required();

  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimate of W_n^Y(x) vs the exact value");
  mc->add_option("--n", opt.n, "moment order n")->required()->check(CLI::NonNegativeNumber);
  mc->add_option("--x", opt.x, "evaluation point (rational), default 1");
  mc->add_option("--samples", opt.samples, "sample count, default 100000")->check(CLI::PositiveNumber);
  mc->add_option("--seed", opt.seed, "RNG seed, default 1");
  mc->add_option("--dist", opt.dist, "distribution spec")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (stirling->parsed()) return run_stirling(opt, out);
    if (bell->parsed()) return run_bell(opt, out);
    if (fubini->parsed()) return run_fubini(opt, out);
    if (verify->parsed()) return run_verify(opt, out);
    return run_mc(opt, out);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace probfubini::cli
