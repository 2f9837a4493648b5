#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>

#include "eseq/epsilon.hpp"
#include "eseq/gauge.hpp"
#include "eseq/padic.hpp"
#include "eseq/primes.hpp"
#include "verify.hpp"

namespace eseq::cli {

namespace {

using Json = nlohmann::ordered_json;

// Errors meaning the request itself was malformed; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::size_t max_order = 50;
  std::optional<std::size_t> l;
  unsigned long p = 0;
  std::string k;
  std::optional<unsigned long> n;
  std::string method = "series";
  std::string format = "text";
  unsigned long trial_bound = 1'000'000;
  double tolerance = 1e-9;
  std::uint64_t seed = 0x5eed;
  bool fail_fast = false;
  std::string suite = "all";
  bool log_check = false;
  std::string rational;
};

bool jsonl(const Config& c) { return c.format == "jsonl"; }

FactorOptions factor_options(const Config& c) {
  FactorOptions o;
  o.trial_bound = c.trial_bound;
  o.seed = c.seed;
  return o;
}

Method method_of(const Config& c) {
  const std::optional<Method> m = parse_method(c.method);
  if (!m) throw UsageError("unknown method: " + c.method);
  return *m;
}

Integer k_of(const Config& c) {
  Integer k;
  try {
    k = parse_integer(c.k);
  } catch (const std::invalid_argument&) {
    throw UsageError("--k must be an integer, got '" + c.k + "'");
  }
  if (k == 0) throw UsageError("--k must be nonzero: d_p(0) is infinite");
  return k;
}

void require_prime(unsigned long p) {
  if (!is_prime(Integer(p))) throw UsageError("--p must be a prime, got " + std::to_string(p));
}

Json factors_json(const FactorizationReport& rep) {
  Json factors = Json::array();
  for (const PrimePower& f : rep.factors) {
    Json item{{"prime", f.prime.get_str()}, {"exp", f.exponent}};
    if (!f.proven) item["proven"] = false;
    factors.push_back(std::move(item));
  }
  return factors;
}

Json residue_json(const FactorizationReport& rep) {
  Json residue = Json::array();
  for (const Residue& r : rep.residue) residue.push_back({{"value", r.value.get_str()}, {"exp", r.exponent}});
  return residue;
}

Json epsilon_record(std::size_t l, const Rational& eps, const FactorOptions& fo) {
  Json rec{{"l", l}, {"epsilon", eps.str()}, {"sign", eps.sign()}};
  const FactorizationReport rep = factor_rational(eps, fo);
  rec["factors"] = factors_json(rep);
  if (!rep.complete()) rec["residue"] = residue_json(rep);
  return rec;
}

std::string epsilon_row(std::size_t l, const Rational& eps, const FactorOptions& fo) {
  std::string row = std::to_string(l) + "  " + eps.str();
  const std::string factors = factor_rational(eps, fo).str();
  if (!factors.empty()) row += "  " + factors;
  return row;
}

int cmd_table(const Config& c, std::ostream& out, std::ostream& err) {
  const Method method = method_of(c);
  const EpsilonTable table = compute_epsilon_table(c.max_order, method);
  const Method other = method == Method::SeriesInversion ? Method::Recursion : Method::SeriesInversion;
  const EpsilonTable check = compute_epsilon_table(c.max_order, other);
  for (std::size_t l = 0; l <= c.max_order; ++l) {
    if (table[l] != check[l]) {
      err << "cross-method mismatch at l=" << l << ": " << method_name(method) << " gives " << table[l] << ", "
          << method_name(other) << " gives " << check[l] << "\n";
      return kExitFailure;
    }
  }
  const FactorOptions fo = factor_options(c);
  for (std::size_t l = 0; l <= c.max_order; ++l) {
    if (jsonl(c)) {
      out << epsilon_record(l, table[l], fo).dump() << "\n";
    } else {
      out << epsilon_row(l, table[l], fo) << "\n";
    }
  }
  return kExitOk;
}

int cmd_value(const Config& c, std::ostream& out) {
  if (!c.l) throw UsageError("value requires --l");
  const Method method = method_of(c);
  const Rational eps = method == Method::SeriesInversion ? epsilon(*c.l) : compute_epsilon_table(*c.l, method)[*c.l];
  if (jsonl(c)) {
    out << Json{{"l", *c.l}, {"epsilon", eps.str()}, {"method", method_name(method)}}.dump() << "\n";
  } else {
    out << eps << "\n";
  }
  return kExitOk;
}

int cmd_valuation(const Config& c, std::ostream& out) {
  require_prime(c.p);
  std::size_t lo = 1;
  std::size_t hi = c.max_order;
  if (c.l) lo = hi = *c.l;
  const std::vector<Rational> eps = default_epsilon_cache().prefix(hi);
  for (std::size_t l = lo; l <= hi; ++l) {
    const Valuation v = vp_rational(c.p, eps[l]);
    if (jsonl(c)) {
      Json rec{{"l", l}, {"p", c.p}};
      rec["valuation"] = v.is_infinite() ? Json("inf") : Json(v.value());
      out << rec.dump() << "\n";
    } else if (c.l) {
      out << v << "\n";
    } else {
      out << l << "  " << v << "\n";
    }
  }
  return kExitOk;
}

int cmd_factor(const Config& c, std::ostream& out) {
  Rational q;
  std::optional<std::size_t> l;
  if (!c.rational.empty()) {
    try {
      q = Rational::parse(c.rational);
    } catch (const std::exception&) {
      throw UsageError("cannot parse rational '" + c.rational + "'");
    }
  } else if (c.l) {
    l = *c.l;
    q = epsilon(*c.l);
  } else {
    throw UsageError("factor requires a rational argument or --l");
  }
  if (q.is_zero()) throw UsageError("cannot factor zero");
  const FactorizationReport rep = factor_rational(q, factor_options(c));
  if (jsonl(c)) {
    Json rec;
    if (l) rec["l"] = *l;
    rec["value"] = q.str();
    rec["sign"] = rep.sign;
    rec["factors"] = factors_json(rep);
    if (!rep.complete()) rec["residue"] = residue_json(rep);
    out << rec.dump() << "\n";
  } else {
    out << rep.str() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const std::optional<Suite> suite = parse_suite(c.suite);
  if (!suite) throw UsageError("unknown suite: " + c.suite);
  VerifyOptions opt;
  opt.max_order = c.max_order;
  opt.seed = c.seed;
  opt.tolerance = c.tolerance;
  opt.trial_bound = c.trial_bound;
  const VerifySummary summary = run_suite(*suite, opt, [&](const Check& check) {
    if (jsonl(c)) {
      out << Json{{"suite", check.suite},
                  {"check", check.name},
                  {"instance", check.instance},
                  {"pass", check.pass},
                  {"detail", check.detail}}
                 .dump()
          << "\n";
    } else {
      out << (check.pass ? "PASS" : "FAIL") << "  " << check.suite << "/" << check.name << "  " << check.instance;
      if (!check.detail.empty()) out << "  " << check.detail;
      out << "\n";
    }
    return check.pass || !c.fail_fast;
  });
  if (jsonl(c)) {
    out << Json{{"summary", true}, {"passed", summary.passed}, {"failed", summary.failed}, {"stopped", summary.stopped}}
               .dump()
        << "\n";
  } else {
    out << "summary: " << summary.passed << " passed, " << summary.failed << " failed";
    if (summary.stopped) out << " (stopped at first failure)";
    out << "\n";
  }
  return summary.failed == 0 ? kExitOk : kExitFailure;
}

int cmd_dprime(const Config& c, std::ostream& out) {
  require_prime(c.p);
  const Integer k = k_of(c);
  const long d = d_prime(c.p, k);
  if (jsonl(c)) {
    out << Json{{"p", c.p}, {"k", k.get_str()}, {"d_prime", d}}.dump() << "\n";
  } else {
    out << d << "\n";
  }
  return kExitOk;
}

int cmd_bounds(const Config& c, std::ostream& out) {
  require_prime(c.p);
  const BoundReport r = dp_bounds(c.p, k_of(c));
  if (jsonl(c)) {
    out << Json{{"p", r.prime},
                {"k", r.k.get_str()},
                {"v_p", r.vpk},
                {"lower", r.lower_bound_dp},
                {"upper", r.upper_bound_dp},
                {"d_prime", r.d_prime_scanned},
                {"d_prime_closed_form", r.d_prime_closed_form},
                {"closed_form_agrees", r.closed_form_agrees()}}
               .dump()
        << "\n";
    return kExitOk;
  }
  out << "p=" << r.prime << " k=" << r.k << " v_p=" << r.vpk << " lower=" << r.lower_bound_dp
      << " upper=" << r.upper_bound_dp << " d'=" << r.d_prime_scanned << "\n";
  if (!r.closed_form_agrees()) {
    out << "note: scanned d'=" << r.d_prime_scanned << " differs from the closed form (p-1)v_p(k)/2 = "
        << r.d_prime_closed_form << "\n";
  }
  return kExitOk;
}

int cmd_antypes(const Config& c, std::ostream& out) {
  unsigned long lo = 1;
  unsigned long hi = c.max_order;
  if (c.n) lo = hi = *c.n;
  if (lo == 0) throw UsageError("--n must be positive");
  bool all_pass = true;
  for (unsigned long n = lo; n <= hi; ++n) {
    const Integer bound = an_type_lower_bound(n);
    std::optional<LogIdentityReport> lr;
    if (c.log_check) {
      lr = log_identity_check(n, c.tolerance);
      all_pass = all_pass && lr->pass();
    }
    if (jsonl(c)) {
      Json rec{{"n", n}, {"bound", bound.get_str()}};
      if (lr) {
        rec["log_lhs"] = lr->lhs;
        rec["log_rhs"] = lr->rhs;
        rec["log_diff"] = lr->difference;
        rec["log_pass"] = lr->pass();
      }
      out << rec.dump() << "\n";
      continue;
    }
    if (c.n) {
      out << bound;
    } else {
      out << n << "  " << bound;
    }
    if (lr) {
      std::ostringstream s;
      s.precision(17);
      s << "  log_lhs=" << lr->lhs << " log_rhs=" << lr->rhs << " diff=" << lr->difference
        << (lr->pass() ? " PASS" : " FAIL");
      out << s.str();
    }
    out << "\n";
  }
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation and verification of the eps sequence", "eseq"};
  app.require_subcommand(1);
  Config c;

  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "jsonl"}));
  };
  auto method_opt = [&](CLI::App* sub) {
    sub->add_option("--method", c.method, "recur | series | compsum")
        ->check(CLI::IsMember({"recur", "series", "compsum", "recursion", "series-inversion", "composition-sum"}));
  };
  auto seed_opt = [&](CLI::App* sub) { sub->add_option("--seed", c.seed, "Random seed"); };
  auto trial_opt = [&](CLI::App* sub) {
    sub->add_option("--trial-bound", c.trial_bound, "Trial division bound")->check(CLI::PositiveNumber);
  };
  auto pk_opts = [&](CLI::App* sub) {
    sub->add_option("--p", c.p, "Prime")->required();
    sub->add_option("--k", c.k, "Nonzero integer")->required();
  };

  CLI::App* table = app.add_subcommand("table", "Print eps_0..eps_N with factorizations");
  table->add_option("--max", c.max_order, "Largest order N");
  method_opt(table);
  format_opt(table);
  trial_opt(table);
  seed_opt(table);

  CLI::App* value = app.add_subcommand("value", "Print eps_l");
  value->add_option("--l", c.l, "Order")->required();
  method_opt(value);
  format_opt(value);

  CLI::App* valuation = app.add_subcommand("valuation", "p-adic valuation of eps_l (or of eps_1..eps_N)");
  valuation->add_option("--p", c.p, "Prime")->required();
  valuation->add_option("--l", c.l, "Order");
  valuation->add_option("--max", c.max_order, "Largest order when --l is absent");
  format_opt(valuation);

  CLI::App* factor = app.add_subcommand("factor", "Signed prime factorization of a rational");
  factor->add_option("rational", c.rational, "Rational p/q");
  factor->add_option("--l", c.l, "Factor eps_l instead");
  format_opt(factor);
  trial_opt(factor);
  seed_opt(factor);

  CLI::App* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", c.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--max", c.max_order, "Largest order N");
  verify->add_option("--tolerance", c.tolerance, "Floating tolerance for the log identity");
  verify->add_flag("--fail-fast", c.fail_fast, "Stop at the first failure");
  format_opt(verify);
  trial_opt(verify);
  seed_opt(verify);

  CLI::App* dprime = app.add_subcommand("dprime", "d'_p(k)");
  pk_opts(dprime);
  format_opt(dprime);

  CLI::App* bounds = app.add_subcommand("bounds", "Bounds on d_p(k) and the scanned d'_p(k)");
  pk_opts(bounds);
  format_opt(bounds);

  CLI::App* antypes = app.add_subcommand("antypes", "Lower bound on the number of A_n-types");
  antypes->add_option("--n", c.n, "Single n");
  antypes->add_option("--max", c.max_order, "Rows n = 1..N when --n is absent");
  antypes->add_flag("--log-check", c.log_check, "Also evaluate the logarithm identity");
  antypes->add_option("--tolerance", c.tolerance, "Tolerance for --log-check");
  format_opt(antypes);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(c, out, err);
    if (value->parsed()) return cmd_value(c, out);
    if (valuation->parsed()) return cmd_valuation(c, out);
    if (factor->parsed()) return cmd_factor(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (dprime->parsed()) return cmd_dprime(c, out);
    if (bounds->parsed()) return cmd_bounds(c, out);
    if (antypes->parsed()) return cmd_antypes(c, out);
  } catch (const UsageError& e) {
    err << "eseq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "eseq: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace eseq::cli
