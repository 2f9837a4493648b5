#include "verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "eseq/epsilon.hpp"
#include "eseq/gauge.hpp"
#include "eseq/padic.hpp"
#include "eseq/partitions.hpp"
#include "eseq/primes.hpp"
#include "eseq/series.hpp"

namespace eseq::cli {

namespace {

constexpr Suite kOrder[] = {Suite::V2,     Suite::V3,       Suite::V5,    Suite::Vp, Suite::Congruence,
                            Suite::Series, Suite::Identity, Suite::Gauge, Suite::All};

class Emitter {
 public:
  Emitter(std::string suite, const CheckSink& sink, VerifySummary& summary)
      : suite_(std::move(suite)), sink_(sink), summary_(summary) {}

  bool stopped() const { return summary_.stopped; }

  void emit(std::string name, std::string instance, bool pass, std::string detail = {}) {
    if (summary_.stopped) return;
    (pass ? summary_.passed : summary_.failed) += 1;
    Check c{suite_, std::move(name), std::move(instance), pass, std::move(detail)};
    if (!sink_(c)) summary_.stopped = true;
  }

 private:
  std::string suite_;
  const CheckSink& sink_;
  VerifySummary& summary_;
};

// Tracks the first failing witness of a large sweep so it can be reported
// as a single line.
struct Sweep {
  std::size_t count = 0;
  std::optional<std::string> first_failure;

  void record(bool ok, const std::function<std::string()>& witness) {
    ++count;
    if (!ok && !first_failure) first_failure = witness();
  }
  bool pass() const { return !first_failure.has_value(); }
  std::string detail() const {
    return pass() ? std::to_string(count) + " instances" : "first failure: " + *first_failure;
  }
};

std::string l_instance(std::size_t l) { return "l=" + std::to_string(l); }

std::vector<Rational> eps_prefix(std::size_t n) { return default_epsilon_cache().prefix(n); }

void exact_valuation_suite(unsigned long p, std::size_t max_order, Emitter& out) {
  const auto eps = eps_prefix(max_order);
  const std::string name = "v" + std::to_string(p) + "(eps_l) = -l";
  for (std::size_t l = 1; l <= max_order && !out.stopped(); ++l) {
    const Valuation v = vp_rational(p, eps[l]);
    out.emit(name, l_instance(l), v == Valuation(-static_cast<long>(l)), "v=" + v.str());
  }
}

void v5_suite(std::size_t max_order, Emitter& out) {
  const auto eps = eps_prefix(max_order);
  for (std::size_t l = 1; l <= max_order && !out.stopped(); ++l) {
    const Valuation v = vp_rational(5, eps[l]);
    const Valuation half(-static_cast<long>(l / 2));
    if (l % 10 == 3) {
      out.emit("v5(eps_l) > -floor(l/2) [l = 3 mod 10]", l_instance(l), v > half,
               "exceptional index, v=" + v.str() + " vs " + half.str());
    } else {
      out.emit("v5(eps_l) = -floor(l/2)", l_instance(l), v == half, "v=" + v.str());
    }
  }
}

void general_p_suite(const VerifyOptions& opt, Emitter& out) {
  const std::size_t n_max = opt.max_order;
  const auto eps = eps_prefix(n_max);
  for (unsigned long p : {7UL, 11UL, 13UL}) {
    const std::size_t h = (p - 1) / 2;
    for (std::size_t l = 1; l <= n_max && !out.stopped(); ++l) {
      const Valuation v = vp_rational(p, eps[l]);
      const std::string inst = "p=" + std::to_string(p) + " " + l_instance(l);
      if (l % h == 0) {
        const long n = static_cast<long>(l / h);
        out.emit("v_p(eps_{n(p-1)/2}) = -n", inst, v == Valuation(-n), "v=" + v.str() + ", n=" + std::to_string(n));
      } else {
        // Strongest instance of v_p(eps_l) > -n over all n with l < n(p-1)/2.
        const long n = static_cast<long>(l / h) + 1;
        out.emit("v_p(eps_l) > -n for l < n(p-1)/2", inst, v > Valuation(-n),
                 "v=" + v.str() + ", n=" + std::to_string(n));
      }
    }
  }
  if (out.stopped()) return;

  // Lemma layer, swept at a scale tied to max_order.
  const unsigned long legendre_limit = std::min<unsigned long>(100'000, 1000 * n_max);
  const unsigned long lemma_limit = 20 * n_max;
  for (unsigned long p : sieve(97)) {
    Sweep s;
    for (unsigned long n = 0; n <= legendre_limit; ++n) {
      s.record(vp_factorial(p, n) == vp_factorial_count(p, n), [&] { return "n=" + std::to_string(n); });
    }
    out.emit("Legendre digit formula = multiple count", "p=" + std::to_string(p) + " n<=" + std::to_string(legendre_limit),
             s.pass(), s.detail());
  }
  {
    Sweep s;
    for (unsigned long n = 1; n <= lemma_limit; ++n) {
      s.record(vp_central_ratio(2, n) == -static_cast<long>(digit_expansion(2, n).digit_sum()),
               [&] { return "n=" + std::to_string(n); });
    }
    out.emit("v2((n!)^2/(2n+1)!) = -s_2(n)", "n<=" + std::to_string(lemma_limit), s.pass(), s.detail());
  }
  for (unsigned long p : sieve(31)) {
    if (p == 2) continue;
    Sweep bound;
    Sweep central;
    for (unsigned long n = 1; n <= lemma_limit; ++n) {
      bound.record(bound_factorial_odd(p, n).pass, [&] { return "n=" + std::to_string(n); });
      central.record(check_central_ratio(p, n).pass, [&] { return "n=" + std::to_string(n); });
    }
    const std::string inst = "p=" + std::to_string(p) + " n<=" + std::to_string(lemma_limit);
    out.emit("v_p((2n+1)!) <= 2(n-s_p(n))/(p-1)+r+1", inst, bound.pass(), bound.detail());
    out.emit("v_p((n!)^2/(2n+1)!) >= -2n/(p-1), equality iff n=(p-1)/2", inst, central.pass(), central.detail());
  }

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<unsigned long> part(1, std::max<unsigned long>(2, lemma_limit));
  std::uniform_int_distribution<int> len(1, 6);
  for (unsigned long p : sieve(31)) {
    if (p == 2) continue;
    Sweep s;
    for (unsigned l = 1; l <= 16; ++l) {
      for_each_partition(l, [&](std::span<const unsigned> parts) {
        const std::vector<unsigned long> pl(parts.begin(), parts.end());
        s.record(check_multi_index_bound(p, pl).pass, [&] { return format_parts(pl); });
      });
    }
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<unsigned long> pl(static_cast<std::size_t>(len(rng)));
      for (auto& x : pl) x = part(rng);
      s.record(check_multi_index_bound(p, pl).pass, [&] { return format_parts(pl); });
    }
    out.emit("product bound >= -2l/(p-1), equality iff all parts (p-1)/2", "p=" + std::to_string(p), s.pass(),
             s.detail());
  }
  {
    Sweep s;
    for (int trial = 0; trial < 2000; ++trial) {
      std::vector<unsigned long> pl(static_cast<std::size_t>(len(rng)));
      for (auto& x : pl) x = part(rng);
      s.record([&] { const auto r = check_two_adic_product(pl); return !r.applicable || r.pass; }(), [&] { return format_parts(pl); });
    }
    out.emit("v2(2^(l-1) prod (n!)^2/(2n+1)!) >= 0", "random part lists", s.pass(), s.detail());
  }
}

void congruence_suite(std::size_t max_order, Emitter& out) {
  const auto eps = eps_prefix(max_order);
  for (std::size_t l = 1; l <= max_order && !out.stopped(); ++l) {
    const Valuation v = vp_rational(2, eps[l] - Rational(6).pow(-static_cast<long>(l)));
    out.emit("eps_l = 6^-l mod 2^(-l+1)", l_instance(l), v >= Valuation(1 - static_cast<long>(l)),
             "v2(diff)=" + v.str());
  }
  for (unsigned long p : {5UL, 7UL, 11UL}) {
    const std::size_t h = (p - 1) / 2;
    const Rational base = Rational(Integer(factorial(h) * factorial(h)), factorial(p));
    for (std::size_t n = 1; n * h <= max_order && !out.stopped(); ++n) {
      const long ln = static_cast<long>(n);
      const bool negative = (n * (p + 1) / 2) % 2 == 1;
      Rational target = base.pow(ln);
      if (negative) target = -target;
      const Valuation v = vp_rational(p, eps[n * h] - target);
      out.emit("eps_{n(p-1)/2} = (-1)^(n(p+1)/2) ((p-1)/2)!^(2n)/(p!)^n mod p^(-n+1)",
               "p=" + std::to_string(p) + " n=" + std::to_string(n), v >= Valuation(1 - ln),
               "target=" + target.str() + ", v(diff)=" + v.str());
    }
  }
  for (std::size_t n = 0; 2 * n + 1 <= max_order && !out.stopped(); ++n) {
    const long ln = static_cast<long>(n);
    Rational target = Rational(Integer(Integer(Integer(1) << (2 * n)) * (7 - 2 * ln))) /
                      (Rational(120).pow(ln - 1) * Rational(factorial(7)));
    if (n % 2 == 1) target = -target;
    const Valuation v = vp_rational(5, eps[2 * n + 1] - target);
    out.emit("eps_{2n+1} = (-1)^n 2^(2n)(7-2n)/((5!)^(n-1) 7!) mod 5^(-n+1)", "n=" + std::to_string(n),
             v >= Valuation(1 - ln), "v5(diff)=" + v.str());
  }
}

void series_suite(std::size_t max_order, Emitter& out) {
  const std::size_t n = std::max<std::size_t>(max_order, 2);
  const std::string inst = "order=" + std::to_string(n);
  const PowerSeries h = series_h(n);
  const PowerSeries f = series_f(n, FMethod::ClosedForm);
  const PowerSeries fp = series_f_prime(n);
  out.emit("closed-form f = ODE-recursion f", inst, f == series_f(n, FMethod::OdeRecursion));
  out.emit("f' termwise = derivative of f", inst, ps_derivative(f) == fp.truncated(n - 1));
  out.emit("x(x+4)f'' + (x+2)f' - 2 = 0", "order=" + std::to_string(n - 1), ode_residual(f).is_zero());
  out.emit("f(h(x)) = x", inst, ps_compose(f, h) == PowerSeries::identity(n));
  const PowerSeries g = ps_inverse(fp);
  out.emit("g * f' = 1", inst, g * fp == PowerSeries::constant(1, n));
  const PowerSeries gh = ps_compose(g, h);
  out.emit("g(h(x)) = h'(x)", "order=" + std::to_string(n - 1), agree_through(gh, ps_derivative(h), n - 1));
  out.emit("sum x^l/(2l+1)! = sum eps_i h^i", inst, gh == series_sinhc(n));
}

void identity_suite(const VerifyOptions& opt, Emitter& out) {
  const std::size_t n = opt.max_order;
  const EpsilonTable series = epsilon_series(n);

  auto compare = [&](const std::string& name, const EpsilonTable& other, std::size_t upto) {
    Sweep s;
    for (std::size_t l = 0; l <= upto; ++l) {
      s.record(other[l] == series[l], [&] { return l_instance(l); });
    }
    out.emit(name, "l<=" + std::to_string(upto), s.pass(), s.detail());
  };
  compare("recursion = series inversion", epsilon_recursion(n), n);
  const std::size_t part_max = std::min<std::size_t>(n, 40);
  compare("composition sum (partitions) = series inversion",
          epsilon_composition_table(part_max, CompositionStrategy::Partitions), part_max);
  const std::size_t naive_max = std::min<std::size_t>(n, 20);
  compare("composition sum (naive) = series inversion",
          epsilon_composition_table(naive_max, CompositionStrategy::NaiveCompositions), naive_max);

  const std::size_t residual_max = std::min<std::size_t>(n, 30);
  for (std::size_t l = 0; l <= residual_max && !out.stopped(); ++l) {
    const Rational r = defining_identity_residual(series, static_cast<unsigned>(l));
    out.emit("defining identity residual = 0", l_instance(l), r.is_zero(), "residual=" + r.str());
  }
  const std::size_t sign_max = std::min<std::size_t>(n, 20);
  for (std::size_t l = 1; l <= sign_max && !out.stopped(); ++l) {
    const int expected = l % 2 == 1 ? 1 : -1;
    out.emit("sign(eps_l) = (-1)^(l-1)", l_instance(l), series[l].sign() == expected);
  }
  FactorOptions fo;
  fo.trial_bound = opt.trial_bound;
  fo.seed = opt.seed;
  for (std::size_t l = 1; l <= sign_max && !out.stopped(); ++l) {
    const FactorizationReport rep = factor_rational(series[l], fo);
    const bool primes_ok = std::all_of(rep.factors.begin(), rep.factors.end(),
                                       [](const PrimePower& f) { return is_prime(f.prime); });
    out.emit("factorization complete, prime and exact", l_instance(l),
             rep.complete() && primes_ok && rep.reconstruct() == series[l], rep.str());
  }
}

void gauge_suite(const VerifyOptions& opt, Emitter& out) {
  const std::size_t n_max = opt.max_order;
  {
    Sweep two;
    Sweep three;
    for (unsigned long a = 0; a <= 12; ++a) {
      for (unsigned long b = 0; b <= 12; ++b) {
        for (long m : {1L, -1L, 5L, -7L, 35L, 143L}) {
          Integer k = Integer(m) << a;
          for (unsigned long i = 0; i < b; ++i) k *= 3;
          two.record(d_prime(2, k) == static_cast<long>(a), [&] { return "k=" + k.get_str(); });
          three.record(d_prime(3, k) == static_cast<long>(b), [&] { return "k=" + k.get_str(); });
        }
      }
    }
    out.emit("d'_2(k) = v2(k)", "k=+-2^a 3^b m, a,b<=12", two.pass(), two.detail());
    out.emit("d'_3(k) = v3(k)", "k=+-2^a 3^b m, a,b<=12", three.pass(), three.detail());
  }
  for (unsigned long p : {5UL, 7UL, 11UL, 13UL}) {
    for (unsigned long v = 0; v <= 3 && !out.stopped(); ++v) {
      Integer k = 1;
      for (unsigned long i = 0; i < v; ++i) k *= p;
      const BoundReport r = dp_bounds(p, k);
      const long floor_value = static_cast<long>((v + 1) * (p - 1) / 2) - 1;
      std::ostringstream detail;
      detail << "scanned d'=" << r.d_prime_scanned << ", lower=" << r.lower_bound_dp << ", upper=" << r.upper_bound_dp;
      if (!r.closed_form_agrees()) detail << "; note: differs from (p-1)v_p(k)/2 = " << r.d_prime_closed_form;
      out.emit("d'_p(k) >= (v_p(k)+1)(p-1)/2 - 1", "p=" + std::to_string(p) + " k=" + k.get_str(),
               r.d_prime_scanned >= floor_value && r.lower_bound_dp <= r.upper_bound_dp, detail.str());
    }
  }

  const std::vector<Integer> small = {an_type_lower_bound(1), an_type_lower_bound(2), an_type_lower_bound(3)};
  out.emit("A_n-type bound values", "n=1..3", small == std::vector<Integer>{2, 12, 32},
           small[0].get_str() + "," + small[1].get_str() + "," + small[2].get_str());

  Integer prev = 0;
  for (unsigned long n = 1; n <= n_max && !out.stopped(); ++n) {
    Sweep counts;
    for (unsigned long r = 2; r <= n + 1; ++r) {
      const PrimeCountReport c = count_primes_factor_at_least(n, r);
      counts.record(c.pass(), [&] {
        return "r=" + std::to_string(r) + " direct=" + std::to_string(c.direct) + " formula=" + std::to_string(c.formula);
      });
    }
    const std::string inst = "n=" + std::to_string(n);
    out.emit("#{odd p: floor(2n/(p-1)+1) >= r} = pi(2n/(r-1)+1) - 1", inst, counts.pass(), counts.detail());
    const Integer bound = an_type_lower_bound(n);
    out.emit("bound rebuilt from prime counts", inst, an_type_bound_by_counts(n) == Rational(bound), bound.get_str());
    out.emit("bound nondecreasing in n", inst, bound >= prev);
    prev = bound;
    const LogIdentityReport lr = log_identity_check(n, opt.tolerance);
    std::ostringstream detail;
    detail.precision(17);
    detail << "lhs=" << lr.lhs << " rhs=" << lr.rhs << " diff=" << lr.difference;
    out.emit("log identity", inst, lr.pass(), detail.str());
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kOrder) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::V2: return "v2";
    case Suite::V3: return "v3";
    case Suite::V5: return "v5";
    case Suite::Vp: return "vp";
    case Suite::Congruence: return "congruence";
    case Suite::Series: return "series";
    case Suite::Identity: return "identity";
    case Suite::Gauge: return "gauge";
    case Suite::All: return "all";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (Suite s : kOrder) v.emplace_back(suite_name(s));
    return v;
  }();
  return names;
}

VerifySummary run_suite(Suite suite, const VerifyOptions& options, const CheckSink& sink) {
  VerifySummary summary;
  if (suite == Suite::All) {
    for (Suite s : kOrder) {
      if (s == Suite::All || summary.stopped) continue;
      const VerifySummary part = run_suite(s, options, sink);
      summary.passed += part.passed;
      summary.failed += part.failed;
      summary.stopped = part.stopped;
    }
    return summary;
  }
  Emitter out(std::string(suite_name(suite)), sink, summary);
  switch (suite) {
    case Suite::V2: exact_valuation_suite(2, options.max_order, out); break;
    case Suite::V3: exact_valuation_suite(3, options.max_order, out); break;
    case Suite::V5: v5_suite(options.max_order, out); break;
    case Suite::Vp: general_p_suite(options, out); break;
    case Suite::Congruence: congruence_suite(options.max_order, out); break;
    case Suite::Series: series_suite(options.max_order, out); break;
    case Suite::Identity: identity_suite(options, out); break;
    case Suite::Gauge: gauge_suite(options, out); break;
    case Suite::All: break;
  }
  return summary;
}

}  // namespace eseq::cli
