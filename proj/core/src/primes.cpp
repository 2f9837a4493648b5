#include "eseq/primes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <stdexcept>

namespace eseq {

namespace {

class PrimeTable {
 public:
  unsigned long pi(unsigned long x) {
    ensure(x);
    std::shared_lock lock(mutex_);
    return static_cast<unsigned long>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
  }

  std::vector<unsigned long> up_to(unsigned long x) {
    ensure(x);
    std::shared_lock lock(mutex_);
    return {primes_.begin(), std::upper_bound(primes_.begin(), primes_.end(), x)};
  }

 private:
  void ensure(unsigned long x) {
    {
      std::shared_lock lock(mutex_);
      if (x <= limit_) return;
    }
    std::unique_lock lock(mutex_);
    if (x <= limit_) return;
    limit_ = std::max({x, 2 * limit_, 1UL << 16});
    primes_ = sieve(limit_);
  }

  std::shared_mutex mutex_;
  unsigned long limit_ = 0;
  std::vector<unsigned long> primes_;
};

PrimeTable& prime_table() {
  static PrimeTable table;
  return table;
}

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr unsigned kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool fits_u64(const Integer& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& n) {
  u64 v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, n.get_mpz_t());
  return v;
}

Integer from_u64(u64 v) {
  Integer n;
  mpz_import(n.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return n;
}

// Uniform-ish integer in [lo, hi] (hi >= lo) from a 64-bit engine.
Integer random_between(std::mt19937_64& rng, const Integer& lo, const Integer& hi) {
  const Integer span = hi - lo + 1;
  const std::size_t words = mpz_sizeinbase(span.get_mpz_t(), 2) / 64 + 2;
  Integer r = 0;
  for (std::size_t i = 0; i < words; ++i) r = (r << 64) + from_u64(rng());
  return lo + r % span;
}

bool strong_probable_prime(const Integer& n, const Integer& base, const Integer& d, unsigned long s) {
  const Integer n1 = n - 1;
  Integer x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

void add_factor(std::map<Integer, std::pair<long, bool>>& acc, const Integer& p, long e, bool proven) {
  auto [it, inserted] = acc.try_emplace(p, 0L, true);
  it->second.first += e;
  it->second.second = it->second.second && proven;
}

struct IntegerFactorization {
  std::map<Integer, std::pair<long, bool>> primes;  // prime -> (exponent, proven)
  std::vector<Integer> residue;
};

IntegerFactorization factor_positive(Integer n, const FactorOptions& options, std::mt19937_64& rng) {
  IntegerFactorization out;
  for (unsigned long p : prime_table().up_to(options.trial_bound)) {
    if (n == 1) break;
    if (Integer(p) * p > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      const long e = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Integer(p).get_mpz_t()));
      add_factor(out.primes, Integer(p), e, true);
    }
  }

  std::vector<Integer> pending;
  if (n > 1) pending.push_back(n);
  while (!pending.empty()) {
    Integer m = std::move(pending.back());
    pending.pop_back();
    const Primality kind = primality(m, 40, rng());
    if (kind != Primality::Composite) {
      add_factor(out.primes, m, 1, kind == Primality::Prime);
      continue;
    }
    if (std::optional<Integer> d = pollard_brent(m, rng(), options.rho_attempts, options.rho_iterations)) {
      pending.push_back(*d);
      pending.push_back(Integer(m / *d));
    } else {
      out.residue.push_back(m);
    }
  }
  std::sort(out.residue.begin(), out.residue.end());
  return out;
}

}  // namespace

std::vector<unsigned long> sieve(unsigned long limit) {
  std::vector<unsigned long> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (unsigned long i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (unsigned long j = i * i; i <= limit / i && j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

unsigned long prime_pi(unsigned long x) {
  return prime_table().pi(x);
}

unsigned long prime_pi(const Rational& x) {
  if (x.sign() < 0) throw std::invalid_argument("prime_pi of a negative number");
  const Integer f = x.floor();
  if (!f.fits_ulong_p()) throw std::out_of_range("prime_pi argument too large");
  return prime_pi(f.get_ui());
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n % p == 0) return n == p;
  }
  if (n < 37ULL * 37ULL) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a complete witness set below 3.3e24.
  for (unsigned a : kSmallPrimes) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Primality primality(const Integer& n, unsigned rounds, std::uint64_t seed) {
  if (n < 2) return Primality::Composite;
  if (fits_u64(n)) return is_prime_u64(to_u64(n)) ? Primality::Prime : Primality::Composite;
  for (unsigned p : kSmallPrimes) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::Composite;
  }
  Integer d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  if (!strong_probable_prime(n, Integer(2), d, s)) return Primality::Composite;
  std::mt19937_64 rng(seed);
  const Integer hi = n - 2;
  for (unsigned i = 0; i < rounds; ++i) {
    if (!strong_probable_prime(n, random_between(rng, Integer(3), hi), d, s)) return Primality::Composite;
  }
  return Primality::ProbablePrime;
}

bool is_prime(const Integer& n) {
  return primality(n) != Primality::Composite;
}

std::optional<Integer> pollard_brent(const Integer& n, std::uint64_t seed, unsigned attempts,
                                     std::uint64_t max_iterations) {
  if (n <= 3) return std::nullopt;
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);

  std::mt19937_64 rng(seed);
  const mpz_srcptr N = n.get_mpz_t();
  Integer x, y, ys, q, g, diff, c;
  constexpr std::uint64_t kBatch = 128;

  auto step = [&](Integer& v) {
    mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
    mpz_add(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    mpz_tdiv_r(v.get_mpz_t(), v.get_mpz_t(), N);
  };

  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    y = random_between(rng, Integer(1), Integer(n - 1));
    c = random_between(rng, Integer(1), Integer(n - 1));
    q = 1;
    g = 1;
    std::uint64_t r = 1;
    std::uint64_t iterations = 0;
    while (g == 1 && iterations < max_iterations) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      iterations += r;
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        const std::uint64_t batch = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < batch; ++i) {
          step(y);
          mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
          mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
          mpz_tdiv_r(q.get_mpz_t(), q.get_mpz_t(), N);
        }
        iterations += batch;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), N);
      }
      r *= 2;
    }
    if (g == n || g == 0) {
      // The batch overshot; replay it one step at a time.
      do {
        step(ys);
        mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), N);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

Rational FactorizationReport::reconstruct() const {
  Integer num = 1;
  Integer den = 1;
  auto apply = [&](const Integer& base, long e) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e < 0) den *= power; else num *= power;
  };
  for (const PrimePower& f : factors) apply(f.prime, f.exponent);
  for (const Residue& r : residue) apply(r.value, r.exponent);
  return Rational(Integer(sign * num), den);
}

std::string FactorizationReport::str() const {
  std::vector<std::string> terms;
  if (sign < 0) terms.emplace_back("-1");
  for (const PrimePower& f : factors) {
    std::string t = f.prime.get_str();
    if (f.exponent != 1) t += "^" + std::to_string(f.exponent);
    terms.push_back(std::move(t));
  }
  for (const Residue& r : residue) {
    std::string t = "[c:" + r.value.get_str() + "]";
    if (r.exponent != 1) t += "^" + std::to_string(r.exponent);
    terms.push_back(std::move(t));
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " \xC2\xB7 ";
    out += terms[i];
  }
  return out;
}

FactorizationReport factor_rational(const Rational& q, const FactorOptions& options) {
  if (q.is_zero()) throw std::domain_error("cannot factor zero");
  std::mt19937_64 rng(options.seed);
  FactorizationReport report;
  report.sign = q.sign();

  const IntegerFactorization num = factor_positive(Integer(abs(q.numerator())), options, rng);
  const IntegerFactorization den = factor_positive(q.denominator(), options, rng);

  std::map<Integer, std::pair<long, bool>> merged = num.primes;
  for (const auto& [p, info] : den.primes) add_factor(merged, p, -info.first, info.second);
  for (const auto& [p, info] : merged) report.factors.push_back({p, info.first, info.second});

  for (const Integer& r : num.residue) report.residue.push_back({r, 1});
  for (const Integer& r : den.residue) report.residue.push_back({r, -1});
  return report;
}

}  // namespace eseq
