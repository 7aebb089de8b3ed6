#include "amt/integer.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace amt {

static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");

bool fits_u64(const BigInt& v) { return v >= 0 && mpz_fits_ulong_p(v.get_mpz_t()); }

std::uint64_t to_u64(const BigInt& v) {
  if (!fits_u64(v)) throw std::domain_error("integer does not fit in 64 bits: " + v.get_str());
  return v.get_ui();
}

BigInt from_u64(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }
BigInt from_i64(std::int64_t v) { return BigInt(static_cast<long>(v)); }

// ---------------------------------------------------------------------------
// FactoredInteger

FactoredInteger::FactoredInteger(int sign, std::vector<PrimePower> factors)
    : sign_(sign), factors_(std::move(factors)) {
  if (sign_ != 1 && sign_ != -1) throw std::domain_error("FactoredInteger: sign must be +-1");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (f.exponent == 0) throw std::domain_error("FactoredInteger: zero exponent");
    if (i > 0 && !(factors_[i - 1].prime < f.prime))
      throw std::domain_error("FactoredInteger: primes must be strictly ascending");
    if (!is_prime(f.prime)) throw std::domain_error("FactoredInteger: " + f.prime.get_str() + " is not prime");
  }
}

BigInt FactoredInteger::value() const {
  BigInt v = sign_;
  for (const auto& f : factors_) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    v *= pe;
  }
  return v;
}

BigInt FactoredInteger::radical() const {
  BigInt v = 1;
  for (const auto& f : factors_) v *= f.prime;
  return v;
}

bool FactoredInteger::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

unsigned long FactoredInteger::valuation(const BigInt& prime) const {
  for (const auto& f : factors_)
    if (f.prime == prime) return f.exponent;
  return 0;
}

std::vector<BigInt> FactoredInteger::primes() const {
  std::vector<BigInt> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

std::string FactoredInteger::to_string() const {
  std::ostringstream os;
  if (sign_ < 0) os << "-1";
  for (const auto& f : factors_) {
    if (os.tellp() > 0) os << " * ";
    os << f.prime.get_str();
    if (f.exponent > 1) os << "^" << f.exponent;
  }
  if (os.tellp() == 0) os << "1";
  return os.str();
}

// ---------------------------------------------------------------------------
// Primality and factoring

bool is_prime(const BigInt& m) {
  if (m < 2) return false;
  return mpz_probab_prime_p(m.get_mpz_t(), 40) > 0;
}

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho. Returns a nontrivial divisor of composite
// n, or 0 if `iterations` ran out.
BigInt pollard_brent(const BigInt& n, std::mt19937_64& rng, std::uint64_t& iterations) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  while (iterations > 0) {
    BigInt c = from_u64(rng() % 1000000 + 1);
    BigInt y = from_u64(rng() % 1000000 + 2);
    BigInt g = 1, q = 1, x, ys;
    const std::uint64_t block = 128;
    std::uint64_t r = 1;
    auto step = [&](BigInt& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t lim = std::min(block, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          BigInt d = x - y;
          q = (q * abs(d)) % n;
        }
        g = gcd(q, n);
        k += lim;
        if (iterations <= lim) {
          iterations = 0;
          return 0;
        }
        iterations -= lim;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = gcd(abs(BigInt(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

void split_cofactor(const BigInt& n, std::map<BigInt, unsigned long>& out, std::mt19937_64& rng,
                    std::uint64_t& iterations) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt root;
  // Perfect powers defeat rho; peel them first.
  for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<BigInt, unsigned long> sub;
      split_cofactor(root, sub, rng, iterations);
      for (const auto& [p, e] : sub) out[p] += e * k;
      return;
    }
  }
  BigInt d = pollard_brent(n, rng, iterations);
  if (d == 0) throw BudgetExceeded("factor_integer: rho budget exhausted on " + n.get_str());
  split_cofactor(d, out, rng, iterations);
  split_cofactor(BigInt(n / d), out, rng, iterations);
}

}  // namespace

FactoredInteger factor_integer(const BigInt& m, const IntegerFactorBudget& budget) {
  if (m == 0) throw std::domain_error("factor_integer: 0 has no prime factorization");
  const int sign = m < 0 ? -1 : 1;
  BigInt n = abs(m);
  std::map<BigInt, unsigned long> found;

  auto trial = [&](std::uint64_t p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      BigInt bp = from_u64(p);
      unsigned long e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      found[bp] += e;
    }
  };
  trial(2);
  trial(3);
  std::uint64_t p = 5;
  bool cofactor_is_prime = false;
  for (; p <= budget.trial_bound; p += 6) {
    if (n == 1) break;
    // Once p^2 exceeds n the cofactor is prime.
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) {
      cofactor_is_prime = true;
      break;
    }
    trial(p);
    trial(p + 2);
  }
  if (n != 1) {
    if (cofactor_is_prime) {
      ++found[n];
    } else {
      std::mt19937_64 rng(budget.seed);
      std::uint64_t iterations = budget.rho_iterations;
      split_cofactor(n, found, rng, iterations);
    }
  }
  std::vector<PrimePower> factors;
  for (auto& [q, e] : found) factors.push_back({q, e});
  return FactoredInteger(sign, std::move(factors));
}

bool is_squarefree(const BigInt& m) {
  if (m == 0) return false;
  if (m == 1 || m == -1) return true;
  return factor_integer(m).is_squarefree();
}

BigInt radical(const BigInt& m) {
  if (m <= 0) throw std::domain_error("radical: argument must be positive");
  return factor_integer(m).radical();
}

BigInt mmod(const BigInt& r, const BigInt& m) {
  if (m < 2) throw std::domain_error("mmod: modulus must be at least 2");
  BigInt z;
  mpz_fdiv_r(z.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return z;
}

unsigned long valuation(const BigInt& m, const BigInt& p) {
  if (m == 0) throw std::domain_error("valuation: zero has infinite valuation");
  if (p < 2) throw std::domain_error("valuation: base must be at least 2");
  BigInt t = m;
  return mpz_remove(t.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

// ---------------------------------------------------------------------------
// Small integers

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime_u64(std::uint64_t n) { return is_prime(from_u64(n)); }

std::uint64_t next_prime(std::uint64_t n) {
  BigInt r;
  BigInt bn = from_u64(n);
  mpz_nextprime(r.get_mpz_t(), bn.get_mpz_t());
  return to_u64(r);
}

std::vector<SmallPrimePower> factor_u64(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factor_u64: zero");
  std::vector<SmallPrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factor_u64(n)) phi = phi / p * (p - 1);
  return phi;
}

int moebius(std::uint64_t n) {
  int mu = 1;
  for (const auto& [p, e] : factor_u64(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factor_u64(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Enumerate N = prod p^k over candidate primes taken in descending order,
// so each N is produced exactly once.
void inverse_totient_rec(std::uint64_t remaining, const std::vector<std::uint64_t>& primes, std::size_t from,
                         std::uint64_t acc, std::vector<std::uint64_t>& out) {
  if (remaining == 1) out.push_back(acc);
  for (std::size_t i = from; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (remaining % (p - 1)) continue;
    std::uint64_t rest = remaining / (p - 1);
    std::uint64_t pk = p;
    while (true) {
      inverse_totient_rec(rest, primes, i + 1, acc * pk, out);
      if (rest % p) break;
      rest /= p;
      pk *= p;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> inverse_totient(std::uint64_t value) {
  std::vector<std::uint64_t> out;
  if (value == 0) return out;
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t d : divisors(value))
    if (is_prime_u64(d + 1)) candidates.push_back(d + 1);
  std::sort(candidates.rbegin(), candidates.rend());
  inverse_totient_rec(value, candidates, 0, 1, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [&](std::uint64_t n) { return euler_phi(n) != value; });
  return out;
}

}  // namespace amt
