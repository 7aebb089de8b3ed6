#include "amt/prime_field.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

namespace amt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

inline u64 mulm(u64 a, u64 b, u64 p) {
  if ((p >> 32) == 0) return a * b % p;
  return static_cast<u64>(static_cast<u128>(a) * b % p);
}
inline u64 addm(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

void trim(std::vector<u64>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void check_same(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  if (a.modulus() != b.modulus()) throw std::domain_error("prime field polynomials over different moduli");
}

std::vector<u64> multiply(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size() + b.size() - 1;
  std::vector<u64> out(n);
  if ((p >> 32) == 0) {
    // Products fit in 64 bits; accumulate in 128 bits and reduce once.
    std::vector<u128> acc(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      const u64 ai = a[i];
      for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<u128>(ai * b[j]);
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<u64>(acc[k] % p);
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = addm(out[i + j], mulm(a[i], b[j], p), p);
    }
  }
  trim(out);
  return out;
}

// Reduces r modulo f in place (f nonzero), visiting only f's nonzero terms.
// If quotient is non-null it receives the quotient.
void reduce(std::vector<u64>& r, const PrimeFieldPoly& f, std::vector<u64>* quotient = nullptr) {
  const u64 p = f.modulus();
  const auto& fc = f.coefficients();
  const std::size_t df = fc.size() - 1;
  if (quotient) quotient->assign(r.size() > df ? r.size() - df : 0, 0);
  if (r.size() <= df) {
    trim(r);
    return;
  }
  const u64 inv = mod_inverse(fc.back(), p);
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < df; ++j)
    if (fc[j]) support.push_back(j);
  for (std::size_t top = r.size(); top-- > df;) {
    const u64 t = r[top];
    if (!t) continue;
    const u64 q = fc.back() == 1 ? t : mulm(t, inv, p);
    if (quotient) (*quotient)[top - df] = q;
    const std::size_t shift = top - df;
    for (std::size_t j : support) r[shift + j] = subm(r[shift + j], mulm(q, fc[j], p), p);
    r[top] = 0;
  }
  r.resize(df);
  trim(r);
}

}  // namespace

u64 mod_inverse(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw std::domain_error("mod_inverse: zero has no inverse");
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::domain_error("mod_inverse: not invertible");
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

// ---------------------------------------------------------------------------
// PrimeFieldPoly

PrimeFieldPoly::PrimeFieldPoly(u64 p, std::vector<u64> ascending) : p_(p), c_(std::move(ascending)) {
  if (p < 2) throw std::domain_error("PrimeFieldPoly: modulus must be at least 2");
  for (auto& c : c_) c %= p;
  trim(c_);
}

PrimeFieldPoly PrimeFieldPoly::monomial(u64 p, u64 c, std::size_t k) {
  std::vector<u64> v(k + 1);
  v[k] = c;
  return PrimeFieldPoly(p, std::move(v));
}

std::size_t PrimeFieldPoly::weight() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](u64 c) { return c != 0; }));
}

PrimeFieldPoly PrimeFieldPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  return scale(*this, mod_inverse(leading(), p_));
}

PrimeFieldPoly PrimeFieldPoly::derivative() const {
  if (c_.size() <= 1) return zero(p_);
  std::vector<u64> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = mulm(c_[i], i % p_, p_);
  return PrimeFieldPoly(p_, std::move(out));
}

u64 PrimeFieldPoly::evaluate(u64 x) const {
  u64 acc = 0;
  x %= p_;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addm(mulm(acc, x, p_), *it, p_);
  return acc;
}

IntPolynomial PrimeFieldPoly::lift() const {
  std::vector<BigInt> v;
  v.reserve(c_.size());
  for (u64 c : c_) v.push_back(from_u64(c));
  return IntPolynomial(std::move(v));
}

bool operator<(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string PrimeFieldPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (!c_[k]) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c_[k] != 1) os << c_[k];
    if (k > 0 && c_[k] != 1) os << "*";
    if (k > 0) os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Arithmetic

PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  check_same(a, b);
  const u64 p = a.modulus();
  std::vector<u64> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = addm(a.coeff(i), b.coeff(i), p);
  return PrimeFieldPoly(p, std::move(out));
}

PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  check_same(a, b);
  const u64 p = a.modulus();
  std::vector<u64> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = subm(a.coeff(i), b.coeff(i), p);
  return PrimeFieldPoly(p, std::move(out));
}

PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  check_same(a, b);
  return PrimeFieldPoly(a.modulus(), multiply(a.coefficients(), b.coefficients(), a.modulus()));
}

PrimeFieldPoly scale(const PrimeFieldPoly& a, u64 c) {
  std::vector<u64> out = a.coefficients();
  for (auto& x : out) x = mulm(x, c % a.modulus(), a.modulus());
  return PrimeFieldPoly(a.modulus(), std::move(out));
}

std::pair<PrimeFieldPoly, PrimeFieldPoly> divmod(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<u64> r = a.coefficients();
  std::vector<u64> q;
  reduce(r, b, &q);
  return {PrimeFieldPoly(a.modulus(), std::move(q)), PrimeFieldPoly(a.modulus(), std::move(r))};
}

PrimeFieldPoly remainder(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<u64> r = a.coefficients();
  reduce(r, b);
  return PrimeFieldPoly(a.modulus(), std::move(r));
}

PrimeFieldPoly exact_quotient(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_quotient: nonzero remainder");
  return q;
}

PrimeFieldPoly mulmod(const PrimeFieldPoly& a, const PrimeFieldPoly& b, const PrimeFieldPoly& m) {
  check_same(a, b);
  std::vector<u64> r = multiply(a.coefficients(), b.coefficients(), a.modulus());
  reduce(r, m);
  return PrimeFieldPoly(a.modulus(), std::move(r));
}

PrimeFieldPoly powmod(const PrimeFieldPoly& base, const BigInt& e, const PrimeFieldPoly& m) {
  if (e < 0) throw std::domain_error("powmod: negative exponent");
  PrimeFieldPoly result = remainder(PrimeFieldPoly::one(base.modulus()), m);
  PrimeFieldPoly b = remainder(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, m);
  }
  return result;
}

PrimeFieldPoly gcd_mod_p(const PrimeFieldPoly& f, const PrimeFieldPoly& g) {
  check_same(f, g);
  PrimeFieldPoly a = f, b = g;
  while (!b.is_zero()) {
    PrimeFieldPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd_mod_p(const PrimeFieldPoly& f, const PrimeFieldPoly& g) {
  check_same(f, g);
  const u64 p = f.modulus();
  PrimeFieldPoly r0 = f, r1 = g;
  PrimeFieldPoly s0 = PrimeFieldPoly::one(p), s1 = PrimeFieldPoly::zero(p);
  PrimeFieldPoly t0 = PrimeFieldPoly::zero(p), t1 = PrimeFieldPoly::one(p);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    PrimeFieldPoly s = s0 - q * s1;
    PrimeFieldPoly t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const u64 inv = mod_inverse(r0.leading(), p);
  return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

PrimeFieldPoly reduce_mod_p(const IntPolynomial& f, const BigInt& p) {
  if (!is_prime(p)) throw std::domain_error("reduce_mod_p: " + p.get_str() + " is not prime");
  if (p >= BigInt(1) << 63) throw std::domain_error("reduce_mod_p: modulus too large");
  return reduce_mod_p(f, to_u64(p));
}

PrimeFieldPoly reduce_mod_p(const IntPolynomial& f, u64 p) {
  std::vector<u64> out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  return PrimeFieldPoly(p, std::move(out));
}

// ---------------------------------------------------------------------------
// Frobenius

FrobeniusMap::FrobeniusMap(const PrimeFieldPoly& f) : f_(f.monic()) {
  if (f_.degree() < 1) throw std::domain_error("FrobeniusMap: modulus must have positive degree");
  const u64 p = f_.modulus();
  const double d = f_.degree();
  const double w = static_cast<double>(f_.weight());
  const double pd = static_cast<double>(p);
  const double uses = d;
  const double logp = std::log2(pd) + 1;
  const double cost_substitute = uses * (d - 1) * pd * w;
  const double row_cost = std::min(pd * w, d * d + d * w);
  const double cost_matrix = d * row_cost + uses * d * d;
  const double cost_power = uses * logp * 1.5 * (d * d + d * w);

  if (cost_substitute <= cost_matrix && cost_substitute <= cost_power) {
    strategy_ = Strategy::substitute;
  } else if (cost_matrix <= cost_power) {
    strategy_ = Strategy::matrix;
  } else {
    strategy_ = Strategy::power;
  }

  if (strategy_ == Strategy::substitute) {
    std::vector<u64> v(static_cast<std::size_t>(p) + 1);
    v[p] = 1;
    reduce(v, f_);
    xp_ = PrimeFieldPoly(p, std::move(v));
  } else {
    xp_ = powmod(PrimeFieldPoly::x(p), from_u64(p), f_);
  }

  if (strategy_ == Strategy::matrix) {
    const std::size_t n = static_cast<std::size_t>(f_.degree());
    rows_.resize(n);
    std::vector<u64> row{1};
    const bool shift = pd * w < d * d + d * w;
    for (std::size_t i = 0; i < n; ++i) {
      rows_[i] = row;
      rows_[i].resize(n, 0);
      if (i + 1 == n) break;
      if (shift) {
        std::vector<u64> next(row.size() + static_cast<std::size_t>(p), 0);
        std::copy(row.begin(), row.end(), next.begin() + static_cast<std::ptrdiff_t>(p));
        reduce(next, f_);
        row = std::move(next);
      } else {
        row = multiply(row, xp_.coefficients(), p);
        reduce(row, f_);
      }
    }
  }
}

PrimeFieldPoly FrobeniusMap::apply(const PrimeFieldPoly& h0) const {
  check_same(h0, f_);
  const u64 p = f_.modulus();
  PrimeFieldPoly h = h0.degree() >= f_.degree() ? remainder(h0, f_) : h0;
  switch (strategy_) {
    case Strategy::substitute: {
      // Over F_p, h(x)^p = h(x^p).
      const auto& c = h.coefficients();
      if (c.empty()) return h;
      std::vector<u64> v((c.size() - 1) * static_cast<std::size_t>(p) + 1, 0);
      for (std::size_t i = 0; i < c.size(); ++i) v[i * static_cast<std::size_t>(p)] = c[i];
      reduce(v, f_);
      return PrimeFieldPoly(p, std::move(v));
    }
    case Strategy::matrix: {
      const std::size_t n = rows_.size();
      std::vector<u64> out(n, 0);
      const auto& c = h.coefficients();
      if ((p >> 32) == 0) {
        std::vector<u128> acc(n, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (!c[i]) continue;
          const auto& row = rows_[i];
          for (std::size_t j = 0; j < n; ++j) acc[j] += static_cast<u128>(c[i] * row[j]);
        }
        for (std::size_t j = 0; j < n; ++j) out[j] = static_cast<u64>(acc[j] % p);
      } else {
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (!c[i]) continue;
          for (std::size_t j = 0; j < n; ++j) out[j] = addm(out[j], mulm(c[i], rows_[i][j], p), p);
        }
      }
      return PrimeFieldPoly(p, std::move(out));
    }
    case Strategy::power:
    default:
      return powmod(h, from_u64(p), f_);
  }
}

// ---------------------------------------------------------------------------
// Factorization

PrimeFieldPoly ModularFactorization::product() const {
  PrimeFieldPoly acc(modulus, {unit});
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) acc = acc * f.factor;
  return acc;
}

std::vector<int> ModularFactorization::degrees() const {
  std::vector<int> out;
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) out.push_back(f.factor.degree());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

PrimeFieldPoly pth_root(const PrimeFieldPoly& f) {
  const u64 p = f.modulus();
  const auto& c = f.coefficients();
  std::vector<u64> out(c.size() / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); i += p) out[i / p] = c[i];
  return PrimeFieldPoly(p, std::move(out));
}

void sfd(const PrimeFieldPoly& f, unsigned scale_by, std::vector<ModFactor>& out) {
  if (f.degree() < 1) return;
  const u64 p = f.modulus();
  PrimeFieldPoly c = gcd_mod_p(f, f.derivative());
  PrimeFieldPoly w = exact_quotient(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    PrimeFieldPoly y = gcd_mod_p(w, c);
    PrimeFieldPoly z = exact_quotient(w, y);
    if (z.degree() > 0) out.push_back({z, i * scale_by});
    ++i;
    w = std::move(y);
    c = exact_quotient(c, w);
  }
  if (c.degree() > 0) sfd(pth_root(c), scale_by * static_cast<unsigned>(p), out);
}

PrimeFieldPoly random_poly(u64 p, int below_degree, std::mt19937_64& rng) {
  std::vector<u64> c(static_cast<std::size_t>(below_degree));
  for (auto& x : c) x = rng() % p;
  return PrimeFieldPoly(p, std::move(c));
}

void edf(const PrimeFieldPoly& f, int d, std::mt19937_64& rng, std::vector<PrimeFieldPoly>& out) {
  if (f.degree() <= d) {
    if (f.degree() > 0) out.push_back(f);
    return;
  }
  const u64 p = f.modulus();
  FrobeniusMap frob(f);
  const PrimeFieldPoly one = PrimeFieldPoly::one(p);
  while (true) {
    PrimeFieldPoly h = random_poly(p, f.degree(), rng);
    if (h.degree() < 1) continue;
    PrimeFieldPoly g;
    if (p == 2) {
      // Trace of h from F_{2^d} down to F_2.
      PrimeFieldPoly t = h, acc = h;
      for (int i = 1; i < d; ++i) {
        t = frob.apply(t);
        acc = acc + t;
      }
      g = gcd_mod_p(acc, f);
    } else {
      // h^((p^d - 1)/2) = (h^(1 + p + ... + p^(d-1)))^((p-1)/2)
      PrimeFieldPoly t = h, acc = h;
      for (int i = 1; i < d; ++i) {
        t = frob.apply(t);
        acc = mulmod(acc, t, f);
      }
      acc = powmod(acc, from_u64((p - 1) / 2), f);
      g = gcd_mod_p(acc - one, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf(g, d, rng, out);
      edf(exact_quotient(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModFactor> squarefree_decomposition(const PrimeFieldPoly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_decomposition of the zero polynomial");
  std::vector<ModFactor> out;
  sfd(f.monic(), 1, out);
  std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

std::vector<std::pair<PrimeFieldPoly, int>> distinct_degree_factorization(const PrimeFieldPoly& f0) {
  std::vector<std::pair<PrimeFieldPoly, int>> out;
  PrimeFieldPoly f = f0.monic();
  if (f.degree() < 1) return out;
  const u64 p = f.modulus();
  const PrimeFieldPoly x = PrimeFieldPoly::x(p);
  auto frob = std::make_unique<FrobeniusMap>(f);
  PrimeFieldPoly h = remainder(x, f);
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = frob->apply(h);
    PrimeFieldPoly g = gcd_mod_p(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = exact_quotient(f, g);
      if (f.degree() < 1) break;
      h = remainder(h, f);
      frob = std::make_unique<FrobeniusMap>(f);
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<PrimeFieldPoly> equal_degree_factorization(const PrimeFieldPoly& f, int d, u64 seed) {
  std::mt19937_64 rng(seed);
  std::vector<PrimeFieldPoly> out;
  edf(f.monic(), d, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_squarefree_mod_p(const PrimeFieldPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() < 1) return true;
  return gcd_mod_p(f, f.derivative()).degree() == 0;
}

bool is_irreducible_mod_p(const PrimeFieldPoly& f0) {
  if (f0.degree() < 1) throw std::domain_error("is_irreducible_mod_p: degree must be positive");
  const PrimeFieldPoly f = f0.monic();
  const int n = f.degree();
  if (n == 1) return true;
  const u64 p = f.modulus();
  const PrimeFieldPoly x = PrimeFieldPoly::x(p);
  std::vector<int> checkpoints;
  for (const auto& [q, e] : factor_u64(static_cast<u64>(n))) checkpoints.push_back(n / static_cast<int>(q));
  FrobeniusMap frob(f);
  PrimeFieldPoly h = remainder(x, f);
  for (int i = 1; i <= n; ++i) {
    h = frob.apply(h);
    if (std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
      if (gcd_mod_p(h - x, f).degree() > 0) return false;
    }
  }
  return h == remainder(x, f);
}

std::vector<int> factor_degree_pattern(const PrimeFieldPoly& f) {
  std::vector<int> out;
  for (const auto& [g, d] : distinct_degree_factorization(f))
    for (int k = 0; k < g.degree() / d; ++k) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

ModularFactorization factor_mod_p(const PrimeFieldPoly& f, u64 seed) {
  if (f.is_zero()) throw std::domain_error("factor_mod_p of the zero polynomial");
  ModularFactorization out;
  out.modulus = f.modulus();
  out.unit = f.leading();
  u64 stream = seed;
  for (const auto& part : squarefree_decomposition(f)) {
    for (const auto& [g, d] : distinct_degree_factorization(part.factor)) {
      for (auto& irr : equal_degree_factorization(g, d, stream++)) out.factors.push_back({std::move(irr), part.multiplicity});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const ModFactor& a, const ModFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  return out;
}

}  // namespace amt
