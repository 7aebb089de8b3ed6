#include "amt/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace amt {

namespace {

template <typename T>
void append_term(std::ostringstream& os, const T& c, std::size_t k, bool first, const std::string& var) {
  const bool negative = c < 0;
  T mag = abs(c);
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  const bool unit = mag == 1;
  if (k == 0) {
    os << mag.get_str();
    return;
  }
  if (!unit) os << mag.get_str() << "*";
  os << var;
  if (k > 1) os << "^" << k;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t IntPolynomial::weight() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    append_term(os, coeffs_[k], k, first, "x");
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Division

bool try_exact_divide(const IntPolynomial& f, const IntPolynomial& g, IntPolynomial& quotient, const BigInt& bound) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.is_zero()) {
    quotient = {};
    return true;
  }
  if (f.degree() < g.degree()) return false;
  std::vector<BigInt> rem = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  std::vector<BigInt> q(rem.size() - dg);
  const BigInt& lc = gc.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = rem[k + dg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (bound != 0 && abs(q[k]) > bound) return false;
    for (std::size_t j = 0; j <= dg; ++j) mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), gc[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < dg; ++i)
    if (rem[i] != 0) return false;
  quotient = IntPolynomial(std::move(q));
  return true;
}

IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial q;
  if (!try_exact_divide(f, g, q)) throw std::domain_error("exact_divide: " + g.to_string() + " does not divide " + f.to_string());
  return q;
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
  if (f.degree() < g.degree()) return f;
  std::vector<BigInt> r = f.coefficients();
  const auto& gc = g.coefficients();
  const BigInt& lc = gc.back();
  const std::size_t dg = gc.size() - 1;
  int e = f.degree() - g.degree() + 1;
  for (std::size_t top = r.size(); top-- > dg;) {
    const BigInt t = r[top];
    for (auto& c : r) c *= lc;
    for (std::size_t j = 0; j <= dg; ++j) mpz_submul(r[top - dg + j].get_mpz_t(), t.get_mpz_t(), gc[j].get_mpz_t());
    --e;
  }
  // Normalize to exactly lc^(deg f - deg g + 1).
  if (e > 0) {
    BigInt s;
    mpz_pow_ui(s.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= s;
  }
  r.resize(dg);
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero()) return g.primitive_part();
  if (g.is_zero()) return f.primitive_part();
  IntPolynomial a = f.degree() >= g.degree() ? f : g;
  IntPolynomial b = f.degree() >= g.degree() ? g : f;
  BigInt d;
  BigInt ca = a.content(), cb = b.content();
  mpz_gcd(d.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = a.primitive_part();
  b = b.primitive_part();
  // Subresultant remainder sequence.
  BigInt gg = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = IntPolynomial{1};
      break;
    }
    BigInt hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    BigInt div = gg * hd;
    std::vector<BigInt> rc = r.coefficients();
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
    a = b;
    b = IntPolynomial(std::move(rc));
    gg = a.leading();
    // h <- h^(1-delta) g^delta
    BigInt gd;
    mpz_pow_ui(gd.get_mpz_t(), gg.get_mpz_t(), static_cast<unsigned long>(delta));
    if (delta == 0) {
      // h unchanged
    } else {
      BigInt hp;
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hp.get_mpz_t());
    }
  }
  IntPolynomial out = b.primitive_part();
  out *= d;
  return out;
}

// ---------------------------------------------------------------------------
// Composition

IntPolynomial compose_power(const IntPolynomial& g, long k) {
  if (k < 1) throw std::domain_error("compose_power: exponent must be at least 1");
  if (g.is_zero()) return {};
  const auto& c = g.coefficients();
  std::vector<BigInt> out((c.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(k)] = c[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial compose(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial acc;
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * g;
    acc += IntPolynomial::constant(c[i]);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Resultants

BigInt resultant_sylvester(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<BigInt>> mat(size, std::vector<BigInt>(size));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t j = 0; j <= m; ++j) mat[row][row + j] = f.coeff(m - j);
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t j = 0; j <= n; ++j) mat[n + row][row + j] = g.coeff(n - j);

  // Bareiss fraction-free elimination.
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (mat[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && mat[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        BigInt v = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mpz_divexact(mat[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      mat[i][k] = 0;
    }
    prev = mat[k][k];
  }
  BigInt det = mat[size - 1][size - 1];
  return sign < 0 ? BigInt(-det) : det;
}

BigInt resultant_subresultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  IntPolynomial a = f, b = g;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
  }
  if (b.degree() == 0) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(a.degree()));
    return s * r;
  }
  const BigInt ca = a.content(), cb = b.content();
  a = IntPolynomial(a.coefficients());
  {
    std::vector<BigInt> v = a.coefficients();
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    a = IntPolynomial(std::move(v));
    v = b.coefficients();
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    b = IntPolynomial(std::move(v));
  }
  BigInt t, tb;
  mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), static_cast<unsigned long>(b.degree()));
  mpz_pow_ui(tb.get_mpz_t(), cb.get_mpz_t(), static_cast<unsigned long>(a.degree()));
  t *= tb;
  BigInt gg = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) s = -s;
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    BigInt hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    const BigInt div = gg * hd;
    std::vector<BigInt> rc = r.coefficients();
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
    a = b;
    b = IntPolynomial(std::move(rc));
    gg = a.leading();
    if (delta > 0) {
      BigInt gd, hp;
      mpz_pow_ui(gd.get_mpz_t(), gg.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hp.get_mpz_t());
    }
    if (b.degree() == 0) {
      // h <- h^(1 - deg a) lc(b)^(deg a)
      const unsigned long da = static_cast<unsigned long>(a.degree());
      BigInt lb, hp;
      mpz_pow_ui(lb.get_mpz_t(), b.leading().get_mpz_t(), da);
      mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), da - 1);
      mpz_divexact(h.get_mpz_t(), lb.get_mpz_t(), hp.get_mpz_t());
      return s * t * h;
    }
  }
}

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  if (std::max(f.degree(), g.degree()) <= 8) return resultant_sylvester(f, g);
  return resultant_subresultant(f, g);
}

BigInt discriminant(const IntPolynomial& f) {
  if (f.degree() < 1) throw std::domain_error("discriminant of a constant polynomial");
  const long d = f.degree();
  BigInt r = resultant(f, f.derivative());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((d * (d - 1) / 2) % 2 == 1) r = -r;
  return r;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

IntPolynomial cyclotomic(std::uint64_t n) {
  if (n < 1) throw std::domain_error("cyclotomic: index must be at least 1");
  // Phi_n = prod_{d | n} (x^d - 1)^mu(n/d): multiply the numerator factors,
  // then divide out the denominator factors exactly.
  std::vector<std::uint64_t> num, den;
  for (std::uint64_t d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu == 1) num.push_back(d);
    if (mu == -1) den.push_back(d);
  }
  std::vector<BigInt> p{BigInt(1)};
  for (std::uint64_t d : num) {
    std::vector<BigInt> q(p.size() + d);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + d] += p[i];
      q[i] -= p[i];
    }
    p = std::move(q);
  }
  for (std::uint64_t d : den) {
    // p = q * (x^d - 1)  =>  q[j] = p[j + d] + q[j + d]
    const std::size_t qsize = p.size() - d;
    std::vector<BigInt> q(qsize);
    for (std::size_t j = qsize; j-- > 0;) {
      q[j] = p[j + d];
      if (j + d < qsize) q[j] += q[j + d];
    }
    p = std::move(q);
  }
  return IntPolynomial(std::move(p));
}

BigInt mignotte_bound(const IntPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("mignotte_bound of the zero polynomial");
  BigInt norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  if (root * root < norm2) root += 1;
  const unsigned long d = static_cast<unsigned long>(f.degree());
  BigInt binom;
  mpz_bin_uiui(binom.get_mpz_t(), d, d / 2);
  return binom * root;
}

// ---------------------------------------------------------------------------
// RatPolynomial

RatPolynomial::RatPolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPolynomial::RatPolynomial(const IntPolynomial& f) {
  coeffs_.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) coeffs_.emplace_back(c);
}

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial(std::vector<Rational>{c}); }

RatPolynomial RatPolynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return RatPolynomial(std::move(v));
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RatPolynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return {};
  const Rational lc = leading();
  RatPolynomial r = *this;
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Rational RatPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt RatPolynomial::denominator() const {
  BigInt l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::operator-() const {
  RatPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

std::string RatPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    append_term(os, coeffs_[k], k, first, var);
    first = false;
  }
  return os.str();
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& f, const RatPolynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.degree() < g.degree()) return {RatPolynomial{}, f};
  std::vector<Rational> r = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t dg = gc.size() - 1;
  std::vector<Rational> q(r.size() - dg);
  const Rational inv_lc = 1 / gc.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    if (r[k + dg] == 0) continue;
    q[k] = r[k + dg] * inv_lc;
    for (std::size_t j = 0; j <= dg; ++j) r[k + j] -= q[k] * gc[j];
  }
  r.resize(dg);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial remainder(const RatPolynomial& f, const RatPolynomial& g) { return divmod(f, g).second; }

RatPolynomial gcd(const RatPolynomial& f, const RatPolynomial& g) {
  RatPolynomial a = f, b = g;
  while (!b.is_zero()) {
    RatPolynomial r = remainder(a, b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace amt
