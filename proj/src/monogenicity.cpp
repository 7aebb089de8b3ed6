#include "amt/monogenicity.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace amt {

namespace {

BigInt pow_big(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

PrimeFieldPoly product_of(const ModularFactorization& fac, bool reduced_multiplicity) {
  PrimeFieldPoly out = PrimeFieldPoly::one(fac.modulus);
  for (const auto& mf : fac.factors) {
    const unsigned e = reduced_multiplicity ? mf.multiplicity - 1 : 1;
    for (unsigned i = 0; i < e; ++i) out = out * mf.factor;
  }
  return out;
}

PrimeFieldPoly residue_t(const IntPolynomial& f, const IntPolynomial& g, const IntPolynomial& h, std::uint64_t p) {
  const IntPolynomial diff = g * h - f;
  std::vector<BigInt> c = diff.coefficients();
  const BigInt bp = from_u64(p);
  for (auto& v : c) {
    if (mpz_divisible_p(v.get_mpz_t(), bp.get_mpz_t()) == 0)
      throw std::logic_error("dedekind: g*h - f not divisible by p");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), bp.get_mpz_t());
  }
  return reduce_mod_p(IntPolynomial(std::move(c)), p);
}

void require_monic(const IntPolynomial& f, const char* who) {
  if (f.degree() < 1 || !f.is_monic()) throw std::domain_error(std::string(who) + ": polynomial must be monic of degree >= 1");
}

}  // namespace

Trinomial::Trinomial(std::uint64_t n, BigInt a, BigInt b) : n_(n), a_(std::move(a)), b_(std::move(b)) {
  if (n_ < 1) throw std::domain_error("Trinomial: n must be at least 1");
  if (a_ == 0 || b_ == 0) throw std::domain_error("Trinomial: a and b must be nonzero");
  m_ = n_;
  while (m_ % 2 == 0) {
    m_ /= 2;
    ++r_;
  }
  while (m_ % 3 == 0) {
    m_ /= 3;
    ++s_;
  }
  for (const auto& [p, e] : factor_u64(n_)) rad_ *= p;
  const BigInt d = quadratic_discriminant();
  if (mpz_even_p(a_.get_mpz_t())) {
    if (mpz_divisible_ui_p(d.get_mpz_t(), 4) == 0) throw std::logic_error("Trinomial: W is not integral");
    w_ = d / 4;
  } else {
    w_ = d;
  }
}

IntPolynomial Trinomial::polynomial() const {
  std::vector<BigInt> c(2 * n_ + 1, BigInt(0));
  c[0] = b_;
  c[n_] = a_;
  c[2 * n_] = 1;
  return IntPolynomial(std::move(c));
}

std::string Trinomial::to_string() const {
  std::ostringstream os;
  os << "(" << n_ << ", " << a_.get_str() << ", " << b_.get_str() << ")";
  return os.str();
}

const char* to_string(DiscriminantMethod m) {
  switch (m) {
    case DiscriminantMethod::closed_form: return "closed-form";
    case DiscriminantMethod::resultant: return "resultant";
    case DiscriminantMethod::both_agree: return "both-agree";
  }
  return "?";
}

DiscriminantReport trinomial_discriminant(const Trinomial& t, int cross_check_degree) {
  const std::uint64_t n = t.n();
  const BigInt d = t.quadratic_discriminant();
  DiscriminantReport rep;
  rep.value = pow_big(from_u64(n), 2 * n) * pow_big(t.b(), n - 1) * pow_big(d, n);

  if (d != 0) {
    std::map<BigInt, unsigned long> exps;
    const std::pair<BigInt, unsigned long> parts[] = {{from_u64(n), 2 * n}, {t.b(), n - 1}, {d, n}};
    for (const auto& [v, mult] : parts) {
      const FactoredInteger fi = factor_integer(v);
      for (const auto& pp : fi.factors()) exps[pp.prime] += mult * pp.exponent;
    }
    std::vector<PrimePower> pps;
    for (const auto& [p, e] : exps)
      if (e > 0) pps.push_back({p, e});
    rep.magnitude_factored = FactoredInteger(1, std::move(pps));
  }

  if (2 * static_cast<long long>(n) <= cross_check_degree) {
    const BigInt via_resultant = discriminant(t.polynomial());
    if (via_resultant != rep.value)
      throw std::logic_error("trinomial_discriminant: closed form disagrees with resultant for " + t.to_string());
    rep.computed_by = DiscriminantMethod::both_agree;
  }
  return rep;
}

unsigned long trinomial_discriminant_valuation(const Trinomial& t, const BigInt& p) {
  const BigInt d = t.quadratic_discriminant();
  if (d == 0) throw std::domain_error("trinomial_discriminant_valuation: discriminant is zero");
  const std::uint64_t n = t.n();
  return 2 * n * valuation(from_u64(n), p) + (n - 1) * valuation(t.b(), p) + n * valuation(d, p);
}

bool DedekindVerdict::replay(const IntPolynomial& f) const {
  if (reduction.product() != reduce_mod_p(f, prime)) return false;
  const PrimeFieldPoly gbar = product_of(reduction, false);
  const PrimeFieldPoly hbar = product_of(reduction, true);
  if (gbar.lift() != g || hbar.lift() != h) return false;
  const PrimeFieldPoly t = residue_t(f, g, h, prime);
  if (t != t_bar) return false;
  const PrimeFieldPoly d = gcd_mod_p(gcd_mod_p(t, gbar), hbar);
  return d == gcd && (d.degree() >= 1) == divides_index;
}

DedekindVerdict dedekind_divides_index(const IntPolynomial& f, const BigInt& p) {
  require_monic(f, "dedekind_divides_index");
  if (!is_prime(p) || !fits_u64(p)) throw std::domain_error("dedekind_divides_index: p must be a machine-size prime");
  DedekindVerdict v;
  v.prime = to_u64(p);
  v.reduction = factor_mod_p(reduce_mod_p(f, v.prime));
  const PrimeFieldPoly gbar = product_of(v.reduction, false);
  const PrimeFieldPoly hbar = product_of(v.reduction, true);
  v.g = gbar.lift();
  v.h = hbar.lift();
  v.t_bar = residue_t(f, v.g, v.h, v.prime);
  v.gcd = gcd_mod_p(gcd_mod_p(v.t_bar, gbar), hbar);
  v.divides_index = v.gcd.degree() >= 1;
  return v;
}

MonogenicityResult is_monogenic(const IntPolynomial& f, const MonogenicityOptions& options) {
  require_monic(f, "is_monogenic");
  if (options.check_irreducible && !is_irreducible_over_Q(f, options.factor_options))
    throw std::domain_error("is_monogenic: polynomial is reducible");
  const BigInt disc = discriminant(f);
  if (disc == 0) throw std::domain_error("is_monogenic: polynomial is not squarefree");
  MonogenicityResult res;
  res.monogenic = true;
  const FactoredInteger disc_factored = factor_integer(disc, options.integer_budget);
  for (const auto& pp : disc_factored.factors()) {
    if (pp.exponent < 2) continue;
    res.certificate.push_back(dedekind_divides_index(f, pp.prime));
    if (res.certificate.back().divides_index) res.monogenic = false;
  }
  return res;
}

MonogenicityResult is_monogenic(const Trinomial& t, const MonogenicityOptions& options) {
  const IntPolynomial f = t.polynomial();
  if (options.check_irreducible && !is_irreducible_over_Q(f, options.factor_options))
    throw std::domain_error("is_monogenic: polynomial is reducible");
  const BigInt d = t.quadratic_discriminant();
  if (d == 0) throw std::domain_error("is_monogenic: polynomial is not squarefree");

  std::vector<BigInt> candidates;
  for (const BigInt& v : {from_u64(t.n()), BigInt(abs(t.b())), BigInt(abs(d))})
    if (v > 1)
      for (const auto& p : factor_integer(v, options.integer_budget).primes()) candidates.push_back(p);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  MonogenicityResult res;
  res.monogenic = true;
  for (const auto& p : candidates) {
    if (trinomial_discriminant_valuation(t, p) < 2) continue;
    res.certificate.push_back(dedekind_divides_index(f, p));
    if (res.certificate.back().divides_index) res.monogenic = false;
  }
  return res;
}

KkrResult kkr_monogenic(const Trinomial& t, const MonogenicityOptions& options) {
  if (t.m() != 1) throw std::domain_error("kkr_monogenic: n must have the form 2^r 3^s");
  if (t.k() == 1) throw std::domain_error("kkr_monogenic: n must not be squarefree");
  const IntPolynomial f = t.polynomial();
  if (options.check_irreducible && !is_irreducible_over_Q(f, options.factor_options))
    throw std::domain_error("kkr_monogenic: polynomial is reducible");

  KkrResult res;
  res.b_squarefree = is_squarefree(t.b());

  res.index_coprime_to_k = true;
  for (std::uint64_t q : {2u, 3u}) {
    if (t.k() % q != 0) continue;
    res.certificate.push_back(dedekind_divides_index(f, BigInt(static_cast<unsigned long>(q))));
    if (res.certificate.back().divides_index) res.index_coprime_to_k = false;
  }

  MonogenicityOptions inner = options;
  inner.check_irreducible = false;  // F_n = F_{rad(n)}(x^k) is irreducible, so F_{rad(n)} is too
  const MonogenicityResult rad = is_monogenic(t.with_n(t.rad_n()), inner);
  res.radical_monogenic = rad.monogenic;
  res.certificate.insert(res.certificate.end(), rad.certificate.begin(), rad.certificate.end());

  res.monogenic = res.b_squarefree && res.index_coprime_to_k && res.radical_monogenic;
  if (!res.b_squarefree) {
    res.first_failing = 1;
    res.reason = "b is not squarefree";
  } else if (!res.index_coprime_to_k) {
    res.first_failing = 2;
    res.reason = "a prime divisor of k divides the index";
  } else if (!res.radical_monogenic) {
    res.first_failing = 3;
    res.reason = "F_{rad(n),a,b} is not monogenic";
  } else {
    res.reason = "all conditions hold";
  }
  return res;
}

}  // namespace amt
