#include "amt/zfactor.hpp"

#include <algorithm>
#include <stdexcept>

namespace amt {

namespace {

BigInt mod(const BigInt& c, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return r;
}

IntPolynomial reduce_coeffs(const IntPolynomial& a, const BigInt& m) {
  std::vector<BigInt> v = a.coefficients();
  for (auto& c : v) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial symmetric(const IntPolynomial& a, const BigInt& m) {
  const BigInt half = m / 2;
  std::vector<BigInt> v = a.coefficients();
  for (auto& c : v) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial mul_mod(const IntPolynomial& a, const IntPolynomial& b, const BigInt& m) {
  return reduce_coeffs(a * b, m);
}

// Division by a monic polynomial with coefficients taken modulo m.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b, const BigInt& m) {
  if (!b.is_monic()) throw std::logic_error("divmod_monic: divisor must be monic");
  std::vector<BigInt> r = reduce_coeffs(a, m).coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (r.size() <= db) return {IntPolynomial{}, IntPolynomial(std::move(r))};
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_fdiv_r(r[k + db].get_mpz_t(), r[k + db].get_mpz_t(), m.get_mpz_t());
    q[k] = r[k + db];
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), bc[j].get_mpz_t());
  }
  r.resize(db);
  return {IntPolynomial(std::move(q)), reduce_coeffs(IntPolynomial(std::move(r)), m)};
}

struct LiftNode {
  IntPolynomial poly;
  int left = -1, right = -1;
  IntPolynomial s, t;  // s*left + t*right = 1 mod current modulus
};

int build_tree(std::vector<LiftNode>& nodes, const std::vector<PrimeFieldPoly>& leaves, std::size_t lo, std::size_t hi) {
  const std::uint64_t p = leaves.front().modulus();
  if (hi - lo == 1) {
    nodes.push_back({leaves[lo].lift(), -1, -1, {}, {}});
    return static_cast<int>(nodes.size()) - 1;
  }
  const std::size_t mid = (lo + hi) / 2;
  const int l = build_tree(nodes, leaves, lo, mid);
  const int r = build_tree(nodes, leaves, mid, hi);
  const PrimeFieldPoly g = reduce_mod_p(nodes[l].poly, p);
  const PrimeFieldPoly h = reduce_mod_p(nodes[r].poly, p);
  ExtendedGcd e = extended_gcd_mod_p(g, h);
  if (!e.gcd.is_one()) throw std::logic_error("hensel_lift: modular factors are not coprime");
  nodes.push_back({(g * h).lift(), l, r, e.s.lift(), e.t.lift()});
  return static_cast<int>(nodes.size()) - 1;
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic.
void hensel_step(const IntPolynomial& f, IntPolynomial& g, IntPolynomial& h, IntPolynomial& s, IntPolynomial& t,
                 const BigInt& m2) {
  const IntPolynomial e = reduce_coeffs(f - g * h, m2);
  auto [q, r] = divmod_monic(s * e, h, m2);
  IntPolynomial g2 = reduce_coeffs(g + t * e + q * g, m2);
  IntPolynomial h2 = reduce_coeffs(h + r, m2);
  const IntPolynomial b = reduce_coeffs(s * g2 + t * h2 - IntPolynomial{1}, m2);
  auto [c, d] = divmod_monic(s * b, h2, m2);
  s = reduce_coeffs(s - d, m2);
  t = reduce_coeffs(t - t * b - c * g2, m2);
  g = std::move(g2);
  h = std::move(h2);
}

void lift_subtree(std::vector<LiftNode>& nodes, int idx, const BigInt& m2) {
  LiftNode& n = nodes[idx];
  if (n.left < 0) return;
  hensel_step(n.poly, nodes[n.left].poly, nodes[n.right].poly, n.s, n.t, m2);
  lift_subtree(nodes, n.left, m2);
  lift_subtree(nodes, n.right, m2);
}

void collect_leaves(const std::vector<LiftNode>& nodes, int idx, std::vector<IntPolynomial>& out) {
  const LiftNode& n = nodes[idx];
  if (n.left < 0) {
    out.push_back(n.poly);
    return;
  }
  collect_leaves(nodes, n.left, out);
  collect_leaves(nodes, n.right, out);
}

bool canonical_less(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (std::size_t i = ac.size(); i-- > 0;) {
    if (ac[i] != bc[i]) return ac[i] < bc[i];
  }
  return false;
}

// Subset-sum reachability of degrees from a modular degree pattern.
std::vector<bool> reachable_degrees(const std::vector<int>& pattern, int d) {
  std::vector<bool> can(static_cast<std::size_t>(d) + 1, false);
  can[0] = true;
  for (int k : pattern)
    for (int s = d; s >= k; --s)
      if (can[static_cast<std::size_t>(s - k)]) can[static_cast<std::size_t>(s)] = true;
  return can;
}

struct PrimeChoice {
  std::uint64_t prime = 0;
  bool proved_irreducible = false;
};

PrimeChoice choose_prime(const IntPolynomial& f, const ZFactorOptions& options) {
  const int d = f.degree();
  PrimeChoice best;
  std::size_t best_count = SIZE_MAX;
  std::vector<bool> possible(static_cast<std::size_t>(d) + 1, true);
  int good = 0;
  for (std::uint64_t p = 2; good < options.candidate_primes; p = next_prime(p)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    const PrimeFieldPoly fp = reduce_mod_p(f, p);
    if (!is_squarefree_mod_p(fp)) continue;
    ++good;
    if (is_irreducible_mod_p(fp)) return {p, true};
    const std::vector<int> pattern = factor_degree_pattern(fp);
    const std::vector<bool> can = reachable_degrees(pattern, d);
    bool only_trivial = true;
    for (int k = 1; k < d; ++k) {
      possible[static_cast<std::size_t>(k)] = possible[static_cast<std::size_t>(k)] && can[static_cast<std::size_t>(k)];
      if (possible[static_cast<std::size_t>(k)]) only_trivial = false;
    }
    if (only_trivial) return {p, true};
    if (pattern.size() < best_count) {
      best_count = pattern.size();
      best.prime = p;
    }
  }
  return best;
}

// Factors a primitive squarefree polynomial with positive leading
// coefficient and nonzero constant term.
std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& f, const ZFactorOptions& options) {
  if (f.degree() <= 1) return {f};
  const PrimeChoice choice = choose_prime(f, options);
  if (choice.proved_irreducible) return {f};
  const std::uint64_t p = choice.prime;

  const ModularFactorization mf = factor_mod_p(reduce_mod_p(f, p), options.seed);
  std::vector<PrimeFieldPoly> modular;
  for (const auto& fac : mf.factors) modular.push_back(fac.factor);
  if (modular.size() <= 1) return {f};

  const BigInt bound = mignotte_bound(f);
  BigInt modulus;
  const std::vector<IntPolynomial> lifted = hensel_lift(f, modular, BigInt(2 * f.leading() * bound + 1), modulus);

  std::vector<IntPolynomial> out;
  IntPolynomial rest = f;
  std::vector<std::size_t> pool(lifted.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  std::uint64_t tried = 0;

  for (std::size_t k = 1; 2 * k <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      if (++tried > options.max_subsets) throw BudgetExceeded("factor_over_Z: recombination budget exceeded");
      const BigInt& lc = rest.leading();
      // Constant-term screen before forming the full product.
      BigInt c0 = lc;
      for (std::size_t i : comb) c0 = mod(BigInt(c0 * lifted[pool[i]].coeff(0)), modulus);
      if (c0 > modulus / 2) c0 -= modulus;
      const BigInt target = lc * rest.coeff(0);
      if (c0 != 0 && mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t())) {
        IntPolynomial g = IntPolynomial::constant(lc);
        for (std::size_t i : comb) g = mul_mod(g, lifted[pool[i]], modulus);
        g = symmetric(g, modulus).primitive_part();
        IntPolynomial q;
        if (try_exact_divide(rest, g, q, bound * rest.leading())) {
          out.push_back(g);
          rest = q;
          std::vector<std::size_t> keep;
          for (std::size_t i = 0; i < pool.size(); ++i)
            if (std::find(comb.begin(), comb.end(), i) == comb.end()) keep.push_back(pool[i]);
          pool = std::move(keep);
          found = true;
          break;
        }
      }
      // Next combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == pool.size() - k + (i - 1)) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (!found) ++k;
  }
  if (rest.degree() > 0) out.push_back(rest.primitive_part());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

IntPolynomial IntFactorization::product() const {
  IntPolynomial acc = IntPolynomial::constant(content);
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) acc = acc * f.factor;
  return acc;
}

std::vector<int> IntFactorization::degrees() const {
  std::vector<int> out;
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) out.push_back(f.factor.degree());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntPolynomial> hensel_lift(const IntPolynomial& f, const std::vector<PrimeFieldPoly>& factors,
                                       const BigInt& at_least, BigInt& modulus) {
  if (factors.empty()) throw std::domain_error("hensel_lift: no factors");
  const std::uint64_t p = factors.front().modulus();
  const BigInt bp = from_u64(p);
  BigInt target = bp;
  while (target < at_least) target *= target;
  modulus = target;
  if (factors.size() == 1) {
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), f.leading().get_mpz_t(), target.get_mpz_t());
    return {reduce_coeffs(f * inv, target)};
  }

  std::vector<LiftNode> nodes;
  const int root = build_tree(nodes, factors, 0, factors.size());
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), f.leading().get_mpz_t(), target.get_mpz_t()) == 0)
    throw std::domain_error("hensel_lift: leading coefficient not invertible");
  const IntPolynomial monic_target = reduce_coeffs(f * inv, target);

  for (BigInt m = bp; m < target;) {
    const BigInt m2 = m * m;
    nodes[root].poly = reduce_coeffs(monic_target, m2);
    lift_subtree(nodes, root, m2);
    m = m2;
  }
  std::vector<IntPolynomial> out;
  collect_leaves(nodes, root, out);
  return out;
}

bool squarefree_by_reduction(const IntPolynomial& f, int primes_to_try) {
  if (f.degree() < 1) return !f.is_zero();
  int tried = 0;
  for (std::uint64_t p = 2; tried < primes_to_try; p = next_prime(p)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    ++tried;
    if (is_squarefree_mod_p(reduce_mod_p(f, p))) return true;
  }
  return false;
}

std::vector<IntFactor> squarefree_decomposition(const IntPolynomial& f0) {
  if (f0.is_zero()) throw std::domain_error("squarefree_decomposition of the zero polynomial");
  const IntPolynomial f = f0.primitive_part();
  if (f.degree() < 1) return {};
  if (squarefree_by_reduction(f)) return {{f, 1}};
  std::vector<IntFactor> out;
  const IntPolynomial fp = f.derivative();
  const IntPolynomial b = gcd(f, fp);
  IntPolynomial c = exact_divide(f, b);
  IntPolynomial d = exact_divide(fp, b) - c.derivative();
  for (unsigned i = 1; c.degree() > 0; ++i) {
    const IntPolynomial a = gcd(c, d);
    if (a.degree() > 0) out.push_back({a, i});
    c = exact_divide(c, a);
    d = exact_divide(d, a) - c.derivative();
  }
  return out;
}

IntFactorization factor_over_Z(const IntPolynomial& f, const ZFactorOptions& options) {
  if (f.is_zero()) throw std::domain_error("factor_over_Z of the zero polynomial");
  IntFactorization result;
  result.content = f.content();
  if (f.leading() < 0) result.content = -result.content;
  if (f.degree() < 1) return result;

  std::vector<std::pair<IntPolynomial, unsigned>> found;
  for (const auto& part : squarefree_decomposition(f)) {
    IntPolynomial g = part.factor;
    // Pull out powers of x so recombination can screen on constant terms.
    unsigned xs = 0;
    while (g.coeff(0) == 0) {
      g = exact_divide(g, IntPolynomial{0, 1});
      ++xs;
    }
    if (xs > 0) found.emplace_back(IntPolynomial{0, 1}, part.multiplicity);
    if (g.degree() < 1) continue;
    for (auto& irr : factor_squarefree(g, options)) found.emplace_back(std::move(irr), part.multiplicity);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return canonical_less(a.first, b.first);
  });
  for (auto& [poly, mult] : found) {
    if (!result.factors.empty() && result.factors.back().factor == poly) {
      result.factors.back().multiplicity += mult;
    } else {
      result.factors.push_back({std::move(poly), mult});
    }
  }
  return result;
}

bool is_irreducible_over_Q(const IntPolynomial& f, const ZFactorOptions& options) {
  if (f.degree() < 1) throw std::domain_error("is_irreducible_over_Q: degree must be positive");
  const IntFactorization fz = factor_over_Z(f, options);
  return fz.factors.size() == 1 && fz.factors.front().multiplicity == 1 && abs(fz.content) == 1;
}

}  // namespace amt
