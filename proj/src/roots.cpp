#include "dualpair/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "dualpair/error.hpp"
#include "dualpair/numeric.hpp"

namespace dp {

namespace {

using poly::Poly;
using num::BigComplex;
using num::BigFloat;

void sort_unique(std::vector<Elem>& v) {
  std::sort(v.begin(), v.end(), [](const Elem& a, const Elem& b) { return Field::compare(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Elem random_element(const Field& S, std::mt19937_64& rng) {
  const mpz_class q = *S.cardinality();
  mpz_class idx = 0;
  const std::size_t words = mpz_sizeinbase(q.get_mpz_t(), 2) / 64 + 2;
  for (std::size_t i = 0; i < words; ++i) {
    idx <<= 64;
    idx += mpz_class(std::to_string(rng()));
  }
  return S.element_at(idx % q);
}

// g is monic and a product of distinct linear factors.
void split_linear(const Field& S, const Poly& g, std::mt19937_64& rng, std::vector<Elem>& out) {
  const long d = poly::degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(S.neg(g[0]));
    return;
  }
  const mpz_class q = *S.cardinality();
  const bool char2 = S.characteristic() == 2;
  const mpz_class half = (q - 1) / 2;
  const Poly x = poly::x_power(S, 1);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Elem a = random_element(S, rng);
    Poly h;
    if (char2) {
      // Trace of a*x from F_q down to F_2.
      Poly t = poly::rem(S, poly::scale(S, x, a), g);
      h = t;
      for (std::size_t i = 1; i < S.dim(); ++i) {
        t = poly::mulmod(S, t, t, g);
        h = poly::add(S, h, t);
      }
    } else {
      Poly base{a, S.one()};
      h = poly::sub(S, poly::powmod(S, base, half, g), poly::constant(S, S.one()));
    }
    Poly f1 = poly::gcd(S, h, g);
    const long d1 = poly::degree(f1);
    if (d1 > 0 && d1 < d) {
      split_linear(S, f1, rng, out);
      split_linear(S, poly::divmod(S, g, f1).first, rng, out);
      return;
    }
  }
  throw Error(ErrorKind::SolveFailed, "equal-degree splitting did not terminate");
}

std::vector<Elem> roots_finite(const Field& S, const Poly& f, std::uint64_t seed) {
  std::vector<Elem> out;
  const mpz_class q = *S.cardinality();
  if (q <= kExhaustiveRootSearch) {
    const unsigned long qq = q.get_ui();
    for (unsigned long k = 0; k < qq; ++k) {
      Elem e = S.element_at(k);
      if (S.is_zero(poly::eval(S, f, e))) out.push_back(std::move(e));
    }
    return out;
  }
  Poly fm = poly::monic(S, f);
  const Poly x = poly::x_power(S, 1);
  Poly g = poly::gcd(S, poly::sub(S, poly::powmod(S, x, q, fm), x), fm);
  std::mt19937_64 rng(seed);
  split_linear(S, g, rng, out);
  sort_unique(out);
  return out;
}

std::size_t bits(const mpz_class& z) { return z == 0 ? 1 : mpz_sizeinbase(z.get_mpz_t(), 2); }

mpz_class lcm_denominators(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// Determinant over Q by fraction-based elimination.
mpq_class det_q(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      mpq_class k = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= k * m[c][j];
    }
  }
  return det;
}

// Discriminant of a monic integral polynomial (coefficients low to high).
mpz_class discriminant(const std::vector<mpq_class>& h) {
  const std::size_t m = h.size() - 1;
  if (m <= 1) return 1;
  std::vector<mpq_class> dh;
  for (std::size_t i = 1; i <= m; ++i) dh.push_back(h[i] * static_cast<long>(i));
  const std::size_t dim = 2 * m - 1;
  std::vector<std::vector<mpq_class>> syl(dim, std::vector<mpq_class>(dim, 0));
  for (std::size_t r = 0; r < m - 1; ++r)
    for (std::size_t i = 0; i <= m; ++i) syl[r][r + i] = h[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < m; ++i) syl[m - 1 + r][r + i] = dh[m - 1 - i];
  mpq_class d = det_q(syl);
  return abs(d.get_num());
}

std::vector<BigComplex> roots_with_retry(const num::CPoly& f, mpfr_prec_t& prec, const std::function<num::CPoly(mpfr_prec_t)>& rebuild) {
  num::CPoly cur = f;
  for (int round = 0; round < 8; ++round) {
    std::vector<BigComplex> r;
    if (num::complex_roots(cur, prec, r)) return r;
    prec *= 2;
    cur = rebuild(prec);
  }
  throw Error(ErrorKind::PrecisionExhausted, "complex root finding did not converge");
}

std::vector<Elem> roots_rational(const Field& Q, const Poly& f) {
  Poly sf = poly::squarefree_part(Q, f);
  if (poly::degree(sf) <= 0) return {};
  std::vector<mpq_class> c;
  for (const auto& e : sf) c.push_back(e.c[0]);
  const mpz_class den = lcm_denominators(c);
  std::vector<mpz_class> F;
  for (const auto& x : c) F.push_back(mpz_class(x * den));
  const mpz_class a = abs(F.back());
  std::size_t cbits = 0;
  for (const auto& x : F) cbits = std::max(cbits, bits(x));
  mpfr_prec_t prec = std::max<mpfr_prec_t>(128, 2 * static_cast<mpfr_prec_t>(bits(a) + cbits) + 64);
  auto build = [&](mpfr_prec_t p) {
    num::CPoly cp;
    for (const auto& x : F) cp.emplace_back(p, mpq_class(x));
    return cp;
  };
  auto zs = roots_with_retry(build(prec), prec, build);
  std::vector<Elem> out;
  for (const auto& z : zs) {
    BigFloat scaled = z.re() * BigFloat(prec, mpq_class(a));
    mpq_class cand(scaled.round(), a);
    cand.canonicalize();
    Elem e{{cand}};
    if (Q.is_zero(poly::eval(Q, sf, e))) out.push_back(e);
  }
  sort_unique(out);
  return out;
}

std::vector<Elem> roots_q_extension(const Field& L, const Poly& f) {
  Poly sf = poly::squarefree_part(L, f);
  if (poly::degree(sf) <= 0) return {};
  std::vector<mpq_class> h;
  for (const auto& c : L.modulus()) h.push_back(c.c[0]);
  h.push_back(1);
  std::vector<std::vector<mpq_class>> coeffs;
  for (const auto& c : sf) coeffs.push_back(c.c);
  auto found = q_power_basis_roots(h, coeffs, [&](const std::vector<mpq_class>& r) {
    return L.is_zero(poly::eval(L, sf, Elem{r}));
  });
  std::vector<Elem> out;
  for (auto& r : found) out.push_back(Elem{std::move(r)});
  sort_unique(out);
  return out;
}

}  // namespace

// Every root r of f in Q[t]/(h) is a polynomial r(t) whose values at the
// complex roots tau_k of h are roots of the conjugate polynomials.  All
// assignments are tried; coordinates are rounded to the denominator bound
// e * disc(h') (h' the monic integral rescaling of h) and checked exactly.
std::vector<std::vector<mpq_class>> q_power_basis_roots(const std::vector<mpq_class>& h,
                                                        const std::vector<std::vector<mpq_class>>& f,
                                                        const std::function<bool(const std::vector<mpq_class>&)>& verify) {
  const std::size_t m = h.size() - 1;
  const long d = static_cast<long>(f.size()) - 1;
  if (d <= 0 || m == 0) return {};

  const mpz_class c0 = lcm_denominators(h);
  std::vector<mpq_class> hint(m + 1);
  {
    mpq_class pw = 1;
    for (std::size_t i = m + 1; i-- > 0;) {
      hint[i] = h[i] * pw;
      pw *= c0;
    }
  }
  const mpz_class disc = discriminant(hint);
  if (disc == 0) throw Error(ErrorKind::NotEtale, "defining polynomial is not squarefree");
  mpz_class e = 1;
  std::size_t cbits = bits(c0) * m + bits(disc);
  for (const auto& coef : f) {
    mpq_class pw = 1;
    for (std::size_t j = 0; j < m; ++j) {
      mpq_class v = coef[j] / pw;
      mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), v.get_den_mpz_t());
      cbits = std::max(cbits, bits(coef[j].get_num()) + bits(coef[j].get_den()));
      pw *= c0;
    }
  }
  for (const auto& x : h) cbits = std::max(cbits, bits(x.get_num()) + bits(x.get_den()));
  const mpz_class N = e * disc;

  const double combos = std::pow(static_cast<double>(d), static_cast<double>(m));
  if (combos > 2e5) throw Error(ErrorKind::DimensionCapExceeded, "too many root assignments");

  mpfr_prec_t prec = std::max<mpfr_prec_t>(256, 4 * static_cast<mpfr_prec_t>(bits(N) + cbits) + 64);
  for (int round = 0; round < 6; ++round, prec *= 2) {
    num::CPoly hp;
    for (const auto& x : h) hp.emplace_back(prec, x);
    std::vector<BigComplex> tau;
    if (!num::complex_roots(hp, prec, tau)) continue;
    std::vector<std::vector<BigComplex>> rho(m);
    bool ok = true;
    for (std::size_t k = 0; k < m && ok; ++k) {
      num::CPoly cp;
      for (const auto& coef : f) {
        BigComplex v(prec);
        BigComplex pw(prec, mpq_class(1));
        for (std::size_t j = 0; j < m; ++j) {
          v = v + pw * BigComplex(prec, coef[j]);
          pw = pw * tau[k];
        }
        cp.push_back(v);
      }
      ok = num::complex_roots(cp, prec, rho[k]) && rho[k].size() == static_cast<std::size_t>(d);
    }
    if (!ok) continue;
    // Gauss-Jordan inverse of V[k][j] = tau_k^j.
    std::vector<std::vector<BigComplex>> V(m, std::vector<BigComplex>(2 * m, BigComplex(prec)));
    for (std::size_t k = 0; k < m; ++k) {
      BigComplex pw(prec, mpq_class(1));
      for (std::size_t j = 0; j < m; ++j) {
        V[k][j] = pw;
        pw = pw * tau[k];
      }
      V[k][m + k] = BigComplex(prec, mpq_class(1));
    }
    for (std::size_t col = 0; col < m; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < m; ++r)
        if (V[r][col].norm2() > V[piv][col].norm2()) piv = r;
      std::swap(V[piv], V[col]);
      BigComplex inv = BigComplex(prec, mpq_class(1)) / V[col][col];
      for (auto& x : V[col]) x = x * inv;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == col) continue;
        BigComplex k = V[r][col];
        for (std::size_t j = 0; j < 2 * m; ++j) V[r][j] = V[r][j] - k * V[col][j];
      }
    }
    const BigFloat Nf(prec, mpq_class(N));
    std::vector<std::vector<mpq_class>> out;
    std::vector<std::size_t> idx(m, 0);
    while (true) {
      std::vector<mpq_class> cand(m);
      for (std::size_t j = 0; j < m; ++j) {
        BigComplex s(prec);
        for (std::size_t k = 0; k < m; ++k) s = s + V[j][m + k] * rho[k][idx[k]];
        cand[j] = mpq_class(mpz_class((s.re() * Nf).round()), N);
        cand[j].canonicalize();
      }
      if (verify(cand) && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(std::move(cand));
      std::size_t pos = 0;
      while (pos < m && ++idx[pos] == static_cast<std::size_t>(d)) idx[pos++] = 0;
      if (pos == m) break;
    }
    return out;
  }
  throw Error(ErrorKind::PrecisionExhausted, "complex root finding did not converge");
}

std::vector<Elem> roots_in_field(const Field& S, const Poly& f0, std::uint64_t seed) {
  Poly f = f0;
  poly::trim(S, f);
  if (f.empty()) throw Error(ErrorKind::UnsupportedRing, "roots of the zero polynomial");
  if (poly::degree(f) == 0) return {};
  if (S.is_finite()) return roots_finite(S, f, seed);
  if (S.kind() == FieldKind::Rationals) return roots_rational(S, f);
  if (S.kind() == FieldKind::Extension && S.base()->kind() == FieldKind::Rationals) return roots_q_extension(S, f);
  throw Error(ErrorKind::UnsupportedRing, "root finding over " + S.name() + " is not supported");
}

std::vector<Elem> roots_in_ring(const Field& K, const Poly& f, const Field& S, std::uint64_t seed) {
  return roots_in_field(S, poly::map_coefficients(K, S, f), seed);
}

std::size_t splitting_degree(const Field& K, const Poly& f) {
  Poly sf = poly::squarefree_part(K, f);
  if (poly::derivative(K, sf).empty() && poly::degree(sf) > 0)
    throw Error(ErrorKind::NotEtale, "inseparable polynomial " + poly::to_string(K, f));
  std::size_t m = 1;
  for (std::size_t d : poly::factor_degrees(K, sf)) m = std::lcm(m, d);
  return m;
}

FieldPtr extension_of_degree(const FieldPtr& K, std::size_t m) {
  if (m <= 1) return K;
  Poly h = poly::find_irreducible(*K, m);
  h.pop_back();
  return Field::extension(K, h);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t multiplicative_order(const Field& S, const Elem& x, std::uint64_t bound) {
  if (!S.is_one(S.pow(x, mpz_class(std::to_string(bound))))) return 0;
  std::uint64_t order = bound;
  for (std::uint64_t r : prime_factors(bound))
    while (order % r == 0 && S.is_one(S.pow(x, mpz_class(std::to_string(order / r))))) order /= r;
  return order;
}

Elem root_of_unity(const Field& S, std::uint64_t n) {
  if (!S.is_finite()) throw Error(ErrorKind::UnsupportedRing, "root_of_unity needs a finite field");
  if (n == 0) throw Error(ErrorKind::NoSuchRoot, "order 0");
  const mpz_class q1 = *S.cardinality() - 1;
  const mpz_class nn(std::to_string(n));
  if (q1 % nn != 0) throw Error(ErrorKind::NoSuchRoot, std::to_string(n) + " does not divide " + q1.get_str());
  const mpz_class e = q1 / nn;
  for (mpz_class k = 1; k <= q1; ++k) {
    Elem z = S.pow(S.element_at(k), e);
    if (multiplicative_order(S, z, n) == n) return z;
  }
  throw Error(ErrorKind::NoSuchRoot, "no element of order " + std::to_string(n));
}

FracCyclic dlog_mu(const Field& S, const Elem& zeta, const Elem& beta, std::uint64_t n) {
  Elem pw = S.one();
  for (std::uint64_t k = 0; k < n; ++k) {
    if (pw == beta) return FracCyclic(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n));
    pw = S.mul(pw, zeta);
  }
  throw Error(ErrorKind::NotInSubgroup, S.to_string(beta) + " is not a power of " + S.to_string(zeta));
}

}  // namespace dp
