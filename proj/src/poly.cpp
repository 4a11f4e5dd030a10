#include "dualpair/poly.hpp"

#include <sstream>

#include "dualpair/error.hpp"

namespace dp::poly {

void trim(const Field& F, Poly& f) {
  while (!f.empty() && F.is_zero(f.back())) f.pop_back();
}

long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }

bool is_zero(const Poly& f) { return f.empty(); }

Poly constant(const Field& F, const Elem& c) {
  Poly f{c};
  trim(F, f);
  return f;
}

Poly linear(const Field& F, const Elem& r) { return Poly{F.neg(r), F.one()}; }

Poly x_power(const Field& F, std::size_t k) {
  Poly f(k + 1, F.zero());
  f[k] = F.one();
  return f;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(F, r);
  return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(F, r);
  return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.fma(r[i + j], a[i], b[j]);
  }
  trim(F, r);
  return r;
}

Poly scale(const Field& F, const Poly& a, const Elem& c) {
  Poly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(F.mul(x, c));
  trim(F, r);
  return r;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw Error(ErrorKind::NotInvertible, "polynomial division by zero");
  Poly r = a;
  trim(F, r);
  if (r.size() < b.size()) return {{}, r};
  const Elem lc_inv = F.inv(b.back());
  const bool is_monic = F.is_one(b.back());
  Poly q(r.size() - b.size() + 1, F.zero());
  for (std::size_t k = r.size(); k-- >= b.size();) {
    if (F.is_zero(r[k])) continue;
    Elem c = is_monic ? r[k] : F.mul(r[k], lc_inv);
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
  }
  trim(F, q);
  trim(F, r);
  return {q, r};
}

Poly rem(const Field& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly monic(const Field& F, const Poly& a) {
  if (a.empty() || F.is_one(a.back())) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly gcd(const Field& F, Poly a, Poly b) {
  trim(F, a);
  trim(F, b);
  while (!b.empty()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

XGcd xgcd(const Field& F, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  trim(F, r0);
  trim(F, r1);
  Poly s0 = constant(F, F.one()), s1;
  Poly t0, t1 = constant(F, F.one());
  while (!r1.empty()) {
    auto [q, r] = divmod(F, r0, r1);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    Poly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  Elem c = F.inv(r0.back());
  return {scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)};
}

Poly derivative(const Field& F, const Poly& f) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(f[i], F.from_int(static_cast<long>(i))));
  trim(F, d);
  return d;
}

Elem eval(const Field& F, const Poly& f, const Elem& x) {
  Elem acc = F.zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = F.fma(f[i], acc, x);
  return acc;
}

Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
  return rem(F, mul(F, a, b), m);
}

Poly powmod(const Field& F, const Poly& a, const mpz_class& e, const Poly& m) {
  if (e < 0) throw Error(ErrorKind::NotInvertible, "negative exponent in powmod");
  Poly result = rem(F, constant(F, F.one()), m);
  Poly base = rem(F, a, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(F, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(F, result, base, m);
  }
  return result;
}

Poly from_roots(const Field& F, const std::vector<Elem>& roots) {
  Poly f = constant(F, F.one());
  for (const auto& r : roots) f = mul(F, f, linear(F, r));
  return f;
}

Poly squarefree_part(const Field& F, const Poly& f) {
  Poly d = derivative(F, f);
  if (d.empty()) return monic(F, f);
  Poly g = gcd(F, f, d);
  return monic(F, divmod(F, f, g).first);
}

Poly map_coefficients(const Field& from, const Field& to, const Poly& f) {
  Poly r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(to.map_from(from, c));
  trim(to, r);
  return r;
}

namespace {

mpz_class field_size(const Field& F) {
  auto c = F.cardinality();
  if (!c) throw Error(ErrorKind::UnsupportedRing, "finite field required");
  return *c;
}

}  // namespace

bool is_irreducible(const Field& F, const Poly& f0) {
  Poly f = monic(F, f0);
  const long d = degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const mpz_class q = field_size(F);
  const Poly x = x_power(F, 1);
  Poly h = x;
  for (long i = 1; i <= d; ++i) {
    h = powmod(F, h, q, f);
    Poly g = gcd(F, sub(F, h, x), f);
    if (i < d && degree(g) != 0) return false;
    if (i == d) return degree(g) == d;
  }
  return false;
}

std::vector<std::size_t> factor_degrees(const Field& F, const Poly& f0) {
  std::vector<std::size_t> out;
  Poly f = monic(F, f0);
  const mpz_class q = field_size(F);
  const Poly x = x_power(F, 1);
  Poly h = rem(F, x, f);
  for (std::size_t i = 1; degree(f) >= static_cast<long>(2 * i); ++i) {
    h = powmod(F, h, q, f);
    Poly g = gcd(F, sub(F, h, x), f);
    if (degree(g) > 0) {
      for (long k = 0; k < degree(g) / static_cast<long>(i); ++k) out.push_back(i);
      f = divmod(F, f, g).first;
      h = rem(F, h, f);
    }
  }
  if (degree(f) > 0) out.push_back(static_cast<std::size_t>(degree(f)));
  return out;
}

Poly find_irreducible(const Field& F, std::size_t d) {
  const mpz_class q = field_size(F);
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), q.get_mpz_t(), d);
  // A zero constant term makes f divisible by x, so those candidates (the
  // first q^(d-1) in this order) are skipped.
  mpz_class start = 0;
  if (d > 1) mpz_pow_ui(start.get_mpz_t(), q.get_mpz_t(), d - 1);
  for (mpz_class k = start; k < total; ++k) {
    // Digits of k in base q; the constant term is the most significant one.
    Poly f(d + 1, F.zero());
    mpz_class rest = k;
    for (std::size_t i = d; i-- > 0;) {
      mpz_class digit = rest % q;
      rest /= q;
      f[i] = F.element_at(digit);
    }
    f[d] = F.one();
    if (is_irreducible(F, f)) return f;
  }
  throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

std::string to_string(const Field& F, const Poly& f, const char* var) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (F.is_zero(f[i])) continue;
    std::string c = F.to_string(f[i]);
    const bool composite = F.kind() == FieldKind::Extension && c.find_first_of("+-", 1) != std::string::npos;
    if (composite) c = "(" + c + ")";
    if (!first) {
      if (c[0] == '-') {
        os << " - ";
        c.erase(0, 1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c == "-1") os << "-";
    else if (c != "1") os << c << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace dp::poly
