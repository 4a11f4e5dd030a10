#include "dualpair/field.hpp"

#include <regex>
#include <sstream>

#include "dualpair/error.hpp"
#include "dualpair/poly.hpp"

namespace dp {

namespace {

std::vector<Elem> chunks_of(const Field& base, std::size_t d, const Elem& a) {
  const std::size_t bd = base.dim();
  std::vector<Elem> parts(d);
  for (std::size_t i = 0; i < d; ++i)
    parts[i].c.assign(a.c.begin() + static_cast<long>(i * bd), a.c.begin() + static_cast<long>((i + 1) * bd));
  return parts;
}

const char* tower_var(const Field& F) {
  static const char* names[] = {"t", "u", "v", "w"};
  std::size_t depth = 0;
  for (const Field* f = F.base().get(); f && f->kind() == FieldKind::Extension; f = f->base().get()) ++depth;
  return depth < 4 ? names[depth] : "s";
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  // GMP runs trial division, a Baillie-PSW test and then extra Miller-Rabin
  // rounds; BPSW has no known counterexample and is proven below 2^64.
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

FieldPtr Field::rationals() {
  static const FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Rationals;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::prime_field(const mpz_class& p) {
  if (!is_prime(p)) throw Error(ErrorKind::CompositeModulus, p.get_str() + " is not prime");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::PrimeField;
  f->characteristic_ = p;
  return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Elem> modulus) {
  if (modulus.empty()) throw Error(ErrorKind::ZeroDegreeModulus, "extension modulus has degree 0");
  for (const auto& c : modulus)
    if (c.c.size() != base->dim()) throw Error(ErrorKind::Parse, "modulus coefficient has wrong length");
  if (base->is_finite()) {
    poly::Poly h = modulus;
    h.push_back(base->one());
    if (!poly::is_irreducible(*base, h))
      throw Error(ErrorKind::ReducibleModulus, poly::to_string(*base, h, "t") + " is reducible over " + base->name());
  }
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Extension;
  f->characteristic_ = base->characteristic();
  f->dim_ = base->dim() * modulus.size();
  f->modulus_ = std::move(modulus);
  f->base_ = std::move(base);
  return f;
}

std::optional<mpz_class> Field::cardinality() const {
  if (!is_finite()) return std::nullopt;
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), characteristic_.get_mpz_t(), dim_);
  return q;
}

FieldPtr Field::prime_field() const {
  if (kind_ == FieldKind::Extension) return base_->prime_field();
  return ptr();
}

bool Field::equals(const Field& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_ || characteristic_ != o.characteristic_ || dim_ != o.dim_) return false;
  if (kind_ != FieldKind::Extension) return true;
  return modulus_ == o.modulus_ && base_->equals(*o.base_);
}

Elem Field::zero() const { return Elem{std::vector<mpq_class>(dim_, mpq_class(0))}; }

Elem Field::one() const {
  Elem e = zero();
  e.c[0] = 1;
  return e;
}

Elem Field::from_int(long v) const { return from_rational(mpq_class(v)); }

Elem Field::reduce_prime(mpq_class v) const {
  if (kind_ == FieldKind::Rationals) {
    v.canonicalize();
    return Elem{{v}};
  }
  const mpz_class& p = characteristic_;
  mpz_class num = v.get_num() % p;
  mpz_class den = v.get_den() % p;
  if (den != 1) {
    if (den == 0) throw Error(ErrorKind::CoefficientNotMapped, v.get_str() + " has a denominator divisible by " + p.get_str());
    mpz_invert(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * den) % p;
  }
  if (num < 0) num += p;
  return Elem{{mpq_class(num)}};
}

Elem Field::from_rational(const mpq_class& q) const {
  if (kind_ != FieldKind::Extension) return reduce_prime(q);
  Elem e = zero();
  Elem b = base_->from_rational(q);
  std::copy(b.c.begin(), b.c.end(), e.c.begin());
  return e;
}

Elem Field::generator() const {
  if (kind_ != FieldKind::Extension) throw Error(ErrorKind::UnsupportedRing, "prime field has no generator");
  if (modulus_.size() == 1) return neg(join({modulus_[0]}));
  std::vector<Elem> parts(modulus_.size(), base_->zero());
  parts[1] = base_->one();
  return join(parts);
}

Elem Field::add(const Elem& a, const Elem& b) const {
  if (kind_ == FieldKind::PrimeField) {
    mpz_class s = a.c[0].get_num() + b.c[0].get_num();
    if (s >= characteristic_) s -= characteristic_;
    return Elem{{mpq_class(s)}};
  }
  Elem r = a;
  if (characteristic_ == 0) {
    for (std::size_t i = 0; i < dim_; ++i) r.c[i] += b.c[i];
    return r;
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    mpz_class s = a.c[i].get_num() + b.c[i].get_num();
    if (s >= characteristic_) s -= characteristic_;
    r.c[i] = s;
  }
  return r;
}

Elem Field::neg(const Elem& a) const {
  Elem r = a;
  for (auto& x : r.c) {
    if (characteristic_ == 0) {
      x = -x;
    } else if (x != 0) {
      x = characteristic_ - x.get_num();
    }
  }
  return r;
}

Elem Field::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Field::mul(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return Elem{{a.c[0] * b.c[0]}};
    case FieldKind::PrimeField: {
      mpz_class m = (a.c[0].get_num() * b.c[0].get_num()) % characteristic_;
      return Elem{{mpq_class(m)}};
    }
    case FieldKind::Extension:
      return poly_mul_reduce(split(a), split(b));
  }
  return zero();
}

Elem Field::poly_mul_reduce(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
  const Field& K = *base_;
  const std::size_t d = modulus_.size();
  std::vector<Elem> prod(2 * d - 1, K.zero());
  for (std::size_t i = 0; i < d; ++i) {
    if (K.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = K.fma(prod[i + j], a[i], b[j]);
  }
  // t^d = -(c_0 + ... + c_{d-1} t^{d-1})
  for (std::size_t k = 2 * d - 1; k-- > d;) {
    if (K.is_zero(prod[k])) continue;
    for (std::size_t j = 0; j < d; ++j) prod[k - d + j] = K.sub(prod[k - d + j], K.mul(prod[k], modulus_[j]));
  }
  prod.resize(d);
  return join(prod);
}

Elem Field::inv(const Elem& a) const {
  if (is_zero(a)) throw Error(ErrorKind::NotInvertible, "inverse of zero");
  switch (kind_) {
    case FieldKind::Rationals:
      return Elem{{1 / a.c[0]}};
    case FieldKind::PrimeField: {
      mpz_class r;
      mpz_invert(r.get_mpz_t(), a.c[0].get_num_mpz_t(), characteristic_.get_mpz_t());
      return Elem{{mpq_class(r)}};
    }
    case FieldKind::Extension: {
      const Field& K = *base_;
      poly::Poly pa = split(a);
      poly::trim(K, pa);
      poly::Poly h = modulus_;
      h.push_back(K.one());
      auto g = poly::xgcd(K, pa, h);
      if (poly::degree(g.g) != 0) throw Error(ErrorKind::NotInvertible, to_string(a) + " is a zero divisor in " + name());
      poly::Poly s = g.s;
      s.resize(modulus_.size(), K.zero());
      return join(s);
    }
  }
  return zero();
}

Elem Field::pow(const Elem& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem r = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

bool Field::is_zero(const Elem& a) const {
  for (const auto& x : a.c)
    if (x != 0) return false;
  return true;
}

std::strong_ordering Field::compare(const Elem& a, const Elem& b) {
  const std::size_t n = std::min(a.c.size(), b.c.size());
  for (std::size_t i = 0; i < n; ++i) {
    int s = cmp(a.c[i], b.c[i]);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return a.c.size() <=> b.c.size();
}

Elem Field::element_at(const mpz_class& index) const {
  if (!is_finite()) throw Error(ErrorKind::UnsupportedRing, "enumeration of an infinite field");
  Elem e = zero();
  mpz_class rest = index;
  for (std::size_t i = dim_; i-- > 0;) {
    e.c[i] = mpz_class(rest % characteristic_);
    rest /= characteristic_;
  }
  return e;
}

mpz_class Field::index_of(const Elem& a) const {
  if (!is_finite()) throw Error(ErrorKind::UnsupportedRing, "enumeration of an infinite field");
  mpz_class idx = 0;
  for (const auto& x : a.c) idx = idx * characteristic_ + x.get_num();
  return idx;
}

bool Field::has_subfield(const Field& sub) const {
  for (const Field* f = this; f; f = f->base_.get())
    if (f->equals(sub)) return true;
  return false;
}

Elem Field::embed(const Field& sub, const Elem& x) const {
  if (equals(sub)) return x;
  if (kind_ != FieldKind::Extension) throw Error(ErrorKind::CoefficientNotMapped, sub.name() + " is not a subfield of " + name());
  std::vector<Elem> parts(modulus_.size(), base_->zero());
  parts[0] = base_->embed(sub, x);
  return join(parts);
}

std::optional<Elem> Field::restrict_to(const Field& sub, const Elem& x) const {
  if (equals(sub)) return x;
  if (kind_ != FieldKind::Extension) return std::nullopt;
  auto parts = split(x);
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (!base_->is_zero(parts[i])) return std::nullopt;
  return base_->restrict_to(sub, parts[0]);
}

Elem Field::map_from(const Field& from, const Elem& x) const {
  if (has_subfield(from)) return embed(from, x);
  if (from.kind() == FieldKind::Rationals) return from_rational(x.c[0]);
  throw Error(ErrorKind::CoefficientNotMapped, "no coefficient map from " + from.name() + " to " + name());
}

std::vector<Elem> Field::split(const Elem& a) const {
  if (kind_ != FieldKind::Extension) return {a};
  return chunks_of(*base_, modulus_.size(), a);
}

Elem Field::join(const std::vector<Elem>& parts) const {
  if (kind_ != FieldKind::Extension) return parts.at(0);
  Elem e;
  e.c.reserve(dim_);
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i < parts.size()) e.c.insert(e.c.end(), parts[i].c.begin(), parts[i].c.end());
    else e.c.insert(e.c.end(), base_->dim(), mpq_class(0));
  }
  return e;
}

std::string Field::to_string(const Elem& a) const {
  if (kind_ != FieldKind::Extension) return a.c[0].get_str();
  poly::Poly p = split(a);
  poly::trim(*base_, p);
  // Printed with ascending powers so that the constant term comes first.
  if (p.empty()) return "0";
  std::string out;
  const char* var = tower_var(*this);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (base_->is_zero(p[i])) continue;
    std::string c = base_->to_string(p[i]);
    if (base_->kind() == FieldKind::Extension && c.find_first_of("+-", 1) != std::string::npos) c = "(" + c + ")";
    std::string term;
    if (i == 0) term = c;
    else if (c == "1") term = var;
    else if (c == "-1") term = std::string("-") + var;
    else term = c + "*" + var;
    if (i > 1) term += "^" + std::to_string(i);
    if (!out.empty()) {
      if (term[0] == '-') out += " - " + term.substr(1);
      else out += " + " + term;
    } else {
      out = term;
    }
  }
  return out;
}

json Field::to_json(const Elem& a) const {
  if (kind_ != FieldKind::Extension) return a.c[0].get_str();
  json arr = json::array();
  for (const auto& part : split(a)) arr.push_back(base_->to_json(part));
  return arr;
}

Elem Field::from_json(const json& j) const {
  if (kind_ != FieldKind::Extension) {
    mpq_class v;
    if (j.is_string()) {
      if (v.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorKind::Parse, "bad rational " + j.dump());
    } else if (j.is_number_integer()) {
      v = mpz_class(j.dump());
    } else {
      throw Error(ErrorKind::Parse, "expected a number string, got " + j.dump());
    }
    if (v.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in " + j.dump());
    return from_rational(v);
  }
  if (!j.is_array() || j.size() > modulus_.size())
    throw Error(ErrorKind::Parse, "expected at most " + std::to_string(modulus_.size()) + " coefficients");
  std::vector<Elem> parts;
  for (const auto& x : j) parts.push_back(base_->from_json(x));
  return join(parts);
}

json Field::descriptor() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return json{{"kind", "Q"}};
    case FieldKind::PrimeField:
      if (characteristic_.fits_slong_p()) return json{{"kind", "Fp"}, {"p", characteristic_.get_si()}};
      return json{{"kind", "Fp"}, {"p", characteristic_.get_str()}};
    case FieldKind::Extension: {
      json mod = json::array();
      for (const auto& c : modulus_) mod.push_back(base_->to_json(c));
      return json{{"kind", "ext"}, {"base", base_->descriptor()}, {"modulus", mod}};
    }
  }
  return {};
}

FieldPtr Field::from_descriptor(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw Error(ErrorKind::Parse, "ring descriptor must be an object with a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return rationals();
  if (kind == "Fp") {
    const json& p = j.at("p");
    mpz_class v(p.is_string() ? p.get<std::string>() : p.dump());
    return prime_field(v);
  }
  if (kind == "ext") {
    FieldPtr base = from_descriptor(j.at("base"));
    std::vector<Elem> mod;
    for (const auto& c : j.at("modulus")) mod.push_back(base->from_json(c));
    return extension(base, std::move(mod));
  }
  throw Error(ErrorKind::Parse, "unknown ring kind " + kind);
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::PrimeField:
      return "F" + characteristic_.get_str();
    case FieldKind::Extension: {
      poly::Poly h = modulus_;
      h.push_back(base_->one());
      const char* var = tower_var(*this);
      return base_->name() + "[" + var + "]/(" + poly::to_string(*base_, h, var) + ")";
    }
  }
  return "?";
}

FieldPtr parse_field_spec(const std::string& spec) {
  std::string s;
  for (char ch : spec)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorKind::Parse, "empty field specification");
  if (s[0] == '{') {
    try {
      return Field::from_descriptor(json::parse(s));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
  }
  if (s == "Q" || s == "QQ") return Field::rationals();
  static const std::regex fp(R"(F_?(\d+)(?:\^(\d+))?)");
  static const std::regex qsqrt(R"(Q\(sqrt\((-?\d+(?:/\d+)?)\)\))");
  std::smatch m;
  if (std::regex_match(s, m, fp)) {
    FieldPtr K = Field::prime_field(mpz_class(m[1].str()));
    if (m[2].matched) {
      const unsigned long d = std::stoul(m[2].str());
      if (d == 0) throw Error(ErrorKind::ZeroDegreeModulus, "extension degree 0");
      if (d > 1) {
        poly::Poly h = poly::find_irreducible(*K, d);
        h.pop_back();
        K = Field::extension(K, h);
      }
    }
    return K;
  }
  if (std::regex_match(s, m, qsqrt)) {
    mpq_class a(m[1].str());
    a.canonicalize();
    FieldPtr Q = Field::rationals();
    return Field::extension(Q, {Q->from_rational(-a), Q->zero()});
  }
  throw Error(ErrorKind::Parse, "cannot parse field specification '" + spec + "'");
}

}  // namespace dp
