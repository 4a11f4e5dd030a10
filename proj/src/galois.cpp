#include "dualpair/galois.hpp"

#include <algorithm>
#include <set>

#include "dualpair/error.hpp"
#include "dualpair/points.hpp"
#include "dualpair/roots.hpp"

namespace dp {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

}  // namespace

HdElement EndHdMatrix::apply(const HdElement& x) const {
  HdElement y(d.size(), 0);
  for (std::size_t k = 0; k < d.size(); ++k) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < d.size(); ++i) acc = mod(acc + M[k][i] * x[i], d[k]);
    y[k] = acc;
  }
  return y;
}

bool EndHdMatrix::is_identity() const {
  for (std::size_t k = 0; k < d.size(); ++k)
    for (std::size_t i = 0; i < d.size(); ++i)
      if (mod(M[k][i] - (k == i ? 1 : 0), d[k]) != 0) return false;
  return true;
}

bool EndHdMatrix::is_invertible() const {
  std::set<HdElement> image;
  const auto all = hd_elements(d);
  for (const auto& x : all) image.insert(apply(x));
  return image.size() == all.size();
}

EndHdMatrix compose(const EndHdMatrix& a, const EndHdMatrix& b) {
  if (a.d != b.d) throw Error(ErrorKind::SeqMismatch, seq_str(a.d) + " vs " + seq_str(b.d));
  const std::size_t r = a.d.size();
  EndHdMatrix c{a.d, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, 0))};
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < r; ++l) acc = mod(acc + a.M[k][l] * b.M[l][i], a.d[k]);
      c.M[k][i] = acc;
    }
  return c;
}

json end_to_json(const EndHdMatrix& M) { return json{{"d", M.d}, {"M", M.M}}; }

std::string end_str(const EndHdMatrix& M) {
  std::string s = "[";
  for (std::size_t k = 0; k < M.M.size(); ++k) {
    s += k ? ", [" : "[";
    for (std::size_t i = 0; i < M.M[k].size(); ++i) s += (i ? " " : "") + std::to_string(M.M[k][i]);
    s += "]";
  }
  return s + "] on H" + seq_str(M.d);
}

FieldAut frobenius_automorphism(const FieldPtr& L, unsigned power) {
  if (!L->is_finite()) throw Error(ErrorKind::UnsupportedRing, "Frobenius needs a finite field");
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), L->characteristic().get_mpz_t(), power);
  return [L, q](const Elem& x) { return L->pow(x, q); };
}

FieldAut quadratic_conjugation(const FieldPtr& L) {
  if (L->kind() != FieldKind::Extension || L->degree() != 2)
    throw Error(ErrorKind::UnsupportedRing, "conjugation needs a quadratic extension");
  const FieldPtr K = L->base();
  const Elem b = L->modulus()[1];
  // t -> -b - t
  return [L, K, b](const Elem& x) {
    const auto c = L->split(x);
    return L->join({K->sub(c[0], K->mul(b, c[1])), K->neg(c[1])});
  };
}

DualPair reduce_mod_p(const DualPair& P, const mpz_class& p) {
  if (P.field()->kind() != FieldKind::Rationals) throw Error(ErrorKind::UnsupportedRing, "reduction needs a pair over Q");
  const FieldPtr Fp = Field::prime_field(p);
  DualPair R;
  try {
    R = base_change(P, Fp);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CoefficientNotMapped)
      throw Error(ErrorKind::BadReduction, "a denominator is divisible by " + p.get_str());
    if (e.kind() == ErrorKind::NotInvertible)
      throw Error(ErrorKind::BadReduction, "Phi is singular modulo " + p.get_str());
    throw;
  }
  R.set_validation(Validation::Unchecked);
  const AxiomReport rep = certify(R);
  if (!rep.ok()) throw Error(ErrorKind::BadReduction, "reduction fails " + rep.failures.front());
  return R;
}

EndHdMatrix automorphism_matrix(const DualPair& P, const StructureResult& S, const FieldAut& sigma) {
  if (S.points.size() != P.dim() || S.dual_points.size() != P.dim())
    throw Error(ErrorKind::SolveFailed, "the structure must cover all points of the pair");
  const PointGroup G(P, S.field);
  const Field& L = *S.field;
  const std::size_t r = S.d.size();
  EndHdMatrix out{S.d, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(r, 0))};
  std::vector<Vec> images;
  for (std::size_t i = 0; i < r; ++i) {
    Vec sp;
    for (const auto& x : S.points[S.generators[i]]) sp.push_back(sigma(x));
    const auto it = std::find(S.points.begin(), S.points.end(), sp);
    if (it == S.points.end()) {
      if (!G.is_point(sp)) throw Error(ErrorKind::NotAPoint, "sigma P_" + std::to_string(i) + " is not a point");
      throw Error(ErrorKind::SolveFailed, "sigma P_" + std::to_string(i) + " is missing from the enumeration");
    }
    const HdElement& h = S.point_bijection[static_cast<std::size_t>(it - S.points.begin())];
    for (std::size_t k = 0; k < r; ++k) out.M[k][i] = h[k];
    images.push_back(std::move(sp));
  }
  // The defining system: lambda<sigma P_i, Q_j> = sum_k M_{k,i} U_{k,j}.
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Elem v = G.pairing(images[i], S.dual_points[S.dual_generators[j]]);
      const FracCyclic lhs = dlog_mu(L, S.zeta, v, static_cast<std::uint64_t>(S.zeta_order));
      FracCyclic rhs;
      for (std::size_t k = 0; k < r; ++k) rhs = rhs + S.U[k][j].times(out.M[k][i]);
      if (lhs != rhs)
        throw Error(ErrorKind::SolveFailed, "M(sigma) violates the pairing system at (" + std::to_string(i) + "," +
                                                std::to_string(j) + ")");
    }
  if (!out.is_invertible()) throw Error(ErrorKind::SolveFailed, "M(sigma) is not invertible");
  return out;
}

FrobeniusResult frobenius_matrix(const DualPair& P, const mpz_class& p) {
  DualPair R = reduce_mod_p(P, p);
  const SplittingField sf = splitting_field_finite(R);
  const ValidationOutcome v = validate_via_splitting(R, sf.L, sf.zeta);
  if (!v.valid) throw Error(ErrorKind::BadReduction, "reduction is not a dual pair: " + v.reason);
  FrobeniusResult out;
  out.p = p;
  out.field_degree = sf.degree;
  out.M = automorphism_matrix(R, *v.structure, frobenius_automorphism(sf.L));
  return out;
}

namespace {

Elem descend(const GaloisData& D, const Elem& x, const std::string& what) {
  if (!(D.sigma(x) == x)) throw Error(ErrorKind::NotDescended, what + " " + D.L->to_string(x) + " is not Galois-fixed");
  auto y = D.L->restrict_to(*D.K, x);
  if (!y) throw Error(ErrorKind::NotDescended, what + " " + D.L->to_string(x) + " does not lie in " + D.K->name());
  return *y;
}

Matrix vandermonde(const FieldPtr& L, const std::vector<Elem>& xs) {
  const std::size_t n = xs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (xs[a] == xs[b]) throw Error(ErrorKind::SingularVandermonde, "labels " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
  Matrix V(L, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem pw = L->one();
    for (std::size_t l = 0; l < n; ++l) {
      V.at(i, l) = pw;
      pw = L->mul(pw, xs[i]);
    }
  }
  return V;
}

}  // namespace

DualPair pair_from_galois_data(const GaloisData& D) {
  const std::size_t n = D.psi.size();
  if (n == 0 || D.psi_dual.size() != n || D.pairing.size() != n)
    throw Error(ErrorKind::Parse, "Galois data must have n labels on each side and an n x n table");
  for (const auto& row : D.pairing)
    if (row.size() != n) throw Error(ErrorKind::Parse, "pairing table must be n x n");
  const FieldPtr& K = D.K;
  const FieldPtr& L = D.L;

  auto descended_poly = [&](const std::vector<Elem>& roots, const char* name) {
    poly::Poly f;
    for (const auto& c : poly::from_roots(*L, roots)) f.push_back(descend(D, c, name));
    return f;
  };
  const Matrix Vx = vandermonde(L, D.psi), Vy = vandermonde(L, D.psi_dual);
  const poly::Poly f = descended_poly(D.psi, "coefficient of f");
  const poly::Poly g = descended_poly(D.psi_dual, "coefficient of g");

  // theta(psi(v), psi'(w)) = <v, w> reads Vx Theta Vy^t = W.
  Matrix W(L, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) W.at(i, j) = D.pairing[i][j];
  const Matrix thetaL = inverse(Vx) * W * inverse_transpose(Vy);
  Matrix theta(K, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) theta.at(i, j) = descend(D, thetaL.at(i, j), "coefficient of theta");

  Matrix phi;
  try {
    phi = inverse_transpose(theta);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInvertible) throw;
    throw Error(ErrorKind::AxiomsFailed, "the pairing table is not perfect");
  }
  DualPair P(Algebra::monogenic(K, f), Algebra::monogenic(K, g), phi);
  const AxiomReport rep = certify(P);
  if (!rep.ok()) throw Error(ErrorKind::AxiomsFailed, rep.failures.front());
  return P;
}

}  // namespace dp
