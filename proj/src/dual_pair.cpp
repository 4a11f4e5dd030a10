#include "dualpair/dual_pair.hpp"

#include <fstream>
#include <sstream>

#include "dualpair/error.hpp"
#include "dualpair/kernels.hpp"

namespace dp {

std::string to_string(Validation v) {
  switch (v) {
    case Validation::Unchecked: return "unchecked";
    case Validation::AxiomsVerified: return "axioms-verified";
    case Validation::NumericallyVerified: return "numerically-verified";
  }
  return "?";
}

DualPair::DualPair(Algebra A, Algebra B, Matrix phi)
    : A_(std::move(A)), B_(std::move(B)), phi_(std::move(phi)), cache_(std::make_shared<Cache>()) {
  if (!A_.field()->equals(*B_.field()) || !A_.field()->equals(*phi_.field()))
    throw Error(ErrorKind::MixedBase, "A, B and Phi must share a base ring");
  if (A_.dim() != B_.dim() || phi_.rows() != A_.dim() || phi_.cols() != B_.dim())
    throw Error(ErrorKind::Parse, "dimensions of A, B and Phi do not match");
  theta_ = inverse_transpose(phi_);
}

namespace {

// mu_1: column i is Theta X Theta^t with X_lm = sum_k Phi_ik c^B_lmk.
// mu_2: column j is Theta^t Y Theta with Y_pq = sum_k c^A_pqk Phi_kj.
Matrix compute_comult(const Algebra& A, const Algebra& B, const Matrix& phi, const Matrix& theta, Side s) {
  const FieldPtr& K = A.field();
  const Field& F = *K;
  const std::size_t n = A.dim();
  Matrix mu(K, n * n, n);
  const Algebra& other = s == Side::A ? B : A;
  const Matrix left = s == Side::A ? theta : theta.transpose();
  const Matrix right = left.transpose();
  for (std::size_t i = 0; i < n; ++i) {
    Matrix X(K, n, n);
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t m = 0; m < n; ++m) {
        Elem acc = F.zero();
        for (std::size_t k = 0; k < n; ++k) {
          const Elem& c = other.sc(l, m, k);
          if (F.is_zero(c)) continue;
          acc = F.fma(acc, c, s == Side::A ? phi.at(i, k) : phi.at(k, i));
        }
        X.at(l, m) = std::move(acc);
      }
    Matrix M = left * X * right;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) mu.at(p * n + q, i) = M.at(p, q);
  }
  return mu;
}

std::string at_pair(std::size_t i, std::size_t j) {
  return " at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Vec tensor_unit(const Algebra& X, const Algebra& Y) {
  const Field& K = *X.field();
  Vec u(X.dim() * Y.dim(), K.zero());
  for (std::size_t i = 0; i < X.dim(); ++i)
    for (std::size_t j = 0; j < Y.dim(); ++j) u[i * Y.dim() + j] = K.mul(X.unit()[i], Y.unit()[j]);
  return u;
}

Vec tensor_pow(const Algebra& X, const Algebra& Y, Vec base, std::size_t e) {
  Vec r = tensor_unit(X, Y);
  while (e > 0) {
    if (e & 1) r = tensor_mul(X, Y, r, base);
    e >>= 1;
    if (e) base = tensor_mul(X, Y, base, base);
  }
  return r;
}

Elem dot(const Field& K, const Vec& a, const Vec& b) {
  Elem acc = K.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = K.fma(acc, a[i], b[i]);
  return acc;
}

// First pair (i <= j) where the functional eps is not multiplicative.
std::optional<std::pair<std::size_t, std::size_t>> functional_failure(const Algebra& X, const Vec& eps) {
  const Field& K = *X.field();
  for (std::size_t i = 0; i < X.dim(); ++i)
    for (std::size_t j = i; j < X.dim(); ++j)
      if (dot(K, eps, X.mul(X.basis(i), X.basis(j))) != K.mul(eps[i], eps[j])) return std::make_pair(i, j);
  return std::nullopt;
}

Matrix outer(const FieldPtr& K, const Vec& col, const Vec& row) {
  return Matrix::column(K, col) * Matrix::row(K, row);
}

}  // namespace

const Matrix& DualPair::comultiplication(Side s) const {
  const int k = s == Side::A ? 0 : 1;
  std::call_once(cache_->once[k], [&] { cache_->mu[k] = compute_comult(A_, B_, phi_, theta_, s); });
  return cache_->mu[k];
}

const Matrix& theta_of(const DualPair& P) { return P.theta(); }
const Matrix& comultiplication(const DualPair& P, Side s) { return P.comultiplication(s); }

Vec counit(const DualPair& P, Side s) {
  if (s == Side::A) return P.phi().apply(P.B().unit());
  return P.phi().apply_left(P.A().unit());
}

AxiomReport verify_axioms(const DualPair& P) {
  AxiomReport rep;
  const Field& K = *P.field();
  const Algebra& A = P.A();
  const Algebra& B = P.B();
  const Vec eps1 = counit(P, Side::A), eps2 = counit(P, Side::B);

  const Elem u = dot(K, A.unit(), eps1);
  if (!K.is_one(u)) rep.failures.push_back("(1) Phi(1_A, 1_B) = " + K.to_string(u) + ", not 1");
  if (auto w = functional_failure(A, eps1))
    rep.failures.push_back("(2) eps_1 is not multiplicative" + at_pair(w->first, w->second));
  if (auto w = functional_failure(B, eps2))
    rep.failures.push_back("(3) eps_2 is not multiplicative" + at_pair(w->first, w->second));

  const Matrix& mu1 = P.comultiplication(Side::A);
  const Matrix& mu2 = P.comultiplication(Side::B);
  if (mu1.apply(A.unit()) != tensor_unit(A, A)) rep.failures.push_back("(3) mu_1 does not preserve the unit");
  if (mu2.apply(B.unit()) != tensor_unit(B, B)) rep.failures.push_back("(2) mu_2 does not preserve the unit");
  const auto exec = kernels::default_exec();
  auto bad1 = kernels::multiplicativity_failures(
      A, mu1, [&](const Vec& x, const Vec& y) { return tensor_mul(A, A, x, y); }, exec);
  if (!bad1.empty())
    rep.failures.push_back("(4) mu_1 is not multiplicative" + at_pair(bad1[0].first, bad1[0].second));
  auto bad2 = kernels::multiplicativity_failures(
      B, mu2, [&](const Vec& x, const Vec& y) { return tensor_mul(B, B, x, y); }, exec);
  if (!bad2.empty())
    rep.failures.push_back("(4) mu_2 is not multiplicative" + at_pair(bad2[0].first, bad2[0].second));

  if (!theta_power_is_one(P)) rep.failures.push_back("theta^n is not 1 in A (x) B");
  return rep;
}

bool theta_power_is_one(const DualPair& P) {
  const Matrix& T = P.theta();
  Vec theta;
  for (std::size_t i = 0; i < T.rows(); ++i)
    for (std::size_t j = 0; j < T.cols(); ++j) theta.push_back(T.at(i, j));
  return tensor_pow(P.A(), P.B(), theta, P.dim()) == tensor_unit(P.A(), P.B());
}

AxiomReport certify(DualPair& P) {
  AxiomReport rep = verify_axioms(P);
  if (rep.ok() && P.validation() == Validation::Unchecked) P.set_validation(Validation::AxiomsVerified);
  return rep;
}

DualPair base_change(const DualPair& P, const FieldPtr& L) {
  DualPair Q(P.A().base_change(L), P.B().base_change(L), P.phi().map_to(L));
  Q.set_validation(P.validation());
  return Q;
}

DualPair dual(const DualPair& P) {
  DualPair Q(P.B(), P.A(), P.phi().transpose());
  Q.set_validation(P.validation());
  return Q;
}

Matrix adjoint_of(const DualPair& source, const DualPair& target, const Matrix& F) {
  return solve(target.phi(), F.transpose() * source.phi());
}

Morphism morphism_from_f(const DualPair& source, const DualPair& target, const Matrix& F) {
  if (!is_algebra_map(target.A(), source.A(), F)) throw Error(ErrorKind::NotAlgebraMap, "f is not an algebra map A' -> A");
  Matrix G = adjoint_of(source, target, F);
  if (!is_algebra_map(source.B(), target.B(), G))
    throw Error(ErrorKind::AdjointNotAlgebraMap, "the adjoint of f is not an algebra map B -> B'");
  return Morphism{source, target, F, std::move(G)};
}

bool is_morphism(const Morphism& m) {
  return is_algebra_map(m.target.A(), m.source.A(), m.F) && is_algebra_map(m.source.B(), m.target.B(), m.G) &&
         m.F.transpose() * m.source.phi() == m.target.phi() * m.G;
}

Morphism identity_morphism(const DualPair& P) {
  return Morphism{P, P, Matrix::identity(P.field(), P.dim()), Matrix::identity(P.field(), P.dim())};
}

Morphism zero_morphism(const DualPair& source, const DualPair& target) {
  const FieldPtr& K = source.field();
  Matrix F0 = outer(K, source.A().unit(), counit(target, Side::A));
  Matrix G0 = outer(K, target.B().unit(), counit(source, Side::B));
  return Morphism{source, target, std::move(F0), std::move(G0)};
}

Morphism compose(const Morphism& second, const Morphism& first) {
  return Morphism{first.source, second.target, first.F * second.F, second.G * first.G};
}

Morphism dual_morphism(const Morphism& m) { return Morphism{dual(m.target), dual(m.source), m.G, m.F}; }

bool same_morphism(const Morphism& a, const Morphism& b) { return a.F == b.F && a.G == b.G; }

bool is_isomorphism(const Morphism& m) {
  return m.F.rows() == m.F.cols() && rank(m.F) == m.F.rows() && m.G.rows() == m.G.cols() && rank(m.G) == m.G.rows();
}

std::vector<Morphism> hom_set(const DualPair& source, const DualPair& target, std::uint64_t seed) {
  std::vector<Morphism> out;
  for (Matrix& F : algebra_homs(target.A(), source.A(), seed)) {
    Matrix G = adjoint_of(source, target, F);
    if (is_algebra_map(source.B(), target.B(), G)) out.push_back(Morphism{source, target, std::move(F), std::move(G)});
  }
  return out;
}

Morphism add_morphisms(const Morphism& m1, const Morphism& m2) {
  if (m1.F.rows() != m2.F.rows() || m1.F.cols() != m2.F.cols() || !(m1.source.phi() == m2.source.phi()) ||
      !(m1.target.phi() == m2.target.phi()))
    throw Error(ErrorKind::MixedTarget, "morphisms with different source or target");
  const DualPair& T = m1.target;
  const Algebra& A = m1.source.A();
  const Algebra& Bp = T.B();
  const FieldPtr& K = A.field();
  const Field& F = *K;
  // f, f' as A-valued points of the target: rows j of X are the coordinates
  // in A of the B'-component of their images in B' (x) A.
  const Matrix X1 = solve(T.phi(), m1.F.transpose());
  const Matrix X2 = solve(T.phi(), m2.F.transpose());
  const std::size_t np = Bp.dim(), n = A.dim();
  std::vector<Vec> Z(np, A.zero());
  for (std::size_t j = 0; j < np; ++j) {
    const Vec xj = X1.row_vec(j);
    if (A.is_zero(xj)) continue;
    for (std::size_t k = 0; k < np; ++k) {
      const Vec yk = X2.row_vec(k);
      if (A.is_zero(yk)) continue;
      const Vec prod = A.mul(xj, yk);
      for (std::size_t l = 0; l < np; ++l) {
        const Elem& c = Bp.sc(j, k, l);
        if (F.is_zero(c)) continue;
        for (std::size_t r = 0; r < n; ++r) Z[l][r] = F.fma(Z[l][r], c, prod[r]);
      }
    }
  }
  Matrix Zm = Matrix::from_rows(K, Z, n);
  Matrix F2 = (T.phi() * Zm).transpose();
  Matrix G2 = adjoint_of(m1.source, T, F2);
  if (!is_algebra_map(T.A(), A, F2) || !is_algebra_map(m1.source.B(), Bp, G2))
    throw Error(ErrorKind::AdjointNotAlgebraMap, "sum of morphisms is not a morphism; inputs are not valid");
  return Morphism{m1.source, T, std::move(F2), std::move(G2)};
}

std::optional<Morphism> find_isomorphism(const DualPair& P, const DualPair& Q, std::uint64_t seed) {
  if (P.dim() != Q.dim()) return std::nullopt;
  for (auto& m : hom_set(P, Q, seed))
    if (is_isomorphism(m)) return m;
  return std::nullopt;
}

DirectSum direct_sum(const DualPair& P, const DualPair& Pp) {
  if (!P.field()->equals(*Pp.field())) throw Error(ErrorKind::MixedBase, "direct sum over different base rings");
  const FieldPtr& K = P.field();
  DualPair S(tensor_sc(P.A(), Pp.A()), tensor_sc(P.B(), Pp.B()), kron(P.phi(), Pp.phi()));
  const std::size_t n = P.dim(), np = Pp.dim(), N = n * np;
  const Vec e1 = counit(P, Side::A), e1p = counit(Pp, Side::A);
  const Vec e2 = counit(P, Side::B), e2p = counit(Pp, Side::B);
  Matrix iF1(K, n, N), iG1(K, N, n), iF2(K, np, N), iG2(K, N, np);
  Matrix pF1(K, N, n), pG1(K, n, N), pF2(K, N, np), pG2(K, np, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < np; ++j) {
      const std::size_t ij = i * np + j;
      iF1.at(i, ij) = e1p[j];                 // a (x) a' -> eps'(a') a
      iG1.at(ij, i) = Pp.B().unit()[j];       // b -> b (x) 1
      iF2.at(j, ij) = e1[i];
      iG2.at(ij, j) = P.B().unit()[i];
      pF1.at(ij, i) = Pp.A().unit()[j];       // a -> a (x) 1
      pG1.at(i, ij) = e2p[j];                 // b (x) b' -> eps'(b') b
      pF2.at(ij, j) = P.A().unit()[i];
      pG2.at(j, ij) = e2[i];
    }
  return DirectSum{S,
                   Morphism{P, S, std::move(iF1), std::move(iG1)},
                   Morphism{Pp, S, std::move(iF2), std::move(iG2)},
                   Morphism{S, P, std::move(pF1), std::move(pG1)},
                   Morphism{S, Pp, std::move(pF2), std::move(pG2)}};
}

KernelResult kernel(const Morphism& m) {
  const DualPair& P = m.source;
  const DualPair& Pp = m.target;
  const Algebra& A = P.A();
  const Vec eps = counit(Pp, Side::A);
  // Coequaliser of f and f0: A modulo f(a'_i) - eps'(a'_i) 1_A.
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < Pp.dim(); ++i) gens.push_back(A.sub(m.F.col_vec(i), A.scale(A.unit(), eps[i])));
  Quotient q = ideal_quotient(A, gens);
  Subalgebra sub = subalgebra(P.B(), orthogonal_complement(P.phi(), q.ideal));
  const std::size_t k = q.algebra.dim();
  const Matrix section = solve(q.projection, Matrix::identity(P.field(), k));
  Matrix phi2 = section.transpose() * P.phi() * sub.inclusion;
  DualPair Kp(q.algebra, sub.algebra, std::move(phi2));
  return KernelResult{Kp, Morphism{Kp, P, q.projection, sub.inclusion}};
}

KernelResult cokernel(const Morphism& m) {
  KernelResult k = kernel(dual_morphism(m));
  Morphism proj = dual_morphism(k.map);
  proj.source = m.target;
  return KernelResult{proj.target, std::move(proj)};
}

std::vector<std::string> check_hopf(const HopfData& H) {
  std::vector<std::string> bad = H.algebra.check();
  const Algebra& A = H.algebra;
  const Field& K = *A.field();
  const std::size_t n = A.dim();
  if (H.comult.rows() != n * n || H.comult.cols() != n || H.counit.size() != n) {
    bad.push_back("comultiplication or counit has the wrong shape");
    return bad;
  }
  const Matrix& M = H.comult;
  if (!K.is_one(dot(K, H.counit, A.unit()))) bad.push_back("counit does not preserve the unit");
  if (auto w = functional_failure(A, H.counit)) bad.push_back("counit is not multiplicative" + at_pair(w->first, w->second));
  if (M.apply(A.unit()) != tensor_unit(A, A)) bad.push_back("comultiplication does not preserve the unit");
  auto mb = kernels::multiplicativity_failures(
      A, M, [&](const Vec& x, const Vec& y) { return tensor_mul(A, A, x, y); }, kernels::default_exec());
  if (!mb.empty()) bad.push_back("comultiplication is not multiplicative" + at_pair(mb[0].first, mb[0].second));
  for (std::size_t k = 0; k < n; ++k) {
    Vec left(n * n * n, K.zero()), right(n * n * n, K.zero());
    Vec l1(n, K.zero()), l2(n, K.zero());
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Elem& c = M.at(p * n + q, k);
        if (K.is_zero(c)) continue;
        if (!(c == M.at(q * n + p, k))) bad.push_back("comultiplication is not cocommutative at e" + std::to_string(k));
        l1[q] = K.fma(l1[q], c, H.counit[p]);
        l2[p] = K.fma(l2[p], c, H.counit[q]);
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            left[(a * n + b) * n + q] = K.fma(left[(a * n + b) * n + q], c, M.at(a * n + b, p));
            right[(p * n + a) * n + b] = K.fma(right[(p * n + a) * n + b], c, M.at(a * n + b, q));
          }
      }
    if (left != right) bad.push_back("comultiplication is not coassociative at e" + std::to_string(k));
    if (l1 != A.basis(k) || l2 != A.basis(k)) bad.push_back("counit law fails at e" + std::to_string(k));
  }
  return bad;
}

HopfData hopf_export(const DualPair& P) {
  AxiomReport rep = verify_axioms(P);
  if (!rep.ok()) throw Error(ErrorKind::AxiomsFailed, rep.failures.front());
  return HopfData{P.A(), P.comultiplication(Side::A), counit(P, Side::A)};
}

DualPair pair_from_hopf(const HopfData& H) {
  auto bad = check_hopf(H);
  if (!bad.empty()) throw Error(ErrorKind::InvalidHopf, bad.front());
  const Algebra& A = H.algebra;
  const std::size_t n = A.dim();
  std::vector<Elem> sc(n * n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t k = 0; k < n; ++k) sc[(l * n + m) * n + k] = H.comult.at(l * n + m, k);
  Algebra B(A.field(), n, std::move(sc), H.counit);
  return DualPair(A, std::move(B), Matrix::identity(A.field(), n));
}

namespace {

json poly_tail_json(const Field& K, const poly::Poly& f, std::size_t n) {
  json arr = json::array();
  for (std::size_t i = 0; i < n; ++i) arr.push_back(K.to_json(i < f.size() ? f[i] : K.zero()));
  return arr;
}

Algebra algebra_from_pair_json(const FieldPtr& K, const json& j, const char* poly_key, const char* sc_key,
                               const char* unit_key) {
  if (j.contains(poly_key)) {
    if (j.contains(sc_key)) throw Error(ErrorKind::Parse, std::string("both ") + poly_key + " and " + sc_key + " given");
    poly::Poly f;
    for (const auto& c : j.at(poly_key)) f.push_back(K->from_json(c));
    f.push_back(K->one());
    return Algebra::monogenic(K, f);
  }
  if (!j.contains(sc_key) || !j.contains(unit_key))
    throw Error(ErrorKind::Parse, std::string("missing ") + poly_key + " or " + sc_key + "/" + unit_key);
  return algebra_from_sc_json(K, j.at(sc_key), j.at(unit_key));
}

}  // namespace

json pair_to_json(const DualPair& P) {
  const Field& K = *P.field();
  json j;
  j["base"] = K.descriptor();
  if (P.A().is_monogenic()) {
    j["f"] = poly_tail_json(K, *P.A().monic_poly(), P.dim());
  } else {
    j["sc_a"] = algebra_sc_to_json(P.A());
    j["unit_a"] = json::array();
    for (const auto& x : P.A().unit()) j["unit_a"].push_back(K.to_json(x));
  }
  if (P.B().is_monogenic()) {
    j["g"] = poly_tail_json(K, *P.B().monic_poly(), P.dim());
  } else {
    j["sc_b"] = algebra_sc_to_json(P.B());
    j["unit_b"] = json::array();
    for (const auto& x : P.B().unit()) j["unit_b"].push_back(K.to_json(x));
  }
  j["phi"] = matrix_to_json(P.phi());
  return j;
}

DualPair pair_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "pair file must hold a JSON object");
    static const char* known[] = {"base", "f", "g", "phi", "sc_a", "sc_b", "unit_a", "unit_b"};
    for (const auto& [key, _] : j.items())
      if (std::find(std::begin(known), std::end(known), key) == std::end(known))
        throw Error(ErrorKind::Parse, "unknown key \"" + key + "\" in pair file");
    FieldPtr K = Field::from_descriptor(j.at("base"));
    Algebra A = algebra_from_pair_json(K, j, "f", "sc_a", "unit_a");
    Algebra B = algebra_from_pair_json(K, j, "g", "sc_b", "unit_b");
    return DualPair(std::move(A), std::move(B), matrix_from_json(K, j.at("phi")));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

DualPair load_pair(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  return pair_from_json(j);
}

void save_pair(const DualPair& P, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path);
  out << pair_to_json(P).dump(2) << "\n";
}

}  // namespace dp
