#include "dualpair/validate.hpp"

#include <algorithm>
#include <numeric>

#include "dualpair/error.hpp"
#include "dualpair/kernels.hpp"
#include "dualpair/points.hpp"
#include "dualpair/roots.hpp"

namespace dp {

namespace {

std::size_t algebra_splitting_degree(const Algebra& X) {
  const Field& K = *X.field();
  if (!is_etale(X)) throw Error(ErrorKind::NotEtale, "algebra is not etale over " + K.name());
  if (X.is_monogenic()) return splitting_degree(K, *X.monic_poly());
  // The components of X are generated by the images of the basis vectors.
  std::size_t m = 1;
  for (std::size_t j = 0; j < X.dim(); ++j) m = std::lcm(m, splitting_degree(K, min_poly(X, X.basis(j))));
  return m;
}

std::size_t order_mod(const mpz_class& q, std::size_t n) {
  if (n == 1) return 1;
  const mpz_class nn(static_cast<unsigned long>(n));
  mpz_class r = q % nn, x = r;
  for (std::size_t k = 1; k <= n; ++k) {
    if (x == 1) return k;
    x = (x * r) % nn;
  }
  throw Error(ErrorKind::CharDividesOrder, "field size not prime to n");
}

std::vector<Vec> rows_of(const std::vector<Matrix>& homs) {
  std::vector<Vec> out;
  for (const auto& h : homs) out.push_back(h.row_vec(0));
  return out;
}

std::vector<Vec> rational_points(const Algebra& X, std::uint64_t seed) {
  return rows_of(algebra_homs(X, Algebra::split(X.field(), 1), seed));
}

// Finishes a StructureResult from the table and the identification.
void fill_structure(StructureResult& S, const GroupId& g) {
  S.d = g.d;
  S.point_bijection = g.p;
  S.dual_bijection = g.q;
  const std::size_t r = g.d.size();
  auto unit_index = [&](const std::vector<HdElement>& bij, std::size_t i) {
    HdElement e(r, 0);
    e[i] = 1;
    return static_cast<std::size_t>(std::find(bij.begin(), bij.end(), e) - bij.begin());
  };
  S.generators.clear();
  S.dual_generators.clear();
  for (std::size_t i = 0; i < r; ++i) {
    S.generators.push_back(unit_index(g.p, i));
    S.dual_generators.push_back(unit_index(g.q, i));
  }
  S.U.assign(r, std::vector<FracCyclic>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) S.U[i][j] = S.table.T[S.generators[i]][S.dual_generators[j]];
}

}  // namespace

SplittingField splitting_field_finite(const DualPair& P) {
  const FieldPtr& K = P.field();
  if (!K->is_finite()) throw Error(ErrorKind::UnsupportedRing, "splitting fields are only built over finite fields");
  const std::size_t n = P.dim();
  const mpz_class& p = K->characteristic();
  if (mpz_class(static_cast<unsigned long>(n)) % p == 0)
    throw Error(ErrorKind::CharDividesOrder, "characteristic " + p.get_str() + " divides n = " + std::to_string(n));
  std::size_t m = std::lcm(algebra_splitting_degree(P.A()), algebra_splitting_degree(P.B()));
  m = std::lcm(m, order_mod(*K->cardinality(), n));
  SplittingField out;
  out.L = extension_of_degree(K, m);
  out.zeta = root_of_unity(*out.L, n);
  out.degree = m;
  return out;
}

ValidationOutcome validate_via_splitting(DualPair& P, const FieldPtr& L, const Elem& zeta, std::uint64_t seed) {
  const std::size_t n = P.dim();
  const PointGroup G(P, L);
  StructureResult S;
  S.field = L;
  S.zeta = zeta;
  S.zeta_order = static_cast<std::int64_t>(n);
  S.points = G.points(Side::A, seed);
  S.dual_points = G.points(Side::B, seed);
  if (S.points.size() != n || S.dual_points.size() != n)
    throw Error(ErrorKind::SplitCountMismatch, std::to_string(S.points.size()) + " and " +
                                                   std::to_string(S.dual_points.size()) + " points over " + L->name() +
                                                   ", expected " + std::to_string(n));

  ValidationOutcome out;
  const auto values = kernels::pairing_table(S.points, G.pair().theta(), S.dual_points, kernels::default_exec());
  S.table.n = n;
  S.table.T.assign(n, std::vector<FracCyclic>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        S.table.T[i][j] = dlog_mu(*L, zeta, values[i][j], n);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInSubgroup) throw;
        out.reason = "pairing value at (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                     L->to_string(values[i][j]) + ", not an n-th root of unity";
        return out;
      }
    }
  auto g = identify_group(S.table);
  if (!g) {
    out.reason = "pairing table does not describe an abelian group";
    return out;
  }
  AxiomReport rep = certify(P);
  if (!rep.ok()) {
    out.reason = "pairing table is a group table but " + rep.failures.front();
    return out;
  }
  fill_structure(S, *g);
  out.valid = true;
  out.structure = std::move(S);
  return out;
}

StructureResult group_structure(const DualPair& P, const std::optional<Elem>& zeta, std::uint64_t seed) {
  const FieldPtr& K = P.field();
  const std::size_t n = P.dim();
  StructureResult S;
  S.field = K;
  S.points = rational_points(P.A(), seed);
  const std::size_t m = S.points.size();

  // G(K) as the quotient A -> K^m, and the subalgebra B' of B it pairs with.
  std::vector<Vec> alpha, beta;
  Matrix theta_q;
  if (m == n) {
    alpha = S.points;
    beta = rational_points(P.B(), seed);
    theta_q = P.theta();
  } else {
    const Matrix proj = Matrix::from_rows(K, S.points, n);
    const Matrix ideal = kernel_basis(proj);
    const Subalgebra Bq = subalgebra(P.B(), orthogonal_complement(P.phi(), ideal));
    const Matrix section = solve(proj, Matrix::identity(K, m));
    const DualPair Q(Algebra::split(K, m), Bq.algebra, section.transpose() * P.phi() * Bq.inclusion);
    for (std::size_t k = 0; k < m; ++k) alpha.push_back(Q.A().basis(k));
    beta = rational_points(Q.B(), seed);
    theta_q = Q.theta();
  }
  if (beta.size() != m)
    throw Error(ErrorKind::ZetaOrderTooSmall, K->name() + " lacks the roots of unity of order exp G(K)");
  S.dual_points = beta;

  const auto values = kernels::pairing_table(alpha, theta_q, beta, kernels::default_exec());
  if (zeta) {
    S.zeta = *zeta;
    S.zeta_order = static_cast<std::int64_t>(multiplicative_order(*K, *zeta, n));
    if (S.zeta_order == 0) throw Error(ErrorKind::ZetaOrderTooSmall, "zeta is not an n-th root of unity");
  } else {
    // A pairing value of maximal order generates all the others.
    std::uint64_t e = 1;
    std::vector<std::uint64_t> ord;
    for (const auto& row : values)
      for (const auto& v : row) {
        const std::uint64_t o = multiplicative_order(*K, v, m);
        if (o == 0) throw Error(ErrorKind::AxiomsFailed, "pairing value " + K->to_string(v) + " is not a root of unity");
        ord.push_back(o);
        e = std::lcm(e, o);
      }
    const std::size_t at = static_cast<std::size_t>(std::find(ord.begin(), ord.end(), e) - ord.begin());
    if (at == ord.size()) throw Error(ErrorKind::AxiomsFailed, "no pairing value of order exp G(K)");
    S.zeta = values[at / m][at % m];
    S.zeta_order = static_cast<std::int64_t>(e);
  }

  S.table.n = m;
  S.table.T.assign(m, std::vector<FracCyclic>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      try {
        S.table.T[i][j] = dlog_mu(*K, S.zeta, values[i][j], static_cast<std::uint64_t>(S.zeta_order));
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::NotInSubgroup) throw;
        throw Error(ErrorKind::ZetaOrderTooSmall, K->to_string(values[i][j]) + " is not a power of zeta");
      }
      if (static_cast<std::int64_t>(m) % S.table.T[i][j].den() != 0)
        throw Error(ErrorKind::AxiomsFailed, "pairing value order does not divide |G(K)|");
    }
  auto g = identify_group(S.table);
  if (!g) throw Error(ErrorKind::AxiomsFailed, "pairing table of G(K) does not describe an abelian group");
  fill_structure(S, *g);
  return S;
}

json structure_to_json(const StructureResult& S) {
  const Field& K = *S.field;
  auto pts = [&](const std::vector<Vec>& v) {
    json a = json::array();
    for (const auto& p : v) {
      json r = json::array();
      for (const auto& x : p) r.push_back(K.to_string(x));
      a.push_back(r);
    }
    return a;
  };
  json U = json::array();
  for (const auto& row : S.U) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    U.push_back(r);
  }
  return json{{"field", K.name()},
              {"zeta", K.to_string(S.zeta)},
              {"zeta_order", S.zeta_order},
              {"d", S.d},
              {"points", pts(S.points)},
              {"dual_points", pts(S.dual_points)},
              {"point_bijection", S.point_bijection},
              {"dual_bijection", S.dual_bijection},
              {"generators", S.generators},
              {"dual_generators", S.dual_generators},
              {"U", U},
              {"table", table_to_json(S.table)}};
}

// ---------------------------------------------------------------------------
// Complex approximation over Q

namespace {

using num::BigComplex;
using num::BigFloat;
using CVec = std::vector<BigComplex>;

std::size_t totient(std::size_t n) {
  std::size_t t = n;
  for (auto p : prime_factors(n)) t = t / p * (p - 1);
  return t;
}

std::size_t bit_length(const mpq_class& q) {
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

// Complex points of an etale Q-algebra through a primitive element g with
// minimal polynomial h: the point at a root z sends e_i to sum_l Cinv[l][i] z^l.
std::optional<std::vector<CVec>> complex_points(const Algebra& X, mpfr_prec_t prec) {
  const std::size_t n = X.dim();
  poly::Poly h;
  Matrix Cinv;
  if (X.is_monogenic()) {
    h = *X.monic_poly();
    Cinv = Matrix::identity(X.field(), n);
  } else {
    const PrimitiveElement pe = primitive_element(X);
    h = pe.minpoly;
    Cinv = pe.Cinv;
  }
  num::CPoly hc;
  for (const auto& c : h) hc.emplace_back(prec, c.c[0]);
  std::vector<BigComplex> roots;
  if (!num::complex_roots(hc, prec, roots)) return std::nullopt;
  std::sort(roots.begin(), roots.end(), [](const BigComplex& a, const BigComplex& b) {
    if (a.re() > b.re()) return true;
    if (b.re() > a.re()) return false;
    return a.im() > b.im();
  });
  std::vector<CVec> pts;
  for (const auto& z : roots) {
    CVec pw{BigComplex(prec, mpq_class(1))};
    for (std::size_t l = 1; l < n; ++l) pw.push_back(pw.back() * z);
    CVec row;
    for (std::size_t i = 0; i < n; ++i) {
      BigComplex acc(prec);
      for (std::size_t l = 0; l < n; ++l) acc = acc + pw[l] * BigComplex(prec, Cinv.at(l, i).c[0]);
      row.push_back(acc);
    }
    pts.push_back(std::move(row));
  }
  return pts;
}

enum class Round { Accepted, Rejected, Inconclusive };

}  // namespace

mpfr_prec_t default_precision(const DualPair& P) {
  std::size_t bits = 0;
  for (std::size_t i = 0; i < P.dim(); ++i)
    for (std::size_t j = 0; j < P.dim(); ++j) bits = std::max(bits, bit_length(P.phi().at(i, j).c[0]));
  return static_cast<mpfr_prec_t>(std::max<std::size_t>(128, 4 * bits));
}

BigFloat rounding_tolerance(std::size_t n, mpfr_prec_t prec) {
  const long phi = static_cast<long>(totient(n));
  BigFloat tol = BigFloat::pow2(prec, -phi * phi);
  // For n = 1 there is a single root of unity and no separation term.
  if (n > 1) {
    const BigFloat s = (BigFloat::pi(prec) / BigFloat(prec, static_cast<long>(n))).sin();
    if (s < tol) tol = s;
  }
  return tol;
}

NumericOutcome validate_numeric_q(const DualPair& P, mpfr_prec_t prec) {
  if (P.field()->kind() != FieldKind::Rationals)
    throw Error(ErrorKind::UnsupportedRing, "numeric validation needs a pair over Q");
  if (!is_etale(P.A()) || !is_etale(P.B())) throw Error(ErrorKind::NotEtale, "A and B must be etale over Q");
  const std::size_t n = P.dim();
  NumericOutcome out;
  if (!theta_power_is_one(P)) {
    out.reason = "theta^n is not 1 in A (x) B";
    return out;
  }

  mpfr_prec_t wp = prec ? prec : default_precision(P);
  for (int attempt = 0; attempt <= kMaxPrecisionDoublings; ++attempt, wp *= 2) {
    auto Pc = complex_points(P.A(), wp);
    auto Qc = complex_points(P.B(), wp);
    if (!Pc || !Qc || Pc->size() != n || Qc->size() != n) continue;
    const auto Z = kernels::complex_pairing_matrix(*Pc, P.theta(), *Qc, wp, kernels::default_exec());

    const BigFloat tol = rounding_tolerance(n, wp);
    const BigFloat eps = BigFloat::pow2(wp, -static_cast<long>(wp / 2));
    const BigFloat lo = tol - eps, hi = tol + eps;
    const BigFloat two_pi = BigFloat::pi(wp) * BigFloat(wp, 2L);
    PairingTable T;
    T.n = n;
    T.T.assign(n, std::vector<FracCyclic>(n));
    Round verdict = Round::Accepted;
    std::string where;
    for (std::size_t i = 0; i < n && verdict != Round::Rejected; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const BigComplex& z = Z[i][j];
        const BigFloat turns = z.im().atan2(z.re()) * BigFloat(wp, static_cast<long>(n)) / two_pi;
        long k = turns.round().get_si() % static_cast<long>(n);
        if (k < 0) k += static_cast<long>(n);
        const BigFloat dist = (z - BigComplex::root_of_unity(wp, k, static_cast<long>(n))).abs();
        T.T[i][j] = FracCyclic(k, static_cast<std::int64_t>(n));
        if (dist > hi) {
          verdict = Round::Rejected;
          where = "Z(" + std::to_string(i) + "," + std::to_string(j) + ") = " + z.str() + " is off every n-th root of unity";
          break;
        }
        if (!(dist < lo)) verdict = Round::Inconclusive;
      }
    if (verdict == Round::Inconclusive) continue;
    out.precision = wp;
    if (verdict == Round::Rejected) {
      out.reason = where;
      return out;
    }
    auto g = identify_group(T);
    out.table = std::move(T);
    out.points = std::move(*Pc);
    out.dual_points = std::move(*Qc);
    if (!g) {
      out.reason = "pairing table does not describe an abelian group";
      return out;
    }
    out.valid = true;
    out.d = g->d;
    out.point_bijection = g->p;
    out.dual_bijection = g->q;
    return out;
  }
  throw Error(ErrorKind::PrecisionExhausted,
              "rounding still inconclusive at " + std::to_string(wp / 2) + " bits");
}

json numeric_to_json(const NumericOutcome& r) {
  json j{{"valid", r.valid}, {"precision", r.precision}};
  if (!r.valid) {
    j["reason"] = r.reason;
    return j;
  }
  auto pts = [](const std::vector<std::vector<BigComplex>>& v) {
    json a = json::array();
    for (const auto& p : v) {
      json row = json::array();
      for (const auto& z : p) row.push_back(z.str());
      a.push_back(row);
    }
    return a;
  };
  j["d"] = r.d;
  j["point_bijection"] = r.point_bijection;
  j["dual_bijection"] = r.dual_bijection;
  j["points"] = pts(r.points);
  j["dual_points"] = pts(r.dual_points);
  j["table"] = table_to_json(r.table);
  return j;
}

}  // namespace dp
