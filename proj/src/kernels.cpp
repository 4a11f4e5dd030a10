#include "dualpair/kernels.hpp"

#include <exception>

#ifdef DUALPAIR_HAVE_OPENMP
#include <omp.h>
#endif

namespace dp::kernels {

namespace {

// Runs body(k) for k in [0, count), in parallel when asked.  The first
// exception thrown by any iteration is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t count, Exec exec, Body&& body) {
  if (exec == Exec::Serial || count < 2) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
#ifdef DUALPAIR_HAVE_OPENMP
  std::exception_ptr err;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    try {
      body(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(dualpair_kernel_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
#else
  for (std::size_t k = 0; k < count; ++k) body(k);
#endif
}

}  // namespace

Exec default_exec() { return openmp_enabled() ? Exec::Parallel : Exec::Serial; }

bool openmp_enabled() {
#ifdef DUALPAIR_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef DUALPAIR_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::pair<std::size_t, std::size_t>> multiplicativity_failures(const Algebra& X, const Matrix& M,
                                                                            const MulFn& mul_y, Exec exec) {
  const std::size_t n = X.dim();
  std::vector<Vec> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = M.col_vec(i);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<char> bad(pairs.size(), 0);
  for_each_index(pairs.size(), exec, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    bad[k] = M.apply(X.mul(X.basis(i), X.basis(j))) != mul_y(img[i], img[j]);
  });
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (bad[k]) out.push_back(pairs[k]);
  return out;
}

std::vector<std::vector<Elem>> pairing_table(const std::vector<Vec>& P, const Matrix& theta,
                                             const std::vector<Vec>& Q, Exec exec) {
  const Field& S = *theta.field();
  // Rows of P Theta first; each entry is then a dot product.
  std::vector<Vec> pt(P.size());
  for_each_index(P.size(), exec, [&](std::size_t i) { pt[i] = theta.apply_left(P[i]); });
  std::vector<std::vector<Elem>> T(P.size(), std::vector<Elem>(Q.size()));
  const std::size_t m = Q.size();
  for_each_index(P.size() * m, exec, [&](std::size_t k) {
    const std::size_t i = k / m, j = k % m;
    Elem acc = S.zero();
    for (std::size_t l = 0; l < Q[j].size(); ++l) acc = S.fma(acc, pt[i][l], Q[j][l]);
    T[i][j] = std::move(acc);
  });
  return T;
}

std::vector<CVec> complex_pairing_matrix(const std::vector<CVec>& P, const Matrix& theta, const std::vector<CVec>& Q,
                                         mpfr_prec_t prec, Exec exec) {
  const std::size_t n = theta.rows(), nb = theta.cols();
  std::vector<CVec> th(n, CVec(nb, num::BigComplex(prec)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < nb; ++j) th[i][j] = num::BigComplex(prec, theta.at(i, j).c[0]);
  std::vector<CVec> pt(P.size(), CVec(nb, num::BigComplex(prec)));
  for_each_index(P.size(), exec, [&](std::size_t i) {
    for (std::size_t j = 0; j < nb; ++j) {
      num::BigComplex acc(prec);
      for (std::size_t l = 0; l < n; ++l) acc = acc + P[i][l] * th[l][j];
      pt[i][j] = acc;
    }
  });
  const std::size_t m = Q.size();
  std::vector<CVec> Z(P.size(), CVec(m, num::BigComplex(prec)));
  for_each_index(P.size() * m, exec, [&](std::size_t k) {
    const std::size_t i = k / m, j = k % m;
    num::BigComplex acc(prec);
    for (std::size_t l = 0; l < nb; ++l) acc = acc + pt[i][l] * Q[j][l];
    Z[i][j] = acc;
  });
  return Z;
}

}  // namespace dp::kernels
