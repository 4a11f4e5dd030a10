#pragma once

// Hot loops with a serial reference and an OpenMP version.  Both produce
// identical results in identical order; the parallel one only changes how
// the independent entries are scheduled.

#include <functional>
#include <utility>
#include <vector>

#include "dualpair/algebra.hpp"
#include "dualpair/numeric.hpp"

namespace dp::kernels {

enum class Exec { Serial, Parallel };

/// Parallel when the library was built with OpenMP, else Serial.
Exec default_exec();
bool openmp_enabled();
int max_threads();

using MulFn = std::function<Vec(const Vec&, const Vec&)>;

/// Basis pairs (i, j) with i <= j where the linear map M: X -> Y is not
/// multiplicative, in row-major order.  `mul_y` multiplies in Y.
std::vector<std::pair<std::size_t, std::size_t>> multiplicativity_failures(const Algebra& X, const Matrix& M,
                                                                            const MulFn& mul_y, Exec exec);

/// T[i][j] = P_i Theta Q_j^t, all entries over Theta's field.
std::vector<std::vector<Elem>> pairing_table(const std::vector<Vec>& P, const Matrix& theta,
                                             const std::vector<Vec>& Q, Exec exec);

using CVec = std::vector<num::BigComplex>;

/// Z[i][j] = P_i Theta Q_j^t with complex P, Q and rational Theta.
std::vector<CVec> complex_pairing_matrix(const std::vector<CVec>& P, const Matrix& theta, const std::vector<CVec>& Q,
                                         mpfr_prec_t prec, Exec exec);

}  // namespace dp::kernels
