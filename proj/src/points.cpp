#include "dualpair/points.hpp"

#include "dualpair/error.hpp"

namespace dp {

PointGroup::PointGroup(const DualPair& P, FieldPtr S)
    : S_(std::move(S)), PS_(P.field()->equals(*S_) ? P : base_change(P, S_)), PSd_(dual(PS_)) {}

std::vector<Vec> PointGroup::points(Side side, std::uint64_t seed) const {
  const Algebra& X = side_pair(side).A();
  std::vector<Vec> out;
  for (const Matrix& h : algebra_homs(X, Algebra::split(S_, 1), seed)) out.push_back(h.row_vec(0));
  return out;
}

Vec PointGroup::identity(Side side) const { return counit(side_pair(side), Side::A); }

bool PointGroup::is_point(const Vec& p, Side side) const {
  const Algebra& X = side_pair(side).A();
  if (p.size() != X.dim()) return false;
  return is_algebra_map(X, Algebra::split(S_, 1), Matrix::row(S_, p));
}

Vec PointGroup::add(const Vec& p, const Vec& q, Side side) const {
  if (p.size() != dim() || q.size() != dim()) throw Error(ErrorKind::MixedTarget, "point of the wrong length");
  if (!is_point(p, side) || !is_point(q, side)) throw Error(ErrorKind::NotAlgebraMap, "input is not a point");
  const DualPair& P = side_pair(side);
  const Matrix ph = solve(P.phi(), Matrix::column(S_, p));
  const Matrix qh = solve(P.phi(), Matrix::column(S_, q));
  const Vec r = P.B().mul(ph.col_vec(0), qh.col_vec(0));
  return P.phi().apply(r);
}

Vec PointGroup::multiple(const Vec& p, std::int64_t k, Side side) const {
  if (k < 0) return multiple(negate(p, side), -k, side);
  Vec acc = identity(side);
  for (std::int64_t i = 0; i < k; ++i) acc = add(acc, p, side);
  return acc;
}

std::size_t PointGroup::order(const Vec& p, Side side) const {
  const Vec id = identity(side);
  Vec cur = p;
  for (std::size_t m = 1; m <= dim(); ++m) {
    if (cur == id) return m;
    cur = add(cur, p, side);
  }
  throw Error(ErrorKind::OrderSearchExceeded, "no multiple up to n is the identity");
}

Vec PointGroup::negate(const Vec& p, Side side) const {
  const Vec id = identity(side);
  if (p == id) return p;
  Vec cur = p;
  for (std::size_t m = 1; m <= dim(); ++m) {
    Vec next = add(cur, p, side);
    if (next == id) return cur;
    cur = std::move(next);
  }
  throw Error(ErrorKind::OrderSearchExceeded, "no multiple up to n is the identity");
}

Elem PointGroup::pairing(const Vec& p, const Vec& q) const {
  if (p.size() != dim() || q.size() != dim()) throw Error(ErrorKind::MixedTarget, "point of the wrong length");
  const Vec pt = PS_.theta().apply_left(p);
  Elem acc = S_->zero();
  for (std::size_t k = 0; k < q.size(); ++k) acc = S_->fma(acc, pt[k], q[k]);
  return acc;
}

Vec PointGroup::character(const Vec& q) const { return PS_.theta().apply(q); }

}  // namespace dp
