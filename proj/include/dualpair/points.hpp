#pragma once

// S-valued points of the group scheme of a dual pair.  A point is the row of
// values of an algebra map A -> S on the basis of A (B for points of the
// Cartier dual).

#include <vector>

#include "dualpair/dual_pair.hpp"

namespace dp {

class PointGroup {
 public:
  /// The pair is base-changed to S once; throws CoefficientNotMapped.
  PointGroup(const DualPair& P, FieldPtr S);

  const FieldPtr& field() const { return S_; }
  const DualPair& pair() const { return PS_; }
  std::size_t dim() const { return PS_.dim(); }

  /// All points, in descending lexicographic order of coordinates.
  std::vector<Vec> points(Side side = Side::A, std::uint64_t seed = 0) const;
  Vec identity(Side side = Side::A) const;
  bool is_point(const Vec& p, Side side = Side::A) const;
  /// Throws NotAlgebraMap for inputs that are not points.
  Vec add(const Vec& p, const Vec& q, Side side = Side::A) const;
  /// Throws OrderSearchExceeded if no multiple up to n reaches the identity.
  Vec negate(const Vec& p, Side side = Side::A) const;
  Vec multiple(const Vec& p, std::int64_t k, Side side = Side::A) const;
  /// Additive order, at most n.
  std::size_t order(const Vec& p, Side side = Side::A) const;
  /// p Theta q^t for p on the A side and q on the B side.
  Elem pairing(const Vec& p, const Vec& q) const;
  /// Theta q^t, coordinates of (id (x) q)(theta) in A (x) S.
  Vec character(const Vec& q) const;

 private:
  const DualPair& side_pair(Side s) const { return s == Side::A ? PS_ : PSd_; }

  FieldPtr S_;
  DualPair PS_, PSd_;
};

}  // namespace dp
