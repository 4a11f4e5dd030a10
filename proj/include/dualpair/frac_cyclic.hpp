#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace dp {

/// An element of Q/Z with bounded denominator, kept in lowest terms with
/// 0 <= num < den.  Zero is 0/1.
class FracCyclic {
 public:
  FracCyclic() = default;
  FracCyclic(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  /// Additive order in Q/Z.
  std::int64_t order() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  FracCyclic operator+(const FracCyclic& o) const;
  FracCyclic operator-(const FracCyclic& o) const;
  FracCyclic operator-() const;
  FracCyclic times(std::int64_t k) const;
  bool operator==(const FracCyclic&) const = default;
  auto operator<=>(const FracCyclic& o) const {
    return static_cast<__int128>(num_) * o.den_ <=> static_cast<__int128>(o.num_) * den_;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }
  /// Accepts "a/b" or "a".
  static FracCyclic parse(const std::string& s);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace dp
