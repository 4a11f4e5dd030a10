#include "dualpair/frac_cyclic.hpp"

#include "dualpair/error.hpp"

namespace dp {

FracCyclic::FracCyclic(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorKind::Parse, "FracCyclic denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

FracCyclic FracCyclic::operator+(const FracCyclic& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  const __int128 s = static_cast<__int128>(num_) * (l / den_) + static_cast<__int128>(o.num_) * (l / o.den_);
  return FracCyclic(static_cast<std::int64_t>(s % l), l);
}

FracCyclic FracCyclic::operator-() const { return FracCyclic(den_ - num_, den_); }

FracCyclic FracCyclic::operator-(const FracCyclic& o) const { return *this + (-o); }

FracCyclic FracCyclic::times(std::int64_t k) const {
  const __int128 s = static_cast<__int128>(num_) * k % den_;
  return FracCyclic(static_cast<std::int64_t>(s), den_);
}

FracCyclic FracCyclic::parse(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return FracCyclic(std::stoll(s), 1);
    return FracCyclic(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "bad fraction '" + s + "'");
  }
}

}  // namespace dp
