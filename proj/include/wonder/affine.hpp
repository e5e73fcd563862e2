#pragma once

#include <compare>
#include <string>

namespace wonder {

// A dimension a*m + b where m = dim X is symbolic. Numeric models use a = 0.
struct Affine {
  long long per_m = 0;
  long long constant = 0;

  static Affine of(long long c) { return Affine{0, c}; }
  bool is_constant() const { return per_m == 0; }
  long long at(long long m) const { return per_m * m + constant; }
  std::string to_string() const;

  Affine operator-() const { return Affine{-per_m, -constant}; }
  friend Affine operator+(Affine a, Affine b) { return {a.per_m + b.per_m, a.constant + b.constant}; }
  friend Affine operator-(Affine a, Affine b) { return {a.per_m - b.per_m, a.constant - b.constant}; }
  friend Affine operator*(long long k, Affine a) { return {k * a.per_m, k * a.constant}; }
  Affine& operator+=(Affine o) { return *this = *this + o; }

  friend bool operator==(const Affine&, const Affine&) = default;
  // Ordering for m -> infinity: compare the m coefficient first.
  friend auto operator<=>(const Affine&, const Affine&) = default;
};

}  // namespace wonder
