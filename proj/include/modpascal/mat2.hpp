#pragma once

/**
 * @file mat2.hpp
 * @brief 2x2 matrices and 2-vectors over Nat (signed entries allowed).
 */

#include <array>
#include <cstddef>

#include "modpascal/nat.hpp"

namespace modpascal {

struct Vec2 {
  std::array<Nat, 2> v{};

  const Nat& operator[](std::size_t i) const { return v[i]; }
  Nat& operator[](std::size_t i) { return v[i]; }
  bool operator==(const Vec2&) const = default;
};

struct Mat2 {
  std::array<std::array<Nat, 2>, 2> m{};

  bool operator==(const Mat2&) const = default;

  static Mat2 identity() { return Mat2{{{{1, 0}, {0, 1}}}}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
      }
    }
    return r;
  }

  friend Vec2 operator*(const Mat2& a, const Vec2& x) {
    return Vec2{{a.m[0][0] * x[0] + a.m[0][1] * x[1],
                 a.m[1][0] * x[0] + a.m[1][1] * x[1]}};
  }

  /// Row vector times matrix.
  friend Vec2 operator*(const Vec2& x, const Mat2& a) {
    return Vec2{{x[0] * a.m[0][0] + x[1] * a.m[1][0],
                 x[0] * a.m[0][1] + x[1] * a.m[1][1]}};
  }
};

}  // namespace modpascal
