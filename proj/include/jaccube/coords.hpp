#pragma once

#include <array>

namespace jaccube {

// Affine chart coordinates s = (u0, u1, v0, v1) for U = x^2 + u1 x + u0, V = v1 x + v0.
template <class R>
struct Coords4 {
  R u0, u1, v0, v1;
  friend bool operator==(const Coords4&, const Coords4&) = default;
};

// Projective chart coordinates S = (u0 : u1 : v0 : v1 : z).
template <class R>
struct Coords5 {
  R u0, u1, v0, v1, z;
  friend bool operator==(const Coords5&, const Coords5&) = default;
};

// (a0, a1, a2, a3, a4) of f = x^5 + a4 x^4 + ... + a0.
template <class R>
using CoeffVec = std::array<R, 5>;

}  // namespace jaccube
