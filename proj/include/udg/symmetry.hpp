#pragma once

#include <utility>
#include <vector>

#include "udg/embedding.hpp"
#include "udg/numeric.hpp"

namespace udg {

// Cyclic rotation (by 2*pi/k about the origin in 2D, about the z-axis in 3D)
// with an optional mirror across x = 0 (the y-axis / yz-plane). The group
// generator is the rotation followed by the mirror when one is set; orbit
// position i holds generator^i applied to the representative.
struct SymmetrySpec {
  int dim = 2;
  int rotation_order = 1;
  bool mirror = false;
  struct Orbit {
    int rep = 0;
    std::vector<int> vertices;  // vertices[0] == rep
  };
  std::vector<Orbit> orbits;

  // Checks the orbit lists partition 0..n-1 and each length divides the group order.
  void validate(int n) const;
};

// Tangent half-angle unit vector ((u^2-1)/(u^2+1), 2u/(u^2+1)).
// Unit norm is an algebraic identity; (1,0) itself is unreachable.
template <class T>
std::pair<T, T> half_angle(const T& u) {
  T u2 = u * u;
  T den = u2 + T(1);
  return {(u2 - T(1)) / den, T(2) * u / den};
}

// Rational chart of the unit sphere from two half-angle parameters:
// ((u^2-1)/(u^2+1) cos_v, (u^2-1)/(u^2+1) sin_v, 2u/(u^2+1)) with
// (cos_v, sin_v) = half_angle(v).
template <class T>
std::array<T, 3> half_angle_sphere(const T& u, const T& v) {
  auto [cu, su] = half_angle(u);
  auto [cv, sv] = half_angle(v);
  return {cu * cv, cu * sv, su};
}

// Fills every orbit by repeated application of the generator to the
// representative points. rep_points supplies one point per representative.
template <class T>
Points<T> expand_orbit(const SymmetrySpec& spec,
                       const std::vector<std::pair<int, std::vector<T>>>& rep_points);

// Unit-step chain: each step places `to` at `from` plus a half-angle unit
// vector (one parameter in 2D, two in 3D). Steps must form a forest rooted at
// already-placed vertices.
struct ChainStep {
  int from = 0;
  int to = 0;
};
struct ChainSpec {
  std::vector<ChainStep> steps;
  int params_per_step(int dim) const { return dim == 2 ? 1 : 2; }
  void validate(int n) const;  // no vertex placed twice, no cycles
};

// Applies the chain to pts (parents must already be set); params holds the
// step parameters in order.
template <class T>
void chain_apply(const ChainSpec& spec, Points<T>& pts, const std::vector<T>& params,
                 const std::vector<bool>& placed_in, std::vector<bool>* placed_out = nullptr);

}  // namespace udg
