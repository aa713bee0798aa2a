#pragma once

// Shared closed-form evaluations, templated over the working scalar.

#include <cmath>

namespace udg::detail {

template <class T>
struct ChvatalParts {
  T a, b, c;
};

template <class T>
ChvatalParts<T> chvatal_parts() {
  using std::sqrt;
  T s2 = sqrt(T(2));
  T w = sqrt(T(2) - s2);
  T a = sqrt(T(4) - 2 * s2);
  T c = s2 * w / 4 + w / 4 + sqrt(s2 + 4 * s2 * w - 2) / 4;
  T b = sqrt((2 * s2 - 1 + 4 * c * c) / (2 * s2 + 1 - 4 * c * c));
  return {a, b, c};
}

template <class T>
T grotzsch_b() {
  using std::sqrt;
  return 1 / (2 * sqrt(T(5) + 2 * sqrt(T(5))));
}

template <class T>
T grotzsch_c() {
  using std::sqrt;
  T s5 = sqrt(T(5));
  return sqrt(T(5) + 3 * s5) * (5 - s5) / 10;
}

template <class T>
T hoffman_s() {
  using std::sqrt;
  return sqrt(T(6986) + 14 * sqrt(T(273697))) / 14;
}

}  // namespace udg::detail
