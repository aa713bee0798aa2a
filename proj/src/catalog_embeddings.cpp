#include "udg/catalog_embeddings.hpp"

#include <cmath>
#include <stdexcept>

#include "udg/constants.hpp"
#include "udg/detail/closed_forms.hpp"

namespace udg {

namespace {

template <class T>
struct Builder {
  Points<T> pts;

  explicit Builder(int n, int dim) {
    pts.dim = dim;
    pts.coords.assign(static_cast<size_t>(n) * dim, T(0));
  }
  void set(int v, T x, T y) {
    pts.row(v)[0] = x;
    pts.row(v)[1] = y;
  }
  void set(int v, T x, T y, T z) {
    pts.row(v)[0] = x;
    pts.row(v)[1] = y;
    pts.row(v)[2] = z;
  }
};

template <class T>
T frac(long num, long den) {
  return T(num) / T(den);
}

template <class T>
Points<T> build_durer() {
  using std::sqrt;
  T s3 = sqrt(T(3)), s33 = sqrt(T(33)), s11 = sqrt(T(11));
  Builder<T> b(12, 2);
  b.set(0, s3 / 3, T(0));
  b.set(1, -s3 / 6, frac<T>(1, 2));
  b.set(2, -s3 / 6, frac<T>(-1, 2));
  b.set(3, s3 / 6, frac<T>(1, 2));
  b.set(4, -s3 / 3, T(0));
  b.set(5, s3 / 6, frac<T>(-1, 2));
  b.set(6, s3 / 6, s33 / 6);
  b.set(7, s3 / 12 - s11 / 4, frac<T>(1, 4) + s33 / 12);
  b.set(8, -s3 / 12 - s11 / 4, frac<T>(1, 4) - s33 / 12);
  b.set(9, -s3 / 6, -s33 / 6);
  b.set(10, -s3 / 12 + s11 / 4, frac<T>(-1, 4) - s33 / 12);
  b.set(11, s3 / 12 + s11 / 4, frac<T>(-1, 4) + s33 / 12);
  return b.pts;
}

template <class T>
Points<T> build_franklin() {
  using std::sqrt;
  T s3 = sqrt(T(3));
  T q = sqrt(sqrt(T(3)));          // 3^(1/4)
  T S = s3 * q * sqrt(T(2));       // 3^(3/4) sqrt(2)
  T Tq = q * sqrt(T(2));           // 3^(1/4) sqrt(2)
  Builder<T> b(12, 2);
  b.set(0, S / 6 + s3 / 2 - frac<T>(1, 2), T(0));
  b.set(1, s3 / 4 - frac<T>(1, 4) - S / 12, frac<T>(-3, 4) + s3 / 4 + Tq / 4);
  b.set(2, S / 6 - frac<T>(1, 2), frac<T>(1, 2));
  b.set(3, frac<T>(-1, 4) - s3 / 4 - S / 12, frac<T>(-1, 4) + s3 / 4 + Tq / 4);
  b.set(4, -S / 12 - s3 / 4 + frac<T>(1, 4), Tq / 4 + frac<T>(3, 4) - s3 / 4);
  b.set(5, s3 / 4 - frac<T>(1, 4) - S / 12, frac<T>(3, 4) - s3 / 4 - Tq / 4);
  b.set(6, -S / 12 - s3 / 4 + frac<T>(1, 4), Tq / 4 - s3 / 4 - frac<T>(1, 4));
  b.set(7, s3 / 4 - frac<T>(1, 4) - S / 12, -Tq / 4 - s3 / 4 - frac<T>(1, 4));
  b.set(8, -S / 12 - s3 / 4 + frac<T>(1, 4), -Tq / 4 - frac<T>(3, 4) + s3 / 4);
  b.set(9, -s3 / 2 + frac<T>(1, 2) + S / 6, T(0));
  b.set(10, -S / 12 + s3 / 4 + frac<T>(1, 4), -Tq / 4 + s3 / 4 - frac<T>(1, 4));
  b.set(11, frac<T>(1, 2) + S / 6, frac<T>(1, 2));
  return b.pts;
}

template <class T>
Points<T> build_desargues() {
  using std::cos;
  using std::sin;
  using std::sqrt;
  T r1 = (sqrt(T(5)) - 1) / 2;
  T r2 = (sqrt(T(5)) + 1) / 2;
  Builder<T> b(20, 2);
  for (int j = 0; j < 10; ++j) {
    T ang = T(j) * pi_value<T>() / 5;
    T c = cos(ang), s = sin(ang);
    b.set(2 * j, r1 * c, r1 * s);
    b.set(2 * j + 1, r2 * c, r2 * s);
  }
  return b.pts;
}

// Coordinates transcribed at 10 significant digits except where exact.
template <class T>
Points<T> build_heawood() {
  using std::sqrt;
  auto d = [](const char* s) { return scalar_from_string<T>(s); };
  T y_out = 2 * sqrt(T(6)) / 5;
  Builder<T> b(14, 2);
  b.set(0, frac<T>(-1, 2), T(0));
  b.set(1, frac<T>(1, 2), T(0));
  b.set(2, d("1.094164572"), d("0.8043434978"));
  b.set(3, d("0.1044401192"), d("0.6613557099"));
  b.set(4, d("-0.4004149975"), d("1.524559804"));
  b.set(5, d("-1.094164572"), d("0.8043434978"));
  b.set(6, d("-0.1044401192"), d("0.6613557099"));
  b.set(7, d("0.4004149975"), d("1.524559804"));
  b.set(8, frac<T>(-1, 2), d("1.959591792"));
  b.set(9, frac<T>(1, 2), d("1.959591792"));
  b.set(10, frac<T>(3, 10), y_out);
  b.set(11, frac<T>(-1, 2), d("1.579795904"));
  b.set(12, frac<T>(1, 2), d("1.579795904"));
  b.set(13, frac<T>(-3, 10), y_out);
  return b.pts;
}

template <class T>
Points<T> build_tietze() {
  using std::sqrt;
  T s3 = sqrt(T(3));
  T q = sqrt(sqrt(T(3)));
  T S = s3 * q * sqrt(T(2));
  T Tq = q * sqrt(T(2));
  Builder<T> b(12, 2);
  b.set(0, s3 / 3, T(0));
  b.set(1, s3 / 3 - 1, T(0));
  b.set(2, s3 / 12 + Tq / 4 - frac<T>(1, 4), S / 4 - s3 / 4 + frac<T>(1, 4));
  b.set(3, s3 / 12 - Tq / 4 - frac<T>(1, 4), frac<T>(1, 4) - S / 4 - s3 / 4);
  b.set(4, -s3 / 6, frac<T>(1, 2));
  b.set(5, frac<T>(1, 2) - s3 / 6, frac<T>(1, 2) - s3 / 2);
  b.set(6, frac<T>(1, 2) - s3 / 6 - Tq / 2, T(0));
  b.set(7, frac<T>(1, 2) + Tq / 2 - s3 / 6, T(0));
  b.set(8, -s3 / 6, frac<T>(-1, 2));
  b.set(9, frac<T>(1, 2) - s3 / 6, s3 / 2 - frac<T>(1, 2));
  b.set(10, Tq / 4 + s3 / 12 - frac<T>(1, 4), s3 / 4 - S / 4 - frac<T>(1, 4));
  b.set(11, s3 / 12 - Tq / 4 - frac<T>(1, 4), S / 4 + s3 / 4 - frac<T>(1, 4));
  return b.pts;
}

template <class T>
Points<T> build_chvatal() {
  using std::sqrt;
  auto parts = detail::chvatal_parts<T>();
  T s2 = sqrt(T(2));
  T b2 = parts.b * parts.b;
  T x1 = (b2 - 1) / (s2 * (b2 + 1));
  T y1 = s2 * parts.b / (b2 + 1);
  T z3 = parts.a / 2 + parts.a / (2 * s2);
  T q = s2 / 4;
  Builder<T> b(12, 3);
  b.set(0, x1, y1, parts.c);
  b.set(3, -y1, x1, parts.c);
  b.set(6, -x1, -y1, parts.c);
  b.set(9, y1, -x1, parts.c);
  b.set(1, frac<T>(1, 2), T(0), T(0));
  b.set(4, T(0), frac<T>(1, 2), T(0));
  b.set(7, frac<T>(-1, 2), T(0), T(0));
  b.set(10, T(0), frac<T>(-1, 2), T(0));
  b.set(2, -q, q, z3);
  b.set(5, -q, -q, z3);
  b.set(8, q, -q, z3);
  b.set(11, q, q, z3);
  return b.pts;
}

template <class T>
Points<T> build_goldner_harary() {
  using std::sqrt;
  T s3 = sqrt(T(3)), s6 = sqrt(T(6));
  Builder<T> b(11, 3);
  b.set(0, T(0), T(0), T(0));
  b.set(1, T(1), T(0), T(0));
  b.set(2, frac<T>(1, 2), -7 * s3 / 18, -2 * s6 / 9);
  b.set(3, frac<T>(1, 2), s3 / 6, s6 / 3);
  b.set(4, frac<T>(1, 2), s3 / 6, -s6 / 3);
  b.set(5, frac<T>(1, 2), s3 / 2, T(0));
  b.set(6, frac<T>(4, 3), 4 * s3 / 9, -2 * s6 / 9);
  b.set(7, frac<T>(-7, 18), -5 * s3 / 54, -10 * s6 / 27);
  b.set(8, frac<T>(-7, 18), 25 * s3 / 54, 5 * s6 / 27);
  b.set(9, frac<T>(-1, 3), 4 * s3 / 9, -2 * s6 / 9);
  b.set(10, frac<T>(4, 9), 20 * s3 / 27, -10 * s6 / 27);
  return b.pts;
}

const long herschel_coords[11][3][2] = {
    {{0, 1}, {0, 1}, {0, 1}},      {{-9, 25}, {12, 25}, {4, 5}},  {{0, 1}, {24, 25}, {0, 1}},
    {{9, 25}, {12, 25}, {-4, 5}},  {{18, 25}, {0, 1}, {0, 1}},    {{-7, 25}, {0, 1}, {0, 1}},
    {{9, 25}, {-12, 25}, {-4, 5}}, {{0, 1}, {-24, 25}, {0, 1}},   {{-9, 25}, {-12, 25}, {4, 5}},
    {{-18, 25}, {0, 1}, {0, 1}},   {{7, 25}, {0, 1}, {0, 1}},
};

template <class T>
Points<T> build_herschel() {
  Builder<T> b(11, 3);
  for (int v = 0; v < 11; ++v)
    b.set(v, frac<T>(herschel_coords[v][0][0], herschel_coords[v][0][1]),
          frac<T>(herschel_coords[v][1][0], herschel_coords[v][1][1]),
          frac<T>(herschel_coords[v][2][0], herschel_coords[v][2][1]));
  return b.pts;
}

Points<Rational> build_herschel_rational() {
  Points<Rational> p;
  p.dim = 3;
  for (int v = 0; v < 11; ++v)
    for (int k = 0; k < 3; ++k)
      p.coords.push_back(Rational(herschel_coords[v][k][0], herschel_coords[v][k][1]));
  return p;
}

template <class T>
Points<T> build_fritsch() {
  using std::sqrt;
  T s3 = sqrt(T(3)), s2 = sqrt(T(2)), s6 = sqrt(T(6));
  Builder<T> b(9, 3);
  b.set(0, s3 / 3, T(0), frac<T>(1, 2));
  b.set(1, -s3 / 6, frac<T>(1, 2), frac<T>(1, 2));
  b.set(2, -s3 / 6, frac<T>(-1, 2), frac<T>(1, 2));
  b.set(3, -s3 / 6 - s2 / 2, T(0), T(0));
  b.set(4, -s3 / 6, frac<T>(-1, 2), frac<T>(-1, 2));
  b.set(5, -s3 / 6, frac<T>(1, 2), frac<T>(-1, 2));
  b.set(6, s3 / 3, T(0), frac<T>(-1, 2));
  b.set(7, s3 / 12 + s2 / 4, frac<T>(1, 4) + s6 / 4, T(0));
  b.set(8, s3 / 12 + s2 / 4, frac<T>(-1, 4) - s6 / 4, T(0));
  return b.pts;
}

template <class T>
Points<T> build_grotzsch() {
  using std::cos;
  using std::sin;
  T bb = detail::grotzsch_b<T>();
  T c = detail::grotzsch_c<T>();
  T pi5 = pi_value<T>() / 5;
  T c36 = cos(pi5), s36 = sin(pi5);
  T c72 = cos(2 * pi5), s72 = sin(2 * pi5);
  T R = 1 / (2 * s36);
  Builder<T> b(11, 3);
  b.set(0, T(0), T(0), T(0));
  b.set(1, -2 * bb * c72, 2 * bb * s72, c);
  b.set(2, -2 * bb * c72, -2 * bb * s72, c);
  b.set(3, 2 * bb * c36, 2 * bb * s36, c);
  b.set(4, -2 * bb, T(0), c);
  b.set(5, 2 * bb * c36, -2 * bb * s36, c);
  b.set(6, R, T(0), c);
  b.set(7, -(c36 / s36) / 2, frac<T>(1, 2), c);
  b.set(8, (c72 / s72) * c36, -c36, c);
  b.set(9, (c72 / s72) * c36, c36, c);
  b.set(10, -(c36 / s36) / 2, frac<T>(-1, 2), c);
  return b.pts;
}

template <class T>
Points<T> build_hoffman() {
  T s = detail::hoffman_s<T>();
  T s2 = s * s;
  T zin = 8 * s / (5 * (s2 + 1));
  T zmid = 56 * s / (5 * (s2 + 49));
  Builder<T> b(16, 3);
  b.set(0, T(0), frac<T>(14, 5), T(0));
  b.set(1, -4 * (s2 - 1) / (5 * (s2 + 1)), frac<T>(11, 5), zin);
  b.set(2, -(s2 - 7) / (5 * (s2 + 1)), frac<T>(7, 5), zin);
  b.set(3, -4 * (s2 - 49) / (5 * (s2 + 49)), frac<T>(3, 5), zmid);
  b.set(4, T(0), T(0), T(0));
  b.set(5, 4 * (s2 - 49) / (5 * (s2 + 49)), frac<T>(3, 5), zmid);
  b.set(6, (s2 - 7) / (5 * (s2 + 1)), frac<T>(7, 5), zin);
  b.set(7, 4 * (s2 - 1) / (5 * (s2 + 1)), frac<T>(11, 5), zin);
  b.set(8, frac<T>(3, 5), T(2), T(0));
  b.set(9, frac<T>(3, 5), frac<T>(4, 5), T(0));
  b.set(10, frac<T>(-3, 5), frac<T>(4, 5), T(0));
  b.set(11, frac<T>(-3, 5), T(2), T(0));
  b.set(12, T(0), frac<T>(8, 5), T(0));
  b.set(13, T(0), frac<T>(6, 5), T(0));
  b.set(14, -21 * (s2 - 7) / (160 * s2), 49 * (5 * s2 - 3) / (160 * s2), 7 * (s2 + 25) / (160 * s));
  b.set(15, 21 * (s2 - 7) / (160 * s2), 49 * (5 * s2 - 3) / (160 * s2), 7 * (s2 + 25) / (160 * s));
  return b.pts;
}

template <class T>
T eval_poly_t(const std::vector<Rational>& c, const T& x) {
  T acc = T(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + T(Rational(c[i]));
  return acc;
}

template <class T>
T soifer_alpha_t() {
  // bisection + Newton on the defining quartic, at T's precision
  const auto& poly = soifer_alpha_polynomial();
  T lo = T(0), hi = T(1) / 10;
  T flo = eval_poly_t(poly, lo);
  for (int it = 0; it < 120; ++it) {
    T mid = (lo + hi) / 2;
    T fm = eval_poly_t(poly, mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  std::vector<Rational> dp;
  for (size_t i = 1; i < poly.size(); ++i) dp.push_back(poly[i] * Rational(static_cast<int>(i)));
  T x = (lo + hi) / 2;
  for (int it = 0; it < 20; ++it) x = x - eval_poly_t(poly, x) / eval_poly_t(dp, x);
  return x;
}

template <class T>
Points<T> build_soifer() {
  using std::sqrt;
  T a = soifer_alpha_t<T>();
  T a2 = a * a, a3 = a2 * a;
  T s3 = sqrt(T(3));
  T w = sqrt(3 - 3 * a2);
  Builder<T> b(9, 3);
  b.set(0, T(0), T(0), T(0));
  b.set(1, T(1), T(0), T(0));
  b.set(2, frac<T>(1, 2), s3 / 2, T(0));
  b.set(3, frac<T>(1, 2), -(9 * a3 + 3 * a2 - 9 * a - 2) / (2 * s3),
        w * (9 * a3 + 3 * a2 - 3 * a - 1) / 4);
  T x5 = (27 * a3 - 24 * a - 2) / 7;
  T y5 = -s3 * (9 * a3 - 8 * a - 3) / 7;
  b.set(4, x5, y5, -sqrt(1 - x5 * x5 - y5 * y5));
  b.set(5, (3 - 3 * a) / 4, -s3 * (a - 1) / 4, -w / 2);
  b.set(6, 9 * a2 / 8 - 3 * a / 4 + frac<T>(1, 8), s3 * (3 * a2 + 2 * a - 1) / 8, w * (3 * a - 1) / 4);
  b.set(7, (1 - 3 * a) / 4, -s3 * (a - 3) / 4, -w / 2);
  b.set(8, (-27 * a3 + 24 * a - 5) / 14, -s3 * (9 * a3 - 8 * a - 3) / 14,
        w * (81 * a3 - 51 * a - 6) / 14);
  return b.pts;
}

template <class T>
Points<T> build_points(CatalogId id) {
  switch (id) {
    case CatalogId::Durer:
      return build_durer<T>();
    case CatalogId::Franklin:
      return build_franklin<T>();
    case CatalogId::Desargues:
      return build_desargues<T>();
    case CatalogId::Heawood:
      return build_heawood<T>();
    case CatalogId::Tietze:
      return build_tietze<T>();
    case CatalogId::Chvatal:
      return build_chvatal<T>();
    case CatalogId::GoldnerHarary:
      return build_goldner_harary<T>();
    case CatalogId::Herschel:
      return build_herschel<T>();
    case CatalogId::Fritsch:
      return build_fritsch<T>();
    case CatalogId::Grotzsch:
      return build_grotzsch<T>();
    case CatalogId::Hoffman:
      return build_hoffman<T>();
    case CatalogId::Soifer:
      return build_soifer<T>();
    case CatalogId::Mobius6:
      break;
  }
  throw std::invalid_argument("paper_embedding: no shipped embedding for " + catalog_name(id));
}

}  // namespace

Embedding paper_embedding(CatalogId id, Precision precision, int digits) {
  switch (precision) {
    case Precision::Float64:
      return Embedding::from_float64(build_points<double>(id));
    case Precision::Decimal:
      if (digits <= 0 || digits > kMaxDecimalDigits)
        throw std::invalid_argument("paper_embedding: digits must be in 1..100");
      if (digits <= 50) return Embedding::from_decimal50(build_points<Dec50>(id), digits);
      return Embedding::from_decimal100(build_points<Dec100>(id), digits);
    case Precision::Rational:
      if (id != CatalogId::Herschel)
        throw std::invalid_argument("paper_embedding: rational precision only for herschel");
      return Embedding::from_rational(build_herschel_rational());
  }
  throw std::invalid_argument("paper_embedding: unknown precision");
}

ToleranceConfig default_tolerances(CatalogId id) {
  ToleranceConfig tol;
  tol.edge_tol = catalog_edge_tol(id);
  return tol;
}

}  // namespace udg
