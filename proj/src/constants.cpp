#include "udg/constants.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "udg/detail/closed_forms.hpp"

namespace udg {

namespace {

template <class T>
T eval_poly(const std::vector<Rational>& c, const T& x) {
  T acc = T(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + T(Rational(c[i]));
  return acc;
}

template <class T>
T polyroot_t(const std::vector<Rational>& coeffs, T lo, T hi) {
  using std::abs;
  T flo = eval_poly(coeffs, lo);
  T fhi = eval_poly(coeffs, hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) throw std::invalid_argument("polyroot: no sign change on bracket");
  for (int it = 0; it < 120; ++it) {
    T mid = (lo + hi) / 2;
    T fm = eval_poly(coeffs, mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  // derivative coefficients
  std::vector<Rational> dc;
  for (size_t i = 1; i < coeffs.size(); ++i) dc.push_back(coeffs[i] * Rational(static_cast<int>(i)));
  T x = (lo + hi) / 2;
  for (int it = 0; it < 20; ++it) {
    T d = eval_poly(dc, x);
    if (d == 0) break;
    x = x - eval_poly(coeffs, x) / d;
  }
  return x;
}

template <class T>
T compute(ConstantId id) {
  switch (id) {
    case ConstantId::ChvatalA:
      return detail::chvatal_parts<T>().a;
    case ConstantId::ChvatalB:
      return detail::chvatal_parts<T>().b;
    case ConstantId::ChvatalC:
      return detail::chvatal_parts<T>().c;
    case ConstantId::GrotzschB:
      return detail::grotzsch_b<T>();
    case ConstantId::GrotzschC:
      return detail::grotzsch_c<T>();
    case ConstantId::HoffmanS:
      return detail::hoffman_s<T>();
    case ConstantId::SoiferAlpha:
      return polyroot_t<T>(soifer_alpha_polynomial(), T(0), T(1) / 10);
  }
  throw std::invalid_argument("constant: unknown id");
}

struct Meta {
  const char* name;
  const char* definition;
};

const std::map<ConstantId, Meta>& meta() {
  static const std::map<ConstantId, Meta> m = {
      {ConstantId::ChvatalA, {"chvatal_a", "sqrt(4 - 2 sqrt(2))"}},
      {ConstantId::ChvatalB,
       {"chvatal_b", "sqrt((2 sqrt(2) - 1 + 4 c^2) / (2 sqrt(2) + 1 - 4 c^2)), c = chvatal_c"}},
      {ConstantId::ChvatalC,
       {"chvatal_c",
        "sqrt(2) sqrt(2 - sqrt(2))/4 + sqrt(2 - sqrt(2))/4 + sqrt(sqrt(2) + 4 sqrt(2) sqrt(2 - "
        "sqrt(2)) - 2)/4"}},
      {ConstantId::GrotzschB, {"grotzsch_b", "1 / (2 sqrt(5 + 2 sqrt(5)))"}},
      {ConstantId::GrotzschC, {"grotzsch_c", "sqrt(5 + 3 sqrt(5)) (5 - sqrt(5)) / 10"}},
      {ConstantId::HoffmanS, {"hoffman_s", "sqrt(6986 + 14 sqrt(273697)) / 14"}},
      {ConstantId::SoiferAlpha,
       {"soifer_alpha", "smallest root of 27 z^4 + 18 z^3 - 24 z^2 - 18 z + 1 on [0, 1/10]"}},
  };
  return m;
}

}  // namespace

const std::vector<ConstantId>& all_constants() {
  static const std::vector<ConstantId> ids = {
      ConstantId::ChvatalA,  ConstantId::ChvatalB,  ConstantId::ChvatalC, ConstantId::GrotzschB,
      ConstantId::GrotzschC, ConstantId::HoffmanS,  ConstantId::SoiferAlpha,
  };
  return ids;
}

std::string constant_name(ConstantId id) {
  return meta().at(id).name;
}

std::optional<ConstantId> constant_id_from_string(const std::string& name) {
  for (const auto& [id, m] : meta())
    if (name == m.name) return id;
  return std::nullopt;
}

NamedConstant constant(ConstantId id, int digits) {
  if (digits <= 0 || digits > kMaxDecimalDigits)
    throw std::invalid_argument("constant: digits must be in 1..100");
  NamedConstant nc;
  nc.id = id;
  nc.name = meta().at(id).name;
  nc.definition = meta().at(id).definition;
  nc.digits = digits;
  nc.value = digits <= 50 ? Dec100(compute<Dec50>(id)) : compute<Dec100>(id);
  return nc;
}

Dec100 constant_residual(ConstantId id, int digits) {
  NamedConstant nc = constant(id, digits);
  using std::abs;
  if (id == ConstantId::SoiferAlpha) {
    Dec100 v = digits <= 50 ? Dec100(eval_poly(soifer_alpha_polynomial(), Dec50(nc.value)))
                            : eval_poly(soifer_alpha_polynomial(), nc.value);
    return abs(v);
  }
  Dec100 reference = compute<Dec100>(id);
  return abs(nc.value - reference);
}

Dec100 polyroot(const std::vector<Rational>& coeffs, const Rational& lo, const Rational& hi,
                int digits) {
  if (digits <= 0 || digits > kMaxDecimalDigits)
    throw std::invalid_argument("polyroot: digits must be in 1..100");
  if (digits <= 50) return Dec100(polyroot_t<Dec50>(coeffs, Dec50(lo), Dec50(hi)));
  return polyroot_t<Dec100>(coeffs, Dec100(lo), Dec100(hi));
}

const std::vector<Rational>& soifer_alpha_polynomial() {
  static const std::vector<Rational> p = {1, -18, -24, 18, 27};
  return p;
}

}  // namespace udg
