#pragma once

#include <optional>
#include <string>
#include <vector>

#include "udg/numeric.hpp"

namespace udg {

enum class ConstantId {
  ChvatalA,
  ChvatalB,
  ChvatalC,
  GrotzschB,
  GrotzschC,
  HoffmanS,
  SoiferAlpha,
};

struct NamedConstant {
  ConstantId id;
  std::string name;        // e.g. "chvatal_a"
  std::string definition;  // closed form, or polynomial + bracket
  int digits;
  Dec100 value;  // computed at >= digits decimal digits

  std::string value_string() const { return decimal_to_string(value, digits); }
};

const std::vector<ConstantId>& all_constants();
std::string constant_name(ConstantId id);
std::optional<ConstantId> constant_id_from_string(const std::string& name);

// Value at the requested precision (digits <= 100).
NamedConstant constant(ConstantId id, int digits = 50);

// Defining-relation residual at the constant's value: |P(value)| for
// soifer_alpha (P its defining polynomial), and the deviation from an
// independent re-evaluation at higher working precision for the closed forms.
Dec100 constant_residual(ConstantId id, int digits = 50);

// Root of the polynomial c[0] + c[1] z + ... + c[k] z^k on [lo, hi] by
// bisection followed by Newton polishing, at `digits` decimal digits.
// Requires a sign change on the bracket.
Dec100 polyroot(const std::vector<Rational>& coeffs, const Rational& lo, const Rational& hi,
                int digits = 50);

// Defining polynomial of soifer_alpha in ascending order:
// 27 z^4 + 18 z^3 - 24 z^2 - 18 z + 1, smallest root taken on [0, 1/10].
const std::vector<Rational>& soifer_alpha_polynomial();

}  // namespace udg
