#include "realdet/pin_spin.hpp"

#include <vector>

#include "realdet/error.hpp"
#include "realdet/permutation.hpp"
#include "realdet/surface_topology.hpp"

namespace realdet {

PinElement PinGroup::multiply(PinElement a, PinElement b) const {
  // (s1 e^a)(s2 e^b) = s1 s2 e^(a+b), with e^2 = +1 (Pin+) or -1 (Pin-).
  // The distinguished lift only relabels; the product is defined on s*e^a.
  bool negative = a.negative != b.negative;
  const bool both_e = a.has_e && b.has_e;
  if (both_e && flavor_ == PinFlavor::minus) negative = !negative;
  return PinElement{negative, a.has_e != b.has_e};
}

bool PinGroup::is_associative() const {
  for (auto a : elements()) {
    for (auto b : elements()) {
      for (auto c : elements()) {
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) return false;
      }
    }
  }
  return true;
}

bool PinGroup::is_closed() const {
  const auto all = elements();
  for (auto a : all) {
    for (auto b : all) {
      const auto ab = multiply(a, b);
      bool found = false;
      for (auto x : all) found = found || (x == ab);
      if (!found) return false;
      if (covering(ab) != covering(a) * covering(b)) return false;
    }
  }
  return true;
}

bool PinGroup::is_minus_one_central() const {
  for (auto a : elements()) {
    if (multiply(minus_one(), a) != multiply(a, minus_one())) return false;
  }
  return true;
}

bool pin_reversal_preserves(bool orientable, PinFlavor flavor, bool negate_lift) {
  const PinGroup group(flavor, negate_lift);
  const PinElement glue = orientable ? PinGroup::one() : group.reflection_lift();

  // A lift of g has the form (t, p) -> (1-t, x p) with x covering the identity.
  // It descends to the glued bundle iff x p = glue * x * (glue * p) for all p.
  for (auto x : PinGroup::elements()) {
    if (PinGroup::covering(x) != Sign::plus()) continue;
    bool compatible = true;
    for (auto p : PinGroup::elements()) {
      const auto lhs = group.multiply(x, p);
      const auto rhs = group.multiply(glue, group.multiply(x, group.multiply(glue, p)));
      if (lhs != rhs) {
        compatible = false;
        break;
      }
    }
    if (compatible) return true;
  }
  return false;
}

Sign cycle_pin_minus_sign(const PinCycleData& cycle) {
  if (cycle.s_phi.is_plus()) return cycle.s_pin_plus;
  const bool plus_lifts = pin_reversal_preserves(cycle.orientable, PinFlavor::plus);
  const bool minus_lifts = pin_reversal_preserves(cycle.orientable, PinFlavor::minus);
  return cycle.s_pin_plus * Sign::negative_if(plus_lifts != minus_lifts);
}

Sign cycle_pin_sign(const PinCycleData& cycle, PinFlavor flavor) {
  return flavor == PinFlavor::plus ? cycle.s_pin_plus : cycle_pin_minus_sign(cycle);
}

Sign pin_action_signature(std::span<const PinCycleData> cycles, PinFlavor flavor) {
  Sign product = Sign::plus();
  for (const auto& c : cycles) product *= cycle_pin_sign(c, flavor);
  return product;
}

bool verify_pinori(std::span<const PinCycleData> cycles) {
  Sign eps_plus = Sign::plus();
  for (const auto& c : cycles) eps_plus *= c.s_pin_plus;

  Sign eps_minus = Sign::plus();
  for (const auto& c : cycles) eps_minus *= cycle_pin_minus_sign(c);

  std::vector<std::size_t> lengths;
  std::vector<Sign> flags;
  std::vector<bool> nonorientable;
  for (const auto& c : cycles) {
    if (c.length < 1) {
      throw Error(ErrorCode::InvalidArgument, "cycle length must be positive", "length");
    }
    lengths.push_back(static_cast<std::size_t>(c.length));
    flags.push_back(c.s_phi);
    nonorientable.insert(nonorientable.end(), static_cast<std::size_t>(c.length), !c.orientable);
  }
  const auto perm = Permutation::from_cycle_lengths(lengths);
  const Sign eps_sigma_minus = orientation_double_signature(perm, flags, nonorientable);

  return eps_plus == eps_minus * eps_sigma_minus;
}

bool stabilized_pin_plus_preserved(bool block_diagonal, bool trivial_factors_orientation_preserving) {
  if (!block_diagonal || !trivial_factors_orientation_preserving) return false;
  // Reduces to the rank-one model: the reflection lift must square to one.
  return pin_reversal_preserves(false, PinFlavor::plus);
}

}  // namespace realdet
