#pragma once

#include <array>
#include <span>

#include "realdet/sign.hpp"

namespace realdet {

enum class PinFlavor { plus, minus };

/// An element s * e^a of the four-element group Pin_1^{+/-} = {+1, -1, +e, -e},
/// where e lifts the reflection -1 in O_1. The flavor only decides e^2.
struct PinElement {
  bool negative = false;
  bool has_e = false;

  friend bool operator==(const PinElement&, const PinElement&) = default;
};

class PinGroup {
 public:
  /// `negate_lift` picks -e instead of e as the distinguished lift of the
  /// reflection; every exposed predicate must be independent of that choice.
  explicit PinGroup(PinFlavor flavor, bool negate_lift = false)
      : flavor_(flavor), negate_lift_(negate_lift) {}

  PinFlavor flavor() const { return flavor_; }

  static constexpr std::array<PinElement, 4> elements() {
    return {PinElement{false, false}, PinElement{true, false}, PinElement{false, true},
            PinElement{true, true}};
  }
  static constexpr PinElement one() { return {false, false}; }
  static constexpr PinElement minus_one() { return {true, false}; }

  /// The distinguished lift of the reflection.
  PinElement reflection_lift() const { return PinElement{negate_lift_, true}; }

  PinElement multiply(PinElement a, PinElement b) const;

  /// Image in O_1 = {+1, -1}: elements involving e cover the reflection.
  static Sign covering(PinElement x) { return Sign::negative_if(x.has_e); }

  bool is_associative() const;
  bool is_closed() const;
  bool is_minus_one_central() const;

 private:
  PinFlavor flavor_;
  bool negate_lift_;
};

/// Whether the base-reversing map g(t, v) = (1-t, v) of the model line bundle
/// over a circle lifts to its Pin structure. Decided by searching the lifts of
/// the identity of O_1 for one compatible with the gluing by the reflection
/// lift (orientable: gluing by 1; otherwise by e).
bool pin_reversal_preserves(bool orientable, PinFlavor flavor, bool negate_lift = false);

/// Per-cycle data: cycle length, orientability of the real bundle over the
/// cycle's support, the return-orientation flag s_phi and the given action
/// s_{p+} of the return map on the Pin+ structures.
struct PinCycleData {
  int length = 1;
  bool orientable = true;
  Sign s_phi = Sign::plus();
  Sign s_pin_plus = Sign::plus();

  friend bool operator==(const PinCycleData&, const PinCycleData&) = default;
};

/// s_{p-}(c): equal to s_{p+}(c) unless the return map reverses the circle and
/// the two flavors disagree on whether the reversal lifts.
Sign cycle_pin_minus_sign(const PinCycleData& cycle);

Sign cycle_pin_sign(const PinCycleData& cycle, PinFlavor flavor);

/// Product of the per-cycle signs of the requested flavor.
Sign pin_action_signature(std::span<const PinCycleData> cycles, PinFlavor flavor);

/// Recomputes eps(Phi_{p+}), eps(Phi_{p-}) and the orientation signature on
/// non-orientable components independently and checks
/// eps(Phi_{p+}) = eps(Phi_{p-}) * eps(sigma^-).
bool verify_pinori(std::span<const PinCycleData> cycles);

/// Automorphisms of L + R^n of the form Phi_L + Phi_1 + ... + Phi_n with
/// every trivial summand orientation preserving keep the stabilized Pin+
/// structure. Returns false outside that hypothesis (nothing is claimed).
bool stabilized_pin_plus_preserved(bool block_diagonal, bool trivial_factors_orientation_preserving);

}  // namespace realdet
