#pragma once

#include <array>
#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace realdet {

/// The fixed vocabulary of first Stiefel-Whitney class generators that show
/// up in w_1 decompositions of real moduli spaces.
enum class Generator {
  w1_pin_plus,
  w1_pin_pm,
  w1_Lr,
  w1_Tpol,
  w1_detH1_minus,
  w1_Rw,
  w1_H,
  w1_OX,
  w1_OX_spin,
  w1_frakD,
  w1_H1w,
};

inline constexpr std::size_t generator_count = 11;

std::string_view to_string(Generator g);
/// Throws UnknownGenerator for names outside the vocabulary.
Generator generator_from_string(std::string_view name);
const std::array<Generator, generator_count>& all_generators();

/// A formal sum of generators with coefficients mod 2.
class ClassExpression {
 public:
  ClassExpression() = default;
  ClassExpression(std::initializer_list<Generator> terms);
  /// Throws UnknownGenerator on the first unrecognised name.
  static ClassExpression from_names(const std::vector<std::string>& names);

  int coefficient(Generator g) const { return bits_[index(g)] ? 1 : 0; }
  void add(Generator g, long long coefficient = 1);
  ClassExpression without(Generator g) const;
  bool is_zero() const { return bits_.none(); }
  std::vector<Generator> terms() const;

  ClassExpression& operator+=(const ClassExpression& other) {
    bits_ ^= other.bits_;
    return *this;
  }
  friend ClassExpression operator+(ClassExpression a, const ClassExpression& b) { return a += b; }
  friend bool operator==(const ClassExpression&, const ClassExpression&) = default;

 private:
  static std::size_t index(Generator g) { return static_cast<std::size_t>(g); }
  std::bitset<generator_count> bits_;
};

/// "0" for the zero class, otherwise the terms joined by " + ".
std::string to_string(const ClassExpression& e);

enum class ModuliCase { general, separating, spin, polarized_transverse };

std::string_view to_string(ModuliCase c);
ModuliCase moduli_case_from_string(std::string_view name);

/// Setup of a space of real pseudoholomorphic maps from genus g curves with r
/// real marked points into a real symplectic manifold of dimension 2n.
struct ModuliSetup {
  int n = 2;
  int genus = 0;
  int marked_points = 0;
  bool tau_has_fixed_point = true;
  bool tau_is_identity = false;
  ModuliCase kind = ModuliCase::general;
  int c1d = 0;
  std::optional<int> k_minus;  ///< separating case only
  bool real_part_spin = false;
  bool real_part_pin_plus = false;
  bool has_polarizing_section = false;  ///< polarized-transverse case only

  friend bool operator==(const ModuliSetup&, const ModuliSetup&) = default;
};

/// Range checks throw ConstraintViolation; case-specific fields used outside
/// their case (or missing inside it) throw CaseMismatch.
void validate(const ModuliSetup& s);

/// w_1 of the determinant bundle over the moduli space, per case.
ClassExpression det_pi_decomposition(const ModuliSetup& s);

struct HypersurfaceSpinCheck {
  bool rx_orientable = false;
  bool rx_spin = false;
  bool unique_real_spin = false;
  bool w_xi_zero = false;

  friend bool operator==(const HypersurfaceSpinCheck&, const HypersurfaceSpinCheck&) = default;
};

/// Topology of the real part of a degree delta hypersurface of CP^N with the
/// standard real structure. Throws OutOfRange unless N >= 3 and delta >= 1.
HypersurfaceSpinCheck hypersurface_spin_check(int N, int delta);

/// Which residue class of delta selects the w_1 formula.
enum class HypersurfaceBranch {
  conjugate_pairs,    ///< delta = N+1 mod 4
  empty_real_quadric, ///< delta = N+3 mod 4
  real_hyperplane,    ///< delta = N mod 2, valid on the transverse locus
};

std::string_view to_string(HypersurfaceBranch b);

/// Throws OutOfRange (N < 3) or DegreeOutOfRange (delta outside 1..N+1).
HypersurfaceBranch hypersurface_branch(int N, int delta);

/// w_1 of the moduli space of real rational curves through r real points in
/// a real hypersurface of degree delta. Throws NoFixedPoint when the real
/// structure of the source has no fixed point.
ClassExpression hypersurface_w1(int N, int delta, int r, bool tau_has_fixed_point);

/// Drops the terms that vanish for this hypersurface: the Pin classes when the
/// real part is Spin, the class of w_xi when w_xi vanishes, and L_r when r = 0.
ClassExpression apply_hypersurface_vanishings(const ClassExpression& e,
                                              const HypersurfaceSpinCheck& check, int r);

struct HypersurfaceClassification {
  int N = 0;
  int delta = 0;
  int r = 0;
  HypersurfaceSpinCheck spin;
  HypersurfaceBranch branch = HypersurfaceBranch::conjugate_pairs;
  ClassExpression w1;
  ClassExpression reduced;
  bool orientable = false;  ///< reduced expression is zero
};

HypersurfaceClassification classify_hypersurface(int N, int delta, int r, bool tau_has_fixed_point);

/// Orientability of the space of real rational curves in CP^3, seen as the
/// degree 1 hypersurface of CP^4: the (N, delta, r) = (4, 1, 0) instance.
bool cp3_orientability_verdict();

struct MarkedOrientability {
  bool Lr_orientable = false;
  bool H_orientable = false;
  bool conclusive = false;  ///< false when no sufficient condition applied

  friend bool operator==(const MarkedOrientability&, const MarkedOrientability&) = default;
};

/// Sufficient conditions for the marked-point bundles L_r and H to be
/// orientable. Throws CaseMismatch outside the separating and Spin cases.
MarkedOrientability marked_bundle_orientable(const ModuliSetup& s,
                                             const std::vector<int>& real_points_per_component);

bool genus0_orientable(int r, bool tau_has_fixed_point, bool rx_spin, int c1d);

enum class PolarizationRecipe { ConjugateQuadricPairs, PlusRealHyperplane, PlusEmptyRealQuadric };

std::string_view to_string(PolarizationRecipe p);

/// How to build a polarizing divisor for a degree delta hypersurface.
PolarizationRecipe polarization_recipe(int N, int delta);

}  // namespace realdet
