#pragma once

#include <span>
#include <vector>

#include "realdet/permutation.hpp"
#include "realdet/sign.hpp"

namespace realdet {

/// Topological type (g, k, eps) of a real curve: genus, number of real
/// components (circles of the fixed locus) and whether the real locus
/// disconnects the surface.
struct RealCurveType {
  int genus = 0;
  int num_real_components = 0;
  bool separating = false;

  friend bool operator==(const RealCurveType&, const RealCurveType&) = default;
};

/// Checks the Klein constraints: 0 <= k <= g+1, separating => k >= 1 and
/// k = g+1 (mod 2), genus 0 => k <= 1. Throws Error{ConstraintViolation}
/// naming the failed condition.
RealCurveType validate_curve_type(int genus, int num_real_components, bool separating);
void validate(const RealCurveType& curve);

/// Combinatorial shadow of a real orientation-preserving diffeomorphism:
/// how it permutes the real components, whether the return map of each cycle
/// reverses the circle, whether it swaps the two halves of a separating
/// curve, and the sign of its action on H^1(Sigma, R)_{-1}.
///
/// `cycle_return_flags[i]` belongs to `component_perm.cycles()[i]`.
struct RealDiffeoData {
  RealCurveType curve;
  Permutation component_perm;
  std::vector<Sign> cycle_return_flags;
  bool swaps_halves = false;
  Sign det_h1_sign = Sign::plus();

  friend bool operator==(const RealDiffeoData&, const RealDiffeoData&) = default;
};

RealDiffeoData identity_diffeo(const RealCurveType& curve);
void validate(const RealDiffeoData& diffeo);

/// (-1)^(number of inversions).
Sign signature(const Permutation& perm);

/// The permutation induced on the 2|S| orientations of the components in the
/// stable subset S. Orientation symbols are numbered 2*j (the reference
/// orientation of the j-th member of S, in increasing label order) and
/// 2*j+1 (its opposite). Each cycle reverses orientation on its closing step
/// exactly when its return flag is -1.
Permutation orientation_lift(const Permutation& perm, std::span<const Sign> cycle_flags,
                             const std::vector<bool>& subset);

/// Signature of the permutation on the 2|S| orientations of a stable subset S
/// of components. `cycle_flags` is aligned with `perm.cycles()`; flags of cycles
/// outside S are ignored. Evaluated both as the product of the flags of the
/// cycles in S and as the signature of `orientation_lift`; disagreement
/// throws Error{OracleMismatch}.
Sign orientation_double_signature(const Permutation& perm, std::span<const Sign> cycle_flags,
                                  const std::vector<bool>& subset);
/// Same, with S the whole component set.
Sign orientation_double_signature(const Permutation& perm, std::span<const Sign> cycle_flags);

/// Dimension 3g-3 of the real Teichmuller space. Throws GenusTooSmall for g < 2.
int teichmuller_dimension(int genus);

/// Sign of the action of a real diffeomorphism on the orientations of the real
/// Teichmuller space, i.e. the sign of det(phi_*) on H_1(Sigma, R)_{+1}.
Sign teichmuller_action_sign(const RealDiffeoData& diffeo);

/// A stratum of curves with an automorphism of prime order p: quotient genus
/// g', number h of branch points and dimension d = 3g'-3+h of the fixed locus.
struct AutomorphismStratum {
  int quotient_genus = 0;
  int branch_points = 0;
  int fixed_dimension = 0;

  friend bool operator==(const AutomorphismStratum&, const AutomorphismStratum&) = default;
};

bool is_prime(int n);

/// All (g', h) with 2g-2 = p(2g'-2) + h(p-1) and d = 3g'-3+h >= 0, searched
/// over 0 <= g' <= g and 0 <= h <= 2g+2. Requires g >= 2 and p prime.
std::vector<AutomorphismStratum> riemann_hurwitz_strata(int genus, int prime);

/// True iff every stratum for every prime p <= 2g+1 has codimension
/// 3g-3-d >= 2. Requires g >= 4.
bool automorphism_locus_codim_ok(int genus);

}  // namespace realdet
