#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "realdet/bundles.hpp"
#include "realdet/pin_spin.hpp"
#include "realdet/sign.hpp"
#include "realdet/surface_topology.hpp"

namespace realdet {

/// Everything a real automorphism (Phi, phi) of a bundle contributes to the
/// determinant sign formulas. The bundle-level signs are inputs: they come
/// from choices of sections and structures with no combinatorial normal form.
struct AutomorphismData {
  RealDiffeoData diffeo;
  std::vector<PinCycleData> pin_cycles;  ///< aligned with diffeo.component_perm.cycles()
  Sign s_trivial = Sign::plus();         ///< action on Det of the trivial bundle
  Sign d_min_sign = Sign::plus();        ///< eps(Phi_{D_min})
  Sign o_sign = Sign::plus();            ///< det(Phi_o), separating case
  Sign spin_semiorientation_sign = Sign::plus();  ///< eps(Phi_{o,xi})
  std::vector<bool> spin_w_bits;         ///< w_xi on each real component

  friend bool operator==(const AutomorphismData&, const AutomorphismData&) = default;
};

/// Checks the bundle, the diffeo, that both live on the same curve, that
/// pin_cycles follow the cycles of the component permutation (length, return
/// flag, orientability matching w_1 on every component of the cycle) and that
/// spin_w_bits has one entry per component. Throws ValidationError naming the
/// field, or the underlying error of the bundle/diffeo checks.
void validate(const RealBundle& bundle, const AutomorphismData& a);

/// Pin cycles derived from the diffeo and the bundle, every other sign +1.
AutomorphismData make_automorphism(const RealBundle& bundle, const RealDiffeoData& diffeo);
AutomorphismData identity_automorphism(const RealBundle& bundle);

struct SignFactor {
  std::string symbol;
  Sign value;
  long long exponent = 1;

  Sign contribution() const { return value.pow(exponent); }
  friend bool operator==(const SignFactor&, const SignFactor&) = default;
};

/// A sign together with the factors it is the product of.
struct SignReport {
  Sign sign;
  std::vector<SignFactor> factors;

  friend bool operator==(const SignReport&, const SignReport&) = default;
};

SignReport sign_trivial_bundle_report(const AutomorphismData& a, int n);
SignReport sign_general_report(const RealBundle& bundle, const AutomorphismData& a);
SignReport sign_separating_report(const RealBundle& bundle, const AutomorphismData& a);
SignReport sign_spin_report(const RealBundle& bundle, const AutomorphismData& a);
SignReport sign_rank_reduction_report(const RealBundle& bundle, const AutomorphismData& a,
                                      Sign sign_det_line);

/// eps(Phi_{p+/-}) * s_trivial * det(phi^*)^n.
Sign sign_trivial_bundle(const AutomorphismData& a, int n);

/// Signature of the permutation of the non-orientable components, negated on
/// a separating curve whose halves are swapped unless deg - r+_min = 0 mod 4.
Sign epsilon_dmin(const RealDiffeoData& diffeo, const RealBundle& bundle);

/// Minimal-quadruple formula. Throws EmptyRealPart when k = 0.
Sign sign_general(const RealBundle& bundle, const AutomorphismData& a);
/// Separating-curve formula. Throws NotSeparating.
Sign sign_separating(const RealBundle& bundle, const AutomorphismData& a);
/// Spin formula for orientable real part and even degree. Throws
/// PreconditionViolated otherwise, EmptyRealPart when k = 0.
Sign sign_spin(const RealBundle& bundle, const AutomorphismData& a);
/// Reduction to the determinant line. Throws RankTooSmall for rank < 2.
Sign sign_rank_reduction(const RealBundle& bundle, const AutomorphismData& a, Sign sign_det_line);

/// Formula used for duality checks: separating, else Spin for even degree
/// and w_1 = 0, else general; the trivial-bundle formula (with n = rank) when
/// k = 0. Returns "separating", "spin", "general" or "trivial".
std::string_view applicable_case(const RealBundle& bundle);
SignReport applicable_sign_report(const RealBundle& bundle, const AutomorphismData& a);

/// The automorphism data carried to the dual bundle by the transpose inverse.
/// At this combinatorial level every sign is unchanged.
AutomorphismData dual_transport(const AutomorphismData& a);

/// Compares the applicable formula on (N, a) with the one on the dual.
/// Requires orientable real part (PreconditionViolated otherwise).
bool verify_duality(const RealBundle& bundle, const AutomorphismData& a);

struct TensorWitness {
  RealBundle bundle;
  AutomorphismData automorphism;
  Sign sign_bundle;  ///< action on Det of N
  Sign sign_dual;    ///< action on Det of N*
  Sign tensor_sign;  ///< action on Det of N (x) N* = trivial line
  Sign product() const { return sign_bundle * sign_dual; }
};

/// A genus 2 input where the two determinant signs multiply to +1 while the
/// tensor product, a trivial line, is acted on by det(phi^*) = -1.
TensorWitness tensor_nonmultiplicativity_witness();

}  // namespace realdet
