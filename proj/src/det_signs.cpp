#include "realdet/det_signs.hpp"

#include "realdet/error.hpp"

namespace realdet {

namespace {

std::string cycle_field(std::size_t i, const char* name) {
  return "pin_cycles[" + std::to_string(i) + "]." + name;
}

SignReport assemble(std::vector<SignFactor> factors) {
  Sign product = Sign::plus();
  for (const auto& f : factors) product *= f.contribution();
  return SignReport{product, std::move(factors)};
}

std::vector<bool> bits_or_zero(const std::vector<bool>& bits, std::size_t k) {
  return bits.empty() ? std::vector<bool>(k, false) : bits;
}

void require_real_part(const RealBundle& bundle) {
  if (bundle.curve.num_real_components == 0) {
    throw Error(ErrorCode::EmptyRealPart, "the formula needs a nonempty real part",
                "curve.num_real_components");
  }
}

bool all_orientable(const RealBundle& bundle) {
  for (bool b : bundle.w1_bits) {
    if (b) return false;
  }
  return true;
}

}  // namespace

void validate(const RealBundle& bundle, const AutomorphismData& a) {
  validate(bundle);
  validate(a.diffeo);
  if (!(a.diffeo.curve == bundle.curve)) {
    throw Error(ErrorCode::ValidationError, "bundle and diffeomorphism live on different curves",
                "diffeo.curve");
  }
  const auto cycles = a.diffeo.component_perm.cycles();
  if (a.pin_cycles.size() != cycles.size()) {
    throw Error(ErrorCode::ValidationError,
                "expected " + std::to_string(cycles.size()) + " pin cycles, got " +
                    std::to_string(a.pin_cycles.size()),
                "pin_cycles");
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& pc = a.pin_cycles[i];
    if (pc.length != static_cast<int>(cycles[i].size())) {
      throw Error(ErrorCode::ValidationError, "cycle length does not match the permutation",
                  cycle_field(i, "length"));
    }
    if (pc.s_phi != a.diffeo.cycle_return_flags[i]) {
      throw Error(ErrorCode::ValidationError, "return flag differs from the diffeomorphism's",
                  cycle_field(i, "s_phi"));
    }
    for (std::size_t c : cycles[i]) {
      if (pc.orientable == bundle.w1_bits[c]) {
        throw Error(ErrorCode::ValidationError,
                    "orientability disagrees with w1 on component " + std::to_string(c + 1),
                    cycle_field(i, "orientable"));
      }
    }
  }
  const auto k = static_cast<std::size_t>(bundle.curve.num_real_components);
  if (a.spin_w_bits.size() != k) {
    throw Error(ErrorCode::ValidationError,
                "expected " + std::to_string(k) + " spin_w bits, got " +
                    std::to_string(a.spin_w_bits.size()),
                "spin_w_bits");
  }
}

AutomorphismData make_automorphism(const RealBundle& bundle, const RealDiffeoData& diffeo) {
  AutomorphismData a;
  a.diffeo = diffeo;
  const auto cycles = diffeo.component_perm.cycles();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    PinCycleData pc;
    pc.length = static_cast<int>(cycles[i].size());
    pc.orientable = !bundle.w1_bits.at(cycles[i].front());
    pc.s_phi = diffeo.cycle_return_flags.at(i);
    a.pin_cycles.push_back(pc);
  }
  a.spin_w_bits.assign(static_cast<std::size_t>(bundle.curve.num_real_components), false);
  return a;
}

AutomorphismData identity_automorphism(const RealBundle& bundle) {
  return make_automorphism(bundle, identity_diffeo(bundle.curve));
}

SignReport sign_trivial_bundle_report(const AutomorphismData& a, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive", "n");
  return assemble({
      {"eps_Phi_p_pm", pin_action_signature(a.pin_cycles, PinFlavor::plus), 1},
      {"s_trivial", a.s_trivial, 1},
      {"det_phi_star", a.diffeo.det_h1_sign, n},
  });
}

Sign sign_trivial_bundle(const AutomorphismData& a, int n) {
  return sign_trivial_bundle_report(a, n).sign;
}

Sign epsilon_dmin(const RealDiffeoData& diffeo, const RealBundle& bundle) {
  const auto& perm = diffeo.component_perm;
  const Sign eps_minus = perm.restricted_to(bundle.w1_bits).signature();
  if (!diffeo.curve.separating || !diffeo.swaps_halves) return eps_minus;
  const long long excess = bundle.degree - nonorientable_count(bundle);
  return mod_floor(excess, 4) == 0 ? eps_minus : -eps_minus;
}

SignReport sign_general_report(const RealBundle& bundle, const AutomorphismData& a) {
  require_real_part(bundle);
  return assemble({
      {"eps_Phi_p_plus", pin_action_signature(a.pin_cycles, PinFlavor::plus), 1},
      {"eps_Phi_D_min", a.d_min_sign, 1},
      {"eps_phi_d_min", epsilon_dmin(a.diffeo, bundle), 1},
      {"eps_sigma_minus",
       orientation_double_signature(a.diffeo.component_perm, a.diffeo.cycle_return_flags,
                                    bundle.w1_bits),
       1},
      {"det_phi_star", a.diffeo.det_h1_sign, bundle.rank},
  });
}

Sign sign_general(const RealBundle& bundle, const AutomorphismData& a) {
  return sign_general_report(bundle, a).sign;
}

SignReport sign_separating_report(const RealBundle& bundle, const AutomorphismData& a) {
  if (!bundle.curve.separating) {
    throw Error(ErrorCode::NotSeparating, "the curve is not separating", "curve.separating");
  }
  const int k_minus = nonorientable_count(bundle);
  if (parity(bundle.degree + k_minus) != 0) {
    throw Error(ErrorCode::ConstraintViolation, "deg + k_minus must be even", "degree");
  }
  return assemble({
      {"eps_Phi_p_plus", pin_action_signature(a.pin_cycles, PinFlavor::plus), 1},
      {"det_Phi_o", a.o_sign, 1},
      {"eps_sigma_RSigma", Sign::negative_if(a.diffeo.swaps_halves), (bundle.degree + k_minus) / 2},
      {"eps_phi_minus_RSigma", a.diffeo.component_perm.restricted_to(bundle.w1_bits).signature(), 1},
      {"det_phi_star", a.diffeo.det_h1_sign, bundle.rank},
  });
}

Sign sign_separating(const RealBundle& bundle, const AutomorphismData& a) {
  return sign_separating_report(bundle, a).sign;
}

SignReport sign_spin_report(const RealBundle& bundle, const AutomorphismData& a) {
  require_real_part(bundle);
  if (parity(bundle.degree) != 0) {
    throw Error(ErrorCode::PreconditionViolated, "the Spin formula needs even degree", "degree");
  }
  if (!all_orientable(bundle)) {
    throw Error(ErrorCode::PreconditionViolated, "the Spin formula needs w1 = 0", "w1");
  }
  const auto k = static_cast<std::size_t>(bundle.curve.num_real_components);
  const auto w_bits = bits_or_zero(a.spin_w_bits, k);
  return assemble({
      {"eps_Phi_p_pm", pin_action_signature(a.pin_cycles, PinFlavor::plus), 1},
      {"eps_Phi_o_xi", a.spin_semiorientation_sign, mod_floor(1 - bundle.curve.genus, 2)},
      {"eps_sigma_w_xi",
       orientation_double_signature(a.diffeo.component_perm, a.diffeo.cycle_return_flags, w_bits),
       1},
      {"det_phi_star", a.diffeo.det_h1_sign, bundle.rank},
  });
}

Sign sign_spin(const RealBundle& bundle, const AutomorphismData& a) {
  return sign_spin_report(bundle, a).sign;
}

SignReport sign_rank_reduction_report(const RealBundle& bundle, const AutomorphismData& a,
                                      Sign sign_det_line) {
  if (bundle.rank < 2) {
    throw Error(ErrorCode::RankTooSmall, "rank reduction needs rank >= 2", "rank");
  }
  return assemble({
      {"eps_Phi_p_plus", pin_action_signature(a.pin_cycles, PinFlavor::plus), 1},
      {"det_phi_star", a.diffeo.det_h1_sign, bundle.rank - 1},
      {"sign_det_line", sign_det_line, 1},
  });
}

Sign sign_rank_reduction(const RealBundle& bundle, const AutomorphismData& a, Sign sign_det_line) {
  return sign_rank_reduction_report(bundle, a, sign_det_line).sign;
}

std::string_view applicable_case(const RealBundle& bundle) {
  if (bundle.curve.separating) return "separating";
  if (bundle.curve.num_real_components == 0) return "trivial";
  if (parity(bundle.degree) == 0 && all_orientable(bundle)) return "spin";
  return "general";
}

SignReport applicable_sign_report(const RealBundle& bundle, const AutomorphismData& a) {
  const auto kind = applicable_case(bundle);
  if (kind == "separating") return sign_separating_report(bundle, a);
  if (kind == "trivial") return sign_trivial_bundle_report(a, bundle.rank);
  if (kind == "spin") return sign_spin_report(bundle, a);
  return sign_general_report(bundle, a);
}

AutomorphismData dual_transport(const AutomorphismData& a) { return a; }

bool verify_duality(const RealBundle& bundle, const AutomorphismData& a) {
  if (!all_orientable(bundle)) {
    throw Error(ErrorCode::PreconditionViolated, "duality is checked for orientable real part only",
                "w1");
  }
  const Sign direct = applicable_sign_report(bundle, a).sign;
  const Sign dual = applicable_sign_report(dual_bundle(bundle), dual_transport(a)).sign;
  return direct == dual;
}

TensorWitness tensor_nonmultiplicativity_witness() {
  TensorWitness w;
  w.bundle.curve = validate_curve_type(2, 1, false);
  w.bundle.rank = 1;
  w.bundle.degree = 2;
  w.bundle.w1_bits = {false};
  w.automorphism = identity_automorphism(w.bundle);
  w.automorphism.diffeo.det_h1_sign = Sign::minus();
  validate(w.bundle, w.automorphism);

  w.sign_bundle = applicable_sign_report(w.bundle, w.automorphism).sign;
  w.sign_dual = applicable_sign_report(dual_bundle(w.bundle), dual_transport(w.automorphism)).sign;
  // N (x) N* is the trivial line; the identity acts on it with s = +1.
  w.tensor_sign = sign_trivial_bundle(w.automorphism, 1);
  return w;
}

}  // namespace realdet
