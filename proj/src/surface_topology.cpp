#include "realdet/surface_topology.hpp"

#include <string>

#include "realdet/error.hpp"

namespace realdet {

RealCurveType validate_curve_type(int genus, int k, bool separating) {
  if (genus < 0) {
    throw Error(ErrorCode::ConstraintViolation, "genus must be nonnegative", "genus");
  }
  if (k < 0) {
    throw Error(ErrorCode::ConstraintViolation, "number of real components must be nonnegative",
                "num_real_components");
  }
  if (k > genus + 1) {
    throw Error(ErrorCode::ConstraintViolation,
                "k <= g+1 fails: k=" + std::to_string(k) + ", g=" + std::to_string(genus),
                "num_real_components");
  }
  if (separating) {
    if (k < 1) {
      throw Error(ErrorCode::ConstraintViolation, "a separating curve needs k >= 1",
                  "num_real_components");
    }
    if (parity(k) != parity(genus + 1)) {
      throw Error(ErrorCode::ConstraintViolation,
                  "parity k = g+1 (mod 2) fails for a separating curve: k=" + std::to_string(k) +
                      ", g=" + std::to_string(genus),
                  "num_real_components");
    }
  }
  if (genus == 0 && k > 1) {
    throw Error(ErrorCode::ConstraintViolation, "a genus 0 curve has at most one real component",
                "num_real_components");
  }
  return RealCurveType{genus, k, separating};
}

void validate(const RealCurveType& curve) {
  validate_curve_type(curve.genus, curve.num_real_components, curve.separating);
}

RealDiffeoData identity_diffeo(const RealCurveType& curve) {
  validate(curve);
  const auto k = static_cast<std::size_t>(curve.num_real_components);
  return RealDiffeoData{curve, Permutation::identity(k), std::vector<Sign>(k, Sign::plus()), false,
                        Sign::plus()};
}

void validate(const RealDiffeoData& diffeo) {
  validate(diffeo.curve);
  if (diffeo.component_perm.size() != static_cast<std::size_t>(diffeo.curve.num_real_components)) {
    throw Error(ErrorCode::ConstraintViolation,
                "component permutation acts on " + std::to_string(diffeo.component_perm.size()) +
                    " components but the curve has " +
                    std::to_string(diffeo.curve.num_real_components),
                "component_perm");
  }
  if (diffeo.cycle_return_flags.size() != diffeo.component_perm.cycle_count()) {
    throw Error(ErrorCode::InconsistentFlags,
                "expected one return flag per cycle (" +
                    std::to_string(diffeo.component_perm.cycle_count()) + "), got " +
                    std::to_string(diffeo.cycle_return_flags.size()),
                "cycle_return_flags");
  }
  if (diffeo.swaps_halves && !diffeo.curve.separating) {
    throw Error(ErrorCode::ConstraintViolation,
                "swaps_halves is only meaningful on a separating curve", "swaps_halves");
  }
}

Sign signature(const Permutation& perm) { return perm.signature(); }

namespace {

void check_flags(const Permutation& perm, std::span<const Sign> cycle_flags,
                 const std::vector<bool>& subset) {
  if (subset.size() != perm.size()) {
    throw Error(ErrorCode::InvalidArgument, "subset mask length does not match permutation size");
  }
  if (cycle_flags.size() != perm.cycle_count()) {
    throw Error(ErrorCode::InconsistentFlags,
                "expected " + std::to_string(perm.cycle_count()) + " cycle flags, got " +
                    std::to_string(cycle_flags.size()),
                "cycle_return_flags");
  }
  if (!perm.stabilizes(subset)) {
    throw Error(ErrorCode::PreconditionViolated, "component subset is not stable");
  }
}

}  // namespace

Permutation orientation_lift(const Permutation& perm, std::span<const Sign> cycle_flags,
                             const std::vector<bool>& subset) {
  check_flags(perm, cycle_flags, subset);

  std::vector<std::size_t> position(perm.size(), 0);
  std::size_t members = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (subset[i]) position[i] = members++;
  }

  // step_flip[x] = true when x -> perm(x) reverses the reference orientation
  std::vector<bool> step_flip(perm.size(), false);
  const auto cycles = perm.cycles();
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (cycle_flags[c].is_minus()) step_flip[cycles[c].back()] = true;
  }

  std::vector<std::size_t> images(2 * members);
  for (std::size_t x = 0; x < perm.size(); ++x) {
    if (!subset[x]) continue;
    const std::size_t from = 2 * position[x];
    const std::size_t to = 2 * position[perm(x)];
    images[from] = to + (step_flip[x] ? 1 : 0);
    images[from + 1] = to + (step_flip[x] ? 0 : 1);
  }
  return Permutation::from_images(std::move(images));
}

Sign orientation_double_signature(const Permutation& perm, std::span<const Sign> cycle_flags,
                                  const std::vector<bool>& subset) {
  check_flags(perm, cycle_flags, subset);

  Sign formula = Sign::plus();
  const auto cycles = perm.cycles();
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (subset[cycles[c].front()]) formula *= cycle_flags[c];
  }

  const Sign oracle = orientation_lift(perm, cycle_flags, subset).signature();
  if (formula != oracle) {
    throw Error(ErrorCode::OracleMismatch,
                "orientation signature: flag product disagrees with explicit lift");
  }
  return formula;
}

Sign orientation_double_signature(const Permutation& perm, std::span<const Sign> cycle_flags) {
  return orientation_double_signature(perm, cycle_flags, std::vector<bool>(perm.size(), true));
}

int teichmuller_dimension(int genus) {
  if (genus < 2) {
    throw Error(ErrorCode::GenusTooSmall, "Teichmuller space needs genus >= 2", "genus");
  }
  return 3 * genus - 3;
}

Sign teichmuller_action_sign(const RealDiffeoData& diffeo) {
  validate(diffeo);
  if (diffeo.curve.genus < 2) {
    throw Error(ErrorCode::GenusTooSmall, "Teichmuller action needs genus >= 2", "curve.genus");
  }
  return diffeo.det_h1_sign;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<AutomorphismStratum> riemann_hurwitz_strata(int genus, int prime) {
  if (genus < 2) throw Error(ErrorCode::GenusTooSmall, "strata need genus >= 2", "genus");
  if (!is_prime(prime)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(prime) + " is not prime", "prime");
  }
  std::vector<AutomorphismStratum> strata;
  for (int qg = 0; qg <= genus; ++qg) {
    for (int h = 0; h <= 2 * genus + 2; ++h) {
      if (2 * genus - 2 != prime * (2 * qg - 2) + h * (prime - 1)) continue;
      const int d = 3 * qg - 3 + h;
      if (d < 0) continue;
      strata.push_back({qg, h, d});
    }
  }
  return strata;
}

bool automorphism_locus_codim_ok(int genus) {
  if (genus < 4) {
    throw Error(ErrorCode::GenusTooSmall, "the codimension estimate needs genus >= 4", "genus");
  }
  const int dim = teichmuller_dimension(genus);
  for (int p = 2; p <= 2 * genus + 1; ++p) {
    if (!is_prime(p)) continue;
    for (const auto& s : riemann_hurwitz_strata(genus, p)) {
      if (dim - s.fixed_dimension < 2) return false;
    }
  }
  return true;
}

}  // namespace realdet
