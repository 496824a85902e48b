#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "realdet/bundles.hpp"
#include "realdet/det_signs.hpp"

namespace realdet {

inline constexpr std::uint64_t default_seed = 1729;

/// Outcome of one verification sweep. `failures` holds a short description
/// of every failing case and is empty on success.
struct VerificationReport {
  std::string lemma;
  int bound = 0;
  long long cases_checked = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// A named sweep with the meaning and maximum of its size bound.
struct LemmaInfo {
  std::string_view name;
  std::string_view bound_meaning;
  int default_bound;
  int max_bound;
};

const std::vector<LemmaInfo>& verification_lemmas();

/// Dispatches by name. Throws UnknownLemma, or BoundTooLarge when `bound`
/// exceeds the lemma's maximum (InvalidArgument when it is below 1).
VerificationReport run_verification(std::string_view lemma, int bound, std::uint64_t seed);

/// Every permutation of k <= max_k components with every return-flag
/// assignment: the product of flags against the signature of the explicit
/// permutation on 2k orientations.
VerificationReport verify_orientation_double_exhaustive(int max_k);

/// verify_pinori on every list of at most max_cycles cycles (lengths 1..3,
/// every orientability, return flag and Pin+ sign).
VerificationReport verify_pinori_exhaustive(int max_cycles);

/// The Pin tables and the lift criterion, under both choices of reflection lift.
VerificationReport verify_pin_group_tables();

/// verify_duality on seeded random separating inputs with orientable real part.
VerificationReport verify_duality_samples(int samples, std::uint64_t seed);

/// minimal_quadruple realizes the bundle, for every bundle with k <= max_k,
/// |deg| <= 6 and every w_1 pattern of the right parity.
VerificationReport verify_quadruples_exhaustive(int max_k);

/// jet_det_sign(second o first) = jet_det_sign(second) * jet_det_sign(first)
/// on seeded random divisors and relabeling pairs.
VerificationReport verify_jet_multiplicativity(int pairs, std::uint64_t seed);

/// Every 1 <= delta <= N+1 lies in exactly one w_1 branch and Spin implies
/// orientable, for 3 <= N <= max_N.
VerificationReport verify_hypersurface_partition(int max_N);

/// Teichmuller dimensions, both identities on every stratum, and the
/// codimension estimate, for genus up to max_genus.
VerificationReport verify_teichmuller_strata(int max_genus);

/// Flips each input sign of the general, separating and Spin formulas in turn
/// and checks the output changes exactly by the factor's exponent parity.
/// Base cases range over every curve type with k <= max_k and genus <= 3.
VerificationReport verify_factor_flips(int max_k);

/// The tensor witness has product +1, tensor sign -1, and passes duality.
VerificationReport verify_tensor_witness();

// Random generators shared by sweeps and tests.

Permutation random_permutation(std::size_t n, std::mt19937_64& rng);
/// A random valid separating curve with 1 <= k and genus <= max_genus.
RealCurveType random_separating_curve(int max_genus, std::mt19937_64& rng);
/// Random relabeling respecting the multiplicities of `divisor`.
JetRelabeling random_relabeling(const RealDivisor& divisor, std::mt19937_64& rng);
RealDivisor random_divisor(int max_points, int max_multiplicity, std::mt19937_64& rng);

/// Every valid curve type with genus <= max_genus and k <= max_k.
std::vector<RealCurveType> curve_types(int max_genus, int max_k);

}  // namespace realdet
