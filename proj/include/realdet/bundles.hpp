#pragma once

#include <vector>

#include "realdet/permutation.hpp"
#include "realdet/sign.hpp"
#include "realdet/surface_topology.hpp"

namespace realdet {

/// A complex vector bundle with real structure, reduced to the data the sign
/// formulas consume: rank, degree, and w_1 of the real part evaluated on each
/// real component (true = non-orientable over that circle).
struct RealBundle {
  RealCurveType curve;
  int rank = 1;
  int degree = 0;
  std::vector<bool> w1_bits;

  friend bool operator==(const RealBundle&, const RealBundle&) = default;
};

/// Throws ConstraintViolation unless rank >= 1, one bit per real component,
/// and the number of set bits has the parity of the degree.
void validate(const RealBundle& bundle);

/// Number of real components over which the real part is non-orientable.
int nonorientable_count(const RealBundle& bundle);
/// Complement of the w_1 mask.
std::vector<bool> orientable_mask(const RealBundle& bundle);

struct RealDivisorPoint {
  int component = 1;  ///< 1-based real component
  int multiplicity = 1;

  friend bool operator==(const RealDivisorPoint&, const RealDivisorPoint&) = default;
};

/// A real divisor: points on the real locus plus conjugate pairs {z, conj z},
/// each pair carrying one multiplicity that applies to both points.
struct RealDivisor {
  std::vector<RealDivisorPoint> real_points;
  std::vector<int> pair_multiplicities;

  friend bool operator==(const RealDivisor&, const RealDivisor&) = default;
};

/// Throws CurveMismatch for component labels outside 1..k and
/// ConstraintViolation for zero multiplicities.
void validate(const RealDivisor& divisor, const RealCurveType& curve);

/// Point counts (r+, r-, s+, s-) of a divisor made of simple real points and
/// simple conjugate pairs.
struct Quadruple {
  int r_plus = 0;
  int r_minus = 0;
  int s_plus = 0;
  int s_minus = 0;

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

int divisor_degree(const RealDivisor& divisor);

/// deg D = deg N and, on every real component, the multiplicities sum to the
/// w_1 bit mod 2.
bool is_compatible(const RealDivisor& divisor, const RealBundle& bundle);

/// One simple positive point per non-orientable component; the remaining
/// degree is balanced with (deg - r+)/2 positive or (r+ - deg)/2 negative pairs.
Quadruple minimal_quadruple(const RealBundle& bundle);

/// Whether some placement of the quadruple's real points on the real
/// components yields a divisor compatible with the bundle.
bool quadruple_realizes(const Quadruple& q, const RealBundle& bundle);

/// Dimension of the jet space: |m| per real point and 2|m| per conjugate pair.
int jet_space_dimension(const RealDivisor& divisor);

/// A symmetry of a divisor's point configuration: permutations of the real
/// points and of the pairs (both in list order) that preserve multiplicities,
/// plus a flag per real point saying whether the map reverses the tangent
/// line of the real locus there. `tangent_reversed` is indexed by source point.
struct JetRelabeling {
  Permutation real_perm;
  std::vector<bool> tangent_reversed;
  Permutation pair_perm;

  friend bool operator==(const JetRelabeling&, const JetRelabeling&) = default;
};

JetRelabeling identity_relabeling(const RealDivisor& divisor);
/// `second` applied after `first`.
JetRelabeling compose(const JetRelabeling& second, const JetRelabeling& first);

/// Sign of the induced action on det of the jet space. A cycle of length l
/// through real points of multiplicity m contributes (-1)^((l-1)m); a tangent
/// reversal at a point of multiplicity m contributes (-1)^(m(m-1)/2); pair
/// blocks are even-dimensional and contribute nothing.
/// Throws IllegalRelabeling when sizes or multiplicities do not match.
Sign jet_det_sign(const RealDivisor& divisor, const JetRelabeling& relabeling);

/// Rank and w_1 kept, degree negated.
RealBundle dual_bundle(const RealBundle& bundle);

}  // namespace realdet
