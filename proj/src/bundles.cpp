#include "realdet/bundles.hpp"

#include <cstdlib>
#include <string>

#include "realdet/error.hpp"

namespace realdet {

void validate(const RealBundle& bundle) {
  validate(bundle.curve);
  if (bundle.rank < 1) {
    throw Error(ErrorCode::ConstraintViolation, "rank must be positive", "rank");
  }
  if (bundle.w1_bits.size() != static_cast<std::size_t>(bundle.curve.num_real_components)) {
    throw Error(ErrorCode::ConstraintViolation,
                "expected " + std::to_string(bundle.curve.num_real_components) +
                    " w1 bits, got " + std::to_string(bundle.w1_bits.size()),
                "w1");
  }
  if (parity(nonorientable_count(bundle)) != parity(bundle.degree)) {
    throw Error(ErrorCode::ConstraintViolation,
                "sum of w1 bits must have the parity of the degree", "w1");
  }
}

int nonorientable_count(const RealBundle& bundle) {
  int count = 0;
  for (bool b : bundle.w1_bits) count += b ? 1 : 0;
  return count;
}

std::vector<bool> orientable_mask(const RealBundle& bundle) {
  std::vector<bool> mask(bundle.w1_bits.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = !bundle.w1_bits[i];
  return mask;
}

void validate(const RealDivisor& divisor, const RealCurveType& curve) {
  for (std::size_t i = 0; i < divisor.real_points.size(); ++i) {
    const auto& p = divisor.real_points[i];
    const std::string field = "real_points[" + std::to_string(i) + "]";
    if (p.component < 1 || p.component > curve.num_real_components) {
      throw Error(ErrorCode::CurveMismatch,
                  "component " + std::to_string(p.component) + " is not a real component of the curve",
                  field + ".component");
    }
    if (p.multiplicity == 0) {
      throw Error(ErrorCode::ConstraintViolation, "multiplicity must be nonzero",
                  field + ".multiplicity");
    }
  }
  for (std::size_t i = 0; i < divisor.pair_multiplicities.size(); ++i) {
    if (divisor.pair_multiplicities[i] == 0) {
      throw Error(ErrorCode::ConstraintViolation, "multiplicity must be nonzero",
                  "pair_multiplicities[" + std::to_string(i) + "]");
    }
  }
}

int divisor_degree(const RealDivisor& divisor) {
  int degree = 0;
  for (const auto& p : divisor.real_points) degree += p.multiplicity;
  for (int m : divisor.pair_multiplicities) degree += 2 * m;
  return degree;
}

bool is_compatible(const RealDivisor& divisor, const RealBundle& bundle) {
  validate(bundle);
  validate(divisor, bundle.curve);
  if (divisor_degree(divisor) != bundle.degree) return false;
  std::vector<int> per_component(bundle.w1_bits.size(), 0);
  for (const auto& p : divisor.real_points) {
    per_component[static_cast<std::size_t>(p.component - 1)] += p.multiplicity;
  }
  for (std::size_t i = 0; i < per_component.size(); ++i) {
    if (parity(per_component[i]) != (bundle.w1_bits[i] ? 1 : 0)) return false;
  }
  return true;
}

Quadruple minimal_quadruple(const RealBundle& bundle) {
  validate(bundle);
  const int r_min = nonorientable_count(bundle);
  const int excess = bundle.degree - r_min;  // even by the parity invariant
  if (excess >= 0) return Quadruple{r_min, 0, excess / 2, 0};
  return Quadruple{r_min, 0, 0, -excess / 2};
}

namespace {

// Calls visit(counts) for every way of writing `total` as an ordered sum of
// `parts` nonnegative integers.
template <typename Visit>
bool any_composition(int total, std::size_t parts, std::vector<int>& counts, Visit&& visit) {
  if (parts == 0) return total == 0 && visit(counts);
  if (counts.size() + 1 == parts) {
    counts.push_back(total);
    const bool hit = visit(counts);
    counts.pop_back();
    return hit;
  }
  for (int here = 0; here <= total; ++here) {
    counts.push_back(here);
    const bool hit = any_composition(total - here, parts, counts, visit);
    counts.pop_back();
    if (hit) return true;
  }
  return false;
}

}  // namespace

bool quadruple_realizes(const Quadruple& q, const RealBundle& bundle) {
  validate(bundle);
  if (q.r_plus < 0 || q.r_minus < 0 || q.s_plus < 0 || q.s_minus < 0) {
    throw Error(ErrorCode::ConstraintViolation, "quadruple entries must be nonnegative");
  }
  const std::size_t k = bundle.w1_bits.size();
  if (k == 0 && q.r_plus + q.r_minus > 0) return false;

  RealDivisor pairs_only;
  pairs_only.pair_multiplicities.assign(static_cast<std::size_t>(q.s_plus), 1);
  pairs_only.pair_multiplicities.insert(pairs_only.pair_multiplicities.end(),
                                        static_cast<std::size_t>(q.s_minus), -1);

  // Real points of equal sign are interchangeable, so a placement is
  // determined by how many land on each component.
  std::vector<int> plus_counts;
  return any_composition(q.r_plus, k, plus_counts, [&](const std::vector<int>& plus) {
    std::vector<int> minus_counts;
    return any_composition(q.r_minus, k, minus_counts, [&](const std::vector<int>& minus) {
      RealDivisor d = pairs_only;
      for (std::size_t c = 0; c < k; ++c) {
        for (int j = 0; j < plus[c]; ++j) d.real_points.push_back({static_cast<int>(c + 1), 1});
        for (int j = 0; j < minus[c]; ++j) d.real_points.push_back({static_cast<int>(c + 1), -1});
      }
      return is_compatible(d, bundle);
    });
  });
}

int jet_space_dimension(const RealDivisor& divisor) {
  int dim = 0;
  for (const auto& p : divisor.real_points) dim += std::abs(p.multiplicity);
  for (int m : divisor.pair_multiplicities) dim += 2 * std::abs(m);
  return dim;
}

JetRelabeling identity_relabeling(const RealDivisor& divisor) {
  return JetRelabeling{Permutation::identity(divisor.real_points.size()),
                       std::vector<bool>(divisor.real_points.size(), false),
                       Permutation::identity(divisor.pair_multiplicities.size())};
}

JetRelabeling compose(const JetRelabeling& second, const JetRelabeling& first) {
  if (second.real_perm.size() != first.real_perm.size() ||
      second.pair_perm.size() != first.pair_perm.size() ||
      first.tangent_reversed.size() != first.real_perm.size() ||
      second.tangent_reversed.size() != second.real_perm.size()) {
    throw Error(ErrorCode::IllegalRelabeling, "composing relabelings of different divisors");
  }
  JetRelabeling out{second.real_perm.after(first.real_perm),
                    std::vector<bool>(first.real_perm.size()),
                    second.pair_perm.after(first.pair_perm)};
  for (std::size_t i = 0; i < out.tangent_reversed.size(); ++i) {
    out.tangent_reversed[i] = first.tangent_reversed[i] != second.tangent_reversed[first.real_perm(i)];
  }
  return out;
}

Sign jet_det_sign(const RealDivisor& divisor, const JetRelabeling& relabeling) {
  const auto& reals = divisor.real_points;
  const auto& pairs = divisor.pair_multiplicities;
  if (relabeling.real_perm.size() != reals.size() ||
      relabeling.tangent_reversed.size() != reals.size() ||
      relabeling.pair_perm.size() != pairs.size()) {
    throw Error(ErrorCode::IllegalRelabeling, "relabeling does not match the divisor's points");
  }
  for (std::size_t i = 0; i < reals.size(); ++i) {
    if (reals[relabeling.real_perm(i)].multiplicity != reals[i].multiplicity) {
      throw Error(ErrorCode::IllegalRelabeling,
                  "real point " + std::to_string(i + 1) + " sent to a point of different multiplicity");
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[relabeling.pair_perm(i)] != pairs[i]) {
      throw Error(ErrorCode::IllegalRelabeling,
                  "pair " + std::to_string(i + 1) + " sent to a pair of different multiplicity");
    }
  }

  Sign sign = Sign::plus();
  for (const auto& cycle : relabeling.real_perm.cycles()) {
    const long long block = std::abs(reals[cycle.front()].multiplicity);
    sign *= Sign::minus().pow(static_cast<long long>(cycle.size() - 1) * block);
  }
  for (const auto& cycle : relabeling.pair_perm.cycles()) {
    const long long block = 2LL * std::abs(pairs[cycle.front()]);
    sign *= Sign::minus().pow(static_cast<long long>(cycle.size() - 1) * block);
  }
  for (std::size_t i = 0; i < reals.size(); ++i) {
    if (!relabeling.tangent_reversed[i]) continue;
    const long long m = std::abs(reals[i].multiplicity);
    sign *= Sign::minus().pow(m * (m - 1) / 2);
  }
  return sign;
}

RealBundle dual_bundle(const RealBundle& bundle) {
  RealBundle dual = bundle;
  dual.degree = -bundle.degree;
  return dual;
}

}  // namespace realdet
