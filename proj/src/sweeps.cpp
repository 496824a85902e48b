#include "realdet/sweeps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "realdet/error.hpp"
#include "realdet/moduli.hpp"
#include "realdet/pin_spin.hpp"
#include "realdet/surface_topology.hpp"

namespace realdet {

namespace {

template <class T>
std::string describe(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string describe_perm(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(p(i) + 1);
  }
  return s + "]";
}

void record(VerificationReport& report, bool ok, const std::function<std::string()>& what) {
  ++report.cases_checked;
  if (!ok && report.failures.size() < 50) report.failures.push_back(what());
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Membership mask of the union of the cycles selected by `cycle_mask`.
std::vector<bool> union_of_cycles(const std::vector<std::vector<std::size_t>>& cycles,
                                  std::size_t n, unsigned cycle_mask) {
  std::vector<bool> mask(n, false);
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if ((cycle_mask >> c) & 1U) {
      for (std::size_t x : cycles[c]) mask[x] = true;
    }
  }
  return mask;
}

std::vector<Sign> flags_from_mask(std::size_t count, unsigned mask) {
  std::vector<Sign> flags;
  for (std::size_t i = 0; i < count; ++i) flags.push_back(Sign::negative_if((mask >> i) & 1U));
  return flags;
}

bool coin(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; }

Sign random_sign(std::mt19937_64& rng) { return Sign::negative_if(coin(rng)); }

}  // namespace

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

RealCurveType random_separating_curve(int max_genus, std::mt19937_64& rng) {
  const int genus = std::uniform_int_distribution<int>(0, max_genus)(rng);
  std::vector<int> ks;
  for (int k = 1; k <= genus + 1; ++k) {
    if (parity(k) == parity(genus + 1)) ks.push_back(k);
  }
  const int k = ks[std::uniform_int_distribution<std::size_t>(0, ks.size() - 1)(rng)];
  return validate_curve_type(genus, k, true);
}

RealDivisor random_divisor(int max_points, int max_multiplicity, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, max_points);
  std::uniform_int_distribution<int> mult(1, max_multiplicity);
  RealDivisor d;
  const int reals = count(rng);
  for (int i = 0; i < reals; ++i) {
    d.real_points.push_back({1, coin(rng) ? mult(rng) : -mult(rng)});
  }
  const int pairs = count(rng) / 2;
  for (int i = 0; i < pairs; ++i) d.pair_multiplicities.push_back(coin(rng) ? mult(rng) : -mult(rng));
  return d;
}

namespace {

/// A permutation of positions that only moves each index within its class.
template <class Key>
Permutation shuffle_within_classes(const std::vector<Key>& keys, std::mt19937_64& rng) {
  std::map<Key, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < keys.size(); ++i) classes[keys[i]].push_back(i);
  std::vector<std::size_t> images(keys.size());
  for (auto& [key, members] : classes) {
    auto targets = members;
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::size_t j = 0; j < members.size(); ++j) images[members[j]] = targets[j];
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace

JetRelabeling random_relabeling(const RealDivisor& divisor, std::mt19937_64& rng) {
  std::vector<int> real_mults;
  for (const auto& p : divisor.real_points) real_mults.push_back(p.multiplicity);
  JetRelabeling r;
  r.real_perm = shuffle_within_classes(real_mults, rng);
  for (std::size_t i = 0; i < real_mults.size(); ++i) r.tangent_reversed.push_back(coin(rng));
  r.pair_perm = shuffle_within_classes(divisor.pair_multiplicities, rng);
  return r;
}

std::vector<RealCurveType> curve_types(int max_genus, int max_k) {
  std::vector<RealCurveType> out;
  for (int g = 0; g <= max_genus; ++g) {
    for (int k = 0; k <= std::min(max_k, g + 1); ++k) {
      for (bool sep : {false, true}) {
        try {
          out.push_back(validate_curve_type(g, k, sep));
        } catch (const Error&) {
        }
      }
    }
  }
  return out;
}

VerificationReport verify_orientation_double_exhaustive(int max_k) {
  VerificationReport report{"orientation-double", max_k, 0, {}};
  for (int k = 0; k <= max_k; ++k) {
    for (const auto& perm : all_permutations(static_cast<std::size_t>(k))) {
      const auto cycles = perm.cycles();
      const unsigned flag_masks = 1U << cycles.size();
      for (unsigned fm = 0; fm < flag_masks; ++fm) {
        const auto flags = flags_from_mask(cycles.size(), fm);
        for (unsigned sm = 0; sm < flag_masks; ++sm) {
          const auto subset = union_of_cycles(cycles, perm.size(), sm);
          Sign formula = Sign::plus();
          for (std::size_t c = 0; c < cycles.size(); ++c) {
            if ((sm >> c) & 1U) formula *= flags[c];
          }
          const Sign oracle = orientation_lift(perm, flags, subset).signature();
          record(report, formula == oracle, [&] {
            return "perm " + describe_perm(perm) + " flags mask " + std::to_string(fm) +
                   " subset mask " + std::to_string(sm);
          });
        }
      }
    }
  }
  return report;
}

VerificationReport verify_pinori_exhaustive(int max_cycles) {
  VerificationReport report{"pinori", max_cycles, 0, {}};
  constexpr int kMaxLength = 3;
  std::vector<PinCycleData> choices;
  for (int len = 1; len <= kMaxLength; ++len) {
    for (bool orientable : {true, false}) {
      for (Sign s_phi : {Sign::plus(), Sign::minus()}) {
        for (Sign s_pin : {Sign::plus(), Sign::minus()}) choices.push_back({len, orientable, s_phi, s_pin});
      }
    }
  }
  std::vector<PinCycleData> cycles;
  std::function<void(int)> extend = [&](int remaining) {
    record(report, verify_pinori(cycles), [&] {
      std::string s = "cycles:";
      for (const auto& c : cycles) {
        s += " (len " + std::to_string(c.length) + (c.orientable ? " or" : " non-or") +
             " s_phi " + describe(c.s_phi) + " s_p+ " + describe(c.s_pin_plus) + ")";
      }
      return s;
    });
    if (remaining == 0) return;
    for (const auto& c : choices) {
      cycles.push_back(c);
      extend(remaining - 1);
      cycles.pop_back();
    }
  };
  extend(max_cycles);
  return report;
}

VerificationReport verify_pin_group_tables() {
  VerificationReport report{"pin-tables", 1, 0, {}};
  for (PinFlavor flavor : {PinFlavor::plus, PinFlavor::minus}) {
    const std::string name = flavor == PinFlavor::plus ? "Pin+" : "Pin-";
    for (bool negate : {false, true}) {
      const PinGroup group(flavor, negate);
      record(report, group.is_associative(), [&] { return name + " table not associative"; });
      record(report, group.is_closed(), [&] { return name + " table not closed"; });
      record(report, group.is_minus_one_central(), [&] { return name + ": -1 not central"; });
      const PinElement e = group.reflection_lift();
      const bool squares_to_one = group.multiply(e, e) == PinGroup::one();
      record(report, squares_to_one == (flavor == PinFlavor::plus),
             [&] { return name + ": wrong square of the reflection lift"; });
      for (bool orientable : {true, false}) {
        const bool lifts = pin_reversal_preserves(orientable, flavor, negate);
        const bool expected = flavor == PinFlavor::plus || orientable;
        record(report, lifts == expected, [&] {
          return name + (orientable ? " orientable" : " non-orientable") + ": lift criterion";
        });
        record(report, lifts == pin_reversal_preserves(orientable, flavor, !negate),
               [&] { return name + ": lift criterion depends on the choice of e"; });
      }
    }
  }
  return report;
}

VerificationReport verify_duality_samples(int samples, std::uint64_t seed) {
  VerificationReport report{"duality", samples, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> half_degree(-4, 4);
  std::uniform_int_distribution<int> rank(1, 4);
  for (int s = 0; s < samples; ++s) {
    RealBundle bundle;
    bundle.curve = random_separating_curve(6, rng);
    const auto k = static_cast<std::size_t>(bundle.curve.num_real_components);
    bundle.rank = rank(rng);
    bundle.degree = 2 * half_degree(rng);
    bundle.w1_bits.assign(k, false);

    RealDiffeoData diffeo = identity_diffeo(bundle.curve);
    diffeo.component_perm = random_permutation(k, rng);
    const auto cycles = diffeo.component_perm.cycles();
    diffeo.cycle_return_flags.clear();
    for (std::size_t c = 0; c < cycles.size(); ++c) diffeo.cycle_return_flags.push_back(random_sign(rng));
    diffeo.swaps_halves = coin(rng);
    diffeo.det_h1_sign = random_sign(rng);

    AutomorphismData a = make_automorphism(bundle, diffeo);
    for (auto& pc : a.pin_cycles) pc.s_pin_plus = random_sign(rng);
    a.s_trivial = random_sign(rng);
    a.d_min_sign = random_sign(rng);
    a.o_sign = random_sign(rng);
    a.spin_semiorientation_sign = random_sign(rng);
    a.spin_w_bits = union_of_cycles(cycles, k, static_cast<unsigned>(rng()) & ((1U << cycles.size()) - 1U));
    validate(bundle, a);

    record(report, verify_duality(bundle, a), [&] {
      return "sample " + std::to_string(s) + ": genus " + std::to_string(bundle.curve.genus) +
             " k " + std::to_string(k) + " deg " + std::to_string(bundle.degree) + " perm " +
             describe_perm(diffeo.component_perm);
    });
  }
  return report;
}

VerificationReport verify_quadruples_exhaustive(int max_k) {
  VerificationReport report{"quadruple", max_k, 0, {}};
  for (int k = 0; k <= max_k; ++k) {
    const RealCurveType curve = validate_curve_type(k, k, false);
    for (int degree = -6; degree <= 6; ++degree) {
      for (unsigned mask = 0; mask < (1U << k); ++mask) {
        RealBundle bundle{curve, 1, degree, {}};
        for (int i = 0; i < k; ++i) bundle.w1_bits.push_back((mask >> i) & 1U);
        if (parity(nonorientable_count(bundle)) != parity(degree)) continue;
        const Quadruple q = minimal_quadruple(bundle);
        record(report, quadruple_realizes(q, bundle), [&] {
          return "k " + std::to_string(k) + " deg " + std::to_string(degree) + " w1 mask " +
                 std::to_string(mask);
        });
      }
    }
  }
  return report;
}

VerificationReport verify_jet_multiplicativity(int pairs, std::uint64_t seed) {
  VerificationReport report{"jet", pairs, 0, {}};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < pairs; ++i) {
    const RealDivisor d = random_divisor(7, 3, rng);
    const JetRelabeling first = random_relabeling(d, rng);
    const JetRelabeling second = random_relabeling(d, rng);
    const Sign composed = jet_det_sign(d, compose(second, first));
    const Sign product = jet_det_sign(d, second) * jet_det_sign(d, first);
    record(report, composed == product, [&] { return "composition pair " + std::to_string(i); });
  }
  return report;
}

VerificationReport verify_hypersurface_partition(int max_N) {
  VerificationReport report{"hypersurface", max_N, 0, {}};
  for (int N = 3; N <= max_N; ++N) {
    for (int delta = 1; delta <= N + 1; ++delta) {
      const bool a = mod_floor(delta - (N + 1), 4) == 0;
      const bool b = mod_floor(delta - (N + 3), 4) == 0;
      const bool c = mod_floor(delta - N, 2) == 0;
      const auto where = [&] { return "N " + std::to_string(N) + " delta " + std::to_string(delta); };
      record(report, (a ? 1 : 0) + (b ? 1 : 0) + (c ? 1 : 0) == 1,
             [&] { return where() + ": not in exactly one branch"; });
      const auto branch = hypersurface_branch(N, delta);
      const bool matches = (a && branch == HypersurfaceBranch::conjugate_pairs) ||
                           (b && branch == HypersurfaceBranch::empty_real_quadric) ||
                           (c && branch == HypersurfaceBranch::real_hyperplane);
      record(report, matches, [&] { return where() + ": branch selector disagrees"; });
      const auto check = hypersurface_spin_check(N, delta);
      record(report, !check.rx_spin || check.rx_orientable, [&] { return where() + ": Spin but not orientable"; });
      record(report, !check.w_xi_zero || check.unique_real_spin,
             [&] { return where() + ": w_xi vanishes without a unique Spin structure"; });
      const auto w1 = hypersurface_w1(N, delta, 0, true);
      record(report, (w1.coefficient(Generator::w1_Tpol) == 1) == (b || c),
             [&] { return where() + ": T_pol term misplaced"; });
      record(report, w1.coefficient(Generator::w1_detH1_minus) == parity(N),
             [&] { return where() + ": det H^1 coefficient"; });
    }
  }
  return report;
}

VerificationReport verify_teichmuller_strata(int max_genus) {
  VerificationReport report{"teichmuller", max_genus, 0, {}};
  for (int g = 2; g <= max_genus; ++g) {
    const auto where = [&] { return "genus " + std::to_string(g); };
    record(report, teichmuller_dimension(g) == 3 * g - 3, [&] { return where() + ": dimension"; });
    bool codim_ok = true;
    for (int p = 2; p <= 2 * g + 1; ++p) {
      if (!is_prime(p)) continue;
      const auto strata = riemann_hurwitz_strata(g, p);
      std::size_t expected = 0;
      for (int gq = 0; gq <= g; ++gq) {
        for (int h = 0; h <= 2 * g + 2; ++h) {
          if (2 * g - 2 == p * (2 * gq - 2) + h * (p - 1) && 3 * gq - 3 + h >= 0) ++expected;
        }
      }
      record(report, strata.size() == expected, [&] {
        return where() + " p " + std::to_string(p) + ": stratum count " + std::to_string(strata.size()) +
               " expected " + std::to_string(expected);
      });
      for (const auto& s : strata) {
        const int gq = s.quotient_genus;
        const int h = s.branch_points;
        const int d = s.fixed_dimension;
        record(report, 2 * g - 2 == p * (2 * gq - 2) + h * (p - 1) && d == 3 * gq - 3 + h,
               [&] { return where() + " p " + std::to_string(p) + ": Riemann-Hurwitz"; });
        record(report, 2 * (3 * g - 3 - d) == 2 * (p - 1) * (3 * gq - 3) + h * (3 * p - 5),
               [&] { return where() + " p " + std::to_string(p) + ": codimension identity"; });
        record(report, d <= 3 * g - 3, [&] { return where() + ": stratum larger than Teichmuller space"; });
        codim_ok = codim_ok && (3 * g - 3 - d >= 2);
      }
    }
    if (g >= 4) {
      record(report, automorphism_locus_codim_ok(g) == codim_ok && codim_ok,
             [&] { return where() + ": codimension estimate"; });
    }
  }
  return report;
}

namespace {

enum class FlipTarget { s_pin_plus, s_phi, d_min, o_sign, spin_semi, s_trivial, det_h1, swaps };

struct Flip {
  FlipTarget target;
  std::size_t cycle = 0;
};

AutomorphismData apply_flip(AutomorphismData a, const Flip& f) {
  switch (f.target) {
    case FlipTarget::s_pin_plus: a.pin_cycles[f.cycle].s_pin_plus = -a.pin_cycles[f.cycle].s_pin_plus; break;
    case FlipTarget::s_phi:
      a.pin_cycles[f.cycle].s_phi = -a.pin_cycles[f.cycle].s_phi;
      a.diffeo.cycle_return_flags[f.cycle] = -a.diffeo.cycle_return_flags[f.cycle];
      break;
    case FlipTarget::d_min: a.d_min_sign = -a.d_min_sign; break;
    case FlipTarget::o_sign: a.o_sign = -a.o_sign; break;
    case FlipTarget::spin_semi: a.spin_semiorientation_sign = -a.spin_semiorientation_sign; break;
    case FlipTarget::s_trivial: a.s_trivial = -a.s_trivial; break;
    case FlipTarget::det_h1: a.diffeo.det_h1_sign = -a.diffeo.det_h1_sign; break;
    case FlipTarget::swaps: a.diffeo.swaps_halves = !a.diffeo.swaps_halves; break;
  }
  return a;
}

std::string_view flip_name(FlipTarget t) {
  switch (t) {
    case FlipTarget::s_pin_plus: return "s_pin_plus";
    case FlipTarget::s_phi: return "s_phi";
    case FlipTarget::d_min: return "d_min_sign";
    case FlipTarget::o_sign: return "o_sign";
    case FlipTarget::spin_semi: return "spin_semiorientation_sign";
    case FlipTarget::s_trivial: return "s_trivial";
    case FlipTarget::det_h1: return "det_h1_sign";
    case FlipTarget::swaps: return "swaps_halves";
  }
  return "";
}

using Formula = Sign (*)(const RealBundle&, const AutomorphismData&);

/// Parity of the exponent with which each input enters each formula.
int general_exponent(const RealBundle& n, const AutomorphismData& a, const Flip& f) {
  switch (f.target) {
    case FlipTarget::s_pin_plus: return 1;
    case FlipTarget::s_phi: return a.pin_cycles[f.cycle].orientable ? 0 : 1;
    case FlipTarget::d_min: return 1;
    case FlipTarget::det_h1: return parity(n.rank);
    case FlipTarget::swaps: return mod_floor(n.degree - nonorientable_count(n), 4) == 0 ? 0 : 1;
    default: return 0;
  }
}

int separating_exponent(const RealBundle& n, const AutomorphismData&, const Flip& f) {
  switch (f.target) {
    case FlipTarget::s_pin_plus: return 1;
    case FlipTarget::o_sign: return 1;
    case FlipTarget::det_h1: return parity(n.rank);
    case FlipTarget::swaps: return parity((n.degree + nonorientable_count(n)) / 2);
    default: return 0;
  }
}

int spin_exponent(const RealBundle& n, const AutomorphismData& a, const Flip& f) {
  const auto cycles = a.diffeo.component_perm.cycles();
  switch (f.target) {
    case FlipTarget::s_pin_plus: return 1;
    case FlipTarget::s_phi: return a.spin_w_bits[cycles[f.cycle].front()] ? 1 : 0;
    case FlipTarget::spin_semi: return parity(1 - n.curve.genus);
    case FlipTarget::det_h1: return parity(n.rank);
    default: return 0;
  }
}

}  // namespace

VerificationReport verify_factor_flips(int max_k) {
  VerificationReport report{"factor-flip", max_k, 0, {}};
  struct Calculator {
    const char* name;
    Formula formula;
    int (*exponent)(const RealBundle&, const AutomorphismData&, const Flip&);
  };
  const Calculator calculators[] = {
      {"general", &sign_general, &general_exponent},
      {"separating", &sign_separating, &separating_exponent},
      {"spin", &sign_spin, &spin_exponent},
  };

  for (const auto& curve : curve_types(3, max_k)) {
    const auto k = static_cast<std::size_t>(curve.num_real_components);
    if (k == 0) continue;
    for (const auto& perm : all_permutations(k)) {
      const auto cycles = perm.cycles();
      const unsigned cycle_masks = 1U << cycles.size();
      for (unsigned w1_mask = 0; w1_mask < cycle_masks; ++w1_mask) {
        const auto w1 = union_of_cycles(cycles, k, w1_mask);
        const int r = static_cast<int>(std::count(w1.begin(), w1.end(), true));
        for (int degree : {r - 2, r, r + 2, r + 4}) {
          for (int rank : {1, 2}) {
            for (bool base_minus : {false, true}) {
              const RealBundle bundle{curve, rank, degree, w1};
              RealDiffeoData diffeo = identity_diffeo(curve);
              diffeo.component_perm = perm;
              diffeo.cycle_return_flags.assign(cycles.size(), Sign::negative_if(base_minus));
              AutomorphismData a = make_automorphism(bundle, diffeo);
              // Spin bits on the first cycle only, so both exponents occur.
              a.spin_w_bits = union_of_cycles(cycles, k, 1U);

              std::vector<Flip> flips;
              for (std::size_t c = 0; c < cycles.size(); ++c) {
                flips.push_back({FlipTarget::s_pin_plus, c});
                flips.push_back({FlipTarget::s_phi, c});
              }
              for (auto t : {FlipTarget::d_min, FlipTarget::o_sign, FlipTarget::spin_semi,
                             FlipTarget::s_trivial, FlipTarget::det_h1}) {
                flips.push_back({t, 0});
              }
              if (curve.separating) flips.push_back({FlipTarget::swaps, 0});

              for (const auto& calc : calculators) {
                Sign base;
                try {
                  base = calc.formula(bundle, a);
                } catch (const Error&) {
                  continue;  // outside this formula's hypotheses
                }
                for (const auto& f : flips) {
                  const AutomorphismData flipped = apply_flip(a, f);
                  const Sign after = calc.formula(bundle, flipped);
                  const Sign expected = Sign::minus().pow(calc.exponent(bundle, a, f));
                  record(report, after == base * expected, [&] {
                    return std::string(calc.name) + ": flipping " + std::string(flip_name(f.target)) +
                           " (cycle " + std::to_string(f.cycle) + ") on genus " +
                           std::to_string(curve.genus) + " k " + std::to_string(k) + " perm " +
                           describe_perm(perm) + " deg " + std::to_string(degree);
                  });
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

VerificationReport verify_tensor_witness() {
  VerificationReport report{"tensor-witness", 1, 0, {}};
  const auto w = tensor_nonmultiplicativity_witness();
  record(report, w.product() == Sign::plus(), [] { return "determinant signs do not multiply to +1"; });
  record(report, w.tensor_sign == Sign::minus(), [] { return "tensor sign is not -1"; });
  record(report, w.automorphism.diffeo.det_h1_sign == Sign::minus(), [] { return "det(phi^*) is not -1"; });
  record(report, verify_duality(w.bundle, w.automorphism), [] { return "duality fails on the witness"; });
  return report;
}

const std::vector<LemmaInfo>& verification_lemmas() {
  static const std::vector<LemmaInfo> lemmas = {
      {"orientation-double", "maximum number of components", 5, 6},
      {"pinori", "maximum number of cycles", 4, 4},
      {"pin-tables", "unused", 1, 1},
      {"duality", "number of samples", 100, 100000},
      {"quadruple", "maximum number of components", 4, 5},
      {"jet", "number of composition pairs", 1000, 100000},
      {"hypersurface", "maximum N", 12, 64},
      {"teichmuller", "maximum genus", 10, 40},
      {"factor-flip", "maximum number of components", 3, 4},
      {"tensor-witness", "unused", 1, 1},
  };
  return lemmas;
}

VerificationReport run_verification(std::string_view lemma, int bound, std::uint64_t seed) {
  const LemmaInfo* info = nullptr;
  for (const auto& l : verification_lemmas()) {
    if (l.name == lemma) info = &l;
  }
  if (info == nullptr) {
    throw Error(ErrorCode::UnknownLemma, "unknown lemma '" + std::string(lemma) + "'", "lemma");
  }
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be positive", "bound");
  if (bound > info->max_bound) {
    throw Error(ErrorCode::BoundTooLarge,
                "bound " + std::to_string(bound) + " exceeds the maximum " + std::to_string(info->max_bound) +
                    " for " + std::string(lemma),
                "bound");
  }
  if (lemma == "orientation-double") return verify_orientation_double_exhaustive(bound);
  if (lemma == "pinori") return verify_pinori_exhaustive(bound);
  if (lemma == "pin-tables") return verify_pin_group_tables();
  if (lemma == "duality") return verify_duality_samples(bound, seed);
  if (lemma == "quadruple") return verify_quadruples_exhaustive(bound);
  if (lemma == "jet") return verify_jet_multiplicativity(bound, seed);
  if (lemma == "hypersurface") return verify_hypersurface_partition(bound);
  if (lemma == "teichmuller") return verify_teichmuller_strata(bound);
  if (lemma == "factor-flip") return verify_factor_flips(bound);
  return verify_tensor_witness();
}

}  // namespace realdet
