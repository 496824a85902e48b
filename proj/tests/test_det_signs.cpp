#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "realdet/det_signs.hpp"
#include "realdet/error.hpp"
#include "realdet/sweeps.hpp"

using namespace realdet;

namespace {

RealBundle make_bundle(RealCurveType curve, int degree, std::vector<bool> w1, int rank = 1) {
  RealBundle b{curve, rank, degree, std::move(w1)};
  validate(b);
  return b;
}

RealCurveType curve(int g, int k, bool sep) { return validate_curve_type(g, k, sep); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

const SignFactor& factor(const SignReport& r, const std::string& symbol) {
  for (const auto& f : r.factors) {
    if (f.symbol == symbol) return f;
  }
  FAIL("missing factor " << symbol);
  return r.factors.front();
}

}  // namespace

TEST_CASE("automorphism validation") {
  const auto n = make_bundle(curve(2, 3, false), 1, {true, false, false});
  auto a = identity_automorphism(n);
  CHECK_NOTHROW(validate(n, a));

  auto bad_orient = a;
  bad_orient.pin_cycles[0].orientable = true;
  CHECK(code_of([&] { validate(n, bad_orient); }) == ErrorCode::ValidationError);

  auto bad_flag = a;
  bad_flag.pin_cycles[1].s_phi = Sign::minus();
  CHECK(code_of([&] { validate(n, bad_flag); }) == ErrorCode::ValidationError);

  auto bad_count = a;
  bad_count.pin_cycles.pop_back();
  CHECK(code_of([&] { validate(n, bad_count); }) == ErrorCode::ValidationError);

  auto bad_spin = a;
  bad_spin.spin_w_bits.push_back(false);
  CHECK(code_of([&] { validate(n, bad_spin); }) == ErrorCode::ValidationError);

  // A cycle mixing an orientable and a non-orientable component.
  RealDiffeoData d = identity_diffeo(n.curve);
  d.component_perm = Permutation::transposition(3, 0, 1);
  d.cycle_return_flags.assign(2, Sign::plus());
  auto mixed = make_automorphism(n, d);
  CHECK(code_of([&] { validate(n, mixed); }) == ErrorCode::ValidationError);
}

TEST_CASE("sign_trivial_bundle examples") {
  const auto n = make_bundle(curve(2, 1, false), 0, {false});
  auto a = identity_automorphism(n);
  for (int rank = 1; rank <= 4; ++rank) CHECK(sign_trivial_bundle(a, rank) == Sign::plus());
  a.diffeo.det_h1_sign = Sign::minus();
  CHECK(sign_trivial_bundle(a, 2) == Sign::plus());
  CHECK(sign_trivial_bundle(a, 3) == Sign::minus());
  a.s_trivial = Sign::minus();
  CHECK(sign_trivial_bundle(a, 2) == Sign::minus());
}

TEST_CASE("epsilon_dmin examples") {
  const auto n = make_bundle(curve(2, 1, false), 0, {false});
  CHECK(epsilon_dmin(identity_diffeo(n.curve), n) == Sign::plus());

  const auto sep = make_bundle(curve(0, 1, true), 2, {false});
  auto d = identity_diffeo(sep.curve);
  d.swaps_halves = true;
  CHECK(epsilon_dmin(d, sep) == Sign::minus());

  // deg - r = 4 with the two non-orientable components exchanged.
  const auto sep2 = make_bundle(curve(1, 2, true), 6, {true, true});
  auto d2 = identity_diffeo(sep2.curve);
  d2.component_perm = Permutation::transposition(2, 0, 1);
  d2.cycle_return_flags = {Sign::plus()};
  d2.swaps_halves = true;
  CHECK(epsilon_dmin(d2, sep2) == Sign::minus());
  d2.swaps_halves = false;
  CHECK(epsilon_dmin(d2, sep2) == Sign::minus());
  const auto sep3 = make_bundle(curve(1, 2, true), 4, {true, true});
  d2.swaps_halves = true;
  CHECK(epsilon_dmin(d2, sep3) == Sign::plus());
}

TEST_CASE("sign_general examples") {
  const auto n = make_bundle(curve(2, 1, false), 0, {false});
  auto a = identity_automorphism(n);
  CHECK(sign_general(n, a) == Sign::plus());
  a.d_min_sign = Sign::minus();
  CHECK(sign_general(n, a) == Sign::minus());

  const auto n2 = make_bundle(curve(2, 1, false), 0, {false}, 2);
  auto b = identity_automorphism(n2);
  b.diffeo.det_h1_sign = Sign::minus();
  CHECK(sign_general(n2, b) == Sign::plus());

  const auto empty = make_bundle(curve(2, 0, false), 0, {});
  CHECK(code_of([&] { sign_general(empty, identity_automorphism(empty)); }) == ErrorCode::EmptyRealPart);
}

TEST_CASE("sign_general counts the orientation permutation on non-orientable components") {
  const auto n = make_bundle(curve(2, 3, false), 1, {true, false, false});
  auto a = identity_automorphism(n);
  a.diffeo.cycle_return_flags[0] = Sign::minus();
  a.pin_cycles[0].s_phi = Sign::minus();
  const auto report = sign_general_report(n, a);
  CHECK(factor(report, "eps_sigma_minus").value == Sign::minus());
  CHECK(report.sign == Sign::minus());
  // The same flag on an orientable component is invisible.
  auto b = identity_automorphism(n);
  b.diffeo.cycle_return_flags[1] = Sign::minus();
  b.pin_cycles[1].s_phi = Sign::minus();
  CHECK(sign_general(n, b) == Sign::plus());
}

TEST_CASE("sign_separating examples") {
  const auto c = curve(1, 2, true);
  const auto id = make_bundle(c, 0, {false, false});
  CHECK(sign_separating(id, identity_automorphism(id)) == Sign::plus());

  const auto n = make_bundle(c, 4, {true, true});
  auto a = identity_automorphism(n);
  a.diffeo.swaps_halves = true;
  const auto report = sign_separating_report(n, a);
  CHECK(report.sign == Sign::minus());
  CHECK(factor(report, "eps_sigma_RSigma").exponent == 3);

  const auto n0 = make_bundle(c, 4, {false, false});
  auto a0 = identity_automorphism(n0);
  a0.diffeo.swaps_halves = true;
  CHECK(sign_separating(n0, a0) == Sign::plus());

  const auto nonsep = make_bundle(curve(2, 1, false), 0, {false});
  CHECK(code_of([&] { sign_separating(nonsep, identity_automorphism(nonsep)); }) == ErrorCode::NotSeparating);
}

TEST_CASE("sign_spin examples") {
  const auto g1 = make_bundle(curve(1, 1, false), 0, {false});
  auto a1 = identity_automorphism(g1);
  a1.spin_semiorientation_sign = Sign::minus();
  CHECK(sign_spin(g1, a1) == Sign::plus());
  CHECK(factor(sign_spin_report(g1, a1), "eps_Phi_o_xi").exponent == 0);

  const auto g2 = make_bundle(curve(2, 1, false), 0, {false});
  auto a2 = identity_automorphism(g2);
  a2.spin_semiorientation_sign = Sign::minus();
  CHECK(sign_spin(g2, a2) == Sign::minus());

  // Exponent 1 - g taken mod 2 also for g = 3 (1 - g = -2).
  const auto g3 = make_bundle(curve(3, 1, false), 0, {false});
  auto a3 = identity_automorphism(g3);
  a3.spin_semiorientation_sign = Sign::minus();
  CHECK(sign_spin(g3, a3) == Sign::plus());

  auto flags = identity_automorphism(g2);
  flags.diffeo.cycle_return_flags[0] = Sign::minus();
  flags.pin_cycles[0].s_phi = Sign::minus();
  CHECK(factor(sign_spin_report(g2, flags), "eps_sigma_w_xi").value == Sign::plus());
  flags.spin_w_bits = {true};
  CHECK(sign_spin(g2, flags) == Sign::minus());

  const auto odd = make_bundle(curve(2, 1, false), 1, {true});
  CHECK(code_of([&] { sign_spin(odd, identity_automorphism(odd)); }) == ErrorCode::PreconditionViolated);
  const auto nonorient = make_bundle(curve(2, 2, false), 2, {true, true});
  CHECK(code_of([&] { sign_spin(nonorient, identity_automorphism(nonorient)); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("sign_rank_reduction examples") {
  const auto c = curve(2, 1, false);
  const auto r2 = make_bundle(c, 0, {false}, 2);
  CHECK(sign_rank_reduction(r2, identity_automorphism(r2), Sign::plus()) == Sign::plus());

  const auto r3 = make_bundle(c, 0, {false}, 3);
  auto a3 = identity_automorphism(r3);
  a3.diffeo.det_h1_sign = Sign::minus();
  CHECK(sign_rank_reduction(r3, a3, Sign::plus()) == Sign::plus());

  auto a2 = identity_automorphism(r2);
  a2.diffeo.det_h1_sign = Sign::minus();
  CHECK(sign_rank_reduction(r2, a2, Sign::minus()) == Sign::plus());

  const auto r1 = make_bundle(c, 0, {false});
  CHECK(code_of([&] { sign_rank_reduction(r1, identity_automorphism(r1), Sign::plus()); }) ==
        ErrorCode::RankTooSmall);
}

TEST_CASE("verify_duality examples") {
  const auto c = curve(1, 2, true);
  const auto n = make_bundle(c, 4, {false, false});
  auto a = identity_automorphism(n);
  a.diffeo.swaps_halves = true;
  CHECK(verify_duality(n, a));
  CHECK(applicable_sign_report(n, a).sign == applicable_sign_report(dual_bundle(n), a).sign);
  CHECK(verify_duality(n, identity_automorphism(n)));

  const auto nonorient = make_bundle(c, 2, {true, true});
  CHECK(code_of([&] { verify_duality(nonorient, identity_automorphism(nonorient)); }) ==
        ErrorCode::PreconditionViolated);

  const auto empty = make_bundle(curve(2, 0, false), 2, {});
  CHECK(verify_duality(empty, identity_automorphism(empty)));
  CHECK(applicable_case(empty) == "trivial");
}

TEST_CASE("verify_duality on seeded separating samples") {
  const auto report = verify_duality_samples(300, 4242);
  CHECK(report.cases_checked == 300);
  CHECK(report.failures.empty());
}

TEST_CASE("tensor witness") {
  const auto w = tensor_nonmultiplicativity_witness();
  CHECK_NOTHROW(validate(w.bundle, w.automorphism));
  CHECK(w.automorphism.diffeo.det_h1_sign == Sign::minus());
  CHECK(w.product() == Sign::plus());
  CHECK(w.tensor_sign == Sign::minus());
  CHECK(verify_duality(w.bundle, w.automorphism));
}

TEST_CASE("separating and Spin formulas agree on their overlap without half swaps") {
  for (const auto& c : curve_types(3, 4)) {
    if (!c.separating) continue;
    const auto k = static_cast<std::size_t>(c.num_real_components);
    for (const auto& images : oracle::permutations(k)) {
      const auto perm = Permutation::from_images(images);
      for (unsigned fm = 0; fm < (1U << perm.cycle_count()); ++fm) {
        for (int degree : {-4, -2, 0, 2, 4, 6}) {
          for (int rank : {1, 2, 3}) {
            for (Sign det : {Sign::plus(), Sign::minus()}) {
              const auto n = make_bundle(c, degree, std::vector<bool>(k, false), rank);
              RealDiffeoData d = identity_diffeo(c);
              d.component_perm = perm;
              d.cycle_return_flags.clear();
              for (std::size_t i = 0; i < perm.cycle_count(); ++i) {
                d.cycle_return_flags.push_back(Sign::negative_if((fm >> i) & 1U));
              }
              d.det_h1_sign = det;
              const auto a = make_automorphism(n, d);
              CHECK(sign_separating(n, a) == sign_spin(n, a));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("rank one, degree zero, orientable: general formula reduces to the trivial one") {
  std::mt19937_64 rng(31);
  for (const auto& c : curve_types(4, 4)) {
    if (c.num_real_components == 0) continue;
    const auto k = static_cast<std::size_t>(c.num_real_components);
    for (int trial = 0; trial < 20; ++trial) {
      const auto n = make_bundle(c, 0, std::vector<bool>(k, false));
      RealDiffeoData d = identity_diffeo(c);
      d.component_perm = random_permutation(k, rng);
      d.cycle_return_flags.clear();
      for (std::size_t i = 0; i < d.component_perm.cycle_count(); ++i) {
        d.cycle_return_flags.push_back(Sign::negative_if(rng() % 2));
      }
      d.swaps_halves = c.separating && rng() % 2 == 1;
      d.det_h1_sign = Sign::negative_if(rng() % 2);
      auto a = make_automorphism(n, d);
      for (auto& pc : a.pin_cycles) pc.s_pin_plus = Sign::negative_if(rng() % 2);
      CHECK(sign_general(n, a) == sign_trivial_bundle(a, 1));
    }
  }
}

TEST_CASE("single sign flips change each formula by the factor's exponent parity") {
  const auto report = verify_factor_flips(3);
  CHECK(report.cases_checked > 1000);
  CHECK(report.failures.empty());
  for (const auto& f : report.failures) MESSAGE(f);
}

TEST_CASE("reports multiply out to their sign") {
  const auto n = make_bundle(curve(3, 2, true), 3, {true, false}, 3);
  auto a = identity_automorphism(n);
  a.diffeo.swaps_halves = true;
  a.diffeo.det_h1_sign = Sign::minus();
  a.o_sign = Sign::minus();
  for (const auto& r : {sign_separating_report(n, a), sign_general_report(n, a),
                        sign_rank_reduction_report(n, a, Sign::minus())}) {
    Sign product = Sign::plus();
    for (const auto& f : r.factors) product *= f.contribution();
    CHECK(product == r.sign);
  }
}
