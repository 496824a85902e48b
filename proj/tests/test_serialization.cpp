#include <doctest.h>

#include "realdet/error.hpp"
#include "realdet/serialization.hpp"

using namespace realdet;

namespace {

std::string field_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    return e.field();
  }
  FAIL("expected an error");
  return {};
}

RealBundle bundle(RealCurveType c, int rank, int degree, std::vector<bool> w1) {
  return RealBundle{c, rank, degree, std::move(w1)};
}

}  // namespace

TEST_CASE("curve, diffeo and bundle round trips") {
  const std::vector<RealCurveType> curves{{2, 3, true}, {1, 1, false}, {0, 0, false}, {0, 1, true}, {4, 2, false}};
  for (const auto& c : curves) CHECK(parse_curve(to_json(c), "") == c);

  RealDiffeoData d = identity_diffeo({2, 3, true});
  d.component_perm = Permutation::from_images({1, 0, 2});
  d.cycle_return_flags = {Sign::minus(), Sign::plus()};
  d.swaps_halves = true;
  d.det_h1_sign = Sign::minus();
  CHECK(parse_diffeo(to_json(d), "") == d);
  CHECK(to_json(d)["component_perm"] == Json::array({2, 1, 3}));

  const std::vector<RealBundle> bundles{
      bundle({2, 2, false}, 1, 2, {false, false}), bundle({1, 1, false}, 1, 1, {true}),
      bundle({2, 1, false}, 1, 5, {true}),         bundle({1, 1, false}, 1, -3, {true}),
      bundle({1, 2, true}, 2, 4, {true, true}),    bundle({2, 0, false}, 3, 0, {})};
  for (const auto& b : bundles) CHECK(parse_bundle(to_json(b), "") == b);
}

TEST_CASE("divisor, quadruple and relabeling round trips") {
  const RealCurveType c{2, 2, false};
  const std::vector<RealDivisor> divisors{RealDivisor{{{1, 1}}, {}},       RealDivisor{{}, {2}},
                                          RealDivisor{{{1, 1}, {2, -1}}, {1}}, RealDivisor{{{1, 3}}, {}},
                                          RealDivisor{{{1, -2}, {1, 1}}, {}},  RealDivisor{}};
  for (const auto& d : divisors) CHECK(parse_divisor(to_json(d), "", c) == d);

  for (const auto& q : {Quadruple{1, 0, 2, 0}, Quadruple{0, 0, 0, 0}, Quadruple{1, 0, 0, 2}, Quadruple{2, 1, 3, 4}}) {
    CHECK(parse_quadruple(to_json(q), "") == q);
  }

  const JetRelabeling r{Permutation::transposition(3, 0, 2), {true, false, true}, Permutation::from_images({1, 0})};
  CHECK(parse_relabeling(to_json(r), "") == r);
}

TEST_CASE("automorphism round trips") {
  const auto n = bundle({1, 2, true}, 1, 4, {true, true});
  RealDiffeoData d = identity_diffeo(n.curve);
  d.component_perm = Permutation::transposition(2, 0, 1);
  d.cycle_return_flags = {Sign::minus()};
  d.swaps_halves = true;
  AutomorphismData a = make_automorphism(n, d);
  a.pin_cycles[0].s_pin_plus = Sign::minus();
  a.d_min_sign = Sign::minus();
  a.o_sign = Sign::minus();
  a.spin_w_bits = {true, true};
  CHECK(parse_automorphism(to_json(a), "", n) == a);

  const auto id = identity_automorphism(n);
  CHECK(parse_automorphism(Json::object(), "", n) == id);

  PinCycleData pc{3, false, Sign::minus(), Sign::plus()};
  CHECK(parse_pin_cycle(to_json(pc), "") == pc);
}

TEST_CASE("moduli round trips") {
  ModuliSetup s;
  s.n = 4;
  s.genus = 3;
  s.marked_points = 2;
  s.kind = ModuliCase::separating;
  s.c1d = 4;
  s.k_minus = 2;
  CHECK(parse_moduli_setup(to_json(s), "") == s);
  ModuliSetup p;
  p.kind = ModuliCase::polarized_transverse;
  p.has_polarizing_section = true;
  CHECK(parse_moduli_setup(to_json(p), "") == p);

  const ClassExpression e{Generator::w1_pin_pm, Generator::w1_Tpol, Generator::w1_H1w};
  CHECK(parse_class_expression(to_json(e), "") == e);
  CHECK(parse_class_expression(Json::array({"w1_Lr"}), "") == ClassExpression{Generator::w1_Lr});
  CHECK(parse_class_expression(to_json(ClassExpression{}), "").is_zero());
  try {
    parse_class_expression(Json::array({"w1_Lr", "w1_bogus"}), "expr");
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::UnknownGenerator);
    CHECK(err.field() == "expr[1]");
  }
}

TEST_CASE("signs serialize as integers") {
  CHECK(to_json(Sign::minus()) == -1);
  CHECK(to_json(Sign::plus()) == 1);
  CHECK(parse_sign(Json(-1), "") == Sign::minus());
  CHECK(field_of([] { parse_sign(Json(0), "s"); }) == "s");
  CHECK(field_of([] { parse_sign(Json(true), "s"); }) == "s");
}

TEST_CASE("validation errors carry the field path") {
  Json b = to_json(bundle({2, 2, false}, 1, 2, {false, false}));
  b["w1"] = Json::array({0});
  CHECK(field_of([&] { parse_bundle(b, "bundle"); }) == "bundle.w1");

  Json c = Json{{"genus", 2}, {"num_real_components", 2}, {"separating", true}};
  CHECK(field_of([&] { parse_curve(c, "bundle.curve"); }) == "bundle.curve.num_real_components");

  CHECK(field_of([] { parse_permutation(Json::array({1, 1}), "p"); }) == "p");
  CHECK(field_of([] { parse_permutation(Json::array({1, 3}), "p"); }) == "p[1]");
  CHECK(field_of([] { parse_bundle(Json{{"degree", 0}, {"w1", Json::array()}}, "b"); }) == "b.curve");

  Json bits = to_json(bundle({2, 2, false}, 1, 2, {false, false}));
  bits["w1"] = Json::array({0, 2});
  CHECK(field_of([&] { parse_bundle(bits, "bundle"); }) == "bundle.w1[1]");

  const auto n = bundle({2, 3, false}, 1, 1, {true, false, false});
  Json a = to_json(identity_automorphism(n));
  a["pin_cycles"][0]["orientable"] = true;
  CHECK(field_of([&] { parse_automorphism(a, "automorphism", n); }) == "automorphism.pin_cycles[0].orientable");

  Json d = Json{{"real_points", Json::array({Json{{"component", 4}, {"multiplicity", 1}}})}};
  CHECK(field_of([&] { parse_divisor(d, "divisor", n.curve); }) == "divisor.real_points[0].component");
}
