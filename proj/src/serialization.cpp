#include "realdet/serialization.hpp"

#include <limits>

#include "realdet/error.hpp"

namespace realdet {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::ValidationError, message, path);
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

const Json* find(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json& required(const Json& j, const char* key, const std::string& path) {
  const Json* v = find(j, key);
  if (v == nullptr) fail(join_path(path, key), "missing required field");
  return *v;
}

long long as_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

int as_int(const Json& j, const std::string& path) {
  const long long v = as_integer(j, path);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    fail(path, "integer out of range");
  }
  return static_cast<int>(v);
}

bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

int int_field(const Json& j, const char* key, const std::string& path, std::optional<int> fallback = {}) {
  const Json* v = find(j, key);
  if (v == nullptr) {
    if (!fallback) fail(join_path(path, key), "missing required field");
    return *fallback;
  }
  return as_int(*v, join_path(path, key));
}

bool bool_field(const Json& j, const char* key, const std::string& path, std::optional<bool> fallback = {}) {
  const Json* v = find(j, key);
  if (v == nullptr) {
    if (!fallback) fail(join_path(path, key), "missing required field");
    return *fallback;
  }
  return as_bool(*v, join_path(path, key));
}

Sign sign_field(const Json& j, const char* key, const std::string& path, Sign fallback = Sign::plus()) {
  const Json* v = find(j, key);
  return v == nullptr ? fallback : parse_sign(*v, join_path(path, key));
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::vector<bool> parse_bits(const Json& j, const std::string& path) {
  std::vector<bool> bits;
  const Json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const long long v = as_integer(arr[i], index_path(path, i));
    if (v != 0 && v != 1) fail(index_path(path, i), "expected 0 or 1");
    bits.push_back(v == 1);
  }
  return bits;
}

Json bits_to_json(const std::vector<bool>& bits) {
  Json arr = Json::array();
  for (bool b : bits) arr.push_back(b ? 1 : 0);
  return arr;
}

/// Runs a library check and re-reports its failure as a ValidationError
/// located under `path`.
template <class F>
void checked(const std::string& path, F&& check) {
  try {
    check();
  } catch (const Error& e) {
    const std::string message =
        e.code() == ErrorCode::ValidationError ? e.what() : std::string(to_string(e.code())) + ": " + e.what();
    throw Error(ErrorCode::ValidationError, message, join_path(path, e.field()));
  }
}

}  // namespace

std::string join_path(const std::string& parent, const std::string& child) {
  if (parent.empty()) return child;
  if (child.empty()) return parent;
  return parent + "." + child;
}

Json to_json(Sign s) { return s.to_int(); }

Json to_json(const Permutation& p) {
  Json arr = Json::array();
  for (std::size_t i : p.images()) arr.push_back(i + 1);
  return arr;
}

Json to_json(const RealCurveType& c) {
  return Json{{"genus", c.genus}, {"num_real_components", c.num_real_components},
              {"separating", c.separating}};
}

Json to_json(const RealDiffeoData& d) {
  Json flags = Json::array();
  for (Sign s : d.cycle_return_flags) flags.push_back(to_json(s));
  return Json{{"curve", to_json(d.curve)},
              {"component_perm", to_json(d.component_perm)},
              {"cycle_return_flags", flags},
              {"swaps_halves", d.swaps_halves},
              {"det_h1_sign", to_json(d.det_h1_sign)}};
}

Json to_json(const RealBundle& b) {
  return Json{{"curve", to_json(b.curve)},
              {"rank", b.rank},
              {"degree", b.degree},
              {"w1", bits_to_json(b.w1_bits)}};
}

Json to_json(const RealDivisor& d) {
  Json pts = Json::array();
  for (const auto& p : d.real_points) {
    pts.push_back(Json{{"component", p.component}, {"multiplicity", p.multiplicity}});
  }
  return Json{{"real_points", pts}, {"pair_multiplicities", d.pair_multiplicities}};
}

Json to_json(const Quadruple& q) {
  return Json{{"r_plus", q.r_plus}, {"r_minus", q.r_minus}, {"s_plus", q.s_plus}, {"s_minus", q.s_minus}};
}

Json to_json(const JetRelabeling& r) {
  return Json{{"real_perm", to_json(r.real_perm)},
              {"tangent_reversed", bits_to_json(r.tangent_reversed)},
              {"pair_perm", to_json(r.pair_perm)}};
}

Json to_json(const PinCycleData& c) {
  return Json{{"length", c.length},
              {"orientable", c.orientable},
              {"s_phi", to_json(c.s_phi)},
              {"s_pin_plus", to_json(c.s_pin_plus)}};
}

Json to_json(const AutomorphismData& a) {
  Json cycles = Json::array();
  for (const auto& c : a.pin_cycles) cycles.push_back(to_json(c));
  return Json{{"diffeo", to_json(a.diffeo)},
              {"pin_cycles", cycles},
              {"s_trivial", to_json(a.s_trivial)},
              {"d_min_sign", to_json(a.d_min_sign)},
              {"o_sign", to_json(a.o_sign)},
              {"spin_semiorientation_sign", to_json(a.spin_semiorientation_sign)},
              {"spin_w_bits", bits_to_json(a.spin_w_bits)}};
}

Json to_json(const SignReport& r) {
  Json factors = Json::object();
  for (const auto& f : r.factors) {
    factors[f.symbol] = Json{{"value", to_json(f.value)},
                             {"exponent", f.exponent},
                             {"contribution", to_json(f.contribution())}};
  }
  return Json{{"sign", to_json(r.sign)}, {"factors", factors}};
}

Json to_json(const ClassExpression& e) {
  Json terms = Json::array();
  for (auto g : e.terms()) terms.push_back(std::string(to_string(g)));
  return Json{{"terms", terms}, {"text", to_string(e)}, {"zero", e.is_zero()}};
}

Json to_json(const ModuliSetup& s) {
  Json j{{"n", s.n},
         {"genus", s.genus},
         {"marked_points", s.marked_points},
         {"tau_has_fixed_point", s.tau_has_fixed_point},
         {"tau_is_identity", s.tau_is_identity},
         {"case", std::string(to_string(s.kind))},
         {"c1d", s.c1d}};
  if (s.k_minus) j["k_minus"] = *s.k_minus;
  j["real_part_spin"] = s.real_part_spin;
  j["real_part_pin_plus"] = s.real_part_pin_plus;
  j["has_polarizing_section"] = s.has_polarizing_section;
  return j;
}

Json to_json(const HypersurfaceSpinCheck& c) {
  return Json{{"rx_orientable", c.rx_orientable},
              {"rx_spin", c.rx_spin},
              {"unique_real_spin", c.unique_real_spin},
              {"w_xi_zero", c.w_xi_zero}};
}

Json to_json(const HypersurfaceClassification& c) {
  const bool transverse_only = c.branch == HypersurfaceBranch::real_hyperplane;
  return Json{{"N", c.N},
              {"delta", c.delta},
              {"r", c.r},
              {"spin_check", to_json(c.spin)},
              {"branch", std::string(to_string(c.branch))},
              {"domain", transverse_only ? "transverse_locus" : "full"},
              {"w1", to_json(c.w1)},
              {"reduced_w1", to_json(c.reduced)},
              {"polarization_recipe", std::string(to_string(polarization_recipe(c.N, c.delta)))},
              {"verdict", c.orientable ? "orientable" : "undetermined"}};
}

Json to_json(const AutomorphismStratum& s) {
  return Json{{"quotient_genus", s.quotient_genus},
              {"branch_points", s.branch_points},
              {"fixed_dimension", s.fixed_dimension}};
}

Json to_json(const MarkedOrientability& m) {
  return Json{{"Lr_orientable", m.Lr_orientable},
              {"H_orientable", m.H_orientable},
              {"conclusive", m.conclusive}};
}

Sign parse_sign(const Json& j, const std::string& path) {
  const long long v = as_integer(j, path);
  if (v != 1 && v != -1) fail(path, "a sign must be +1 or -1");
  return Sign::from_int(v);
}

Permutation parse_permutation(const Json& j, const std::string& path) {
  const Json& arr = as_array(j, path);
  std::vector<std::size_t> images;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const long long v = as_integer(arr[i], index_path(path, i));
    if (v < 1 || v > static_cast<long long>(arr.size())) {
      fail(index_path(path, i), "image out of range 1.." + std::to_string(arr.size()));
    }
    images.push_back(static_cast<std::size_t>(v - 1));
  }
  Permutation p;
  checked(path, [&] { p = Permutation::from_images(std::move(images)); });
  return p;
}

RealCurveType parse_curve(const Json& j, const std::string& path) {
  require_object(j, path);
  RealCurveType c;
  c.genus = int_field(j, "genus", path);
  c.num_real_components = int_field(j, "num_real_components", path);
  c.separating = bool_field(j, "separating", path, false);
  checked(path, [&] { validate(c); });
  return c;
}

RealDiffeoData parse_diffeo(const Json& j, const std::string& path, const RealCurveType* curve) {
  require_object(j, path);
  RealDiffeoData d;
  if (const Json* c = find(j, "curve")) {
    d.curve = parse_curve(*c, join_path(path, "curve"));
  } else if (curve != nullptr) {
    d.curve = *curve;
  } else {
    fail(join_path(path, "curve"), "missing required field");
  }
  const auto k = static_cast<std::size_t>(d.curve.num_real_components);
  if (const Json* p = find(j, "component_perm")) {
    d.component_perm = parse_permutation(*p, join_path(path, "component_perm"));
  } else {
    d.component_perm = Permutation::identity(k);
  }
  if (const Json* f = find(j, "cycle_return_flags")) {
    const std::string fpath = join_path(path, "cycle_return_flags");
    const Json& arr = as_array(*f, fpath);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      d.cycle_return_flags.push_back(parse_sign(arr[i], index_path(fpath, i)));
    }
  } else {
    d.cycle_return_flags.assign(d.component_perm.cycle_count(), Sign::plus());
  }
  d.swaps_halves = bool_field(j, "swaps_halves", path, false);
  d.det_h1_sign = sign_field(j, "det_h1_sign", path);
  checked(path, [&] { validate(d); });
  return d;
}

RealBundle parse_bundle(const Json& j, const std::string& path) {
  require_object(j, path);
  RealBundle b;
  b.curve = parse_curve(required(j, "curve", path), join_path(path, "curve"));
  b.rank = int_field(j, "rank", path, 1);
  b.degree = int_field(j, "degree", path);
  b.w1_bits = parse_bits(required(j, "w1", path), join_path(path, "w1"));
  checked(path, [&] { validate(b); });
  return b;
}

RealDivisor parse_divisor(const Json& j, const std::string& path, const RealCurveType& curve) {
  require_object(j, path);
  RealDivisor d;
  if (const Json* pts = find(j, "real_points")) {
    const std::string ppath = join_path(path, "real_points");
    const Json& arr = as_array(*pts, ppath);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ip = index_path(ppath, i);
      require_object(arr[i], ip);
      d.real_points.push_back({int_field(arr[i], "component", ip), int_field(arr[i], "multiplicity", ip)});
    }
  }
  if (const Json* pairs = find(j, "pair_multiplicities")) {
    const std::string ppath = join_path(path, "pair_multiplicities");
    const Json& arr = as_array(*pairs, ppath);
    for (std::size_t i = 0; i < arr.size(); ++i) d.pair_multiplicities.push_back(as_int(arr[i], index_path(ppath, i)));
  }
  checked(path, [&] { validate(d, curve); });
  return d;
}

Quadruple parse_quadruple(const Json& j, const std::string& path) {
  require_object(j, path);
  Quadruple q{int_field(j, "r_plus", path, 0), int_field(j, "r_minus", path, 0),
              int_field(j, "s_plus", path, 0), int_field(j, "s_minus", path, 0)};
  for (auto [key, v] : {std::pair{"r_plus", q.r_plus}, std::pair{"r_minus", q.r_minus},
                        std::pair{"s_plus", q.s_plus}, std::pair{"s_minus", q.s_minus}}) {
    if (v < 0) fail(join_path(path, key), "counts must be nonnegative");
  }
  return q;
}

JetRelabeling parse_relabeling(const Json& j, const std::string& path) {
  require_object(j, path);
  JetRelabeling r;
  r.real_perm = parse_permutation(required(j, "real_perm", path), join_path(path, "real_perm"));
  if (const Json* t = find(j, "tangent_reversed")) {
    r.tangent_reversed = parse_bits(*t, join_path(path, "tangent_reversed"));
  } else {
    r.tangent_reversed.assign(r.real_perm.size(), false);
  }
  if (const Json* p = find(j, "pair_perm")) {
    r.pair_perm = parse_permutation(*p, join_path(path, "pair_perm"));
  }
  return r;
}

PinCycleData parse_pin_cycle(const Json& j, const std::string& path) {
  require_object(j, path);
  PinCycleData c;
  c.length = int_field(j, "length", path, 1);
  if (c.length < 1) fail(join_path(path, "length"), "cycle length must be positive");
  c.orientable = bool_field(j, "orientable", path, true);
  c.s_phi = sign_field(j, "s_phi", path);
  c.s_pin_plus = sign_field(j, "s_pin_plus", path);
  return c;
}

AutomorphismData parse_automorphism(const Json& j, const std::string& path, const RealBundle& bundle) {
  require_object(j, path);
  RealDiffeoData diffeo = identity_diffeo(bundle.curve);
  if (const Json* d = find(j, "diffeo")) diffeo = parse_diffeo(*d, join_path(path, "diffeo"), &bundle.curve);

  AutomorphismData a;
  checked(path, [&] { a = make_automorphism(bundle, diffeo); });
  if (const Json* cycles = find(j, "pin_cycles")) {
    const std::string cpath = join_path(path, "pin_cycles");
    const Json& arr = as_array(*cycles, cpath);
    a.pin_cycles.clear();
    for (std::size_t i = 0; i < arr.size(); ++i) a.pin_cycles.push_back(parse_pin_cycle(arr[i], index_path(cpath, i)));
  }
  a.s_trivial = sign_field(j, "s_trivial", path);
  a.d_min_sign = sign_field(j, "d_min_sign", path);
  a.o_sign = sign_field(j, "o_sign", path);
  a.spin_semiorientation_sign = sign_field(j, "spin_semiorientation_sign", path);
  if (const Json* w = find(j, "spin_w_bits")) a.spin_w_bits = parse_bits(*w, join_path(path, "spin_w_bits"));
  checked(path, [&] { validate(bundle, a); });
  return a;
}

ClassExpression parse_class_expression(const Json& j, const std::string& path) {
  const Json* terms = &j;
  std::string tpath = path;
  if (j.is_object()) {
    terms = &required(j, "terms", path);
    tpath = join_path(path, "terms");
  }
  const Json& arr = as_array(*terms, tpath);
  ClassExpression e;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) fail(index_path(tpath, i), "expected a generator name");
    try {
      e.add(generator_from_string(arr[i].get<std::string>()));
    } catch (const Error& err) {
      throw Error(err.code(), err.what(), index_path(tpath, i));
    }
  }
  return e;
}

ModuliSetup parse_moduli_setup(const Json& j, const std::string& path) {
  require_object(j, path);
  ModuliSetup s;
  s.n = int_field(j, "n", path);
  s.genus = int_field(j, "genus", path, 0);
  s.marked_points = int_field(j, "marked_points", path, 0);
  s.tau_has_fixed_point = bool_field(j, "tau_has_fixed_point", path, true);
  s.tau_is_identity = bool_field(j, "tau_is_identity", path, false);
  if (const Json* c = find(j, "case")) {
    if (!c->is_string()) fail(join_path(path, "case"), "expected a case name");
    checked(path, [&] { s.kind = moduli_case_from_string(c->get<std::string>()); });
  }
  s.c1d = int_field(j, "c1d", path, 0);
  if (const Json* k = find(j, "k_minus")) s.k_minus = as_int(*k, join_path(path, "k_minus"));
  s.real_part_spin = bool_field(j, "real_part_spin", path, false);
  s.real_part_pin_plus = bool_field(j, "real_part_pin_plus", path, false);
  s.has_polarizing_section = bool_field(j, "has_polarizing_section", path, false);
  checked(path, [&] { validate(s); });
  return s;
}

}  // namespace realdet
