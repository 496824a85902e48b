#include "realdet/moduli.hpp"

#include "realdet/error.hpp"
#include "realdet/sign.hpp"

namespace realdet {

namespace {

constexpr std::array<std::string_view, generator_count> kGeneratorNames = {
    "w1_pin_plus", "w1_pin_pm", "w1_Lr",  "w1_Tpol",    "w1_detH1_minus", "w1_Rw",
    "w1_H",        "w1_OX",     "w1_OX_spin", "w1_frakD", "w1_H1w",
};

void check_hypersurface(int N, int delta) {
  if (N < 3) throw Error(ErrorCode::OutOfRange, "N must be at least 3", "N");
  if (delta < 1 || delta > N + 1) {
    throw Error(ErrorCode::DegreeOutOfRange,
                "degree must lie in 1.." + std::to_string(N + 1) + ", got " + std::to_string(delta),
                "delta");
  }
}

}  // namespace

std::string_view to_string(Generator g) { return kGeneratorNames[static_cast<std::size_t>(g)]; }

Generator generator_from_string(std::string_view name) {
  for (auto g : all_generators()) {
    if (to_string(g) == name) return g;
  }
  throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + std::string(name) + "'");
}

const std::array<Generator, generator_count>& all_generators() {
  static const std::array<Generator, generator_count> all = [] {
    std::array<Generator, generator_count> a{};
    for (std::size_t i = 0; i < generator_count; ++i) a[i] = static_cast<Generator>(i);
    return a;
  }();
  return all;
}

ClassExpression::ClassExpression(std::initializer_list<Generator> terms) {
  for (auto g : terms) add(g);
}

ClassExpression ClassExpression::from_names(const std::vector<std::string>& names) {
  ClassExpression e;
  for (const auto& n : names) e.add(generator_from_string(n));
  return e;
}

void ClassExpression::add(Generator g, long long coefficient) {
  if (parity(coefficient) != 0) bits_.flip(index(g));
}

ClassExpression ClassExpression::without(Generator g) const {
  ClassExpression e = *this;
  e.bits_.reset(index(g));
  return e;
}

std::vector<Generator> ClassExpression::terms() const {
  std::vector<Generator> out;
  for (auto g : all_generators()) {
    if (coefficient(g) != 0) out.push_back(g);
  }
  return out;
}

std::string to_string(const ClassExpression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (auto g : e.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(g);
  }
  return out;
}

std::string_view to_string(ModuliCase c) {
  switch (c) {
    case ModuliCase::general: return "general";
    case ModuliCase::separating: return "separating";
    case ModuliCase::spin: return "spin";
    case ModuliCase::polarized_transverse: return "polarized-transverse";
  }
  return "general";
}

ModuliCase moduli_case_from_string(std::string_view name) {
  for (auto c : {ModuliCase::general, ModuliCase::separating, ModuliCase::spin,
                 ModuliCase::polarized_transverse}) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown case '" + std::string(name) + "'", "case");
}

void validate(const ModuliSetup& s) {
  if (s.n < 2) throw Error(ErrorCode::ConstraintViolation, "n must be at least 2", "n");
  if (s.genus < 0) throw Error(ErrorCode::ConstraintViolation, "genus must be nonnegative", "genus");
  if (s.marked_points < 0) {
    throw Error(ErrorCode::ConstraintViolation, "marked point count must be nonnegative",
                "marked_points");
  }
  const bool separating = s.kind == ModuliCase::separating;
  if (separating != s.k_minus.has_value()) {
    throw Error(ErrorCode::CaseMismatch,
                separating ? "the separating case needs k_minus" : "k_minus belongs to the separating case",
                "k_minus");
  }
  if (separating) {
    if (*s.k_minus < 0) {
      throw Error(ErrorCode::ConstraintViolation, "k_minus must be nonnegative", "k_minus");
    }
    if (parity(s.c1d + *s.k_minus) != 0) {
      throw Error(ErrorCode::ConstraintViolation, "c1d + k_minus must be even", "c1d");
    }
  }
  if (s.kind == ModuliCase::spin && parity(s.c1d) != 0) {
    throw Error(ErrorCode::ConstraintViolation, "the Spin case needs c1d even", "c1d");
  }
  if (s.has_polarizing_section && s.kind != ModuliCase::polarized_transverse) {
    throw Error(ErrorCode::CaseMismatch,
                "a polarizing section belongs to the polarized-transverse case",
                "has_polarizing_section");
  }
}

ClassExpression det_pi_decomposition(const ModuliSetup& s) {
  validate(s);
  ClassExpression e;
  e.add(Generator::w1_detH1_minus, s.n - 1);
  switch (s.kind) {
    case ModuliCase::general:
      e.add(Generator::w1_pin_plus);
      e.add(Generator::w1_frakD);
      e.add(Generator::w1_Tpol);
      if (s.marked_points > 0) e.add(Generator::w1_Lr);
      break;
    case ModuliCase::separating:
      e.add(Generator::w1_Rw);
      e.add(Generator::w1_H, (s.c1d + *s.k_minus) / 2);
      e.add(Generator::w1_pin_plus);
      e.add(Generator::w1_OX);
      break;
    case ModuliCase::spin:
      e.add(Generator::w1_H1w);
      e.add(Generator::w1_OX_spin, 1 - s.genus);
      e.add(Generator::w1_pin_pm);
      break;
    case ModuliCase::polarized_transverse:
      e.add(Generator::w1_pin_plus);
      if (!s.has_polarizing_section) e.add(Generator::w1_frakD);
      e.add(Generator::w1_Tpol);
      break;
  }
  return e;
}

HypersurfaceSpinCheck hypersurface_spin_check(int N, int delta) {
  if (N < 3) throw Error(ErrorCode::OutOfRange, "N must be at least 3", "N");
  if (delta < 1) throw Error(ErrorCode::OutOfRange, "degree must be positive", "delta");
  HypersurfaceSpinCheck c;
  c.rx_orientable = parity(N + 1 - delta) == 0;
  // w_2 of the real part is N(N+1)/2 mod 2.
  c.rx_spin = c.rx_orientable && parity(static_cast<long long>(N) * (N + 1) / 2) == 0;
  c.unique_real_spin = N >= 4 && (N % 4 == 0 || N % 4 == 3) && parity(delta - N - 1) == 0;
  c.w_xi_zero = c.unique_real_spin && mod_floor(delta - N - 1, 4) == 0;
  return c;
}

std::string_view to_string(HypersurfaceBranch b) {
  switch (b) {
    case HypersurfaceBranch::conjugate_pairs: return "delta=N+1 mod 4";
    case HypersurfaceBranch::empty_real_quadric: return "delta=N+3 mod 4";
    case HypersurfaceBranch::real_hyperplane: return "delta=N mod 2";
  }
  return "";
}

HypersurfaceBranch hypersurface_branch(int N, int delta) {
  check_hypersurface(N, delta);
  if (parity(delta - N) == 0) return HypersurfaceBranch::real_hyperplane;
  return mod_floor(delta - N - 1, 4) == 0 ? HypersurfaceBranch::conjugate_pairs
                                          : HypersurfaceBranch::empty_real_quadric;
}

ClassExpression hypersurface_w1(int N, int delta, int r, bool tau_has_fixed_point) {
  const auto branch = hypersurface_branch(N, delta);
  if (r < 0) throw Error(ErrorCode::ConstraintViolation, "r must be nonnegative", "r");
  if (!tau_has_fixed_point) {
    throw Error(ErrorCode::NoFixedPoint, "the source real structure must have a fixed point",
                "tau_has_fixed_point");
  }
  ClassExpression e{Generator::w1_Lr};
  e.add(Generator::w1_detH1_minus, N);
  switch (branch) {
    case HypersurfaceBranch::conjugate_pairs:
      e.add(Generator::w1_pin_pm);
      break;
    case HypersurfaceBranch::empty_real_quadric:
      e.add(Generator::w1_pin_pm);
      e.add(Generator::w1_Tpol);
      break;
    case HypersurfaceBranch::real_hyperplane:
      e.add(Generator::w1_pin_plus);
      e.add(Generator::w1_Tpol);
      break;
  }
  return e;
}

ClassExpression apply_hypersurface_vanishings(const ClassExpression& e,
                                              const HypersurfaceSpinCheck& check, int r) {
  ClassExpression out = e;
  if (check.rx_spin) {
    out = out.without(Generator::w1_pin_pm).without(Generator::w1_pin_plus);
  }
  if (check.w_xi_zero) out = out.without(Generator::w1_H1w);
  if (r == 0) out = out.without(Generator::w1_Lr);
  return out;
}

HypersurfaceClassification classify_hypersurface(int N, int delta, int r, bool tau_has_fixed_point) {
  HypersurfaceClassification c;
  c.N = N;
  c.delta = delta;
  c.r = r;
  c.branch = hypersurface_branch(N, delta);
  c.spin = hypersurface_spin_check(N, delta);
  c.w1 = hypersurface_w1(N, delta, r, tau_has_fixed_point);
  c.reduced = apply_hypersurface_vanishings(c.w1, c.spin, r);
  c.orientable = c.reduced.is_zero();
  return c;
}

bool cp3_orientability_verdict() {
  const auto check = hypersurface_spin_check(4, 1);
  const auto w1 = hypersurface_w1(4, 1, 0, true);
  return apply_hypersurface_vanishings(w1, check, 0).is_zero();
}

MarkedOrientability marked_bundle_orientable(const ModuliSetup& s,
                                             const std::vector<int>& real_points_per_component) {
  for (std::size_t i = 0; i < real_points_per_component.size(); ++i) {
    if (real_points_per_component[i] < 0) {
      throw Error(ErrorCode::InvalidArgument, "marked point counts must be nonnegative",
                  "real_points_per_component[" + std::to_string(i) + "]");
    }
  }
  MarkedOrientability m;
  if (s.kind == ModuliCase::separating) {
    bool some_three = false;
    for (int c : real_points_per_component) some_three = some_three || c >= 3;
    if (!s.tau_is_identity || some_three) m = {true, true, true};
    return m;
  }
  if (s.kind == ModuliCase::spin) {
    bool all_three = !real_points_per_component.empty();
    for (int c : real_points_per_component) all_three = all_three && c >= 3;
    if (all_three) {
      m.Lr_orientable = true;
      m.conclusive = true;
    }
    return m;
  }
  throw Error(ErrorCode::CaseMismatch, "only the separating and Spin cases are covered", "case");
}

bool genus0_orientable(int r, bool tau_has_fixed_point, bool rx_spin, int c1d) {
  return rx_spin && c1d >= 0 && r >= 3 && tau_has_fixed_point;
}

std::string_view to_string(PolarizationRecipe p) {
  switch (p) {
    case PolarizationRecipe::ConjugateQuadricPairs: return "ConjugateQuadricPairs";
    case PolarizationRecipe::PlusRealHyperplane: return "PlusRealHyperplane";
    case PolarizationRecipe::PlusEmptyRealQuadric: return "PlusEmptyRealQuadric";
  }
  return "";
}

PolarizationRecipe polarization_recipe(int N, int delta) {
  switch (hypersurface_branch(N, delta)) {
    case HypersurfaceBranch::conjugate_pairs: return PolarizationRecipe::ConjugateQuadricPairs;
    case HypersurfaceBranch::empty_real_quadric: return PolarizationRecipe::PlusEmptyRealQuadric;
    case HypersurfaceBranch::real_hyperplane: return PolarizationRecipe::PlusRealHyperplane;
  }
  return PolarizationRecipe::ConjugateQuadricPairs;
}

}  // namespace realdet
