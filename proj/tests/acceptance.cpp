// Acceptance run: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "realdet/cli.hpp"
#include "realdet/det_signs.hpp"
#include "realdet/moduli.hpp"
#include "realdet/pin_spin.hpp"
#include "realdet/surface_topology.hpp"
#include "realdet/sweeps.hpp"

using namespace realdet;

namespace {

struct Tally {
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
  void absorb(const VerificationReport& r) {
    cases += r.cases_checked;
    if (!r.failures.empty()) {
      if (failures == 0) first_failure = r.lemma + ": " + r.failures.front();
      failures += static_cast<long long>(r.failures.size());
    }
  }
};

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;
  std::function<void(Tally&)> run;
};

// 1. Product of return flags against an independently built permutation of
// the 2k orientation symbols, for every permutation of k <= 5 components.
void orientation_lemma(Tally& t) {
  for (std::size_t k = 0; k <= 5; ++k) {
    for (const auto& images : oracle::permutations(k)) {
      const auto perm = Permutation::from_images(images);
      const auto starts = oracle::cycle_starts(images);
      const std::vector<bool> all(k, true);
      for (unsigned mask = 0; mask < (1U << starts.size()); ++mask) {
        std::vector<Sign> flags;
        std::vector<Sign> by_start(k, Sign::plus());
        Sign product = Sign::plus();
        for (std::size_t c = 0; c < starts.size(); ++c) {
          flags.push_back(Sign::negative_if((mask >> c) & 1U));
          by_start[starts[c]] = flags.back();
          product *= flags.back();
        }
        const Sign brute = oracle::cycle_count_signature(oracle::orientation_symbols(images, by_start, all));
        t.check(product == brute && orientation_double_signature(perm, flags) == brute,
                "k=" + std::to_string(k) + " mask=" + std::to_string(mask));
      }
    }
  }
}

// 2. verify_pinori over every list of at most four cycles, plus the same
// identity with the orientation factor taken from the brute-force lift.
void pin_relation(Tally& t) {
  t.check(pin_reversal_preserves(true, PinFlavor::plus) && pin_reversal_preserves(false, PinFlavor::plus) &&
              pin_reversal_preserves(true, PinFlavor::minus) && !pin_reversal_preserves(false, PinFlavor::minus),
          "lift search table");
  std::vector<PinCycleData> choices;
  for (int len = 1; len <= 3; ++len) {
    for (bool o : {true, false}) {
      for (Sign s : {Sign::plus(), Sign::minus()}) {
        for (Sign p : {Sign::plus(), Sign::minus()}) choices.push_back({len, o, s, p});
      }
    }
  }
  std::vector<PinCycleData> cycles;
  std::function<void(int)> extend = [&](int remaining) {
    Sign eps_plus = Sign::plus(), eps_minus = Sign::plus();
    std::vector<std::size_t> images;
    std::vector<Sign> by_start;
    std::vector<bool> nonorientable;
    for (const auto& c : cycles) {
      eps_plus *= c.s_pin_plus;
      eps_minus *= cycle_pin_minus_sign(c);
      const std::size_t base = images.size();
      for (int j = 0; j < c.length; ++j) {
        images.push_back(base + static_cast<std::size_t>((j + 1) % c.length));
        by_start.push_back(j == 0 ? c.s_phi : Sign::plus());
        nonorientable.push_back(!c.orientable);
      }
    }
    const Sign sigma_minus = oracle::cycle_count_signature(oracle::orientation_symbols(images, by_start, nonorientable));
    t.check(verify_pinori(cycles) && eps_plus == eps_minus * sigma_minus,
            "cycle list of size " + std::to_string(cycles.size()));
    if (remaining == 0) return;
    for (const auto& c : choices) {
      cycles.push_back(c);
      extend(remaining - 1);
      cycles.pop_back();
    }
  };
  extend(4);
}

// 3. The CP^3 verdict through the JSON interface.
void cp3_verdict(Tally& t) {
  const auto r = handle_request(Json{{"command", "classify-hypersurface"},
                                     {"version", "1"},
                                     {"payload", {{"N", 4}, {"delta", 1}, {"r", 0}, {"tau_has_fixed_point", true}}}});
  const auto& res = r.body["result"];
  t.check(r.exit_code == exit_ok, "request failed");
  t.check(res["spin_check"]["rx_spin"] == true, "rx_spin");
  t.check(res["spin_check"]["w_xi_zero"] == true, "w_xi_zero");
  t.check(res["reduced_w1"]["zero"] == true, "reduced class");
  t.check(res["verdict"] == "orientable", "verdict");
  t.check(cp3_orientability_verdict(), "cp3_orientability_verdict");
}

// 4. Every degree in exactly one branch; Spin implies orientable.
void hypersurface_partition(Tally& t) {
  for (int N = 3; N <= 12; ++N) {
    for (int d = 1; d <= N + 1; ++d) {
      const bool a = mod_floor(d - N - 1, 4) == 0, b = mod_floor(d - N - 3, 4) == 0, c = mod_floor(d - N, 2) == 0;
      const auto where = "N=" + std::to_string(N) + " delta=" + std::to_string(d);
      t.check((a ? 1 : 0) + (b ? 1 : 0) + (c ? 1 : 0) == 1, where + " branch count");
      const auto br = hypersurface_branch(N, d);
      t.check((a && br == HypersurfaceBranch::conjugate_pairs) || (b && br == HypersurfaceBranch::empty_real_quadric) ||
                  (c && br == HypersurfaceBranch::real_hyperplane),
              where + " branch selector");
      const auto s = hypersurface_spin_check(N, d);
      t.check(!s.rx_spin || s.rx_orientable, where + " spin => orientable");
    }
  }
}

// 5. Duality on seeded separating samples and the tensor counterexample.
void duality(Tally& t) {
  const auto report = verify_duality_samples(100, default_seed);
  t.absorb(report);
  t.check(report.cases_checked == 100, "sample count");
  const auto w = tensor_nonmultiplicativity_witness();
  t.check(w.product() == Sign::plus(), "witness product");
  t.check(w.tensor_sign == Sign::minus(), "witness tensor sign");
  t.check(verify_duality(w.bundle, w.automorphism), "witness duality");
}

// 6. Teichmuller dimensions, both identities on every stratum, codimension.
void teichmuller(Tally& t) {
  for (int g = 2; g <= 10; ++g) {
    t.check(teichmuller_dimension(g) == 3 * g - 3, "dimension g=" + std::to_string(g));
    for (int p = 2; p <= 2 * g + 1; ++p) {
      if (!is_prime(p)) continue;
      for (const auto& s : riemann_hurwitz_strata(g, p)) {
        const int gq = s.quotient_genus, h = s.branch_points, d = s.fixed_dimension;
        t.check(2 * g - 2 == p * (2 * gq - 2) + h * (p - 1), "Riemann-Hurwitz");
        t.check(2 * (3 * g - 3 - d) == 2 * (p - 1) * (3 * gq - 3) + h * (3 * p - 5), "codimension identity");
      }
    }
  }
  for (int g = 4; g <= 8; ++g) t.check(automorphism_locus_codim_ok(g), "codim g=" + std::to_string(g));
}

// 7. Minimal quadruples realize their bundle; jet signs compose.
void divisor_layer(Tally& t) {
  t.absorb(verify_quadruples_exhaustive(4));
  std::mt19937_64 rng(default_seed);
  for (int i = 0; i < 1000; ++i) {
    const auto d = random_divisor(7, 3, rng);
    const auto a = random_relabeling(d, rng);
    const auto b = random_relabeling(d, rng);
    const Sign composed = jet_det_sign(d, compose(b, a));
    t.check(composed == jet_det_sign(d, b) * jet_det_sign(d, a) && composed == oracle::jet_expansion_sign(d, compose(b, a)),
            "composition pair " + std::to_string(i));
  }
}

// 8. Single-sign flips against the exponent of each factor.
void factor_flips(Tally& t) { t.absorb(verify_factor_flips(3)); }

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "orientation-permutation lemma, k <= 5, all flags", 5.0, orientation_lemma},
      {2, "Pin+/Pin- relation, <= 4 cycles, exhaustive", 5.0, pin_relation},
      {3, "CP^3 verdict (N=4, delta=1, r=0)", 1.0, cp3_verdict},
      {4, "hypersurface branch partition, 3 <= N <= 12", 1.0, hypersurface_partition},
      {5, "duality on 100 separating samples + tensor witness", 1.0, duality},
      {6, "Teichmuller dimension and Riemann-Hurwitz strata", 5.0, teichmuller},
      {7, "minimal quadruples k <= 4, |deg| <= 6; 1000 jet compositions", 10.0, divisor_layer},
      {8, "factor-flip parities of the sign calculators", 1.0, factor_flips},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && t.failures == 0 && t.cases > 0 && seconds < c.time_limit_s;
    failed += ok ? 0 : 1;
    std::printf("[%s] criterion %d: %s: %lld cases, %lld failures, %.3f s (limit %.0f s)\n", ok ? "PASS" : "FAIL",
                c.number, c.title.c_str(), t.cases, t.failures, seconds, c.time_limit_s);
    if (!error.empty()) std::printf("       exception: %s\n", error.c_str());
    if (t.failures > 0) std::printf("       first failure: %s\n", t.first_failure.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
