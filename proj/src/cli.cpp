#include "realdet/cli.hpp"

#include "realdet/error.hpp"
#include "realdet/moduli.hpp"

namespace realdet {

namespace {

const Json& payload_field(const Json& payload, const char* key) {
  auto it = payload.find(key);
  if (it == payload.end()) throw Error(ErrorCode::ValidationError, "missing required field", key);
  return *it;
}

int int_arg(const Json& payload, const char* key, std::optional<int> fallback = {}) {
  auto it = payload.find(key);
  if (it == payload.end()) {
    if (!fallback) throw Error(ErrorCode::ValidationError, "missing required field", key);
    return *fallback;
  }
  if (!it->is_number_integer()) throw Error(ErrorCode::ValidationError, "expected an integer", key);
  return it->get<int>();
}

bool bool_arg(const Json& payload, const char* key, bool fallback) {
  auto it = payload.find(key);
  if (it == payload.end()) return fallback;
  if (!it->is_boolean()) throw Error(ErrorCode::ValidationError, "expected a boolean", key);
  return it->get<bool>();
}

std::string string_arg(const Json& payload, const char* key, std::optional<std::string> fallback = {}) {
  auto it = payload.find(key);
  if (it == payload.end()) {
    if (!fallback) throw Error(ErrorCode::ValidationError, "missing required field", key);
    return *fallback;
  }
  if (!it->is_string()) throw Error(ErrorCode::ValidationError, "expected a string", key);
  return it->get<std::string>();
}

Json cmd_sign(const Json& payload) {
  const RealBundle bundle = parse_bundle(payload_field(payload, "bundle"), "bundle");
  const Json empty = Json::object();
  auto it = payload.find("automorphism");
  const AutomorphismData a = parse_automorphism(it == payload.end() ? empty : *it, "automorphism", bundle);
  std::string kind = string_arg(payload, "case", "auto");

  SignReport report;
  if (kind == "auto") {
    report = applicable_sign_report(bundle, a);
    kind = applicable_case(bundle);
  } else if (kind == "general") {
    report = sign_general_report(bundle, a);
  } else if (kind == "separating") {
    report = sign_separating_report(bundle, a);
  } else if (kind == "spin") {
    report = sign_spin_report(bundle, a);
  } else if (kind == "trivial") {
    report = sign_trivial_bundle_report(a, int_arg(payload, "n", bundle.rank));
  } else if (kind == "rank_reduction") {
    auto line = payload.find("sign_det_line");
    const Sign det_line = line == payload.end() ? Sign::plus() : parse_sign(*line, "sign_det_line");
    report = sign_rank_reduction_report(bundle, a, det_line);
  } else {
    throw Error(ErrorCode::ValidationError, "unknown case '" + kind + "'", "case");
  }
  Json result = to_json(report);
  Json out{{"case", kind}};
  out["sign"] = result["sign"];
  out["factors"] = result["factors"];
  return out;
}

Json cmd_classify_hypersurface(const Json& payload) {
  const auto c = classify_hypersurface(int_arg(payload, "N"), int_arg(payload, "delta"),
                                       int_arg(payload, "r", 0),
                                       bool_arg(payload, "tau_has_fixed_point", true));
  return to_json(c);
}

Json cmd_verify(const Json& payload, std::uint64_t seed) {
  const std::string lemma = string_arg(payload, "lemma");
  int default_bound = 1;
  for (const auto& l : verification_lemmas()) {
    if (l.name == lemma) default_bound = l.default_bound;
  }
  const int bound = int_arg(payload, "bound", default_bound);
  if (auto it = payload.find("seed"); it != payload.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 0) {
      throw Error(ErrorCode::ValidationError, "expected a nonnegative integer", "seed");
    }
    seed = it->get<std::uint64_t>();
  }
  const auto report = run_verification(lemma, bound, seed);
  return Json{{"lemma", report.lemma},
              {"bound", report.bound},
              {"seed", seed},
              {"cases_checked", report.cases_checked},
              {"failures", report.failures}};
}

Json cmd_teichmuller(const Json& payload) {
  Json out;
  if (auto it = payload.find("diffeo"); it != payload.end()) {
    const auto d = parse_diffeo(*it, "diffeo");
    out["genus"] = d.curve.genus;
    out["dimension"] = teichmuller_dimension(d.curve.genus);
    out["action_sign"] = to_json(teichmuller_action_sign(d));
    return out;
  }
  const int genus = int_arg(payload, "genus");
  out["genus"] = genus;
  out["dimension"] = teichmuller_dimension(genus);
  return out;
}

Json cmd_rh_strata(const Json& payload) {
  const int genus = int_arg(payload, "genus");
  std::vector<int> primes;
  if (payload.contains("prime")) {
    primes.push_back(int_arg(payload, "prime"));
  } else {
    for (int p = 2; p <= 2 * genus + 1; ++p) {
      if (is_prime(p)) primes.push_back(p);
    }
  }
  Json by_prime = Json::array();
  for (int p : primes) {
    Json strata = Json::array();
    for (const auto& s : riemann_hurwitz_strata(genus, p)) {
      Json js = to_json(s);
      js["codimension"] = 3 * genus - 3 - s.fixed_dimension;
      strata.push_back(js);
    }
    by_prime.push_back(Json{{"prime", p}, {"strata", strata}});
  }
  Json out{{"genus", genus}, {"teichmuller_dimension", teichmuller_dimension(genus)}, {"primes", by_prime}};
  if (genus >= 4) out["codim_ok"] = automorphism_locus_codim_ok(genus);
  return out;
}

Json cmd_divisor_check(const Json& payload) {
  const RealBundle bundle = parse_bundle(payload_field(payload, "bundle"), "bundle");
  const Quadruple minimal = minimal_quadruple(bundle);
  Json out{{"bundle", to_json(bundle)},
           {"minimal_quadruple", to_json(minimal)},
           {"minimal_realizes", quadruple_realizes(minimal, bundle)}};
  if (auto it = payload.find("quadruple"); it != payload.end()) {
    const Quadruple q = parse_quadruple(*it, "quadruple");
    out["quadruple"] = to_json(q);
    out["quadruple_realizes"] = quadruple_realizes(q, bundle);
  }
  if (auto it = payload.find("divisor"); it != payload.end()) {
    const RealDivisor d = parse_divisor(*it, "divisor", bundle.curve);
    out["divisor_degree"] = divisor_degree(d);
    out["compatible"] = is_compatible(d, bundle);
    out["jet_space_dimension"] = jet_space_dimension(d);
    if (auto rl = payload.find("relabeling"); rl != payload.end()) {
      JetRelabeling r = parse_relabeling(*rl, "relabeling");
      if (r.pair_perm.size() == 0) r.pair_perm = Permutation::identity(d.pair_multiplicities.size());
      try {
        out["jet_det_sign"] = to_json(jet_det_sign(d, r));
      } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, std::string(to_string(e.code())) + ": " + e.what(),
                    "relabeling");
      }
    }
  } else if (payload.contains("relabeling")) {
    throw Error(ErrorCode::ValidationError, "a relabeling needs a divisor", "relabeling");
  }
  return out;
}

Json cmd_moduli(const Json& payload) {
  const ModuliSetup s = parse_moduli_setup(payload_field(payload, "setup"), "setup");
  Json out{{"setup", to_json(s)}, {"det_pi_decomposition", to_json(det_pi_decomposition(s))}};
  if (auto it = payload.find("real_points_per_component"); it != payload.end()) {
    if (!it->is_array()) {
      throw Error(ErrorCode::ValidationError, "expected an array", "real_points_per_component");
    }
    std::vector<int> counts;
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_number_integer()) {
        throw Error(ErrorCode::ValidationError, "expected an integer",
                    "real_points_per_component[" + std::to_string(i) + "]");
      }
      counts.push_back((*it)[i].get<int>());
    }
    out["marked_bundles"] = to_json(marked_bundle_orientable(s, counts));
  }
  if (s.genus == 0) {
    out["genus0_orientable"] =
        genus0_orientable(s.marked_points, s.tau_has_fixed_point, s.real_part_spin, s.c1d);
  }
  return out;
}

Json error_body(ErrorCode code, const std::string& message, const std::string& field) {
  return Json{{"ok", false},
              {"error", Json{{"code", std::string(to_string(code))},
                             {"message", message},
                             {"offending_field", field}}}};
}

}  // namespace

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> names = {
      "sign", "classify-hypersurface", "verify", "teichmuller", "rh-strata", "divisor-check", "moduli"};
  return names;
}

Json run_command(std::string_view command, const Json& payload, std::uint64_t seed) {
  if (!payload.is_object()) throw Error(ErrorCode::ValidationError, "payload must be an object", "payload");
  if (command == "sign") return cmd_sign(payload);
  if (command == "classify-hypersurface") return cmd_classify_hypersurface(payload);
  if (command == "verify") return cmd_verify(payload, seed);
  if (command == "teichmuller") return cmd_teichmuller(payload);
  if (command == "rh-strata") return cmd_rh_strata(payload);
  if (command == "divisor-check") return cmd_divisor_check(payload);
  if (command == "moduli") return cmd_moduli(payload);
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + std::string(command) + "'", "command");
}

Response handle_request(const Json& request, std::uint64_t seed) {
  try {
    if (!request.is_object()) throw Error(ErrorCode::ValidationError, "request must be an object");
    const std::string command = string_arg(request, "command");
    const std::string version = string_arg(request, "version", std::string(protocol_version));
    if (version != protocol_version) {
      throw Error(ErrorCode::ValidationError, "unsupported version '" + version + "'", "version");
    }
    auto it = request.find("payload");
    const Json payload = it == request.end() ? Json::object() : *it;
    Json result = run_command(command, payload, seed);

    Response response;
    response.body = Json{{"ok", true}, {"command", command}, {"version", protocol_version}, {"result", result}};
    if (command == "verify" && !result["failures"].empty()) response.exit_code = exit_verification_failure;
    return response;
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::OracleMismatch ? exit_verification_failure : exit_validation_error;
    return Response{error_body(e.code(), e.what(), e.field()), code};
  } catch (const nlohmann::json::exception& e) {
    return Response{error_body(ErrorCode::ValidationError, e.what(), ""), exit_validation_error};
  }
}

Response handle_request_text(const std::string& text, std::uint64_t seed) {
  Json request;
  try {
    request = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    return Response{error_body(ErrorCode::ValidationError, e.what(), ""), exit_validation_error};
  }
  return handle_request(request, seed);
}

}  // namespace realdet
