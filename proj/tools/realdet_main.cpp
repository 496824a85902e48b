#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "realdet/cli.hpp"

namespace {

using realdet::Json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

realdet::Response input_error(const std::string& message) {
  return realdet::Response{Json{{"ok", false},
                                {"error", Json{{"code", "ValidationError"},
                                               {"message", message},
                                               {"offending_field", "input"}}}},
                           realdet::exit_validation_error};
}

/// An input file may hold a whole request envelope or just the payload; the
/// subcommand on the command line wins over the envelope's command.
realdet::Response run_file(const std::string& command, const std::string& path, std::uint64_t seed) {
  Json parsed;
  try {
    parsed = Json::parse(read_input(path));
  } catch (const std::exception& e) {
    return input_error(e.what());
  }
  if (parsed.is_object() && parsed.contains("payload")) {
    parsed["command"] = command;
    return realdet::handle_request(parsed, seed);
  }
  return realdet::handle_request(
      Json{{"command", command}, {"version", realdet::protocol_version}, {"payload", parsed}}, seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signs of real automorphisms on determinant lines, with exhaustive verifiers"};
  app.require_subcommand(1);

  std::uint64_t seed = realdet::default_seed;
  std::string input;
  app.add_option("--seed", seed, "Seed for sampled verifications")->capture_default_str();

  Json payload = Json::object();

  auto* sign = app.add_subcommand("sign", "Sign of an automorphism on Det, with its factors");
  sign->add_option("--input", input, "JSON file with the payload or request ('-' for stdin)")->required();

  auto* classify = app.add_subcommand("classify-hypersurface", "w1 of real rational curves in a hypersurface of CP^N");
  int N = 0, delta = 0, r = 0;
  bool no_fixed_point = false;
  classify->add_option("--input", input, "JSON file ('-' for stdin)");
  classify->add_option("--N", N, "Dimension of the ambient projective space");
  classify->add_option("--delta", delta, "Degree of the hypersurface");
  classify->add_option("--r", r, "Number of real marked points");
  classify->add_flag("--no-fixed-point", no_fixed_point, "The source real structure has no fixed point");

  auto* verify = app.add_subcommand("verify", "Exhaustive or sampled verification of a lemma");
  std::string lemma;
  int bound = 0;
  verify->add_option("--input", input, "JSON file ('-' for stdin)");
  verify->add_option("--lemma", lemma, "One of: orientation-double, pinori, pin-tables, duality, quadruple, jet, "
                                        "hypersurface, teichmuller, factor-flip, tensor-witness");
  verify->add_option("--bound", bound, "Size bound (meaning depends on the lemma)");

  auto* teich = app.add_subcommand("teichmuller", "Dimension of the real Teichmuller space");
  int genus = 0;
  teich->add_option("--input", input, "JSON file ('-' for stdin)");
  teich->add_option("--genus", genus, "Genus");

  auto* strata = app.add_subcommand("rh-strata", "Strata of curves with an automorphism of prime order");
  int prime = 0;
  strata->add_option("--input", input, "JSON file ('-' for stdin)");
  strata->add_option("--genus", genus, "Genus");
  strata->add_option("--prime", prime, "Restrict to one prime");

  auto* divisor = app.add_subcommand("divisor-check", "Compatibility, minimal quadruple and jet signs");
  divisor->add_option("--input", input, "JSON file ('-' for stdin)")->required();

  auto* moduli = app.add_subcommand("moduli", "w1 decomposition of a real moduli space");
  moduli->add_option("--input", input, "JSON file ('-' for stdin)")->required();

  CLI11_PARSE(app, argc, argv);

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();

  realdet::Response response;
  if (!input.empty()) {
    response = run_file(command, input, seed);
  } else {
    if (chosen == classify) {
      payload = Json{{"N", N}, {"delta", delta}, {"r", r}, {"tau_has_fixed_point", !no_fixed_point}};
    } else if (chosen == verify) {
      payload["lemma"] = lemma;
      if (bound != 0) payload["bound"] = bound;
    } else if (chosen == teich) {
      payload["genus"] = genus;
    } else if (chosen == strata) {
      payload["genus"] = genus;
      if (prime != 0) payload["prime"] = prime;
    }
    response = realdet::handle_request(
        Json{{"command", command}, {"version", realdet::protocol_version}, {"payload", payload}}, seed);
  }
  std::cout << response.body.dump(2) << '\n';
  return response.exit_code;
}
