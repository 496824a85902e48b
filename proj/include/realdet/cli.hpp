#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "realdet/serialization.hpp"
#include "realdet/sweeps.hpp"

namespace realdet {

inline constexpr std::string_view protocol_version = "1";

enum ExitCode : int { exit_ok = 0, exit_validation_error = 1, exit_verification_failure = 2 };

struct Response {
  Json body;
  int exit_code = exit_ok;
};

/// Subcommands: sign, classify-hypersurface, verify, teichmuller, rh-strata,
/// divisor-check, moduli.
const std::vector<std::string_view>& command_names();

/// Runs one command on its payload and returns the result object. Throws
/// Error on invalid input.
Json run_command(std::string_view command, const Json& payload, std::uint64_t seed = default_seed);

/// Handles {"command", "version", "payload"}. Never throws: failures become
/// {"ok": false, "error": {"code", "message", "offending_field"}}.
Response handle_request(const Json& request, std::uint64_t seed = default_seed);

/// Parses `text` as a request envelope first; a JSON syntax error is reported
/// as a ValidationError response.
Response handle_request_text(const std::string& text, std::uint64_t seed = default_seed);

}  // namespace realdet
