#pragma once

#include <string>

#include <json.hpp>

#include "realdet/bundles.hpp"
#include "realdet/det_signs.hpp"
#include "realdet/moduli.hpp"
#include "realdet/pin_spin.hpp"
#include "realdet/surface_topology.hpp"

namespace realdet {

/// Key order is kept as inserted so output is stable and readable.
using Json = nlohmann::ordered_json;

// Conventions: signs are the integers +1 / -1, bit lists are 0 / 1,
// permutations are 1-based image lists ([2, 1] swaps two components).
//
// Every parse_* function takes the JSON path of its argument and throws
// Error{ValidationError} whose field is the full path of the offending value.
// Parsed values are validated; a failed library check is reported as a
// ValidationError at the path of the enclosing object plus the check's field.

Json to_json(Sign s);
Json to_json(const Permutation& p);
Json to_json(const RealCurveType& c);
Json to_json(const RealDiffeoData& d);
Json to_json(const RealBundle& b);
Json to_json(const RealDivisor& d);
Json to_json(const Quadruple& q);
Json to_json(const JetRelabeling& r);
Json to_json(const PinCycleData& c);
Json to_json(const AutomorphismData& a);
Json to_json(const SignReport& r);
Json to_json(const ClassExpression& e);
Json to_json(const ModuliSetup& s);
Json to_json(const HypersurfaceSpinCheck& c);
Json to_json(const HypersurfaceClassification& c);
Json to_json(const AutomorphismStratum& s);
Json to_json(const MarkedOrientability& m);

Sign parse_sign(const Json& j, const std::string& path);
Permutation parse_permutation(const Json& j, const std::string& path);
RealCurveType parse_curve(const Json& j, const std::string& path);
/// `curve` is used when the object has no "curve" key.
RealDiffeoData parse_diffeo(const Json& j, const std::string& path, const RealCurveType* curve = nullptr);
RealBundle parse_bundle(const Json& j, const std::string& path);
RealDivisor parse_divisor(const Json& j, const std::string& path, const RealCurveType& curve);
Quadruple parse_quadruple(const Json& j, const std::string& path);
JetRelabeling parse_relabeling(const Json& j, const std::string& path);
PinCycleData parse_pin_cycle(const Json& j, const std::string& path);
/// Missing keys default to the identity automorphism of `bundle`; pin cycles,
/// when absent, are derived from the diffeo and the bundle's w_1.
AutomorphismData parse_automorphism(const Json& j, const std::string& path, const RealBundle& bundle);
ClassExpression parse_class_expression(const Json& j, const std::string& path);
ModuliSetup parse_moduli_setup(const Json& j, const std::string& path);

/// "a.b" style path joining; an empty parent yields the child alone.
std::string join_path(const std::string& parent, const std::string& child);

}  // namespace realdet
