#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "bloch/harmonic_map.hpp"

namespace bloch {

using Json = nlohmann::ordered_json;

/// Malformed or inadmissible function descriptor.
class DescriptorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Function descriptor document:
///   {"kind": "polynomial", "coefficients": [[re, im], ...]}
///   {"kind": "mobius", "a": [re, im]}
///   {"kind": "blaschke", "factors": [[re, im], ...], "rotation": [re, im]}
///   {"kind": "scaled-identity", "c": [re, im]}
///   {"kind": "power-kernel", "b": [re, im], "p": P}
///   {"kind": "antiderivative-extremal", "beta": B}
///   {"kind": "quadratic-extremal"}
///   {"kind": "composite", "outer": {...}, "inner": {...}, "offset": [re, im]}
/// Harmonic descriptor: {"h": <descriptor>, "g": <descriptor>}.
AnalyticMap parse_analytic(const Json& doc);
HarmonicMap parse_harmonic(const Json& doc);

/// Accepts either an analytic descriptor (g = 0) or a harmonic one.
HarmonicMap parse_function(const Json& doc);

Json to_json(const AnalyticMap& f);
Json to_json(const HarmonicMap& f);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

} // namespace bloch
