#ifndef LEONARD_IO_HPP
#define LEONARD_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "leonard/system.hpp"
#include "leonard/verification.hpp"

namespace leonard {

/// Serialized parameter-array input: field names are exactly
/// d, field, theta, theta_star, varphi, phi; scalars are strings
/// ("a" or "a/b"); field is "rational" or {"prime": p}; phi is optional
/// (derived when absent, cross-checked when present).
struct ParameterArrayFile {
    std::size_t d = 0;
    FieldSpec field = FieldSpec::rationals();
    std::vector<std::string> theta, theta_star, varphi;
    std::optional<std::vector<std::string>> phi;
};

/// Throws ParseError on malformed JSON, missing keys, or length
/// mismatches; scalar parse failures also raise ParseError.
ParameterArrayFile parse_parameter_json(const std::string& text);
ParameterArrayFile load_parameter_file(const std::string& path);

/// Constructs and validates the system.  Invariant violations (repeated
/// theta, zero varphi, failed axioms, phi mismatch) throw Error.
std::pair<LeonardSystem, ParameterArray> build_from_file(const ParameterArrayFile& file);

std::string parameter_file_to_json(const ParameterArrayFile& file);
ParameterArrayFile to_parameter_file(const ParameterArray& pa);

/// Machine-readable verification report (schema_version 1); verdicts are
/// identical to the text output.
std::string report_to_json(const VerificationReport& rep);

} // namespace leonard

#endif
