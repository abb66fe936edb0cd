#pragma once

#include "nearsymp/certify.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace nearsymp {

using Json = nlohmann::ordered_json;

/// Input document violation; the message starts with the offending field path.
class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

ManifoldInput input_from_json(const Json& j);
Json input_to_json(const ManifoldInput& in);

ManifoldInput parse_input(const std::filesystem::path& path);
void emit_input(const ManifoldInput& in, const std::filesystem::path& path);

Json certificate_to_json(const ConstructionCertificate& cert);
Json battery_to_json(const BatteryReport& rep);

/// Writes certificate.json and report.txt into `dir` (created if needed).
void emit_certificate(const ConstructionCertificate& cert, const std::filesystem::path& dir);

}  // namespace nearsymp
