#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nearring/checks.hpp"
#include "nearring/enumerator.hpp"
#include "nearring/nearring.hpp"

namespace nearring {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// A group spec string or a raw {"order": n, "add": [[...]]} object.
FiniteGroup parse_group(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);

/// Parses {"name": str?, "group": <spec>, "mul": [[int]], "meta": {str: str}?}. Shape and range
/// errors raise InputError before any algebra; group axiom failures raise AxiomViolation. When
/// `require_axioms` is false the table is wrapped with Nearring::unchecked instead of validated.
Nearring parse_nearring(std::string_view text, bool require_axioms = true);
Nearring parse_nearring_file(const std::filesystem::path& path, bool require_axioms = true);
/// "-" reads standard input.
std::string read_text(const std::filesystem::path& path);

std::string serialize_nearring(const Nearring& r);

/// One canonical nearring per line, sorted, then a summary record.
std::string catalog_text(const CensusResult& result);
/// Writes via a temporary file and rename.
void write_catalog(const std::filesystem::path& path, const CensusResult& result);
/// Rebuilds a CensusResult from a catalog; counts are recomputed from the tables and must match
/// the summary record.
CensusResult read_catalog(const std::filesystem::path& path);

nlohmann::json flags_to_json(const PropertyFlags& f);
nlohmann::json counts_to_json(const CensusCounts& c);
nlohmann::json verdict_to_json(const CheckVerdict& v);
nlohmann::json report_to_json(const SuiteReport& r);

void write_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace nearring
