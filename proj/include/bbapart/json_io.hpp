#pragma once

#include "bbapart/harness.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bbapart
{

// Display names for the states of an LTS, either a JSON array of strings (one per state) or an
// object mapping decimal state indices to names; unnamed states keep their index.
// Throws ParseError on any other shape or duplicate names.
std::vector<std::string> parse_names( const nlohmann::json& j, std::size_t num_states );
std::vector<std::string> load_names( const std::string& path, std::size_t num_states );

nlohmann::json to_json( const Formula& f );
nlohmann::json to_json( const PFormula& f );
// States are written by display name.
nlohmann::json to_json( const Lts& lts, const Derivation& d );
nlohmann::json to_json( const Lts& lts, const CheckResult& r );
nlohmann::json to_json( const Lts& lts, const DiamondTrace& t );
nlohmann::json to_json( const ValidationReport& r );
nlohmann::json lts_stats( const Lts& lts );

} // namespace bbapart
