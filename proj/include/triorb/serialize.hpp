#pragma once

// JSON group files and report records. Output is deterministic: keys keep
// insertion order and nothing time-dependent is written.

#include <string>
#include <variant>

#include "triorb/autos.hpp"
#include "triorb/groups.hpp"

namespace triorb {

inline constexpr const char* kCocycleFormat = "cocycle-group/v1";
inline constexpr const char* kTableFormat = "table-group/v1";

Json cocycle_group_json(const CocycleGroup& group);
CocycleGroup cocycle_group_from_json(const Json& j);
// Automorphisms, when given, are stored as permutations of the table indices.
Json table_group_json(const TableGroup& group, const std::vector<Perm>& auts = {});
TableGroup table_group_from_json(const Json& j);
std::vector<Perm> table_auts_from_json(const Json& j);

using AnyGroup = std::variant<CocycleGroup, TableGroup>;
AnyGroup group_from_json(const Json& j);

Json matrix_json(const MatFp& m);
Json pair_json(const AutoPair& pair);
Json orbit_report_json(const OrbitReport& r);
Json verdict_json(const Verdict& v);

// Throws ParseError.
Json read_json_file(const std::string& path);
// Pretty-printed with a trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace triorb
