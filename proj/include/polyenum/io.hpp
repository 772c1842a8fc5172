#pragma once

// Readers and writers for the on-disk formats: group JSON, delta-weight
// JSON, matrix JSON, and the canonical polynomial JSON form. Parsing errors
// surface as validation_error with a short message.

#include <string>
#include <vector>

#include "polyenum/enumeration.hpp"
#include "polyenum/symdet.hpp"

namespace polyenum {

// {"degree": 4, "generators": [[1,2,3,0], "(0 1)"]} or {"named": "dihedral:4"}.
// Generators may be image arrays or cycle-notation strings.
PermGroup group_from_json_text(const std::string& text, std::uint64_t cap = kDefaultGroupCap);
PermGroup load_group(const std::string& path, std::uint64_t cap = kDefaultGroupCap);

// Named spec ("sym:3", "cyclic:5", ...) or a path to a group JSON file.
PermGroup resolve_group(const std::string& spec_or_path, std::uint64_t cap = kDefaultGroupCap);

// {"kind":"table","degree":3,"entries":[{"perm":[1,0,2],"value":"-1"},...]},
// or {"kind":"uniform"} / {"kind":"sign"}.
DeltaWeight delta_from_json_text(const std::string& text);
DeltaWeight load_delta(const std::string& path);

// "uniform" | "sign" | "@file.json"
DeltaWeight resolve_delta(const std::string& arg);

// {"entries": [["1","2"],["3","4"]]} with entries as "p/q" strings
// (plain JSON integers are accepted too).
RatMatrix matrix_from_json_text(const std::string& text);
RatMatrix load_matrix(const std::string& path);

// {"vars": ["t1","t2"], "terms": [{"exp": [2,0], "coef": "1/2"}, ...]} in
// canonical term order, serialized compactly.
std::string poly_to_json_text(const MultiPoly& p, const std::string& var_prefix);

// Comma-separated rationals: "1,2/3,-1".
std::vector<Rat> parse_rat_list(const std::string& csv);

std::string read_file(const std::string& path);

}  // namespace polyenum
