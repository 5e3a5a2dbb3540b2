#pragma once

#include <string>

#include <json.hpp>

#include "symleib/algebra.hpp"

namespace symleib {

// {"dim": n, "products": [{"i": 1, "j": 2, "coeffs": {"1": "1/2"}}]}
// Products are emitted sorted by (i, j) with zero coefficients omitted, so
// write(read(s)) == s for any canonical document s.
nlohmann::json table_to_json(const StructureTable& t);
// Throws std::invalid_argument on malformed input. Non-integral JSON numbers
// are rejected; coefficients must be integers or "p/q" strings.
StructureTable table_from_json(const nlohmann::json& j);

std::string dump_table(const StructureTable& t);
StructureTable parse_table(const std::string& text);
StructureTable read_table_file(const std::string& path);

}  // namespace symleib
