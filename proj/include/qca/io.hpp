#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qca/ebasis.hpp"
#include "qca/seed.hpp"
#include "qca/torus.hpp"

namespace qca {

using Json = nlohmann::json;

/// {"m","n","B","Lambda","d","order"} with a 1-based order; "weight" when set.
Json seed_to_json(const QuantumSeed& s);
/// Shape checks only; throws ParseError. Run seed_validate separately.
QuantumSeed seed_from_json(const Json& j);

/// Reads and parses a seed file. With `validate`, throws ParseError listing
/// every violation when the seed is invalid.
QuantumSeed load_seed(const std::filesystem::path& path, bool validate = true);
void save_seed(const std::filesystem::path& path, const QuantumSeed& s);

/// [{"exp":[...],"coeff":"<laurent>"}, ...]
Json element_to_json(const TorusElement& x);
TorusElement element_from_json(const Json& j, FormPtr form);

/// [{"a":[...],"coeff":"<laurent>"}, ...]
Json expansion_to_json(const EExpansion& x);
EExpansion expansion_from_json(const Json& j, std::size_t m);

Lattice lattice_from_json(const Json& j, std::size_t m);
IntMatrix matrix_from_json(const Json& j, const char* what);

/// "2,-1,0" -> {2,-1,0}. Throws ParseError.
std::vector<int> parse_int_list(std::string_view text);

/// Canonical one-line JSON of the seed (weight included) and its FNV-1a hash.
std::string canonical_seed_text(const QuantumSeed& s);
std::string seed_hash(const QuantumSeed& s);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace qca
