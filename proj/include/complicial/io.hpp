#pragma once

#include <complicial/nerve.hpp>
#include <complicial/strat.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace complicial {

using Json = nlohmann::ordered_json;

inline constexpr int format_version = 1;

/// Malformed documents.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

auto simplex_to_json(const SSet& s, const Simplex& x) -> Json;
auto simplex_from_json(const SSet& s, const Json& j) -> Simplex;

auto to_json(const Prestrat& x) -> Json;
auto to_json(const PMap& f) -> Json;

struct ParsedPrestrat {
    PrestratPtr obj;
    /// Listed degeneracy labels that disagree with the canonical ones.
    std::vector<std::string> problems;
};
auto prestrat_from_json(const Json& j) -> ParsedPrestrat;
/// Throws InputError when a listed degeneracy label is inconsistent.
auto load_prestrat(const Json& j) -> PrestratPtr;
auto pmap_from_json(const Json& j) -> PMap;
/// Map between given objects, cells and labels looked up by name.
auto pmap_from_json(const Json& j, const PrestratPtr& src, const PrestratPtr& dst) -> PMap;

auto to_json(const FiniteCategory& c) -> Json;
auto category_from_json(const Json& j) -> FiniteCategory;

auto read_json_file(const std::string& path) -> Json;

} // namespace complicial
