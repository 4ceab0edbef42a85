#pragma once

#include <complicial/strat.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace complicial {

/// A finite 1-category given by its full composition table.
struct FiniteCategory {
    struct Morphism {
        std::string name;
        int src;
        int dst;
    };
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<int> identity;
    /// comp[g][f] = g∘f, or -1 when not composable.
    std::vector<std::vector<int>> comp;

    auto compose(int g, int f) const -> int { return comp[g][f]; }
    auto is_identity(int f) const -> bool { return identity[morphisms[f].src] == f; }
    auto inverse(int f) const -> std::optional<int>;
    /// Explanation of the first violated category law.
    auto check() const -> std::optional<std::string>;
    auto find(const std::string& name) const -> int;
};

auto free_iso() -> FiniteCategory;
auto terminal_category() -> FiniteCategory;
auto walking_arrow() -> FiniteCategory;
/// The poset [n] viewed as a category.
auto ordinal_category(int n) -> FiniteCategory;

struct Nerve {
    SSetPtr obj;
    /// Morphism string of each non-degenerate cell (objects for vertices).
    std::vector<std::vector<std::vector<int>>> strings;
    std::vector<std::map<std::vector<int>, int>> index;
};

/// Nerve with non-degenerate simplices up to `dim_bound`.
auto nerve(const FiniteCategory& c, int dim_bound) -> Nerve;
/// Simplex of a composable string, identities allowed.
auto nerve_simplex(const FiniteCategory& c, const Nerve& nv, const std::vector<int>& string) -> std::optional<Simplex>;
/// Roberts–Street stratification: everything marked in dimensions >= 2.
auto nerve_rs(const FiniteCategory& c, int dim_bound) -> PrestratPtr;

struct Saturation {
    PrestratPtr obj;
    PMap comparison;
};
/// Additionally marks the 1-simplices given by isomorphisms.
auto saturate_nerve(const FiniteCategory& c, int dim_bound) -> Saturation;

/// Functor on objects and morphisms, and the induced map of nerves.
struct Functor {
    std::vector<int> on_objects;
    std::vector<int> on_morphisms;
};
auto is_functor(const FiniteCategory& c, const FiniteCategory& d, const Functor& f) -> bool;
auto nerve_map(const FiniteCategory& c, const FiniteCategory& d, const Functor& f, const Nerve& nc, const Nerve& nd)
    -> SMap;

} // namespace complicial
