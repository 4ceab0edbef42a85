#pragma once

#include <complicial/monotone.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace complicial {

/// An m-simplex in Eilenberg-Zilber normal form: the degeneracy encoded by
/// `degen` (bit j set when vertices j and j+1 coincide) applied to the
/// non-degenerate cell `base` of dimension `base_dim`.
struct Simplex {
    int dim = 0;
    int base_dim = 0;
    int base = 0;
    std::uint32_t degen = 0;

    static auto cell(int p, int id) -> Simplex { return {p, p, id, 0}; }
    auto degenerate() const -> bool { return degen != 0; }
    auto word() const -> std::vector<int> { return word_from_mask(degen); }
    auto surjection() const -> Mono { return surjection_from_mask(dim, degen); }
    auto operator<=>(const Simplex&) const = default;
};

struct SimplexHash {
    auto operator()(const Simplex& s) const noexcept -> std::size_t
    {
        std::size_t h = static_cast<std::size_t>(s.base) * 0x9E3779B97F4A7C15ull;
        h ^= (static_cast<std::size_t>(s.dim) << 48) ^ (static_cast<std::size_t>(s.base_dim) << 40)
             ^ (static_cast<std::size_t>(s.degen) << 8);
        return h;
    }
};

/// A simplicial set with finitely many non-degenerate simplices. Cells are
/// stored per dimension with their face tables; degenerate simplices exist in
/// every dimension and are represented on demand.
class SSet {
public:
    /// Appends a cell; its faces must refer to cells already present.
    auto add_cell(int p, std::string name, std::vector<Simplex> faces) -> int;
    /// Checks the face tables and precomputes iterated faces. Throws on error.
    void finalize();

    auto dim() const -> int { return static_cast<int>(faces_.size()) - 1; }
    auto count(int p) const -> int;
    auto total_cells() const -> int;
    auto name(int p, int id) const -> const std::string& { return names_[p][id]; }
    auto face(int p, int id, int i) const -> const Simplex& { return faces_[p][id][i]; }
    auto faces(int p, int id) const -> const std::vector<Simplex>& { return faces_[p][id]; }
    auto find_cell(const std::string& name) const -> std::optional<Simplex>;

    /// Contravariant action of a monotone map theta: [n] -> [x.dim].
    auto apply(const Mono& theta, const Simplex& x) const -> Simplex;
    auto face_of(const Simplex& x, int i) const -> Simplex;
    auto degeneracy(const Simplex& x, int i) const -> Simplex;
    /// Face of cell (p,id) spanned by the vertices in `subset`.
    auto subface(int p, int id, std::uint32_t subset) const -> const Simplex&;
    auto vertex(const Simplex& x, int v) const -> int;
    auto vertices(const Simplex& x) const -> std::vector<int>;

    /// All m-simplices, non-degenerate first, in a fixed order.
    auto simplices(int m) const -> std::vector<Simplex>;
    auto is_valid_simplex(const Simplex& x) const -> bool;

    auto describe(const Simplex& x) const -> std::string;

private:
    auto compute_subface(int p, int id, std::uint32_t subset) const -> Simplex;
    auto compose_degeneracy(const Simplex& z, const Mono& eps) const -> Simplex;

    std::vector<std::vector<std::string>> names_;
    std::vector<std::vector<std::vector<Simplex>>> faces_;
    std::vector<std::vector<std::vector<Simplex>>> sub_;
    bool finalized_ = false;
    bool building_ = false;
};

using SSetPtr = std::shared_ptr<const SSet>;

/// A simplicial map, given on non-degenerate cells.
struct SMap {
    SSetPtr src;
    SSetPtr dst;
    std::vector<std::vector<Simplex>> img;

    auto operator()(const Simplex& x) const -> Simplex;
    /// Returns an explanation when the map does not commute with faces.
    auto check() const -> std::optional<std::string>;
    auto is_injective() const -> bool;
    auto is_bijective() const -> bool;
};

auto compose(const SMap& g, const SMap& f) -> SMap;
auto identity_map(const SSetPtr& x) -> SMap;

/// Δ[m]; cells are the non-empty subsets of {0..m}, named by their vertices.
auto standard(int m) -> SSetPtr;
auto boundary(int m) -> SSetPtr;
auto horn(int k, int m) -> SSetPtr;
/// Subcomplex of Δ[m] on the subsets accepted by `keep` (closed under faces).
auto standard_subcomplex(int m, const std::function<bool(std::uint32_t)>& keep) -> SSetPtr;
/// Cell id in standard(m) (or its subcomplexes, where present) of a vertex subset.
auto standard_cell_id(int m, std::uint32_t subset) -> int;
auto subset_name(std::uint32_t subset, int m) -> std::string;

/// The simplex of Δ[m] (or a subcomplex of it) given by a monotone map [n] -> [m].
auto simplex_of_mono(const SSet& x, int m, const Mono& f) -> Simplex;

/// The map Δ[k] -> X classified by a k-simplex z.
auto yoneda(int k, const SSetPtr& x, const Simplex& z) -> SMap;

struct SProduct {
    SSetPtr obj;
    std::vector<std::vector<std::pair<Simplex, Simplex>>> components;
    SMap p1;
    SMap p2;
    std::function<Simplex(const Simplex&, const Simplex&)> pair;
};

/// Cartesian product via shuffles. Optionally truncated to dimension `max_dim`.
auto product(const SSetPtr& x, const SSetPtr& y, int max_dim = -1) -> SProduct;

struct SPushout {
    SSetPtr obj;
    SMap leg_x;
    SMap leg_b;
};

/// Pushout of B <- A -> X along a levelwise injective i: A -> B.
auto pushout_along_mono(const SMap& i, const SMap& f) -> SPushout;

auto disjoint_union(const SSetPtr& x, const SSetPtr& y) -> SSetPtr;
auto point() -> SSetPtr;
auto empty_sset() -> SSetPtr;

/// True iff the two maps agree on every cell.
auto equal_maps(const SMap& f, const SMap& g) -> bool;

} // namespace complicial
