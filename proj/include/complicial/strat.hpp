#pragma once

#include <complicial/scomplex.hpp>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace complicial {

/// An element of tX_m. Degeneracy labels (extra < 0) are canonical: exactly one
/// per degenerate simplex, anchored at it. Extra labels are indexed per
/// dimension.
struct Label {
    Simplex anchor;
    int extra = -1;

    auto is_zeta() const -> bool { return extra < 0; }
    auto dim() const -> int { return anchor.dim; }
    auto operator<=>(const Label&) const = default;
};

struct Extra {
    Simplex anchor;
    std::string name;
};

/// A prestratified simplicial set: a simplicial set with label sets tX_m,
/// anchors φ* and degeneracy labels ζ_i*.
class Prestrat {
public:
    Prestrat() = default;
    explicit Prestrat(SSetPtr s) : s_(std::move(s)) {}

    /// Adds an extra label; returns its index in its dimension.
    auto add_label(const Simplex& anchor, std::string name = {}) -> int;

    auto underlying() const -> const SSet& { return *s_; }
    auto underlying_ptr() const -> const SSetPtr& { return s_; }
    /// Largest dimension carrying cells or extra labels.
    auto dim() const -> int;
    auto extras(int m) const -> const std::vector<Extra>&;
    auto extra_count() const -> int;
    auto extra_dims() const -> int { return static_cast<int>(extras_.size()) - 1; }

    auto zeta(const Simplex& x, int i) const -> Label;
    auto anchor(const Label& l) const -> const Simplex& { return l.anchor; }
    auto labels_over(const Simplex& x) const -> std::vector<Label>;
    auto labels(int m) const -> std::vector<Label>;
    auto marked(const Simplex& x) const -> bool;
    auto label_name(const Label& l) const -> std::string;
    auto is_valid_label(const Label& l) const -> bool;

    /// Non-degenerate simplices carrying at least one label.
    auto marked_cells() const -> std::vector<Simplex>;

private:
    SSetPtr s_;
    std::vector<std::vector<Extra>> extras_;
    std::map<Simplex, std::vector<int>> by_anchor_;
};

using PrestratPtr = std::shared_ptr<const Prestrat>;

/// A morphism of prestratified simplicial sets.
struct PMap {
    PrestratPtr src;
    PrestratPtr dst;
    SMap cells;
    std::vector<std::vector<Label>> extra_img;

    auto operator()(const Simplex& x) const -> Simplex { return cells(x); }
    auto operator()(const Label& l) const -> Label;
    auto check() const -> std::optional<std::string>;
};

auto identity_map(const PrestratPtr& x) -> PMap;
auto compose(const PMap& g, const PMap& f) -> PMap;
auto equal_maps(const PMap& f, const PMap& g) -> bool;

struct ValidationReport {
    bool pass = true;
    std::vector<std::string> problems;
};

auto validate(const Prestrat& x) -> ValidationReport;
auto is_stratified(const Prestrat& x) -> bool;

auto flat(const SSetPtr& s) -> PrestratPtr;
auto sharp(const SSetPtr& s) -> PrestratPtr;
/// Stratified structure on s marking exactly the given non-degenerate cells.
auto with_marking(const SSetPtr& s, const std::vector<Simplex>& marked) -> PrestratPtr;

/// Lifts a simplicial map between stratified objects; nullopt when a marked
/// simplex would go to an unmarked one. For prestratified targets the first
/// label over each image is used.
auto strat_map(const SMap& f, const PrestratPtr& src, const PrestratPtr& dst) -> std::optional<PMap>;

struct Reflection {
    PrestratPtr obj;
    PMap unit;
};
auto reflector(const PrestratPtr& x) -> Reflection;

enum class MonoClass { NotMono, Entire, Regular, PlainMono };
auto classify_mono(const PMap& f) -> MonoClass;
auto to_string(MonoClass c) -> std::string;
auto is_label_injective(const PMap& f) -> bool;
auto is_iso(const PMap& f) -> bool;

struct Product {
    PrestratPtr obj;
    PMap p1;
    PMap p2;
    std::function<Simplex(const Simplex&, const Simplex&)> pair;
    std::function<Label(const Label&, const Label&)> pair_label;
};
auto product(const PrestratPtr& x, const PrestratPtr& y) -> Product;
auto product_map(const PMap& f, const PMap& g, const Product& src, const Product& dst) -> PMap;

/// Join of stratified sets. Throws for prestratified inputs.
auto join(const PrestratPtr& x, const PrestratPtr& y) -> PrestratPtr;

struct Pushout {
    PrestratPtr obj;
    PMap leg_x;
    PMap leg_b;
};
auto pushout(const PMap& i, const PMap& f) -> Pushout;
auto pushout_strat(const PMap& i, const PMap& f) -> Pushout;

/// Sub-object of y on the cells and extra labels accepted by the predicates.
struct SubObject {
    PrestratPtr obj;
    PMap inclusion;
};
auto subobject(const PrestratPtr& y, const std::function<bool(int, int)>& keep_cell,
               const std::function<bool(int, int)>& keep_extra) -> SubObject;

/// Δ[m], Δ[m]_t, Δ[0], ∅.
auto simplex(int m) -> PrestratPtr;
auto marked_simplex(int m) -> PrestratPtr;
auto terminal() -> PrestratPtr;
auto empty() -> PrestratPtr;

/// Inclusion of a sub-object of Δ[m]-shaped objects sharing cell names.
auto inclusion_by_names(const PrestratPtr& a, const PrestratPtr& b) -> PMap;
/// Map Δ[k]-shaped source -> x classified by a k-simplex.
auto yoneda_map(const PrestratPtr& src, const PrestratPtr& x, const Simplex& z) -> std::optional<PMap>;

/// Isomorphic copy with cells and labels reordered by `perm`, which is
/// called with the number of items and returns a permutation of them.
struct Relabeling {
    PrestratPtr obj;
    PMap iso;
};
auto relabel(const PrestratPtr& x, const std::function<std::vector<int>(int)>& perm) -> Relabeling;

/// Lazily built index of simplices of a simplicial set by their boundary.
class FiberIndex {
public:
    explicit FiberIndex(SSetPtr s) : s_(std::move(s)) {}
    auto fiber(int p, const std::vector<Simplex>& faces) -> const std::vector<Simplex>&;
    auto vertices() -> const std::vector<Simplex>&;
    auto target() const -> const SSetPtr& { return s_; }

private:
    struct VecHash {
        auto operator()(const std::vector<Simplex>& v) const noexcept -> std::size_t;
    };
    SSetPtr s_;
    // node-based so references handed out survive later insertions
    std::map<int, std::unordered_map<std::vector<Simplex>, std::vector<Simplex>, VecHash>> table_;
    std::vector<Simplex> vertices_;
    std::vector<Simplex> none_;
};

/// Search for maps src -> dst, optionally with prescribed values and over a
/// base: over(g(x)) = bottom(x).
struct MapProblem {
    PrestratPtr src;
    PrestratPtr dst;
    std::vector<std::vector<std::optional<Simplex>>> fixed_cells;
    std::vector<std::vector<std::optional<Label>>> fixed_extras;
    const PMap* over = nullptr;
    const PMap* bottom = nullptr;
};

enum class SearchStatus { Exhausted, Stopped, Budget };

struct SearchStats {
    SearchStatus status = SearchStatus::Exhausted;
    long nodes = 0;
};

/// Backtracking over cells by increasing dimension, then over labels. The
/// visitor returns false to stop.
auto enumerate_maps(const MapProblem& problem, const std::function<bool(const PMap&)>& visit, long budget,
                    FiberIndex* index = nullptr) -> SearchStats;
auto all_maps(const PrestratPtr& src, const PrestratPtr& dst, long budget = 1'000'000)
    -> std::pair<std::vector<PMap>, bool>;

struct HomLevel {
    std::vector<PMap> maps;
    bool complete = true;
};
/// Maps Δ[m] x Y -> Z, or Δ[m]_t x Y -> Z when `marked`.
auto internal_hom_level(const PrestratPtr& y, const PrestratPtr& z, int m, bool marked, long budget = 1'000'000)
    -> HomLevel;

} // namespace complicial
