#pragma once

// Brute-force oracles and small catalogs shared by the unit tests and the
// acceptance binary. Nothing here calls the library's search code.

#include <complicial/lifting.hpp>
#include <complicial/nerve.hpp>
#include <complicial/shapes.hpp>
#include <complicial/tdelta.hpp>

#include <string>
#include <vector>

namespace oracle {

using namespace complicial;

// tΔ ------------------------------------------------------------------------

/// Objects [0..d] and [1..d]_t.
auto tobjects(int max_dim) -> std::vector<TObject>;
/// Validity straight from the definition of the concrete model.
auto valid_by_rule(const TObject& a, const TObject& b, const Mono& f) -> bool;
/// Every valid arrow a -> b, by enumerating all sequences.
auto arrows(const TObject& a, const TObject& b) -> std::vector<TMorphism>;
auto compose_arrows(const TMorphism& g, const TMorphism& f) -> TMorphism;

/// Closure of {d, φ} resp. {s, ζ} and identities under composition, between
/// objects of dimension at most max_dim.
struct GeneratedClasses {
    std::vector<TMorphism> plus;
    std::vector<TMorphism> minus;
    auto is_plus(const TMorphism& f) const -> bool;
    auto is_minus(const TMorphism& f) const -> bool;
};
auto generated_classes(int max_dim) -> GeneratedClasses;

// simplicial sets -----------------------------------------------------------

/// Non-degenerate k-simplices of Δ[a]×Δ[b]: jointly injective pairs of
/// monotone maps [k] -> [a], [k] -> [b].
auto product_simplex_count(int a, int b, int k) -> int;

// maps ----------------------------------------------------------------------

/// All maps src -> dst by naive enumeration: every non-degenerate cell may go
/// to any simplex of the same dimension, every extra label to any label over
/// the image; kept when the face and label conditions hold.
auto brute_maps(const PrestratPtr& src, const PrestratPtr& dst) -> std::vector<PMap>;
/// Lift of i against x under `left`, decided by brute force.
auto brute_lift_exists(const PMap& i, const PMap& left) -> bool;

// catalogs ------------------------------------------------------------------

struct Named {
    std::string name;
    PrestratPtr obj;
};

/// Double-marked pushout Δ[m]_t ⊔_{Δ[m]} Δ[m]_t.
auto double_marked(int m) -> PrestratPtr;
/// Copy of s with an extra label over each listed simplex.
auto with_extra_labels(const SSetPtr& s, const std::vector<Simplex>& anchors) -> PrestratPtr;

/// Free isomorphism Roberts-Street nerve up to dimension 3.
auto nerve_rs_iso() -> PrestratPtr;

/// Stratified objects of dimension at most 3 with at most 30 cells.
auto small_targets() -> std::vector<Named>;
/// Prestratified objects that are not stratified.
auto prestratified_catalog() -> std::vector<Named>;
/// Monomorphisms with stratified source.
struct NamedMap {
    std::string name;
    PMap map;
};
auto mono_catalog() -> std::vector<NamedMap>;
/// Generators and cofibrations with codomain of dimension at most max_dim.
auto generator_catalog(int max_dim) -> std::vector<Generator>;

/// Swap X×Y -> Y×X assembled from the pairing functions.
auto swap_map(const Product& xy, const Product& yx) -> PMap;
/// (X×Y)×Z -> X×(Y×Z).
auto assoc_map(const Product& xy, const Product& xy_z, const Product& yz, const Product& x_yz) -> PMap;

} // namespace oracle
