#pragma once

#include <complicial/strat.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace complicial {

enum class Variant { Plain, Prime, DoublePrime };

/// Stratification of Δ[m] marking the vertex subsets accepted by `marked`.
auto marked_standard(int m, const std::function<bool(std::uint32_t)>& marked) -> PrestratPtr;

/// Δ^k[m], Δ^k[m]′, Δ^k[m]″.
auto complicial_simplex(int k, int m, Variant v = Variant::Plain) -> PrestratPtr;
/// Λ^k[m] with the inclusion into Δ^k[m].
auto complicial_horn(int k, int m) -> PMap;

auto delta3_eq() -> PrestratPtr;
auto delta3_sharp() -> PrestratPtr;
/// Vertex subsets of [3] marked in Δ[3]_eq.
auto eq_marked(std::uint32_t subset) -> bool;

/// Δ[l]⋆Δ[3]_eq → Δ[l]⋆Δ[3]^♯ realized on Δ[l+4], with the join marking.
auto saturation_pair(int l) -> PMap;
/// Δ[m]⋆Δ[3]_eq⋆Δ[l] → Δ[m]⋆Δ[3]^♯⋆Δ[l] on Δ[m+l+5].
auto saturation_alt_pair(int m, int l) -> PMap;

enum class Family { Horn, Thinness, Triviality, Saturation, SaturationAlt, CofBoundary, CofMarking };
auto to_string(Family f) -> std::string;

struct Generator {
    Family family;
    int k = -1;
    int m = -1;
    int l = -2;
    PMap map;

    auto name() const -> std::string;
};

auto horn_generator(int k, int m) -> Generator;
auto thinness_generator(int k, int m) -> Generator;
auto triviality_generator(int l) -> Generator;
auto saturation_generator(int l) -> Generator;
auto saturation_alt_generator(int m, int l) -> Generator;
auto boundary_cofibration(int m) -> Generator;
auto marking_cofibration(int m) -> Generator;

struct FamilyMask {
    bool horn = true;
    bool thinness = true;
    bool triviality = true;
    bool saturation = true;
    /// Two-sided saturation; not part of the default families.
    bool saturation_alt = false;
};

auto anodyne_generators(int n, int dim_bound, FamilyMask families = {}) -> std::vector<Generator>;
auto generating_cofibrations(int dim_bound) -> std::vector<Generator>;

/// Number of non-degenerate marked simplices.
auto marked_count(const Prestrat& x) -> int;

} // namespace complicial
