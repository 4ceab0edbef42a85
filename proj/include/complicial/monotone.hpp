#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace complicial {

/// A monotone map [n] -> [m], stored as its list of images.
using Mono = std::vector<int>;

auto is_monotone(const Mono& f, int target) -> bool;
auto is_injective(const Mono& f) -> bool;
auto is_surjective(const Mono& f, int target) -> bool;
auto identity_mono(int n) -> Mono;

/// g . f (apply f first).
auto compose(const Mono& g, const Mono& f) -> Mono;

/// Coface d^i : [n-1] -> [n] and codegeneracy s^i : [n+1] -> [n].
auto coface(int n, int i) -> Mono;
auto codegeneracy(int n, int i) -> Mono;

/// Splits f into a surjection followed by the inclusion of its image.
struct ImageFactorization {
    Mono surjection;
    std::vector<int> image;
};
auto image_factor(const Mono& f) -> ImageFactorization;

/// Calls visit on every monotone map [n] -> [m] in lexicographic order.
void for_each_mono(int n, int m, const std::function<void(const Mono&)>& visit);
auto all_monos(int n, int m) -> std::vector<Mono>;

/// Degeneracy masks: bit j is set when a surjection identifies j and j+1.
auto surjection_from_mask(int n, std::uint32_t mask) -> Mono;
auto mask_from_surjection(const Mono& s) -> std::uint32_t;

/// Strictly decreasing degeneracy word <-> mask.
auto word_from_mask(std::uint32_t mask) -> std::vector<int>;
auto mask_from_word(const std::vector<int>& word) -> std::uint32_t;

/// Removes the positions in `drop` from `mask`, renumbering the rest.
auto compress_mask(std::uint32_t mask, std::uint32_t drop) -> std::uint32_t;

/// Bitmask of the image of an injective map.
auto image_mask(const Mono& f) -> std::uint32_t;

/// Increasing injection [q] -> [p] whose image is `subset`.
auto injection_from_mask(std::uint32_t subset) -> Mono;

auto popcount(std::uint32_t x) -> int;

auto format_mono(const Mono& f) -> std::string;

} // namespace complicial
