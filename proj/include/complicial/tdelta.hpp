#pragma once

#include <complicial/monotone.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace complicial {

struct MalformedInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An object [m] or [m]_t of tΔ.
struct TObject {
    int m = 0;
    bool marked = false;
    auto operator<=>(const TObject&) const = default;
};

/// A morphism of tΔ in the concrete model: a monotone map plus the markings
/// of its endpoints.
struct TMorphism {
    TObject src;
    TObject dst;
    Mono map;
    auto operator<=>(const TMorphism&) const = default;
};

auto make_object(int m, bool marked = false) -> TObject;

/// Throws MalformedInput for a wrong length or a non-monotone map.
auto is_valid(const TMorphism& f) -> bool;

auto identity(TObject a) -> TMorphism;
auto compose(const TMorphism& g, const TMorphism& f) -> TMorphism;
auto hom_set(TObject a, TObject b) -> std::vector<TMorphism>;

/// deg([0]) = 0, deg([k]) = 2k-1, deg([k]_t) = 2k.
auto degree(TObject a) -> int;

// Generators.
auto d(int n, int i) -> TMorphism;     // [n-1] -> [n]
auto s(int n, int i) -> TMorphism;     // [n+1] -> [n]
auto phi(int m) -> TMorphism;          // [m] -> [m]_t
auto zeta(int m, int i) -> TMorphism;  // [m]_t -> [m-1]

auto in_minus(const TMorphism& f) -> bool;
auto in_plus(const TMorphism& f) -> bool;

struct ReedyFactorization {
    TMorphism minus;
    TMorphism plus;
};
auto reedy_factorize(const TMorphism& f) -> ReedyFactorization;

auto sections_of(const TMorphism& f) -> std::vector<TMorphism>;

struct PresentationEntry {
    TObject a;
    TObject b;
    int classes = 0;
    int concrete = 0;
    bool bijective = false;
};

struct PresentationReport {
    bool pass = false;
    bool complete = true;
    int max_degree = 0;
    int max_word_length = 0;
    long nodes = 0;
    std::vector<PresentationEntry> entries;
    std::vector<std::string> discrepancies;

    auto entry(TObject a, TObject b) const -> const PresentationEntry*;
};

/// Enumerates generator words modulo the defining relations (coset-style
/// enumeration with coincidence merging) and compares the classes with the
/// concrete hom-sets.
auto validate_presentation(int max_degree, int max_word_length, long node_budget = 4'000'000)
    -> PresentationReport;

auto format_object(TObject a) -> std::string;
auto format_morphism(const TMorphism& f) -> std::string;
auto parse_object(const std::string& text) -> TObject;
/// Syntax: "[2]t -> [1] : 0,0,1".
auto parse_morphism(const std::string& text) -> TMorphism;

} // namespace complicial
