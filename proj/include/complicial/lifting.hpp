#pragma once

#include <complicial/shapes.hpp>
#include <complicial/strat.hpp>

#include <optional>
#include <string>
#include <vector>

namespace complicial {

enum class Verdict { Pass, Fail, Indeterminate };
auto to_string(Verdict v) -> std::string;

/// Square i: A -> B, left: A -> X, f: X -> Y, bottom: B -> Y. Without f the
/// target is Δ[0].
struct LiftingProblem {
    PMap i;
    PMap left;
    std::optional<PMap> f;
    std::optional<PMap> bottom;
};

struct LiftResult {
    std::optional<PMap> lift;
    /// False when the search was cut by the budget.
    bool complete = true;
    long nodes = 0;

    auto verdict() const -> Verdict;
};

auto solve_lift(const LiftingProblem& p, long budget = 1'000'000, FiberIndex* index = nullptr) -> LiftResult;

struct GeneratorVerdict {
    std::string generator;
    Verdict verdict = Verdict::Pass;
    int attaching_maps = 0;
    /// Attaching maps admitting no lift (first few).
    std::vector<PMap> witnesses;
};

struct ComplicialReport {
    Verdict verdict = Verdict::Pass;
    int n = 0;
    int dim_bound = 0;
    long budget = 0;
    std::vector<GeneratorVerdict> generators;
};

/// RLP of X -> Δ[0] against one map, over every attaching map.
auto check_rlp(const PrestratPtr& x, const PMap& gen, const std::string& name, long budget,
               FiberIndex* index = nullptr) -> GeneratorVerdict;
auto is_n_complicial(const PrestratPtr& x, int n, int dim_bound, long budget = 1'000'000, FamilyMask families = {})
    -> ComplicialReport;

/// The comparison (I×L) ⊔_{I×K} (J×K) -> J×L as a sub-object of J×L.
struct PushoutProduct {
    Product target;
    PMap map;
    MonoClass kind;
};
auto pushout_product(const PMap& i, const PMap& j) -> PushoutProduct;

/// Non-degenerate simplices marked in the target and not in the source.
auto marked_difference(const PMap& e) -> std::vector<Simplex>;

enum class Lemma { B1, B2, B3, B4 };
auto parse_lemma(const std::string& s) -> Lemma;
auto to_string(Lemma l) -> std::string;

struct ScheduleStep {
    int batch = 0;
    Generator generator;
    /// Attaching simplex in J×L, as a pair of monotone maps.
    Mono first;
    Mono second;
    /// Well-definedness of the attaching map against the batch start.
    bool well_defined = false;
};

struct ScheduleReport {
    Lemma lemma = Lemma::B1;
    int n = 0;
    int l = 0;
    int m = 0;
    std::vector<ScheduleStep> steps;
    std::vector<Simplex> difference;
    /// Dimensions of the marked difference.
    std::vector<int> difference_dims;
    bool steps_ok = true;
    bool final_equal = false;
    std::vector<std::string> problems;
    PushoutProduct pp;
    PrestratPtr final_obj;

    auto pass() const -> bool { return steps_ok && final_equal && problems.empty(); }
};

auto verify_pp_lemma(Lemma lemma, int n, int l, int m) -> ScheduleReport;

/// Replays pushouts of the given generators along attaching maps, batch by
/// batch; each attaching map is checked against the object at the start of
/// its batch and transported along the legs.
struct Attachment {
    PMap generator;
    PMap attaching;
};
auto replay(const PrestratPtr& start, const std::vector<std::vector<Attachment>>& batches) -> PrestratPtr;

/// Same cells and the same marked simplices.
auto same_stratification(const Prestrat& a, const Prestrat& b) -> bool;

struct Retract {
    PrestratPtr rb;
    PMap rf;
    PMap j;
    PMap unit;
};
auto build_retract(const PMap& f) -> Retract;

/// Vertex inclusions X ≅ X×Δ[0] -> X×Δ[1]_t.
auto cylinder(const PrestratPtr& x) -> Product;
auto cylinder_end(const Product& cyl, const PrestratPtr& x, int eps) -> PMap;

struct HomotopyResult {
    std::optional<PMap> h;
    bool complete = true;
};
auto elementary_homotopy(const PMap& u0, const PMap& u1, long budget = 1'000'000) -> HomotopyResult;

struct HomotopicResult {
    Verdict verdict = Verdict::Fail;
    int steps = 0;
};
auto homotopic(const PMap& u0, const PMap& u1, int zigzag_budget = 2, long budget = 1'000'000) -> HomotopicResult;

struct UnitReport {
    Verdict verdict = Verdict::Pass;
    int squares = 0;
    int dim_bound = 0;
    std::vector<std::string> failures;
};
auto unit_acyclic_fibration_check(const PrestratPtr& x, int dim_bound, long budget = 1'000'000) -> UnitReport;

} // namespace complicial
