// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

using namespace complicial;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

auto full(int m) -> std::uint32_t { return (1u << (m + 1)) - 1; }

auto c1_presentation() -> Outcome
{
    Outcome o;
    auto r = validate_presentation(3, 8);
    o.require(r.complete, "presentation search incomplete");
    o.require(r.pass, r.discrepancies.empty() ? "presentation failed" : r.discrepancies.front());
    o.require(r.entries.size() == 49, "expected 49 hom-sets");
    for (const auto& e : r.entries)
        o.require(e.bijective && e.classes == e.concrete, "hom-set not in bijection with word classes");
    o.note = std::to_string(r.entries.size()) + " hom-sets";
    return o;
}

auto c2_reedy() -> Outcome
{
    Outcome o;
    auto gen = oracle::generated_classes(4);
    auto objs = oracle::tobjects(4);
    long morphisms = 0;
    for (auto a : objs)
        for (auto b : objs)
            for (const auto& f : hom_set(a, b)) {
                int found = 0;
                TMorphism minus, plus;
                for (auto c : objs)
                    for (const auto& m : oracle::arrows(a, c)) {
                        if (!gen.is_minus(m))
                            continue;
                        for (const auto& p : oracle::arrows(c, b))
                            if (gen.is_plus(p) && oracle::compose_arrows(p, m) == f) {
                                ++found;
                                minus = m;
                                plus = p;
                            }
                    }
                o.require(found == 1, "factorization not unique for " + format_morphism(f));
                auto r = reedy_factorize(f);
                o.require(r.minus == minus && r.plus == plus, "factorization differs for " + format_morphism(f));
                ++morphisms;
            }
    // the minus maps are split epis determined by their sections
    std::map<std::pair<TObject, TObject>, std::map<std::set<TMorphism>, TMorphism>> by_sections;
    for (const auto& f : gen.minus) {
        std::set<TMorphism> secs;
        for (const auto& g : oracle::arrows(f.dst, f.src))
            if (oracle::compose_arrows(f, g) == identity(f.dst))
                secs.insert(g);
        o.require(!secs.empty(), "minus map without section");
        auto [it, fresh] = by_sections[{f.src, f.dst}].emplace(secs, f);
        o.require(fresh || it->second == f, "two minus maps share their sections");
    }
    // the plus maps are monomorphisms
    for (const auto& f : gen.plus)
        for (auto c : objs) {
            std::set<TMorphism> images;
            auto maps = oracle::arrows(c, f.src);
            for (const auto& g : maps)
                images.insert(oracle::compose_arrows(f, g));
            o.require(images.size() == maps.size(), "plus map is not monic");
        }
    if (o.ok)
        o.note = std::to_string(morphisms) + " morphisms";
    return o;
}

auto c3_ez() -> Outcome
{
    Outcome o;
    std::vector<SSetPtr> cat{standard(4), boundary(3), horn(1, 3), product(standard(1), standard(2)).obj,
                             nerve(free_iso(), 4).obj};
    long checked = 0;
    for (const auto& s : cat)
        for (int p = 0; p <= 4; ++p)
            for (const auto& x : s->simplices(p)) {
                for (int i = 0; p >= 2 && i <= p; ++i)
                    for (int j = i + 1; j <= p; ++j)
                        o.require(s->face_of(s->face_of(x, j), i) == s->face_of(s->face_of(x, i), j - 1), "face identity");
                for (int j = 0; j <= p; ++j) {
                    auto sx = s->degeneracy(x, j);
                    o.require(s->face_of(sx, j) == x && s->face_of(sx, j + 1) == x, "face-degeneracy identity");
                }
                for (int q = 0; q <= 4; ++q)
                    for (const auto& th : all_monos(q, p)) {
                        auto y = s->apply(th, x);
                        for (int r = 0; r <= 4; ++r)
                            for (const auto& ps : all_monos(r, q)) {
                                o.require(s->apply(compose(th, ps), x) == s->apply(ps, y), "operators not functorial");
                                ++checked;
                            }
                    }
            }
    auto pr = product(standard(1), standard(1)).obj;
    o.require(pr->count(0) == 4 && pr->count(1) == 5 && pr->count(2) == 2 && pr->dim() == 2, "profile of Δ[1]×Δ[1]");

    std::vector<oracle::Named> objs = oracle::small_targets();
    objs.resize(9);
    objs.push_back({"P(1)", oracle::double_marked(1)});
    int pairs = 0, triples = 0;
    for (const auto& [nx, x] : objs)
        for (const auto& [ny, y] : objs) {
            if (x->underlying().total_cells() * y->underlying().total_cells() > 50)
                continue;
            auto xy = product(x, y);
            auto yx = product(y, x);
            auto sw = oracle::swap_map(xy, yx);
            o.require(!sw.check() && is_iso(sw), "swap is not an isomorphism for " + nx + ", " + ny);
            ++pairs;
            for (const auto& [nz, z] : objs) {
                if (x->underlying().total_cells() * y->underlying().total_cells() * z->underlying().total_cells() > 50)
                    continue;
                auto xy_z = product(xy.obj, z);
                auto yz = product(y, z);
                auto a = oracle::assoc_map(xy, xy_z, yz, product(x, yz.obj));
                o.require(!a.check() && is_iso(a), "associator is not an isomorphism");
                ++triples;
            }
        }
    if (o.ok)
        o.note = std::to_string(checked) + " composites, " + std::to_string(pairs) + " swaps, " +
                 std::to_string(triples) + " associators";
    return o;
}

auto c4_shapes() -> Outcome
{
    Outcome o;
    auto eq = delta3_eq();
    o.require(marked_count(*eq) == 7, "Δ[3]_eq marks " + std::to_string(marked_count(*eq)));
    for (std::uint32_t s = 1; s < 16; ++s) {
        bool expected = popcount(s) >= 3 || s == 0b0101 || s == 0b1010;
        o.require(eq->marked(Simplex::cell(popcount(s) - 1, standard_cell_id(3, s))) == expected, "Δ[3]_eq marking");
    }
    o.require(same_stratification(*complicial_simplex(0, 1), *marked_simplex(1)), "Δ^0[1] differs from Δ[1]_t");
    for (int m = 1; m <= 5; ++m)
        for (int k = 0; k <= m; ++k)
            for (auto v : {Variant::Plain, Variant::Prime, Variant::DoublePrime}) {
                if (v != Variant::Plain && m < 2)
                    continue;
                auto x = complicial_simplex(k, m, v);
                for (std::uint32_t s = 1; s <= full(m); ++s) {
                    std::uint32_t core = 0;
                    for (int j = k - 1; j <= k + 1; ++j)
                        if (j >= 0 && j <= m)
                            core |= 1u << j;
                    auto face = [&](int j) { return j >= 0 && j <= m && s == (full(m) & ~(1u << j)); };
                    bool expected = ((s & core) == core && popcount(s) >= 2) ||
                                    (v != Variant::Plain && (face(k - 1) || face(k + 1))) ||
                                    (v == Variant::DoublePrime && face(k));
                    o.require(x->marked(Simplex::cell(popcount(s) - 1, standard_cell_id(m, s))) == expected,
                              "marking of Δ^" + std::to_string(k) + "[" + std::to_string(m) + "] variant");
                }
            }
    return o;
}

auto c5_pushouts() -> Outcome
{
    Outcome o;
    for (int m = 1; m <= 3; ++m) {
        auto i = inclusion_by_names(simplex(m), marked_simplex(m));
        auto po = pushout(i, i);
        o.require(po.obj->labels_over(Simplex::cell(m, 0)).size() == 2, "expected two labels over the top simplex");
        o.require(!is_stratified(*po.obj), "double-marked pushout is stratified");
        o.require(same_stratification(*reflector(po.obj).obj, *marked_simplex(m)), "reflector is not Δ[m]_t");
    }
    std::vector<PMap> regular;
    for (int m = 1; m <= 3; ++m)
        for (int k = 0; k <= m; ++k)
            regular.push_back(complicial_horn(k, m));
    for (int m = 1; m <= 3; ++m)
        regular.push_back(inclusion_by_names(flat(boundary(m)), simplex(m)));
    int instances = 0;
    for (const auto& i : regular)
        for (const auto& [name, x] : oracle::small_targets()) {
            if (x->underlying().dim() < 1)
                continue;
            auto maps = oracle::brute_maps(i.src, x);
            for (std::size_t t = 0; t < maps.size(); t += std::max<std::size_t>(1, maps.size() / 3)) {
                auto po = pushout(i, maps[t]);
                o.require(is_stratified(*po.obj), "pushout into " + name + " is not stratified");
                o.require(classify_mono(po.leg_x) == MonoClass::Regular, "leg into " + name + " is not regular");
                ++instances;
            }
        }
    o.require(instances >= 20, "catalog too small");
    if (o.ok)
        o.note = std::to_string(instances) + " regular pushouts";
    return o;
}

auto c6_replay() -> Outcome
{
    Outcome o;
    int runs = 0;
    auto run = [&](Lemma lemma, int n, int l, int m) {
        auto r = verify_pp_lemma(lemma, n, l, m);
        auto tag = to_string(lemma) + "(" + std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(m) + ")";
        o.require(r.pass(), tag + " replay failed" + (r.problems.empty() ? "" : ": " + r.problems.front()));
        if (lemma == Lemma::B1)
            for (int k : r.difference_dims)
                o.require(m < k && k < l + 3, tag + " marks a simplex in dimension " + std::to_string(k));
        ++runs;
    };
    for (int n : {0, 1})
        for (int l : {-1, 0})
            for (int m : {1, 2})
                run(Lemma::B1, n, l, m);
    for (int l : {-1, 0})
        for (int m : {1, 2})
            run(Lemma::B2, 0, l, m);
    for (auto lemma : {Lemma::B3, Lemma::B4})
        for (int n : {0, 1})
            for (int l : {n + 1, n + 2})
                for (int m : {1, 2})
                    run(lemma, n, l, m);
    if (o.ok)
        o.note = std::to_string(runs) + " schedules";
    return o;
}

auto c7_retract() -> Outcome
{
    Outcome o;
    auto cat = oracle::mono_catalog();
    o.require(cat.size() >= 20, "catalog too small");
    bool double_marked = false;
    for (const auto& x : cat) {
        auto r = build_retract(x.map);
        o.require(!r.j.check(), x.name + ": j ill-defined");
        o.require(equal_maps(compose(r.j, r.rf), x.map), x.name + ": j o Rf != f");
        o.require(equal_maps(compose(r.unit, r.j), identity_map(r.rb)), x.name + ": not a retraction");
        double_marked = double_marked || x.name.find("-> P") != std::string::npos;
    }
    o.require(double_marked, "double-marked case missing");
    if (o.ok)
        o.note = std::to_string(cat.size()) + " monos";
    return o;
}

auto c8_case_study() -> Outcome
{
    Outcome o;
    auto rs = oracle::nerve_rs_iso();
    auto witness = *rs->underlying().find_cell("(f^-1,f,f^-1)");
    auto pass = is_n_complicial(rs, 1, 3, 1'000'000, FamilyMask{true, true, true, false});
    o.require(pass.verdict == Verdict::Pass, "horn, thinness and triviality do not all lift");
    auto fail = is_n_complicial(rs, 1, 3, 1'000'000, FamilyMask{false, false, false, true});
    bool found = false;
    for (const auto& g : fail.generators)
        if (g.generator == "saturation(-1)" && g.verdict == Verdict::Fail)
            for (const auto& w : g.witnesses)
                found = found || w(Simplex::cell(3, 0)) == witness;
    o.require(fail.verdict == Verdict::Fail && found, "saturation(-1) without the (f^-1,f,f^-1) witness");
    auto mark = check_rlp(rs, marking_cofibration(1).map, "marking(1)", 1'000'000);
    o.require(mark.verdict == Verdict::Fail, "lifts against Δ[1] -> Δ[1]_t");
    if (o.ok)
        o.note = std::to_string(pass.generators.size()) + " generators lift";
    return o;
}

auto c9_unit() -> Outcome
{
    Outcome o;
    auto cat = oracle::prestratified_catalog();
    o.require(cat.size() >= 10, "catalog too small");
    int squares = 0;
    for (const auto& x : cat) {
        o.require(!is_stratified(*x.obj), x.name + " is stratified");
        auto rep = unit_acyclic_fibration_check(x.obj, 3);
        o.require(rep.verdict == Verdict::Pass, x.name + ": " + (rep.failures.empty() ? "no lift" : rep.failures.front()));
        squares += rep.squares;
    }
    if (o.ok)
        o.note = std::to_string(cat.size()) + " objects, " + std::to_string(squares) + " squares";
    return o;
}

auto c10_homotopy() -> Outcome
{
    Outcome o;
    auto pt = terminal();
    auto t = marked_simplex(1);
    auto f = simplex(1);
    auto vertex = [&](const PrestratPtr& x, int v) { return *yoneda_map(pt, x, Simplex::cell(0, v)); };
    auto e = elementary_homotopy(vertex(t, 0), vertex(t, 1));
    o.require(e.h && !e.h->check(), "no homotopy between the endpoints of Δ[1]_t");
    e = elementary_homotopy(vertex(f, 0), vertex(f, 1));
    o.require(!e.h && e.complete, "endpoints of Δ[1] homotopic or search incomplete");

    int problems = 0;
    for (const auto& g : oracle::generator_catalog(3))
        for (const auto& tg : oracle::small_targets()) {
            FiberIndex index(tg.obj->underlying_ptr());
            for (const auto& left : oracle::brute_maps(g.map.src, tg.obj)) {
                auto r = solve_lift({g.map, left, std::nullopt, std::nullopt}, 1'000'000, &index);
                o.require(r.complete, "search cut by the budget");
                o.require(r.lift.has_value() == oracle::brute_lift_exists(g.map, left),
                          g.name() + " into " + tg.name + " disagrees with brute force");
                ++problems;
            }
        }
    if (o.ok)
        o.note = std::to_string(problems) + " lifting problems";
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double limit_s;
    };
    std::vector<Criterion> criteria{
        {"presentation oracle", c1_presentation, 60},
        {"Reedy uniqueness", c2_reedy, 60},
        {"EZ calculus", c3_ez, 600},
        {"shape fidelity", c4_shapes, 600},
        {"pushouts and stratification", c5_pushouts, 600},
        {"schedule replay", c6_replay, 600},
        {"retract construction", c7_retract, 600},
        {"free isomorphism case study", c8_case_study, 120},
        {"unit lifting", c9_unit, 600},
        {"homotopy and lifting agreement", c10_homotopy, 600},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > criteria[k].limit_s) {
            o.ok = false;
            o.note = "over the time limit";
        }
        failed += !o.ok;
        std::printf("%s %zu %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].name, secs,
                    o.note.empty() ? "" : ": ", o.note.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
