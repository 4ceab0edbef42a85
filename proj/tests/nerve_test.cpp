#include "support.hpp"

#include <doctest.h>

#include <functional>

using namespace complicial;

namespace {

auto profile(const SSet& s) -> std::vector<int>
{
    std::vector<int> out;
    for (int p = 0; p <= s.dim(); ++p)
        out.push_back(s.count(p));
    return out;
}

/// Every functor c -> d, by trying all assignments.
auto all_functors(const FiniteCategory& c, const FiniteCategory& d) -> std::vector<Functor>
{
    std::vector<Functor> out;
    Functor f;
    f.on_objects.assign(c.objects.size(), 0);
    f.on_morphisms.assign(c.morphisms.size(), 0);
    std::function<void(std::size_t)> mor = [&](std::size_t k) {
        if (k == c.morphisms.size()) {
            if (is_functor(c, d, f))
                out.push_back(f);
            return;
        }
        for (int g = 0; g < static_cast<int>(d.morphisms.size()); ++g)
            if (d.morphisms[g].src == f.on_objects[c.morphisms[k].src] &&
                d.morphisms[g].dst == f.on_objects[c.morphisms[k].dst]) {
                f.on_morphisms[k] = g;
                mor(k + 1);
            }
    };
    std::function<void(std::size_t)> obj = [&](std::size_t k) {
        if (k == c.objects.size()) {
            mor(0);
            return;
        }
        for (int o = 0; o < static_cast<int>(d.objects.size()); ++o) {
            f.on_objects[k] = o;
            obj(k + 1);
        }
    };
    obj(0);
    return out;
}

auto then(const Functor& f, const Functor& g) -> Functor
{
    Functor h;
    for (int o : f.on_objects)
        h.on_objects.push_back(g.on_objects[o]);
    for (int m : f.on_morphisms)
        h.on_morphisms.push_back(g.on_morphisms[m]);
    return h;
}

auto categories() -> std::vector<FiniteCategory>
{
    return {terminal_category(), walking_arrow(), ordinal_category(2), free_iso()};
}

} // namespace

TEST_CASE("the free isomorphism")
{
    auto c = free_iso();
    CHECK(c.morphisms.size() == 4);
    CHECK(c.objects.size() == 2);
    int f = c.find("f"), g = c.find("f^-1");
    CHECK(c.compose(g, f) == c.identity[0]);
    CHECK(c.compose(f, g) == c.identity[1]);
    CHECK(c.inverse(f) == g);
    CHECK_FALSE(c.check());
}

TEST_CASE("category laws are checked")
{
    for (const auto& c : categories())
        CHECK_FALSE(c.check());
    auto bad = free_iso();
    bad.comp[bad.find("f^-1")][bad.find("f")] = bad.find("f^-1");
    CHECK(bad.check());
    CHECK_FALSE(walking_arrow().inverse(walking_arrow().find("f")));
}

TEST_CASE("nerve profiles")
{
    CHECK(profile(*nerve(free_iso(), 3).obj) == std::vector{2, 2, 2, 2});
    CHECK(profile(*nerve(terminal_category(), 3).obj) == std::vector{1});
    CHECK(profile(*nerve(walking_arrow(), 2).obj) == std::vector{2, 1});
    for (int n = 0; n <= 4; ++n)
        CHECK(profile(*nerve(ordinal_category(n), n + 1).obj) == profile(*standard(n)));
}

TEST_CASE("nerve simplices of strings with identities are degenerate")
{
    auto c = free_iso();
    auto nv = nerve(c, 3);
    int f = c.find("f"), g = c.find("f^-1"), ia = c.identity[0];
    auto x = nerve_simplex(c, nv, {f, g, f});
    REQUIRE(x);
    CHECK_FALSE(x->degenerate());
    auto y = nerve_simplex(c, nv, {ia, f});
    REQUIRE(y);
    CHECK(y->degenerate());
    CHECK(y->word() == std::vector{0});
    CHECK(nv.obj->face_of(*y, 0) == *nerve_simplex(c, nv, {f}));
    // d_1 composes
    auto z = nerve_simplex(c, nv, {f, g});
    REQUIRE(z);
    CHECK(nv.obj->face_of(*z, 1) == *nerve_simplex(c, nv, {c.identity[0]}));
    CHECK_FALSE(nerve_simplex(c, nv, {f, f}));
}

TEST_CASE("nerve is functorial")
{
    auto cats = categories();
    std::vector<Nerve> nerves;
    for (const auto& c : cats)
        nerves.push_back(nerve(c, 3));
    int pairs = 0;
    for (std::size_t a = 0; a < cats.size(); ++a) {
        Functor id;
        for (int o = 0; o < static_cast<int>(cats[a].objects.size()); ++o)
            id.on_objects.push_back(o);
        for (int m = 0; m < static_cast<int>(cats[a].morphisms.size()); ++m)
            id.on_morphisms.push_back(m);
        CHECK(equal_maps(nerve_map(cats[a], cats[a], id, nerves[a], nerves[a]), identity_map(nerves[a].obj)));
        for (std::size_t b = 0; b < cats.size(); ++b)
            for (std::size_t e = 0; e < cats.size(); ++e)
                for (const auto& f : all_functors(cats[a], cats[b]))
                    for (const auto& g : all_functors(cats[b], cats[e])) {
                        auto nf = nerve_map(cats[a], cats[b], f, nerves[a], nerves[b]);
                        auto ng = nerve_map(cats[b], cats[e], g, nerves[b], nerves[e]);
                        CHECK_FALSE(nf.check());
                        auto ngf = nerve_map(cats[a], cats[e], then(f, g), nerves[a], nerves[e]);
                        CHECK(equal_maps(ngf, compose(ng, nf)));
                        ++pairs;
                    }
    }
    CHECK(pairs > 50);
}

TEST_CASE("Roberts-Street stratification of the free isomorphism")
{
    auto rs = nerve_rs(free_iso(), 3);
    const SSet& s = rs->underlying();
    int marked1 = 0;
    for (int id = 0; id < s.count(1); ++id)
        marked1 += rs->marked(Simplex::cell(1, id));
    CHECK(marked1 == 0);
    for (int p = 2; p <= 3; ++p)
        for (int id = 0; id < s.count(p); ++id)
            CHECK(rs->marked(Simplex::cell(p, id)));
    CHECK(is_stratified(*rs));
    auto pt = nerve_rs(terminal_category(), 3);
    CHECK(profile(pt->underlying()) == std::vector{1});
    CHECK(marked_count(*pt) == 0);
    auto [maps, complete] = all_maps(pt, terminal());
    REQUIRE(maps.size() == 1);
    CHECK(is_iso(maps[0]));
}

TEST_CASE("saturating the nerve of the free isomorphism")
{
    auto c = free_iso();
    auto sat = saturate_nerve(c, 3);
    CHECK(same_stratification(*sat.obj, *sharp(nerve(c, 3).obj)));
    CHECK(classify_mono(sat.comparison) == MonoClass::Entire);
    // walking arrow: nothing invertible to mark
    auto arrow = saturate_nerve(walking_arrow(), 2);
    CHECK(is_iso(arrow.comparison));
}

TEST_CASE("the saturation pushout reaches the sharp nerve")
{
    auto rs = oracle::nerve_rs_iso();
    auto gen = saturation_generator(-1);
    std::vector<Attachment> batch;
    for (const char* name : {"(f,f^-1,f)", "(f^-1,f,f^-1)"}) {
        auto z = rs->underlying().find_cell(name);
        REQUIRE(z);
        auto left = yoneda_map(gen.map.src, rs, *z);
        REQUIRE(left);
        batch.push_back({gen.map, *left});
    }
    auto target = saturate_nerve(free_iso(), 3).obj;
    auto once = replay(rs, {{batch[1]}});
    CHECK(same_stratification(*once, *target));
    auto both = replay(rs, {batch});
    CHECK(same_stratification(*both, *target));
}
