#include "support.hpp"

#include <complicial/io.hpp>

#include <doctest.h>

#include <string>

using namespace complicial;

namespace {

const std::string data_dir = COMPLICIAL_DATA_DIR;

auto with_zeta(Json doc, const Json& label) -> Json
{
    while (doc["labels"].size() < 2)
        doc["labels"].push_back(Json::array());
    doc["labels"][1].push_back(label);
    return doc;
}

} // namespace

TEST_CASE("objects survive a round trip byte for byte")
{
    auto objs = oracle::small_targets();
    for (const auto& x : oracle::prestratified_catalog())
        objs.push_back(x);
    objs.push_back({"N^RS(I)", oracle::nerve_rs_iso()});
    for (const auto& x : objs) {
        CAPTURE(x.name);
        auto text = to_json(*x.obj).dump();
        auto back = load_prestrat(Json::parse(text));
        CHECK(to_json(*back).dump() == text);
        CHECK(same_stratification(*back, *x.obj));
        CHECK(back->extra_count() == x.obj->extra_count());
    }
}

TEST_CASE("maps survive a round trip byte for byte")
{
    for (const auto& x : oracle::mono_catalog()) {
        CAPTURE(x.name);
        auto text = to_json(x.map).dump();
        auto back = pmap_from_json(Json::parse(text));
        CHECK(to_json(back).dump() == text);
        CHECK_FALSE(back.check());
        auto again = pmap_from_json(Json::parse(text), x.map.src, x.map.dst);
        CHECK(equal_maps(again, x.map));
    }
}

TEST_CASE("degeneracy labels are checked on input")
{
    auto doc = to_json(*simplex(1));
    auto s = standard(1);
    auto v0 = Simplex::cell(0, 0), v1 = Simplex::cell(0, 1);

    auto good = with_zeta(doc, {{"name", "z"}, {"kind", "zeta"}, {"anchor", simplex_to_json(*s, s->degeneracy(v0, 0))},
                                {"of", simplex_to_json(*s, v0)}, {"i", 0}});
    auto parsed = prestrat_from_json(good);
    CHECK(parsed.problems.empty());
    CHECK(parsed.obj->extra_count() == 0);

    auto bad = with_zeta(doc, {{"name", "z"}, {"kind", "zeta"}, {"anchor", simplex_to_json(*s, s->degeneracy(v1, 0))},
                               {"of", simplex_to_json(*s, v0)}, {"i", 0}});
    parsed = prestrat_from_json(bad);
    REQUIRE(parsed.problems.size() == 1);
    CHECK(parsed.problems[0].find("zeta_0(0)") != std::string::npos);
    CHECK_THROWS_AS(load_prestrat(bad), InputError);

    auto nondeg = with_zeta(doc, {{"name", "z"}, {"kind", "zeta"}, {"anchor", simplex_to_json(*s, Simplex::cell(1, 0))}});
    CHECK(prestrat_from_json(nondeg).problems.size() == 1);

    auto range = with_zeta(doc, {{"name", "z"}, {"kind", "zeta"}, {"anchor", simplex_to_json(*s, s->degeneracy(v0, 0))},
                                 {"of", simplex_to_json(*s, v0)}, {"i", 3}});
    CHECK_THROWS_AS(prestrat_from_json(range), InputError);
}

TEST_CASE("malformed documents")
{
    auto doc = to_json(*simplex(2));
    auto v = doc;
    v["version"] = 99;
    CHECK_THROWS_AS(load_prestrat(v), InputError);
    auto k = doc;
    k["kind"] = "map";
    CHECK_THROWS_AS(load_prestrat(k), InputError);
    auto dup = doc;
    dup["cells"][0][1] = "0";
    CHECK_THROWS_AS(load_prestrat(dup), InputError);
    auto faces = doc;
    faces["faces"]["012"].erase(0);
    CHECK_THROWS_AS(load_prestrat(faces), InputError);
    CHECK_THROWS_AS(load_prestrat(Json::array()), InputError);
    CHECK_THROWS_AS(read_json_file(data_dir + "/missing.strat"), InputError);

    auto m = to_json(complicial_horn(1, 2));
    m["cells"].erase(m["cells"].begin());
    CHECK_THROWS_AS(pmap_from_json(m), InputError);
}

TEST_CASE("data files")
{
    auto rs = load_prestrat(read_json_file(data_dir + "/nerve-rs-I.strat"));
    CHECK(same_stratification(*rs, *oracle::nerve_rs_iso()));
    auto eq = load_prestrat(read_json_file(data_dir + "/delta3-eq.strat"));
    CHECK(marked_count(*eq) == 7);
    auto h = pmap_from_json(read_json_file(data_dir + "/horn-1-2.map"));
    CHECK(classify_mono(h) == MonoClass::Regular);
    CHECK(is_stratified(*load_prestrat(read_json_file(data_dir + "/delta1-marked.strat"))));
}

TEST_CASE("categories")
{
    auto c = category_from_json(read_json_file(data_dir + "/free-iso.json"));
    CHECK(c.objects.size() == 2);
    CHECK(c.morphisms.size() == 4);
    CHECK_FALSE(c.check());
    CHECK(c.inverse(c.find("f")) == c.find("g"));

    auto j = to_json(free_iso());
    auto back = category_from_json(j);
    CHECK(to_json(back).dump() == j.dump());

    // id_a is taken by a morphism that is not an identity
    auto clash = Json::parse(R"({"version": 1, "kind": "category", "objects": ["a", "b"],
        "morphisms": [{"name": "id_a", "src": "a", "dst": "b"}]})");
    CHECK_THROWS_AS(category_from_json(clash), InputError);
}
