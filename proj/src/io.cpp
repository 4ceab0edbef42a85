#include <complicial/io.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace complicial {

namespace {

void check_version(const Json& j)
{
    if (!j.is_object())
        throw InputError("expected a JSON object");
    if (j.contains("version") && j["version"] != format_version)
        throw InputError("unsupported format version " + j["version"].dump());
}

auto cell_index(const SSet& s) -> std::map<std::string, Simplex>
{
    std::map<std::string, Simplex> out;
    for (int p = 0; p <= s.dim(); ++p)
        for (int id = 0; id < s.count(p); ++id)
            out[s.name(p, id)] = Simplex::cell(p, id);
    return out;
}

auto parse_ref(const std::map<std::string, Simplex>& cells, const Json& j) -> Simplex
{
    if (!j.is_object() || !j.contains("base"))
        throw InputError("simplex reference needs a base: " + j.dump());
    auto it = cells.find(j["base"].get<std::string>());
    if (it == cells.end())
        throw InputError("unknown cell '" + j["base"].get<std::string>() + "'");
    std::vector<int> word;
    if (j.contains("word"))
        word = j["word"].get<std::vector<int>>();
    std::uint32_t mask;
    try {
        mask = mask_from_word(word);
    } catch (const std::exception& e) {
        throw InputError(std::string("degeneracy word: ") + e.what());
    }
    Simplex x{it->second.dim + static_cast<int>(word.size()), it->second.dim, it->second.base, mask};
    if (x.dim < 32 && (mask >> x.dim) != 0)
        throw InputError("degeneracy index out of range in " + j.dump());
    return x;
}

template <class F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const std::out_of_range& e) {
        throw InputError(e.what());
    }
}

} // namespace

auto simplex_to_json(const SSet& s, const Simplex& x) -> Json
{
    return Json{{"word", x.word()}, {"base", s.name(x.base_dim, x.base)}};
}

auto simplex_from_json(const SSet& s, const Json& j) -> Simplex
{
    return guarded([&] { return parse_ref(cell_index(s), j); });
}

auto to_json(const Prestrat& x) -> Json
{
    const SSet& s = x.underlying();
    Json j;
    j["version"] = format_version;
    j["kind"] = "prestrat";
    j["dim"] = s.dim();
    Json cells = Json::array();
    Json faces = Json::object();
    for (int p = 0; p <= s.dim(); ++p) {
        Json row = Json::array();
        for (int id = 0; id < s.count(p); ++id) {
            row.push_back(s.name(p, id));
            if (p > 0) {
                Json fs = Json::array();
                for (const auto& f : s.faces(p, id))
                    fs.push_back(simplex_to_json(s, f));
                faces[s.name(p, id)] = fs;
            }
        }
        cells.push_back(row);
    }
    j["cells"] = cells;
    j["faces"] = faces;
    Json labels = Json::array();
    for (int m = 0; m <= std::max(s.dim(), x.extra_dims()); ++m) {
        Json row = Json::array();
        for (const auto& e : x.extras(m))
            row.push_back(Json{{"name", e.name}, {"anchor", simplex_to_json(s, e.anchor)}, {"kind", "extra"}});
        labels.push_back(row);
    }
    j["labels"] = labels;
    return j;
}

auto prestrat_from_json(const Json& j) -> ParsedPrestrat
{
    return guarded([&] {
        check_version(j);
        if (j.contains("kind") && j["kind"] != "prestrat")
            throw InputError("expected a prestrat document, got " + j["kind"].dump());
        auto s = std::make_shared<SSet>();
        std::map<std::string, Simplex> cells;
        const Json& rows = j.at("cells");
        for (std::size_t p = 0; p < rows.size(); ++p)
            for (const auto& nm : rows[p]) {
                auto name = nm.get<std::string>();
                std::vector<Simplex> faces;
                if (p > 0) {
                    const Json& fs = j.at("faces").at(name);
                    if (fs.size() != p + 1)
                        throw InputError("cell '" + name + "' needs " + std::to_string(p + 1) + " faces");
                    for (const auto& f : fs)
                        faces.push_back(parse_ref(cells, f));
                }
                if (cells.count(name))
                    throw InputError("duplicate cell name '" + name + "'");
                int id = s->add_cell(static_cast<int>(p), name, std::move(faces));
                cells[name] = Simplex::cell(static_cast<int>(p), id);
            }
        s->finalize();
        if (j.contains("dim") && j["dim"].get<int>() != s->dim())
            throw InputError("declared dim " + j["dim"].dump() + " but cells reach dimension "
                             + std::to_string(s->dim()));
        auto x = std::make_shared<Prestrat>(s);
        ParsedPrestrat out;
        if (j.contains("labels"))
            for (std::size_t m = 0; m < j["labels"].size(); ++m)
                for (const auto& l : j["labels"][m]) {
                    auto anchor = parse_ref(cells, l.at("anchor"));
                    if (anchor.dim != static_cast<int>(m))
                        throw InputError("label listed in dimension " + std::to_string(m) + " has an anchor of dimension "
                                         + std::to_string(anchor.dim));
                    auto kind = l.value("kind", std::string("extra"));
                    auto name = l.value("name", std::string());
                    if (kind == "extra") {
                        x->add_label(anchor, name);
                    } else if (kind == "zeta") {
                        if (!anchor.degenerate()) {
                            out.problems.push_back("degeneracy label '" + name + "' anchored at the non-degenerate simplex "
                                                   + s->describe(anchor));
                            continue;
                        }
                        if (l.contains("of") && l.contains("i")) {
                            auto of = parse_ref(cells, l["of"]);
                            int i = l["i"].get<int>();
                            if (i < 0 || i > of.dim || of.dim + 1 != static_cast<int>(m))
                                throw InputError("degeneracy label '" + name + "' has an out-of-range index");
                            auto expect = s->degeneracy(of, i);
                            if (expect != anchor)
                                out.problems.push_back("anchor(zeta_" + std::to_string(i) + "(" + s->describe(of)
                                                       + ")) = " + s->describe(anchor) + " but s_" + std::to_string(i)
                                                       + "(" + s->describe(of) + ") = " + s->describe(expect));
                        }
                    } else {
                        throw InputError("unknown label kind '" + kind + "'");
                    }
                }
        out.obj = x;
        return out;
    });
}

auto load_prestrat(const Json& j) -> PrestratPtr
{
    auto p = prestrat_from_json(j);
    if (!p.problems.empty())
        throw InputError(p.problems.front());
    return p.obj;
}

auto to_json(const PMap& f) -> Json
{
    Json j;
    j["version"] = format_version;
    j["kind"] = "map";
    j["source"] = to_json(*f.src);
    j["target"] = to_json(*f.dst);
    const SSet& s = f.src->underlying();
    const SSet& t = f.dst->underlying();
    Json cells = Json::object();
    for (int p = 0; p <= s.dim(); ++p)
        for (int id = 0; id < s.count(p); ++id)
            cells[s.name(p, id)] = simplex_to_json(t, f.cells.img[p][id]);
    j["cells"] = cells;
    Json labels = Json::object();
    for (int m = 1; m <= f.src->extra_dims(); ++m)
        for (std::size_t k = 0; k < f.src->extras(m).size(); ++k) {
            const Label& l = f.extra_img[m][k];
            if (l.is_zeta())
                labels[f.src->extras(m)[k].name] = Json{{"zeta", simplex_to_json(t, l.anchor)}};
            else
                labels[f.src->extras(m)[k].name] = f.dst->extras(m)[l.extra].name;
        }
    j["labels"] = labels;
    return j;
}

auto pmap_from_json(const Json& j, const PrestratPtr& src, const PrestratPtr& dst) -> PMap
{
    return guarded([&] {
        check_version(j);
        const SSet& s = src->underlying();
        auto tcells = cell_index(dst->underlying());
        PMap f{src, dst, SMap{src->underlying_ptr(), dst->underlying_ptr(), {}}, {}};
        f.cells.img.resize(s.dim() + 1);
        for (int p = 0; p <= s.dim(); ++p)
            for (int id = 0; id < s.count(p); ++id) {
                const auto& name = s.name(p, id);
                if (!j.at("cells").contains(name))
                    throw InputError("map leaves cell '" + name + "' unassigned");
                auto y = parse_ref(tcells, j["cells"][name]);
                if (y.dim != p)
                    throw InputError("cell '" + name + "' sent to a simplex of the wrong dimension");
                f.cells.img[p].push_back(y);
            }
        std::map<std::string, Label> by_name;
        for (int m = 1; m <= dst->extra_dims(); ++m)
            for (std::size_t k = 0; k < dst->extras(m).size(); ++k)
                by_name[dst->extras(m)[k].name] = {dst->extras(m)[k].anchor, static_cast<int>(k)};
        f.extra_img.resize(src->extra_dims() + 1);
        for (int m = 1; m <= src->extra_dims(); ++m)
            for (const auto& e : src->extras(m)) {
                const Json labels = j.value("labels", Json::object());
                if (!labels.contains(e.name)) {
                    // default: the unique label over the image, if there is one
                    auto over = dst->labels_over(f.cells(e.anchor));
                    if (over.size() != 1)
                        throw InputError("label '" + e.name + "' needs an explicit image");
                    f.extra_img[m].push_back(over.front());
                    continue;
                }
                const Json& v = labels[e.name];
                if (v.is_string()) {
                    auto it = by_name.find(v.get<std::string>());
                    if (it == by_name.end())
                        throw InputError("unknown target label '" + v.get<std::string>() + "'");
                    f.extra_img[m].push_back(it->second);
                } else {
                    f.extra_img[m].push_back({parse_ref(tcells, v.at("zeta")), -1});
                }
            }
        if (auto err = f.check())
            throw InputError("ill-defined map: " + *err);
        return f;
    });
}

auto pmap_from_json(const Json& j) -> PMap
{
    return guarded([&] {
        check_version(j);
        auto src = load_prestrat(j.at("source"));
        auto dst = load_prestrat(j.at("target"));
        return pmap_from_json(j, src, dst);
    });
}

auto to_json(const FiniteCategory& c) -> Json
{
    Json j;
    j["version"] = format_version;
    j["kind"] = "category";
    j["objects"] = c.objects;
    Json ms = Json::array();
    for (const auto& m : c.morphisms)
        ms.push_back(Json{{"name", m.name}, {"src", c.objects[m.src]}, {"dst", c.objects[m.dst]}});
    j["morphisms"] = ms;
    Json ids = Json::object();
    for (std::size_t o = 0; o < c.objects.size(); ++o)
        ids[c.objects[o]] = c.morphisms[c.identity[o]].name;
    j["identities"] = ids;
    Json comp = Json::array();
    for (std::size_t g = 0; g < c.morphisms.size(); ++g)
        for (std::size_t f = 0; f < c.morphisms.size(); ++f)
            if (c.comp[g][f] >= 0 && !c.is_identity(static_cast<int>(g)) && !c.is_identity(static_cast<int>(f)))
                comp.push_back(Json::array({c.morphisms[g].name, c.morphisms[f].name, c.morphisms[c.comp[g][f]].name}));
    j["compose"] = comp;
    return j;
}

auto category_from_json(const Json& j) -> FiniteCategory
{
    return guarded([&] {
        check_version(j);
        FiniteCategory c;
        std::map<std::string, int> obj, mor;
        for (const auto& o : j.at("objects")) {
            obj[o.get<std::string>()] = static_cast<int>(c.objects.size());
            c.objects.push_back(o.get<std::string>());
        }
        for (const auto& m : j.at("morphisms")) {
            auto name = m.at("name").get<std::string>();
            if (mor.count(name))
                throw InputError("duplicate morphism '" + name + "'");
            mor[name] = static_cast<int>(c.morphisms.size());
            c.morphisms.push_back({name, obj.at(m.at("src").get<std::string>()), obj.at(m.at("dst").get<std::string>())});
        }
        c.identity.assign(c.objects.size(), -1);
        const Json ids = j.value("identities", Json::object());
        for (const auto& [o, m] : ids.items())
            c.identity[obj.at(o)] = mor.at(m.get<std::string>());
        // unlisted identities are generated as id_<object>
        for (int o = 0; o < static_cast<int>(c.objects.size()); ++o) {
            if (c.identity[o] >= 0)
                continue;
            auto name = "id_" + c.objects[o];
            if (mor.count(name))
                throw InputError("'" + name + "' is not listed as the identity of '" + c.objects[o] + "'");
            mor[name] = c.identity[o] = static_cast<int>(c.morphisms.size());
            c.morphisms.push_back({name, o, o});
        }
        int n = static_cast<int>(c.morphisms.size());
        c.comp.assign(n, std::vector<int>(n, -1));
        for (int g = 0; g < n; ++g)
            for (int f = 0; f < n; ++f) {
                if (c.morphisms[f].dst != c.morphisms[g].src)
                    continue;
                if (c.identity[c.morphisms[g].src] == g)
                    c.comp[g][f] = f;
                else if (c.identity[c.morphisms[f].dst] == f)
                    c.comp[g][f] = g;
            }
        for (const auto& t : j.value("compose", Json::array()))
            c.comp[mor.at(t.at(0).get<std::string>())][mor.at(t.at(1).get<std::string>())] = mor.at(t.at(2).get<std::string>());
        if (auto err = c.check())
            throw InputError("not a category: " + *err);
        return c;
    });
}

auto read_json_file(const std::string& path) -> Json
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

} // namespace complicial
