#include <complicial/nerve.hpp>

#include <map>
#include <stdexcept>

namespace complicial {

auto FiniteCategory::inverse(int f) const -> std::optional<int>
{
    const auto& m = morphisms[f];
    for (int g = 0; g < static_cast<int>(morphisms.size()); ++g)
        if (morphisms[g].src == m.dst && morphisms[g].dst == m.src && comp[g][f] == identity[m.src]
            && comp[f][g] == identity[m.dst])
            return g;
    return std::nullopt;
}

auto FiniteCategory::check() const -> std::optional<std::string>
{
    int n = static_cast<int>(morphisms.size());
    if (static_cast<int>(identity.size()) != static_cast<int>(objects.size()))
        return "one identity per object is required";
    for (std::size_t o = 0; o < objects.size(); ++o) {
        int id = identity[o];
        if (id < 0 || id >= n || morphisms[id].src != static_cast<int>(o) || morphisms[id].dst != static_cast<int>(o))
            return "identity of '" + objects[o] + "' is not an endomorphism of it";
    }
    if (static_cast<int>(comp.size()) != n)
        return "composition table has the wrong size";
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f) {
            bool composable = morphisms[f].dst == morphisms[g].src;
            int h = comp[g][f];
            if (composable != (h >= 0))
                return "composition defined exactly on composable pairs: " + morphisms[g].name + " o "
                       + morphisms[f].name;
            if (composable && (morphisms[h].src != morphisms[f].src || morphisms[h].dst != morphisms[g].dst))
                return "composite " + morphisms[g].name + " o " + morphisms[f].name + " has the wrong ends";
        }
    for (int f = 0; f < n; ++f) {
        if (comp[f][identity[morphisms[f].src]] != f || comp[identity[morphisms[f].dst]][f] != f)
            return "unit law fails at " + morphisms[f].name;
    }
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) {
            if (comp[g][f] < 0)
                continue;
            for (int h = 0; h < n; ++h)
                if (comp[h][g] >= 0 && comp[h][comp[g][f]] != comp[comp[h][g]][f])
                    return "associativity fails at " + morphisms[h].name + "," + morphisms[g].name + ","
                           + morphisms[f].name;
        }
    return std::nullopt;
}

auto FiniteCategory::find(const std::string& name) const -> int
{
    for (std::size_t i = 0; i < morphisms.size(); ++i)
        if (morphisms[i].name == name)
            return static_cast<int>(i);
    throw std::invalid_argument("no morphism named '" + name + "'");
}

namespace {

auto make_category(std::vector<std::string> objects, std::vector<FiniteCategory::Morphism> extra,
                   const std::map<std::pair<int, int>, int>& table) -> FiniteCategory
{
    FiniteCategory c;
    c.objects = std::move(objects);
    for (std::size_t o = 0; o < c.objects.size(); ++o) {
        c.identity.push_back(static_cast<int>(c.morphisms.size()));
        c.morphisms.push_back({"id_" + c.objects[o], static_cast<int>(o), static_cast<int>(o)});
    }
    int base = static_cast<int>(c.morphisms.size());
    for (auto& m : extra)
        c.morphisms.push_back(std::move(m));
    int n = static_cast<int>(c.morphisms.size());
    c.comp.assign(n, std::vector<int>(n, -1));
    for (int g = 0; g < n; ++g)
        for (int f = 0; f < n; ++f) {
            if (c.morphisms[f].dst != c.morphisms[g].src)
                continue;
            if (c.is_identity(g))
                c.comp[g][f] = f;
            else if (c.is_identity(f))
                c.comp[g][f] = g;
            else if (auto it = table.find({g - base, f - base}); it != table.end())
                c.comp[g][f] = it->second + base;
        }
    return c;
}

} // namespace

auto free_iso() -> FiniteCategory
{
    // f: a -> b and its inverse; composites of the two are identities
    auto c = make_category({"a", "b"}, {{"f", 0, 1}, {"f^-1", 1, 0}}, {});
    c.comp[3][2] = c.identity[0];
    c.comp[2][3] = c.identity[1];
    return c;
}

auto terminal_category() -> FiniteCategory { return make_category({"*"}, {}, {}); }

auto walking_arrow() -> FiniteCategory { return make_category({"0", "1"}, {{"f", 0, 1}}, {}); }

auto ordinal_category(int n) -> FiniteCategory
{
    std::vector<std::string> objs;
    for (int i = 0; i <= n; ++i)
        objs.push_back(std::to_string(i));
    std::vector<FiniteCategory::Morphism> ms;
    std::map<std::pair<int, int>, int> idx;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            idx[{i, j}] = static_cast<int>(ms.size());
            ms.push_back({std::to_string(i) + "<" + std::to_string(j), i, j});
        }
    std::map<std::pair<int, int>, int> table;
    for (const auto& [gij, g] : idx)
        for (const auto& [fij, f] : idx)
            if (fij.second == gij.first)
                table[{g, f}] = idx.at({fij.first, gij.second});
    return make_category(objs, ms, table);
}

namespace {

struct NerveBuilder {
    const FiniteCategory& c;
    std::vector<std::map<std::vector<int>, int>> index;

    // EZ normal form of a string that may contain identities; `start` is the
    // first vertex, used when every entry is an identity.
    auto normalize(const std::vector<int>& w, int start) const -> std::optional<Simplex>
    {
        std::vector<int> reduced;
        std::uint32_t mask = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (c.is_identity(w[j]))
                mask |= 1u << j;
            else
                reduced.push_back(w[j]);
        }
        int k = static_cast<int>(w.size());
        int p = static_cast<int>(reduced.size());
        if (p == 0)
            return Simplex{k, 0, start, mask};
        if (p >= static_cast<int>(index.size()))
            return std::nullopt;
        auto it = index[p].find(reduced);
        if (it == index[p].end())
            return std::nullopt;
        return Simplex{k, p, it->second, mask};
    }
};

auto string_name(const FiniteCategory& c, const std::vector<int>& w) -> std::string
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + c.morphisms[w[i]].name;
    return s + ")";
}

} // namespace

auto nerve(const FiniteCategory& c, int dim_bound) -> Nerve
{
    if (auto err = c.check())
        throw std::invalid_argument("not a category: " + *err);
    Nerve nv;
    NerveBuilder b{c, {}};
    auto s = std::make_shared<SSet>();
    b.index.resize(dim_bound + 1);
    nv.strings.resize(dim_bound + 1);
    for (std::size_t o = 0; o < c.objects.size(); ++o) {
        s->add_cell(0, c.objects[o], {});
        nv.strings[0].push_back({static_cast<int>(o)});
    }
    std::vector<std::vector<int>> layer;
    for (std::size_t f = 0; f < c.morphisms.size(); ++f)
        if (!c.is_identity(static_cast<int>(f)))
            layer.push_back({static_cast<int>(f)});
    for (int k = 1; k <= dim_bound && !layer.empty(); ++k) {
        for (const auto& w : layer) {
            std::vector<Simplex> faces;
            for (int i = 0; i <= k; ++i) {
                if (k == 1) {
                    int v = i == 0 ? c.morphisms[w[0]].dst : c.morphisms[w[0]].src;
                    faces.push_back(Simplex::cell(0, v));
                    continue;
                }
                std::vector<int> f;
                int start;
                if (i == 0) {
                    f.assign(w.begin() + 1, w.end());
                    start = c.morphisms[w[1]].src;
                } else if (i == k) {
                    f.assign(w.begin(), w.end() - 1);
                    start = c.morphisms[w[0]].src;
                } else {
                    f.assign(w.begin(), w.begin() + i - 1);
                    f.push_back(c.compose(w[i], w[i - 1]));
                    f.insert(f.end(), w.begin() + i + 1, w.end());
                    start = c.morphisms[w[0]].src;
                }
                faces.push_back(*b.normalize(f, start));
            }
            b.index[k][w] = s->add_cell(k, string_name(c, w), std::move(faces));
            nv.strings[k].push_back(w);
        }
        std::vector<std::vector<int>> next;
        if (k < dim_bound)
            for (const auto& w : layer)
                for (std::size_t g = 0; g < c.morphisms.size(); ++g)
                    if (!c.is_identity(static_cast<int>(g)) && c.morphisms[g].src == c.morphisms[w.back()].dst) {
                        auto v = w;
                        v.push_back(static_cast<int>(g));
                        next.push_back(std::move(v));
                    }
        layer = std::move(next);
    }
    s->finalize();
    nv.obj = s;
    nv.index = std::move(b.index);
    return nv;
}

auto nerve_rs(const FiniteCategory& c, int dim_bound) -> PrestratPtr
{
    auto nv = nerve(c, dim_bound);
    std::vector<Simplex> marked;
    for (int p = 2; p <= nv.obj->dim(); ++p)
        for (int id = 0; id < nv.obj->count(p); ++id)
            marked.push_back(Simplex::cell(p, id));
    return with_marking(nv.obj, marked);
}

auto saturate_nerve(const FiniteCategory& c, int dim_bound) -> Saturation
{
    auto rs = nerve_rs(c, dim_bound);
    auto nv = nerve(c, dim_bound);
    std::vector<Simplex> marked = rs->marked_cells();
    for (int id = 0; nv.obj->dim() >= 1 && id < nv.obj->count(1); ++id)
        if (c.inverse(nv.strings[1][id][0]))
            marked.push_back(Simplex::cell(1, id));
    auto sat = with_marking(rs->underlying_ptr(), marked);
    return {sat, inclusion_by_names(rs, sat)};
}

auto nerve_simplex(const FiniteCategory& c, const Nerve& nv, const std::vector<int>& string) -> std::optional<Simplex>
{
    if (string.empty())
        return std::nullopt;
    NerveBuilder b{c, nv.index};
    return b.normalize(string, c.morphisms[string[0]].src);
}

auto is_functor(const FiniteCategory& c, const FiniteCategory& d, const Functor& f) -> bool
{
    for (std::size_t m = 0; m < c.morphisms.size(); ++m) {
        const auto& cm = c.morphisms[m];
        const auto& dm = d.morphisms[f.on_morphisms[m]];
        if (dm.src != f.on_objects[cm.src] || dm.dst != f.on_objects[cm.dst])
            return false;
    }
    for (std::size_t o = 0; o < c.objects.size(); ++o)
        if (f.on_morphisms[c.identity[o]] != d.identity[f.on_objects[o]])
            return false;
    for (std::size_t g = 0; g < c.morphisms.size(); ++g)
        for (std::size_t h = 0; h < c.morphisms.size(); ++h) {
            int gh = c.comp[g][h];
            if (gh >= 0 && f.on_morphisms[gh] != d.comp[f.on_morphisms[g]][f.on_morphisms[h]])
                return false;
        }
    return true;
}

auto nerve_map(const FiniteCategory& c, const FiniteCategory& d, const Functor& f, const Nerve& nc, const Nerve& nd)
    -> SMap
{
    NerveBuilder b{d, nd.index};
    SMap g{nc.obj, nd.obj, {}};
    g.img.resize(nc.obj->dim() + 1);
    for (int p = 0; p <= nc.obj->dim(); ++p)
        for (const auto& w : nc.strings[p]) {
            if (p == 0) {
                g.img[0].push_back(Simplex::cell(0, f.on_objects[w[0]]));
                continue;
            }
            std::vector<int> img;
            for (int m : w)
                img.push_back(f.on_morphisms[m]);
            auto z = b.normalize(img, f.on_objects[c.morphisms[w[0]].src]);
            if (!z)
                throw std::out_of_range("nerve map: image beyond the dimension bound");
            g.img[p].push_back(*z);
        }
    return g;
}

} // namespace complicial
