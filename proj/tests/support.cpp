#include "support.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace oracle {

auto tobjects(int max_dim) -> std::vector<TObject>
{
    std::vector<TObject> out;
    for (int m = 0; m <= max_dim; ++m) {
        out.push_back({m, false});
        if (m >= 1)
            out.push_back({m, true});
    }
    return out;
}

namespace {

void sequences(int len, int top, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> v(len, 0);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == len) {
            visit(v);
            return;
        }
        for (int x = lo; x <= top; ++x) {
            v[pos] = x;
            rec(pos + 1, x);
        }
    };
    rec(0, 0);
}

auto injective(const std::vector<int>& f) -> bool
{
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] == f[i - 1])
            return false;
    return true;
}

} // namespace

auto valid_by_rule(const TObject& a, const TObject& b, const Mono& f) -> bool
{
    if (!a.marked)
        return true;
    if (!b.marked)
        return !injective(f);
    if (!injective(f))
        return true;
    if (a.m != b.m)
        return false;
    for (int i = 0; i <= a.m; ++i)
        if (f[i] != i)
            return false;
    return true;
}

auto arrows(const TObject& a, const TObject& b) -> std::vector<TMorphism>
{
    std::vector<TMorphism> out;
    sequences(a.m + 1, b.m, [&](const std::vector<int>& f) {
        if (valid_by_rule(a, b, f))
            out.push_back({a, b, f});
    });
    return out;
}

auto compose_arrows(const TMorphism& g, const TMorphism& f) -> TMorphism
{
    if (f.dst != g.src)
        throw std::logic_error("oracle: not composable");
    Mono h(f.map.size());
    for (std::size_t i = 0; i < h.size(); ++i)
        h[i] = g.map[f.map[i]];
    return {f.src, g.dst, h};
}

auto GeneratedClasses::is_plus(const TMorphism& f) const -> bool
{
    return std::find(plus.begin(), plus.end(), f) != plus.end();
}

auto GeneratedClasses::is_minus(const TMorphism& f) const -> bool
{
    return std::find(minus.begin(), minus.end(), f) != minus.end();
}

namespace {

auto closure(const std::vector<TObject>& objs, const std::vector<TMorphism>& gens) -> std::vector<TMorphism>
{
    std::set<TMorphism> seen;
    std::vector<TMorphism> frontier;
    for (const auto& a : objs) {
        Mono id(a.m + 1);
        for (int i = 0; i <= a.m; ++i)
            id[i] = i;
        TMorphism e{a, a, id};
        if (seen.insert(e).second)
            frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<TMorphism> next;
        for (const auto& f : frontier)
            for (const auto& g : gens)
                if (g.src == f.dst) {
                    auto h = compose_arrows(g, f);
                    if (seen.insert(h).second)
                        next.push_back(h);
                }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace

auto generated_classes(int max_dim) -> GeneratedClasses
{
    auto objs = tobjects(max_dim);
    std::vector<TMorphism> up, down;
    for (int n = 1; n <= max_dim; ++n) {
        for (int i = 0; i <= n; ++i) {
            Mono f;
            for (int j = 0; j < n; ++j)
                f.push_back(j < i ? j : j + 1);
            up.push_back({{n - 1, false}, {n, false}, f});
        }
        Mono id(n + 1);
        for (int j = 0; j <= n; ++j)
            id[j] = j;
        up.push_back({{n, false}, {n, true}, id});
    }
    for (int n = 0; n < max_dim; ++n)
        for (int i = 0; i <= n; ++i) {
            Mono f;
            for (int j = 0; j <= n + 1; ++j)
                f.push_back(j <= i ? j : j - 1);
            down.push_back({{n + 1, false}, {n, false}, f});
            down.push_back({{n + 1, true}, {n, false}, f});
        }
    return {closure(objs, up), closure(objs, down)};
}

auto product_simplex_count(int a, int b, int k) -> int
{
    int count = 0;
    sequences(k + 1, a, [&](const std::vector<int>& f) {
        sequences(k + 1, b, [&](const std::vector<int>& g) {
            bool ok = true;
            for (int i = 1; i <= k && ok; ++i)
                ok = f[i] != f[i - 1] || g[i] != g[i - 1];
            count += ok;
        });
    });
    return count;
}

auto brute_maps(const PrestratPtr& src, const PrestratPtr& dst) -> std::vector<PMap>
{
    const SSet& s = src->underlying();
    const SSet& t = dst->underlying();
    std::vector<std::pair<int, int>> cells;
    for (int p = 0; p <= s.dim(); ++p)
        for (int id = 0; id < s.count(p); ++id)
            cells.push_back({p, id});
    std::vector<std::pair<int, int>> extras;
    for (int m = 1; m <= src->extra_dims(); ++m)
        for (int k = 0; k < static_cast<int>(src->extras(m).size()); ++k)
            extras.push_back({m, k});

    PMap f;
    f.src = src;
    f.dst = dst;
    f.cells = SMap{src->underlying_ptr(), dst->underlying_ptr(), {}};
    f.cells.img.resize(s.dim() + 1);
    for (int p = 0; p <= s.dim(); ++p)
        f.cells.img[p].resize(s.count(p));
    f.extra_img.resize(src->extra_dims() + 1);
    for (int m = 0; m <= src->extra_dims(); ++m)
        f.extra_img[m].resize(src->extras(m).size());

    std::vector<PMap> out;
    std::function<void(std::size_t)> labels = [&](std::size_t pos) {
        if (pos == extras.size()) {
            if (!f.check())
                out.push_back(f);
            return;
        }
        auto [m, k] = extras[pos];
        for (const auto& l : dst->labels_over(f.cells(src->extras(m)[k].anchor))) {
            f.extra_img[m][k] = l;
            labels(pos + 1);
        }
    };
    std::function<void(std::size_t)> assign = [&](std::size_t pos) {
        if (pos == cells.size()) {
            labels(0);
            return;
        }
        auto [p, id] = cells[pos];
        for (const auto& y : t.simplices(p)) {
            bool ok = true;
            for (int i = 0; p > 0 && i <= p && ok; ++i)
                ok = t.face_of(y, i) == f.cells(s.face(p, id, i));
            if (!ok)
                continue;
            f.cells.img[p][id] = y;
            assign(pos + 1);
        }
    };
    assign(0);
    return out;
}

auto brute_lift_exists(const PMap& i, const PMap& left) -> bool
{
    for (const auto& g : brute_maps(i.dst, left.dst))
        if (equal_maps(compose(g, i), left))
            return true;
    return false;
}

auto double_marked(int m) -> PrestratPtr
{
    auto i = inclusion_by_names(simplex(m), marked_simplex(m));
    return pushout(i, i).obj;
}

auto with_extra_labels(const SSetPtr& s, const std::vector<Simplex>& anchors) -> PrestratPtr
{
    auto x = std::make_shared<Prestrat>(s);
    for (const auto& a : anchors)
        x->add_label(a);
    return x;
}

auto nerve_rs_iso() -> PrestratPtr { return nerve_rs(free_iso(), 3); }

auto small_targets() -> std::vector<Named>
{
    auto d1 = simplex(1);
    auto d1t = marked_simplex(1);
    return {
        {"Δ[0]", terminal()},
        {"Δ[1]", d1},
        {"Δ[1]_t", d1t},
        {"Δ[2]", simplex(2)},
        {"Δ[2]^♯", sharp(standard(2))},
        {"Δ^1[2]", complicial_simplex(1, 2)},
        {"∂Δ[2]", flat(boundary(2))},
        {"Λ^1[2]", flat(horn(1, 2))},
        {"Λ^0[2]", flat(horn(0, 2))},
        {"N^RS(I)", nerve_rs_iso()},
        {"Δ[1]×Δ[1]", product(d1, d1).obj},
        {"Δ[1]_t×Δ[1]", product(d1t, d1).obj},
        {"Δ[3]_eq", delta3_eq()},
        {"Δ[3]", simplex(3)},
        {"Δ^1[3]″", complicial_simplex(1, 3, Variant::DoublePrime)},
    };
}

auto prestratified_catalog() -> std::vector<Named>
{
    auto s1 = standard(1);
    auto s2 = standard(2);
    auto s3 = standard(3);
    auto iso = nerve(free_iso(), 3).obj;
    auto top = [](int m) { return Simplex::cell(m, 0); };
    auto edge = [](int id) { return Simplex::cell(1, id); };
    return {
        {"P(1)", double_marked(1)},
        {"P(2)", double_marked(2)},
        {"P(3)", double_marked(3)},
        {"Δ[1] + s0(0)", with_extra_labels(s1, {s1->degeneracy(Simplex::cell(0, 0), 0)})},
        {"Δ[2] + top twice", with_extra_labels(s2, {top(2), top(2)})},
        {"Δ[2] + 01 twice", with_extra_labels(s2, {edge(0), edge(0)})},
        {"Λ^1[2] + edge twice, s0", with_extra_labels(horn(1, 2), {edge(0), edge(0),
                                                                     horn(1, 2)->degeneracy(Simplex::cell(0, 1), 0)})},
        {"N(I) + f twice", with_extra_labels(iso, {edge(0), edge(0)})},
        {"Δ[3] + s1(01)", with_extra_labels(s3, {s3->degeneracy(edge(0), 1)})},
        {"∂Δ[2] + edge thrice", with_extra_labels(boundary(2), {edge(1), edge(1), edge(1)})},
        {"P(1)×Δ[1]", product(double_marked(1), simplex(1)).obj},
    };
}

auto generator_catalog(int max_dim) -> std::vector<Generator>
{
    auto out = anodyne_generators(0, max_dim);
    for (auto& g : generating_cofibrations(max_dim))
        out.push_back(g);
    return out;
}

auto mono_catalog() -> std::vector<NamedMap>
{
    std::vector<NamedMap> out;
    for (const auto& g : generator_catalog(3))
        out.push_back({g.name(), g.map});
    for (int m = 1; m <= 3; ++m) {
        auto p = double_marked(m);
        out.push_back({"Δ[" + std::to_string(m) + "] -> P", inclusion_by_names(simplex(m), p)});
    }
    auto s1 = standard(1);
    auto x = with_extra_labels(s1, {s1->degeneracy(Simplex::cell(0, 0), 0)});
    out.push_back({"Δ[1] -> Δ[1] + s0(0)", inclusion_by_names(simplex(1), x)});
    out.push_back({"id N^RS(I)", identity_map(nerve_rs_iso())});
    return out;
}

namespace {

auto blank_map(const PrestratPtr& src, const PrestratPtr& dst) -> PMap
{
    PMap f;
    f.src = src;
    f.dst = dst;
    f.cells = SMap{src->underlying_ptr(), dst->underlying_ptr(), {}};
    const SSet& s = src->underlying();
    f.cells.img.resize(s.dim() + 1);
    for (int p = 0; p <= s.dim(); ++p)
        f.cells.img[p].resize(s.count(p));
    f.extra_img.resize(src->extra_dims() + 1);
    for (int m = 0; m <= src->extra_dims(); ++m)
        f.extra_img[m].resize(src->extras(m).size());
    return f;
}

} // namespace

auto swap_map(const Product& xy, const Product& yx) -> PMap
{
    auto f = blank_map(xy.obj, yx.obj);
    const SSet& s = xy.obj->underlying();
    for (int p = 0; p <= s.dim(); ++p)
        for (int id = 0; id < s.count(p); ++id) {
            auto c = Simplex::cell(p, id);
            f.cells.img[p][id] = yx.pair(xy.p2(c), xy.p1(c));
        }
    for (int m = 1; m <= xy.obj->extra_dims(); ++m)
        for (int k = 0; k < static_cast<int>(xy.obj->extras(m).size()); ++k) {
            Label l{xy.obj->extras(m)[k].anchor, k};
            f.extra_img[m][k] = yx.pair_label(xy.p2(l), xy.p1(l));
        }
    return f;
}

auto assoc_map(const Product& xy, const Product& xy_z, const Product& yz, const Product& x_yz) -> PMap
{
    auto f = blank_map(xy_z.obj, x_yz.obj);
    const SSet& s = xy_z.obj->underlying();
    for (int p = 0; p <= s.dim(); ++p)
        for (int id = 0; id < s.count(p); ++id) {
            auto c = Simplex::cell(p, id);
            auto u = xy_z.p1(c);
            f.cells.img[p][id] = x_yz.pair(xy.p1(u), yz.pair(xy.p2(u), xy_z.p2(c)));
        }
    for (int m = 1; m <= xy_z.obj->extra_dims(); ++m)
        for (int k = 0; k < static_cast<int>(xy_z.obj->extras(m).size()); ++k) {
            Label l{xy_z.obj->extras(m)[k].anchor, k};
            auto u = xy_z.p1(l);
            f.extra_img[m][k] = x_yz.pair_label(xy.p1(u), yz.pair_label(xy.p2(u), xy_z.p2(l)));
        }
    return f;
}

} // namespace oracle
