#include <complicial/scomplex.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace complicial {

auto SSet::add_cell(int p, std::string name, std::vector<Simplex> faces) -> int
{
    if (p < 0)
        throw std::invalid_argument("add_cell: negative dimension");
    if (static_cast<int>(faces.size()) != (p == 0 ? 0 : p + 1))
        throw std::invalid_argument("add_cell: cell '" + name + "' has the wrong number of faces");
    if (static_cast<int>(faces_.size()) <= p) {
        faces_.resize(p + 1);
        names_.resize(p + 1);
    }
    finalized_ = false;
    names_[p].push_back(std::move(name));
    faces_[p].push_back(std::move(faces));
    return static_cast<int>(faces_[p].size()) - 1;
}

auto SSet::count(int p) const -> int
{
    if (p < 0 || p > dim())
        return 0;
    return static_cast<int>(faces_[p].size());
}

auto SSet::total_cells() const -> int
{
    int n = 0;
    for (int p = 0; p <= dim(); ++p)
        n += count(p);
    return n;
}

auto SSet::find_cell(const std::string& name) const -> std::optional<Simplex>
{
    for (int p = 0; p <= dim(); ++p)
        for (int id = 0; id < count(p); ++id)
            if (names_[p][id] == name)
                return Simplex::cell(p, id);
    return std::nullopt;
}

auto SSet::is_valid_simplex(const Simplex& x) const -> bool
{
    if (x.base_dim < 0 || x.base_dim > dim() || x.base < 0 || x.base >= count(x.base_dim))
        return false;
    if (x.dim != x.base_dim + popcount(x.degen))
        return false;
    return x.dim >= 32 || (x.degen >> x.dim) == 0;
}

auto SSet::compose_degeneracy(const Simplex& z, const Mono& eps) const -> Simplex
{
    // z = tau^* u and eps: [n] ->> [z.dim]; the result is (tau . eps)^* u.
    Mono c = complicial::compose(z.surjection(), eps);
    int n = static_cast<int>(eps.size()) - 1;
    return {n, z.base_dim, z.base, mask_from_surjection(c)};
}

auto SSet::compute_subface(int p, int id, std::uint32_t subset) const -> Simplex
{
    std::uint32_t full = (p + 1 >= 32) ? ~0u : ((1u << (p + 1)) - 1);
    if (subset == full)
        return Simplex::cell(p, id);
    int i = 0;
    while ((subset >> i) & 1u)
        ++i;
    const Simplex& z = faces_[p][id][i];
    std::uint32_t rest = compress_mask(subset, 1u << i);
    return apply(injection_from_mask(rest), z);
}

void SSet::finalize()
{
    sub_.assign(faces_.size(), {});
    building_ = true;
    std::map<std::string, int> seen;
    for (int p = 0; p <= dim(); ++p) {
        sub_[p].resize(count(p));
        for (int id = 0; id < count(p); ++id) {
            if (!seen.emplace(names_[p][id], p).second)
                throw std::invalid_argument("duplicate cell name '" + names_[p][id] + "'");
            for (const auto& f : faces_[p][id])
                if (f.dim != p - 1 || !is_valid_simplex(f))
                    throw std::invalid_argument("cell '" + names_[p][id] + "' has an ill-formed face");
        }
        for (int id = 0; id < count(p); ++id) {
            auto& table = sub_[p][id];
            table.assign(std::size_t{1} << (p + 1), Simplex{});
            for (std::uint32_t s = 1; s < table.size(); ++s)
                table[s] = compute_subface(p, id, s);
        }
        // simplicial identities d_i d_j = d_(j-1) d_i for i < j
        for (int id = 0; id < count(p) && p >= 2; ++id)
            for (int j = 1; j <= p; ++j)
                for (int i = 0; i < j; ++i) {
                    auto lhs = face_of(faces_[p][id][j], i);
                    auto rhs = face_of(faces_[p][id][i], j - 1);
                    if (lhs != rhs)
                        throw std::invalid_argument("cell '" + names_[p][id]
                                                    + "' violates a simplicial identity at (" + std::to_string(i)
                                                    + "," + std::to_string(j) + ")");
                }
    }
    building_ = false;
    finalized_ = true;
}

auto SSet::subface(int p, int id, std::uint32_t subset) const -> const Simplex&
{
    return sub_[p][id][subset];
}

auto SSet::apply(const Mono& theta, const Simplex& x) const -> Simplex
{
    if (theta.empty())
        throw std::invalid_argument("apply: operator with empty source");
    if (!is_monotone(theta, x.dim))
        throw std::invalid_argument("apply: operator codomain does not match simplex dimension");
    if (!finalized_ && !building_)
        throw std::logic_error("apply on a simplicial set that was not finalized");
    Mono c = x.degen ? complicial::compose(x.surjection(), theta) : theta;
    auto [eps, image] = image_factor(c);
    const Simplex& z = sub_[x.base_dim][x.base][image_mask(image)];
    return compose_degeneracy(z, eps);
}

auto SSet::face_of(const Simplex& x, int i) const -> Simplex
{
    if (x.dim == 0)
        throw std::invalid_argument("face of a vertex");
    return apply(coface(x.dim, i), x);
}

auto SSet::degeneracy(const Simplex& x, int i) const -> Simplex
{
    return apply(codegeneracy(x.dim, i), x);
}

auto SSet::vertex(const Simplex& x, int v) const -> int { return apply(Mono{v}, x).base; }

auto SSet::vertices(const Simplex& x) const -> std::vector<int>
{
    std::vector<int> out;
    for (int v = 0; v <= x.dim; ++v)
        out.push_back(vertex(x, v));
    return out;
}

auto SSet::simplices(int m) const -> std::vector<Simplex>
{
    std::vector<Simplex> out;
    if (m < 0)
        return out;
    for (int p = std::min(m, dim()); p >= 0; --p) {
        std::vector<std::uint32_t> masks;
        for (std::uint32_t mk = 0; mk < (1u << m); ++mk)
            if (popcount(mk) == m - p)
                masks.push_back(mk);
        for (int id = 0; id < count(p); ++id)
            for (auto mk : masks)
                out.push_back({m, p, id, mk});
    }
    return out;
}

auto SSet::describe(const Simplex& x) const -> std::string
{
    std::string s;
    for (int j : x.word())
        s += "s" + std::to_string(j);
    if (s.empty())
        return names_[x.base_dim][x.base];
    return s + "(" + names_[x.base_dim][x.base] + ")";
}

auto SMap::operator()(const Simplex& x) const -> Simplex
{
    const Simplex& y = img[x.base_dim][x.base];
    if (!x.degen)
        return y;
    return dst->apply(x.surjection(), y);
}

auto SMap::check() const -> std::optional<std::string>
{
    if (static_cast<int>(img.size()) != src->dim() + 1)
        return "image table has the wrong shape";
    for (int p = 0; p <= src->dim(); ++p) {
        if (static_cast<int>(img[p].size()) != src->count(p))
            return "image table has the wrong shape";
        for (int id = 0; id < src->count(p); ++id) {
            const auto& y = img[p][id];
            if (y.dim != p || !dst->is_valid_simplex(y))
                return "cell '" + src->name(p, id) + "' has an invalid image";
        }
    }
    for (int p = 1; p <= src->dim(); ++p)
        for (int id = 0; id < src->count(p); ++id)
            for (int i = 0; i <= p; ++i)
                if ((*this)(src->face(p, id, i)) != dst->face_of(img[p][id], i))
                    return "map does not commute with face " + std::to_string(i) + " of '" + src->name(p, id)
                           + "'";
    return std::nullopt;
}

auto SMap::is_injective() const -> bool
{
    for (int p = 0; p <= src->dim(); ++p) {
        std::vector<int> ids;
        for (const auto& y : img[p]) {
            if (y.degenerate())
                return false;
            ids.push_back(y.base);
        }
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            return false;
    }
    return true;
}

auto SMap::is_bijective() const -> bool
{
    if (!is_injective())
        return false;
    for (int p = 0; p <= std::max(src->dim(), dst->dim()); ++p)
        if (src->count(p) != dst->count(p))
            return false;
    return true;
}

auto compose(const SMap& g, const SMap& f) -> SMap
{
    SMap h{f.src, g.dst, {}};
    h.img.resize(f.img.size());
    for (std::size_t p = 0; p < f.img.size(); ++p)
        for (const auto& y : f.img[p])
            h.img[p].push_back(g(y));
    return h;
}

auto identity_map(const SSetPtr& x) -> SMap
{
    SMap f{x, x, {}};
    f.img.resize(x->dim() + 1);
    for (int p = 0; p <= x->dim(); ++p)
        for (int id = 0; id < x->count(p); ++id)
            f.img[p].push_back(Simplex::cell(p, id));
    return f;
}

auto equal_maps(const SMap& f, const SMap& g) -> bool { return f.img == g.img; }

auto subset_name(std::uint32_t subset, int m) -> std::string
{
    std::string s;
    for (int v = 0; v <= std::max(m, 0) && v < 32; ++v)
        if ((subset >> v) & 1u) {
            if (!s.empty() && m >= 10)
                s += ".";
            s += std::to_string(v);
        }
    return s;
}

namespace {

auto ordered_subsets(int m) -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> subs;
    for (std::uint32_t s = 1; s < (1u << (m + 1)); ++s)
        subs.push_back(s);
    std::sort(subs.begin(), subs.end(), [](std::uint32_t a, std::uint32_t b) {
        if (popcount(a) != popcount(b))
            return popcount(a) < popcount(b);
        return injection_from_mask(a) < injection_from_mask(b);
    });
    return subs;
}

} // namespace

auto standard_subcomplex(int m, const std::function<bool(std::uint32_t)>& keep) -> SSetPtr
{
    if (m < 0 || m > 20)
        throw std::invalid_argument("standard simplex dimension out of range");
    auto x = std::make_shared<SSet>();
    std::unordered_map<std::uint32_t, int> id;
    for (auto s : ordered_subsets(m)) {
        if (!keep(s))
            continue;
        int p = popcount(s) - 1;
        std::vector<Simplex> faces;
        if (p > 0) {
            auto verts = injection_from_mask(s);
            for (int i = 0; i <= p; ++i) {
                auto f = s & ~(1u << verts[i]);
                auto it = id.find(f);
                if (it == id.end())
                    throw std::invalid_argument("subcomplex of a simplex is not closed under faces");
                faces.push_back(Simplex::cell(p - 1, it->second));
            }
        }
        id[s] = x->add_cell(p, subset_name(s, m), std::move(faces));
    }
    x->finalize();
    return x;
}

auto standard(int m) -> SSetPtr
{
    return standard_subcomplex(m, [](std::uint32_t) { return true; });
}

auto boundary(int m) -> SSetPtr
{
    std::uint32_t full = (1u << (m + 1)) - 1;
    return standard_subcomplex(m, [full](std::uint32_t s) { return s != full; });
}

auto horn(int k, int m) -> SSetPtr
{
    if (k < 0 || k > m)
        throw std::invalid_argument("horn index out of range");
    std::uint32_t full = (1u << (m + 1)) - 1;
    std::uint32_t facet = full & ~(1u << k);
    return standard_subcomplex(m, [=](std::uint32_t s) { return s != full && s != facet; });
}

auto standard_cell_id(int m, std::uint32_t subset) -> int
{
    int p = popcount(subset) - 1;
    int id = 0;
    for (auto s : ordered_subsets(m)) {
        if (s == subset)
            return id;
        if (popcount(s) - 1 == p)
            ++id;
    }
    throw std::invalid_argument("subset outside the simplex");
}

auto simplex_of_mono(const SSet& x, int m, const Mono& f) -> Simplex
{
    auto [eps, image] = image_factor(f);
    auto cell = x.find_cell(subset_name(image_mask(image), m));
    if (!cell)
        throw std::invalid_argument("simplex not present in this subcomplex");
    return x.apply(eps, *cell);
}

auto yoneda(int k, const SSetPtr& x, const Simplex& z) -> SMap
{
    if (z.dim != k)
        throw std::invalid_argument("yoneda: simplex dimension mismatch");
    auto src = standard(k);
    SMap f{src, x, {}};
    f.img.resize(k + 1);
    for (auto s : ordered_subsets(k))
        f.img[popcount(s) - 1].push_back(x->apply(injection_from_mask(s), z));
    return f;
}

namespace {

struct PairHash {
    auto operator()(const std::pair<Simplex, Simplex>& p) const noexcept -> std::size_t
    {
        SimplexHash h;
        return h(p.first) * 31 + h(p.second);
    }
};

auto strip(const Simplex& x, std::uint32_t common) -> Simplex
{
    return {x.dim - popcount(common), x.base_dim, x.base, compress_mask(x.degen, common)};
}

} // namespace

auto product(const SSetPtr& x, const SSetPtr& y, int max_dim) -> SProduct
{
    int top = x->dim() + y->dim();
    if (x->dim() < 0 || y->dim() < 0)
        top = -1;
    if (max_dim >= 0)
        top = std::min(top, max_dim);
    std::vector<std::vector<std::pair<Simplex, Simplex>>> cells(std::max(top + 1, 0));
    for (int p = 0; p <= x->dim(); ++p)
        for (int a = 0; a < x->count(p); ++a)
            for (int q = 0; q <= y->dim(); ++q)
                for (int b = 0; b < y->count(q); ++b)
                    for (int k = std::max(p, q); k <= std::min(p + q, top); ++k)
                        for (std::uint32_t mx = 0; mx < (1u << k); ++mx) {
                            if (popcount(mx) != k - p)
                                continue;
                            for (std::uint32_t my = 0; my < (1u << k); ++my)
                                if (popcount(my) == k - q && (mx & my) == 0)
                                    cells[k].push_back({{k, p, a, mx}, {k, q, b, my}});
                        }
    auto index = std::make_shared<std::unordered_map<std::pair<Simplex, Simplex>, int, PairHash>>();
    for (auto& bucket : cells)
        for (std::size_t id = 0; id < bucket.size(); ++id)
            (*index)[bucket[id]] = static_cast<int>(id);

    auto pair = [index, x, y](const Simplex& a, const Simplex& b) -> Simplex {
        if (a.dim != b.dim)
            throw std::invalid_argument("product: components of different dimension");
        std::uint32_t common = a.degen & b.degen;
        auto key = std::make_pair(strip(a, common), strip(b, common));
        auto it = index->find(key);
        if (it == index->end())
            throw std::out_of_range("product: simplex beyond truncation");
        return {a.dim, key.first.dim, it->second, common};
    };

    auto obj = std::make_shared<SSet>();
    for (int k = 0; k <= top; ++k)
        for (const auto& [a, b] : cells[k]) {
            std::vector<Simplex> faces;
            if (k > 0)
                for (int i = 0; i <= k; ++i)
                    faces.push_back(pair(x->face_of(a, i), y->face_of(b, i)));
            obj->add_cell(k, "(" + x->describe(a) + "," + y->describe(b) + ")", std::move(faces));
        }
    obj->finalize();

    SProduct r;
    r.obj = obj;
    r.components = cells;
    r.p1 = SMap{obj, x, {}};
    r.p2 = SMap{obj, y, {}};
    r.p1.img.resize(cells.size());
    r.p2.img.resize(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k)
        for (const auto& [a, b] : cells[k]) {
            r.p1.img[k].push_back(a);
            r.p2.img[k].push_back(b);
        }
    r.pair = pair;
    return r;
}

namespace {

auto unique_name(std::map<std::string, int>& used, std::string name) -> std::string
{
    while (used.count(name))
        name += "'";
    used[name] = 1;
    return name;
}

} // namespace

auto pushout_along_mono(const SMap& i, const SMap& f) -> SPushout
{
    if (i.src != f.src && (i.src->total_cells() != f.src->total_cells()))
        throw std::invalid_argument("pushout: the two maps have different sources");
    if (!i.is_injective())
        throw std::invalid_argument("pushout: only pushouts along monomorphisms are supported");
    const SSet& a = *i.src;
    const SSet& b = *i.dst;
    const SSet& x = *f.dst;
    int top = std::max(b.dim(), x.dim());

    // preimage of each B cell under i
    std::vector<std::vector<int>> pre(b.dim() + 1);
    for (int p = 0; p <= b.dim(); ++p)
        pre[p].assign(b.count(p), -1);
    for (int p = 0; p <= a.dim(); ++p)
        for (int id = 0; id < a.count(p); ++id)
            pre[p][i.img[p][id].base] = id;

    auto obj = std::make_shared<SSet>();
    std::map<std::string, int> used;
    SPushout r;
    r.leg_b = SMap{i.dst, obj, {}};
    r.leg_b.img.resize(b.dim() + 1);
    r.leg_x = SMap{f.dst, obj, {}};
    r.leg_x.img.resize(x.dim() + 1);

    auto image_of = [&](const Simplex& s) -> Simplex {
        const Simplex& w = r.leg_b.img[s.base_dim][s.base];
        if (!s.degen)
            return w;
        if (w.base_dim <= x.dim() && w.base < x.count(w.base_dim) && pre[s.base_dim][s.base] >= 0)
            return x.apply(s.surjection(), w);
        return {s.dim, w.base_dim, w.base, s.degen};
    };

    for (int p = 0; p <= top; ++p) {
        for (int id = 0; id < x.count(p); ++id) {
            std::vector<Simplex> faces;
            if (p > 0)
                faces = x.faces(p, id);
            obj->add_cell(p, unique_name(used, x.name(p, id)), std::move(faces));
            r.leg_x.img[p].push_back(Simplex::cell(p, id));
        }
        if (p > b.dim())
            continue;
        for (int id = 0; id < b.count(p); ++id) {
            if (pre[p][id] >= 0) {
                r.leg_b.img[p].push_back(f.img[p][pre[p][id]]);
                continue;
            }
            std::vector<Simplex> faces;
            for (int k = 0; k <= p && p > 0; ++k)
                faces.push_back(image_of(b.face(p, id, k)));
            int nid = obj->add_cell(p, unique_name(used, b.name(p, id)), std::move(faces));
            r.leg_b.img[p].push_back(Simplex::cell(p, nid));
        }
    }
    obj->finalize();
    r.obj = obj;
    return r;
}

auto disjoint_union(const SSetPtr& x, const SSetPtr& y) -> SSetPtr
{
    auto obj = std::make_shared<SSet>();
    std::map<std::string, int> used;
    int top = std::max(x->dim(), y->dim());
    for (int p = 0; p <= top; ++p) {
        for (int id = 0; id < x->count(p); ++id)
            obj->add_cell(p, unique_name(used, x->name(p, id)), p ? x->faces(p, id) : std::vector<Simplex>{});
        for (int id = 0; id < y->count(p); ++id) {
            std::vector<Simplex> faces;
            if (p > 0)
                for (auto s : y->faces(p, id)) {
                    s.base += x->count(s.base_dim);
                    faces.push_back(s);
                }
            obj->add_cell(p, unique_name(used, y->name(p, id)), std::move(faces));
        }
    }
    obj->finalize();
    return obj;
}

auto point() -> SSetPtr { return standard(0); }

auto empty_sset() -> SSetPtr
{
    auto obj = std::make_shared<SSet>();
    obj->finalize();
    return obj;
}

} // namespace complicial
