#include <complicial/strat.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace complicial {

auto Prestrat::add_label(const Simplex& anchor, std::string name) -> int
{
    if (anchor.dim < 1)
        throw std::invalid_argument("labels live in positive dimensions");
    if (!s_->is_valid_simplex(anchor))
        throw std::invalid_argument("label anchored at an invalid simplex");
    if (static_cast<int>(extras_.size()) <= anchor.dim)
        extras_.resize(anchor.dim + 1);
    auto& over = by_anchor_[anchor];
    if (name.empty()) {
        name = "t" + s_->describe(anchor);
        if (!over.empty())
            name += "#" + std::to_string(over.size());
    }
    int idx = static_cast<int>(extras_[anchor.dim].size());
    extras_[anchor.dim].push_back({anchor, std::move(name)});
    over.push_back(idx);
    return idx;
}

auto Prestrat::dim() const -> int { return std::max(s_->dim(), extra_dims()); }

auto Prestrat::extras(int m) const -> const std::vector<Extra>&
{
    static const std::vector<Extra> none;
    if (m < 0 || m >= static_cast<int>(extras_.size()))
        return none;
    return extras_[m];
}

auto Prestrat::extra_count() const -> int
{
    int n = 0;
    for (const auto& e : extras_)
        n += static_cast<int>(e.size());
    return n;
}

auto Prestrat::zeta(const Simplex& x, int i) const -> Label { return {s_->degeneracy(x, i), -1}; }

auto Prestrat::labels_over(const Simplex& x) const -> std::vector<Label>
{
    std::vector<Label> out;
    if (x.degenerate())
        out.push_back({x, -1});
    auto it = by_anchor_.find(x);
    if (it != by_anchor_.end())
        for (int idx : it->second)
            out.push_back({x, idx});
    return out;
}

auto Prestrat::labels(int m) const -> std::vector<Label>
{
    std::vector<Label> out;
    if (m < 1)
        return out;
    for (const auto& x : s_->simplices(m))
        for (const auto& l : labels_over(x))
            out.push_back(l);
    return out;
}

auto Prestrat::marked(const Simplex& x) const -> bool
{
    return x.degenerate() || by_anchor_.count(x) > 0;
}

auto Prestrat::label_name(const Label& l) const -> std::string
{
    if (l.is_zeta())
        return "z" + s_->describe(l.anchor);
    return extras_[l.anchor.dim][l.extra].name;
}

auto Prestrat::is_valid_label(const Label& l) const -> bool
{
    if (l.anchor.dim < 1 || !s_->is_valid_simplex(l.anchor))
        return false;
    if (l.is_zeta())
        return l.anchor.degenerate();
    const auto& ex = extras(l.anchor.dim);
    return l.extra < static_cast<int>(ex.size()) && ex[l.extra].anchor == l.anchor;
}

auto Prestrat::marked_cells() const -> std::vector<Simplex>
{
    std::vector<Simplex> out;
    for (const auto& [x, ids] : by_anchor_)
        if (!x.degenerate())
            out.push_back(x);
    return out;
}

auto PMap::operator()(const Label& l) const -> Label
{
    if (l.is_zeta())
        return {cells(l.anchor), -1};
    return extra_img[l.anchor.dim][l.extra];
}

auto PMap::check() const -> std::optional<std::string>
{
    if (auto err = cells.check())
        return err;
    for (int m = 0; m <= src->extra_dims(); ++m) {
        const auto& ex = src->extras(m);
        if (m >= static_cast<int>(extra_img.size()) || extra_img[m].size() != ex.size())
            return "label image table has the wrong shape";
        for (std::size_t k = 0; k < ex.size(); ++k) {
            const Label& y = extra_img[m][k];
            if (!dst->is_valid_label(y))
                return "label '" + ex[k].name + "' has an invalid image";
            if (y.anchor != cells(ex[k].anchor))
                return "label '" + ex[k].name + "' is not sent over the image of its anchor";
        }
    }
    return std::nullopt;
}

namespace {

auto sized_extra_table(const Prestrat& x) -> std::vector<std::vector<Label>>
{
    std::vector<std::vector<Label>> t(x.extra_dims() + 1);
    for (int m = 0; m <= x.extra_dims(); ++m)
        t[m].resize(x.extras(m).size());
    return t;
}

} // namespace

auto identity_map(const PrestratPtr& x) -> PMap
{
    PMap f{x, x, identity_map(x->underlying_ptr()), sized_extra_table(*x)};
    for (int m = 0; m <= x->extra_dims(); ++m)
        for (std::size_t k = 0; k < x->extras(m).size(); ++k)
            f.extra_img[m][k] = {x->extras(m)[k].anchor, static_cast<int>(k)};
    return f;
}

auto compose(const PMap& g, const PMap& f) -> PMap
{
    PMap h{f.src, g.dst, compose(g.cells, f.cells), f.extra_img};
    for (auto& row : h.extra_img)
        for (auto& l : row)
            l = g(l);
    return h;
}

auto equal_maps(const PMap& f, const PMap& g) -> bool
{
    return equal_maps(f.cells, g.cells) && f.extra_img == g.extra_img;
}

auto validate(const Prestrat& x) -> ValidationReport
{
    ValidationReport r;
    const SSet& s = x.underlying();
    std::set<std::string> names;
    for (int m = 1; m <= x.extra_dims(); ++m)
        for (const auto& e : x.extras(m)) {
            if (!s.is_valid_simplex(e.anchor) || e.anchor.dim != m)
                r.problems.push_back("label '" + e.name + "' has an invalid anchor");
            if (!names.insert(e.name).second)
                r.problems.push_back("duplicate label name '" + e.name + "'");
        }
    // anchor(zeta_i(x)) = s_i(x), computed from the degeneracy word directly
    for (int m = 1; m <= std::max(x.dim(), 1); ++m)
        for (const auto& y : s.simplices(m - 1)) {
            Mono sigma = y.surjection();
            for (int i = 0; i < m; ++i) {
                Label z = x.zeta(y, i);
                Mono c = compose(sigma, codegeneracy(m - 1, i));
                Simplex expect{m, y.base_dim, y.base, mask_from_surjection(c)};
                if (!x.is_valid_label(z) || z.anchor != expect)
                    r.problems.push_back("anchor(zeta_" + std::to_string(i) + "(" + s.describe(y)
                                         + ")) != s_" + std::to_string(i) + "(" + s.describe(y) + ")");
            }
            // zeta_(j+1)(s_i y) = zeta_i(s_j y) for i <= j
            for (int j = 0; j + 1 < m; ++j)
                for (int i = 0; i <= j; ++i) {
                    auto lhs = x.zeta(s.degeneracy(y, i), j + 1);
                    auto rhs = x.zeta(s.degeneracy(y, j), i);
                    if (lhs != rhs)
                        r.problems.push_back("zeta_" + std::to_string(j + 1) + "(s_" + std::to_string(i) + " "
                                             + s.describe(y) + ") != zeta_" + std::to_string(i) + "(s_"
                                             + std::to_string(j) + " " + s.describe(y) + ")");
                }
        }
    r.pass = r.problems.empty();
    return r;
}

auto is_stratified(const Prestrat& x) -> bool
{
    for (int m = 1; m <= x.extra_dims(); ++m) {
        std::set<Simplex> seen;
        for (const auto& e : x.extras(m))
            if (e.anchor.degenerate() || !seen.insert(e.anchor).second)
                return false;
    }
    return true;
}

auto flat(const SSetPtr& s) -> PrestratPtr { return std::make_shared<Prestrat>(s); }

auto sharp(const SSetPtr& s) -> PrestratPtr
{
    auto x = std::make_shared<Prestrat>(s);
    for (int p = 1; p <= s->dim(); ++p)
        for (int id = 0; id < s->count(p); ++id)
            x->add_label(Simplex::cell(p, id));
    return x;
}

auto with_marking(const SSetPtr& s, const std::vector<Simplex>& marked) -> PrestratPtr
{
    auto x = std::make_shared<Prestrat>(s);
    std::set<Simplex> cells(marked.begin(), marked.end());
    for (const auto& c : cells)
        if (c.dim >= 1 && !c.degenerate())
            x->add_label(c);
    return x;
}

auto strat_map(const SMap& f, const PrestratPtr& src, const PrestratPtr& dst) -> std::optional<PMap>
{
    PMap g{src, dst, f, sized_extra_table(*src)};
    for (int m = 1; m <= src->extra_dims(); ++m)
        for (std::size_t k = 0; k < src->extras(m).size(); ++k) {
            auto over = dst->labels_over(f(src->extras(m)[k].anchor));
            if (over.empty())
                return std::nullopt;
            g.extra_img[m][k] = over.front();
        }
    return g;
}

auto reflector(const PrestratPtr& x) -> Reflection
{
    auto r = std::make_shared<Prestrat>(x->underlying_ptr());
    std::map<Simplex, int> idx;
    for (int m = 1; m <= x->extra_dims(); ++m)
        for (const auto& e : x->extras(m))
            if (!e.anchor.degenerate() && !idx.count(e.anchor))
                idx[e.anchor] = r->add_label(e.anchor, e.name);
    PMap unit{x, r, identity_map(x->underlying_ptr()), sized_extra_table(*x)};
    for (int m = 1; m <= x->extra_dims(); ++m)
        for (std::size_t k = 0; k < x->extras(m).size(); ++k) {
            const auto& a = x->extras(m)[k].anchor;
            unit.extra_img[m][k] = a.degenerate() ? Label{a, -1} : Label{a, idx.at(a)};
        }
    unit.cells.dst = r->underlying_ptr();
    return {r, unit};
}

auto is_label_injective(const PMap& f) -> bool
{
    std::set<Label> seen;
    for (const auto& row : f.extra_img)
        for (const auto& l : row)
            if (l.is_zeta() || !seen.insert(l).second)
                return false;
    return true;
}

auto classify_mono(const PMap& f) -> MonoClass
{
    if (!f.cells.is_injective() || !is_label_injective(f))
        return MonoClass::NotMono;
    if (f.cells.is_bijective())
        return MonoClass::Entire;
    const SSet& b = f.dst->underlying();
    std::vector<std::vector<bool>> in_image(b.dim() + 1);
    for (int p = 0; p <= b.dim(); ++p)
        in_image[p].assign(b.count(p), false);
    for (const auto& row : f.cells.img)
        for (const auto& y : row)
            in_image[y.base_dim][y.base] = true;
    std::set<Label> hit;
    for (const auto& row : f.extra_img)
        for (const auto& l : row)
            hit.insert(l);
    for (int m = 1; m <= f.dst->extra_dims(); ++m)
        for (std::size_t k = 0; k < f.dst->extras(m).size(); ++k) {
            const auto& a = f.dst->extras(m)[k].anchor;
            if (in_image[a.base_dim][a.base] && !hit.count({a, static_cast<int>(k)}))
                return MonoClass::PlainMono;
        }
    return MonoClass::Regular;
}

auto to_string(MonoClass c) -> std::string
{
    switch (c) {
    case MonoClass::NotMono: return "not-mono";
    case MonoClass::Entire: return "entire";
    case MonoClass::Regular: return "regular";
    case MonoClass::PlainMono: return "plain-mono";
    }
    return "?";
}

auto is_iso(const PMap& f) -> bool
{
    if (!f.cells.is_bijective() || !is_label_injective(f))
        return false;
    return f.src->extra_count() == f.dst->extra_count();
}

namespace {

struct LabelPairKey {
    Label a;
    Label b;
    auto operator<=>(const LabelPairKey&) const = default;
};

} // namespace

auto product(const PrestratPtr& x, const PrestratPtr& y) -> Product
{
    auto sp = complicial::product(x->underlying_ptr(), y->underlying_ptr());
    auto obj = std::make_shared<Prestrat>(sp.obj);
    auto index = std::make_shared<std::map<LabelPairKey, int>>();
    std::vector<std::vector<std::pair<Label, Label>>> comps;
    int top = std::max({sp.obj->dim(), x->extra_dims(), y->extra_dims()});
    comps.resize(std::max(top + 1, 0));
    for (int m = 1; m <= top; ++m) {
        if (x->extras(m).empty() && y->extras(m).empty() && m > sp.obj->dim())
            continue;
        auto lx = x->labels(m);
        auto ly = y->labels(m);
        for (const auto& a : lx)
            for (const auto& b : ly) {
                if (a.is_zeta() && b.is_zeta() && (a.anchor.degen & b.anchor.degen))
                    continue;
                if (a.is_zeta() && b.is_zeta() && m > sp.obj->dim())
                    continue;
                int k = obj->add_label(sp.pair(a.anchor, b.anchor),
                                       "(" + x->label_name(a) + "," + y->label_name(b) + ")");
                (*index)[{a, b}] = k;
                comps[m].push_back({a, b});
            }
    }
    Product r;
    r.obj = obj;
    r.pair = sp.pair;
    auto pair = sp.pair;
    r.pair_label = [index, pair](const Label& a, const Label& b) -> Label {
        if (a.is_zeta() && b.is_zeta() && (a.anchor.degen & b.anchor.degen))
            return {pair(a.anchor, b.anchor), -1};
        auto it = index->find({a, b});
        if (it == index->end())
            throw std::out_of_range("product: no such label pair");
        return {pair(a.anchor, b.anchor), it->second};
    };
    r.p1 = PMap{obj, x, sp.p1, sized_extra_table(*obj)};
    r.p2 = PMap{obj, y, sp.p2, sized_extra_table(*obj)};
    r.p1.cells.src = sp.obj;
    r.p2.cells.src = sp.obj;
    for (int m = 1; m < static_cast<int>(comps.size()); ++m)
        for (std::size_t k = 0; k < comps[m].size(); ++k) {
            r.p1.extra_img[m][k] = comps[m][k].first;
            r.p2.extra_img[m][k] = comps[m][k].second;
        }
    return r;
}

auto product_map(const PMap& f, const PMap& g, const Product& src, const Product& dst) -> PMap
{
    PMap h{src.obj, dst.obj, SMap{src.obj->underlying_ptr(), dst.obj->underlying_ptr(), {}},
           sized_extra_table(*src.obj)};
    const SSet& s = src.obj->underlying();
    h.cells.img.resize(s.dim() + 1);
    for (int p = 0; p <= s.dim(); ++p)
        for (int id = 0; id < s.count(p); ++id) {
            auto c = Simplex::cell(p, id);
            h.cells.img[p].push_back(dst.pair(f(src.p1(c)), g(src.p2(c))));
        }
    for (int m = 1; m <= src.obj->extra_dims(); ++m)
        for (std::size_t k = 0; k < src.obj->extras(m).size(); ++k) {
            Label l{src.obj->extras(m)[k].anchor, static_cast<int>(k)};
            h.extra_img[m][k] = dst.pair_label(f(src.p1(l)), g(src.p2(l)));
        }
    return h;
}

auto join(const PrestratPtr& x, const PrestratPtr& y) -> PrestratPtr
{
    if (!is_stratified(*x) || !is_stratified(*y))
        throw std::invalid_argument("join: unsupported for prestratified inputs");
    const SSet& a = x->underlying();
    const SSet& b = y->underlying();
    // cells (pa, ida, pb, idb) with -1 for the empty simplex
    struct Cell {
        int pa, ia, pb, ib;
        auto operator<=>(const Cell&) const = default;
    };
    std::vector<Cell> all;
    std::vector<std::pair<int, int>> as{{-1, 0}}, bs{{-1, 0}};
    for (int p = 0; p <= a.dim(); ++p)
        for (int id = 0; id < a.count(p); ++id)
            as.push_back({p, id});
    for (int p = 0; p <= b.dim(); ++p)
        for (int id = 0; id < b.count(p); ++id)
            bs.push_back({p, id});
    for (auto [pa, ia] : as)
        for (auto [pb, ib] : bs)
            if (pa >= 0 || pb >= 0)
                all.push_back({pa, ia, pb, ib});
    std::stable_sort(all.begin(), all.end(),
                     [](const Cell& u, const Cell& v) { return u.pa + u.pb < v.pa + v.pb; });
    std::map<Cell, int> id;
    std::vector<int> per_dim(a.dim() + b.dim() + 3, 0);
    for (const auto& c : all)
        id[c] = per_dim[c.pa + c.pb + 1]++;

    auto s = std::make_shared<SSet>();
    for (const auto& c : all) {
        int k = c.pa + c.pb + 1;
        std::vector<Simplex> faces;
        for (int i = 0; i <= k && k > 0; ++i) {
            if (i <= c.pa) {
                if (c.pa == 0) {
                    faces.push_back(Simplex::cell(k - 1, id.at({-1, 0, c.pb, c.ib})));
                } else {
                    auto f = a.face(c.pa, c.ia, i);
                    Cell t{f.base_dim, f.base, c.pb, c.ib};
                    faces.push_back({k - 1, f.base_dim + c.pb + 1, id.at(t), f.degen});
                }
            } else {
                int j = i - c.pa - 1;
                if (c.pb == 0) {
                    faces.push_back(Simplex::cell(k - 1, id.at({c.pa, c.ia, -1, 0})));
                } else {
                    auto f = b.face(c.pb, c.ib, j);
                    Cell t{c.pa, c.ia, f.base_dim, f.base};
                    faces.push_back({k - 1, c.pa + f.base_dim + 1, id.at(t), f.degen << (c.pa + 1)});
                }
            }
        }
        std::string name;
        if (c.pa < 0)
            name = "*" + b.name(c.pb, c.ib);
        else if (c.pb < 0)
            name = a.name(c.pa, c.ia) + "*";
        else
            name = a.name(c.pa, c.ia) + "*" + b.name(c.pb, c.ib);
        s->add_cell(k, name, std::move(faces));
    }
    s->finalize();
    auto out = std::make_shared<Prestrat>(s);
    for (const auto& c : all) {
        bool ma = c.pa >= 1 && x->marked(Simplex::cell(c.pa, c.ia));
        bool mb = c.pb >= 1 && y->marked(Simplex::cell(c.pb, c.ib));
        if (ma || mb)
            out->add_label(Simplex::cell(c.pa + c.pb + 1, id.at(c)));
    }
    return out;
}

auto pushout(const PMap& i, const PMap& f) -> Pushout
{
    if (classify_mono(i) == MonoClass::NotMono)
        throw std::invalid_argument("pushout: only pushouts along monomorphisms are supported");
    auto sp = pushout_along_mono(i.cells, f.cells);
    auto obj = std::make_shared<Prestrat>(sp.obj);
    const Prestrat& x = *f.dst;
    const Prestrat& b = *i.dst;
    Pushout r;
    r.leg_x = PMap{f.dst, obj, sp.leg_x, sized_extra_table(x)};
    r.leg_b = PMap{i.dst, obj, sp.leg_b, sized_extra_table(b)};
    for (int m = 1; m <= x.extra_dims(); ++m)
        for (std::size_t k = 0; k < x.extras(m).size(); ++k) {
            int idx = obj->add_label(x.extras(m)[k].anchor, x.extras(m)[k].name);
            r.leg_x.extra_img[m][k] = {x.extras(m)[k].anchor, idx};
        }
    // extras of B hit by i
    std::map<std::pair<int, int>, Label> from_a;
    for (int m = 1; m <= i.src->extra_dims(); ++m)
        for (std::size_t k = 0; k < i.src->extras(m).size(); ++k) {
            const Label& l = i.extra_img[m][k];
            from_a[{m, l.extra}] = f.extra_img[m][k];
        }
    std::set<std::string> names;
    for (int m = 1; m <= x.extra_dims(); ++m)
        for (const auto& e : x.extras(m))
            names.insert(e.name);
    for (int m = 1; m <= b.extra_dims(); ++m)
        for (std::size_t k = 0; k < b.extras(m).size(); ++k) {
            auto it = from_a.find({m, static_cast<int>(k)});
            if (it != from_a.end()) {
                r.leg_b.extra_img[m][k] = it->second;
                continue;
            }
            auto anchor = sp.leg_b(b.extras(m)[k].anchor);
            auto name = b.extras(m)[k].name;
            while (names.count(name))
                name += "'";
            names.insert(name);
            int idx = obj->add_label(anchor, name);
            r.leg_b.extra_img[m][k] = {anchor, idx};
        }
    r.obj = obj;
    r.leg_x.cells.dst = sp.obj;
    r.leg_b.cells.dst = sp.obj;
    if (auto err = r.leg_x.check())
        throw std::logic_error("pushout: incoherent leg: " + *err);
    if (auto err = r.leg_b.check())
        throw std::logic_error("pushout: incoherent leg: " + *err);
    return r;
}

auto pushout_strat(const PMap& i, const PMap& f) -> Pushout
{
    auto p = pushout(i, f);
    auto [robj, unit] = reflector(p.obj);
    return {robj, compose(unit, p.leg_x), compose(unit, p.leg_b)};
}

auto subobject(const PrestratPtr& y, const std::function<bool(int, int)>& keep_cell,
               const std::function<bool(int, int)>& keep_extra) -> SubObject
{
    const SSet& s = y->underlying();
    std::vector<std::vector<int>> renum(s.dim() + 1);
    auto sub = std::make_shared<SSet>();
    SMap inc{nullptr, y->underlying_ptr(), {}};
    for (int p = 0; p <= s.dim(); ++p) {
        renum[p].assign(s.count(p), -1);
        for (int id = 0; id < s.count(p); ++id) {
            if (!keep_cell(p, id))
                continue;
            std::vector<Simplex> faces;
            if (p > 0)
                for (auto f : s.faces(p, id)) {
                    int nb = renum[f.base_dim][f.base];
                    if (nb < 0)
                        throw std::invalid_argument("subobject: cell set not closed under faces");
                    f.base = nb;
                    faces.push_back(f);
                }
            renum[p][id] = sub->add_cell(p, s.name(p, id), std::move(faces));
            if (static_cast<int>(inc.img.size()) <= p)
                inc.img.resize(p + 1);
            inc.img[p].push_back(Simplex::cell(p, id));
        }
    }
    sub->finalize();
    inc.src = sub;
    inc.img.resize(sub->dim() + 1);
    auto obj = std::make_shared<Prestrat>(sub);
    std::vector<std::vector<Label>> ext;
    for (int m = 1; m <= y->extra_dims(); ++m)
        for (std::size_t k = 0; k < y->extras(m).size(); ++k) {
            if (!keep_extra(m, static_cast<int>(k)))
                continue;
            auto a = y->extras(m)[k].anchor;
            int nb = renum[a.base_dim][a.base];
            if (nb < 0)
                throw std::invalid_argument("subobject: label kept over a dropped simplex");
            Simplex na = a;
            na.base = nb;
            obj->add_label(na, y->extras(m)[k].name);
            if (static_cast<int>(ext.size()) <= m)
                ext.resize(m + 1);
            ext[m].push_back({a, static_cast<int>(k)});
        }
    ext.resize(obj->extra_dims() + 1);
    return {obj, PMap{obj, y, inc, ext}};
}

auto simplex(int m) -> PrestratPtr { return flat(standard(m)); }

auto marked_simplex(int m) -> PrestratPtr
{
    if (m < 1)
        throw std::invalid_argument("Δ[m]_t needs m >= 1");
    auto x = std::make_shared<Prestrat>(standard(m));
    x->add_label(Simplex::cell(m, 0));
    return x;
}

auto terminal() -> PrestratPtr { return simplex(0); }
auto empty() -> PrestratPtr { return flat(empty_sset()); }

auto inclusion_by_names(const PrestratPtr& a, const PrestratPtr& b) -> PMap
{
    const SSet& sa = a->underlying();
    SMap f{a->underlying_ptr(), b->underlying_ptr(), {}};
    f.img.resize(sa.dim() + 1);
    for (int p = 0; p <= sa.dim(); ++p)
        for (int id = 0; id < sa.count(p); ++id) {
            auto c = b->underlying().find_cell(sa.name(p, id));
            if (!c)
                throw std::invalid_argument("inclusion: cell '" + sa.name(p, id) + "' missing in target");
            f.img[p].push_back(*c);
        }
    PMap g{a, b, f, sized_extra_table(*a)};
    for (int m = 1; m <= a->extra_dims(); ++m)
        for (std::size_t k = 0; k < a->extras(m).size(); ++k) {
            auto over = b->labels_over(f(a->extras(m)[k].anchor));
            if (over.empty())
                throw std::invalid_argument("inclusion: marked simplex sent to an unmarked one");
            g.extra_img[m][k] = over.front();
            for (const auto& l : over)
                if (!l.is_zeta() && b->label_name(l) == a->extras(m)[k].name)
                    g.extra_img[m][k] = l;
        }
    return g;
}

auto yoneda_map(const PrestratPtr& src, const PrestratPtr& x, const Simplex& z) -> std::optional<PMap>
{
    auto f = yoneda(z.dim, x->underlying_ptr(), z);
    f.src = src->underlying_ptr();
    return strat_map(f, src, x);
}

auto relabel(const PrestratPtr& x, const std::function<std::vector<int>(int)>& perm) -> Relabeling
{
    const SSet& s = x->underlying();
    // to[p][old] = new
    std::vector<std::vector<int>> to(s.dim() + 1);
    auto moved = [&](Simplex z) {
        z.base = to[z.base_dim][z.base];
        return z;
    };
    auto obj_s = std::make_shared<SSet>();
    for (int p = 0; p <= s.dim(); ++p) {
        auto order = perm(s.count(p));
        to[p].assign(s.count(p), -1);
        for (int k = 0; k < s.count(p); ++k)
            to[p][order[k]] = k;
        for (int k = 0; k < s.count(p); ++k) {
            std::vector<Simplex> faces;
            if (p > 0)
                for (const auto& f : s.faces(p, order[k]))
                    faces.push_back(moved(f));
            obj_s->add_cell(p, s.name(p, order[k]), std::move(faces));
        }
    }
    obj_s->finalize();
    auto obj = std::make_shared<Prestrat>(obj_s);
    PMap iso{x, obj, SMap{x->underlying_ptr(), obj_s, {}}, sized_extra_table(*x)};
    iso.cells.img.resize(s.dim() + 1);
    for (int p = 0; p <= s.dim(); ++p)
        for (int id = 0; id < s.count(p); ++id)
            iso.cells.img[p].push_back(moved(Simplex::cell(p, id)));
    for (int m = 1; m <= x->extra_dims(); ++m) {
        auto order = perm(static_cast<int>(x->extras(m).size()));
        for (int k : order) {
            const auto& e = x->extras(m)[k];
            auto a = moved(e.anchor);
            iso.extra_img[m][k] = {a, obj->add_label(a, e.name)};
        }
    }
    return {obj, iso};
}

auto FiberIndex::VecHash::operator()(const std::vector<Simplex>& v) const noexcept -> std::size_t
{
    std::size_t h = v.size();
    SimplexHash sh;
    for (const auto& s : v)
        h = h * 1000003u ^ sh(s);
    return h;
}

auto FiberIndex::vertices() -> const std::vector<Simplex>&
{
    if (vertices_.empty())
        for (int id = 0; id < s_->count(0); ++id)
            vertices_.push_back(Simplex::cell(0, id));
    return vertices_;
}

auto FiberIndex::fiber(int p, const std::vector<Simplex>& faces) -> const std::vector<Simplex>&
{
    auto [slot, fresh] = table_.try_emplace(p);
    if (fresh)
        for (const auto& z : s_->simplices(p)) {
            std::vector<Simplex> key;
            for (int i = 0; i <= p; ++i)
                key.push_back(s_->face_of(z, i));
            slot->second[key].push_back(z);
        }
    auto it = slot->second.find(faces);
    return it == slot->second.end() ? none_ : it->second;
}

namespace {

class MapSearch {
public:
    MapSearch(const MapProblem& pb, const std::function<bool(const PMap&)>& visit, long budget, FiberIndex& index)
        : pb_(pb), visit_(visit), budget_(budget), index_(index)
    {
        const SSet& s = pb.src->underlying();
        for (int p = 0; p <= s.dim(); ++p)
            for (int id = 0; id < s.count(p); ++id)
                order_.push_back({p, id});
        g_ = PMap{pb.src, pb.dst, SMap{pb.src->underlying_ptr(), pb.dst->underlying_ptr(), {}},
                  sized_extra_table(*pb.src)};
        g_.cells.img.resize(s.dim() + 1);
        for (int p = 0; p <= s.dim(); ++p)
            g_.cells.img[p].resize(s.count(p));
        std::map<std::pair<int, int>, std::size_t> pos;
        for (std::size_t k = 0; k < order_.size(); ++k)
            pos[order_[k]] = k;
        anchored_.resize(order_.size());
        for (int m = 1; m <= pb.src->extra_dims(); ++m)
            for (std::size_t k = 0; k < pb.src->extras(m).size(); ++k) {
                const auto& a = pb.src->extras(m)[k].anchor;
                anchored_[pos.at({a.base_dim, a.base})].push_back({m, static_cast<int>(k)});
                extras_.push_back({m, static_cast<int>(k)});
            }
    }

    auto run() -> SearchStats
    {
        rec(0);
        return stats_;
    }

private:
    auto label_candidates(int m, int k) const -> std::vector<Label>
    {
        const auto& e = pb_.src->extras(m)[k];
        Label self{e.anchor, k};
        if (!pb_.fixed_extras.empty() && m < static_cast<int>(pb_.fixed_extras.size())
            && k < static_cast<int>(pb_.fixed_extras[m].size()) && pb_.fixed_extras[m][k]) {
            const Label& l = *pb_.fixed_extras[m][k];
            if (l.anchor != g_.cells(e.anchor))
                return {};
            if (pb_.over && (*pb_.over)(l) != (*pb_.bottom)(self))
                return {};
            return {l};
        }
        std::vector<Label> out;
        for (const auto& l : pb_.dst->labels_over(g_.cells(e.anchor)))
            if (!pb_.over || (*pb_.over)(l) == (*pb_.bottom)(self))
                out.push_back(l);
        return out;
    }

    auto fixed_cell(int p, int id) const -> const std::optional<Simplex>*
    {
        if (p < static_cast<int>(pb_.fixed_cells.size()) && id < static_cast<int>(pb_.fixed_cells[p].size())
            && pb_.fixed_cells[p][id])
            return &pb_.fixed_cells[p][id];
        return nullptr;
    }

    auto rec(std::size_t k) -> bool
    {
        if (k == order_.size())
            return labels(0);
        auto [p, id] = order_[k];
        const SSet& s = pb_.src->underlying();
        const SSet& t = pb_.dst->underlying();
        std::vector<Simplex> fi;
        if (p > 0)
            for (const auto& f : s.faces(p, id))
                fi.push_back(g_.cells(f));
        std::vector<Simplex> single;
        const std::vector<Simplex>* cands;
        if (auto fx = fixed_cell(p, id)) {
            const Simplex& z = **fx;
            bool ok = z.dim == p && t.is_valid_simplex(z);
            for (int i = 0; ok && i <= p && p > 0; ++i)
                ok = t.face_of(z, i) == fi[i];
            if (ok)
                single.push_back(z);
            cands = &single;
        } else {
            cands = p == 0 ? &index_.vertices() : &index_.fiber(p, fi);
        }
        for (const auto& z : *cands) {
            if (++stats_.nodes > budget_) {
                stats_.status = SearchStatus::Budget;
                return false;
            }
            if (pb_.over && (*pb_.over)(z) != (*pb_.bottom)(Simplex::cell(p, id)))
                continue;
            g_.cells.img[p][id] = z;
            bool viable = true;
            for (auto [m, e] : anchored_[k])
                if (label_candidates(m, e).empty()) {
                    viable = false;
                    break;
                }
            if (viable && !rec(k + 1))
                return false;
        }
        return true;
    }

    auto labels(std::size_t j) -> bool
    {
        if (j == extras_.size()) {
            if (!visit_(g_)) {
                stats_.status = SearchStatus::Stopped;
                return false;
            }
            return true;
        }
        auto [m, k] = extras_[j];
        for (const auto& l : label_candidates(m, k)) {
            g_.extra_img[m][k] = l;
            if (!labels(j + 1))
                return false;
        }
        return true;
    }

    const MapProblem& pb_;
    const std::function<bool(const PMap&)>& visit_;
    long budget_;
    FiberIndex& index_;
    std::vector<std::pair<int, int>> order_;
    std::vector<std::vector<std::pair<int, int>>> anchored_;
    std::vector<std::pair<int, int>> extras_;
    PMap g_;
    SearchStats stats_;
};

} // namespace

auto enumerate_maps(const MapProblem& problem, const std::function<bool(const PMap&)>& visit, long budget,
                    FiberIndex* index) -> SearchStats
{
    std::optional<FiberIndex> local;
    if (!index || index->target() != problem.dst->underlying_ptr()) {
        local.emplace(problem.dst->underlying_ptr());
        index = &*local;
    }
    MapSearch search(problem, visit, budget, *index);
    return search.run();
}

auto all_maps(const PrestratPtr& src, const PrestratPtr& dst, long budget) -> std::pair<std::vector<PMap>, bool>
{
    std::vector<PMap> out;
    MapProblem pb{src, dst, {}, {}, nullptr, nullptr};
    auto st = enumerate_maps(pb, [&](const PMap& g) {
        out.push_back(g);
        return true;
    }, budget);
    return {out, st.status == SearchStatus::Exhausted};
}

auto internal_hom_level(const PrestratPtr& y, const PrestratPtr& z, int m, bool marked, long budget) -> HomLevel
{
    auto a = marked ? marked_simplex(m) : simplex(m);
    auto prod = product(a, y);
    auto [maps, complete] = all_maps(prod.obj, z, budget);
    return {std::move(maps), complete};
}

} // namespace complicial
