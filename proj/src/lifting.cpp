#include <complicial/lifting.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace complicial {

auto to_string(Verdict v) -> std::string
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

auto LiftResult::verdict() const -> Verdict
{
    if (lift)
        return Verdict::Pass;
    return complete ? Verdict::Fail : Verdict::Indeterminate;
}

namespace {

auto fixed_along(const PMap& i, const PMap& left, MapProblem& pb)
{
    const SSet& a = i.src->underlying();
    const SSet& b = i.dst->underlying();
    pb.fixed_cells.resize(b.dim() + 1);
    for (int p = 0; p <= b.dim(); ++p)
        pb.fixed_cells[p].resize(b.count(p));
    for (int p = 0; p <= a.dim(); ++p)
        for (int id = 0; id < a.count(p); ++id) {
            const Simplex& y = i.cells.img[p][id];
            if (y.degenerate())
                throw std::invalid_argument("lifting: the left map must be a monomorphism");
            pb.fixed_cells[p][y.base] = left.cells.img[p][id];
        }
    pb.fixed_extras.resize(i.dst->extra_dims() + 1);
    for (int m = 1; m <= i.dst->extra_dims(); ++m)
        pb.fixed_extras[m].resize(i.dst->extras(m).size());
    for (int m = 1; m <= i.src->extra_dims(); ++m)
        for (std::size_t k = 0; k < i.src->extras(m).size(); ++k) {
            const Label& y = i.extra_img[m][k];
            if (y.is_zeta())
                throw std::invalid_argument("lifting: the left map must be a monomorphism");
            pb.fixed_extras[m][y.extra] = left.extra_img[m][k];
        }
}

} // namespace

auto solve_lift(const LiftingProblem& p, long budget, FiberIndex* index) -> LiftResult
{
    MapProblem pb{p.i.dst, p.left.dst, {}, {}, nullptr, nullptr};
    fixed_along(p.i, p.left, pb);
    if (p.f) {
        pb.over = &*p.f;
        pb.bottom = &*p.bottom;
    }
    LiftResult r;
    auto st = enumerate_maps(pb, [&](const PMap& g) {
        if (g.check() || !equal_maps(compose(g, p.i), p.left))
            return true;
        if (p.f && !equal_maps(compose(*p.f, g), *p.bottom))
            return true;
        r.lift = g;
        return false;
    }, budget, index);
    r.nodes = st.nodes;
    r.complete = st.status != SearchStatus::Budget;
    return r;
}

auto check_rlp(const PrestratPtr& x, const PMap& gen, const std::string& name, long budget, FiberIndex* index)
    -> GeneratorVerdict
{
    GeneratorVerdict v;
    v.generator = name;
    std::optional<FiberIndex> local;
    if (!index) {
        local.emplace(x->underlying_ptr());
        index = &*local;
    }
    bool cut = false;
    MapProblem pb{gen.src, x, {}, {}, nullptr, nullptr};
    auto st = enumerate_maps(pb, [&](const PMap& a) {
        ++v.attaching_maps;
        auto r = solve_lift({gen, a, std::nullopt, std::nullopt}, budget, index);
        if (r.verdict() == Verdict::Fail) {
            if (v.witnesses.size() < 16)
                v.witnesses.push_back(a);
        } else if (r.verdict() == Verdict::Indeterminate) {
            cut = true;
        }
        return true;
    }, budget, index);
    if (st.status == SearchStatus::Budget)
        cut = true;
    if (!v.witnesses.empty())
        v.verdict = Verdict::Fail;
    else if (cut)
        v.verdict = Verdict::Indeterminate;
    else
        v.verdict = Verdict::Pass;
    return v;
}

auto is_n_complicial(const PrestratPtr& x, int n, int dim_bound, long budget, FamilyMask families) -> ComplicialReport
{
    ComplicialReport rep;
    rep.n = n;
    rep.dim_bound = dim_bound;
    rep.budget = budget;
    FiberIndex index(x->underlying_ptr());
    for (const auto& g : anodyne_generators(n, dim_bound, families)) {
        rep.generators.push_back(check_rlp(x, g.map, g.name(), budget, &index));
        auto v = rep.generators.back().verdict;
        if (v == Verdict::Fail)
            rep.verdict = Verdict::Fail;
        else if (v == Verdict::Indeterminate && rep.verdict == Verdict::Pass)
            rep.verdict = Verdict::Indeterminate;
    }
    return rep;
}

namespace {

auto image_cells(const PMap& f) -> std::set<std::pair<int, int>>
{
    std::set<std::pair<int, int>> out;
    for (const auto& row : f.cells.img)
        for (const auto& y : row)
            out.insert({y.base_dim, y.base});
    return out;
}

auto image_extras(const PMap& f) -> std::set<Label>
{
    std::set<Label> out;
    for (const auto& row : f.extra_img)
        for (const auto& l : row)
            out.insert(l);
    return out;
}

} // namespace

auto pushout_product(const PMap& i, const PMap& j) -> PushoutProduct
{
    if (classify_mono(i) == MonoClass::NotMono || classify_mono(j) == MonoClass::NotMono)
        throw std::invalid_argument("pushout-product: both maps must be monomorphisms");
    auto target = product(i.dst, j.dst);
    auto ci = image_cells(i);
    auto cj = image_cells(j);
    auto li = image_extras(i);
    auto lj = image_extras(j);
    auto in_i = [&](const Label& l) { return l.is_zeta() ? ci.count({l.anchor.base_dim, l.anchor.base}) > 0 : li.count(l) > 0; };
    auto in_j = [&](const Label& l) { return l.is_zeta() ? cj.count({l.anchor.base_dim, l.anchor.base}) > 0 : lj.count(l) > 0; };
    auto sub = subobject(
        target.obj,
        [&](int p, int id) {
            auto a = target.p1.cells.img[p][id];
            auto b = target.p2.cells.img[p][id];
            return ci.count({a.base_dim, a.base}) || cj.count({b.base_dim, b.base});
        },
        [&](int m, int k) { return in_i(target.p1.extra_img[m][k]) || in_j(target.p2.extra_img[m][k]); });
    auto kind = classify_mono(sub.inclusion);
    return {target, sub.inclusion, kind};
}

auto marked_difference(const PMap& e) -> std::vector<Simplex>
{
    if (!e.cells.is_bijective())
        throw std::invalid_argument("marked difference: the map is not entire");
    std::set<Simplex> marked_src;
    const SSet& s = e.src->underlying();
    for (int p = 1; p <= s.dim(); ++p)
        for (int id = 0; id < s.count(p); ++id)
            if (e.src->marked(Simplex::cell(p, id)))
                marked_src.insert(e.cells.img[p][id]);
    std::vector<Simplex> out;
    for (const auto& c : e.dst->marked_cells())
        if (!marked_src.count(c))
            out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

auto parse_lemma(const std::string& s) -> Lemma
{
    if (s == "B1")
        return Lemma::B1;
    if (s == "B2")
        return Lemma::B2;
    if (s == "B3")
        return Lemma::B3;
    if (s == "B4")
        return Lemma::B4;
    throw std::invalid_argument("unknown lemma '" + s + "' (expected B1..B4)");
}

auto to_string(Lemma l) -> std::string
{
    switch (l) {
    case Lemma::B1: return "B1";
    case Lemma::B2: return "B2";
    case Lemma::B3: return "B3";
    case Lemma::B4: return "B4";
    }
    return "?";
}

auto same_stratification(const Prestrat& a, const Prestrat& b) -> bool
{
    const SSet& x = a.underlying();
    const SSet& y = b.underlying();
    if (x.dim() != y.dim())
        return false;
    for (int p = 0; p <= x.dim(); ++p) {
        if (x.count(p) != y.count(p))
            return false;
        for (int id = 0; id < x.count(p); ++id)
            if (x.name(p, id) != y.name(p, id) || (p > 0 && x.faces(p, id) != y.faces(p, id)))
                return false;
    }
    auto ma = a.marked_cells();
    auto mb = b.marked_cells();
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    return ma == mb;
}

auto replay(const PrestratPtr& start, const std::vector<std::vector<Attachment>>& batches) -> PrestratPtr
{
    PrestratPtr cur = start;
    for (const auto& batch : batches) {
        std::vector<PMap> attach;
        for (const auto& a : batch) {
            if (a.attaching.dst != cur)
                throw std::invalid_argument("replay: attaching map does not land in the batch start");
            attach.push_back(a.attaching);
        }
        for (std::size_t k = 0; k < batch.size(); ++k) {
            auto po = pushout_strat(batch[k].generator, attach[k]);
            for (std::size_t r = k + 1; r < batch.size(); ++r)
                attach[r] = compose(po.leg_x, attach[r]);
            cur = po.obj;
        }
    }
    return cur;
}

namespace {

auto join_mono(const Mono& a1, const Mono& a2, int l) -> Mono
{
    Mono out = a1;
    for (int v : a2)
        out.push_back(l + 1 + v);
    return out;
}

auto surjections_onto(int k, int m) -> std::vector<Mono>
{
    std::vector<Mono> out;
    for (auto& f : all_monos(k, m))
        if (is_surjective(f, m))
            out.push_back(f);
    return out;
}

auto injections_into(int k, int l) -> std::vector<Mono>
{
    if (k < 0)
        return {Mono{}};
    std::vector<Mono> out;
    for (auto& f : all_monos(k, l))
        if (is_injective(f))
            out.push_back(f);
    return out;
}

// the four edges of Δ[3] left unmarked in Δ[3]_eq
auto eq_unmarked_edges() -> std::vector<Mono> { return {{0, 1}, {1, 2}, {2, 3}, {0, 3}}; }

} // namespace

auto verify_pp_lemma(Lemma lemma, int n, int l, int m) -> ScheduleReport
{
    ScheduleReport rep;
    rep.lemma = lemma;
    rep.n = n;
    rep.l = l;
    rep.m = m;
    bool saturation = lemma == Lemma::B1 || lemma == Lemma::B2;
    if (saturation && l < -1)
        throw std::invalid_argument("saturation lemmas need l >= -1");
    if (!saturation && l <= n)
        throw std::invalid_argument("triviality lemmas need l > n");
    if (m < (lemma == Lemma::B3 ? 0 : 1))
        throw std::invalid_argument("m out of range");
    PMap i = saturation ? saturation_pair(l) : triviality_generator(l).map;
    bool boundary_case = lemma == Lemma::B1 || lemma == Lemma::B3;
    PMap j = boundary_case ? boundary_cofibration(m).map : marking_cofibration(m).map;
    int top = saturation ? l + 4 : l;

    rep.pp = pushout_product(i, j);
    if (rep.pp.kind != MonoClass::Entire)
        rep.problems.push_back("pushout-product is not an entire inclusion");
    rep.difference = marked_difference(rep.pp.map);
    for (const auto& d : rep.difference)
        rep.difference_dims.push_back(d.dim);

    const auto& target = rep.pp.target;
    const SSet& ju = i.dst->underlying();
    const SSet& lu = j.dst->underlying();
    auto simplex_at = [&](const Mono& a, const Mono& b) {
        return target.pair(simplex_of_mono(ju, top, a), simplex_of_mono(lu, m, b));
    };

    std::vector<std::vector<ScheduleStep>> batches;
    switch (lemma) {
    case Lemma::B1: {
        std::vector<ScheduleStep> first, second;
        for (int k = m + 1; k < l + 3; ++k)
            for (const auto& a1 : injections_into(k - 2, l))
                for (const auto& beta : surjections_onto(k, m)) {
                    if (beta[k - 1] == m) {
                        auto g = saturation_generator(k - 2);
                        Mono second_part = compose(beta, compose(codegeneracy(k, k), codegeneracy(k + 1, k + 1)));
                        first.push_back({0, g, join_mono(a1, {0, 1, 2, 3}, l), second_part, false});
                    } else if (beta[k - 1] == m - 1) {
                        for (const auto& a2 : eq_unmarked_edges()) {
                            auto g = thinness_generator(k, k + 1);
                            second.push_back({1, g, compose(join_mono(a1, a2, l), codegeneracy(k, k - 1)),
                                              compose(beta, codegeneracy(k, k)), false});
                        }
                    }
                }
        batches = {first, second};
        break;
    }
    case Lemma::B2: {
        std::vector<ScheduleStep> only;
        for (const auto& a1 : injections_into(m - 2, l))
            for (const auto& a2 : eq_unmarked_edges())
                only.push_back({0, thinness_generator(m, m + 1), compose(join_mono(a1, a2, l), codegeneracy(m, m - 1)),
                                codegeneracy(m, m), false});
        batches = {only};
        break;
    }
    case Lemma::B3: {
        std::vector<ScheduleStep> only;
        for (const auto& s2 : surjections_onto(l, m))
            if (l > m)
                only.push_back({0, triviality_generator(l), identity_mono(l), s2, false});
        batches = {only};
        break;
    }
    case Lemma::B4: {
        std::vector<ScheduleStep> only;
        if (l == m)
            only.push_back({0, triviality_generator(l), identity_mono(l), identity_mono(m), false});
        batches = {only};
        break;
    }
    }

    PrestratPtr cur = rep.pp.map.src;
    if (cur->underlying().total_cells() != target.obj->underlying().total_cells())
        rep.problems.push_back("source and target of the pushout-product have different cells");
    for (auto& batch : batches) {
        std::vector<Attachment> attach;
        for (auto& step : batch) {
            auto z = simplex_at(step.first, step.second);
            auto a = yoneda_map(step.generator.map.src, cur, z);
            step.well_defined = a.has_value() && !a->check();
            if (!step.well_defined) {
                rep.steps_ok = false;
                rep.problems.push_back(step.generator.name() + " attached at (" + format_mono(step.first) + ", "
                                       + format_mono(step.second) + ") does not preserve markings");
                continue;
            }
            attach.push_back({step.generator.map, *a});
        }
        if (!rep.steps_ok)
            break;
        cur = replay(cur, {attach});
        for (auto& step : batch)
            rep.steps.push_back(step);
    }
    rep.final_obj = cur;
    rep.final_equal = rep.steps_ok && same_stratification(*cur, *target.obj);
    if (rep.steps_ok && !rep.final_equal)
        rep.problems.push_back("replayed object differs from the pushout-product target");
    return rep;
}

auto build_retract(const PMap& f) -> Retract
{
    if (!is_stratified(*f.src))
        throw std::invalid_argument("retract: the source must be stratified");
    if (classify_mono(f) == MonoClass::NotMono)
        throw std::invalid_argument("retract: the map must be a monomorphism");
    auto [rb, unit] = reflector(f.dst);
    auto rf = compose(unit, f);
    const Prestrat& b = *f.dst;
    PMap j{rb, f.dst, identity_map(rb->underlying_ptr()), {}};
    j.cells.dst = b.underlying_ptr();
    j.extra_img.resize(rb->extra_dims() + 1);
    for (int m = 1; m <= rb->extra_dims(); ++m)
        j.extra_img[m].assign(rb->extras(m).size(), Label{});
    std::vector<std::vector<bool>> done(j.extra_img.size());
    for (std::size_t m = 0; m < done.size(); ++m)
        done[m].assign(j.extra_img[m].size(), false);
    // (1) labels in the image of Rf go to the image under f
    for (int m = 1; m <= f.src->extra_dims(); ++m)
        for (std::size_t k = 0; k < f.src->extras(m).size(); ++k) {
            Label r = rf.extra_img[m][k];
            if (r.is_zeta())
                continue;
            j.extra_img[m][r.extra] = f.extra_img[m][k];
            done[m][r.extra] = true;
        }
    // (2) is automatic: degeneracy labels are sent to degeneracy labels.
    // (3) any remaining label goes to the first preimage.
    for (int m = 1; m <= rb->extra_dims(); ++m)
        for (std::size_t k = 0; k < rb->extras(m).size(); ++k) {
            if (done[m][k])
                continue;
            const auto& anchor = rb->extras(m)[k].anchor;
            for (const auto& l : b.labels_over(anchor))
                if (!l.is_zeta()) {
                    j.extra_img[m][k] = l;
                    break;
                }
        }
    if (auto err = j.check())
        throw std::logic_error("retract: constructed map is not well-defined: " + *err);
    return {rb, rf, j, unit};
}

auto cylinder(const PrestratPtr& x) -> Product { return product(x, marked_simplex(1)); }

auto cylinder_end(const Product& cyl, const PrestratPtr& x, int eps) -> PMap
{
    auto constant = [eps](int p) { return Simplex{p, 0, eps, p ? (1u << p) - 1 : 0u}; };
    const SSet& s = x->underlying();
    PMap e{x, cyl.obj, SMap{x->underlying_ptr(), cyl.obj->underlying_ptr(), {}}, {}};
    e.cells.img.resize(s.dim() + 1);
    for (int p = 0; p <= s.dim(); ++p)
        for (int id = 0; id < s.count(p); ++id)
            e.cells.img[p].push_back(cyl.pair(Simplex::cell(p, id), constant(p)));
    e.extra_img.resize(x->extra_dims() + 1);
    for (int m = 1; m <= x->extra_dims(); ++m)
        for (std::size_t k = 0; k < x->extras(m).size(); ++k)
            e.extra_img[m].push_back(
                cyl.pair_label({x->extras(m)[k].anchor, static_cast<int>(k)}, {constant(m), -1}));
    return e;
}

auto elementary_homotopy(const PMap& u0, const PMap& u1, long budget) -> HomotopyResult
{
    if (u0.src != u1.src || u0.dst != u1.dst)
        throw std::invalid_argument("homotopy: maps are not parallel");
    auto cyl = cylinder(u0.src);
    PMap e0 = cylinder_end(cyl, u0.src, 0);
    PMap e1 = cylinder_end(cyl, u0.src, 1);
    MapProblem pb{cyl.obj, u0.dst, {}, {}, nullptr, nullptr};
    fixed_along(e0, u0, pb);
    auto pb1 = pb;
    fixed_along(e1, u1, pb1);
    for (std::size_t p = 0; p < pb.fixed_cells.size(); ++p)
        for (std::size_t id = 0; id < pb.fixed_cells[p].size(); ++id)
            if (pb1.fixed_cells[p][id])
                pb.fixed_cells[p][id] = pb1.fixed_cells[p][id];
    for (std::size_t m = 0; m < pb.fixed_extras.size(); ++m)
        for (std::size_t k = 0; k < pb.fixed_extras[m].size(); ++k)
            if (pb1.fixed_extras[m][k])
                pb.fixed_extras[m][k] = pb1.fixed_extras[m][k];
    HomotopyResult r;
    auto st = enumerate_maps(pb, [&](const PMap& h) {
        if (h.check() || !equal_maps(compose(h, e0), u0) || !equal_maps(compose(h, e1), u1))
            return true;
        r.h = h;
        return false;
    }, budget);
    r.complete = st.status != SearchStatus::Budget;
    return r;
}

auto homotopic(const PMap& u0, const PMap& u1, int zigzag_budget, long budget) -> HomotopicResult
{
    if (equal_maps(u0, u1))
        return {Verdict::Pass, 0};
    bool cut = false;
    auto linked = [&](const PMap& a, const PMap& b) {
        auto h = elementary_homotopy(a, b, budget);
        if (h.h)
            return true;
        auto g = elementary_homotopy(b, a, budget);
        cut = cut || !h.complete || !g.complete;
        return g.h.has_value();
    };
    if (zigzag_budget >= 1 && linked(u0, u1))
        return {Verdict::Pass, 1};
    if (zigzag_budget >= 2) {
        auto [maps, complete] = all_maps(u0.src, u0.dst, budget);
        cut = cut || !complete;
        std::vector<int> dist(maps.size(), -1);
        std::vector<std::size_t> frontier;
        for (std::size_t k = 0; k < maps.size(); ++k)
            if (equal_maps(maps[k], u0)) {
                dist[k] = 0;
                frontier.push_back(k);
            }
        for (int d = 1; d <= zigzag_budget && !frontier.empty(); ++d) {
            std::vector<std::size_t> next;
            for (auto a : frontier)
                for (std::size_t b = 0; b < maps.size(); ++b)
                    if (dist[b] < 0 && linked(maps[a], maps[b])) {
                        dist[b] = d;
                        if (equal_maps(maps[b], u1))
                            return {Verdict::Pass, d};
                        next.push_back(b);
                    }
            frontier = std::move(next);
        }
    }
    return {cut ? Verdict::Indeterminate : Verdict::Fail, 0};
}

auto unit_acyclic_fibration_check(const PrestratPtr& x, int dim_bound, long budget) -> UnitReport
{
    UnitReport rep;
    rep.dim_bound = dim_bound;
    auto [rx, unit] = reflector(x);
    FiberIndex index(x->underlying_ptr());
    for (const auto& c : generating_cofibrations(dim_bound)) {
        auto [bottoms, complete] = all_maps(c.map.dst, rx, budget);
        if (!complete)
            rep.verdict = Verdict::Indeterminate;
        for (const auto& b : bottoms) {
            PMap bc = compose(b, c.map);
            MapProblem pb{c.map.src, x, {}, {}, &unit, &bc};
            auto st = enumerate_maps(pb, [&](const PMap& a) {
                ++rep.squares;
                auto r = solve_lift({c.map, a, unit, b}, budget, &index);
                if (r.verdict() == Verdict::Fail) {
                    rep.verdict = Verdict::Fail;
                    rep.failures.push_back(c.name());
                } else if (r.verdict() == Verdict::Indeterminate && rep.verdict == Verdict::Pass) {
                    rep.verdict = Verdict::Indeterminate;
                }
                return true;
            }, budget, &index);
            if (st.status == SearchStatus::Budget && rep.verdict == Verdict::Pass)
                rep.verdict = Verdict::Indeterminate;
        }
    }
    return rep;
}

} // namespace complicial
