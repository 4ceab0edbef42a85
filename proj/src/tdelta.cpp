#include <complicial/tdelta.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace complicial {

auto make_object(int m, bool marked) -> TObject
{
    if (m < 0 || (marked && m < 1))
        throw MalformedInput("no such object of tΔ: " + format_object({m, marked}));
    return {m, marked};
}

auto is_valid(const TMorphism& f) -> bool
{
    if (static_cast<int>(f.map.size()) != f.src.m + 1)
        throw MalformedInput("map length does not match the source");
    if (!is_monotone(f.map, f.dst.m))
        throw MalformedInput("map is not monotone into the target");
    if (f.src.m < 0 || f.dst.m < 0 || (f.src.marked && f.src.m < 1) || (f.dst.marked && f.dst.m < 1))
        throw MalformedInput("no such object");
    if (!f.src.marked)
        return true;
    bool inj = is_injective(f.map);
    if (!f.dst.marked)
        return !inj;
    return !inj || (f.src.m == f.dst.m && f.map == identity_mono(f.src.m));
}

auto identity(TObject a) -> TMorphism { return {a, a, identity_mono(a.m)}; }

auto compose(const TMorphism& g, const TMorphism& f) -> TMorphism
{
    if (f.dst != g.src)
        throw std::invalid_argument("compose: " + format_morphism(f) + " then " + format_morphism(g)
                                    + " is not composable");
    TMorphism h{f.src, g.dst, complicial::compose(g.map, f.map)};
    if (!is_valid(h))
        throw std::logic_error("composite left the concrete model: " + format_morphism(h));
    return h;
}

auto hom_set(TObject a, TObject b) -> std::vector<TMorphism>
{
    std::vector<TMorphism> out;
    for_each_mono(a.m, b.m, [&](const Mono& f) {
        TMorphism g{a, b, f};
        if (is_valid(g))
            out.push_back(g);
    });
    return out;
}

auto degree(TObject a) -> int
{
    if (a.m == 0)
        return 0;
    return a.marked ? 2 * a.m : 2 * a.m - 1;
}

auto d(int n, int i) -> TMorphism { return {{n - 1, false}, {n, false}, coface(n, i)}; }
auto s(int n, int i) -> TMorphism { return {{n + 1, false}, {n, false}, codegeneracy(n, i)}; }
auto phi(int m) -> TMorphism { return {{m, false}, {m, true}, identity_mono(m)}; }
auto zeta(int m, int i) -> TMorphism { return {{m, true}, {m - 1, false}, codegeneracy(m - 1, i)}; }

auto in_minus(const TMorphism& f) -> bool
{
    if (f.src == f.dst && f.map == identity_mono(f.src.m))
        return true;
    return !f.dst.marked && is_surjective(f.map, f.dst.m) && is_valid(f);
}

auto in_plus(const TMorphism& f) -> bool
{
    if (f.src == f.dst && f.map == identity_mono(f.src.m))
        return true;
    return !f.src.marked && is_injective(f.map);
}

auto reedy_factorize(const TMorphism& f) -> ReedyFactorization
{
    if (!is_valid(f))
        throw std::invalid_argument("reedy_factorize: invalid morphism " + format_morphism(f));
    if (f.src == f.dst && f.map == identity_mono(f.src.m))
        return {f, identity(f.dst)};
    auto [eps, image] = image_factor(f.map);
    int k = static_cast<int>(image.size()) - 1;
    TObject mid{k, false};
    return {{f.src, mid, eps}, {mid, f.dst, image}};
}

auto sections_of(const TMorphism& f) -> std::vector<TMorphism>
{
    std::vector<TMorphism> out;
    auto id = identity(f.dst);
    for (const auto& g : hom_set(f.dst, f.src))
        if (compose(f, g) == id)
            out.push_back(g);
    return out;
}

auto PresentationReport::entry(TObject a, TObject b) const -> const PresentationEntry*
{
    for (const auto& e : entries)
        if (e.a == a && e.b == b)
            return &e;
    return nullptr;
}

namespace {

enum class GenKind { D, S, Phi, Zeta };

struct Gen {
    GenKind kind;
    int n; // source dimension
    int i;

    auto source() const -> TObject { return {n, kind == GenKind::Zeta}; }
    auto target() const -> TObject
    {
        switch (kind) {
        case GenKind::D: return {n + 1, false};
        case GenKind::S: return {n - 1, false};
        case GenKind::Phi: return {n, true};
        case GenKind::Zeta: return {n - 1, false};
        }
        return {};
    }
    auto concrete() const -> TMorphism
    {
        switch (kind) {
        case GenKind::D: return d(n + 1, i);
        case GenKind::S: return s(n - 1, i);
        case GenKind::Phi: return phi(n);
        case GenKind::Zeta: return zeta(n, i);
        }
        return {};
    }
    auto operator<=>(const Gen&) const = default;
};

using Path = std::vector<Gen>;

struct Presentation {
    int bound;
    std::vector<TObject> objects;
    std::map<TObject, std::vector<Gen>> out;
    std::map<TObject, std::vector<std::pair<Path, Path>>> relations;

    explicit Presentation(int M) : bound(M)
    {
        for (int m = 0; m <= M; ++m) {
            objects.push_back({m, false});
            if (m >= 1)
                objects.push_back({m, true});
        }
        for (auto x : objects) {
            auto& gens = out[x];
            if (x.marked) {
                for (int i = 0; i < x.m; ++i)
                    gens.push_back({GenKind::Zeta, x.m, i});
                continue;
            }
            if (x.m + 1 <= M)
                for (int i = 0; i <= x.m + 1; ++i)
                    gens.push_back({GenKind::D, x.m, i});
            for (int i = 0; i < x.m; ++i)
                gens.push_back({GenKind::S, x.m, i});
            if (x.m >= 1)
                gens.push_back({GenKind::Phi, x.m, 0});
        }
        build_relations();
    }

    auto fits(const Path& p) const -> bool
    {
        for (const auto& g : p) {
            auto t = g.target();
            if (t.m < 0 || t.m > bound || g.source().m > bound)
                return false;
        }
        return true;
    }

    void add(TObject from, Path a, Path b)
    {
        if (fits(a) && fits(b))
            relations[from].emplace_back(std::move(a), std::move(b));
    }

    void build_relations()
    {
        using enum GenKind;
        for (int p = 0; p <= bound; ++p) {
            // d^j d^i = d^i d^(j-1), i < j
            for (int j = 1; j <= p + 2; ++j)
                for (int i = 0; i < j; ++i)
                    add({p, false}, {{D, p, i}, {D, p + 1, j}}, {{D, p, j - 1}, {D, p + 1, i}});
            // s^j s^i = s^i s^(j+1), i <= j
            for (int j = 0; j <= p - 2; ++j)
                for (int i = 0; i <= j; ++i)
                    add({p, false}, {{S, p, i}, {S, p - 1, j}}, {{S, p, j + 1}, {S, p - 1, i}});
            // s^j d^i
            for (int i = 0; i <= p + 1; ++i)
                for (int j = 0; j <= p; ++j) {
                    Path a{{D, p, i}, {S, p + 1, j}};
                    if (i < j)
                        add({p, false}, a, {{S, p, j - 1}, {D, p - 1, i}});
                    else if (i == j || i == j + 1)
                        add({p, false}, a, {});
                    else
                        add({p, false}, a, {{S, p, j}, {D, p - 1, i - 1}});
                }
            if (p >= 1) {
                // zeta^i phi = s^i
                for (int i = 0; i < p; ++i)
                    add({p, false}, {{Phi, p, 0}, {Zeta, p, i}}, {{S, p, i}});
                // s^i zeta^(j+1) = s^j zeta^i, i <= j
                for (int j = 0; j <= p - 2; ++j)
                    for (int i = 0; i <= j; ++i)
                        add({p, true}, {{Zeta, p, j + 1}, {S, p - 1, i}}, {{Zeta, p, i}, {S, p - 1, j}});
            }
        }
    }
};

// Right Cayley graph of the free category modulo relations, rooted at one
// object, truncated at a word length.
class CosetTable {
public:
    CosetTable(const Presentation& pres, TObject root, long budget)
        : pres_(pres), budget_(budget)
    {
        new_node(root, 0, identity(root));
    }

    auto run(int max_len, std::vector<std::string>& discrepancies) -> bool
    {
        for (int depth = 0; depth < max_len; ++depth) {
            std::size_t n = nodes_.size();
            for (std::size_t v = 0; v < n; ++v) {
                if (find(static_cast<int>(v)) != static_cast<int>(v) || nodes_[v].depth != depth)
                    continue;
                const auto& gens = pres_.out.at(nodes_[v].target);
                for (std::size_t g = 0; g < gens.size(); ++g) {
                    if (nodes_[v].trans[g] >= 0)
                        continue;
                    if (static_cast<long>(nodes_.size()) >= budget_)
                        return false;
                    auto value = compose(gens[g].concrete(), nodes_[v].value);
                    int c = new_node(gens[g].target(), depth + 1, value);
                    nodes_[v].trans[g] = c;
                }
            }
            close(discrepancies);
        }
        return true;
    }

    auto classes() const -> std::map<TObject, std::vector<TMorphism>>
    {
        std::map<TObject, std::vector<TMorphism>> out;
        for (std::size_t v = 0; v < nodes_.size(); ++v)
            if (parent_[v] == static_cast<int>(v))
                out[nodes_[v].target].push_back(nodes_[v].value);
        return out;
    }

    auto size() const -> long { return static_cast<long>(nodes_.size()); }

private:
    struct Node {
        TObject target;
        int depth;
        TMorphism value;
        std::vector<int> trans;
    };

    auto new_node(TObject t, int depth, TMorphism value) -> int
    {
        nodes_.push_back({t, depth, std::move(value), std::vector<int>(pres_.out.at(t).size(), -1)});
        parent_.push_back(static_cast<int>(parent_.size()));
        return static_cast<int>(nodes_.size()) - 1;
    }

    auto find(int v) -> int
    {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    auto trace(int v, const Path& p) -> int
    {
        for (const auto& g : p) {
            v = find(v);
            const auto& gens = pres_.out.at(nodes_[v].target);
            auto it = std::find(gens.begin(), gens.end(), g);
            int idx = static_cast<int>(it - gens.begin());
            if (nodes_[v].trans[idx] < 0)
                return -1;
            v = nodes_[v].trans[idx];
        }
        return find(v);
    }

    void merge(int a, int b, std::vector<std::string>& discrepancies)
    {
        std::vector<std::pair<int, int>> queue{{a, b}};
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            x = find(x);
            y = find(y);
            if (x == y)
                continue;
            if (nodes_[y].depth < nodes_[x].depth || (nodes_[y].depth == nodes_[x].depth && y < x))
                std::swap(x, y);
            if (nodes_[x].value != nodes_[y].value)
                discrepancies.push_back("relation identifies " + format_morphism(nodes_[x].value)
                                        + " with " + format_morphism(nodes_[y].value));
            parent_[y] = x;
            for (std::size_t g = 0; g < nodes_[y].trans.size(); ++g) {
                int ty = nodes_[y].trans[g];
                if (ty < 0)
                    continue;
                int tx = nodes_[x].trans[g];
                if (tx < 0)
                    nodes_[x].trans[g] = ty;
                else
                    queue.emplace_back(tx, ty);
            }
        }
    }

    void close(std::vector<std::string>& discrepancies)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = 0; v < nodes_.size(); ++v) {
                if (find(static_cast<int>(v)) != static_cast<int>(v))
                    continue;
                auto rel = pres_.relations.find(nodes_[v].target);
                if (rel == pres_.relations.end())
                    continue;
                for (const auto& [pa, pb] : rel->second) {
                    int a = trace(static_cast<int>(v), pa);
                    int b = trace(static_cast<int>(v), pb);
                    if (a >= 0 && b >= 0 && a != b) {
                        merge(a, b, discrepancies);
                        changed = true;
                    }
                    if (find(static_cast<int>(v)) != static_cast<int>(v))
                        break;
                }
            }
        }
    }

    const Presentation& pres_;
    long budget_;
    std::vector<Node> nodes_;
    std::vector<int> parent_;
};

} // namespace

auto validate_presentation(int max_degree, int max_word_length, long node_budget) -> PresentationReport
{
    if (max_degree < 0)
        throw std::invalid_argument("validate_presentation: max_degree must be non-negative");
    PresentationReport report;
    report.max_degree = max_degree;
    report.max_word_length = max_word_length;
    Presentation pres(max_degree + 1);

    std::vector<TObject> small;
    for (auto x : pres.objects)
        if (x.m <= max_degree)
            small.push_back(x);

    bool ok = true;
    for (auto a : small) {
        CosetTable table(pres, a, node_budget);
        if (!table.run(max_word_length, report.discrepancies))
            report.complete = false;
        report.nodes += table.size();
        auto classes = table.classes();
        for (auto b : small) {
            PresentationEntry e{a, b};
            auto concrete = hom_set(a, b);
            e.concrete = static_cast<int>(concrete.size());
            auto it = classes.find(b);
            std::vector<TMorphism> values;
            if (it != classes.end())
                values = it->second;
            e.classes = static_cast<int>(values.size());
            std::sort(values.begin(), values.end());
            bool distinct = std::adjacent_find(values.begin(), values.end()) == values.end();
            e.bijective = distinct && values == concrete;
            if (!e.bijective) {
                ok = false;
                report.discrepancies.push_back("hom(" + format_object(a) + "," + format_object(b) + "): "
                                               + std::to_string(e.classes) + " word classes vs "
                                               + std::to_string(e.concrete) + " morphisms");
            }
            report.entries.push_back(e);
        }
    }
    report.pass = ok && report.complete && report.discrepancies.empty();
    return report;
}

auto format_object(TObject a) -> std::string
{
    return "[" + std::to_string(a.m) + "]" + (a.marked ? "t" : "");
}

auto format_morphism(const TMorphism& f) -> std::string
{
    std::string s = format_object(f.src) + " -> " + format_object(f.dst) + " : ";
    for (std::size_t i = 0; i < f.map.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(f.map[i]);
    }
    return s;
}

namespace {

auto trim(const std::string& s) -> std::string
{
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

} // namespace

auto parse_object(const std::string& text) -> TObject
{
    auto t = trim(text);
    if (t.size() < 3 || t.front() != '[')
        throw MalformedInput("bad object syntax: '" + text + "'");
    auto close = t.find(']');
    if (close == std::string::npos)
        throw MalformedInput("bad object syntax: '" + text + "'");
    auto digits = t.substr(1, close - 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw MalformedInput("bad object dimension: '" + text + "'");
    auto rest = t.substr(close + 1);
    if (rest != "" && rest != "t")
        throw MalformedInput("bad object suffix: '" + text + "'");
    return make_object(std::stoi(digits), rest == "t");
}

auto parse_morphism(const std::string& text) -> TMorphism
{
    auto arrow = text.find("->");
    auto colon = text.find(':');
    if (arrow == std::string::npos || colon == std::string::npos || colon < arrow)
        throw MalformedInput("morphism syntax is '[m] -> [n]t : i0,i1,...'");
    TMorphism f;
    f.src = parse_object(text.substr(0, arrow));
    f.dst = parse_object(text.substr(arrow + 2, colon - arrow - 2));
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
            throw MalformedInput("bad map entry: '" + item + "'");
        f.map.push_back(std::stoi(item));
    }
    is_valid(f);
    return f;
}

} // namespace complicial
