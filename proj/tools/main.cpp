// Command-line front end. Exit codes: 0 pass, 1 fail, 2 indeterminate, 3 input error.

#include <complicial/io.hpp>
#include <complicial/lifting.hpp>
#include <complicial/nerve.hpp>
#include <complicial/shapes.hpp>
#include <complicial/tdelta.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>

using namespace complicial;

namespace {

enum Exit { Ok = 0, Failed = 1, Unknown = 2, BadInput = 3 };

struct Options {
    std::string format = "json";
    long budget = 1'000'000;
    std::optional<unsigned> seed;
};

auto exit_for(Verdict v) -> int
{
    switch (v) {
    case Verdict::Pass: return Ok;
    case Verdict::Fail: return Failed;
    case Verdict::Indeterminate: return Unknown;
    }
    return Unknown;
}

auto split(const std::string& s, char sep) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep))
        out.push_back(item);
    return out;
}

auto to_int(const std::string& s) -> int
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw InputError("not an integer: '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw InputError("not an integer: '" + s + "'");
    }
}

auto ints(const std::vector<std::string>& args, std::size_t n, const std::string& usage) -> std::vector<int>
{
    if (args.size() != n)
        throw InputError("usage: " + usage);
    std::vector<int> out;
    for (const auto& a : args)
        out.push_back(to_int(a));
    return out;
}

auto variant_of(const std::string& v) -> Variant
{
    if (v == "plain")
        return Variant::Plain;
    if (v == "prime")
        return Variant::Prime;
    if (v == "double-prime")
        return Variant::DoublePrime;
    throw InputError("unknown variant '" + v + "' (plain, prime, double-prime)");
}

/// Generator given as family:params, or a map file.
auto generator_spec(const std::string& spec) -> std::pair<std::string, PMap>
{
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        return {spec, pmap_from_json(read_json_file(spec))};
    auto family = spec.substr(0, colon);
    auto params = split(spec.substr(colon + 1), ',');
    auto p = ints(params, params.size(), spec);
    auto need = [&](std::size_t n) {
        if (p.size() != n)
            throw InputError("'" + family + "' takes " + std::to_string(n) + " parameter(s)");
    };
    Generator g;
    if (family == "horn") {
        need(2);
        g = horn_generator(p[0], p[1]);
    } else if (family == "thinness") {
        need(2);
        g = thinness_generator(p[0], p[1]);
    } else if (family == "triviality") {
        need(1);
        g = triviality_generator(p[0]);
    } else if (family == "saturation") {
        need(1);
        g = saturation_generator(p[0]);
    } else if (family == "saturation-alt") {
        need(2);
        g = saturation_alt_generator(p[0], p[1]);
    } else if (family == "boundary") {
        need(1);
        g = boundary_cofibration(p[0]);
    } else if (family == "marking") {
        need(1);
        g = marking_cofibration(p[0]);
    } else {
        throw InputError("unknown generator family '" + family + "'");
    }
    return {g.name(), g.map};
}

auto builtin_category(const std::string& name) -> std::optional<FiniteCategory>
{
    if (name == "iso")
        return free_iso();
    if (name == "terminal")
        return terminal_category();
    if (name == "arrow")
        return walking_arrow();
    return std::nullopt;
}

auto shuffled(const PrestratPtr& x, unsigned seed) -> PrestratPtr
{
    std::mt19937 rng(seed);
    return relabel(x, [&](int n) {
               std::vector<int> v(n);
               for (int i = 0; i < n; ++i)
                   v[i] = i;
               std::shuffle(v.begin(), v.end(), rng);
               return v;
           })
        .obj;
}

void emit(const Options& o, const Json& j, const std::string& text)
{
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

auto summary(const Prestrat& x) -> std::string
{
    std::ostringstream out;
    const SSet& s = x.underlying();
    out << "dim " << s.dim() << "\n";
    for (int p = 0; p <= s.dim(); ++p) {
        out << "  " << p << ":";
        for (int id = 0; id < s.count(p); ++id) {
            auto c = Simplex::cell(p, id);
            out << " " << s.name(p, id);
            auto over = x.labels_over(c);
            if (over.size() == 1)
                out << "[t]";
            else if (over.size() > 1)
                out << "[t" << over.size() << "]";
        }
        out << "\n";
    }
    for (int m = 1; m <= x.extra_dims(); ++m)
        for (const auto& e : x.extras(m))
            if (e.anchor.degenerate())
                out << "  extra label " << e.name << " over " << s.describe(e.anchor) << "\n";
    out << "marked non-degenerate: " << marked_count(x) << (is_stratified(x) ? ", stratified" : ", prestratified")
        << "\n";
    return out.str();
}

void emit_object(const Options& o, const Prestrat& x) { emit(o, to_json(x), summary(x)); }

void emit_map(const Options& o, const PMap& f)
{
    emit(o, to_json(f), "source:\n" + summary(*f.src) + "target:\n" + summary(*f.dst) + "class: "
                            + to_string(classify_mono(f)) + "\n");
}

auto report(const std::string& command, const Options& o) -> Json
{
    Json j;
    j["version"] = format_version;
    j["command"] = command;
    j["budget"] = o.budget;
    return j;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite (pre)stratified simplicial sets: shapes, lifting, schedules"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--budget", o.budget, "search node budget");
    app.add_option("--seed", o.seed, "relabel inputs randomly before checking");

    std::function<int()> run;

    auto* shape = app.add_subcommand("shape", "emit a named shape");
    std::string shape_kind, variant = "plain";
    std::vector<std::string> shape_args;
    shape->add_option("kind", shape_kind,
                      "simplex m | marked m | boundary m | horn k m | csimplex k m | eq | sharp3 | thinness k m | "
                      "triviality l | saturation l")
        ->required();
    shape->add_option("params", shape_args);
    shape->add_option("--variant", variant, "plain, prime or double-prime");
    shape->callback([&] {
        run = [&]() -> int {
            const auto& a = shape_args;
            if (shape_kind == "simplex")
                emit_object(o, *simplex(ints(a, 1, "shape simplex m")[0]));
            else if (shape_kind == "marked")
                emit_object(o, *marked_simplex(ints(a, 1, "shape marked m")[0]));
            else if (shape_kind == "boundary")
                emit_object(o, *flat(boundary(ints(a, 1, "shape boundary m")[0])));
            else if (shape_kind == "csimplex") {
                auto p = ints(a, 2, "shape csimplex k m");
                emit_object(o, *complicial_simplex(p[0], p[1], variant_of(variant)));
            } else if (shape_kind == "horn") {
                auto p = ints(a, 2, "shape horn k m");
                emit_map(o, complicial_horn(p[0], p[1]));
            } else if (shape_kind == "eq")
                emit_object(o, *delta3_eq());
            else if (shape_kind == "sharp3")
                emit_object(o, *delta3_sharp());
            else if (shape_kind == "thinness") {
                auto p = ints(a, 2, "shape thinness k m");
                emit_map(o, thinness_generator(p[0], p[1]).map);
            } else if (shape_kind == "triviality")
                emit_map(o, triviality_generator(ints(a, 1, "shape triviality l")[0]).map);
            else if (shape_kind == "saturation")
                emit_map(o, saturation_pair(ints(a, 1, "shape saturation l")[0]));
            else
                throw InputError("unknown shape '" + shape_kind + "'");
            return Ok;
        };
    });

    auto* gens = app.add_subcommand("gens", "list elementary anodyne extensions");
    int n = 0, dim = 3;
    bool cofibrations = false;
    gens->add_option("--n", n);
    gens->add_option("--dim", dim);
    bool with_alt = false;
    gens->add_flag("--cofibrations", cofibrations, "list generating cofibrations instead");
    gens->add_flag("--saturation-alt", with_alt, "include the two-sided saturation family");
    gens->callback([&] {
        run = [&]() -> int {
            FamilyMask mask;
            mask.saturation_alt = with_alt;
            auto list = cofibrations ? generating_cofibrations(dim) : anodyne_generators(n, dim, mask);
            Json j = report("gens", o);
            j["n"] = n;
            j["dim_bound"] = dim;
            Json arr = Json::array();
            std::string text;
            for (const auto& g : list) {
                arr.push_back(Json{{"family", to_string(g.family)},
                                   {"name", g.name()},
                                   {"class", to_string(classify_mono(g.map))},
                                   {"map", to_json(g.map)}});
                text += g.name() + " " + to_string(classify_mono(g.map)) + "\n";
            }
            j["generators"] = arr;
            emit(o, j, text);
            return Ok;
        };
    });

    std::string file_a, file_b;
    auto* prod = app.add_subcommand("product", "cartesian product of two objects");
    prod->add_option("a", file_a)->required();
    prod->add_option("b", file_b)->required();
    prod->callback([&] {
        run = [&]() -> int {
            auto p = product(load_prestrat(read_json_file(file_a)), load_prestrat(read_json_file(file_b)));
            emit_object(o, *p.obj);
            return Ok;
        };
    });

    auto* jn = app.add_subcommand("join", "join of two stratified objects");
    jn->add_option("a", file_a)->required();
    jn->add_option("b", file_b)->required();
    jn->callback([&] {
        run = [&]() -> int {
            emit_object(o, *join(load_prestrat(read_json_file(file_a)), load_prestrat(read_json_file(file_b))));
            return Ok;
        };
    });

    bool strat_colimit = false;
    auto* po = app.add_subcommand("pushout", "pushout of a mono i: A -> B along f: A -> X");
    po->add_option("i", file_a, "map file for i")->required();
    po->add_option("f", file_b, "map file for f")->required();
    po->add_flag("--strat", strat_colimit, "apply the reflector to the result");
    po->callback([&] {
        run = [&]() -> int {
            auto i = pmap_from_json(read_json_file(file_a));
            auto f = pmap_from_json(read_json_file(file_b));
            f = pmap_from_json(to_json(f), i.src, f.dst);
            auto r = strat_colimit ? pushout_strat(i, f) : pushout(i, f);
            emit_object(o, *r.obj);
            return Ok;
        };
    });

    auto* refl = app.add_subcommand("reflect", "stratified reflection RX and the unit");
    refl->add_option("x", file_a)->required();
    refl->callback([&] {
        run = [&]() -> int {
            auto r = reflector(load_prestrat(read_json_file(file_a)));
            emit_map(o, r.unit);
            return Ok;
        };
    });

    auto* cls = app.add_subcommand("classify", "not-mono, entire, regular or plain-mono");
    cls->add_option("f", file_a)->required();
    cls->callback([&] {
        run = [&]() -> int {
            auto c = classify_mono(pmap_from_json(read_json_file(file_a)));
            Json j = report("classify", o);
            j["class"] = to_string(c);
            emit(o, j, to_string(c) + "\n");
            return Ok;
        };
    });

    auto* val = app.add_subcommand("validate", "check the degeneracy-label relations of an object");
    val->add_option("x", file_a)->required();
    val->callback([&] {
        run = [&]() -> int {
            auto parsed = prestrat_from_json(read_json_file(file_a));
            auto v = validate(*parsed.obj);
            auto problems = parsed.problems;
            problems.insert(problems.end(), v.problems.begin(), v.problems.end());
            Json j = report("validate", o);
            j["pass"] = problems.empty();
            j["stratified"] = is_stratified(*parsed.obj);
            j["problems"] = problems;
            std::string text = problems.empty() ? "pass\n" : "fail\n";
            for (const auto& p : problems)
                text += "  " + p + "\n";
            emit(o, j, text);
            return problems.empty() ? Ok : Failed;
        };
    });

    std::string gen_spec, target_file, left_file;
    auto* lift = app.add_subcommand("lift", "right lifting property of a target against a map");
    lift->add_option("--i", gen_spec, "family:params (horn:1,2) or a map file")->required();
    lift->add_option("--target", target_file)->required();
    lift->add_option("--left", left_file, "a single attaching map; default: all of them");
    lift->callback([&] {
        run = [&]() -> int {
            auto [name, i] = generator_spec(gen_spec);
            auto x = load_prestrat(read_json_file(target_file));
            Json j = report("lift", o);
            j["generator"] = name;
            if (!left_file.empty()) {
                auto left = pmap_from_json(read_json_file(left_file), i.src, x);
                auto r = solve_lift({i, left, std::nullopt, std::nullopt}, o.budget);
                j["verdict"] = to_string(r.verdict());
                j["nodes"] = r.nodes;
                if (r.lift)
                    j["lift"] = to_json(*r.lift);
                emit(o, j, to_string(r.verdict()) + "\n");
                return exit_for(r.verdict());
            }
            if (o.seed)
                x = shuffled(x, *o.seed);
            auto v = check_rlp(x, i, name, o.budget);
            j["verdict"] = to_string(v.verdict);
            j["attaching_maps"] = v.attaching_maps;
            Json w = Json::array();
            for (const auto& a : v.witnesses)
                w.push_back(to_json(a)["cells"]);
            j["witnesses"] = w;
            emit(o, j, to_string(v.verdict) + " (" + std::to_string(v.attaching_maps) + " attaching maps)\n");
            return exit_for(v.verdict);
        };
    });

    std::string families = "horn,thinness,triviality,saturation";
    auto* cpl = app.add_subcommand("complicial", "check the n-complicial lifting properties up to a dimension");
    cpl->add_option("--n", n);
    cpl->add_option("--dim", dim);
    cpl->add_option("--families", families, "comma-separated subset of horn,thinness,triviality,saturation,saturation-alt");
    cpl->add_option("x", file_a)->required();
    cpl->callback([&] {
        run = [&]() -> int {
            FamilyMask mask{false, false, false, false};
            for (const auto& f : split(families, ',')) {
                if (f == "horn")
                    mask.horn = true;
                else if (f == "thinness")
                    mask.thinness = true;
                else if (f == "triviality")
                    mask.triviality = true;
                else if (f == "saturation")
                    mask.saturation = true;
                else if (f == "saturation-alt")
                    mask.saturation_alt = true;
                else
                    throw InputError("unknown family '" + f + "'");
            }
            auto x = load_prestrat(read_json_file(file_a));
            if (o.seed)
                x = shuffled(x, *o.seed);
            auto rep = is_n_complicial(x, n, dim, o.budget, mask);
            Json j = report("complicial", o);
            j["n"] = n;
            j["dim_bound"] = dim;
            j["verdict"] = to_string(rep.verdict);
            Json gs = Json::array();
            std::string text = to_string(rep.verdict) + " (n=" + std::to_string(n) + ", dim_bound=" +
                               std::to_string(dim) + ")\n";
            for (const auto& g : rep.generators) {
                Json w = Json::array();
                for (const auto& a : g.witnesses) {
                    const SSet& s = a.src->underlying();
                    w.push_back(x->underlying().describe(a.cells.img[s.dim()][0]));
                }
                gs.push_back(Json{{"generator", g.generator},
                                  {"verdict", to_string(g.verdict)},
                                  {"attaching_maps", g.attaching_maps},
                                  {"witnesses", w}});
                if (g.verdict != Verdict::Pass) {
                    text += "  " + g.generator + ": " + to_string(g.verdict);
                    for (const auto& s : w)
                        text += " " + s.get<std::string>();
                    text += "\n";
                }
            }
            j["generators"] = gs;
            emit(o, j, text);
            return exit_for(rep.verdict);
        };
    });

    std::string lemma;
    int l = 0, m = 1;
    auto* vl = app.add_subcommand("verify-lemma", "replay a pushout-product schedule (B1..B4)");
    vl->add_option("lemma", lemma)->required();
    vl->add_option("--n", n);
    vl->add_option("--l", l);
    vl->add_option("--m", m);
    vl->callback([&] {
        run = [&]() -> int {
            auto r = verify_pp_lemma(parse_lemma(lemma), n, l, m);
            Json j = report("verify-lemma", o);
            j["lemma"] = lemma;
            j["n"] = n;
            j["l"] = l;
            j["m"] = m;
            j["pass"] = r.pass();
            j["pushout_product_class"] = to_string(r.pp.kind);
            const SSet& t = r.pp.target.obj->underlying();
            Json diff = Json::array();
            for (const auto& d : r.difference)
                diff.push_back(Json{{"dim", d.dim}, {"simplex", t.describe(d)}});
            j["marked_difference"] = diff;
            Json steps = Json::array();
            std::string text = std::string(r.pass() ? "pass" : "fail") + ": " + std::to_string(r.steps.size()) +
                               " step(s), marked difference " + std::to_string(r.difference.size()) + "\n";
            for (const auto& s : r.steps) {
                steps.push_back(Json{{"batch", s.batch},
                                     {"generator", s.generator.name()},
                                     {"attaching", Json::array({format_mono(s.first), format_mono(s.second)})},
                                     {"well_defined", s.well_defined}});
                text += "  [" + std::to_string(s.batch) + "] " + s.generator.name() + " at (" +
                        format_mono(s.first) + ", " + format_mono(s.second) + ")\n";
            }
            j["schedule"] = steps;
            j["final_equals_target"] = r.final_equal;
            j["problems"] = r.problems;
            for (const auto& p : r.problems)
                text += "  problem: " + p + "\n";
            emit(o, j, text);
            return r.pass() ? Ok : Failed;
        };
    });

    auto* ret = app.add_subcommand("retract", "the map j: RB -> B exhibiting Rf as a retract of f");
    ret->add_option("f", file_a)->required();
    ret->callback([&] {
        run = [&]() -> int {
            auto f = pmap_from_json(read_json_file(file_a));
            auto r = build_retract(f);
            bool commutes = equal_maps(compose(r.j, r.rf), f);
            bool retraction = equal_maps(compose(r.unit, r.j), identity_map(r.rb));
            Json j = report("retract", o);
            j["j"] = to_json(r.j);
            j["j_after_Rf_is_f"] = commutes;
            j["retraction"] = retraction;
            emit(o, j, std::string("j o Rf = f: ") + (commutes ? "yes" : "no") + "\nunit o j = id: " +
                           (retraction ? "yes" : "no") + "\n");
            return commutes && retraction ? Ok : Failed;
        };
    });

    int zigzag = 2;
    auto* hom = app.add_subcommand("homotopy", "Δ[1]_t-homotopy between two parallel maps");
    hom->add_option("u0", file_a)->required();
    hom->add_option("u1", file_b)->required();
    hom->add_option("--zigzag", zigzag, "maximal zig-zag length");
    hom->callback([&] {
        run = [&]() -> int {
            auto u0 = pmap_from_json(read_json_file(file_a));
            auto u1 = pmap_from_json(read_json_file(file_b), u0.src, u0.dst);
            auto e = elementary_homotopy(u0, u1, o.budget);
            auto h = homotopic(u0, u1, zigzag, o.budget);
            Json j = report("homotopy", o);
            j["zigzag_budget"] = zigzag;
            j["elementary"] = e.h ? "pass" : (e.complete ? "fail" : "indeterminate");
            if (e.h)
                j["witness"] = to_json(*e.h)["cells"];
            j["verdict"] = to_string(h.verdict);
            j["steps"] = h.steps;
            emit(o, j, "elementary: " + j["elementary"].get<std::string>() + "\nhomotopic: " + to_string(h.verdict) +
                           "\n");
            return exit_for(h.verdict);
        };
    });

    bool rs = false, saturate = false;
    auto* nv = app.add_subcommand("nerve", "nerve of a finite category (file, or iso, terminal, arrow)");
    nv->add_option("category", file_a)->required();
    nv->add_option("--dim", dim);
    nv->add_flag("--rs", rs, "Roberts-Street stratification");
    nv->add_flag("--saturate", saturate, "also mark isomorphisms; emits the comparison map");
    nv->callback([&] {
        run = [&]() -> int {
            auto c = builtin_category(file_a);
            auto cat = c ? *c : category_from_json(read_json_file(file_a));
            if (saturate)
                emit_map(o, saturate_nerve(cat, dim).comparison);
            else if (rs)
                emit_object(o, *nerve_rs(cat, dim));
            else
                emit_object(o, *flat(nerve(cat, dim).obj));
            return Ok;
        };
    });

    int len = 6;
    std::string morphism;
    auto* vt = app.add_subcommand("validate-tdelta", "compare the concrete model of tΔ with its presentation");
    vt->add_option("--dim", dim, "maximal object dimension");
    vt->add_option("--len", len, "maximal word length");
    vt->add_option("--morphism", morphism, "also factor one morphism, e.g. '[2]t -> [1] : 0,0,1'");
    vt->callback([&] {
        run = [&]() -> int {
            Json j = report("validate-tdelta", o);
            std::string text;
            if (!morphism.empty()) {
                TMorphism f;
                try {
                    f = parse_morphism(morphism);
                } catch (const std::exception& e) {
                    throw InputError(e.what());
                }
                bool valid = is_valid(f);
                j["morphism"] = format_morphism(f);
                j["valid"] = valid;
                text += format_morphism(f) + (valid ? " valid\n" : " not a morphism\n");
                if (valid) {
                    auto r = reedy_factorize(f);
                    j["minus"] = format_morphism(r.minus);
                    j["plus"] = format_morphism(r.plus);
                    Json secs = Json::array();
                    for (const auto& s : sections_of(f))
                        secs.push_back(format_morphism(s));
                    j["sections"] = secs;
                    text += "  minus: " + format_morphism(r.minus) + "\n  plus:  " + format_morphism(r.plus) + "\n";
                }
            }
            auto rep = validate_presentation(dim, len, o.budget);
            j["max_degree"] = dim;
            j["max_word_length"] = len;
            j["pass"] = rep.pass;
            j["complete"] = rep.complete;
            Json entries = Json::array();
            for (const auto& e : rep.entries)
                entries.push_back(Json{{"from", format_object(e.a)},
                                       {"to", format_object(e.b)},
                                       {"classes", e.classes},
                                       {"concrete", e.concrete},
                                       {"bijective", e.bijective}});
            j["entries"] = entries;
            j["discrepancies"] = rep.discrepancies;
            text += std::string("presentation: ") + (rep.pass ? "pass" : "fail") +
                    (rep.complete ? "" : " (incomplete)") + "\n";
            for (const auto& d : rep.discrepancies)
                text += "  " + d + "\n";
            emit(o, j, text);
            if (!rep.complete)
                return Unknown;
            return rep.pass ? Ok : Failed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BadInput;
    }
    try {
        return run();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return BadInput;
    } catch (const MalformedInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return BadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return BadInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return BadInput;
    }
}
