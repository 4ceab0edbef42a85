#include <complicial/shapes.hpp>

#include <stdexcept>

namespace complicial {

auto marked_standard(int m, const std::function<bool(std::uint32_t)>& marked) -> PrestratPtr
{
    auto s = standard(m);
    std::vector<Simplex> cells;
    for (std::uint32_t sub = 1; sub < (1u << (m + 1)); ++sub)
        if (popcount(sub) >= 2 && marked(sub))
            cells.push_back(Simplex::cell(popcount(sub) - 1, standard_cell_id(m, sub)));
    return with_marking(s, cells);
}

namespace {

auto facet(int m, int i) -> std::uint32_t { return ((1u << (m + 1)) - 1) & ~(1u << i); }

auto core(int k, int m) -> std::uint32_t
{
    std::uint32_t c = 0;
    for (int v = k - 1; v <= k + 1; ++v)
        if (v >= 0 && v <= m)
            c |= 1u << v;
    return c;
}

void check_range(int k, int m)
{
    if (m < 0 || k < 0 || k > m)
        throw std::invalid_argument("need 0 <= k <= m");
}

} // namespace

auto complicial_simplex(int k, int m, Variant v) -> PrestratPtr
{
    check_range(k, m);
    std::uint32_t c = core(k, m);
    return marked_standard(m, [=](std::uint32_t s) {
        if ((s & c) == c)
            return true;
        if (v != Variant::Plain && ((k >= 1 && s == facet(m, k - 1)) || (k + 1 <= m && s == facet(m, k + 1))))
            return true;
        return v == Variant::DoublePrime && s == facet(m, k);
    });
}

auto complicial_horn(int k, int m) -> PMap
{
    check_range(k, m);
    if (m < 1)
        throw std::invalid_argument("horns need m >= 1");
    auto target = complicial_simplex(k, m);
    auto h = horn(k, m);
    std::vector<Simplex> marked;
    for (int p = 1; p <= h->dim(); ++p)
        for (int id = 0; id < h->count(p); ++id) {
            auto c = target->underlying().find_cell(h->name(p, id));
            if (target->marked(*c))
                marked.push_back(Simplex::cell(p, id));
        }
    return inclusion_by_names(with_marking(h, marked), target);
}

auto eq_marked(std::uint32_t subset) -> bool
{
    int n = popcount(subset);
    return n >= 3 || subset == 0b0101u || subset == 0b1010u;
}

auto delta3_eq() -> PrestratPtr { return marked_standard(3, eq_marked); }
auto delta3_sharp() -> PrestratPtr { return sharp(standard(3)); }

auto saturation_pair(int l) -> PMap
{
    if (l < -1)
        throw std::invalid_argument("saturation needs l >= -1");
    int shift = l + 1;
    // Δ[l] is flat: a join simplex is marked iff its Δ[3] part is
    auto source = marked_standard(l + 4, [=](std::uint32_t s) {
        std::uint32_t b = s >> shift;
        return b != 0 && eq_marked(b);
    });
    auto target = marked_standard(l + 4, [=](std::uint32_t s) { return popcount(s >> shift) >= 2; });
    return inclusion_by_names(source, target);
}

auto saturation_alt_pair(int m, int l) -> PMap
{
    if (m < -1 || l < -1)
        throw std::invalid_argument("two-sided saturation needs m, l >= -1");
    int shift = m + 1;
    auto middle = [=](std::uint32_t s) { return (s >> shift) & 0xfu; };
    auto source = marked_standard(m + l + 5, [=](std::uint32_t s) {
        std::uint32_t b = middle(s);
        return b != 0 && eq_marked(b);
    });
    auto target = marked_standard(m + l + 5, [=](std::uint32_t s) { return popcount(middle(s)) >= 2; });
    return inclusion_by_names(source, target);
}

auto to_string(Family f) -> std::string
{
    switch (f) {
    case Family::Horn: return "horn";
    case Family::Thinness: return "thinness";
    case Family::Triviality: return "triviality";
    case Family::Saturation: return "saturation";
    case Family::SaturationAlt: return "saturation-alt";
    case Family::CofBoundary: return "cof-boundary";
    case Family::CofMarking: return "cof-marking";
    }
    return "?";
}

auto Generator::name() const -> std::string
{
    switch (family) {
    case Family::Horn: return "horn(" + std::to_string(k) + "," + std::to_string(m) + ")";
    case Family::Thinness: return "thinness(" + std::to_string(k) + "," + std::to_string(m) + ")";
    case Family::Triviality: return "triviality(" + std::to_string(l) + ")";
    case Family::Saturation: return "saturation(" + std::to_string(l) + ")";
    case Family::SaturationAlt: return "saturation-alt(" + std::to_string(m) + "," + std::to_string(l) + ")";
    case Family::CofBoundary: return "boundary(" + std::to_string(m) + ")";
    case Family::CofMarking: return "marking(" + std::to_string(m) + ")";
    }
    return "?";
}

auto horn_generator(int k, int m) -> Generator { return {Family::Horn, k, m, -2, complicial_horn(k, m)}; }

auto thinness_generator(int k, int m) -> Generator
{
    if (m < 2)
        throw std::invalid_argument("thinness needs m >= 2");
    return {Family::Thinness, k, m, -2,
            inclusion_by_names(complicial_simplex(k, m, Variant::Prime), complicial_simplex(k, m, Variant::DoublePrime))};
}

auto triviality_generator(int l) -> Generator
{
    return {Family::Triviality, -1, -1, l, inclusion_by_names(simplex(l), marked_simplex(l))};
}

auto saturation_generator(int l) -> Generator { return {Family::Saturation, -1, -1, l, saturation_pair(l)}; }

auto saturation_alt_generator(int m, int l) -> Generator
{
    return {Family::SaturationAlt, -1, m, l, saturation_alt_pair(m, l)};
}

auto boundary_cofibration(int m) -> Generator
{
    return {Family::CofBoundary, -1, m, -2, inclusion_by_names(flat(boundary(m)), simplex(m))};
}

auto marking_cofibration(int m) -> Generator
{
    return {Family::CofMarking, -1, m, -2, inclusion_by_names(simplex(m), marked_simplex(m))};
}

auto anodyne_generators(int n, int dim_bound, FamilyMask families) -> std::vector<Generator>
{
    std::vector<Generator> out;
    if (families.horn)
        for (int m = 1; m <= dim_bound; ++m)
            for (int k = 0; k <= m; ++k)
                out.push_back(horn_generator(k, m));
    if (families.thinness)
        for (int m = 2; m <= dim_bound; ++m)
            for (int k = 0; k <= m; ++k)
                out.push_back(thinness_generator(k, m));
    if (families.triviality)
        for (int l = std::max(n + 1, 1); l <= dim_bound; ++l)
            out.push_back(triviality_generator(l));
    if (families.saturation)
        for (int l = -1; l + 4 <= dim_bound; ++l)
            out.push_back(saturation_generator(l));
    if (families.saturation_alt)
        for (int m = -1; m + 4 <= dim_bound; ++m)
            for (int l = -1; m + l + 5 <= dim_bound; ++l)
                out.push_back(saturation_alt_generator(m, l));
    return out;
}

auto generating_cofibrations(int dim_bound) -> std::vector<Generator>
{
    std::vector<Generator> out;
    for (int m = 0; m <= dim_bound; ++m)
        out.push_back(boundary_cofibration(m));
    for (int m = 1; m <= dim_bound; ++m)
        out.push_back(marking_cofibration(m));
    return out;
}

auto marked_count(const Prestrat& x) -> int { return static_cast<int>(x.marked_cells().size()); }

} // namespace complicial
