#include <complicial/monotone.hpp>

#include <bit>
#include <stdexcept>

namespace complicial {

auto is_monotone(const Mono& f, int target) -> bool
{
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || f[i] > target)
            return false;
        if (i > 0 && f[i] < f[i - 1])
            return false;
    }
    return true;
}

auto is_injective(const Mono& f) -> bool
{
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] == f[i - 1])
            return false;
    return true;
}

auto is_surjective(const Mono& f, int target) -> bool
{
    if (f.empty())
        return target < 0;
    if (f.front() != 0 || f.back() != target)
        return false;
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] - f[i - 1] > 1)
            return false;
    return true;
}

auto identity_mono(int n) -> Mono
{
    Mono f(n + 1);
    for (int i = 0; i <= n; ++i)
        f[i] = i;
    return f;
}

auto compose(const Mono& g, const Mono& f) -> Mono
{
    Mono h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || f[i] >= static_cast<int>(g.size()))
            throw std::invalid_argument("compose: maps are not composable");
        h[i] = g[f[i]];
    }
    return h;
}

auto coface(int n, int i) -> Mono
{
    Mono f(n);
    for (int j = 0; j < n; ++j)
        f[j] = j < i ? j : j + 1;
    return f;
}

auto codegeneracy(int n, int i) -> Mono
{
    Mono f(n + 2);
    for (int j = 0; j <= n + 1; ++j)
        f[j] = j <= i ? j : j - 1;
    return f;
}

auto image_factor(const Mono& f) -> ImageFactorization
{
    ImageFactorization r;
    r.surjection.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (r.image.empty() || r.image.back() != f[i])
            r.image.push_back(f[i]);
        r.surjection[i] = static_cast<int>(r.image.size()) - 1;
    }
    return r;
}

void for_each_mono(int n, int m, const std::function<void(const Mono&)>& visit)
{
    if (n < 0) {
        visit({});
        return;
    }
    if (m < 0)
        return;
    Mono f(n + 1, 0);
    while (true) {
        visit(f);
        int i = n;
        while (i >= 0 && f[i] == m)
            --i;
        if (i < 0)
            return;
        int v = f[i] + 1;
        for (int j = i; j <= n; ++j)
            f[j] = v;
    }
}

auto all_monos(int n, int m) -> std::vector<Mono>
{
    std::vector<Mono> out;
    for_each_mono(n, m, [&](const Mono& f) { out.push_back(f); });
    return out;
}

auto surjection_from_mask(int n, std::uint32_t mask) -> Mono
{
    Mono s(n + 1);
    if (n < 0)
        return s;
    s[0] = 0;
    for (int j = 0; j < n; ++j)
        s[j + 1] = s[j] + ((mask >> j) & 1u ? 0 : 1);
    return s;
}

auto mask_from_surjection(const Mono& s) -> std::uint32_t
{
    std::uint32_t mask = 0;
    for (std::size_t j = 0; j + 1 < s.size(); ++j)
        if (s[j] == s[j + 1])
            mask |= 1u << j;
    return mask;
}

auto word_from_mask(std::uint32_t mask) -> std::vector<int>
{
    std::vector<int> w;
    for (int j = 31; j >= 0; --j)
        if ((mask >> j) & 1u)
            w.push_back(j);
    return w;
}

auto mask_from_word(const std::vector<int>& word) -> std::uint32_t
{
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 0 || word[i] > 30)
            throw std::invalid_argument("degeneracy index out of range");
        if (i > 0 && word[i] >= word[i - 1])
            throw std::invalid_argument("degeneracy word must be strictly decreasing");
        mask |= 1u << word[i];
    }
    return mask;
}

auto compress_mask(std::uint32_t mask, std::uint32_t drop) -> std::uint32_t
{
    std::uint32_t out = 0;
    int k = 0;
    for (int j = 0; j < 32; ++j) {
        if ((drop >> j) & 1u)
            continue;
        if ((mask >> j) & 1u)
            out |= 1u << k;
        ++k;
    }
    return out;
}

auto image_mask(const Mono& f) -> std::uint32_t
{
    std::uint32_t m = 0;
    for (int v : f)
        m |= 1u << v;
    return m;
}

auto injection_from_mask(std::uint32_t subset) -> Mono
{
    Mono f;
    for (int j = 0; j < 32; ++j)
        if ((subset >> j) & 1u)
            f.push_back(j);
    return f;
}

auto popcount(std::uint32_t x) -> int { return std::popcount(x); }

auto format_mono(const Mono& f) -> std::string
{
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(f[i]);
    }
    return s + ")";
}

} // namespace complicial
