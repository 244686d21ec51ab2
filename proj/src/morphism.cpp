#include "hbck/morphism.hpp"

#include "hbck/enumerate.hpp"
#include "hbck/error.hpp"

#include <algorithm>

namespace hbck {

Subset image(const ElementMap& map, Subset s) noexcept
{
    Subset out;
    for (auto x : s) {
        out.insert(map[x]);
    }
    return out;
}

ElementMap compose(const ElementMap& g, const ElementMap& f)
{
    ElementMap out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
        out[x] = g.at(f[x]);
    }
    return out;
}

ElementMap identity_map(std::size_t n)
{
    ElementMap id(n);
    for (std::size_t i = 0; i < n; ++i) {
        id[i] = i;
    }
    return id;
}

bool is_hom(const ElementMap& map, const HyperBCK& src, const HyperBCK& dst)
{
    const auto n = src.size();
    if (map.size() != n) {
        return false;
    }
    if (std::any_of(map.begin(), map.end(), [&](Element e) { return e >= dst.size(); })) {
        return false;
    }
    if (map[src.zero()] != dst.zero()) {
        return false;
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (image(map, src.star(x, y)) != dst.star(map[x], map[y])) {
                return false;
            }
        }
    }
    return true;
}

namespace {

void require_hom(const ElementMap& map, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst)
{
    if (!is_hom(map, src.alg(), dst.alg())) {
        throw InputError(ErrorCode::NotHom, "map is not a homomorphism of hyper BCK-algebras");
    }
}

bool fuzzy_inequality_holds(const ElementMap& map, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst) noexcept
{
    for (Element x = 0; x < src.size(); ++x) {
        if (dst.mu(map[x]) < src.mu(x)) {
            return false;
        }
    }
    return true;
}

// Depth-first search over maps in lexicographic order. A pair (x, y) is
// checked once x, y and every element of x*y have been assigned.
class HomSearch {
public:
    HomSearch(const HyperBCK& src, const HyperBCK& dst) : src_(src), dst_(dst), map_(src.size())
    {
        const auto n = src.size();
        checks_.resize(n);
        for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) {
                Element last = std::max(x, y);
                for (auto t : src.star(x, y)) {
                    last = std::max(last, t);
                }
                checks_[last].emplace_back(x, y);
            }
        }
    }

    template <typename Visit>
    void run(Visit&& visit)
    {
        step(0, visit);
    }

private:
    template <typename Visit>
    void step(Element pos, Visit& visit)
    {
        if (pos == src_.size()) {
            visit(map_);
            return;
        }
        for (Element v = 0; v < dst_.size(); ++v) {
            if (pos == src_.zero() && v != dst_.zero()) {
                continue;
            }
            map_[pos] = v;
            const bool ok = std::all_of(checks_[pos].begin(), checks_[pos].end(), [&](const auto& xy) {
                return image(map_, src_.star(xy.first, xy.second)) == dst_.star(map_[xy.first], map_[xy.second]);
            });
            if (ok) {
                step(pos + 1, visit);
            }
        }
    }

    const HyperBCK& src_;
    const HyperBCK& dst_;
    ElementMap map_;
    std::vector<std::vector<std::pair<Element, Element>>> checks_;
};

} // namespace

bool is_fuzzy_hom(const ElementMap& map, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst)
{
    require_hom(map, src, dst);
    return fuzzy_inequality_holds(map, src, dst);
}

bool fuzzy_hom_via_cuts(const ElementMap& map, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst)
{
    require_hom(map, src, dst);
    auto levels = cut_levels(src);
    const auto dst_levels = cut_levels(dst);
    levels.insert(levels.end(), dst_levels.begin(), dst_levels.end());
    for (const auto& alpha : levels) {
        if (!image(map, alpha_cut(src, alpha)).subset_of(alpha_cut(dst, alpha))) {
            return false;
        }
    }
    return true;
}

bool is_bijective(const ElementMap& map, std::size_t target_size)
{
    if (map.size() != target_size) {
        return false;
    }
    std::vector<bool> seen(target_size, false);
    for (auto e : map) {
        if (e >= target_size || seen[e]) {
            return false;
        }
        seen[e] = true;
    }
    return true;
}

ElementMap inverse(const ElementMap& map)
{
    if (!is_bijective(map, map.size())) {
        throw InputError(ErrorCode::InvalidArgument, "map is not a bijection");
    }
    ElementMap inv(map.size());
    for (std::size_t x = 0; x < map.size(); ++x) {
        inv[map[x]] = x;
    }
    return inv;
}

bool is_crisp_iso(const ElementMap& map, const HyperBCK& src, const HyperBCK& dst)
{
    return is_bijective(map, dst.size()) && is_hom(map, src, dst) && is_hom(inverse(map), dst, src);
}

bool is_fuzzy_iso(const ElementMap& map, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst)
{
    require_hom(map, src, dst);
    if (!is_crisp_iso(map, src.alg(), dst.alg())) {
        return false;
    }
    for (Element x = 0; x < src.size(); ++x) {
        if (src.mu(x) != dst.mu(map[x])) {
            return false;
        }
    }
    return true;
}

bool is_hom(const FuzzyHom& f)
{
    return is_hom(f.map, f.source.alg(), f.target.alg());
}

bool is_fuzzy_hom(const FuzzyHom& f)
{
    return is_fuzzy_hom(f.map, f.source, f.target);
}

FuzzyHom compose(const FuzzyHom& g, const FuzzyHom& f)
{
    if (!(f.target == g.source)) {
        throw InputError(ErrorCode::Mismatch, "morphisms are not composable");
    }
    return {f.source, g.target, compose(g.map, f.map)};
}

std::vector<ElementMap> enumerate_homs(const HyperBCK& src, const HyperBCK& dst)
{
    std::vector<ElementMap> out;
    HomSearch(src, dst).run([&](const ElementMap& m) { out.push_back(m); });
    return out;
}

std::vector<ElementMap> enumerate_fuzzy_homs(const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst)
{
    std::vector<ElementMap> out;
    HomSearch(src.alg(), dst.alg()).run([&](const ElementMap& m) {
        if (fuzzy_inequality_holds(m, src, dst)) {
            out.push_back(m);
        }
    });
    return out;
}

MonoVerdict check_mono_equivalence(const ElementMap& f, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst,
                                   std::span<const HyperBCK> probes, std::span<const FuzzyValue> grid)
{
    if (!is_hom(f, src.alg(), dst.alg()) || !fuzzy_inequality_holds(f, src, dst)) {
        throw InputError(ErrorCode::NotFuzzyHom, "mono check requires a fuzzy homomorphism");
    }
    MonoVerdict verdict;
    for (const auto& probe : probes) {
        if (!verdict.crisp_mono && !verdict.fuzzy_mono) {
            break;
        }
        const auto homs = enumerate_homs(probe, src.alg());
        std::vector<FuzzyHyperBCK> assignments;
        bool assignments_ready = false;
        for (std::size_t i = 0; i < homs.size(); ++i) {
            for (std::size_t j = i + 1; j < homs.size(); ++j) {
                const auto& h = homs[i];
                const auto& g = homs[j];
                if (compose(f, h) != compose(f, g)) {
                    continue;
                }
                if (verdict.crisp_mono) {
                    verdict.crisp_mono = false;
                    verdict.crisp_witness = MonoWitness{probe, {}, h, g};
                }
                if (!verdict.fuzzy_mono) {
                    continue;
                }
                if (!assignments_ready) {
                    assignments = enumerate_fuzzy_assignments(probe, grid);
                    assignments_ready = true;
                }
                std::vector<FuzzyValue> pointwise_min(probe.size());
                for (Element x = 0; x < probe.size(); ++x) {
                    pointwise_min[x] = min(src.mu(h[x]), src.mu(g[x]));
                }
                FuzzyHyperBCK from_pair(probe, pointwise_min);
                std::vector<const FuzzyHyperBCK*> candidates;
                for (const auto& a : assignments) {
                    candidates.push_back(&a);
                }
                if (satisfies_fuzzy_inequality(from_pair)) {
                    candidates.push_back(&from_pair);
                }
                for (const auto* k : candidates) {
                    if (fuzzy_inequality_holds(h, *k, src) && fuzzy_inequality_holds(g, *k, src)) {
                        verdict.fuzzy_mono = false;
                        verdict.fuzzy_witness = MonoWitness{probe, k->mu(), h, g};
                        break;
                    }
                }
            }
        }
    }
    return verdict;
}

MonoVerdict check_mono_equivalence(const ElementMap& f, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst,
                                   std::size_t probe_size_bound)
{
    if (probe_size_bound < 1 || probe_size_bound > kMaxExhaustiveSize) {
        throw InputError(ErrorCode::SizeBound, "probe size bound must be in 1.." + std::to_string(kMaxExhaustiveSize));
    }
    std::vector<HyperBCK> probes;
    for (std::size_t n = 1; n <= probe_size_bound; ++n) {
        auto corpus = enumerate_hyper_bck(n, CorpusPolicy::UpToIso);
        probes.insert(probes.end(), corpus.models.begin(), corpus.models.end());
    }
    const auto grid = test_grid();
    return check_mono_equivalence(f, src, dst, probes, grid);
}

SeparationVerdict separation_promotes(const FuzzyHyperBCK& host, Subset g, Subset f, const FuzzyValue& alpha)
{
    if (!is_subalgebra(host.alg(), g) || !is_subalgebra(host.alg(), f)) {
        throw InputError(ErrorCode::NotSubalgebra, "G and F must be hyper BCK-subalgebras of the host");
    }
    const auto zero = host.alg().zero();
    SeparationVerdict verdict;
    verdict.hypothesis_holds = true;
    for (auto x : g) {
        if (x != zero && !(host.mu(x) < alpha)) {
            verdict.hypothesis_holds = false;
        }
    }
    for (auto x : f) {
        if (x != zero && !(alpha < host.mu(x))) {
            verdict.hypothesis_holds = false;
        }
    }
    const auto source = restrict(host, g);
    const auto target = restrict(host, f);
    const auto homs = enumerate_homs(source.alg(), target.alg());
    verdict.homs_checked = homs.size();
    verdict.conclusion_holds = std::all_of(homs.begin(), homs.end(), [&](const ElementMap& m) {
        return fuzzy_inequality_holds(m, source, target);
    });
    return verdict;
}

} // namespace hbck
