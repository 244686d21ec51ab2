#ifndef HBCK_MORPHISM_HPP
#define HBCK_MORPHISM_HPP

#include "hbck/fuzzy.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hbck {

/// Total element map between two carriers: map[x] is the image of x.
using ElementMap = std::vector<Element>;

/// A map together with its fuzzy source and target.
struct FuzzyHom {
    FuzzyHyperBCK source;
    FuzzyHyperBCK target;
    ElementMap map;

    friend bool operator==(const FuzzyHom&, const FuzzyHom&) = default;
};

/// Image of a subset under a map.
Subset image(const ElementMap& map, Subset s) noexcept;

/// g after f.
ElementMap compose(const ElementMap& g, const ElementMap& f);

ElementMap identity_map(std::size_t n);

/// Strong homomorphism: map(O) = O and, for all x, y, the image of x*y is
/// exactly map(x)*map(y). False when the map is not total or out of range.
bool is_hom(const ElementMap& map, const HyperBCK& src, const HyperBCK& dst);

/// mu_dst(map(x)) >= mu_src(x) for all x. Throws InputError(NotHom).
bool is_fuzzy_hom(const ElementMap& map, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst);

/// The same property decided through alpha-cuts: map(src_alpha) is contained
/// in dst_alpha for every level of either side. Throws InputError(NotHom).
bool fuzzy_hom_via_cuts(const ElementMap& map, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst);

bool is_bijective(const ElementMap& map, std::size_t target_size);
/// Inverse of a bijection.
ElementMap inverse(const ElementMap& map);

/// Bijective hom whose inverse is a hom.
bool is_crisp_iso(const ElementMap& map, const HyperBCK& src, const HyperBCK& dst);

/// Crisp iso with mu_src = mu_dst after map. Throws InputError(NotHom).
bool is_fuzzy_iso(const ElementMap& map, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst);

/// Overloads taking the map with its endpoints.
bool is_hom(const FuzzyHom& f);
bool is_fuzzy_hom(const FuzzyHom& f);

/// g after f; throws InputError(Mismatch) unless f.target == g.source.
FuzzyHom compose(const FuzzyHom& g, const FuzzyHom& f);

/// All homs src -> dst in lexicographic order of (map[0], map[1], ...).
std::vector<ElementMap> enumerate_homs(const HyperBCK& src, const HyperBCK& dst);

/// Fuzzy homs src -> dst, lexicographic.
std::vector<ElementMap> enumerate_fuzzy_homs(const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst);

/// A parallel pair h != g : probe -> src with f h = f g.
struct MonoWitness {
    HyperBCK probe;
    std::vector<FuzzyValue> probe_mu;
    ElementMap h;
    ElementMap g;
};

/// Mono-ness of f decided by probing, which is necessarily bounded: only
/// the supplied probe objects are tried.
struct MonoVerdict {
    bool crisp_mono = true;
    bool fuzzy_mono = true;
    std::optional<MonoWitness> crisp_witness;
    std::optional<MonoWitness> fuzzy_witness;

    bool agree() const noexcept { return crisp_mono == fuzzy_mono; }
};

/// Crisp verdict: no pair h != g of homs from a probe with f h = f g.
/// Fuzzy verdict: no such pair that are both fuzzy homs for some probe mu
/// drawn from the grid, or equal to min(mu_src(h x), mu_src(g x)), with the
/// probe mu satisfying the fuzzy inequality.
/// Throws InputError(NotFuzzyHom) unless f is a fuzzy hom.
MonoVerdict check_mono_equivalence(const ElementMap& f, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst,
                                   std::span<const HyperBCK> probes, std::span<const FuzzyValue> grid);

/// Same, with the probes being all algebras of size <= probe_size_bound up
/// to O-fixing isomorphism (bound at most 3).
MonoVerdict check_mono_equivalence(const ElementMap& f, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst,
                                   std::size_t probe_size_bound);

struct SeparationVerdict {
    /// mu < alpha on G minus O, mu > alpha on F minus O.
    bool hypothesis_holds = false;
    /// Every hom G -> F satisfies the fuzzy inequality with inherited mu.
    bool conclusion_holds = false;
    std::size_t homs_checked = 0;
};

/// Throws InputError(NotSubalgebra) when G or F is not a subalgebra of host.
SeparationVerdict separation_promotes(const FuzzyHyperBCK& host, Subset g, Subset f, const FuzzyValue& alpha);

} // namespace hbck

#endif // HBCK_MORPHISM_HPP
