#ifndef HBCK_CONSTRUCTION_HPP
#define HBCK_CONSTRUCTION_HPP

#include "hbck/morphism.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hbck {

/// Equivalence relation on the carrier of `base`, as disjoint blocks
/// covering it. Blocks are kept sorted by their least element.
class Congruence {
public:
    /// Throws InputError(InvalidArgument) unless `blocks` partition the carrier.
    Congruence(std::size_t carrier_size, std::vector<Subset> blocks);

    static Congruence discrete(std::size_t carrier_size);
    static Congruence total(std::size_t carrier_size);
    /// x ~ y iff map[x] == map[y].
    static Congruence kernel(const ElementMap& map);

    const std::vector<Subset>& blocks() const noexcept { return blocks_; }
    std::size_t carrier_size() const noexcept { return block_of_.size(); }
    std::size_t block_of(Element x) const noexcept { return block_of_[x]; }
    bool related(Element x, Element y) const noexcept { return block_of_[x] == block_of_[y]; }
    /// Every block of *this lies inside a block of `coarser`.
    bool refines(const Congruence& coarser) const noexcept;

    friend bool operator==(const Congruence& a, const Congruence& b) noexcept { return a.blocks_ == b.blocks_; }

private:
    std::vector<Subset> blocks_;
    std::vector<std::size_t> block_of_;
};

/// Blockwise intersection.
Congruence meet(const Congruence& a, const Congruence& b);

/// [x]*[y] := {[t] : t in x*y} does not depend on the representatives.
bool quotient_well_defined(const HyperBCK& alg, const Congruence& theta);

/// The quotient algebra with zero [O]; blocks are labelled by their members
/// joined with '|' (e.g. "1|3"). Throws InputError(InvalidArgument) when the
/// quotient operation is not well defined.
HyperBCK quotient(const HyperBCK& alg, const Congruence& theta);

/// Well-defined quotient that satisfies HK1-HK3.
bool is_regular(const HyperBCK& alg, const Congruence& theta);

inline constexpr std::size_t kDefaultCongruenceBound = 5;

/// Every regular congruence, in the order of restricted growth strings.
/// Throws InputError(SizeBound) for carriers larger than `max_size`.
std::vector<Congruence> enumerate_regular_congruences(const HyperBCK& alg,
                                                      std::size_t max_size = kDefaultCongruenceBound);

struct Leg {
    std::string name;
    FuzzyHom hom;
};

struct Provenance {
    std::string kind;
    std::vector<FuzzyHyperBCK> objects;
    std::vector<FuzzyHom> morphisms;
};

struct ConstructionResult {
    FuzzyHyperBCK object;
    std::vector<Leg> legs;
    Provenance provenance;
    /// Coequalizer only: the least coequalizing regular congruence and the
    /// number of regular congruences it was intersected from.
    std::optional<Congruence> congruence;
    std::size_t candidate_count = 0;
};

/// ({O}, O*O = {O}) with mu(O) = 0.
FuzzyHyperBCK terminal();

/// Cartesian product with componentwise hyperoperation
/// (x*y = {t : t_i in x_i * y_i}) and mu the minimum over components.
/// Elements are tuples in lexicographic order, the last factor varying
/// fastest, labelled "(a;b;...)". Legs "p0", "p1", ... are the projections.
/// Throws InputError on an empty factor list or a product above kMaxCarrier.
ConstructionResult product(std::span<const FuzzyHyperBCK> factors);

/// Tupling x -> (q_i(x))_i for a cone of fuzzy homs from a common source
/// into the factors. Throws InputError on a malformed cone, ClaimViolation
/// when the tupling is not a (fuzzy) homomorphism; with strong homs and
/// componentwise cells this happens whenever some q(x*y) is smaller than
/// the product of the q_i(x*y).
FuzzyHom mediate_product(const ConstructionResult& prod, std::span<const FuzzyHom> cone);

/// Agreement set of a parallel pair, with inherited structure; leg
/// "inclusion". Throws InputError for a non-parallel pair or non-fuzzy homs,
/// ClaimViolation if the agreement set is not closed under *.
ConstructionResult equalizer(const FuzzyHom& f, const FuzzyHom& g);

/// delta with inclusion . delta = h, for h equalizing the pair.
/// Throws InputError(Mismatch) when f h != g h.
FuzzyHom mediate_equalizer(const ConstructionResult& eq, const FuzzyHom& h);

/// Quotient by the meet rho of all regular congruences identifying f(a) and
/// g(a), with mu of a block the maximum over its members; leg "projection".
/// Throws InputError(SizeBound) above `max_size`, ClaimViolation when rho is
/// not regular.
ConstructionResult coequalizer(const FuzzyHom& f, const FuzzyHom& g, std::size_t max_size = kDefaultCongruenceBound);

/// psi with psi . projection = phi. Throws InputError(Mismatch) when phi
/// does not coequalize the pair, ClaimViolation when phi is not constant on
/// the blocks of rho or psi fails the fuzzy inequality.
FuzzyHom mediate_coequalizer(const ConstructionResult& coeq, const FuzzyHom& phi);

/// Equalizer of f.pA and g.pB inside A x B; legs "pA" and "pB".
ConstructionResult pullback(const FuzzyHom& f, const FuzzyHom& g);

/// The mediating morphism for a commuting square f qa = g qb. Throws
/// ClaimViolation as mediate_product does.
FuzzyHom mediate_pullback(const ConstructionResult& pb, const FuzzyHom& qa, const FuzzyHom& qb);

} // namespace hbck

#endif // HBCK_CONSTRUCTION_HPP
