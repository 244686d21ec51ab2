#ifndef HBCK_FUZZY_HPP
#define HBCK_FUZZY_HPP

#include "hbck/fuzzy_value.hpp"
#include "hbck/hyper_bck.hpp"

#include <optional>
#include <vector>

namespace hbck {

/// A hyper BCK-algebra paired with a membership assignment mu. The
/// constructor only checks that mu is total; the inequality
/// min mu(x*y) >= min(mu(x), mu(y)) is checked by validate_fuzzy.
class FuzzyHyperBCK {
public:
    /// Throws InputError(MuIncomplete) unless mu.size() == alg.size().
    FuzzyHyperBCK(HyperBCK alg, std::vector<FuzzyValue> mu);

    const HyperBCK& alg() const noexcept { return alg_; }
    const std::vector<FuzzyValue>& mu() const noexcept { return mu_; }
    const FuzzyValue& mu(Element x) const noexcept { return mu_[x]; }
    std::size_t size() const noexcept { return alg_.size(); }

    friend bool operator==(const FuzzyHyperBCK&, const FuzzyHyperBCK&) = default;

private:
    HyperBCK alg_;
    std::vector<FuzzyValue> mu_;
};

/// Smallest mu over a non-empty subset.
FuzzyValue min_mu(const FuzzyHyperBCK& f, Subset s);

/// Checks min over t in x*y of mu(t) >= min(mu(x), mu(y)) for every pair,
/// witnesses (x, y). Reports mu(O) < mu(x) as informational ZeroMaximal (x)
/// and the two collapse consequences as CollapseMonotone / CollapseZero.
ValidationReport validate_fuzzy(const FuzzyHyperBCK& f);

/// Fail-fast form of the inequality check only.
bool satisfies_fuzzy_inequality(const FuzzyHyperBCK& f) noexcept;

/// {x : mu(x) >= alpha}. Contains O and is star-closed whenever it is
/// non-empty; it is empty exactly when alpha > mu(O).
Subset alpha_cut(const FuzzyHyperBCK& f, const FuzzyValue& alpha);

/// Sorted distinct values of mu.
std::vector<FuzzyValue> cut_levels(const FuzzyHyperBCK& f);

/// Fuzzy subalgebra on S with inherited table and mu.
/// Throws InputError(NotSubalgebra).
FuzzyHyperBCK restrict(const FuzzyHyperBCK& f, Subset s);

struct CutVerdict {
    bool is_cut = false;
    std::optional<FuzzyValue> alpha;
    /// Whether "S carries a fuzzy subalgebra iff S is an alpha-cut" holds for
    /// this S.
    bool claim_holds = false;
};

/// Throws InputError(NotSubalgebra).
CutVerdict equals_some_alpha_cut(const FuzzyHyperBCK& f, Subset s);

struct CollapseVerdict {
    /// x < y implies mu(x) <= mu(y) everywhere.
    bool monotone_applies = false;
    /// mu is constant, equal to mu(O).
    bool constant = false;
    bool zero_applies = false;
    bool all_zero = false;

    bool holds() const noexcept { return (!monotone_applies || constant) && (!zero_applies || all_zero); }
};

CollapseVerdict check_collapse_properties(const FuzzyHyperBCK& f);

} // namespace hbck

#endif // HBCK_FUZZY_HPP
