#include "hbck/fuzzy.hpp"

#include "hbck/error.hpp"

#include <algorithm>

namespace hbck {

FuzzyHyperBCK::FuzzyHyperBCK(HyperBCK alg, std::vector<FuzzyValue> mu) : alg_(std::move(alg)), mu_(std::move(mu))
{
    if (mu_.size() != alg_.size()) {
        throw InputError(ErrorCode::MuIncomplete, "membership assignment covers " + std::to_string(mu_.size()) +
                                                      " of " + std::to_string(alg_.size()) + " elements");
    }
}

FuzzyValue min_mu(const FuzzyHyperBCK& f, Subset s)
{
    if (s.empty()) {
        throw InputError(ErrorCode::EmptySubset, "minimum over an empty subset");
    }
    FuzzyValue best = FuzzyValue::one();
    for (auto t : s) {
        best = min(best, f.mu(t));
    }
    return best;
}

bool satisfies_fuzzy_inequality(const FuzzyHyperBCK& f) noexcept
{
    const auto n = f.size();
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            const auto& bound = min(f.mu(x), f.mu(y));
            for (auto t : f.alg().star(x, y)) {
                if (f.mu(t) < bound) {
                    return false;
                }
            }
        }
    }
    return true;
}

CollapseVerdict check_collapse_properties(const FuzzyHyperBCK& f)
{
    const auto n = f.size();
    const auto& mu_zero = f.mu(f.alg().zero());
    CollapseVerdict v;
    v.monotone_applies = true;
    for (Element x = 0; x < n && v.monotone_applies; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (f.alg().star(x, y).contains(f.alg().zero()) && f.mu(y) < f.mu(x)) {
                v.monotone_applies = false;
                break;
            }
        }
    }
    v.constant = std::all_of(f.mu().begin(), f.mu().end(), [&](const FuzzyValue& m) { return m == mu_zero; });
    v.zero_applies = mu_zero == FuzzyValue::zero();
    v.all_zero = std::all_of(f.mu().begin(), f.mu().end(), [](const FuzzyValue& m) { return m == FuzzyValue::zero(); });
    return v;
}

ValidationReport validate_fuzzy(const FuzzyHyperBCK& f)
{
    ValidationReport report;
    const auto n = f.size();
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (min_mu(f, f.alg().star(x, y)) < min(f.mu(x), f.mu(y))) {
                report.add(Axiom::FuzzyInequality, {x, y});
            }
        }
    }
    const auto zero = f.alg().zero();
    for (Element x = 0; x < n; ++x) {
        if (f.mu(zero) < f.mu(x)) {
            report.informational.push_back({Axiom::ZeroMaximal, {x}});
        }
    }
    const auto collapse = check_collapse_properties(f);
    if (collapse.monotone_applies && !collapse.constant) {
        report.informational.push_back({Axiom::CollapseMonotone, {}});
    }
    if (collapse.zero_applies && !collapse.all_zero) {
        report.informational.push_back({Axiom::CollapseZero, {}});
    }
    return report;
}

Subset alpha_cut(const FuzzyHyperBCK& f, const FuzzyValue& alpha)
{
    Subset cut;
    for (Element x = 0; x < f.size(); ++x) {
        if (f.mu(x) >= alpha) {
            cut.insert(x);
        }
    }
    return cut;
}

std::vector<FuzzyValue> cut_levels(const FuzzyHyperBCK& f)
{
    auto levels = f.mu();
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

FuzzyHyperBCK restrict(const FuzzyHyperBCK& f, Subset s)
{
    auto sub = subalgebra(f.alg(), s);
    std::vector<FuzzyValue> mu;
    for (auto x : s) {
        mu.push_back(f.mu(x));
    }
    return FuzzyHyperBCK(std::move(sub), std::move(mu));
}

CutVerdict equals_some_alpha_cut(const FuzzyHyperBCK& f, Subset s)
{
    const auto restricted = restrict(f, s);
    CutVerdict verdict;
    // The only candidate level is min mu over S: a smaller level admits every
    // member of S and any element at least as large, a larger one drops the
    // minimiser. Other levels are scanned as a cross-check.
    auto candidates = cut_levels(f);
    candidates.insert(candidates.begin(), min_mu(f, s));
    for (const auto& level : candidates) {
        if (alpha_cut(f, level) == s) {
            verdict.is_cut = true;
            verdict.alpha = level;
            break;
        }
    }
    const bool fuzzy_subalgebra = satisfies_fuzzy_inequality(restricted);
    verdict.claim_holds = fuzzy_subalgebra == verdict.is_cut;
    return verdict;
}

} // namespace hbck
