#include "hbck/hyper_bck.hpp"

#include "hbck/error.hpp"

#include <algorithm>
#include <array>

namespace hbck {

Carrier::Carrier(std::vector<std::string> labels, Element zero) : labels_(std::move(labels)), zero_(zero)
{
    if (labels_.empty()) {
        throw InputError(ErrorCode::InvalidArgument, "carrier must be non-empty");
    }
    if (labels_.size() > kMaxCarrier) {
        throw InputError(ErrorCode::SizeBound, "carrier of " + std::to_string(labels_.size()) +
                                                   " elements exceeds the limit of " +
                                                   std::to_string(kMaxCarrier));
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const auto& label = labels_[i];
        if (label.empty() || label.find(',') != std::string::npos) {
            throw InputError(ErrorCode::BadLabel, "label '" + label + "' is empty or contains ','");
        }
        if (std::find(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(i), label) !=
            labels_.begin() + static_cast<std::ptrdiff_t>(i)) {
            throw InputError(ErrorCode::DuplicateLabel, "duplicate label '" + label + "'");
        }
    }
    if (zero_ >= labels_.size()) {
        throw InputError(ErrorCode::InvalidArgument, "zero index out of range");
    }
}

Carrier Carrier::indexed(std::size_t n, Element zero)
{
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
    }
    return Carrier(std::move(labels), zero);
}

std::optional<Element> Carrier::find(std::string_view label) const noexcept
{
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return i;
        }
    }
    return std::nullopt;
}

Element Carrier::index_of(std::string_view label) const
{
    if (auto idx = find(label)) {
        return *idx;
    }
    throw InputError(ErrorCode::UnknownLabel, "unknown element '" + std::string(label) + "'");
}

Subset Carrier::subset_of(std::span<const std::string> labels) const
{
    Subset s;
    for (const auto& l : labels) {
        s.insert(index_of(l));
    }
    return s;
}

HyperBCK::HyperBCK(Carrier carrier, std::vector<Subset> table)
    : carrier_(std::move(carrier)), table_(std::move(table))
{
    const auto n = carrier_.size();
    if (table_.size() != n * n) {
        throw InputError(ErrorCode::NonTotalTable, "table has " + std::to_string(table_.size()) +
                                                       " cells, expected " + std::to_string(n * n));
    }
    const auto all = carrier_.all();
    for (std::size_t i = 0; i < table_.size(); ++i) {
        if (table_[i].empty()) {
            throw InputError(ErrorCode::EmptyCell, "empty hyperoperation cell " + carrier_.label(i / n) +
                                                       "," + carrier_.label(i % n));
        }
        if (!table_[i].subset_of(all)) {
            throw InputError(ErrorCode::UnknownLabel, "cell references an element outside the carrier");
        }
    }
}

Subset HyperBCK::star(std::string_view x, std::string_view y) const
{
    return star(carrier_.index_of(x), carrier_.index_of(y));
}

HyperBCK HyperBCK::with_cell(Element x, Element y, Subset value) const
{
    auto table = table_;
    table.at(x * size() + y) = value;
    return HyperBCK(carrier_, std::move(table));
}

HyperBCK trivial_algebra(std::string zero_label)
{
    return HyperBCK(Carrier({std::move(zero_label)}, 0), {Subset::singleton(0)});
}

std::string_view to_string(Axiom axiom)
{
    switch (axiom) {
    case Axiom::HK1: return "HK1";
    case Axiom::HK2: return "HK2";
    case Axiom::HK3: return "HK3";
    case Axiom::Antisymmetry: return "antisymmetry";
    case Axiom::FuzzyInequality: return "fuzzy-inequality";
    case Axiom::ZeroMaximal: return "zero-maximal";
    case Axiom::CollapseMonotone: return "collapse-monotone";
    case Axiom::CollapseZero: return "collapse-zero";
    }
    return "unknown";
}

namespace {

void require_element(const HyperBCK& alg, Element x)
{
    if (x >= alg.size()) {
        throw InputError(ErrorCode::UnknownLabel, "element index " + std::to_string(x) + " out of range");
    }
}

void require_subset(const HyperBCK& alg, Subset s)
{
    if (s.empty()) {
        throw InputError(ErrorCode::EmptySubset, "subset arguments must be non-empty");
    }
    if (!s.subset_of(alg.carrier().all())) {
        throw InputError(ErrorCode::UnknownLabel, "subset references an element outside the carrier");
    }
}

Subset star_union(const HyperBCK& alg, Subset a, Subset b) noexcept
{
    Subset acc;
    for (auto x : a) {
        for (auto y : b) {
            acc |= alg.star(x, y);
        }
    }
    return acc;
}

// upsets[a] = {b : a < b}
std::array<Subset, kMaxCarrier> upsets(const HyperBCK& alg) noexcept
{
    std::array<Subset, kMaxCarrier> up{};
    const auto n = alg.size();
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (alg.star(a, b).contains(alg.zero())) {
                up[a].insert(b);
            }
        }
    }
    return up;
}

bool below(const std::array<Subset, kMaxCarrier>& up, Subset a, Subset b) noexcept
{
    for (auto x : a) {
        if (!up[x].intersects(b)) {
            return false;
        }
    }
    return true;
}

template <typename OnViolation>
void check_axioms(const HyperBCK& alg, ValidationOptions options, OnViolation&& on_violation)
{
    const auto n = alg.size();
    const auto up = upsets(alg);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            for (Element z = 0; z < n; ++z) {
                const auto lhs = star_union(alg, alg.star(x, z), alg.star(y, z));
                if (!below(up, lhs, alg.star(x, y))) {
                    if (!on_violation(Axiom::HK1, {x, y, z})) {
                        return;
                    }
                }
            }
        }
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            for (Element z = 0; z < n; ++z) {
                if (star_union(alg, alg.star(x, y), Subset::singleton(z)) !=
                    star_union(alg, alg.star(x, z), Subset::singleton(y))) {
                    if (!on_violation(Axiom::HK2, {x, y, z})) {
                        return;
                    }
                }
            }
        }
    }
    const auto all = alg.carrier().all();
    for (Element x = 0; x < n; ++x) {
        if (!below(up, star_union(alg, Subset::singleton(x), all), Subset::singleton(x))) {
            if (!on_violation(Axiom::HK3, {x})) {
                return;
            }
        }
    }
    if (options.strict_antisymmetry) {
        for (Element x = 0; x < n; ++x) {
            for (Element y = x + 1; y < n; ++y) {
                if (up[x].contains(y) && up[y].contains(x)) {
                    if (!on_violation(Axiom::Antisymmetry, {x, y})) {
                        return;
                    }
                }
            }
        }
    }
}

} // namespace

Subset set_star(const HyperBCK& alg, Subset a, Subset b)
{
    require_subset(alg, a);
    require_subset(alg, b);
    return star_union(alg, a, b);
}

bool hyper_order(const HyperBCK& alg, Element x, Element y)
{
    require_element(alg, x);
    require_element(alg, y);
    return alg.star(x, y).contains(alg.zero());
}

bool hyper_order(const HyperBCK& alg, std::string_view x, std::string_view y)
{
    return hyper_order(alg, alg.carrier().index_of(x), alg.carrier().index_of(y));
}

bool set_order(const HyperBCK& alg, Subset a, Subset b)
{
    require_subset(alg, a);
    require_subset(alg, b);
    for (auto x : a) {
        bool found = false;
        for (auto y : b) {
            if (alg.star(x, y).contains(alg.zero())) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

ValidationReport validate_hyper_bck(const HyperBCK& alg, ValidationOptions options)
{
    ValidationReport report;
    check_axioms(alg, options, [&](Axiom axiom, std::vector<Element> witness) {
        report.add(axiom, std::move(witness));
        return true;
    });
    return report;
}

bool is_hyper_bck(const HyperBCK& alg, ValidationOptions options)
{
    bool ok = true;
    check_axioms(alg, options, [&](Axiom, std::vector<Element>) {
        ok = false;
        return false;
    });
    return ok;
}

bool is_subalgebra(const HyperBCK& alg, Subset s)
{
    require_subset(alg, s);
    if (!s.contains(alg.zero())) {
        return false;
    }
    for (auto x : s) {
        for (auto y : s) {
            if (!alg.star(x, y).subset_of(s)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Element> members(Subset s)
{
    return {s.begin(), s.end()};
}

HyperBCK subalgebra(const HyperBCK& alg, Subset s)
{
    if (s.empty() || !is_subalgebra(alg, s)) {
        throw InputError(ErrorCode::NotSubalgebra, "subset is not a hyper BCK-subalgebra");
    }
    const auto elems = members(s);
    std::array<Element, kMaxCarrier> position{};
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        position[elems[k]] = k;
        labels.push_back(alg.carrier().label(elems[k]));
    }
    std::vector<Subset> table;
    table.reserve(elems.size() * elems.size());
    for (auto x : elems) {
        for (auto y : elems) {
            Subset cell;
            for (auto t : alg.star(x, y)) {
                cell.insert(position[t]);
            }
            table.push_back(cell);
        }
    }
    return HyperBCK(Carrier(std::move(labels), position[alg.zero()]), std::move(table));
}

} // namespace hbck
