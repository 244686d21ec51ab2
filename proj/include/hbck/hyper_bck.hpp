#ifndef HBCK_HYPER_BCK_HPP
#define HBCK_HYPER_BCK_HPP

#include "hbck/subset.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hbck {

/// Ordered list of distinct element labels with a designated zero element.
/// Labels are non-empty and may not contain ',' (the pair-key separator of
/// the document format).
class Carrier {
public:
    Carrier(std::vector<std::string> labels, Element zero);

    /// Labels "0", "1", ..., with zero at index `zero`.
    static Carrier indexed(std::size_t n, Element zero = 0);

    std::size_t size() const noexcept { return labels_.size(); }
    Element zero() const noexcept { return zero_; }
    const std::string& label(Element e) const { return labels_.at(e); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Subset all() const noexcept { return Subset::full(labels_.size()); }

    std::optional<Element> find(std::string_view label) const noexcept;
    /// Throws InputError(UnknownLabel).
    Element index_of(std::string_view label) const;
    Subset subset_of(std::span<const std::string> labels) const;

    friend bool operator==(const Carrier&, const Carrier&) = default;

private:
    std::vector<std::string> labels_;
    Element zero_;
};

/// A finite set with a hyperoperation: each ordered pair (x, y) maps to a
/// non-empty subset x*y of the carrier. The table is row-major, cell
/// x*size()+y holding x*y.
class HyperBCK {
public:
    /// Throws InputError when the table is not total or has an empty or
    /// out-of-range cell. Axioms are not checked here.
    HyperBCK(Carrier carrier, std::vector<Subset> table);

    const Carrier& carrier() const noexcept { return carrier_; }
    std::size_t size() const noexcept { return carrier_.size(); }
    Element zero() const noexcept { return carrier_.zero(); }
    std::span<const Subset> table() const noexcept { return table_; }

    Subset star(Element x, Element y) const noexcept { return table_[x * size() + y]; }
    /// Label form; throws InputError(UnknownLabel).
    Subset star(std::string_view x, std::string_view y) const;

    /// Copy with one cell replaced.
    HyperBCK with_cell(Element x, Element y, Subset value) const;

    friend bool operator==(const HyperBCK&, const HyperBCK&) = default;

private:
    Carrier carrier_;
    std::vector<Subset> table_;
};

/// The one-element algebra {O} with O*O = {O}.
HyperBCK trivial_algebra(std::string zero_label = "0");

enum class Axiom {
    HK1,
    HK2,
    HK3,
    Antisymmetry,
    FuzzyInequality,
    ZeroMaximal,
    CollapseMonotone,
    CollapseZero,
};

std::string_view to_string(Axiom axiom);

struct Violation {
    Axiom axiom;
    std::vector<Element> witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// `passed` is true iff `violations` is empty. `informational` carries
/// consequences that are reported but do not affect the verdict.
struct ValidationReport {
    bool passed = true;
    std::vector<Violation> violations;
    std::vector<Violation> informational;

    void add(Axiom axiom, std::vector<Element> witness)
    {
        passed = false;
        violations.push_back({axiom, std::move(witness)});
    }
};

struct ValidationOptions {
    /// Also require x<y and y<x to imply x = y.
    bool strict_antisymmetry = false;
};

/// A*B: union of a*b over a in A, b in B. Throws InputError(EmptySubset).
Subset set_star(const HyperBCK& alg, Subset a, Subset b);

/// x < y iff O is in x*y.
bool hyper_order(const HyperBCK& alg, Element x, Element y);
bool hyper_order(const HyperBCK& alg, std::string_view x, std::string_view y);

/// A < B iff every a in A has some b in B with a < b. Throws on empty input.
bool set_order(const HyperBCK& alg, Subset a, Subset b);

/// Checks HK1-HK3 over all triples and reports every violating witness,
/// HK1 and HK2 as (x, y, z) and HK3 as (x), in lexicographic order.
ValidationReport validate_hyper_bck(const HyperBCK& alg, ValidationOptions options = {});

/// Fail-fast form of validate_hyper_bck.
bool is_hyper_bck(const HyperBCK& alg, ValidationOptions options = {});

/// O in S and x*y contained in S for all x, y in S. Throws on empty S.
bool is_subalgebra(const HyperBCK& alg, Subset s);

/// The restricted table on a star-closed S, relabelled in carrier order.
/// Throws InputError(NotSubalgebra).
HyperBCK subalgebra(const HyperBCK& alg, Subset s);

/// Positions of the members of S in carrier order: result[k] is the k-th
/// element of S, i.e. the inclusion map of subalgebra(alg, S).
std::vector<Element> members(Subset s);

} // namespace hbck

#endif // HBCK_HYPER_BCK_HPP
