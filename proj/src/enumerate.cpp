#include "hbck/enumerate.hpp"

#include "hbck/error.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace hbck {

namespace {

enum class Tri { False, True, Unknown };

// Row-major table under construction; an empty cell is unassigned (real cells
// are never empty). The zero is element 0.
class PartialTable {
public:
    explicit PartialTable(std::size_t n) : n_(n), cells_(n * n) {}

    std::size_t size() const noexcept { return n_; }
    Subset cell(Element x, Element y) const noexcept { return cells_[x * n_ + y]; }
    void set(std::size_t index, Subset value) noexcept { cells_[index] = value; }
    std::vector<Subset> cells() const { return cells_; }

    Tri below(Element a, Subset rhs) const noexcept
    {
        bool unknown = false;
        for (auto b : rhs) {
            const auto c = cell(a, b);
            if (c.empty()) {
                unknown = true;
            } else if (c.contains(0)) {
                return Tri::True;
            }
        }
        return unknown ? Tri::Unknown : Tri::False;
    }

    // Union of a*b over A x B, or nullopt-as-empty when some cell is missing.
    Subset product(Subset a, Subset b) const noexcept
    {
        Subset acc;
        for (auto x : a) {
            for (auto y : b) {
                const auto c = cell(x, y);
                if (c.empty()) {
                    return {};
                }
                acc |= c;
            }
        }
        return acc;
    }

    Tri set_below(Subset lhs, Subset rhs) const noexcept
    {
        bool unknown = false;
        for (auto a : lhs) {
            switch (below(a, rhs)) {
            case Tri::False: return Tri::False;
            case Tri::Unknown: unknown = true; break;
            case Tri::True: break;
            }
        }
        return unknown ? Tri::Unknown : Tri::True;
    }

    // False only when some axiom instance is definitely violated.
    bool consistent() const noexcept
    {
        for (Element x = 0; x < n_; ++x) {
            for (Element y = 0; y < n_; ++y) {
                const auto xy = cell(x, y);
                for (Element z = 0; z < n_; ++z) {
                    const auto xz = cell(x, z);
                    const auto yz = cell(y, z);
                    if (!xy.empty() && !xz.empty() && !yz.empty()) {
                        const auto lhs = product(xz, yz);
                        if (!lhs.empty() && set_below(lhs, xy) == Tri::False) {
                            return false;
                        }
                    }
                    if (!xy.empty() && !xz.empty()) {
                        const auto left = product(xy, Subset::singleton(z));
                        const auto right = product(xz, Subset::singleton(y));
                        if (!left.empty() && !right.empty() && left != right) {
                            return false;
                        }
                    }
                }
            }
            const auto row = product(Subset::singleton(x), Subset::full(n_));
            if (!row.empty() && set_below(row, Subset::singleton(x)) == Tri::False) {
                return false;
            }
        }
        return true;
    }

private:
    std::size_t n_;
    std::vector<Subset> cells_;
};

void search(PartialTable& table, std::size_t index, std::vector<std::vector<Subset>>& out)
{
    const auto n = table.size();
    if (index == n * n) {
        out.push_back(table.cells());
        return;
    }
    const auto limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
        table.set(index, Subset(bits));
        if (table.consistent()) {
            search(table, index + 1, out);
        }
    }
    table.set(index, Subset{});
}

std::vector<std::vector<Subset>> search_first_cell(std::size_t n, std::uint64_t first_bits)
{
    std::vector<std::vector<Subset>> out;
    PartialTable table(n);
    table.set(0, Subset(first_bits));
    if (table.consistent()) {
        search(table, 1, out);
    }
    return out;
}

std::vector<Subset> relabel(const HyperBCK& alg, const std::vector<Element>& perm)
{
    // perm[old] = new
    const auto n = alg.size();
    std::vector<Subset> table(n * n);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            Subset cell;
            for (auto t : alg.star(x, y)) {
                cell.insert(perm[t]);
            }
            table[perm[x] * n + perm[y]] = cell;
        }
    }
    return table;
}

} // namespace

HyperBCK canonical_form(const HyperBCK& alg)
{
    const auto n = alg.size();
    std::vector<Element> others;
    for (Element e = 0; e < n; ++e) {
        if (e != alg.zero()) {
            others.push_back(e);
        }
    }
    std::vector<Subset> best;
    std::vector<Element> order = others;
    do {
        std::vector<Element> perm(n);
        perm[alg.zero()] = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
            perm[order[k]] = k + 1;
        }
        auto table = relabel(alg, perm);
        if (best.empty() || table < best) {
            best = std::move(table);
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return HyperBCK(Carrier::indexed(n, 0), std::move(best));
}

bool isomorphic_fixing_zero(const HyperBCK& a, const HyperBCK& b)
{
    return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

ModelCorpus enumerate_hyper_bck(std::size_t n, CorpusPolicy policy, unsigned jobs)
{
    if (n < 1 || n > kMaxExhaustiveSize) {
        throw InputError(ErrorCode::SizeBound, "exhaustive enumeration supports sizes 1.." +
                                                   std::to_string(kMaxExhaustiveSize) + ", got " +
                                                   std::to_string(n));
    }
    const std::uint64_t first_values = (std::uint64_t{1} << n) - 1;
    std::vector<std::vector<std::vector<Subset>>> parts(first_values);
    const auto workers = std::clamp<std::uint64_t>(jobs, 1, first_values);
    if (workers == 1) {
        for (std::uint64_t v = 0; v < first_values; ++v) {
            parts[v] = search_first_cell(n, v + 1);
        }
    } else {
        std::vector<std::jthread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t v = w; v < first_values; v += workers) {
                    parts[v] = search_first_cell(n, v + 1);
                }
            });
        }
    }

    ModelCorpus corpus{n, policy, {}};
    const auto carrier = Carrier::indexed(n, 0);
    for (auto& part : parts) {
        for (auto& table : part) {
            HyperBCK alg(carrier, std::move(table));
            if (policy == CorpusPolicy::UpToIso && !(canonical_form(alg) == alg)) {
                continue;
            }
            corpus.models.push_back(std::move(alg));
        }
    }
    return corpus;
}

FuzzyHyperBCK chain_example(std::size_t k)
{
    if (k < 1) {
        throw InputError(ErrorCode::InvalidArgument, "chain length must be at least 1");
    }
    if (k > kMaxCarrier) {
        throw InputError(ErrorCode::SizeBound, "chain length exceeds " + std::to_string(kMaxCarrier));
    }
    // Element i carries the label i+1.
    std::vector<std::string> labels;
    std::vector<FuzzyValue> mu;
    for (std::size_t i = 1; i <= k; ++i) {
        labels.push_back(std::to_string(i));
        mu.emplace_back(1, i);
    }
    std::vector<Subset> table;
    table.reserve(k * k);
    for (std::size_t x = 1; x <= k; ++x) {
        for (std::size_t y = 1; y <= k; ++y) {
            Subset cell;
            if (y == 1) {
                cell.insert(x - 1);
            } else if (x <= y) {
                for (std::size_t t = 1; t <= x; ++t) {
                    cell.insert(t - 1);
                }
            } else {
                for (std::size_t t = 2; t <= y; ++t) {
                    cell.insert(t - 1);
                }
            }
            table.push_back(cell);
        }
    }
    return FuzzyHyperBCK(HyperBCK(Carrier(std::move(labels), 0), std::move(table)), std::move(mu));
}

std::vector<FuzzyHyperBCK> enumerate_fuzzy_assignments(const HyperBCK& alg, std::span<const FuzzyValue> grid)
{
    if (grid.empty()) {
        throw InputError(ErrorCode::InvalidArgument, "fuzzy value grid must be non-empty");
    }
    const auto n = alg.size();
    std::vector<FuzzyHyperBCK> out;
    std::vector<std::size_t> digits(n, 0);
    std::vector<FuzzyValue> mu(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) {
            mu[i] = grid[digits[i]];
        }
        FuzzyHyperBCK candidate(alg, mu);
        if (satisfies_fuzzy_inequality(candidate)) {
            out.push_back(std::move(candidate));
        }
        // Odometer with the last element varying fastest.
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < grid.size()) {
                break;
            }
            digits[pos] = 0;
            if (pos == 0) {
                return out;
            }
        }
    }
}

std::vector<FuzzyValue> test_grid()
{
    return {FuzzyValue::zero(), FuzzyValue(1, 4), FuzzyValue(1, 3), FuzzyValue(1, 2),
            FuzzyValue(2, 3),   FuzzyValue(3, 4), FuzzyValue::one()};
}

} // namespace hbck
