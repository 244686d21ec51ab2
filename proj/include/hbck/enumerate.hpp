#ifndef HBCK_ENUMERATE_HPP
#define HBCK_ENUMERATE_HPP

#include "hbck/fuzzy.hpp"

#include <span>
#include <vector>

namespace hbck {

enum class CorpusPolicy {
    Raw,
    /// One representative per class under O-fixing relabelling.
    UpToIso,
};

struct ModelCorpus {
    std::size_t size = 0;
    CorpusPolicy modulo = CorpusPolicy::Raw;
    std::vector<HyperBCK> models;
};

/// Largest carrier size enumerated exhaustively.
inline constexpr std::size_t kMaxExhaustiveSize = 3;

/// Every hyper BCK-algebra on the carrier "0".."n-1" with zero "0", in
/// lexicographic order of the row-major table (cells ordered by bitmask).
/// Under UpToIso only tables equal to their canonical form are kept.
/// `jobs` > 1 splits the search by the value of the first cell; the result
/// is identical for every `jobs`. Throws InputError(SizeBound) unless
/// 1 <= n <= kMaxExhaustiveSize.
ModelCorpus enumerate_hyper_bck(std::size_t n, CorpusPolicy policy = CorpusPolicy::Raw, unsigned jobs = 1);

/// Relabels so the zero is "0" and the table is lexicographically least over
/// all O-fixing permutations. Equal outputs iff the inputs are isomorphic via
/// an O-fixing bijection.
HyperBCK canonical_form(const HyperBCK& alg);

bool isomorphic_fixing_zero(const HyperBCK& a, const HyperBCK& b);

/// The chain {1..k}, O = 1, with
///   x*y = {1..x}  if x <= y,
///   x*y = {2..y}  if x > y != 1,
///   x*y = {x}     if y = 1,
/// and mu(x) = 1/x. Throws InputError(InvalidArgument) for k < 1 and
/// InputError(SizeBound) for k > kMaxCarrier.
FuzzyHyperBCK chain_example(std::size_t k);

/// All mu : carrier -> grid satisfying the fuzzy inequality, in
/// lexicographic order of (mu(0), mu(1), ...) by grid position.
/// Throws InputError(InvalidArgument) on an empty grid.
std::vector<FuzzyHyperBCK> enumerate_fuzzy_assignments(const HyperBCK& alg, std::span<const FuzzyValue> grid);

/// {0, 1/4, 1/3, 1/2, 2/3, 3/4, 1}
std::vector<FuzzyValue> test_grid();

} // namespace hbck

#endif // HBCK_ENUMERATE_HPP
