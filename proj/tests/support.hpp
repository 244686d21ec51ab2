#ifndef HBCK_TESTS_SUPPORT_HPP
#define HBCK_TESTS_SUPPORT_HPP

#include "hbck/construction.hpp"
#include "hbck/enumerate.hpp"
#include "oracle/literal.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace support {

inline oracle::Table to_table(const hbck::HyperBCK& alg)
{
    oracle::Table t;
    t.n = static_cast<int>(alg.size());
    t.zero = static_cast<int>(alg.zero());
    t.cell.assign(alg.size(), std::vector<oracle::Set>(alg.size()));
    for (hbck::Element x = 0; x < alg.size(); ++x)
        for (hbck::Element y = 0; y < alg.size(); ++y)
            for (auto e : alg.star(x, y))
                t.cell[x][y].insert(static_cast<int>(e));
    return t;
}

/// Subset from labels.
inline hbck::Subset labels(const hbck::HyperBCK& alg, std::initializer_list<const char*> names)
{
    hbck::Subset s;
    for (const char* n : names)
        s.insert(alg.carrier().index_of(n));
    return s;
}

inline hbck::FuzzyValue q(std::uint64_t p, std::uint64_t d)
{
    return hbck::FuzzyValue(p, d);
}

inline hbck::FuzzyHyperBCK with_mu(const hbck::HyperBCK& alg, std::vector<hbck::FuzzyValue> mu)
{
    return hbck::FuzzyHyperBCK(alg, std::move(mu));
}

/// Up-to-iso corpus for sizes 1..max_size, concatenated.
inline std::vector<hbck::HyperBCK> corpus_upto(std::size_t max_size,
                                               hbck::CorpusPolicy policy = hbck::CorpusPolicy::UpToIso)
{
    std::vector<hbck::HyperBCK> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
        auto c = hbck::enumerate_hyper_bck(n, policy);
        out.insert(out.end(), c.models.begin(), c.models.end());
    }
    return out;
}

/// Every fuzzy structure over the test grid on the given algebras.
inline std::vector<hbck::FuzzyHyperBCK> fuzzy_corpus(const std::vector<hbck::HyperBCK>& algebras)
{
    const auto grid = hbck::test_grid();
    std::vector<hbck::FuzzyHyperBCK> out;
    for (const auto& a : algebras) {
        auto f = hbck::enumerate_fuzzy_assignments(a, grid);
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

/// Every map src -> dst (all |dst|^|src| of them) satisfying the literal
/// homomorphism definition.
inline std::vector<hbck::ElementMap> oracle_homs(const hbck::HyperBCK& src, const hbck::HyperBCK& dst)
{
    const auto ts = to_table(src);
    const auto td = to_table(dst);
    std::vector<hbck::ElementMap> out;
    oracle::for_each_map(ts.n, td.n, [&](const std::vector<int>& f) {
        if (oracle::is_hom(f, ts, td))
            out.emplace_back(f.begin(), f.end());
    });
    return out;
}

} // namespace support

#endif // HBCK_TESTS_SUPPORT_HPP
