#include "support.hpp"

#include "hbck/error.hpp"

#include <doctest.h>

#include <random>

using namespace hbck;
using support::q;

namespace {

FuzzyHyperBCK crisp_one(const HyperBCK& alg)
{
    return FuzzyHyperBCK(alg, std::vector<FuzzyValue>(alg.size(), FuzzyValue::one()));
}

// mu_dst(f x) >= mu_src(x), stated pointwise.
bool literal_fuzzy(const ElementMap& f, const FuzzyHyperBCK& src, const FuzzyHyperBCK& dst)
{
    for (Element x = 0; x < src.size(); ++x)
        if (dst.mu(f[x]) < src.mu(x))
            return false;
    return true;
}

} // namespace

TEST_SUITE("morphisms") {

TEST_CASE("homs between the two-element chain and the three-element table")
{
    const auto c2 = chain_example(2).alg();
    const auto c3 = chain_example(3).alg();
    const auto homs = enumerate_homs(c2, c3);
    CHECK(homs == support::oracle_homs(c2, c3));
    CHECK(homs == std::vector<ElementMap>{{0, 0}, {0, 1}});

    CHECK(is_hom(identity_map(2), c2, c2));
    CHECK_FALSE(is_hom({1, 0}, c2, c2));
    CHECK_FALSE(is_hom({0}, c2, c2));
    CHECK_FALSE(is_hom({0, 5}, c2, c2));
}

TEST_CASE("image and compose")
{
    CHECK(image({0, 0, 2}, Subset{0, 1}) == Subset{0});
    CHECK(image({0, 0, 2}, Subset{1, 2}) == Subset{0, 2});
    CHECK(compose(ElementMap{1, 0}, ElementMap{0, 0, 1}) == ElementMap{1, 1, 0});

    const auto c2 = chain_example(2);
    const FuzzyHom id{c2, c2, identity_map(2)};
    CHECK(compose(id, id) == id);
    const FuzzyHom other{terminal(), c2, {0}};
    CHECK_THROWS_AS(compose(other, id), InputError);
}

TEST_CASE("enumerate_homs matches the literal oracle on all pairs up to size 2")
{
    const auto corpus = support::corpus_upto(2, CorpusPolicy::Raw);
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            REQUIRE(enumerate_homs(a, b) == support::oracle_homs(a, b));
}

TEST_CASE("enumerate_homs matches the literal oracle on sampled size-3 pairs")
{
    const auto corpus = enumerate_hyper_bck(3, CorpusPolicy::UpToIso).models;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    for (int i = 0; i < 3000; ++i) {
        const auto& a = corpus[pick(rng)];
        const auto& b = corpus[pick(rng)];
        REQUIRE(enumerate_homs(a, b) == support::oracle_homs(a, b));
    }
}

TEST_CASE("fuzzy homs")
{
    const auto c2 = chain_example(2);
    CHECK(is_fuzzy_hom(identity_map(2), c2, c2));
    CHECK(is_fuzzy_hom(ElementMap{0, 0}, c2, c2));
    const auto low = support::with_mu(c2.alg(), {q(1, 1), q(1, 4)});
    CHECK_FALSE(is_fuzzy_hom(identity_map(2), c2, low));
    CHECK(is_fuzzy_hom(identity_map(2), low, c2));
    CHECK_THROWS_AS(is_fuzzy_hom({1, 0}, c2, c2), InputError);
    CHECK_THROWS_AS(fuzzy_hom_via_cuts({1, 0}, c2, c2), InputError);
    CHECK(enumerate_fuzzy_homs(c2, low) == std::vector<ElementMap>{{0, 0}});
}

TEST_CASE("the cut criterion agrees with the pointwise definition up to size 2")
{
    const auto fuzzy = support::fuzzy_corpus(support::corpus_upto(2, CorpusPolicy::Raw));
    for (const auto& a : fuzzy)
        for (const auto& b : fuzzy)
            for (const auto& m : enumerate_homs(a.alg(), b.alg())) {
                const bool pointwise = literal_fuzzy(m, a, b);
                REQUIRE(is_fuzzy_hom(m, a, b) == pointwise);
                REQUIRE(fuzzy_hom_via_cuts(m, a, b) == pointwise);
            }
}

TEST_CASE("enumerate_fuzzy_homs filters enumerate_homs")
{
    const auto fuzzy = support::fuzzy_corpus(support::corpus_upto(2));
    for (const auto& a : fuzzy)
        for (const auto& b : fuzzy) {
            std::vector<ElementMap> expected;
            for (const auto& m : support::oracle_homs(a.alg(), b.alg()))
                if (literal_fuzzy(m, a, b))
                    expected.push_back(m);
            REQUIRE(enumerate_fuzzy_homs(a, b) == expected);
        }
}

TEST_CASE("bijections and isomorphisms")
{
    CHECK(is_bijective({1, 0, 2}, 3));
    CHECK_FALSE(is_bijective({1, 1, 2}, 3));
    CHECK_FALSE(is_bijective({0, 1}, 3));
    CHECK(inverse({2, 0, 1}) == ElementMap{1, 2, 0});

    const auto c2 = chain_example(2);
    CHECK(is_crisp_iso(identity_map(2), c2.alg(), c2.alg()));
    CHECK(is_fuzzy_iso(identity_map(2), c2, c2));
    const auto other = support::with_mu(c2.alg(), {q(1, 1), q(1, 3)});
    CHECK_FALSE(is_fuzzy_iso(identity_map(2), c2, other));
}

TEST_CASE("fuzzy iso is crisp iso plus preserved mu on bijective homs up to size 2")
{
    const auto fuzzy = support::fuzzy_corpus(support::corpus_upto(2, CorpusPolicy::Raw));
    for (const auto& a : fuzzy)
        for (const auto& b : fuzzy)
            for (const auto& m : enumerate_homs(a.alg(), b.alg())) {
                if (!is_bijective(m, b.size()))
                    continue;
                bool same_mu = true;
                for (Element x = 0; x < a.size(); ++x)
                    same_mu &= a.mu(x) == b.mu(m[x]);
                const auto inv = inverse(m);
                const bool crisp = oracle::is_hom(std::vector<int>(inv.begin(), inv.end()),
                                                  support::to_table(b.alg()), support::to_table(a.alg()));
                REQUIRE(is_crisp_iso(m, a.alg(), b.alg()) == crisp);
                REQUIRE(is_fuzzy_iso(m, a, b) == (crisp && same_mu));
            }
}

TEST_CASE("mono verdicts")
{
    const auto c2 = chain_example(2);
    const auto v = check_mono_equivalence(identity_map(2), c2, c2, 2);
    CHECK(v.crisp_mono);
    CHECK(v.fuzzy_mono);
    CHECK(v.agree());

    // Collapsing C2 onto its zero identifies the two homs C2 -> C2.
    const auto ones = crisp_one(c2.alg());
    const auto w = check_mono_equivalence({0, 0}, c2, ones, 2);
    CHECK_FALSE(w.crisp_mono);
    CHECK_FALSE(w.fuzzy_mono);
    REQUIRE(w.crisp_witness.has_value());
    CHECK(w.crisp_witness->h != w.crisp_witness->g);
    CHECK(compose({0, 0}, w.crisp_witness->h) == compose({0, 0}, w.crisp_witness->g));
    REQUIRE(w.fuzzy_witness.has_value());
    CHECK(is_fuzzy_hom(w.fuzzy_witness->h, FuzzyHyperBCK(w.fuzzy_witness->probe, w.fuzzy_witness->probe_mu), c2));

    const auto low = support::with_mu(c2.alg(), {q(1, 1), q(1, 4)});
    CHECK_THROWS_AS(check_mono_equivalence(identity_map(2), c2, low, 2), InputError);
}

TEST_CASE("crisp mono verdict matches brute force over explicit probes")
{
    const auto probes = support::corpus_upto(2, CorpusPolicy::Raw);
    const auto grid = test_grid();
    for (const auto& src : support::corpus_upto(2))
        for (const auto& dst : support::corpus_upto(2))
            for (const auto& m : enumerate_homs(src, dst)) {
                bool mono = true;
                for (const auto& p : probes) {
                    const auto hs = support::oracle_homs(p, src);
                    for (std::size_t i = 0; i < hs.size(); ++i)
                        for (std::size_t j = 0; j < hs.size(); ++j)
                            if (i != j && compose(m, hs[i]) == compose(m, hs[j]))
                                mono = false;
                }
                const auto v = check_mono_equivalence(m, crisp_one(src), crisp_one(dst), probes, grid);
                REQUIRE(v.crisp_mono == mono);
                REQUIRE(v.agree());
            }
}

TEST_CASE("separation promotes homs")
{
    // A size-3 algebra where {O,a} and {O,b} are both subalgebras, with
    // mu = (1, 1/4, 3/4) and alpha = 1/2.
    bool found = false;
    for (const auto& alg : enumerate_hyper_bck(3, CorpusPolicy::UpToIso).models) {
        if (!is_subalgebra(alg, Subset{0, 1}) || !is_subalgebra(alg, Subset{0, 2}))
            continue;
        const auto host = support::with_mu(alg, {q(1, 1), q(1, 4), q(3, 4)});
        if (!satisfies_fuzzy_inequality(host))
            continue;
        const auto v = separation_promotes(host, Subset{0, 1}, Subset{0, 2}, q(1, 2));
        CHECK(v.hypothesis_holds);
        CHECK(v.conclusion_holds);
        CHECK(v.homs_checked >= 1);
        const auto swapped = separation_promotes(host, Subset{0, 2}, Subset{0, 1}, q(1, 2));
        CHECK_FALSE(swapped.hypothesis_holds);
        found = true;
        break;
    }
    CHECK(found);

    const auto c3 = chain_example(3);
    CHECK_THROWS_AS(separation_promotes(c3, Subset{1, 2}, Subset{0}, q(1, 2)), InputError);
}

TEST_CASE("separation hypothesis implies its conclusion on a corpus sample")
{
    const auto grid = test_grid();
    auto algebras = support::corpus_upto(2);
    const auto three = enumerate_hyper_bck(3, CorpusPolicy::UpToIso).models;
    for (std::size_t i = 0; i < three.size(); i += 40)
        algebras.push_back(three[i]);
    std::size_t applied = 0;
    for (const auto& alg : algebras) {
        const auto full = alg.carrier().all().bits();
        std::vector<Subset> subs;
        for (std::uint64_t s = 1; s <= full; ++s)
            if (is_subalgebra(alg, Subset(s)))
                subs.emplace_back(s);
        if (subs.size() < 2)
            continue;
        for (const auto& f : enumerate_fuzzy_assignments(alg, grid))
            for (const auto& g : subs)
                for (const auto& h : subs) {
                    const auto v = separation_promotes(f, g, h, q(1, 2));
                    if (v.hypothesis_holds) {
                        ++applied;
                        REQUIRE(v.conclusion_holds);
                    }
                }
    }
    CHECK(applied > 0);
}

} // TEST_SUITE
