#include "hbck/construction.hpp"

#include "hbck/error.hpp"

#include <algorithm>
#include <sstream>

namespace hbck {

namespace {

std::string describe_partition(const HyperBCK& alg, const Congruence& theta)
{
    std::ostringstream os;
    os << "{";
    for (std::size_t b = 0; b < theta.blocks().size(); ++b) {
        os << (b ? ", " : "") << "{";
        bool first = true;
        for (auto x : theta.blocks()[b]) {
            os << (first ? "" : " ") << alg.carrier().label(x);
            first = false;
        }
        os << "}";
    }
    os << "}";
    return os.str();
}

void require_fuzzy_hom(const FuzzyHom& f, const char* what)
{
    if (!is_hom(f)) {
        throw InputError(ErrorCode::NotHom, std::string(what) + " is not a homomorphism");
    }
    if (!is_fuzzy_hom(f)) {
        throw InputError(ErrorCode::NotFuzzyHom, std::string(what) + " is not a fuzzy homomorphism");
    }
}

void require_parallel(const FuzzyHom& f, const FuzzyHom& g)
{
    require_fuzzy_hom(f, "first morphism");
    require_fuzzy_hom(g, "second morphism");
    if (!(f.source == g.source) || !(f.target == g.target)) {
        throw InputError(ErrorCode::Mismatch, "morphisms must share source and target");
    }
}

} // namespace

Congruence::Congruence(std::size_t carrier_size, std::vector<Subset> blocks)
    : blocks_(std::move(blocks)), block_of_(carrier_size)
{
    Subset seen;
    for (const auto& b : blocks_) {
        if (b.empty() || b.intersects(seen)) {
            throw InputError(ErrorCode::InvalidArgument, "blocks must be non-empty and disjoint");
        }
        seen |= b;
    }
    if (seen != Subset::full(carrier_size)) {
        throw InputError(ErrorCode::InvalidArgument, "blocks must cover the carrier");
    }
    std::sort(blocks_.begin(), blocks_.end(), [](Subset a, Subset b) { return a.front() < b.front(); });
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        for (auto x : blocks_[i]) {
            block_of_[x] = i;
        }
    }
}

Congruence Congruence::discrete(std::size_t carrier_size)
{
    std::vector<Subset> blocks;
    for (Element x = 0; x < carrier_size; ++x) {
        blocks.push_back(Subset::singleton(x));
    }
    return Congruence(carrier_size, std::move(blocks));
}

Congruence Congruence::total(std::size_t carrier_size)
{
    return Congruence(carrier_size, {Subset::full(carrier_size)});
}

Congruence Congruence::kernel(const ElementMap& map)
{
    std::vector<Subset> blocks;
    std::vector<Element> values;
    for (Element x = 0; x < map.size(); ++x) {
        auto it = std::find(values.begin(), values.end(), map[x]);
        if (it == values.end()) {
            values.push_back(map[x]);
            blocks.push_back(Subset::singleton(x));
        } else {
            blocks[static_cast<std::size_t>(it - values.begin())].insert(x);
        }
    }
    return Congruence(map.size(), std::move(blocks));
}

bool Congruence::refines(const Congruence& coarser) const noexcept
{
    return std::all_of(blocks_.begin(), blocks_.end(), [&](Subset b) {
        return b.subset_of(coarser.blocks()[coarser.block_of(b.front())]);
    });
}

Congruence meet(const Congruence& a, const Congruence& b)
{
    if (a.carrier_size() != b.carrier_size()) {
        throw InputError(ErrorCode::Mismatch, "congruences on different carriers");
    }
    std::vector<Subset> blocks;
    for (auto x : a.blocks()) {
        for (auto y : b.blocks()) {
            if (auto both = x & y; !both.empty()) {
                blocks.push_back(both);
            }
        }
    }
    return Congruence(a.carrier_size(), std::move(blocks));
}

namespace {

// Set of blocks met by x*y, as a mask over block indices.
Subset block_image(const HyperBCK& alg, const Congruence& theta, Element x, Element y)
{
    Subset out;
    for (auto t : alg.star(x, y)) {
        out.insert(theta.block_of(t));
    }
    return out;
}

} // namespace

bool quotient_well_defined(const HyperBCK& alg, const Congruence& theta)
{
    const auto n = alg.size();
    for (Element x = 0; x < n; ++x) {
        const auto rx = theta.blocks()[theta.block_of(x)].front();
        for (Element y = 0; y < n; ++y) {
            const auto ry = theta.blocks()[theta.block_of(y)].front();
            if (block_image(alg, theta, x, y) != block_image(alg, theta, rx, ry)) {
                return false;
            }
        }
    }
    return true;
}

HyperBCK quotient(const HyperBCK& alg, const Congruence& theta)
{
    if (theta.carrier_size() != alg.size()) {
        throw InputError(ErrorCode::Mismatch, "congruence is on a different carrier");
    }
    if (!quotient_well_defined(alg, theta)) {
        throw InputError(ErrorCode::InvalidArgument, "quotient hyperoperation is not well defined");
    }
    std::vector<std::string> labels;
    for (const auto& block : theta.blocks()) {
        std::string label;
        for (auto x : block) {
            label += (label.empty() ? "" : "|") + alg.carrier().label(x);
        }
        labels.push_back(std::move(label));
    }
    std::vector<Subset> table;
    for (const auto& bx : theta.blocks()) {
        for (const auto& by : theta.blocks()) {
            table.push_back(block_image(alg, theta, bx.front(), by.front()));
        }
    }
    return HyperBCK(Carrier(std::move(labels), theta.block_of(alg.zero())), std::move(table));
}

bool is_regular(const HyperBCK& alg, const Congruence& theta)
{
    return quotient_well_defined(alg, theta) && is_hyper_bck(quotient(alg, theta));
}

std::vector<Congruence> enumerate_regular_congruences(const HyperBCK& alg, std::size_t max_size)
{
    const auto n = alg.size();
    if (n > max_size) {
        throw InputError(ErrorCode::SizeBound, "congruence enumeration refused: carrier of " + std::to_string(n) +
                                                   " elements exceeds the bound " + std::to_string(max_size));
    }
    std::vector<Congruence> out;
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i)).
    std::vector<std::size_t> rgs(n, 0);
    auto emit = [&] {
        const auto count = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<Subset> blocks(count);
        for (Element x = 0; x < n; ++x) {
            blocks[rgs[x]].insert(x);
        }
        Congruence theta(n, std::move(blocks));
        if (is_regular(alg, theta)) {
            out.push_back(std::move(theta));
        }
    };
    auto recurse = [&](auto& self, std::size_t pos, std::size_t top) -> void {
        if (pos == n) {
            emit();
            return;
        }
        for (std::size_t v = 0; v <= top + 1; ++v) {
            rgs[pos] = v;
            self(self, pos + 1, std::max(top, v));
        }
    };
    if (n == 1) {
        emit();
    } else {
        recurse(recurse, 1, 0);
    }
    return out;
}

FuzzyHyperBCK terminal()
{
    return FuzzyHyperBCK(trivial_algebra("O"), {FuzzyValue::zero()});
}

ConstructionResult product(std::span<const FuzzyHyperBCK> factors)
{
    if (factors.empty()) {
        throw InputError(ErrorCode::InvalidArgument, "product of an empty family; use terminal()");
    }
    std::size_t total = 1;
    for (const auto& f : factors) {
        total *= f.size();
        if (total > kMaxCarrier) {
            throw InputError(ErrorCode::SizeBound, "product carrier exceeds " + std::to_string(kMaxCarrier));
        }
    }
    const auto k = factors.size();
    // Mixed radix, last factor fastest.
    auto decode = [&](std::size_t index) {
        std::vector<Element> comps(k);
        for (std::size_t i = k; i-- > 0;) {
            comps[i] = index % factors[i].size();
            index /= factors[i].size();
        }
        return comps;
    };
    auto encode = [&](const std::vector<Element>& comps) {
        std::size_t index = 0;
        for (std::size_t i = 0; i < k; ++i) {
            index = index * factors[i].size() + comps[i];
        }
        return index;
    };

    std::vector<std::string> labels;
    std::vector<FuzzyValue> mu;
    std::vector<std::vector<Element>> tuples;
    for (std::size_t t = 0; t < total; ++t) {
        auto comps = decode(t);
        std::string label = "(";
        FuzzyValue m = FuzzyValue::one();
        for (std::size_t i = 0; i < k; ++i) {
            label += (i ? ";" : "") + factors[i].alg().carrier().label(comps[i]);
            m = min(m, factors[i].mu(comps[i]));
        }
        labels.push_back(label + ")");
        mu.push_back(m);
        tuples.push_back(std::move(comps));
    }
    std::vector<Element> zero_comps(k);
    for (std::size_t i = 0; i < k; ++i) {
        zero_comps[i] = factors[i].alg().zero();
    }

    std::vector<Subset> table;
    table.reserve(total * total);
    for (std::size_t x = 0; x < total; ++x) {
        for (std::size_t y = 0; y < total; ++y) {
            // Cartesian product of the component cells.
            std::vector<Subset> cells(k);
            for (std::size_t i = 0; i < k; ++i) {
                cells[i] = factors[i].alg().star(tuples[x][i], tuples[y][i]);
            }
            Subset cell;
            std::vector<Element> comps(k);
            auto fill = [&](auto& self, std::size_t i) -> void {
                if (i == k) {
                    cell.insert(encode(comps));
                    return;
                }
                for (auto c : cells[i]) {
                    comps[i] = c;
                    self(self, i + 1);
                }
            };
            fill(fill, 0);
            table.push_back(cell);
        }
    }

    FuzzyHyperBCK object(HyperBCK(Carrier(std::move(labels), encode(zero_comps)), std::move(table)), std::move(mu));
    ConstructionResult result{object, {}, {"product", {factors.begin(), factors.end()}, {}}, std::nullopt, 0};
    for (std::size_t i = 0; i < k; ++i) {
        ElementMap proj(total);
        for (std::size_t t = 0; t < total; ++t) {
            proj[t] = tuples[t][i];
        }
        result.legs.push_back({"p" + std::to_string(i), FuzzyHom{object, factors[i], std::move(proj)}});
    }
    return result;
}

FuzzyHom mediate_product(const ConstructionResult& prod, std::span<const FuzzyHom> cone)
{
    if (cone.size() != prod.legs.size()) {
        throw InputError(ErrorCode::Mismatch, "cone has " + std::to_string(cone.size()) + " legs, product has " +
                                                  std::to_string(prod.legs.size()) + " factors");
    }
    for (std::size_t i = 0; i < cone.size(); ++i) {
        require_fuzzy_hom(cone[i], "cone leg");
        if (!(cone[i].source == cone.front().source) || !(cone[i].target == prod.legs[i].hom.target)) {
            throw InputError(ErrorCode::Mismatch, "cone leg " + std::to_string(i) + " does not match the factor");
        }
    }
    const auto& source = cone.front().source;
    ElementMap phi(source.size());
    for (Element x = 0; x < source.size(); ++x) {
        std::size_t index = 0;
        for (std::size_t i = 0; i < cone.size(); ++i) {
            index = index * prod.legs[i].hom.target.size() + cone[i].map[x];
        }
        phi[x] = index;
    }
    FuzzyHom out{source, prod.object, std::move(phi)};
    if (!is_hom(out)) {
        const auto& src = source.alg();
        for (Element x = 0; x < src.size(); ++x) {
            for (Element y = 0; y < src.size(); ++y) {
                if (image(out.map, src.star(x, y)) != prod.object.alg().star(out.map[x], out.map[y])) {
                    throw ClaimViolation("the tupling of a cone is a homomorphism into the product",
                                         "x=" + src.carrier().label(x) + " y=" + src.carrier().label(y) +
                                             ": image of x*y is a proper part of phi(x)*phi(y)");
                }
            }
        }
        throw ClaimViolation("the tupling of a cone is a homomorphism into the product", "zero not preserved");
    }
    if (!is_fuzzy_hom(out)) {
        throw ClaimViolation("the tupling of a cone is a fuzzy homomorphism", "mu inequality");
    }
    return out;
}

ConstructionResult equalizer(const FuzzyHom& f, const FuzzyHom& g)
{
    require_parallel(f, g);
    const auto& src = f.source;
    Subset agree;
    for (Element x = 0; x < src.size(); ++x) {
        if (f.map[x] == g.map[x]) {
            agree.insert(x);
        }
    }
    // f and g fix O, so the agreement set is never empty.
    if (!is_subalgebra(src.alg(), agree)) {
        std::ostringstream witness;
        for (auto x : agree) {
            for (auto y : agree) {
                if (!src.alg().star(x, y).subset_of(agree)) {
                    witness << "x=" << src.alg().carrier().label(x) << " y=" << src.alg().carrier().label(y)
                            << " leaves the agreement set";
                    throw ClaimViolation("agreement set of a parallel pair is a subalgebra", witness.str());
                }
            }
        }
        throw ClaimViolation("agreement set of a parallel pair is a subalgebra", "zero not in agreement set");
    }
    auto object = restrict(src, agree);
    ConstructionResult result{object, {}, {"equalizer", {}, {f, g}}, std::nullopt, 0};
    result.legs.push_back({"inclusion", FuzzyHom{object, src, members(agree)}});
    return result;
}

FuzzyHom mediate_equalizer(const ConstructionResult& eq, const FuzzyHom& h)
{
    const auto& f = eq.provenance.morphisms.at(0);
    const auto& g = eq.provenance.morphisms.at(1);
    require_fuzzy_hom(h, "equalizing morphism");
    if (!(h.target == f.source)) {
        throw InputError(ErrorCode::Mismatch, "morphism does not land in the equalized object");
    }
    if (compose(f.map, h.map) != compose(g.map, h.map)) {
        throw InputError(ErrorCode::Mismatch, "morphism does not equalize the pair");
    }
    const auto& inclusion = eq.legs.front().hom.map;
    ElementMap delta(h.source.size());
    for (Element x = 0; x < h.source.size(); ++x) {
        delta[x] = static_cast<Element>(std::find(inclusion.begin(), inclusion.end(), h.map[x]) - inclusion.begin());
    }
    return {h.source, eq.object, std::move(delta)};
}

ConstructionResult coequalizer(const FuzzyHom& f, const FuzzyHom& g, std::size_t max_size)
{
    require_parallel(f, g);
    const auto& target = f.target;
    const auto& k = target.alg();
    const auto regular = enumerate_regular_congruences(k, max_size);

    auto rho = Congruence::total(k.size());
    std::size_t candidates = 0;
    for (const auto& theta : regular) {
        bool identifies = true;
        for (Element a = 0; a < f.source.size(); ++a) {
            if (!theta.related(f.map[a], g.map[a])) {
                identifies = false;
                break;
            }
        }
        if (identifies) {
            ++candidates;
            rho = meet(rho, theta);
        }
    }
    if (candidates == 0) {
        throw ClaimViolation("the total relation is a regular congruence identifying f(a) and g(a)",
                             "no regular congruence found on " + std::to_string(k.size()) + " elements");
    }
    if (!is_regular(k, rho)) {
        const bool well_defined = quotient_well_defined(k, rho);
        throw ClaimViolation("the intersection of coequalizing regular congruences is regular",
                             "rho = " + describe_partition(k, rho) +
                                 (well_defined ? " has a quotient violating the hyper BCK axioms"
                                               : " does not induce a well-defined quotient operation"));
    }

    auto quot = quotient(k, rho);
    std::vector<FuzzyValue> mu(rho.blocks().size(), FuzzyValue::zero());
    for (std::size_t b = 0; b < rho.blocks().size(); ++b) {
        for (auto x : rho.blocks()[b]) {
            mu[b] = max(mu[b], target.mu(x));
        }
    }
    FuzzyHyperBCK object(std::move(quot), std::move(mu));
    ElementMap pi(k.size());
    for (Element x = 0; x < k.size(); ++x) {
        pi[x] = rho.block_of(x);
    }
    ConstructionResult result{object, {}, {"coequalizer", {}, {f, g}}, rho, candidates};
    result.legs.push_back({"projection", FuzzyHom{target, object, std::move(pi)}});
    return result;
}

FuzzyHom mediate_coequalizer(const ConstructionResult& coeq, const FuzzyHom& phi)
{
    const auto& f = coeq.provenance.morphisms.at(0);
    const auto& g = coeq.provenance.morphisms.at(1);
    require_fuzzy_hom(phi, "coequalizing morphism");
    if (!(phi.source == f.target)) {
        throw InputError(ErrorCode::Mismatch, "morphism does not start at the coequalized object");
    }
    if (compose(phi.map, f.map) != compose(phi.map, g.map)) {
        throw InputError(ErrorCode::Mismatch, "morphism does not coequalize the pair");
    }
    const auto& rho = *coeq.congruence;
    const auto& k = phi.source.alg();
    ElementMap psi(rho.blocks().size());
    for (std::size_t b = 0; b < rho.blocks().size(); ++b) {
        const auto& block = rho.blocks()[b];
        psi[b] = phi.map[block.front()];
        for (auto x : block) {
            if (phi.map[x] != psi[b]) {
                throw ClaimViolation("a coequalizing morphism is constant on the blocks of rho",
                                     "phi separates " + k.carrier().label(block.front()) + " and " +
                                         k.carrier().label(x));
            }
        }
        if (phi.target.mu(psi[b]) < coeq.object.mu(b)) {
            throw ClaimViolation("the induced morphism satisfies the fuzzy inequality",
                                 "block " + coeq.object.alg().carrier().label(b));
        }
    }
    FuzzyHom out{coeq.object, phi.target, std::move(psi)};
    if (!is_hom(out)) {
        throw ClaimViolation("the induced morphism is a homomorphism", "psi on the quotient");
    }
    return out;
}

ConstructionResult pullback(const FuzzyHom& f, const FuzzyHom& g)
{
    require_fuzzy_hom(f, "first morphism");
    require_fuzzy_hom(g, "second morphism");
    if (!(f.target == g.target)) {
        throw InputError(ErrorCode::Mismatch, "pullback needs a common target");
    }
    const std::vector<FuzzyHyperBCK> factors{f.source, g.source};
    const auto prod = product(factors);
    const auto eq = equalizer(compose(f, prod.legs[0].hom), compose(g, prod.legs[1].hom));
    const auto& inclusion = eq.legs.front().hom;
    ConstructionResult result{eq.object, {}, {"pullback", {}, {f, g}}, std::nullopt, 0};
    result.legs.push_back({"pA", compose(prod.legs[0].hom, inclusion)});
    result.legs.push_back({"pB", compose(prod.legs[1].hom, inclusion)});
    return result;
}

FuzzyHom mediate_pullback(const ConstructionResult& pb, const FuzzyHom& qa, const FuzzyHom& qb)
{
    const auto& f = pb.provenance.morphisms.at(0);
    const auto& g = pb.provenance.morphisms.at(1);
    require_fuzzy_hom(qa, "first cone leg");
    require_fuzzy_hom(qb, "second cone leg");
    if (!(qa.source == qb.source) || !(qa.target == f.source) || !(qb.target == g.source)) {
        throw InputError(ErrorCode::Mismatch, "cone does not match the cospan");
    }
    if (compose(f.map, qa.map) != compose(g.map, qb.map)) {
        throw InputError(ErrorCode::Mismatch, "square does not commute");
    }
    const std::vector<FuzzyHyperBCK> factors{f.source, g.source};
    const auto prod = product(factors);
    const std::vector<FuzzyHom> cone{qa, qb};
    const auto phi = mediate_product(prod, cone);
    const auto eq = equalizer(compose(f, prod.legs[0].hom), compose(g, prod.legs[1].hom));
    auto delta = mediate_equalizer(eq, phi);
    return {delta.source, pb.object, std::move(delta.map)};
}

} // namespace hbck
