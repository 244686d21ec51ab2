#include "cli.hpp"

#include "hbck/construction.hpp"
#include "hbck/enumerate.hpp"
#include "hbck/error.hpp"
#include "hbck/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hbck::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

/// One report record per line.
class Reporter {
public:
    explicit Reporter(std::ostream& out) : out_(out) {}

    void emit(const Json& record) { out_ << record.dump() << '\n'; }

private:
    std::ostream& out_;
};

Json document_json(const FuzzyHyperBCK& f)
{
    return Json::parse(io::render_structure(f, io::Layout::Compact));
}

Json document_json(const io::Structure& s)
{
    return Json::parse(io::render_structure(s, io::Layout::Compact));
}

Json labels_json(const HyperBCK& alg, std::span<const Element> elements)
{
    Json out = Json::array();
    for (auto e : elements)
        out.push_back(alg.carrier().label(e));
    return out;
}

Json subset_json(const HyperBCK& alg, Subset s)
{
    Json out = Json::array();
    for (auto e : s)
        out.push_back(alg.carrier().label(e));
    return out;
}

Json map_json(const FuzzyHom& f)
{
    Json out = Json::object();
    for (Element x = 0; x < f.map.size(); ++x)
        out[f.source.alg().carrier().label(x)] = f.target.alg().carrier().label(f.map[x]);
    return out;
}

Json map_json(const ElementMap& map, const HyperBCK& src, const HyperBCK& dst)
{
    Json out = Json::object();
    for (Element x = 0; x < map.size(); ++x)
        out[src.carrier().label(x)] = dst.carrier().label(map[x]);
    return out;
}

io::Structure load_structure(const std::string& path)
{
    try {
        return io::parse_structure(io::read_file(path));
    } catch (const InputError& e) {
        throw InputError(e.code(), path + ": " + e.what(), e.line(), e.column());
    }
}

FuzzyHom load_morphism(const std::string& path)
{
    try {
        const auto doc = io::parse_morphism(io::read_file(path), fs::path(path).parent_path());
        return {io::as_fuzzy(doc.source), io::as_fuzzy(doc.target), doc.map};
    } catch (const InputError& e) {
        throw InputError(e.code(), path + ": " + e.what(), e.line(), e.column());
    }
}

void emit_report(Reporter& rep, const HyperBCK& alg, const ValidationReport& report)
{
    for (const auto& v : report.violations)
        rep.emit({{"record", "violation"}, {"axiom", to_string(v.axiom)}, {"witness", labels_json(alg, v.witness)}});
    for (const auto& v : report.informational)
        rep.emit({{"record", "note"}, {"axiom", to_string(v.axiom)}, {"witness", labels_json(alg, v.witness)}});
}

int cmd_verify(Reporter& rep, const std::string& path, bool strict)
{
    const auto s = load_structure(path);
    const auto& alg = io::algebra_of(s);
    auto report = validate_hyper_bck(alg, {strict});
    const bool fuzzy = std::holds_alternative<FuzzyHyperBCK>(s);
    if (fuzzy) {
        const auto more = validate_fuzzy(std::get<FuzzyHyperBCK>(s));
        for (const auto& v : more.violations)
            report.add(v.axiom, v.witness);
        report.informational.insert(report.informational.end(), more.informational.begin(),
                                    more.informational.end());
    }
    emit_report(rep, alg, report);
    rep.emit({{"record", "verify"},
              {"file", path},
              {"fuzzy", fuzzy},
              {"passed", report.passed},
              {"violations", report.violations.size()}});
    return report.passed ? kOk : kViolations;
}

int cmd_cut(Reporter& rep, const std::string& path, const std::string& alpha_text)
{
    const auto f = io::as_fuzzy(load_structure(path));
    const auto alpha = FuzzyValue::parse(alpha_text);
    const auto cut = alpha_cut(f, alpha);
    const bool closed = !cut.empty() && is_subalgebra(f.alg(), cut);
    Json record{{"record", "cut"},
                {"alpha", alpha.to_string()},
                {"members", subset_json(f.alg(), cut)},
                {"contains_zero", cut.contains(f.alg().zero())},
                {"subalgebra", closed}};
    if (closed)
        record["object"] = document_json(restrict(f, cut));
    if (!cut.empty() && !closed && is_hyper_bck(f.alg()) && satisfies_fuzzy_inequality(f)) {
        rep.emit(record);
        throw ClaimViolation("every alpha-cut of a fuzzy hyper BCK-algebra is a subalgebra",
                             "alpha = " + alpha.to_string());
    }
    rep.emit(record);
    return closed ? kOk : kViolations;
}

int cmd_hom_check(Reporter& rep, const std::string& path)
{
    const auto f = load_morphism(path);
    Json record{{"record", "hom"}, {"map", map_json(f)}, {"hom", is_hom(f)}};
    if (!is_hom(f)) {
        rep.emit(record);
        return kViolations;
    }
    const bool pointwise = is_fuzzy_hom(f);
    const bool cuts = fuzzy_hom_via_cuts(f.map, f.source, f.target);
    record["fuzzy_hom"] = pointwise;
    record["via_cuts"] = cuts;
    rep.emit(record);
    if (pointwise != cuts)
        throw ClaimViolation("a hom is fuzzy iff it maps every alpha-cut into the alpha-cut", path);
    return pointwise ? kOk : kViolations;
}

int cmd_hom_enumerate(Reporter& rep, const std::string& src_path, const std::string& dst_path)
{
    const auto src = io::as_fuzzy(load_structure(src_path));
    const auto dst = io::as_fuzzy(load_structure(dst_path));
    std::size_t count = 0;
    std::size_t fuzzy = 0;
    for (const auto& m : enumerate_homs(src.alg(), dst.alg())) {
        const bool is_fuzzy = is_fuzzy_hom(m, src, dst);
        ++count;
        fuzzy += is_fuzzy;
        rep.emit({{"record", "hom"}, {"map", map_json(m, src.alg(), dst.alg())}, {"fuzzy_hom", is_fuzzy}});
    }
    rep.emit({{"record", "hom-enumeration"}, {"count", count}, {"fuzzy_count", fuzzy}});
    return kOk;
}

void emit_construction(Reporter& rep, const ConstructionResult& result)
{
    Json record{{"record", result.provenance.kind}, {"object", document_json(result.object)}};
    Json legs = Json::array();
    for (const auto& leg : result.legs)
        legs.push_back({{"name", leg.name}, {"map", map_json(leg.hom)}});
    record["legs"] = std::move(legs);
    if (result.congruence) {
        // Blocks in terms of the coequalized object's labels.
        const auto& k = result.legs.front().hom.source.alg();
        Json blocks = Json::array();
        for (const auto& b : result.congruence->blocks())
            blocks.push_back(subset_json(k, b));
        record["congruence"] = std::move(blocks);
        record["candidates"] = result.candidate_count;
    }
    const auto report = validate_hyper_bck(result.object.alg());
    const auto fuzzy = validate_fuzzy(result.object);
    record["passed"] = report.passed && fuzzy.passed;
    rep.emit(record);
}

int cmd_product(Reporter& rep, const std::vector<std::string>& paths)
{
    std::vector<FuzzyHyperBCK> factors;
    for (const auto& p : paths)
        factors.push_back(io::as_fuzzy(load_structure(p)));
    emit_construction(rep, product(factors));
    return kOk;
}

int cmd_pair(Reporter& rep, const std::string& kind, const std::string& f_path, const std::string& g_path,
             std::size_t max_size)
{
    const auto f = load_morphism(f_path);
    const auto g = load_morphism(g_path);
    if (kind == "equalizer")
        emit_construction(rep, equalizer(f, g));
    else if (kind == "coequalizer")
        emit_construction(rep, coequalizer(f, g, max_size));
    else
        emit_construction(rep, pullback(f, g));
    return kOk;
}

int cmd_enumerate(Reporter& rep, std::size_t size, bool up_to_iso, unsigned jobs)
{
    const auto corpus = enumerate_hyper_bck(size, up_to_iso ? CorpusPolicy::UpToIso : CorpusPolicy::Raw, jobs);
    for (std::size_t i = 0; i < corpus.models.size(); ++i)
        rep.emit({{"record", "model"}, {"index", i}, {"structure", document_json(io::Structure(corpus.models[i]))}});
    rep.emit({{"record", "enumerate"},
              {"size", size},
              {"modulo", up_to_iso ? "iso" : "raw"},
              {"count", corpus.models.size()}});
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite hyper BCK-algebras and fuzzy hyper BCK-algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned jobs = 1;
    app.add_option("--jobs", jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);

    std::string file;
    bool strict = false;
    auto* verify = app.add_subcommand("verify", "Validate a structure document");
    verify->add_option("file", file, "Structure document")->required();
    verify->add_flag("--strict-hk4", strict, "Also require antisymmetry of the hyperorder");

    std::string alpha;
    auto* cut = app.add_subcommand("cut", "Compute an alpha-cut");
    cut->add_option("file", file, "Structure document")->required();
    cut->add_option("--alpha", alpha, "Level as p/q")->required();

    std::string check;
    std::vector<std::string> pair;
    auto* hom = app.add_subcommand("hom", "Check or enumerate homomorphisms");
    auto* check_opt = hom->add_option("--check", check, "Morphism document");
    auto* enum_opt = hom->add_option("--enumerate", pair, "Source and target structures")->expected(2);
    check_opt->excludes(enum_opt);
    hom->require_option(1);

    std::vector<std::string> factors;
    auto* prod = app.add_subcommand("product", "Cartesian product of structures");
    prod->add_option("files", factors, "Structure documents")->required();

    std::string f_path;
    std::string g_path;
    std::size_t max_size = kDefaultCongruenceBound;
    auto* eq = app.add_subcommand("equalizer", "Equalizer of a parallel pair");
    auto* coeq = app.add_subcommand("coequalizer", "Coequalizer of a parallel pair");
    auto* pb = app.add_subcommand("pullback", "Pullback of a cospan");
    for (auto* sub : {eq, coeq, pb}) {
        sub->add_option("f", f_path, "Morphism document")->required();
        sub->add_option("g", g_path, "Morphism document")->required();
    }
    coeq->add_option("--max-size", max_size, "Largest target carrier searched for congruences");

    std::size_t size = 0;
    bool up_to_iso = false;
    auto* en = app.add_subcommand("enumerate", "Enumerate all algebras of a size");
    en->add_option("--size", size, "Carrier size")->required();
    en->add_flag("--up-to-iso", up_to_iso, "One model per zero-fixing isomorphism class");

    std::size_t chain = 0;
    auto* ex = app.add_subcommand("example", "Emit a built-in example structure");
    ex->add_option("--chain", chain, "Chain length")->required();

    Reporter rep(out);
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        rep.emit({{"record", "error"}, {"code", "Usage"}, {"message", e.what()}});
        return kInputError;
    }

    try {
        if (*verify)
            return cmd_verify(rep, file, strict);
        if (*cut)
            return cmd_cut(rep, file, alpha);
        if (*hom)
            return *check_opt ? cmd_hom_check(rep, check) : cmd_hom_enumerate(rep, pair[0], pair[1]);
        if (*prod)
            return cmd_product(rep, factors);
        if (*eq)
            return cmd_pair(rep, "equalizer", f_path, g_path, max_size);
        if (*coeq)
            return cmd_pair(rep, "coequalizer", f_path, g_path, max_size);
        if (*pb)
            return cmd_pair(rep, "pullback", f_path, g_path, max_size);
        if (*en)
            return cmd_enumerate(rep, size, up_to_iso, jobs);
        if (*ex) {
            out << io::render_structure(chain_example(chain), io::Layout::Compact) << '\n';
            return kOk;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        Json record{{"record", "error"}, {"code", to_string(e.code())}, {"message", e.what()}};
        if (e.line() != 0) {
            record["line"] = e.line();
            record["column"] = e.column();
        }
        rep.emit(record);
        return kInputError;
    } catch (const ClaimViolation& e) {
        err << e.what() << '\n';
        rep.emit({{"record", "claim_violation"}, {"claim", e.claim()}, {"witness", e.witness()}});
        return kClaimViolation;
    }
    return kInputError;
}

} // namespace hbck::cli
