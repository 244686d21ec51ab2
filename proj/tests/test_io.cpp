#include "support.hpp"

#include "hbck/error.hpp"
#include "hbck/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace hbck;
using support::q;

namespace {

ErrorCode code_of(std::string_view text)
{
    try {
        io::parse_structure(text);
    } catch (const InputError& e) {
        return e.code();
    }
    FAIL("expected an input error");
    return ErrorCode::Syntax;
}

const char* const kC2 = R"({
  "carrier": ["1", "2"],
  "zero": "1",
  "table": {"1,1": ["1"], "1,2": ["1"], "2,1": ["2"], "2,2": ["1", "2"]},
  "mu": {"1": "1", "2": "1/2"}
})";

} // namespace

TEST_SUITE("cli-io") {

TEST_CASE("parse a fuzzy structure document")
{
    const auto s = io::parse_structure(kC2);
    REQUIRE(std::holds_alternative<FuzzyHyperBCK>(s));
    CHECK(std::get<FuzzyHyperBCK>(s) == chain_example(2));
    CHECK(io::as_fuzzy(s) == chain_example(2));
}

TEST_CASE("crisp documents lift with mu identically one")
{
    const auto s = io::parse_structure(R"({"carrier":["O"],"zero":"O","table":{"O,O":["O"]}})");
    REQUIRE(std::holds_alternative<HyperBCK>(s));
    CHECK(io::algebra_of(s) == trivial_algebra("O"));
    CHECK(io::as_fuzzy(s).mu(0) == FuzzyValue::one());
}

TEST_CASE("render is deterministic and parses back")
{
    const auto c3 = chain_example(3);
    const auto pretty = io::render_structure(c3);
    CHECK(pretty == io::render_structure(c3));
    CHECK(pretty.back() == '\n');
    CHECK(std::get<FuzzyHyperBCK>(io::parse_structure(pretty)) == c3);
    const auto compact = io::render_structure(c3, io::Layout::Compact);
    CHECK(compact.find('\n') == std::string::npos);
    CHECK(std::get<FuzzyHyperBCK>(io::parse_structure(compact)) == c3);
    CHECK(compact.find("\"mu\":{\"1\":\"1\",\"2\":\"1/2\",\"3\":\"1/3\"}") != std::string::npos);
}

TEST_CASE("round trip over the generated corpus")
{
    for (const auto& alg : support::corpus_upto(3, CorpusPolicy::Raw)) {
        REQUIRE(std::get<HyperBCK>(io::parse_structure(io::render_structure(alg))) == alg);
        REQUIRE(std::get<HyperBCK>(io::parse_structure(io::render_structure(alg, io::Layout::Compact))) == alg);
    }
    for (const auto& f : support::fuzzy_corpus(support::corpus_upto(2)))
        REQUIRE(std::get<FuzzyHyperBCK>(io::parse_structure(io::render_structure(f))) == f);
}

TEST_CASE("error codes")
{
    CHECK(code_of("{") == ErrorCode::Syntax);
    CHECK(code_of("[]") == ErrorCode::Syntax);
    CHECK(code_of(R"({"zero":"O","table":{}})") == ErrorCode::MissingField);
    CHECK(code_of(R"({"carrier":["O"],"table":{"O,O":["O"]}})") == ErrorCode::MissingField);
    CHECK(code_of(R"({"carrier":["O"],"zero":"O"})") == ErrorCode::MissingField);
    CHECK(code_of(R"({"carrier":["O"],"zero":"X","table":{"O,O":["O"]}})") == ErrorCode::UnknownLabel);
    CHECK(code_of(R"({"carrier":["O","O"],"zero":"O","table":{}})") == ErrorCode::DuplicateLabel);
    CHECK(code_of(R"({"carrier":["O"],"zero":"O","table":{"O,O":[]}})") == ErrorCode::EmptyCell);
    CHECK(code_of(R"({"carrier":["O"],"zero":"O","table":{"O,O":["Q"]}})") == ErrorCode::UnknownLabel);
    CHECK(code_of(R"({"carrier":["O","a"],"zero":"O","table":{"O,O":["O"]}})") == ErrorCode::NonTotalTable);
    CHECK(code_of(R"({"carrier":["O"],"zero":"O","table":{"O,O":["O"]},"mu":{"O":"2/x"}})") ==
          ErrorCode::BadRational);
    CHECK(code_of(R"({"carrier":["O"],"zero":"O","table":{"O,O":["O"]},"mu":{"O":"3/2"}})") ==
          ErrorCode::MuOutOfRange);
    CHECK(code_of(R"({"carrier":["O","a"],"zero":"O","table":{"O,O":["O"],"O,a":["O"],"a,O":["a"],"a,a":["O"]},)"
                  R"("mu":{"O":"1"}})") == ErrorCode::MuIncomplete);
}

TEST_CASE("errors carry a location")
{
    const std::string text = "{\n  \"carrier\": [\"O\"],\n  \"zero\": \"O\",\n  \"table\": {\"O,O\": []}\n}\n";
    try {
        io::parse_structure(text);
        FAIL("expected an input error");
    } catch (const InputError& e) {
        CHECK(e.code() == ErrorCode::EmptyCell);
        CHECK(e.line() == 4);
        CHECK(e.column() > 0);
        CHECK(std::string(e.what()).find("empty hyperoperation cell 'O,O'") != std::string::npos);
    }
    try {
        io::parse_structure("{\n  \"carrier\": [\"O\"\n}");
        FAIL("expected an input error");
    } catch (const InputError& e) {
        CHECK(e.code() == ErrorCode::Syntax);
        CHECK(e.line() == 3);
    }
}

TEST_CASE("morphism documents")
{
    const auto c2 = chain_example(2);
    const FuzzyHom f{c2, c2, {0, 0}};
    const auto text = io::render_morphism(f);
    const auto doc = io::parse_morphism(text);
    CHECK(io::as_fuzzy(doc.source) == c2);
    CHECK(io::as_fuzzy(doc.target) == c2);
    CHECK(doc.map == ElementMap{0, 0});

    const auto dir = std::filesystem::temp_directory_path() / "hbck_io_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream(dir / "c2.json") << kC2;
    }
    const auto by_path =
        io::parse_morphism(R"({"source":"c2.json","target":"c2.json","map":{"1":"1","2":"2"}})", dir);
    CHECK(io::as_fuzzy(by_path.source) == c2);
    CHECK(by_path.map == ElementMap{0, 1});

    auto morphism_code = [&](std::string_view t) {
        try {
            io::parse_morphism(t, dir);
        } catch (const InputError& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(morphism_code(R"({"source":"c2.json","target":"c2.json","map":{"1":"1"}})") == ErrorCode::NonTotalTable);
    CHECK(morphism_code(R"({"source":"c2.json","target":"c2.json","map":{"1":"1","2":"9"}})") ==
          ErrorCode::UnknownLabel);
    CHECK(morphism_code(R"({"source":"missing.json","target":"c2.json","map":{}})") == ErrorCode::Io);
    CHECK(morphism_code(R"({"target":"c2.json","map":{}})") == ErrorCode::MissingField);
    CHECK_THROWS_AS(io::read_file(dir / "nope.json"), InputError);
    std::filesystem::remove_all(dir);
}

} // TEST_SUITE
