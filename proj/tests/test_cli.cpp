#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "cli.hpp"
#include "golden_cases.hpp"
#include "mtc/document.hpp"
#include "mtc/errors.hpp"

using namespace mtc;
using namespace testing;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> with_json(std::vector<std::string> a) {
    a.insert(a.begin(), "--json");
    return a;
}

}  // namespace

// Set MTC_UPDATE_GOLDEN=1 to rewrite the reports after an intended change.
TEST_CASE("golden reports") {
    const bool update = std::getenv("MTC_UPDATE_GOLDEN") != nullptr;
    for (const GoldenCase& c : golden_cases()) {
        INFO(c.name);
        const Run text = run(c.args), json = run(with_json(c.args));
        CHECK(text.code == c.exit_code);
        CHECK(json.code == c.exit_code);
        const std::string tp = fixture_path("golden/" + c.name + ".txt"), jp = fixture_path("golden/" + c.name + ".json");
        if (update) {
            std::ofstream(tp, std::ios::binary) << text.out;
            std::ofstream(jp, std::ios::binary) << json.out;
        }
        CHECK(text.out == read_file(tp));
        CHECK(json.out == read_file(jp));
        // The JSON report carries exactly the text report's content.
        CHECK(cli::render_text(cli::Json::parse(json.out)) == text.out);
    }
}

TEST_CASE("reference values in reports") {
    const auto j = [](std::vector<std::string> a) { return cli::Json::parse(run(with_json(std::move(a))).out); };
    const std::string f12 = fixture_path("code1_code2.txt"), f34 = fixture_path("code3_code4.txt");

    auto info = j({"info", f12, "C1"});
    CHECK(info["schema"] == 1);
    CHECK(info["parameters"] == "[8,6,2]");
    CHECK(info["gpm"] == cli::Json::array({"w + x | w", "0 | w^2 + x"}));
    CHECK(j({"info", fixture_path("zero.txt"), "Z"})["dimension"] == 0);

    auto mt = j({"intersect", f12, "C1", "C2", "--mt"});
    CHECK(mt["intersection"]["gpm"] == cli::Json::array({"w + x + w*x^3 + x^4 | w^2 + x", "0 | w + x^2"}));
    CHECK(mt["intersection"]["parameters"] == "[8,2,6]");
    auto g = j({"intersect", f12, "C1", "C2", "--galois", "1"});
    CHECK(g["intersection"]["dimension"] == 0);
    CHECK(g["rank_table"]["trivial"] == true);
    CHECK(g["rank_table"]["weighted_sum"] == 3);
    auto self = j({"intersect", f12, "C1", "C1gpm"});
    CHECK(self["intersection"]["gpm"] == info["gpm"]);

    CHECK(j({"check", f34, "C4", "--reversible"})["checks"][0]["verdict"] == "true");
    auto c5 = j({"check", f34, "C5", "--reversible"})["checks"][0];
    CHECK(c5["verdict"] == "false");
    CHECK(c5["largest_reversible_subcode"] ==
          cli::Json::array({"1 0 0 1 2 0 0 2 0", "0 1 0 0 1 2 0 0 2", "0 0 1 1 0 1 1 0 0"}));
    auto lcd = j({"check", fixture_path("code6.txt"), "C6", "--lcd", "1"})["checks"][0];
    CHECK(lcd["verdict"] == "true");
    std::vector<std::string> rank_one;
    for (const auto& fct : lcd["factors"])
        if (fct["type"] == cli::Json::array({1})) rank_one.push_back(fct["factor"]);
    CHECK(rank_one == std::vector<std::string>{"1 + x", "w^6 + x", "1 + w^7*x + w^5*x^2 + x^3"});
    CHECK(lcd["weighted_sum"] == 5);
}

TEST_CASE("exit codes and diagnostics") {
    const std::string f12 = fixture_path("code1_code2.txt");
    CHECK(run({"info", f12, "Nope"}).code == 1);
    CHECK(run({"intersect", f12, "C1", "C2", "--mt", "--galois", "0"}).code == 1);
    CHECK(run({"intersect", f12, "L1", "C2", "--mt"}).code == 1);
    CHECK(run({"dual", f12, "C1", "--galois", "2"}).code == 1);
    CHECK(run({"check", f12, "C1", "--reversible"}).code == 1);
    CHECK(run({"check", f12, "C1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"info", "/nonexistent/file.txt", "C1"}).code == 2);
    CHECK(run({"intersect", f12, "C1", "C2", "--linear", "--mt"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("document parser") {
    auto bad = [](const std::string& text, std::size_t line, std::size_t col) {
        INFO(text);
        try {
            parse_document(text);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == col);
        }
    };
    bad("", 1, 1);
    bad("code A\n", 1, 1);
    bad("field GF(6)\ncode A\nmatrix 1 1\n1\n", 1, 7);
    bad("field GF(4)\ncode A\nmatrix 1 3\n1 w q\n", 4, 5);
    bad("field GF(4)\ncode A\nmatrix 2 3\n1 w 1\n", 5, 1);
    bad("field GF(4)\ncode A\nmatrix 1 3\n1 w\n", 4, 1);
    bad("field GF(4)\ncode A\nmt 1\nblocks 2\nshifts w\ngpm\nx + + 1\n", 7, 5);
    bad("field GF(4)\ncode A\nmt 2\nblocks 2\n", 4, 1);
    bad("field GF(4)\ncode A\nmt 2\nblocks 2 1\n", 5, 1);
    bad("field GF(4)\ncode A\nmatrix 1 1\n1\ncode A\nmatrix 1 1\n1\n", 5, 6);
    bad("field GF(4)\ncode A\nfoo\n", 3, 1);
    bad("field GF(4)\ncode A\nmt 1\nblocks 2\nshifts 0\nmatrix 0 2\n", 6, 1);

    CHECK_THROWS_AS(parse_document("field GF(4)\ncode A\nmt 1\nblocks 2\nshifts w\nmatrix 1 2\n1 0\n"), DomainError);
    CHECK_THROWS_AS(parse_document("field GF(4) mod 0 0 1\ncode A\nmatrix 1 1\n1\n"), ParseError);

    CodeDocument d = parse_document("# comment\nfield GF(2^2)\n\ncode A  # trailing\nmatrix 1 2\n1 w\ncode B\nmt 1\nblocks 3\nshifts 1\ngpm\n1 + w*x\n");
    CHECK(d.field().header() == "GF(2^2) mod 1 1 1");
    CHECK(d.blocks().size() == 2);
    CHECK(d.get("A").code.dimension() == 1);
    CHECK(d.get("B").mt->dimension() == 2);
    CHECK(d.get("B").line == 7);
    CHECK_THROWS_AS(d.get("C"), DomainError);
}

TEST_CASE("enumeration budget override") {
    const std::string f6 = fixture_path("code6.txt");
    setenv("MTC_ENUM_BUDGET", "10", 1);
    CHECK(cli::Json::parse(run(with_json({"info", f6, "C6"})).out)["distance"] == "unknown");
    setenv("MTC_ENUM_BUDGET", "abc", 1);
    CHECK(run({"info", f6, "C6"}).code == 1);
    unsetenv("MTC_ENUM_BUDGET");
    CHECK(cli::Json::parse(run(with_json({"info", f6, "C6"})).out)["distance"] == "5");
}
