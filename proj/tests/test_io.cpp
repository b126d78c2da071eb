#include <doctest.h>

#include <sstream>

#include "autonet/dot.hpp"
#include "autonet/netdoc.hpp"
#include "autonet/rules.hpp"

using namespace autonet;

namespace {

std::string fixture(const char* name) { return std::string(AUTONET_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("table documents") {
    const Network swap_net = parse_network_document(
        R"({"q":2,"n":2,"format":"table","table":["00","10","01","11"]})");
    CHECK(swap_net == Network(2, 2, {0b00, 0b10, 0b01, 0b11}));

    try {
        parse_network_document(R"({"q":2,"n":2,"format":"table","table":["00","10","01"]})");
        FAIL("expected DocumentError");
    } catch (const DocumentError& e) {
        CHECK(std::string(e.what()).find("expected 4 entries") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_network_document(R"({"q":2,"n":2,"format":"table","table":["00","10","01","21"]})"),
                    DocumentError);
    CHECK_THROWS_AS(parse_network_document(R"({"q":2,"n":2,"format":"wat","table":[]})"), DocumentError);
    CHECK_THROWS_AS(parse_network_document("{"), DocumentError);
    CHECK_THROWS_AS(parse_network_document(R"({"n":2,"format":"table","table":[]})"), DocumentError);
}

TEST_CASE("rules documents expand to the same network as their tables") {
    const Network neg = parse_network_document(R"({"q":2,"n":2,"format":"rules","rules":["!x1","!x2"]})");
    CHECK(neg == Network(2, 2, {0b11, 0b10, 0b01, 0b00}));
    CHECK(neg == load_network(fixture("negation2.json")));
    CHECK(neg == parse_network_document(network_document(neg)));

    CHECK_THROWS_AS(parse_network_document(R"({"q":3,"n":1,"format":"rules","rules":["x1"]})"),
                    DocumentError);
    CHECK_THROWS_AS(parse_network_document(R"({"q":2,"n":1,"format":"rules","rules":["x2"]})"),
                    DocumentError);
}

TEST_CASE("canonical save round-trips byte-stably") {
    const Network fig2 = load_network(fixture("fig2.json"));
    const std::string doc = network_document(fig2);
    CHECK(parse_network_document(doc) == fig2);
    CHECK(network_document(parse_network_document(doc)) == doc);
}

TEST_CASE("rule parsing honors precedence") {
    // x1 & !x2 | x3 parses as (x1 & !x2) | x3
    const RuleExpr e = parse_rule("x1 & !x2 | x3");
    REQUIRE(e.kind == RuleExpr::Kind::Or);
    CHECK(e.operands[0].kind == RuleExpr::Kind::And);
    CHECK(e.operands[1].kind == RuleExpr::Kind::Var);
    for (state_t x = 0; x < 8; ++x) {
        const int x1 = (x >> 2) & 1, x2 = (x >> 1) & 1, x3 = x & 1;
        CHECK(eval_rule(e, x, 3) == ((x1 & (1 - x2)) | x3));
    }

    const RuleExpr xor_self = parse_rule("x2 ^ x2");
    for (state_t x = 0; x < 4; ++x) CHECK(eval_rule(xor_self, x, 2) == 0);

    const RuleExpr paren = parse_rule("!(x1 | x2) ^ 1");
    for (state_t x = 0; x < 4; ++x) {
        const int x1 = (x >> 1) & 1, x2 = x & 1;
        CHECK(eval_rule(paren, x, 2) == ((1 - (x1 | x2)) ^ 1));
    }
}

TEST_CASE("rule parse errors carry byte offsets") {
    try {
        parse_rule("x1 &");
        FAIL("expected RuleParseError");
    } catch (const RuleParseError& e) {
        CHECK(e.offset() == 4);
    }
    try {
        parse_rule("(x1 | x2");
        FAIL("expected RuleParseError");
    } catch (const RuleParseError& e) {
        CHECK(e.offset() == 8);
    }
    CHECK_THROWS_AS(parse_rule("x0"), RuleParseError);
    CHECK_THROWS_AS(parse_rule("x1 x2"), RuleParseError);
    CHECK_THROWS_AS(parse_rule("y1"), RuleParseError);
    CHECK_THROWS_AS(parse_rule(""), RuleParseError);
}

TEST_CASE("arrangement and spec documents") {
    const Arrangement x3 = load_arrangement(fixture("x3.json"));
    CHECK(x3.cubes().size() == 2);
    CHECK(x3.contains_point(0b100));
    CHECK_FALSE(x3.contains_point(0b001));

    const ArrangementNetworkSpec spec = load_spec(fixture("fig2_spec.json"));
    CHECK(spec.free_choice == std::map<int, FreeChoice>{{2, FreeChoice::Negate}});
    const ArrangementNetworkSpec again = parse_spec_document(spec_document(spec));
    CHECK(again.free_choice == spec.free_choice);
    CHECK(again.arrangement.cubes() == spec.arrangement.cubes());

    CHECK_THROWS_AS(parse_arrangement_document(R"({"n":2,"cubes":[{"x1":0},{"x1":1}]})"), DocumentError);
    CHECK_THROWS_AS(parse_arrangement_document(R"({"n":2,"cubes":[]})"), DocumentError);
    CHECK_THROWS_AS(parse_spec_document(R"({"n":2,"cubes":[{"x1":0}],"free_choice":{"x2":"flip"}})"),
                    DocumentError);
}

TEST_CASE("dot export styles unreachable fixed points gray") {
    const Network fig2 = load_network(fixture("fig2.json"));
    std::ostringstream out;
    write_transition_graph_dot(out, fig2);
    const std::string dot = out.str();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"001\" [color=gray, fontcolor=gray];") != std::string::npos);
    CHECK(dot.find("\"011\" [color=gray, fontcolor=gray];") != std::string::npos);
    CHECK(dot.find("\"000\" -> \"010\" [dir=both];") != std::string::npos);
    CHECK(dot.find("\"000\" -> \"100\";") != std::string::npos);

    std::ostringstream full;
    write_transition_graph_dot(full, fig2, {true});
    CHECK(full.str().find("\"000\" -> \"110\"") != std::string::npos);
}
