#include <doctest.h>

#include "ndp/diagram.hpp"
#include "ndp/fractal.hpp"
#include "ndp/report.hpp"
#include "ndp/shelling.hpp"
#include "support.hpp"

using namespace ndp;
using namespace ndptest;

TEST_CASE("text parsing") {
    IdealDocument doc = parse_document("# a comment\nnvars 3\nx1^2 x2\nx2 x3^2\n");
    CHECK(doc.nvars == 3);
    REQUIRE(doc.gens.size() == 2);
    CHECK(doc.gens[0] == std::vector<int>{2, 1, 0});
    CHECK(doc.gens[1] == std::vector<int>{0, 1, 2});

    // nvars inferred from the largest index when not declared
    CHECK(parse_document("x1 x4\n").nvars == 4);
    // the unit monomial
    CHECK(to_ideal(parse_document("nvars 2\n1\n")).is_unit());
    // zero ideal: no generator lines
    CHECK(to_ideal(parse_document("nvars 2\n")).is_zero());

    CHECK_THROWS_AS(parse_document("nvars 2\nx3\n"), ParseError);
    CHECK_THROWS_AS(parse_document("y1\n"), ParseError);
    CHECK_THROWS_AS(parse_document("x1^-2\n"), ParseError);
}

TEST_CASE("json parsing is strict") {
    IdealDocument doc = parse_document(
        R"({"schema": 1, "nvars": 3, "gens": [[3,0,0],[0,3,0],[0,0,3]]})");
    CHECK(to_ideal(doc) == bracket_power(3, 3));

    CHECK_THROWS_AS(parse_document(R"({"nvars": 2, "gens": [], "extra": 1})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"schema": 2, "nvars": 2, "gens": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"gens": []})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"nvars": 2, "gens": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"nvars": 2, "gens": [[1,-1]]})"), ParseError);
}

TEST_CASE("serialization round-trips") {
    std::mt19937_64 rng(808);
    for (int it = 0; it < 40; ++it) {
        MonomialIdeal I = random_ideal(rng, 4, 6, 4);
        IdealDocument doc = from_ideal(I, "sample");
        std::string text = serialize_text(doc);
        std::string json = serialize_json(doc);
        CHECK(parse_document(text) == doc);
        CHECK(parse_document(json) == doc);
        // serializer output is a fixed point
        CHECK(serialize_text(parse_document(text)) == text);
        CHECK(serialize_json(parse_document(json)) == json);
    }
}

TEST_CASE("cmd_check dispatch and verdicts") {
    CheckParams p;
    p.d = 3;
    p.p = 2;

    Report sf = cmd_check(from_ideal(mk(6, {"x1 x2 x3", "x4 x5 x6"})), p);
    CHECK_FALSE(sf.overall_verdict());
    CHECK(sf.results[0].method == "cubic-squarefree");

    Report prim = cmd_check(from_ideal(power_of_maximal(4, 3)), p);
    CHECK(prim.overall_verdict());
    CHECK(prim.results[0].method == "cubic-primary");

    CheckParams deep;
    deep.d = 3;
    deep.p = 4;
    Report oracle = cmd_check(from_ideal(power_of_maximal(4, 3)), deep);
    CHECK(oracle.overall_verdict());
    CHECK(oracle.results[0].method == "oracle");
    CHECK(oracle.betti.has_value());

    CheckParams fast;
    fast.method = "fast";
    fast.d = 7;
    fast.p = 2;
    Report fr = cmd_check(from_ideal(sier3(7)), fast);
    CHECK(fr.overall_verdict());
    CHECK(fr.results[0].method == "dual-graph");

    // degree mismatch is decisive
    CheckParams wrong;
    wrong.d = 4;
    wrong.p = 2;
    CHECK_FALSE(cmd_check(from_ideal(power_of_maximal(3, 3)), wrong).overall_verdict());
}

TEST_CASE("cli verdicts equal library verdicts") {
    std::mt19937_64 rng(717);
    for (int it = 0; it < 25; ++it) {
        MonomialIdeal I = random_primary_equigen(rng, 3, 3, 0.5);
        CheckParams p;
        p.d = 3;
        p.p = 2;
        for (const char* m : {"auto", "oracle", "locality"}) {
            p.method = m;
            CHECK(cmd_check(from_ideal(I), p).overall_verdict() ==
                  satisfies_ndp(I, 3, 2).holds);
        }
    }
}

TEST_CASE("report json is deterministic apart from timing") {
    CheckParams p;
    p.d = 7;
    p.p = 2;
    auto strip = [](nlohmann::json j) {
        j.erase("timing_ms");
        return j;
    };
    nlohmann::json a = strip(cmd_check(from_ideal(sier3(7), "sier3(7)"), p).to_json());
    nlohmann::json b = strip(cmd_check(from_ideal(sier3(7), "sier3(7)"), p).to_json());
    CHECK(a == b);
    CHECK(a["schema"] == 1);
    CHECK(a["input"]["name"] == "sier3(7)");
    CHECK(a["results"][0]["verdict"] == true);
}

TEST_CASE("cmd_analyze") {
    Report rep = cmd_analyze(from_ideal(sier3(6)));
    CHECK(rep.overall_verdict());
    CHECK(rep.reg == 8);
    REQUIRE(rep.betti.has_value());
    CHECK(rep.results.size() == 3); // certificate, oracle, agreement

    Report bad = cmd_analyze(from_ideal(to_ideal(parse_document(
        "nvars 3\nx1^3\nx2^3\nx3^3\nx1^2 x2\nx1^2 x3\nx1 x2 x3\n"))));
    CHECK_FALSE(bad.results[0].verdict);
    // the structural refutation and the oracle must agree
    CHECK(bad.results[2].verdict);
}

TEST_CASE("cmd_gen families") {
    GenParams g;
    g.family = "fractal";
    g.n = 3;
    g.d = 6;
    CHECK(to_ideal(cmd_gen(g)) == sier3(6));

    GenParams s;
    s.family = "sharp";
    s.n = 3;
    s.d = 5;
    s.p = 2;
    CHECK(to_ideal(cmd_gen(s)) == truncate(bracket_power(3, 3), 5));

    GenParams f4;
    f4.family = "fractal";
    f4.n = 4;
    f4.p = 2;
    f4.r = 1;
    CHECK(to_ideal(cmd_gen(f4)) == product(maximal_ideal(4), bracket_power(4, 2)));

    GenParams pw;
    pw.family = "power";
    pw.n = 2;
    pw.d = 3;
    CHECK(to_ideal(cmd_gen(pw)) == power_of_maximal(2, 3));

    GenParams bad;
    bad.family = "nope";
    CHECK_THROWS_AS(cmd_gen(bad), PreconditionError);
}

TEST_CASE("cmd_shelling") {
    MonomialIdeal mm2 = product(maximal_ideal(3), bracket_power(3, 2));
    Report ok = cmd_shelling(from_ideal(mm2), from_ideal(power_of_maximal(3, 3)));
    CHECK(ok.overall_verdict());
    CHECK(ok.results[0].method == "noshell-decision");

    Report no = cmd_shelling(from_ideal(sier3(6)), from_ideal(power_of_maximal(3, 6)),
                             "search");
    CHECK_FALSE(no.overall_verdict());
    CHECK(no.results[0].details["status"] == "impossible");

    // decide mode on non-certified input errors out
    CHECK_THROWS_AS(cmd_shelling(from_ideal(mk(2, {"x1^2"})),
                                 from_ideal(power_of_maximal(2, 2)), "decide"),
                    Error);
    // auto mode falls back to the search
    Report fb = cmd_shelling(from_ideal(mk(2, {"x1^2"})),
                             from_ideal(power_of_maximal(2, 2)), "auto");
    CHECK(fb.overall_verdict());
    CHECK(fb.results[0].method == "bfs-search");
}

TEST_CASE("cmd_dual") {
    Report rep = cmd_dual(from_ideal(mk(2, {"x1 x2"})));
    CHECK(rep.results[0].details["dual"]["gens"].size() == 2);
    std::string facets = dual_facets_text(from_ideal(polarize(sier3(6)).ideal));
    CHECK(facets.find("x18") != std::string::npos);

    CHECK_THROWS_AS(cmd_dual(from_ideal(mk(2, {"x1^2"}))), NotSquarefreeError);
}

TEST_CASE("diagram svg") {
    std::string svg = render_triangle_svg(sier3(7));
    // 36 monomials of degree 7: 27 black generators, 9 red gaps
    std::size_t red = 0, total = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++total;
        pos += 7;
    }
    pos = 0;
    while ((pos = svg.find("#cc2222", pos)) != std::string::npos) {
        ++red;
        pos += 7;
    }
    CHECK(total == 36);
    CHECK(red == 9);

    // x^5 y z sits in row 5 at column 1.5: cx = 24 + 28*1.5, cy = 24 + 28*5
    CHECK(svg.find("cx=\"66.0\" cy=\"164.0\" r=\"6.0\"") != std::string::npos);

    CHECK(render_triangle_svg(power_of_maximal(3, 4)).find("#cc2222") ==
          std::string::npos);
    CHECK_THROWS_AS(render_triangle_svg(power_of_maximal(2, 2)), PreconditionError);
    CHECK_THROWS_AS(render_triangle_svg(mk(3, {"x1", "x2^2"})), NotEquigeneratedError);
}

TEST_CASE("betti table json triples") {
    nlohmann::json j = betti_to_json(graded_betti(power_of_maximal(3, 2)));
    REQUIRE(j.size() == 3);
    CHECK(j[0] == nlohmann::json({0, 2, 6}));
    CHECK(j[1] == nlohmann::json({1, 3, 8}));
    CHECK(j[2] == nlohmann::json({2, 4, 3}));
}
