#include <doctest.h>
#include <set>

#include "ndp/fractal.hpp"
#include "ndp/linearity.hpp"
#include "support.hpp"

using namespace ndp;
using namespace ndptest;

namespace {

// the optimality example: all non-square-free cubics on four variables plus abc
MonomialIdeal primecubic_counterexample() {
    return sum(product(bracket_power(4, 2), maximal_ideal(4)), mk(4, {"x1 x2 x3"}));
}

} // namespace

TEST_CASE("dual graph") {
    DualGraph g = dual_graph(power_of_maximal(2, 2));
    CHECK(g.vertices.size() == 3);
    CHECK(g.edges.size() == 2); // x^2 - xy - y^2

    CHECK(dual_graph(mk(6, {"x1 x2 x3", "x4 x5 x6"})).edges.empty());

    DualGraph f = dual_graph(product(maximal_ideal(3), bracket_power(3, 2)));
    CHECK(f.vertices.size() == 9);
    CHECK(f.edges.size() == 18);

    CHECK_THROWS_AS(dual_graph(mk(2, {"x1", "x2^2"})), NotEquigeneratedError);
}

TEST_CASE("dual graph edges are degree-characterized") {
    std::mt19937_64 rng(2718);
    for (int it = 0; it < 40; ++it) {
        MonomialIdeal I = random_primary_equigen(rng, 3, 3, 0.5);
        DualGraph g = dual_graph(I);
        std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
                bool lcm_edge = lcm(g.vertices[i], g.vertices[j]).degree() == 4;
                bool gcd_edge = gcd(g.vertices[i], g.vertices[j]).degree() == 2;
                CHECK(lcm_edge == gcd_edge);
                CHECK(lcm_edge ==
                      (edges.count({static_cast<int>(i), static_cast<int>(j)}) > 0));
            }
    }
}

TEST_CASE("is_linearly_presented") {
    CHECK(is_linearly_presented(power_of_maximal(3, 3)).linearly_presented);
    CHECK(is_linearly_presented(sier3(7)).linearly_presented);
    CHECK(is_linearly_presented(MonomialIdeal::zero(3)).linearly_presented);
    CHECK(is_linearly_presented(mk(3, {"x1 x2 x3"})).linearly_presented);

    LinearityVerdict v =
        is_linearly_presented(mk(5, {"x1 x2 x3", "x1 x2 x4", "x1 x2 x5", "x3 x4 x5"}));
    CHECK_FALSE(v.linearly_presented);
    REQUIRE(v.witness_pair.has_value());
    // the witness pair is itself disconnected under its own lcm
    MonomialIdeal sub = below(mk(5, {"x1 x2 x3", "x1 x2 x4", "x1 x2 x5", "x3 x4 x5"}),
                              lcm(v.witness_pair->first, v.witness_pair->second));
    CHECK_FALSE(is_linearly_presented(sub).linearly_presented);
}

TEST_CASE("path criterion matches the oracle everywhere it runs") {
    std::mt19937_64 rng(515);
    for (int it = 0; it < 60; ++it) {
        int d = 2 + static_cast<int>(rng() % 2);
        MonomialIdeal I = random_primary_equigen(rng, 3, d, 0.55);
        CHECK(is_linearly_presented(I).linearly_presented ==
              satisfies_ndp(I, d, 2).holds);
    }
    for (int it = 0; it < 25; ++it) {
        // non-primary equigenerated samples
        std::vector<Monomial> gens;
        for (const Monomial& w : monomials_of_degree(4, 3))
            if (rng() % 3 == 0) gens.push_back(w);
        MonomialIdeal I = MonomialIdeal::from_generators(4, gens);
        CHECK(is_linearly_presented(I).linearly_presented ==
              satisfies_ndp(I, 3, 2).holds);
    }
}

TEST_CASE("locality check") {
    // on few variables it degenerates to the plain oracle verdict
    MonomialIdeal I = primecubic_counterexample();
    LinearityVerdict vars = locality_check(I, 3, 2, LocalityMode::Vars);
    CHECK_FALSE(vars.linearly_presented);

    CHECK(locality_check(sier3(5), 5, 2, LocalityMode::Vars).linearly_presented);
    CHECK(locality_check(sier3(5), 5, 2, LocalityMode::Lcms).linearly_presented);

    LinearityVerdict lcms = locality_check(I, 3, 2, LocalityMode::Lcms);
    CHECK_FALSE(lcms.linearly_presented);
    REQUIRE(lcms.witness_lcm.has_value());
    CHECK_FALSE(satisfies_ndp(below(I, *lcms.witness_lcm), 3, 2).holds);
}

TEST_CASE("locality agrees with the global oracle on random square-free cubics") {
    std::mt19937_64 rng(626);
    for (int it = 0; it < 12; ++it) {
        std::vector<Monomial> gens;
        for (const Monomial& w : monomials_of_degree(7, 3))
            if (w.is_squarefree() && rng() % 7 == 0) gens.push_back(w);
        if (gens.empty()) continue;
        MonomialIdeal I = MonomialIdeal::from_generators(7, gens);
        bool global = satisfies_ndp(I, 3, 2).holds;
        CHECK(locality_check(I, 3, 2, LocalityMode::Vars).linearly_presented == global);
        CHECK(locality_check(I, 3, 2, LocalityMode::Lcms).linearly_presented == global);
    }
}

TEST_CASE("cubic square-free classification") {
    LinearityVerdict v1 = cubic_squarefree_lp(mk(6, {"x1 x2 x3", "x4 x5 x6"}));
    CHECK_FALSE(v1.linearly_presented);
    CHECK(v1.pattern == 1);

    LinearityVerdict v2 =
        cubic_squarefree_lp(mk(5, {"x1 x2 x3", "x1 x2 x4", "x1 x2 x5", "x3 x4 x5"}));
    CHECK_FALSE(v2.linearly_presented);
    CHECK(v2.pattern == 2);

    CHECK(cubic_squarefree_lp(mk(4, {"x1 x2 x3", "x1 x2 x4"})).linearly_presented);
    CHECK_THROWS_AS(cubic_squarefree_lp(mk(2, {"x1^3"})), NotSquarefreeError);
    CHECK_THROWS_AS(cubic_squarefree_lp(mk(4, {"x1 x2"})), NotEquigeneratedError);
}

TEST_CASE("cubic square-free certifier matches the oracle on sampled 5-variable subsets") {
    // the full 2^10 sweep runs in the acceptance suite; sample here
    std::mt19937_64 rng(343);
    std::vector<Monomial> cubics;
    for (const Monomial& w : monomials_of_degree(5, 3))
        if (w.is_squarefree()) cubics.push_back(w);
    REQUIRE(cubics.size() == 10);
    for (int it = 0; it < 120; ++it) {
        std::vector<Monomial> gens;
        for (const Monomial& w : cubics)
            if (rng() % 2) gens.push_back(w);
        MonomialIdeal I = MonomialIdeal::from_generators(5, gens);
        CHECK(cubic_squarefree_lp(I).linearly_presented == satisfies_ndp(I, 3, 2).holds);
    }
}

TEST_CASE("cubic primary classification") {
    MonomialIdeal bad = primecubic_counterexample();
    LinearityVerdict v = cubic_primary_lp(bad);
    CHECK_FALSE(v.linearly_presented);
    REQUIRE(v.witness_vars.has_value()); // the lone square-free cubic on {a,b,c,d}

    CHECK(cubic_primary_lp(power_of_maximal(4, 3)).linearly_presented);
    CHECK(cubic_primary_lp(product(maximal_ideal(3), bracket_power(3, 2)))
              .linearly_presented);

    // two square-free cubics on the four variables: condition (2) passes
    MonomialIdeal two = sum(product(bracket_power(4, 2), maximal_ideal(4)),
                            mk(4, {"x1 x2 x3", "x1 x2 x4"}));
    CHECK(cubic_primary_lp(two).linearly_presented == satisfies_ndp(two, 3, 2).holds);

    CHECK_THROWS_AS(cubic_primary_lp(mk(3, {"x1 x2 x3"})), NotPrimaryError);
    CHECK_THROWS_AS(cubic_primary_lp(power_of_maximal(3, 2)), NotEquigeneratedError);
}

TEST_CASE("cubic primary certifier matches the oracle on random primary cubics") {
    std::mt19937_64 rng(888);
    for (int it = 0; it < 150; ++it) {
        MonomialIdeal I = random_primary_equigen(rng, 4, 3, 0.45);
        CHECK(cubic_primary_lp(I).linearly_presented == satisfies_ndp(I, 3, 2).holds);
    }
}

TEST_CASE("ndd1 necessary conditions") {
    MonomialIdeal mm2 = product(maximal_ideal(3), bracket_power(3, 2));
    Ndd1Report r = ndd1_necessary(mm2, 3, 2);
    CHECK(r.subset_powers.passed);
    CHECK(r.bracket_product.applicable);
    CHECK(r.bracket_product.passed);
    CHECK_FALSE(r.equals_power.applicable); // p = 2 < min(3, 3)
    CHECK_FALSE(r.refuted());

    // missing x^3: check (1) fails
    std::vector<Monomial> gens;
    for (const Monomial& w : monomials_of_degree(3, 3))
        if (w != mono(3, "x1^3")) gens.push_back(w);
    Ndd1Report miss = ndd1_necessary(MonomialIdeal::from_generators(3, gens), 3, 2);
    CHECK_FALSE(miss.subset_powers.passed);
    CHECK(miss.subset_powers.witness == mono(3, "x1^3"));
    CHECK(miss.refuted());

    // p = d: every proper primary ideal fails (2)
    Ndd1Report prop = ndd1_necessary(mm2, 3, 3);
    CHECK(prop.equals_power.applicable);
    CHECK_FALSE(prop.equals_power.passed);
}

TEST_CASE("oracle N_{d,p} implies all applicable ndd1 containments") {
    std::mt19937_64 rng(41);
    int positives = 0;
    for (int it = 0; it < 80; ++it) {
        int d = 2 + static_cast<int>(rng() % 2);
        MonomialIdeal I = random_primary_equigen(rng, 3, d, 0.8);
        if (!satisfies_ndp(I, d, 2).holds) continue;
        ++positives;
        CHECK_FALSE(ndd1_necessary(I, d, 2).refuted());
    }
    CHECK(positives >= 10);
}
