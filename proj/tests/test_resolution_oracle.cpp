#include <doctest.h>

#include "ndp/fractal.hpp"
#include "support.hpp"

using namespace ndp;
using namespace ndptest;

TEST_CASE("lcm lattice small cases") {
    LcmLattice L = lcm_lattice(maximal_ideal(2));
    CHECK(L.size() == 4); // 1, x, y, xy

    LcmLattice L2 = lcm_lattice(power_of_maximal(2, 2));
    CHECK(L2.size() == 7); // 1, x^2, xy, y^2, x^2y, xy^2, x^2y^2
    CHECK(L2.index_of(mono(2, "x1^2 x2")) >= 0);
    CHECK(L2.index_of(mono(2, "x1")) == -1);
}

TEST_CASE("lcm lattice closure equals brute-force subset enumeration") {
    std::mt19937_64 rng(2024);
    std::vector<MonomialIdeal> samples = {power_of_maximal(3, 2), sier3(3),
                                          bracket_power(4, 2)};
    for (int it = 0; it < 20; ++it) samples.push_back(random_ideal(rng, 3, 6, 4));
    for (const auto& I : samples) {
        LcmLattice L = lcm_lattice(I);
        std::vector<Monomial> brute = brute_force_lattice(I);
        REQUIRE(L.size() == static_cast<int>(brute.size()));
        for (const Monomial& m : brute) CHECK(L.index_of(m) >= 0);
    }
}

TEST_CASE("lattice budget error") {
    CHECK_THROWS_AS(lcm_lattice(power_of_maximal(3, 4), 10), BudgetExceededError);
    CHECK_THROWS_AS(lcm_lattice(MonomialIdeal::zero(2)), PreconditionError);
}

TEST_CASE("Koszul baseline: graded Betti of the maximal ideal") {
    for (int n = 2; n <= 4; ++n) {
        BettiTable t = graded_betti(maximal_ideal(n));
        long long binom = n;
        for (int i = 0; i < n; ++i) {
            CHECK(t.total(i) == binom); // C(n, i+1)
            binom = binom * (n - i - 1) / (i + 2);
        }
        // row i concentrated in degree i+1
        for (const auto& e : t.entries()) CHECK(e.multidegree.degree() == e.row + 1);
    }
}

TEST_CASE("m^2 in three variables: 6, 8, 3 in degrees 2, 3, 4") {
    BettiTable t = graded_betti(power_of_maximal(3, 2));
    auto by = t.by_total_degree();
    CHECK(by[{0, 2}] == 6);
    CHECK(by[{1, 3}] == 8);
    CHECK(by[{2, 4}] == 3);
    CHECK(by.size() == 3);
}

TEST_CASE("two disjoint cubics: the single syzygy sits in degree 6") {
    MonomialIdeal I = mk(6, {"x1 x2 x3", "x4 x5 x6"});
    BettiTable t = graded_betti(I);
    auto by = t.by_total_degree();
    CHECK(by[{0, 3}] == 2);
    CHECK(by[{1, 6}] == 1);
    CHECK(by.size() == 2);
}

TEST_CASE("hand-enumerable syzygies of (x^2, xy, y^3)") {
    BettiTable t = graded_betti(mk(2, {"x1^2", "x1 x2", "x2^3"}));
    auto by = t.by_total_degree();
    CHECK(by[{0, 2}] == 2);
    CHECK(by[{0, 3}] == 1);
    CHECK(by[{1, 3}] == 1);
    CHECK(by[{1, 4}] == 1);
    CHECK(by.size() == 4);
}

TEST_CASE("single generator has only beta_0") {
    BettiTable t = graded_betti(mk(3, {"x1^2 x2"}));
    REQUIRE(t.entries().size() == 1);
    CHECK(t.entries()[0].row == 0);
    CHECK(t.entries()[0].rank == 1);
    BettiTable s = strand_betti(mk(3, {"x1^2 x2"}));
    CHECK(tables_equal(t, s));
}

TEST_CASE("dual-oracle agreement on fixed and random ideals") {
    std::mt19937_64 rng(11);
    std::vector<MonomialIdeal> samples = {
        maximal_ideal(3),
        power_of_maximal(3, 2),
        mk(6, {"x1 x2 x3", "x4 x5 x6"}),
        mk(2, {"x1^2", "x1 x2", "x2^3"}),
        sier3(4),
        sier3(5),
        truncate(bracket_power(3, 3), 5),
    };
    for (int it = 0; it < 40; ++it) samples.push_back(random_ideal(rng, 3, 7, 4));
    for (int it = 0; it < 10; ++it) samples.push_back(random_ideal(rng, 4, 6, 3));
    for (const auto& I : samples) {
        BettiTable g = graded_betti(I);
        BettiTable s = strand_betti(I);
        CHECK(tables_equal(g, s));
    }
}

TEST_CASE("serial reference and OpenMP driver agree") {
    std::mt19937_64 rng(21);
    std::vector<MonomialIdeal> samples = {sier3(5), power_of_maximal(3, 3)};
    for (int it = 0; it < 15; ++it) samples.push_back(random_ideal(rng, 3, 6, 4));
    for (const auto& I : samples) {
        OracleOptions two;
        two.threads = 2;
        CHECK(tables_equal(graded_betti_serial(I), graded_betti(I, two)));
        CHECK(tables_equal(strand_betti_serial(I), strand_betti(I, two)));
    }
}

TEST_CASE("rational and prime-field ranks agree on the paper corpus") {
    OracleOptions fp;
    fp.field = Field::fp(32003);
    OracleOptions f2;
    f2.field = Field::fp(2);
    for (const auto& I :
         {power_of_maximal(3, 2), sier3(3), sier3(6), truncate(bracket_power(3, 3), 5),
          mk(6, {"x1 x2 x3", "x4 x5 x6"}),
          sum(product(bracket_power(4, 2), maximal_ideal(4)), mk(4, {"x1 x2 x3"}))}) {
        BettiTable q = graded_betti(I);
        CHECK(q.by_total_degree() == graded_betti(I, fp).by_total_degree());
        CHECK(q.by_total_degree() == graded_betti(I, f2).by_total_degree());
    }
}

TEST_CASE("field parsing") {
    CHECK(Field::parse("q").rational);
    CHECK(Field::parse("f32003").prime == 32003);
    CHECK(Field::parse("fp").prime == 32003);
    CHECK_THROWS_AS(Field::parse("f32004"), FieldError);
    CHECK_THROWS_AS(Field::parse("z5"), FieldError);
}

TEST_CASE("t_s and regularity") {
    MonomialIdeal m3 = power_of_maximal(3, 3);
    for (int s = 0; s <= 2; ++s) CHECK(t_s(m3, s) == 3 + s);
    CHECK(regularity(m3) == 3);
    CHECK_FALSE(t_s(mk(3, {"x1^2"}), 1).has_value());
    CHECK(regularity(sier3(7)) == 10);
}

TEST_CASE("regularity equals one plus the top socle degree for primary ideals") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 25; ++it) {
        int d = 2 + static_cast<int>(rng() % 3);
        MonomialIdeal I = random_primary_equigen(rng, 3, d, 0.6);
        int top = 0;
        for (const Monomial& w : socle_monomials(I)) top = std::max(top, w.degree());
        CHECK(regularity(I) == 1 + top);
    }
}

TEST_CASE("satisfies_ndp") {
    // m^d is N_{d,n} for every n, d in reach
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d)
            CHECK(satisfies_ndp(power_of_maximal(n, d), d, n).holds);

    // the four-variable counterexample fails N_{3,2}
    MonomialIdeal bad = sum(product(bracket_power(4, 2), maximal_ideal(4)),
                            mk(4, {"x1 x2 x3"}));
    NdpVerdict v = satisfies_ndp(bad, 3, 2);
    CHECK_FALSE(v.holds);
    REQUIRE_FALSE(v.offenses.empty());
    CHECK(v.offenses[0].s == 1);
    CHECK(v.offenses[0].degree > 4);

    // vacuous and degenerate cases
    CHECK(satisfies_ndp(MonomialIdeal::zero(3), 3, 2).holds);
    CHECK(satisfies_ndp(mk(3, {"x1 x2 x3"}), 3, 2).holds);
    CHECK_FALSE(satisfies_ndp(mk(2, {"x1", "x2^2"}), 1, 2).holds);
}

// Truncation at e = t_s - s: linear for s steps, t_r unchanged wherever
// Tor_r(I) is nonzero, and a linear tail t_r(J) = e + r where Tor_r(I)
// vanishes but Tor_r(J) does not.  (The unchanged-rows clause needs the
// Tor_r(I) != 0 proviso: I = (x, yz) truncated at t_0 = 2 gives an ideal
// with t_2 = 4 even though Tor_2(I) = 0.)
TEST_CASE("truncation principle on random ideals") {
    std::mt19937_64 rng(1312);
    int tested = 0;
    for (int it = 0; it < 30 && tested < 20; ++it) {
        MonomialIdeal I = random_ideal(rng, 3, 5, 4);
        BettiTable tI = graded_betti(I);
        int pd = tI.max_row_present();
        for (int s = 0; s <= pd; ++s) {
            auto ts = tI.t(s);
            if (!ts) continue;
            int e = *ts - s;
            if (e < 0) continue;
            MonomialIdeal J = truncate(I, e);
            BettiTable tJ = graded_betti(J);
            for (int r = s; r <= I.nvars() - 1; ++r) {
                auto tir = tI.t(r);
                auto tjr = tJ.t(r);
                if (tir)
                    CHECK(tjr == tir);
                else if (tjr)
                    CHECK(*tjr == e + r);
            }
            for (int r = 0; r < s; ++r) {
                auto tjr = tJ.t(r);
                REQUIRE(tjr.has_value());
                CHECK(*tjr == e + r);
            }
            ++tested;
        }
    }
    CHECK(tested >= 10);
}

TEST_CASE("restriction inheritance of N_{d,p}") {
    std::mt19937_64 rng(909);
    int inherited = 0;
    for (int it = 0; it < 60; ++it) {
        int d = 2 + static_cast<int>(rng() % 2);
        MonomialIdeal I = random_primary_equigen(rng, 3, d, 0.7);
        NdpVerdict v = satisfies_ndp(I, d, 2);
        if (!v.holds) continue;
        ++inherited;
        Monomial m = random_monomial(rng, 3, d + 1 + static_cast<int>(rng() % 3));
        CHECK(satisfies_ndp(below(I, m), d, 2).holds);
        std::vector<int> K = {0, static_cast<int>(1 + rng() % 2)};
        CHECK(satisfies_ndp(restrict_vars(I, K), d, 2).holds);
    }
    CHECK(inherited >= 5);
}
