#include "doctest.h"

#include "theta/repdecomp.hpp"

#include <set>

using namespace theta;

namespace {

std::vector<Int> ints(std::vector<long> v) {
    return std::vector<Int>(v.begin(), v.end());
}

} // namespace

TEST_CASE("complete_intersection_series") {
    // 1/(1-t)^2 = 1,2,3,4,...
    CHECK(complete_intersection_series(0, 2, 4) == ints({1, 2, 3, 4, 5}));
    // (1-t^2)/(1-t)^3 = (1+t)/(1-t)^2 = 1,3,5,7,...
    CHECK(complete_intersection_series(1, 3, 4) == ints({1, 3, 5, 7, 9}));
    CHECK(complete_intersection_series(2, 2, 3) == ints({1, 2, 1, 0}));
}

TEST_CASE("harmonics_series examples") {
    auto osp = DualPair::osp(3, 3, 1);
    auto h = harmonics_series(osp, Side::plus, 3);
    CHECK(h.hilbert() == ints({1, 3, 5, 7}));
    for (int k = 0; k <= 3; ++k) CHECK(h.entries.at(k).size() == 1);

    // degree 0 of any pair: single trivial pair of dimension 1
    for (auto pair : {DualPair::osp(5, 5, 2), DualPair::uu(2, 2, 1, 1),
                      DualPair::sp_ostar(2, 2, 1)}) {
        auto g = harmonics_series(pair, Side::minus, 0);
        REQUIRE(g.entries.at(0).size() == 1);
        CHECK(g.hilbert() == ints({1}));
    }

    auto uu = harmonics_series(DualPair::uu(2, 2, 1, 1), Side::plus, 1);
    REQUIRE(uu.entries.at(1).size() == 2); // (alpha,beta) = ((1),()) and ((),(1))
    CHECK(uu.entries.at(1)[0].plus_label == KPrimeLabel{{}, {1}});
    CHECK(uu.entries.at(1)[1].plus_label == KPrimeLabel{{1}, {}});
}

TEST_CASE("harmonics pairing is one-to-one") {
    for (auto pair : {DualPair::osp(5, 5, 2), DualPair::uu(3, 3, 1, 1),
                      DualPair::sp_ostar(3, 3, 2)}) {
        for (Side s : {Side::plus, Side::minus}) {
            auto h = harmonics_series(pair, s, 6);
            std::set<KPrimeLabel> seen;
            for (const auto& [deg, v] : h.entries)
                for (const auto& e : v) {
                    CHECK(e.mult == 1);
                    CHECK(seen.insert(e.minus_label).second); // K'-label occurs once overall
                }
        }
    }
}

TEST_CASE("nullcone_hilbert_check grid") {
    std::vector<DualPair> grid = {DualPair::osp(3, 3, 1), DualPair::osp(5, 5, 2),
                                  DualPair::uu(2, 2, 1, 1), DualPair::uu(3, 3, 1, 1),
                                  DualPair::sp_ostar(2, 2, 1), DualPair::sp_ostar(3, 3, 2)};
    for (const auto& pair : grid)
        for (Side s : {Side::plus, Side::minus}) CHECK(nullcone_hilbert_check(pair, s, 8));
}

TEST_CASE("trivial lift Hilbert values") {
    auto t = decompose_trivial_lift(DualPair::osp(3, 3, 1), 4);
    CHECK(t.hilbert() == ints({1, 9, 25, 49, 81})); // (2k+1)^2

    auto u = decompose_trivial_lift(DualPair::uu(2, 2, 1, 1), 1);
    CHECK(u.hilbert()[1] == 8);

    CHECK(decompose_trivial_lift(DualPair::sp_ostar(2, 2, 1), 0).hilbert() == ints({1}));
}

TEST_CASE("regular holomorphic lift Hilbert values") {
    auto r = decompose_regular_hol_lift(DualPair::osp(3, 3, 1), 2);
    CHECK(r.hilbert() == ints({1, 9, 30})); // C(k+2,2)(2k+1)

    auto s = decompose_regular_hol_lift(DualPair::sp_ostar(2, 2, 1), 1);
    CHECK(s.hilbert()[1] == 16); // 4 * dim of the Sp(4,C) standard

    CHECK_THROWS(decompose_regular_hol_lift(DualPair::uu(3, 3, 1, 2), 2));
}

TEST_CASE("multiplicity freeness through degree 6") {
    std::vector<DualPair> grid = {DualPair::osp(3, 3, 1), DualPair::osp(5, 5, 2),
                                  DualPair::uu(2, 2, 1, 1), DualPair::uu(3, 3, 1, 1),
                                  DualPair::sp_ostar(2, 2, 1), DualPair::sp_ostar(3, 3, 2)};
    for (const auto& pair : grid)
        for (auto dec : {decompose_trivial_lift(pair, 6), decompose_regular_hol_lift(pair, 6)})
            for (const auto& [deg, v] : dec.entries) {
                std::set<std::pair<KPrimeLabel, KPrimeLabel>> labels;
                for (const auto& e : v) {
                    CHECK(e.mult == 1);
                    CHECK(labels.insert({e.plus_label, e.minus_label}).second);
                }
            }
}

TEST_CASE("general lift with trivial input reproduces the trivial lift") {
    std::vector<LiftInput> triv = {{KPrimeLabel{}, 0, 1}};
    for (auto pair : {DualPair::osp(3, 3, 1), DualPair::uu(2, 2, 1, 1),
                      DualPair::sp_ostar(3, 3, 2)}) {
        auto a = decompose_general_lift(pair, triv, 5);
        auto b = decompose_trivial_lift(pair, 5);
        CHECK(a.entries == b.entries); // entry-by-entry
    }
}

TEST_CASE("general lift of the flat input matches the regular holomorphic series") {
    for (auto pair : {DualPair::osp(3, 3, 1), DualPair::osp(5, 5, 2),
                      DualPair::sp_ostar(2, 2, 1), DualPair::sp_ostar(3, 3, 2)}) {
        int K = 5;
        auto a = decompose_general_lift(pair, flat_space_input(pair, K), K);
        auto b = decompose_regular_hol_lift(pair, K);
        CHECK(a.hilbert() == b.hilbert());
    }
    // the same holds for the UU pair with m >= n
    auto uu = DualPair::uu(3, 3, 2, 1);
    auto a = decompose_general_lift(uu, flat_space_input(uu, 4), 4);
    CHECK(a.hilbert() == decompose_regular_hol_lift(uu, 4).hilbert());
}

TEST_CASE("flat_space_input examples") {
    auto osp = flat_space_input(DualPair::osp(3, 3, 1), 3);
    REQUIRE(osp.size() == 4); // (), (2), (4), (6)
    for (const auto& e : osp) CHECK(e.tau.a == Partition{2 * e.degree});

    auto so = flat_space_input(DualPair::sp_ostar(2, 2, 1), 5);
    REQUIRE(so.size() == 1); // Alt_1 = 0
    CHECK(so[0].tau.a.empty());

    auto uu = flat_space_input(DualPair::uu(2, 2, 1, 1), 3);
    REQUIRE(uu.size() == 4);
    for (const auto& e : uu) {
        CHECK(e.tau.a == e.tau.b);
        CHECK(e.tau.a.size() == e.degree);
    }
}

TEST_CASE("grading parity violation is detected") {
    // an odd-size input label cannot appear in any genuine orbit decomposition;
    // feeding one must trip the runtime parity assertion
    std::vector<LiftInput> bad = {{KPrimeLabel{{1}, {}}, 0, 1}};
    CHECK_THROWS_AS(decompose_general_lift(DualPair::osp(3, 3, 1), bad, 3),
                    GradingParityViolation);
}

TEST_CASE("single input entry lands where tensor multiplicities put it") {
    auto pair = DualPair::osp(5, 5, 2);
    std::vector<LiftInput> in = {{KPrimeLabel{{1, 1}, {}}, 1, 1}};
    auto dec = decompose_general_lift(pair, in, 4);
    CHECK(!dec.entries.count(0));
    CHECK(!dec.entries.count(1)); // lowest term sits at |tau|/2 + k = 2
    // degree 2 term: tau2 = (), tau1 = (1,1), multiplicity 1
    REQUIRE(dec.entries.count(2));
    REQUIRE(dec.entries.at(2).size() == 1);
    CHECK(dec.entries.at(2)[0].plus_label == KPrimeLabel{{1, 1}, {}});
    CHECK(dec.entries.at(2)[0].mult == 1);
    // degree 3: tau2 = (1), tau1 in (1)(x)(1,1) = (2,1)+(1,1,1), truncated to length 2
    REQUIRE(dec.entries.count(3));
    REQUIRE(dec.entries.at(3).size() == 1);
    CHECK(dec.entries.at(3)[0].plus_label == KPrimeLabel{{2, 1}, {}});
    CHECK(dec.entries.at(3)[0].minus_label == KPrimeLabel{{1}, {}});
    // degree 4: tau2 of size 2, each with multiplicity one
    REQUIRE(dec.entries.count(4));
    for (const auto& e : dec.entries.at(4)) CHECK(e.mult == 1);
    CHECK(dec.entries.at(4).size() == 2); // ((3,1),(2)) and ((2,2),(1,1))
}
