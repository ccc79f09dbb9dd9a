#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "wedgelab/hall.hpp"

using namespace wedgelab;

TEST_CASE("witt numbers match the necklace counts") {
    // 1/w * sum_{d|w} mu(d) k^{w/d}, tabulated by hand for small cases.
    CHECK(witt_number(2, 1) == 2);
    CHECK(witt_number(2, 2) == 1);
    CHECK(witt_number(2, 3) == 2);
    CHECK(witt_number(2, 4) == 3);
    CHECK(witt_number(2, 5) == 6);
    CHECK(witt_number(2, 6) == 9);
    CHECK(witt_number(3, 1) == 3);
    CHECK(witt_number(3, 2) == 3);
    CHECK(witt_number(3, 3) == 8);
    CHECK(witt_number(3, 4) == 18);
    CHECK(witt_number(5, 2) == 10);
}

TEST_CASE("basis sizes per weight equal the witt numbers") {
    for (int k = 2; k <= 3; ++k) {
        HallBasis b = build_hall_basis(k, 6);
        CHECK(b.rank() == k);
        CHECK(b.klass() == 6);
        int total = 0;
        for (int w = 1; w <= 6; ++w) {
            INFO("rank " << k << " weight " << w);
            CHECK(Int(b.count_of_weight(w)) == witt_number(k, w));
            total += b.count_of_weight(w);
        }
        CHECK(b.size() == total);
        CHECK(b.weight_begin(1) == 0);
        CHECK(b.weight_end(6) == b.size());
    }
}

TEST_CASE("entries are weight-sorted and satisfy the hall conditions") {
    HallBasis b = build_hall_basis(3, 5);
    for (int i = 0; i < b.size(); ++i) {
        const BasisEntry& e = b.entry(i);
        CHECK(std::accumulate(e.content.begin(), e.content.end(), 0) == e.weight);
        if (e.weight == 1) {
            CHECK(e.gen >= 0);
            CHECK(e.left == -1);
        } else {
            REQUIRE(e.left >= 0);
            REQUIRE(e.right >= 0);
            CHECK(e.left > e.right);
            CHECK(b.entry(e.left).weight + b.entry(e.right).weight == e.weight);
            // When the left part is itself a bracket [x,y], y <= right.
            if (b.entry(e.left).weight > 1) CHECK(b.entry(e.left).right <= e.right);
        }
        if (i + 1 < b.size()) CHECK(b.entry(i).weight <= b.entry(i + 1).weight);
    }
}

TEST_CASE("rank-2 low weights list the classical commutators") {
    HallBasis b = build_hall_basis(2, 3);
    std::vector<std::string> names = {"a", "b"};
    REQUIRE(b.size() == 5);
    CHECK(b.entry_name(0, names) == "a");
    CHECK(b.entry_name(1, names) == "b");
    CHECK(b.entry_name(2, names) == "[b,a]");
    CHECK(b.entry_name(3, names) == "[[b,a],a]");
    CHECK(b.entry_name(4, names) == "[[b,a],b]");
    // Default names are x1..xk.
    CHECK(b.entry_name(2) == "[x2,x1]");
}
