#include <doctest.h>

#include <stdexcept>

#include "cartdom/oracles.hpp"

using namespace cartdom;

TEST_CASE("path oracle") {
    CHECK(path_eod(4).value);
    CHECK_FALSE(path_eod(5).value);
    CHECK(path_eod(2).value);
    CHECK_FALSE(path_eod(1).value);
    CHECK_THROWS_AS(path_eod(0), std::invalid_argument);
}

TEST_CASE("cycle oracle") {
    CHECK(cycle_eod(8).value);
    CHECK_FALSE(cycle_eod(6).value);
    CHECK(cycle_eod(4).value);
    CHECK_THROWS_AS(cycle_eod(2), std::invalid_argument);
}

TEST_CASE("grid oracle") {
    CHECK(grid_eod(4, 9).value);       // 9 mod 5 == 4 == r
    CHECK_FALSE(grid_eod(3, 7).value); // odd r
    CHECK_FALSE(grid_eod(4, 5).value); // 5 mod 5 == 0
    CHECK(grid_eod(4, 6).value);       // 6 mod 5 == 1
    CHECK(grid_eod(4, 7).value);       // 7 mod 5 == 2 == r-2
    CHECK_THROWS_AS(grid_eod(2, 5), std::domain_error);
    CHECK_THROWS_AS(grid_eod(4, 3), std::domain_error);
}

TEST_CASE("torus oracles") {
    CHECK(torus_parallel_eod(4, 8).value);
    CHECK_FALSE(torus_parallel_eod(4, 6).value);
    CHECK(torus_parallel_eod(8, 12).value);
    CHECK_THROWS_AS(torus_parallel_eod(2, 4), std::invalid_argument);

    CHECK(c4_torus_eod(8).value);
    CHECK_FALSE(c4_torus_eod(10).value);
    CHECK(c4_torus_eod(12).value);
    CHECK_THROWS_AS(c4_torus_eod(3), std::domain_error);
}

TEST_CASE("answers carry their source") {
    CHECK(!path_eod(4).source.empty());
    CHECK(!grid_eod(4, 9).source.empty());
}
