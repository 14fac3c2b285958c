#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "plurichern/error.hpp"
#include "plurichern/geography.hpp"

using namespace plurichern;

TEST_CASE("classify_point") {
    const auto pq = classify_point(32, 16);
    CHECK(pq.noether_ok);
    CHECK(pq.bmy_ok);
    CHECK(pq.noether_line_ok);
    CHECK(pq.segre_positive);
    CHECK(pq.min_n == 4);
    CHECK(pq.u == Rational(2));

    const auto theta = classify_point(6, 6);
    CHECK(theta.noether_ok);
    CHECK(theta.bmy_ok);
    CHECK_FALSE(theta.segre_positive);
    CHECK_FALSE(theta.min_n.has_value());

    const auto off = classify_point(40, 8);
    CHECK(off.noether_ok);
    CHECK_FALSE(off.bmy_ok);

    const auto axis = classify_point(5, 0);
    CHECK_FALSE(axis.u.has_value());
    CHECK(axis.segre_positive);
    CHECK(axis.min_n.has_value());
}

TEST_CASE("scan invariants") {
    const auto cells = scan({0, 36}, {0, 36});
    REQUIRE(cells.size() == 37 * 37);
    std::size_t i = 0;
    for (std::int64_t a = 0; a <= 36; ++a) {
        for (std::int64_t b = 0; b <= 36; ++b, ++i) {
            const auto& c = cells[i];
            CHECK(c.c1_sq == a);
            CHECK(c.c2 == b);
            CHECK(c.noether_ok == ((a + b) % 12 == 0));
            CHECK(c.min_n.has_value() == c.segre_positive);
            if (c.min_n) {
                CHECK(*c.min_n >= 3);
            }
            if (a == b) {
                CHECK_FALSE(c.min_n.has_value());
            }
        }
    }
}

TEST_CASE("single-point scan equals classify_point") {
    const auto cells = scan({32, 32}, {16, 16});
    REQUIRE(cells.size() == 1);
    CHECK(cells[0] == classify_point(32, 16));
}

TEST_CASE("scan containing the product-quotient point") {
    const auto cells = scan({24, 48}, {12, 24});
    bool found = false;
    for (const auto& c : cells) {
        if (c.c1_sq == 32 && c.c2 == 16) {
            found = true;
            CHECK(c.min_n == 4);
        }
    }
    CHECK(found);
}

TEST_CASE("min_n does not increase along rays of growing c1^2") {
    const auto cells = scan({-20, 150}, {-10, 80});
    const std::size_t cols = 91;
    for (std::size_t col = 0; col < cols; ++col) {
        std::optional<std::int64_t> prev;
        for (std::size_t row = 0; row * cols + col < cells.size(); ++row) {
            const auto& c = cells[row * cols + col];
            if (c.min_n && prev) {
                CHECK_MESSAGE(*c.min_n <= *prev, "c1_sq=" << c.c1_sq << " c2=" << c.c2);
            }
            if (c.min_n) {
                prev = c.min_n;
            }
        }
    }
}

TEST_CASE("scan output is independent of thread count") {
    const auto one = scan({0, 60}, {0, 60}, kDefaultCellCap, 1);
    const auto many = scan({0, 60}, {0, 60}, kDefaultCellCap, 8);
    CHECK(one == many);
    std::ostringstream a, b;
    write_csv(a, one);
    write_csv(b, many);
    CHECK(a.str() == b.str());
}

TEST_CASE("CSV format") {
    std::ostringstream os;
    write_csv(os, scan({31, 32}, {0, 16}));
    const std::string csv = os.str();
    CHECK(csv.rfind("c1_sq,c2,noether_ok,bmy_ok,segre_positive,u_num,u_den,min_n\n", 0) == 0);
    CHECK(csv.find("32,16,1,1,1,2,1,4\n") != std::string::npos);
    CHECK(csv.find("31,0,0,0,1,,,") != std::string::npos);
    CHECK(csv.find("\r") == std::string::npos);
    std::istringstream lines(csv);
    for (std::string line; std::getline(lines, line);) {
        CHECK(std::count(line.begin(), line.end(), ',') == 7);
    }
    CHECK(csv.back() == '\n');
}

TEST_CASE("scan limits") {
    CHECK_THROWS_AS((void)scan({5, 3}, {0, 1}), Error);
    try {
        (void)scan({0, 99}, {0, 99}, 1000);
        FAIL("expected resource limit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResourceLimit);
    }
}
