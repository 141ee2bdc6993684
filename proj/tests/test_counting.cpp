#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "cores/counting.hpp"
#include "cores/oracle.hpp"

using namespace cores;

namespace {

BigInt oracle_count(std::vector<long long> moduli) {
    CoreSpec spec(std::move(moduli));
    return static_cast<long>(
        enumerate_cores(spec, EnumerationBudget::tripathi(spec)).size());
}

} // namespace

TEST_CASE("binom convention") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(2, -1) == 0);
    CHECK(binom(-2, 1) == 0);
    CHECK(binom(3, 5) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(40, 20) == BigInt("137846528820"));
}

TEST_CASE("count_lower_bounded_solutions") {
    CHECK(count_lower_bounded_solutions(2, {0, 0, 0}) == 6);
    CHECK(count_lower_bounded_solutions(0, {0, 0, 0, 0}) == 1);
    CHECK(count_lower_bounded_solutions(3, {1, 1, 1}) == 1);
    CHECK(count_lower_bounded_solutions(2, {1, 1, 1}) == 0);
}

TEST_CASE("cat") {
    CHECK(cat(2, 3) == 2);
    CHECK(cat(3, 4) == 5);
    CHECK(cat(4, 5) == 14);
    CHECK(cat(1, 7) == 1);
    CHECK_THROWS_AS(cat(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(cat(0, 3), std::invalid_argument);
}

TEST_CASE("count_largest family examples") {
    CHECK(count_largest_exact(3, 2, 1) == 2);
    CHECK(count_largest_exact(3, 2, 2) == 1);
    CHECK(count_largest_exact(3, 2, 3) == 0);

    CHECK(count_largest(3, 2) == 3);
    CHECK(count_largest(2, 3) == 1);
    CHECK(count_largest(5, 0) == 1);
    CHECK(count_largest(2, 0) == 1);

    CHECK(count_largest_second(3, 2, 1) == 1);
    CHECK(count_largest_second(3, 3, 1) == 2);
    CHECK(count_largest_second(3, 5, 1) == 0);
    CHECK_THROWS_AS(count_largest_second(3, 2, 3), std::invalid_argument);
}

TEST_CASE("count_largest family vs oracle") {
    for (long long a = 2; a <= 5; ++a) {
        for (long long x = 1; x <= 6; ++x) {
            CHECK(count_largest(a, x) ==
                  static_cast<long>(enumerate_cores_by_largest_part(a, x).size()));
            BigInt by_mult = 0;
            for (long long i = 1; i <= a; ++i) {
                BigInt exact = count_largest_exact(a, x, i);
                CHECK(exact == static_cast<long>(
                                   enumerate_cores_by_largest_part(a, x, {}, i)
                                       .size()));
                by_mult += exact;
            }
            CHECK(count_largest(a, x) == by_mult);
            for (long long y = 1; y <= x; ++y)
                CHECK(count_largest_second(a, x, y) ==
                      static_cast<long>(
                          enumerate_cores_by_largest_part(a, x, y).size()));
        }
    }
}

TEST_CASE("row-sum identity against the oracle") {
    // sum_{x=0}^{X} count_largest(a,x) counts the a-cores with largest part
    // <= X.
    for (long long a = 2; a <= 5; ++a) {
        BigInt running = 0;
        for (long long X = 0; X <= 6; ++X) {
            running += count_largest(a, X);
            BigInt direct = 0;
            for (long long x = 0; x <= X; ++x)
                direct += static_cast<long>(
                    enumerate_cores_by_largest_part(a, x).size());
            CHECK(running == direct);
        }
    }
}

TEST_CASE("count_via_theorem53") {
    CHECK(count_via_theorem53(3, 2, {}) == 2);
    CHECK(count_via_theorem53(3, 2, {4}) == 2);
    CHECK(count_via_theorem53(4, 3, {5}) == 4);
    CHECK_THROWS_AS(count_via_theorem53(4, 2, {5}), std::invalid_argument);
    CHECK_THROWS_AS(count_via_theorem53(3, 2, {6}), std::invalid_argument);
}

TEST_CASE("theorem 5.3 counts match the oracle") {
    for (long long a = 2; a <= 6; ++a) {
        for (long long b0 = 2; b0 <= 7; ++b0) {
            if (std::gcd(a, b0) != 1)
                continue;
            CHECK(count_via_theorem53(a, b0, {}) == oracle_count({a, b0}));
            for (long long b1 = 2; b1 <= 9; ++b1) {
                if (b1 % a == 0 || b1 == b0)
                    continue;
                CHECK(count_via_theorem53(a, b0, {b1}) ==
                      oracle_count({a, b0, b1}));
            }
        }
    }
}

TEST_CASE("count_firstcor") {
    CHECK(count_firstcor(4, 3, 5) == 4);
    CHECK(count_firstcor(3, 2, 4) == 2);
    CHECK_THROWS_AS(count_firstcor(4, 3, 6), std::invalid_argument);
    CHECK_THROWS_AS(count_firstcor(4, 2, 6), std::invalid_argument);

    for (long long a = 2; a <= 6; ++a)
        for (long long b0 = 2; b0 <= 7; ++b0) {
            if (std::gcd(a, b0) != 1)
                continue;
            for (long long m = 1; m <= 3; ++m) {
                long long b1 = m * a - b0;
                if (b1 < 1 || b1 % a == 0)
                    continue;
                CHECK(count_firstcor(a, b0, b1) ==
                      count_via_theorem53(a, b0, {b1}));
            }
        }
}

TEST_CASE("count_ssd and count_ssd3") {
    CHECK(count_ssd(3, 1) == 4);
    CHECK(count_ssd(2, 1) == 2);
    CHECK(count_ssd(1, 5) == 1);
    CHECK_THROWS_AS(count_ssd(2, 4), std::invalid_argument);

    CHECK(count_ssd3(2, 1) == 2);
    CHECK(count_ssd3(3, 1) == 4);
    CHECK(count_ssd3(1, 1) == 1);
    CHECK_THROWS_AS(count_ssd3(3, 6), std::invalid_argument);

    for (long long s = 1; s <= 7; ++s)
        for (long long d = 1; s + d <= 10; ++d) {
            if (std::gcd(s, d) != 1)
                continue;
            if (s == 1) {
                // A 1-core is empty, so every (1,...) family counts exactly 1.
                CHECK(count_ssd(s, d) == 1);
                CHECK(count_ssd3(s, d) == 1);
            } else {
                CHECK(count_ssd(s, d) == oracle_count({s, s + d, s + 2 * d}));
                CHECK(count_ssd3(s, d) ==
                      oracle_count({s, s + d, s + 2 * d, s + 3 * d}));
                // Corollary 5.4 specialization: a = s+d, b0 = s, b1 = s+2d.
                CHECK(count_ssd(s, d) == count_firstcor(s + d, s, s + 2 * d));
                CHECK(count_ssd(s, d) == count_via_theorem53(s + d, s, {s + 2 * d}));
            }
        }
}

TEST_CASE("count_abc") {
    CHECK(count_abc(4, 5, 6) == 9);
    CHECK(count_abc(4, 5, 14) == cat(4, 5));
    CHECK_THROWS_WITH_AS(count_abc(3, 5, 6), "a must be greater than 3",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(count_abc(4, 4, 6), "b must be greater than a",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(count_abc(4, 6, 6), "a and b must be coprime",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(count_abc(4, 5, -2), "c must be positive",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(count_abc(4, 5, 7), "a must divide 2b+c",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(count_abc(5, 6, 3), "c must exceed ab/2 - 2b",
                         std::invalid_argument);
}

TEST_CASE("count_abc vs oracle") {
    for (long long a = 4; a <= 6; ++a)
        for (long long b = a + 1; b <= 9; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            for (long long c = 1; c <= 30; ++c) {
                if ((2 * b + c) % a != 0 || 2 * c <= a * b - 4 * b)
                    continue;
                CHECK(count_abc(a, b, c) == oracle_count({a, b, c}));
            }
        }
}

TEST_CASE("average_size_formula") {
    CHECK(average_size_formula(3, 4) == Rational(2));
    CHECK(average_size_formula(2, 3) == Rational(1, 2));
    CHECK(average_size_formula(1, 9) == Rational(0));
    CHECK_THROWS_AS(average_size_formula(6, 4), std::invalid_argument);
}

TEST_CASE("cat and average vs oracle over a+b <= 12") {
    for (long long a = 2; a <= 10; ++a)
        for (long long b = a + 1; a + b <= 12; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            CoreSpec spec({a, b});
            OracleStats stats = oracle_stats(spec, EnumerationBudget::tripathi(spec));
            CHECK(stats.count == cat(a, b));
            CHECK(stats.mean_size() == average_size_formula(a, b));
        }
}
