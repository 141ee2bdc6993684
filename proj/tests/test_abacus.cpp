#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cores/abacus.hpp"
#include "cores/oracle.hpp"

using namespace cores;

namespace {

/// All c-vectors of length a with entries in [-range, range] summing to 0.
void for_each_cvector(long long a, long long range,
                      const std::function<void(const CCoords&)>& fn) {
    std::vector<long long> c(static_cast<std::size_t>(a));
    std::function<void(std::size_t, long long)> rec = [&](std::size_t idx,
                                                          long long sum) {
        if (idx + 1 == c.size()) {
            if (sum >= -range && sum <= range) {
                c[idx] = sum;
                fn(CCoords(a, c));
            }
            return;
        }
        for (long long v = -range; v <= range; ++v) {
            c[idx] = v;
            rec(idx + 1, sum - v);
        }
    };
    rec(0, 0);
}

} // namespace

TEST_CASE("coordinate type validation") {
    CHECK_THROWS_AS(CCoords(4, {1, 2, 0, -2}), std::invalid_argument);
    CHECK_THROWS_AS(CCoords(4, {1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(CCoords(1, {0}), std::invalid_argument);
    CHECK_NOTHROW(CCoords(4, {1, 2, 0, -3}));

    CHECK_NOTHROW(XCoords(4, {5, 15, 1, -21}));
    // Wrong fractional part for entry 0 (must be -3 mod 8).
    CHECK_THROWS_AS(XCoords(4, {4, 15, 1, -20}), std::invalid_argument);
    // Right fractional parts but nonzero sum.
    CHECK_THROWS_AS(XCoords(4, {5, 15, 1, -13}), std::invalid_argument);
}

TEST_CASE("figure 2 correspondence") {
    Partition p({9, 6, 3, 1, 1, 1});
    CCoords c = partition_to_c(p, 4);
    CHECK(c.c() == std::vector<long long>({1, 2, 0, -3}));
    CHECK(c_to_partition(c) == p);
    CHECK(size_from_c(c) == 21);
}

TEST_CASE("partition_to_c basics") {
    CHECK(partition_to_c(Partition(std::vector<long long>{}), 5).c() ==
          std::vector<long long>({0, 0, 0, 0, 0}));
    CHECK(partition_to_c(Partition({1}), 2).c() == std::vector<long long>({1, -1}));
    CHECK_THROWS_WITH_AS(partition_to_c(Partition({2, 1, 1}), 4), "not an a-core",
                         std::invalid_argument);
}

TEST_CASE("c_to_partition basics") {
    CHECK(c_to_partition(CCoords(3, {0, 0, 0})) == Partition(std::vector<long long>{}));
    CHECK(c_to_partition(CCoords(2, {1, -1})) == Partition({1}));
}

TEST_CASE("c_to_x and x_to_c") {
    CCoords c(4, {1, 2, 0, -3});
    XCoords x = c_to_x(c);
    CHECK(x.num2a() == std::vector<long long>({5, 15, 1, -21}));
    CHECK(x.at(0) == Rational(5, 8));
    CHECK(x_to_c(x) == c);

    CHECK(c_to_x(CCoords(2, {0, 0})).num2a() == std::vector<long long>({-1, 1}));

    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> val(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        long long a = 2 + trial % 6;
        std::vector<long long> entries(static_cast<std::size_t>(a));
        long long sum = 0;
        for (long long i = 0; i + 1 < a; ++i) {
            entries[static_cast<std::size_t>(i)] = val(rng);
            sum += entries[static_cast<std::size_t>(i)];
        }
        entries[static_cast<std::size_t>(a - 1)] = -sum;
        CCoords cc(a, entries);
        CHECK(x_to_c(c_to_x(cc)) == cc);
    }
}

TEST_CASE("size and self-conjugacy from c") {
    CHECK(size_from_c(CCoords(4, {0, 0, 0, 0})) == 0);
    CHECK(size_from_c(CCoords(2, {1, -1})) == 1);

    CHECK_FALSE(is_selfconjugate_c(CCoords(4, {1, 2, 0, -3})));
    CHECK(is_selfconjugate_c(CCoords(4, {0, 0, 0, 0})));
    CHECK(is_selfconjugate_c(CCoords(3, {1, 0, -1})));
    Partition p = c_to_partition(CCoords(3, {1, 0, -1}));
    CHECK(conjugate(p) == p);
}

TEST_CASE("b-core criteria on the figure 2 vector") {
    CCoords c(4, {1, 2, 0, -3});
    CHECK_FALSE(is_bcore_c(c, 3));
    CHECK(is_bcore_c(CCoords(4, {0, 0, 0, 0}), 3));
    CHECK(is_bcore_c(c, 5) == is_t_core(c_to_partition(c), 5));

    XCoords x = c_to_x(c);
    CHECK_FALSE(is_bcore_x(x, 3));
    CHECK(is_bcore_x(c_to_x(CCoords(4, {0, 0, 0, 0})), 7));
}

TEST_CASE("round trips over enumerated a-cores") {
    for (long long a = 2; a <= 6; ++a) {
        for (long long b = a + 1; b <= a + 3; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            CoreSpec spec({a, b});
            for (const Partition& p :
                 enumerate_cores(spec, EnumerationBudget::tripathi(spec))) {
                CCoords c = partition_to_c(p, a);
                CHECK(c_to_partition(c) == p);
                CHECK(size_from_c(c) == p.size());
                CHECK(is_selfconjugate_c(c) == (conjugate(p) == p));
            }
        }
    }
}

TEST_CASE("c round trip over a box of C_a") {
    for (long long a = 2; a <= 5; ++a) {
        for_each_cvector(a, 2, [&](const CCoords& c) {
            CHECK(partition_to_c(c_to_partition(c), a) == c);
        });
    }
}

TEST_CASE("lemma equivalences exhaustively over small boxes") {
    // is_bcore_c(c,b) == is_bcore_x(x,b) == hook test on the partition,
    // for all c with entries in [-3,3], a <= 6, b <= 12.
    for (long long a = 2; a <= 6; ++a) {
        for_each_cvector(a, 3, [&](const CCoords& c) {
            Partition p = c_to_partition(c);
            XCoords x = c_to_x(c);
            for (long long b = 1; b <= 12; ++b) {
                bool direct = is_t_core(p, b);
                CHECK(is_bcore_c(c, b) == direct);
                CHECK(is_bcore_x(x, b) == direct);
            }
        });
    }
}
