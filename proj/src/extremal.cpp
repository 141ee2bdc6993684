#include "cores/extremal.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cores/abacus.hpp"

namespace cores {

BigInt largest_size_sss(long long s) {
    if (s < 1)
        throw std::invalid_argument("s must be >= 1");
    auto choose3 = [](long long n) -> BigInt {
        return BigInt(static_cast<long>(n)) * static_cast<long>(n - 1) *
               static_cast<long>(n - 2) / 6;
    };
    if (s % 2 == 1) {
        long long m = (s + 1) / 2;
        return BigInt(static_cast<long>(m)) * choose3(m + 1);
    }
    long long m = s / 2;
    return BigInt(static_cast<long>(m + 1)) * choose3(m + 1) + choose3(m + 2);
}

BigInt largest_size_selfconj_sss(long long s) {
    if (s < 1)
        throw std::invalid_argument("s must be >= 1");
    long long w = (s + 3) / 4; // s = 4w, 4w-1, 4w-2, or 4w-3
    switch (s % 4) {
    case 0:
        w = s / 4;
        return BigInt(static_cast<long>(w)) * static_cast<long>(2 * w + 1) *
               static_cast<long>(4 * w * w + 2 * w + 1) / 3;
    case 3: // s = 4w-1
        return BigInt(static_cast<long>(w)) * static_cast<long>(w) *
               static_cast<long>(8 * w * w - 6 * w + 1) / 3;
    case 2: // s = 4w-2
        return BigInt(static_cast<long>(w)) * static_cast<long>(2 * w - 1) *
               static_cast<long>(4 * w * w - 2 * w + 1) / 3;
    default: // s = 4w-3
        return BigInt(static_cast<long>(w - 1)) * static_cast<long>(2 * w - 1) *
               static_cast<long>(4 * w * w - 5 * w + 3) / 3;
    }
}

BigInt selfconj_gap(long long s) {
    if (s < 1)
        throw std::invalid_argument("s must be >= 1");
    if (s % 2 == 0)
        throw std::invalid_argument("s must be odd");
    long long w = (s + 3) / 4;
    BigInt gap = s % 4 == 3
                     ? BigInt(static_cast<long>(2 * w - 1)) * static_cast<long>(w) *
                           static_cast<long>(w)
                     : BigInt(static_cast<long>(2 * w - 1)) *
                           static_cast<long>(w - 1) * static_cast<long>(w - 1);
    if (gap != largest_size_sss(s) - largest_size_selfconj_sss(s))
        throw std::logic_error("gap formula disagrees with the size formulas");
    return gap;
}

ExtremalCore construct_largest_selfconj_sss(long long s) {
    if (s < 1)
        throw std::invalid_argument("s must be >= 1");
    long long a = s + 1;
    // Antisymmetry c_i = -c_{a-1-i} leaves the first half free; the middle
    // entry is 0 for odd a, and for even a the step bound across the middle
    // forces c_{a/2-1} = 0. c_0 is 0 or 1 since c_0 - c_s = 2*c_0.
    long long half = a / 2;
    std::vector<long long> c(static_cast<std::size_t>(half));
    std::optional<std::vector<long long>> best;
    BigInt best_size = -1;
    bool tie = false;

    auto full_vector = [&](const std::vector<long long>& head) {
        std::vector<long long> full(static_cast<std::size_t>(a), 0);
        for (long long i = 0; i < half; ++i) {
            full[static_cast<std::size_t>(i)] = head[static_cast<std::size_t>(i)];
            full[static_cast<std::size_t>(a - 1 - i)] =
                -head[static_cast<std::size_t>(i)];
        }
        return full;
    };

    std::function<void(long long)> dfs = [&](long long idx) {
        if (idx == half) {
            if (a % 2 == 0 && half >= 1 &&
                c[static_cast<std::size_t>(half - 1)] != 0)
                return; // step bound across the middle: |2*c_{half-1}| <= 1
            if (a % 2 == 1 && half >= 1 &&
                std::abs(c[static_cast<std::size_t>(half - 1)]) > 1)
                return; // middle entry is 0
            BigInt size = size_from_c(CCoords(a, full_vector(c)));
            if (size > best_size) {
                best_size = size;
                best = c;
                tie = false;
            } else if (size == best_size) {
                tie = true;
            }
            return;
        }
        long long lo = idx == 0 ? 0 : c[static_cast<std::size_t>(idx - 1)] - 1;
        long long hi = idx == 0 ? 1 : c[static_cast<std::size_t>(idx - 1)] + 1;
        for (long long v = std::max(lo, -s); v <= std::min(hi, s); ++v) {
            c[static_cast<std::size_t>(idx)] = v;
            dfs(idx + 1);
        }
    };
    dfs(0);

    if (!best)
        throw std::logic_error("constraint system is empty");
    if (tie)
        throw std::logic_error("maximizer is not unique");
    if (best_size != largest_size_selfconj_sss(s))
        throw std::logic_error("optimizer disagrees with the closed form");
    CCoords coords(a, full_vector(*best));
    return ExtremalCore{c_to_partition(coords), best_size};
}

BigInt largest_size_ab(long long a, long long b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("a and b must be positive");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("a and b must be coprime");
    return BigInt(static_cast<long>(a * a - 1)) * static_cast<long>(b * b - 1) / 24;
}

} // namespace cores
