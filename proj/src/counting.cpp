#include "cores/counting.hpp"

#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cores/zcoords.hpp"

namespace cores {

namespace {

/// Exact division; a nonzero remainder indicates a bug, never rounding.
BigInt exact_div(const BigInt& value, long long divisor) {
    BigInt quot, rem;
    mpz_tdiv_qr_ui(quot.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t(),
                   static_cast<unsigned long>(divisor));
    if (rem != 0)
        throw std::logic_error("division expected to be exact");
    return quot;
}

} // namespace

BigInt binom(long long n, long long k) {
    if (n < 0 || k < 0 || k > n)
        return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

BigInt count_lower_bounded_solutions(long long b, const std::vector<long long>& s) {
    long long a = static_cast<long long>(s.size());
    long long total = std::accumulate(s.begin(), s.end(), 0LL);
    return binom(b + a - total - 1, a - 1);
}

BigInt cat(long long a, long long b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("a and b must be positive");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("a and b must be coprime");
    return exact_div(binom(a + b, a), a + b);
}

BigInt count_largest_exact(long long a, long long x, long long i) {
    if (a < 2)
        throw std::invalid_argument("a must be >= 2");
    if (x < 1 || i < 1)
        throw std::invalid_argument("x and i must be >= 1");
    return binom(x + a - 2 - i, a - 1 - i);
}

BigInt count_largest(long long a, long long x) {
    if (a < 2)
        throw std::invalid_argument("a must be >= 2");
    if (x < 0)
        throw std::invalid_argument("x must be >= 0");
    return binom(x + a - 2, x);
}

BigInt count_largest_second(long long a, long long x, long long y) {
    if (a < 2)
        throw std::invalid_argument("a must be >= 2");
    if (x < 1 || y < 1 || y > x)
        throw std::invalid_argument("need 1 <= y <= x");
    long long gap = x - y;
    if (gap > a - 1)
        return 0;
    if (gap == a - 1)
        return binom(y + a - 2, y);
    return binom(y + a - 3, y);
}

BigInt count_via_theorem53(long long a, long long b0,
                           const std::vector<long long>& rest) {
    std::vector<WindowConstraint> constraints;
    constraints.reserve(rest.size());
    for (long long bi : rest)
        constraints.push_back(window_constraint(a, b0, bi));

    BigInt direct = static_cast<long>(solution_set(a, b0, constraints).size());

    // Lemma 5.2 shortcut: drop the divisibility condition and divide by a.
    auto [y1, y2] = orbit_count_check(a, b0, [&](const std::vector<long long>& z) {
        for (const auto& wc : constraints) {
            for (std::size_t j = 0; j < z.size(); ++j) {
                long long sum = 0;
                for (long long t = 0; t < wc.length; ++t)
                    sum += z[(j + static_cast<std::size_t>(t)) % z.size()];
                if (sum > wc.bound)
                    return false;
            }
        }
        return true;
    });
    BigInt shortcut = exact_div(y2, a);
    assert(direct == y1);
    assert(direct == shortcut);
    return direct;
}

BigInt count_firstcor(long long a, long long b0, long long b1) {
    if (a < 2 || b0 < 1 || b1 < 1)
        throw std::invalid_argument("a, b0, b1 must be positive, a >= 2");
    if (std::gcd(a, b0) != 1)
        throw std::invalid_argument("a and b0 must be coprime");
    if ((b0 + b1) % a != 0)
        throw std::invalid_argument("a must divide b0 + b1");
    long long m = (b0 + b1) / a;

    // Sum over multiplicity vectors (y_m, ..., y_1) with sum i*y_i = b0 of
    // the multinomial product C(a, y_m) C(a - y_m, y_{m-1}) ...
    BigInt total = 0;
    std::function<void(long long, long long, long long, BigInt)> rec =
        [&](long long value, long long left, long long used, BigInt prod) {
            if (value == 0) {
                if (left == 0)
                    total += prod;
                return;
            }
            for (long long y = 0; value * y <= left; ++y) {
                BigInt next = prod * binom(a - used, y);
                if (next == 0 && y > 0)
                    break;
                rec(value - 1, left - value * y, used + y, next);
            }
        };
    rec(m, b0, 0, BigInt(1));
    return exact_div(total, a);
}

BigInt count_ssd(long long s, long long d) {
    if (s < 1 || d < 1)
        throw std::invalid_argument("s and d must be positive");
    if (std::gcd(s, d) != 1)
        throw std::invalid_argument("s and d must be coprime");
    BigInt total = 0;
    for (long long y2 = 0; y2 <= s / 2; ++y2)
        total += binom(s + d, y2) * binom(s + d - y2, s - 2 * y2);
    return exact_div(total, s + d);
}

BigInt count_ssd3(long long s, long long d) {
    if (s < 1 || d < 1)
        throw std::invalid_argument("s and d must be positive");
    if (std::gcd(s, d) != 1)
        throw std::invalid_argument("s and d must be coprime");
    BigInt total = 0;
    for (long long k = 0; k <= s / 2; ++k)
        total += (binom(s + d - k - 1, k - 1) + binom(s + d - k, k)) *
                 binom(s + d - k, s - 2 * k);
    return exact_div(total, s + d);
}

BigInt count_abc(long long a, long long b, long long c) {
    if (a <= 3)
        throw std::invalid_argument("a must be greater than 3");
    if (b <= a)
        throw std::invalid_argument("b must be greater than a");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("a and b must be coprime");
    if (c < 1)
        throw std::invalid_argument("c must be positive");
    if ((2 * b + c) % a != 0)
        throw std::invalid_argument("a must divide 2b+c");
    if (2 * c <= a * b - 4 * b)
        throw std::invalid_argument("c must exceed ab/2 - 2b");
    long long m = (c + 2 * b) / a;
    return cat(a, b) - static_cast<long>(m + 1) * binom(b + a - m - 3, a - 2) +
           binom(b + a - m - 3, a - 1);
}

Rational average_size_formula(long long a, long long b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("a and b must be positive");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("a and b must be coprime");
    Rational r(BigInt(static_cast<long>(a + b + 1)) * static_cast<long>(a - 1) *
                   static_cast<long>(b - 1),
               24);
    r.canonicalize();
    return r;
}

} // namespace cores
