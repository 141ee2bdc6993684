#pragma once

#include <vector>

#include "cores/bigint.hpp"

namespace cores {

/// Binomial coefficient with the zero-extension convention:
/// C(n,k) = 0 whenever n < 0, k < 0, or k > n.
BigInt binom(long long n, long long k);

/// Number of integer vectors (z_0..z_{a-1}) with z_i >= s_i and sum b:
/// C(b + a - sum(s) - 1, a - 1).
BigInt count_lower_bounded_solutions(long long b, const std::vector<long long>& s);

/// Generalized Catalan number Cat_{a,b} = C(a+b, a)/(a+b), the number of
/// (a,b)-cores. Throws std::invalid_argument if gcd(a,b) != 1.
BigInt cat(long long a, long long b);

/// Number of a-cores whose largest part is x with multiplicity exactly i:
/// C(x + a - 2 - i, a - 1 - i). Zero when i >= a.
BigInt count_largest_exact(long long a, long long x, long long i);

/// Number of a-cores with largest part x: C(x + a - 2, x).
BigInt count_largest(long long a, long long x);

/// Number of a-cores with largest part x and second largest part y
/// (1 <= y <= x, at least two parts). Zero when x - y > a - 1.
BigInt count_largest_second(long long a, long long x, long long y);

/// Number of (a, b0, b1, ..., bn)-cores via the z-coordinate solution set.
/// Requires gcd(a,b0) = 1 and no bi a multiple of a. Also computes the
/// divisibility-free count divided by a and asserts the two agree.
BigInt count_via_theorem53(long long a, long long b0,
                           const std::vector<long long>& rest);

/// Number of (a,b0,b1)-cores when a | (b0+b1): with m = (b0+b1)/a,
/// (1/a) * sum over y_m..y_1 with sum i*y_i = b0 of
/// C(a,y_m)*C(a-y_m,y_{m-1})*...*C(a-y_m-...-y_2, y_1).
BigInt count_firstcor(long long a, long long b0, long long b1);

/// Number of (s, s+d, s+2d)-cores for coprime s, d:
/// (1/(s+d)) * sum_{y2=0}^{floor(s/2)} C(s+d, y2) * C(s+d-y2, s-2*y2).
BigInt count_ssd(long long s, long long d);

/// Number of (s, s+d, s+2d, s+3d)-cores for coprime s, d.
BigInt count_ssd3(long long s, long long d);

/// Number of (a,b,c)-cores for 3 < a < b coprime, a | (2b+c),
/// c > ab/2 - 2b: with m = (c+2b)/a,
/// Cat_{a,b} - (m+1)*C(b+a-m-3, a-2) + C(b+a-m-3, a-1).
/// Each violated precondition throws a distinct std::invalid_argument.
BigInt count_abc(long long a, long long b, long long c);

/// Average size of an (a,b)-core: (a+b+1)(a-1)(b-1)/24, exact.
Rational average_size_formula(long long a, long long b);

} // namespace cores
