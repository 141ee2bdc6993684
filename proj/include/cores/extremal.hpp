#pragma once

#include "cores/bigint.hpp"
#include "cores/partition.hpp"

namespace cores {

/// Largest size of an (s, s+1, s+2)-core:
/// m*C(m+1,3) for s = 2m-1, (m+1)*C(m+1,3) + C(m+2,3) for s = 2m.
BigInt largest_size_sss(long long s);

/// Largest size of a self-conjugate (s, s+1, s+2)-core; four cases by
/// s mod 4.
BigInt largest_size_selfconj_sss(long long s);

/// For odd s, the gap between the largest (s,s+1,s+2)-core and the largest
/// self-conjugate one: (2w-1)w^2 for s = 4w-1, (2w-1)(w-1)^2 for s = 4w-3.
/// Throws std::invalid_argument for even s.
BigInt selfconj_gap(long long s);

struct ExtremalCore {
    Partition partition;
    BigInt size;
};

/// Constructs the unique largest self-conjugate (s,s+1,s+2)-core by
/// maximizing the size over the antisymmetric c-vectors of length s+1 that
/// satisfy the step constraints |c_{k+1} - c_k| <= 1 and 0 <= c_0 - c_s <= 2.
/// Throws std::logic_error if the maximizer is not unique or its size
/// disagrees with the closed form.
ExtremalCore construct_largest_selfconj_sss(long long s);

/// Largest size of an (a,b)-core: (a^2-1)(b^2-1)/24.
/// Throws std::invalid_argument if gcd(a,b) != 1.
BigInt largest_size_ab(long long a, long long b);

} // namespace cores
