#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cores/abacus.hpp"
#include "cores/bigint.hpp"

namespace cores {

/// z-coordinates of an (a,b0)-core: a non-negative integer vector of length a
/// with sum b0 and a | sum of m*z_m, for gcd(a,b0) = 1.
class ZCoords {
public:
    /// Throws std::invalid_argument if gcd(a,b0) != 1, the length is wrong,
    /// an entry is negative, the sum differs from b0, or the weighted-sum
    /// divisibility fails.
    ZCoords(long long a, long long b0, std::vector<long long> z);

    long long modulus() const { return a_; }
    long long b0() const { return b0_; }
    const std::vector<long long>& z() const { return z_; }

    friend bool operator==(const ZCoords&, const ZCoords&) = default;

private:
    long long a_;
    long long b0_;
    std::vector<long long> z_;
};

/// A cyclic window-sum bound on z-vectors: every window of `length`
/// consecutive entries (indices mod a) must sum to at most `bound`.
struct WindowConstraint {
    long long length = 0;
    long long bound = 0;

    friend bool operator==(const WindowConstraint&, const WindowConstraint&) = default;
};

/// Derives the window constraint imposed by an extra modulus bi: the window
/// length is the unique l in [1, a-1] with a | b0*l + bi, and the bound is
/// (b0*l + bi)/a. Throws std::invalid_argument if a | bi ("bi must not be a
/// multiple of a") or gcd(a,b0) != 1.
WindowConstraint window_constraint(long long a, long long b0, long long bi);

/// z_m = x_{(m*b0+k) mod a} - x_{((m+1)*b0+k) mod a} + b0/a with
/// k = -(b0+1)/2 mod a (division by 2 via the inverse of 2 mod a when b0 is
/// even). Throws if gcd(a,b0) != 1 or x is not a b0-core (negative z entry).
ZCoords x_to_z(const XCoords& x, long long b0);

/// Inverse of x_to_z.
XCoords z_to_x(const ZCoords& z);

/// Cyclic left shift.
std::vector<long long> rotate(const std::vector<long long>& z);

using ZPredicate = std::function<bool(const std::vector<long long>&)>;
using ZWeight = std::function<Rational(const std::vector<long long>&)>;

/// Counts Y2 = {z >= 0 : sum z = b0, predicate(z)} and
/// Y1 = Y2 with a | sum m*z_m. Requires gcd(a,b0) = 1 and the predicate to be
/// rotation-stable; stability is checked on every enumerated vector and a
/// violation throws std::invalid_argument. a*|Y1| = |Y2| always holds.
std::pair<BigInt, BigInt> orbit_count_check(long long a, long long b0,
                                            const ZPredicate& predicate);

/// Weighted version: returns (sum over Y1, sum over Y2) of a rotation-
/// invariant weight. Invariance is checked on every enumerated vector.
std::pair<Rational, Rational> weighted_orbit_check(long long a, long long b0,
                                                   const ZPredicate& predicate,
                                                   const ZWeight& weight);

/// All z-coordinate vectors satisfying the window constraints, in
/// lexicographic order.
std::vector<ZCoords> solution_set(long long a, long long b0,
                                  const std::vector<WindowConstraint>& constraints);

} // namespace cores
