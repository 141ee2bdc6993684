#pragma once

#include <vector>

#include "cores/bigint.hpp"
#include "cores/partition.hpp"

namespace cores {

/// Johnson's c-coordinates: an integer vector of length a summing to zero.
/// Parameterizes the a-cores through the tilted a-abacus.
class CCoords {
public:
    /// Throws std::invalid_argument if a < 2, the length differs from a, or
    /// the entries do not sum to zero.
    CCoords(long long a, std::vector<long long> c);

    long long modulus() const { return a_; }
    const std::vector<long long>& c() const { return c_; }

    friend bool operator==(const CCoords&, const CCoords&) = default;

private:
    long long a_;
    std::vector<long long> c_;
};

/// x-coordinates: x_i = c_i + i/a - (a-1)/(2a), stored exactly as integer
/// numerators over the fixed denominator 2a. The entries sum to zero and
/// numerator i is congruent to 2i - (a-1) mod 2a.
class XCoords {
public:
    /// Takes numerators over 2a. Throws std::invalid_argument if the sum or
    /// fractional-part invariants fail.
    XCoords(long long a, std::vector<long long> num2a);

    long long modulus() const { return a_; }
    const std::vector<long long>& num2a() const { return num2a_; }
    Rational at(std::size_t i) const;

    friend bool operator==(const XCoords&, const XCoords&) = default;

private:
    long long a_;
    std::vector<long long> num2a_;
};

/// phi_a: c-coordinates of an a-core. Throws std::invalid_argument
/// ("not an a-core") if p is not an a-core.
///
/// Bead convention: merged abacus positions are the integers, position p
/// lives in row p mod a, and the line L sits between -1 and 0, so the first
/// position of row i to the right of L is i. Row i is black from position
/// i + a*c_i upward. This reproduces (9,6,3,1,1,1) <-> (1,2,0,-3) for a = 4.
CCoords partition_to_c(const Partition& p, long long a);

/// Inverse of partition_to_c.
Partition c_to_partition(const CCoords& c);

XCoords c_to_x(const CCoords& c);
CCoords x_to_c(const XCoords& x);

/// Size of the a-core with these coordinates: sum of a/2*c_k^2 + k*c_k.
BigInt size_from_c(const CCoords& c);

/// True iff c_i = -c_{a-1-i} for all i, i.e. the partition is self-conjugate.
bool is_selfconjugate_c(const CCoords& c);

/// b-core criterion in c-coordinates: for all i,
/// c_{(i+b) mod a} - c_i <= floor((b+i)/a).
bool is_bcore_c(const CCoords& c, long long b);

/// b-core criterion in x-coordinates: x_{(i+b) mod a} - x_i <= b/a for all i,
/// in exact rational arithmetic.
bool is_bcore_x(const XCoords& x, long long b);

} // namespace cores
