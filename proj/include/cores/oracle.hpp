#pragma once

#include <optional>
#include <vector>

#include "cores/bigint.hpp"
#include "cores/partition.hpp"

namespace cores {

/// Termination certificate for core enumeration. Every member of a spec with
/// a coprime pair (a,b) has size at most (a^2-1)(b^2-1)/24, so that bound
/// (minimized over coprime pairs) makes the search finite.
struct EnumerationBudget {
    enum class Justification { explicit_bound, tripathi_bound };

    BigInt max_size;
    Justification justification = Justification::explicit_bound;

    static EnumerationBudget explicit_bound(BigInt max_size);

    /// Smallest (a^2-1)(b^2-1)/24 over coprime pairs of the spec. Throws
    /// std::invalid_argument ("possibly infinite family") if no pair of
    /// moduli is coprime.
    static EnumerationBudget tripathi(const CoreSpec& spec);
};

/// All partitions of size <= budget that satisfy the spec, ordered by size
/// then lexicographically. Enumerates by hook-length checks only.
std::vector<Partition> enumerate_cores(const CoreSpec& spec,
                                       const EnumerationBudget& budget);

struct OracleStats {
    BigInt count = 0;
    BigInt total_size = 0;
    BigInt max_size_attained = 0;
    std::vector<Partition> maximizers;
    std::vector<Partition> self_conjugate;

    Rational mean_size() const;
};

OracleStats oracle_stats(const CoreSpec& spec, const EnumerationBudget& budget);

/// All a-cores with largest part exactly x; optionally restricted to second
/// largest part exactly y, and/or multiplicity of the largest part exactly i.
/// Finite because parts are <= x and no value repeats a or more times.
std::vector<Partition> enumerate_cores_by_largest_part(
    long long a, long long x, std::optional<long long> y = std::nullopt,
    std::optional<long long> i = std::nullopt);

} // namespace cores
