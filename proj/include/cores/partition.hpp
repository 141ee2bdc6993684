#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "cores/bigint.hpp"

namespace cores {

/// A partition: a non-increasing sequence of positive integers.
/// The empty sequence is the empty partition.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument if the parts are not positive and
    /// non-increasing.
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    std::size_t num_parts() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// 1-based row access; rows past the last part have size 0.
    long long part(std::size_t row) const;

    BigInt size() const;

    /// Serialized form, e.g. "[9,6,3,1,1,1]"; the empty partition is "[]".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Orders by size first, then lexicographically on the part lists.
    /// Used for deterministic enumeration output.
    static bool size_lex_less(const Partition& lhs, const Partition& rhs);

private:
    std::vector<long long> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Hook length of the cell (row, col), both 1-based: arm + leg + 1.
/// Throws std::out_of_range("not a cell") if (row, col) is outside the diagram.
long long hook_length(const Partition& p, std::size_t row, std::size_t col);

/// Transpose of the Ferrers diagram.
Partition conjugate(const Partition& p);

/// True iff no hook length of p is divisible by t. For t = 1 only the empty
/// partition qualifies. Throws std::invalid_argument for t <= 0.
bool is_t_core(const Partition& p, long long t);

/// A validated simultaneous-core constraint: a set of moduli, each >= 2,
/// stored deduplicated and sorted.
class CoreSpec {
public:
    /// Throws std::invalid_argument if empty or any modulus < 2.
    explicit CoreSpec(std::vector<long long> moduli);

    const std::vector<long long>& moduli() const { return moduli_; }
    bool has_coprime_pair() const { return has_coprime_pair_; }

    std::string to_string() const;

private:
    std::vector<long long> moduli_;
    bool has_coprime_pair_ = false;
};

/// True iff p is a t-core for every modulus in the spec.
bool satisfies_spec(const Partition& p, const CoreSpec& spec);

} // namespace cores
