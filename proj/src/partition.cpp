#include "cores/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cores {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be non-increasing");
    }
}

long long Partition::part(std::size_t row) const {
    if (row == 0)
        throw std::out_of_range("rows are 1-based");
    return row <= parts_.size() ? parts_[row - 1] : 0;
}

BigInt Partition::size() const {
    BigInt total = 0;
    for (long long p : parts_)
        total += static_cast<long>(p);
    return total;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

bool Partition::size_lex_less(const Partition& lhs, const Partition& rhs) {
    BigInt ls = lhs.size(), rs = rhs.size();
    if (ls != rs)
        return ls < rs;
    return lhs.parts() < rhs.parts();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

long long hook_length(const Partition& p, std::size_t row, std::size_t col) {
    if (row == 0 || col == 0 || row > p.num_parts() ||
        static_cast<long long>(col) > p.part(row))
        throw std::out_of_range("not a cell");
    long long arm = p.part(row) - static_cast<long long>(col);
    long long leg = 0;
    for (std::size_t i = row + 1; i <= p.num_parts(); ++i) {
        if (p.part(i) >= static_cast<long long>(col))
            ++leg;
        else
            break;
    }
    return arm + leg + 1;
}

Partition conjugate(const Partition& p) {
    if (p.empty())
        return Partition{};
    std::vector<long long> cols(static_cast<std::size_t>(p.part(1)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        long long rows = 0;
        for (std::size_t r = 1; r <= p.num_parts(); ++r) {
            if (p.part(r) >= static_cast<long long>(c + 1))
                ++rows;
            else
                break;
        }
        cols[c] = rows;
    }
    return Partition(std::move(cols));
}

bool is_t_core(const Partition& p, long long t) {
    if (t <= 0)
        throw std::invalid_argument("modulus must be positive");
    // Hooks of row r are {beta_r - beta_j : j > r} removed from [1, beta_r],
    // where beta_r = part(r) + num_parts - r are the first-column hooks.
    // Scanning cells directly is simple enough at desk scale.
    for (std::size_t r = 1; r <= p.num_parts(); ++r) {
        for (long long c = 1; c <= p.part(r); ++c) {
            if (hook_length(p, r, static_cast<std::size_t>(c)) % t == 0)
                return false;
        }
    }
    return true;
}

CoreSpec::CoreSpec(std::vector<long long> moduli) {
    if (moduli.empty())
        throw std::invalid_argument("core spec needs at least one modulus");
    std::set<long long> uniq(moduli.begin(), moduli.end());
    if (*uniq.begin() < 2)
        throw std::invalid_argument("all moduli must be >= 2");
    moduli_.assign(uniq.begin(), uniq.end());
    for (std::size_t i = 0; i < moduli_.size() && !has_coprime_pair_; ++i)
        for (std::size_t j = i + 1; j < moduli_.size(); ++j)
            if (std::gcd(moduli_[i], moduli_[j]) == 1) {
                has_coprime_pair_ = true;
                break;
            }
}

std::string CoreSpec::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        if (i > 0)
            os << ',';
        os << moduli_[i];
    }
    os << '}';
    return os.str();
}

bool satisfies_spec(const Partition& p, const CoreSpec& spec) {
    for (long long t : spec.moduli())
        if (!is_t_core(p, t))
            return false;
    return true;
}

} // namespace cores
