#include "cores/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cores {

EnumerationBudget EnumerationBudget::explicit_bound(BigInt max_size) {
    if (max_size < 0)
        throw std::invalid_argument("budget must be non-negative");
    return EnumerationBudget{std::move(max_size), Justification::explicit_bound};
}

EnumerationBudget EnumerationBudget::tripathi(const CoreSpec& spec) {
    if (!spec.has_coprime_pair())
        throw std::invalid_argument("possibly infinite family");
    BigInt best = -1;
    const auto& m = spec.moduli();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (std::gcd(m[i], m[j]) != 1)
                continue;
            BigInt bound = BigInt(static_cast<long>(m[i] * m[i] - 1)) *
                           static_cast<long>(m[j] * m[j] - 1) / 24;
            if (best < 0 || bound < best)
                best = bound;
        }
    return EnumerationBudget{std::move(best), Justification::tripathi_bound};
}

namespace {

/// Cells (i, c) with next_part < c <= parts.back() have final hook lengths
/// once the next part is fixed: no later row reaches those columns. Returns
/// false if any such hook is divisible by one of the moduli, which kills the
/// whole branch (smaller continuations finalize a superset of cells).
bool finalized_cells_ok(const std::vector<long long>& parts, long long next_part,
                        const std::vector<long long>& moduli) {
    if (parts.empty())
        return true;
    long long last = parts.back();
    long long rows = static_cast<long long>(parts.size());
    for (long long c = next_part + 1; c <= last; ++c) {
        long long leg = 0; // rows below with part >= c, counted from the bottom
        for (long long i = rows; i >= 1; --i) {
            long long arm = parts[static_cast<std::size_t>(i - 1)] - c;
            long long hook = arm + leg + 1;
            for (long long t : moduli)
                if (hook % t == 0)
                    return false;
            ++leg; // parts[i-1] >= last >= c for every remaining row
        }
    }
    return true;
}

} // namespace

std::vector<Partition> enumerate_cores(const CoreSpec& spec,
                                       const EnumerationBudget& budget) {
    if (budget.max_size < 0)
        throw std::invalid_argument("budget must be non-negative");
    long long max_size = budget.max_size.get_si();
    if (!budget.max_size.fits_slong_p())
        throw std::invalid_argument("budget too large to enumerate");

    const auto& moduli = spec.moduli();
    std::vector<Partition> out;
    std::vector<long long> parts;

    std::function<void(long long)> dfs = [&](long long remaining) {
        // Appending part v finalizes the cells in columns (v, last]; v = 0
        // closes the partition. A bad finalized cell is shared by every
        // v' <= v, so the scan over v can stop at the first failure.
        long long cap = parts.empty() ? remaining
                                      : std::min(parts.back(), remaining);
        for (long long v = cap; v >= 0; --v) {
            if (!finalized_cells_ok(parts, v, moduli))
                return;
            if (v == 0) {
                out.emplace_back(parts);
                return;
            }
            parts.push_back(v);
            dfs(remaining - v);
            parts.pop_back();
        }
    };
    dfs(max_size);

    std::sort(out.begin(), out.end(), Partition::size_lex_less);
    return out;
}

Rational OracleStats::mean_size() const {
    if (count == 0)
        return Rational(0);
    Rational r(total_size, count);
    r.canonicalize();
    return r;
}

OracleStats oracle_stats(const CoreSpec& spec, const EnumerationBudget& budget) {
    OracleStats stats;
    for (const Partition& p : enumerate_cores(spec, budget)) {
        BigInt size = p.size();
        stats.count += 1;
        stats.total_size += size;
        if (size > stats.max_size_attained) {
            stats.max_size_attained = size;
            stats.maximizers.clear();
        }
        if (size == stats.max_size_attained)
            stats.maximizers.push_back(p);
        if (conjugate(p) == p)
            stats.self_conjugate.push_back(p);
    }
    return stats;
}

std::vector<Partition> enumerate_cores_by_largest_part(long long a, long long x,
                                                       std::optional<long long> y,
                                                       std::optional<long long> i) {
    if (a < 2)
        throw std::invalid_argument("a must be >= 2");
    if (x < 0)
        throw std::invalid_argument("x must be >= 0");
    std::vector<Partition> out;
    if (x == 0) {
        if (!y && !i)
            out.emplace_back();
        return out;
    }

    // Candidate shapes: non-increasing part lists with largest part x where
    // no value repeats a or more times (an a-core never does); filtered by
    // the hook test afterwards.
    std::vector<long long> parts;
    std::function<void(long long)> gen = [&](long long value) {
        if (value == 0) {
            Partition p{parts};
            if (!is_t_core(p, a))
                return;
            if (y && (p.num_parts() < 2 || p.part(2) != *y))
                return;
            if (i) {
                long long mult = 0;
                while (mult < static_cast<long long>(p.num_parts()) &&
                       p.part(static_cast<std::size_t>(mult + 1)) == x)
                    ++mult;
                if (mult != *i)
                    return;
            }
            out.push_back(std::move(p));
            return;
        }
        long long min_mult = value == x ? 1 : 0;
        std::size_t base = parts.size();
        for (long long mult = min_mult; mult <= a - 1; ++mult) {
            if (mult > 0)
                parts.push_back(value);
            if (mult >= min_mult)
                gen(value - 1);
        }
        parts.resize(base);
    };
    gen(x);

    std::sort(out.begin(), out.end(), Partition::size_lex_less);
    return out;
}

} // namespace cores
