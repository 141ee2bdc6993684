#include "cores/zcoords.hpp"

#include <numeric>
#include <stdexcept>

namespace cores {

namespace {

long long floor_mod(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

void require_coprime(long long a, long long b0) {
    if (a < 2)
        throw std::invalid_argument("modulus a must be >= 2");
    if (b0 < 1)
        throw std::invalid_argument("b0 must be >= 1");
    if (std::gcd(a, b0) != 1)
        throw std::invalid_argument("a and b0 must be coprime");
}

/// k with 2k = -(b0+1) mod a. When b0 is even, a is odd (coprimality) and 2
/// is invertible; when b0 is odd the right side is even.
long long proof_index(long long a, long long b0) {
    long long rhs = floor_mod(-(b0 + 1), a);
    if (b0 % 2 != 0)
        return floor_mod(-((b0 + 1) / 2), a);
    long long inv2 = (a + 1) / 2; // 2*inv2 = a+1 = 1 mod a, a odd
    return floor_mod(rhs * inv2, a);
}

/// Enumerates all non-negative vectors of length a summing to b0, in
/// lexicographic order.
void for_each_composition(long long a, long long b0,
                          const std::function<void(const std::vector<long long>&)>& fn) {
    std::vector<long long> z(static_cast<std::size_t>(a), 0);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t idx,
                                                          long long left) {
        if (idx + 1 == z.size()) {
            z[idx] = left;
            fn(z);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            z[idx] = v;
            rec(idx + 1, left - v);
        }
    };
    rec(0, b0);
}

long long weighted_sum_mod(const std::vector<long long>& z, long long a) {
    long long s = 0;
    for (std::size_t m = 0; m < z.size(); ++m)
        s = floor_mod(s + static_cast<long long>(m) * z[m], a);
    return s;
}

bool windows_ok(const std::vector<long long>& z,
                const std::vector<WindowConstraint>& constraints) {
    long long a = static_cast<long long>(z.size());
    for (const auto& wc : constraints) {
        for (long long j = 0; j < a; ++j) {
            long long sum = 0;
            for (long long t = 0; t < wc.length; ++t)
                sum += z[static_cast<std::size_t>((j + t) % a)];
            if (sum > wc.bound)
                return false;
        }
    }
    return true;
}

} // namespace

ZCoords::ZCoords(long long a, long long b0, std::vector<long long> z)
    : a_(a), b0_(b0), z_(std::move(z)) {
    require_coprime(a_, b0_);
    if (static_cast<long long>(z_.size()) != a_)
        throw std::invalid_argument("z-vector length must equal a");
    long long sum = 0;
    for (long long v : z_) {
        if (v < 0)
            throw std::invalid_argument("z-vector entries must be non-negative");
        sum += v;
    }
    if (sum != b0_)
        throw std::invalid_argument("z-vector entries must sum to b0");
    if (weighted_sum_mod(z_, a_) != 0)
        throw std::invalid_argument("weighted sum of z-vector must be divisible by a");
}

WindowConstraint window_constraint(long long a, long long b0, long long bi) {
    require_coprime(a, b0);
    if (bi < 1)
        throw std::invalid_argument("bi must be >= 1");
    if (bi % a == 0)
        throw std::invalid_argument("bi must not be a multiple of a");
    long long l = 0;
    for (long long cand = 1; cand < a; ++cand)
        if ((b0 * cand + bi) % a == 0) {
            l = cand;
            break;
        }
    // Exists and is unique since b0 is invertible mod a and a does not
    // divide bi.
    return WindowConstraint{l, (b0 * l + bi) / a};
}

ZCoords x_to_z(const XCoords& x, long long b0) {
    long long a = x.modulus();
    require_coprime(a, b0);
    long long k = proof_index(a, b0);
    std::vector<long long> z(static_cast<std::size_t>(a));
    for (long long m = 0; m < a; ++m) {
        long long i = floor_mod(m * b0 + k, a);
        long long j = floor_mod((m + 1) * b0 + k, a);
        // z_m = x_i - x_j + b0/a, over the common denominator 2a.
        long long num = x.num2a()[static_cast<std::size_t>(i)] -
                        x.num2a()[static_cast<std::size_t>(j)] + 2 * b0;
        if (num % (2 * a) != 0)
            throw std::logic_error("z entry is not an integer");
        long long zm = num / (2 * a);
        if (zm < 0)
            throw std::invalid_argument("x is not a b0-core");
        z[static_cast<std::size_t>(m)] = zm;
    }
    return ZCoords(a, b0, std::move(z));
}

XCoords z_to_x(const ZCoords& zc) {
    long long a = zc.modulus();
    long long b0 = zc.b0();
    long long k = proof_index(a, b0);
    // a*x_k = b0*(a-1)/2 - sum m*z_m, then walk the orbit of k under +b0:
    // x_{(m+1)b0+k} = x_{mb0+k} - z_m + b0/a. All arithmetic over 2a.
    long long wsum = 0;
    for (std::size_t m = 0; m < zc.z().size(); ++m)
        wsum += static_cast<long long>(m) * zc.z()[m];
    std::vector<long long> num(static_cast<std::size_t>(a));
    long long cur = b0 * (a - 1) - 2 * wsum; // 2a * x_k / a = ... over 2a
    num[static_cast<std::size_t>(k)] = cur;
    long long idx = k;
    for (long long m = 0; m < a - 1; ++m) {
        cur = cur - 2 * a * zc.z()[static_cast<std::size_t>(floor_mod(m, a))] +
              2 * b0;
        idx = floor_mod(idx + b0, a);
        num[static_cast<std::size_t>(idx)] = cur;
    }
    return XCoords(a, std::move(num));
}

std::vector<long long> rotate(const std::vector<long long>& z) {
    if (z.empty())
        return {};
    std::vector<long long> out(z.begin() + 1, z.end());
    out.push_back(z.front());
    return out;
}

std::pair<BigInt, BigInt> orbit_count_check(long long a, long long b0,
                                            const ZPredicate& predicate) {
    auto [y1, y2] = weighted_orbit_check(
        a, b0, predicate, [](const std::vector<long long>&) { return Rational(1); });
    return {BigInt(y1.get_num()), BigInt(y2.get_num())};
}

std::pair<Rational, Rational> weighted_orbit_check(long long a, long long b0,
                                                   const ZPredicate& predicate,
                                                   const ZWeight& weight) {
    require_coprime(a, b0);
    Rational sum1 = 0, sum2 = 0;
    for_each_composition(a, b0, [&](const std::vector<long long>& z) {
        bool in = predicate(z);
        auto rotated = rotate(z);
        if (predicate(rotated) != in)
            throw std::invalid_argument("predicate is not rotation-stable");
        if (!in)
            return;
        Rational w = weight(z);
        if (weight(rotated) != w)
            throw std::invalid_argument("weight is not rotation-invariant");
        sum2 += w;
        if (weighted_sum_mod(z, a) == 0)
            sum1 += w;
    });
    return {sum1, sum2};
}

std::vector<ZCoords> solution_set(long long a, long long b0,
                                  const std::vector<WindowConstraint>& constraints) {
    require_coprime(a, b0);
    std::vector<ZCoords> out;
    // DFS over z_0..z_{a-1} with running-sum pruning; cyclic windows wrap, so
    // window checks wait until the vector is complete.
    for_each_composition(a, b0, [&](const std::vector<long long>& z) {
        if (weighted_sum_mod(z, a) != 0)
            return;
        if (!windows_ok(z, constraints))
            return;
        out.emplace_back(a, b0, z);
    });
    return out;
}

} // namespace cores
