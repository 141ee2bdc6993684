#include "cores/abacus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cores {

namespace {

long long floor_mod(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

long long floor_div(long long v, long long m) {
    return (v - floor_mod(v, m)) / m;
}

/// Numerator of the fixed fractional offset i/a - (a-1)/(2a) over 2a.
long long offset_num(long long a, long long i) { return 2 * i - (a - 1); }

} // namespace

CCoords::CCoords(long long a, std::vector<long long> c)
    : a_(a), c_(std::move(c)) {
    if (a_ < 2)
        throw std::invalid_argument("modulus a must be >= 2");
    if (static_cast<long long>(c_.size()) != a_)
        throw std::invalid_argument("c-vector length must equal a");
    long long sum = std::accumulate(c_.begin(), c_.end(), 0LL);
    if (sum != 0)
        throw std::invalid_argument("c-vector entries must sum to zero");
}

XCoords::XCoords(long long a, std::vector<long long> num2a)
    : a_(a), num2a_(std::move(num2a)) {
    if (a_ < 2)
        throw std::invalid_argument("modulus a must be >= 2");
    if (static_cast<long long>(num2a_.size()) != a_)
        throw std::invalid_argument("x-vector length must equal a");
    long long sum = 0;
    for (long long i = 0; i < a_; ++i) {
        sum += num2a_[static_cast<std::size_t>(i)];
        if (floor_mod(num2a_[static_cast<std::size_t>(i)] - offset_num(a_, i),
                      2 * a_) != 0)
            throw std::invalid_argument("x-vector fractional part invariant violated");
    }
    if (sum != 0)
        throw std::invalid_argument("x-vector entries must sum to zero");
}

Rational XCoords::at(std::size_t i) const {
    Rational r(static_cast<long>(num2a_.at(i)), static_cast<long>(2 * a_));
    r.canonicalize();
    return r;
}

CCoords partition_to_c(const Partition& p, long long a) {
    if (a < 2)
        throw std::invalid_argument("modulus a must be >= 2");
    if (!is_t_core(p, a))
        throw std::invalid_argument("not an a-core");
    // Black bead positions: b_j = j - 1 - part_j for j >= 1 (zero parts
    // included). In each residue row the beads of an a-core are flush, so
    // c_i = (s_i - i)/a with s_i the least black position in row i.
    long long n = static_cast<long long>(p.num_parts());
    std::vector<long long> first(static_cast<std::size_t>(a),
                                 std::numeric_limits<long long>::max());
    for (long long j = 1; j <= n + a; ++j) {
        long long pos = j - 1 - p.part(static_cast<std::size_t>(j));
        std::size_t row = static_cast<std::size_t>(floor_mod(pos, a));
        first[row] = std::min(first[row], pos);
    }
    std::vector<long long> c(static_cast<std::size_t>(a));
    for (long long i = 0; i < a; ++i)
        c[static_cast<std::size_t>(i)] =
            floor_div(first[static_cast<std::size_t>(i)] - i, a);
    return CCoords(a, std::move(c));
}

Partition c_to_partition(const CCoords& cc) {
    long long a = cc.modulus();
    const auto& c = cc.c();
    // Row i is black from s_i = i + a*c_i upward. List the black positions
    // below the point where every row has turned black; the j-th smallest
    // black bead b_j carries part j - 1 - b_j.
    long long hi = std::numeric_limits<long long>::min();
    long long lo = std::numeric_limits<long long>::max();
    std::vector<long long> start(static_cast<std::size_t>(a));
    for (long long i = 0; i < a; ++i) {
        long long s = i + a * c[static_cast<std::size_t>(i)];
        start[static_cast<std::size_t>(i)] = s;
        hi = std::max(hi, s);
        lo = std::min(lo, s);
    }
    std::vector<long long> blacks;
    for (long long pos = lo; pos < hi; ++pos)
        if (pos >= start[static_cast<std::size_t>(floor_mod(pos, a))])
            blacks.push_back(pos);
    std::vector<long long> parts;
    for (std::size_t j = 0; j < blacks.size(); ++j) {
        long long part = static_cast<long long>(j) - blacks[j];
        if (part > 0)
            parts.push_back(part);
    }
    return Partition(std::move(parts));
}

XCoords c_to_x(const CCoords& cc) {
    long long a = cc.modulus();
    std::vector<long long> num(static_cast<std::size_t>(a));
    for (long long i = 0; i < a; ++i)
        num[static_cast<std::size_t>(i)] =
            2 * a * cc.c()[static_cast<std::size_t>(i)] + offset_num(a, i);
    return XCoords(a, std::move(num));
}

CCoords x_to_c(const XCoords& x) {
    long long a = x.modulus();
    std::vector<long long> c(static_cast<std::size_t>(a));
    for (long long i = 0; i < a; ++i) {
        long long diff = x.num2a()[static_cast<std::size_t>(i)] - offset_num(a, i);
        // XCoords validation guarantees 2a | diff.
        c[static_cast<std::size_t>(i)] = diff / (2 * a);
    }
    return CCoords(a, std::move(c));
}

BigInt size_from_c(const CCoords& cc) {
    long long a = cc.modulus();
    BigInt twice = 0;
    for (long long k = 0; k < a; ++k) {
        BigInt ck = static_cast<long>(cc.c()[static_cast<std::size_t>(k)]);
        twice += static_cast<long>(a) * ck * ck + static_cast<long>(2 * k) * ck;
    }
    // The sum a/2*c_k^2 + k*c_k is always an integer.
    return twice / 2;
}

bool is_selfconjugate_c(const CCoords& cc) {
    long long a = cc.modulus();
    const auto& c = cc.c();
    for (long long i = 0; i < a; ++i)
        if (c[static_cast<std::size_t>(i)] !=
            -c[static_cast<std::size_t>(a - 1 - i)])
            return false;
    return true;
}

bool is_bcore_c(const CCoords& cc, long long b) {
    if (b < 1)
        throw std::invalid_argument("b must be >= 1");
    long long a = cc.modulus();
    const auto& c = cc.c();
    for (long long i = 0; i < a; ++i) {
        long long j = (i + b) % a;
        if (c[static_cast<std::size_t>(j)] - c[static_cast<std::size_t>(i)] >
            (b + i) / a)
            return false;
    }
    return true;
}

bool is_bcore_x(const XCoords& x, long long b) {
    if (b < 1)
        throw std::invalid_argument("b must be >= 1");
    long long a = x.modulus();
    // x_{(i+b) mod a} - x_i <= b/a, over the common denominator 2a:
    // num_{(i+b) mod a} - num_i <= 2b.
    for (long long i = 0; i < a; ++i) {
        long long j = (i + b) % a;
        if (x.num2a()[static_cast<std::size_t>(j)] -
                x.num2a()[static_cast<std::size_t>(i)] >
            2 * b)
            return false;
    }
    return true;
}

} // namespace cores
