// siegelcong: half-integral binary quadratic forms and coefficient series
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "arith.hpp"

namespace siegelcong {

/// Positive semi-definite half-integral symmetric 2x2 matrix
/// [[a, b/2], [b/2, c]] with integer a, b, c. Fields are 64-bit; callers keep
/// 4ac - b^2 within that range.
struct HalfIntSym {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    /// 4 * det = 4ac - b^2.
    std::int64_t det2() const { return 4 * a * c - b * b; }

    bool is_valid() const { return a >= 0 && c >= 0 && det2() >= 0; }

    int rank() const {
        if (a == 0 && b == 0 && c == 0) return 0;
        return det2() == 0 ? 1 : 2;
    }

    /// gcd of the entries 2-adically adjusted: gcd(a, b, c). Rejects the zero
    /// matrix.
    std::int64_t content() const {
        if (rank() == 0) throw std::domain_error("content of the zero matrix");
        return std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c));
    }

    bool operator==(const HalfIntSym& o) const = default;
};

/// Canonical order on forms: by (det2, a, b). Injective on valid triples
/// since c is determined by the other three values.
inline bool operator<(const HalfIntSym& x, const HalfIntSym& y) {
    return std::tuple(x.det2(), x.a, x.b) < std::tuple(y.det2(), y.a, y.b);
}

/// For a rank-1 form, the integer n such that T is unimodularly equivalent to
/// diag(n, 0); equals gcd(a, b, c). Class invariant that rank-1 coefficients
/// factor through.
inline std::int64_t rank1_invariant(const HalfIntSym& T) {
    if (T.rank() != 1) throw std::domain_error("rank1_invariant requires a rank-1 form");
    return T.content();
}

/// Gauss-reduced: |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
inline bool is_reduced(const HalfIntSym& T) {
    if (T.a <= 0 || T.det2() <= 0) return false;
    if (!(std::llabs(T.b) <= T.a && T.a <= T.c)) return false;
    if (T.b < 0 && (-T.b == T.a || T.a == T.c)) return false;
    return true;
}

/// Gauss reduction of a positive definite form to its unique reduced
/// representative in the unimodular class.
inline HalfIntSym reduce(HalfIntSym T) {
    if (!T.is_valid() || T.det2() <= 0 || T.a <= 0)
        throw std::domain_error("reduce requires a positive definite form");
    while (true) {
        // shift b into (-a, a]
        std::int64_t twoA = 2 * T.a;
        std::int64_t r = T.b % twoA;
        if (r < 0) r += twoA;
        if (r > T.a) r -= twoA;
        std::int64_t m = (r - T.b) / twoA;
        T.c += m * T.b + m * m * T.a;
        T.b = r;
        if (T.a > T.c) {
            std::swap(T.a, T.c);
            T.b = -T.b;
            continue;
        }
        break;
    }
    if (T.b < 0 && (-T.b == T.a || T.a == T.c)) T.b = -T.b;
    return T;
}

/// All reduced positive definite forms with 1 <= det2 <= max_det2, sorted in
/// canonical (det2, a, b) order.
inline std::vector<HalfIntSym> enumerate_reduced(std::int64_t max_det2) {
    if (max_det2 < 0) throw std::domain_error("enumerate_reduced requires max_det2 >= 0");
    std::vector<HalfIntSym> out;
    for (std::int64_t a = 1; 3 * a * a <= max_det2; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            for (std::int64_t c = a; 4 * a * c - b * b <= max_det2; ++c) {
                HalfIntSym T{a, b, c};
                if (T.det2() >= 1 && is_reduced(T)) out.push_back(T);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Index of one Fourier coefficient: the zero matrix (rank 0), diag(n, 0)
/// classes (rank 1), or a reduced positive definite form (rank 2).
struct SeriesKey {
    int rank = 0;
    std::int64_t n = 0;  // rank 1 only
    HalfIntSym T{};      // rank 2 only

    static SeriesKey zero() { return {}; }
    static SeriesKey diag(std::int64_t n) { return {1, n, {}}; }
    static SeriesKey form(const HalfIntSym& T) { return {2, 0, T}; }

    bool operator==(const SeriesKey& o) const = default;
};

inline bool operator<(const SeriesKey& x, const SeriesKey& y) {
    if (x.rank != y.rank) return x.rank < y.rank;
    if (x.rank == 1) return x.n < y.n;
    if (x.rank == 2) return x.T < y.T;
    return false;
}

inline std::string to_string(const SeriesKey& key) {
    switch (key.rank) {
        case 0: return "rank0";
        case 1: return "rank1 " + std::to_string(key.n);
        default:
            return "rank2 " + std::to_string(key.T.a) + " " + std::to_string(key.T.b) +
                   " " + std::to_string(key.T.c);
    }
}

/// Fourier coefficients of a degree-2 modular form truncated at det2 <=
/// max_det, stored by class representative. The text serialization is
/// line-oriented:
///
///   k 10 maxdet 12 variant content-sum
///   rank0 43867/3792096
///   rank1 1 -43867/14364
///   rank2 1 0 1 1385/2
///
/// '#' starts a comment line; blank lines are ignored.
struct TIndexedSeries {
    int k = 0;
    std::int64_t max_det = 0;
    std::string variant;
    Rat rank0 = 0;
    std::map<std::int64_t, Rat> rank1;
    std::map<HalfIntSym, Rat> rank2;

    bool operator==(const TIndexedSeries& o) const = default;

    Rat at(const SeriesKey& key) const {
        switch (key.rank) {
            case 0: return rank0;
            case 1: {
                auto it = rank1.find(key.n);
                if (it == rank1.end()) throw std::out_of_range("no rank1 entry " + std::to_string(key.n));
                return it->second;
            }
            default: {
                auto it = rank2.find(key.T);
                if (it == rank2.end()) throw std::out_of_range("no rank2 entry " + to_string(key));
                return it->second;
            }
        }
    }

    std::vector<SeriesKey> keys() const {
        std::vector<SeriesKey> out;
        out.push_back(SeriesKey::zero());
        for (const auto& [n, v] : rank1) out.push_back(SeriesKey::diag(n));
        for (const auto& [T, v] : rank2) out.push_back(SeriesKey::form(T));
        return out;
    }

    void write(std::ostream& os) const {
        os << "k " << k << " maxdet " << max_det << " variant " << variant << "\n";
        os << "rank0 " << to_string(rank0) << "\n";
        for (const auto& [n, v] : rank1) os << "rank1 " << n << " " << to_string(v) << "\n";
        for (const auto& [T, v] : rank2)
            os << "rank2 " << T.a << " " << T.b << " " << T.c << " " << to_string(v) << "\n";
    }

    std::string str() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }

    static TIndexedSeries read(std::istream& is) {
        TIndexedSeries s;
        std::string line;
        bool saw_header = false, saw_rank0 = false;
        std::size_t lineno = 0;
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("series parse error at line " +
                                        std::to_string(lineno) + ": " + why);
        };
        while (std::getline(is, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::string tag;
            if (!(ls >> tag)) continue;           // blank
            if (tag[0] == '#') continue;          // comment
            if (!saw_header) {
                if (tag != "k") fail("expected header 'k <k> maxdet <n> variant <name>'");
                std::string kw1, kw2;
                if (!(ls >> s.k >> kw1 >> s.max_det >> kw2 >> s.variant) || kw1 != "maxdet" ||
                    kw2 != "variant")
                    fail("malformed header");
                saw_header = true;
                continue;
            }
            if (tag == "rank0") {
                std::string v;
                if (!(ls >> v)) fail("rank0 needs a value");
                s.rank0 = parse_rational(v);
                saw_rank0 = true;
            } else if (tag == "rank1") {
                std::int64_t n;
                std::string v;
                if (!(ls >> n >> v)) fail("rank1 needs '<n> <value>'");
                if (n < 1) fail("rank1 index must be >= 1");
                s.rank1[n] = parse_rational(v);
            } else if (tag == "rank2") {
                HalfIntSym T;
                std::string v;
                if (!(ls >> T.a >> T.b >> T.c >> v)) fail("rank2 needs '<a> <b> <c> <value>'");
                if (!T.is_valid() || T.det2() < 1) fail("rank2 entry is not positive definite");
                s.rank2[T] = parse_rational(v);
            } else {
                fail("unknown tag '" + tag + "'");
            }
        }
        if (!saw_header) {
            lineno = 0;
            fail("missing header");
        }
        if (!saw_rank0) fail("missing rank0 entry");
        return s;
    }

    static TIndexedSeries parse(const std::string& text) {
        std::istringstream is(text);
        return read(is);
    }
};

}  // namespace siegelcong
