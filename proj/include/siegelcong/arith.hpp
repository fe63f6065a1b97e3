// siegelcong: exact arithmetic for Siegel Eisenstein congruence computations
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace siegelcong {

/// Arbitrary-precision integer. All computational-core arithmetic is exact;
/// no floating point appears anywhere below this layer.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (the backend canonicalizes on construction and after every
/// operation, so equality is structural).
using Rat = boost::multiprecision::cpp_rational;

inline Int numer(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int denom(const Rat& x) { return boost::multiprecision::denominator(x); }

/// Serializes as "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rat& x) {
    Int n = numer(x), d = denom(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline std::string to_string(const Int& n) { return n.str(); }

/// Parses the "num/den" form accepted by to_string. Throws
/// std::invalid_argument on malformed input.
inline Rat parse_rational(std::string_view s) {
    auto check_int = [](std::string_view t) {
        if (t.empty()) throw std::invalid_argument("empty integer literal");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("sign without digits");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("bad digit in rational literal");
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        check_int(s);
        return Rat(Int(std::string(s)));
    }
    std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
    check_int(ns);
    check_int(ds);
    Int d{std::string(ds)};
    if (d <= 0) throw std::invalid_argument("denominator must be positive");
    return Rat(Int(std::string(ns)), d);
}

inline Int parse_int(std::string_view s) {
    Rat r = parse_rational(s);
    if (denom(r) != 1) throw std::invalid_argument("expected an integer");
    return numer(r);
}

inline Int pow_int(const Int& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline Rat pow_rat(const Rat& base, unsigned exp) {
    return Rat(pow_int(numer(base), exp), pow_int(denom(base), exp));
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace detail {

inline const std::vector<std::int64_t>& small_primes() {
    static const std::vector<std::int64_t> primes = [] {
        std::vector<std::int64_t> p;
        std::vector<bool> composite(1 << 14, false);
        for (std::int64_t i = 2; i < (1 << 14); ++i) {
            if (composite[i]) continue;
            p.push_back(i);
            for (std::int64_t j = i * i; j < (1 << 14); j += i) composite[j] = true;
        }
        return p;
    }();
    return primes;
}

// Largest n for which the fixed Miller-Rabin witness set {2,...,41} is a
// deterministic primality certificate.
inline const Int& mr_certified_bound() {
    static const Int bound{"3317044064679887385961981"};
    return bound;
}

inline bool miller_rabin_witness(const Int& a, const Int& n, const Int& d, unsigned r) {
    Int x = boost::multiprecision::powm(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace detail

/// Deterministic primality test, certified for n below ~3.3e24 via the first
/// thirteen prime bases. Numbers past the certified bound are either proven
/// composite or rejected with std::domain_error; there is no probabilistic
/// acceptance path.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++r;
    }
    for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41})
        if (detail::miller_rabin_witness(Int(a), n, d, r)) return false;
    if (n >= detail::mr_certified_bound())
        throw std::domain_error("primality of " + n.str() +
                                " is not certifiable by the fixed witness set");
    return true;
}

/// Smallest prime strictly greater than n.
inline Int next_prime(Int n) {
    if (n < 2) return 2;
    Int c = n + 1 + (n % 2);
    while (!is_prime(c)) c += 2;
    return c;
}

/// Certified complete factorization, sorted by prime.
struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;

    Int value() const {
        Int v = 1;
        for (const auto& [p, e] : factors) v *= pow_int(p, e);
        return v;
    }
    bool contains(const Int& p) const {
        for (const auto& [q, e] : factors)
            if (q == p) return true;
        return false;
    }
};

namespace detail {

// Brent's cycle variant of Pollard rho. Returns a non-trivial factor of the
// odd composite n. Restarts with fresh parameters are seeded from n and the
// attempt counter, so results are reproducible.
inline Int pollard_brent(const Int& n, unsigned attempt) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + attempt * 0x100000001b3ULL +
                        static_cast<std::uint64_t>(n % Int("18446744073709551616")));
    auto rand_below = [&](const Int& m) { return Int(rng() % 0xffffffffffffffffULL) % m + 1; };
    Int y = rand_below(n - 1), c = rand_below(n - 1);
    Int g = 1, r = 1, q = 1, x = 0, ys = 0;
    const unsigned m = 128;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            ys = y;
            Int steps = std::min(Int(m), Int(r - k));
            for (Int i = 0; i < steps; ++i) {
                y = (y * y + c) % n;
                q = q * boost::multiprecision::abs(x - y) % n;
            }
            g = boost::multiprecision::gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            g = boost::multiprecision::gcd(boost::multiprecision::abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

}  // namespace detail

/// Factors n >= 1 by trial division, deterministic Miller-Rabin
/// certification, and Brent-variant Pollard rho for large cofactors.
inline Factorization factorize(Int n) {
    if (n < 1) throw std::domain_error("factorize requires n >= 1");
    Factorization out;
    auto add = [&](const Int& p, unsigned e) {
        for (auto& [q, f] : out.factors)
            if (q == p) {
                f += e;
                return;
            }
        out.factors.emplace_back(p, e);
    };
    for (std::int64_t p : detail::small_primes()) {
        if (n == 1) break;
        if (Int(p) * p > n) break;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) add(p, e);
    }
    std::vector<Int> pending;
    if (n > 1) pending.push_back(n);
    while (!pending.empty()) {
        Int m = pending.back();
        pending.pop_back();
        if (is_prime(m)) {
            add(m, 1);
            continue;
        }
        Int s = boost::multiprecision::sqrt(m);
        if (s * s == m) {
            pending.push_back(s);
            pending.push_back(s);
            continue;
        }
        Int g = m;
        for (unsigned attempt = 0; g == m; ++attempt) g = detail::pollard_brent(m, attempt);
        pending.push_back(g);
        pending.push_back(m / g);
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

/// ord_p of a non-zero integer.
inline long ord_int(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("ord_int of zero");
    long v = 0;
    Int q, r;
    while (true) {
        boost::multiprecision::divide_qr(n, p, q, r);
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

/// Sentinel value of ord_p at zero (all finite valuations compare below it).
inline constexpr long ord_infinity = std::numeric_limits<long>::max();

namespace detail {
// Valuation without the primality check, for hot loops that validated p once.
inline long ord_p_unchecked(const Rat& x, const Int& p) {
    if (x == 0) return ord_infinity;
    long v = 0;
    Int n = numer(x);
    if (n % p == 0) v = ord_int(n, p);
    Int d = denom(x);
    if (d % p == 0) v -= ord_int(d, p);
    return v;
}
}  // namespace detail

/// p-adic valuation of a rational; returns ord_infinity exactly for x = 0.
/// Rejects non-prime p.
inline long ord_p(const Rat& x, const Int& p) {
    if (!is_prime(p)) throw std::domain_error("ord_p requires a prime p");
    return detail::ord_p_unchecked(x, p);
}

/// Divisor power sum: sigma_w(n) = sum of d^w over d | n. Rejects n = 0.
inline Int sigma(unsigned w, const Int& n) {
    if (n < 1) throw std::domain_error("sigma requires n >= 1");
    Int out = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        Int term = 1, pw = pow_int(p, w), acc = 1;
        for (unsigned i = 0; i < e; ++i) {
            acc *= pw;
            term += acc;
        }
        out *= term;
    }
    return out;
}

/// Kronecker symbol (D | n), extended to all integers; completely
/// multiplicative in n with period |D| when D is a discriminant.
inline int kronecker(Int a, Int n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        Int a8 = ((a % 8) + 8) % 8;
        if (a8 == 3 || a8 == 5) result = -result;
    }
    // Jacobi symbol on odd n > 0 by quadratic reciprocity.
    a = ((a % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int n8 = n % 8;
            if (n8 == 3 || n8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return (n == 1) ? result : 0;
}

inline Int mod4(const Int& n) { return ((n % 4) + 4) % 4; }

/// True iff d is a fundamental discriminant: d = 1, or d ≡ 1 mod 4 and
/// squarefree, or d = 4m with m ≡ 2,3 mod 4 and squarefree.
inline bool is_fundamental_discriminant(const Int& d) {
    if (d == 0) return false;
    if (d == 1) return true;
    auto squarefree = [](const Int& n) {
        for (const auto& [p, e] : factorize(boost::multiprecision::abs(n)).factors)
            if (e > 1) return false;
        return true;
    };
    if (mod4(d) == 1) return squarefree(d);
    if (d % 4 == 0) {
        Int m = d / 4;
        Int m4 = mod4(m);
        if (m4 == 2 || m4 == 3) return squarefree(m);
    }
    return false;
}

/// Writes -N = d * f^2 with d < 0 a fundamental discriminant.
/// Requires -N ≡ 0,1 mod 4 (i.e. N ≡ 0,3 mod 4), N > 0.
inline std::pair<Int, Int> fundamental_decomposition(const Int& N) {
    if (N <= 0) throw std::domain_error("fundamental_decomposition requires N > 0");
    Int r = mod4(-N);
    if (r != 0 && r != 1)
        throw std::domain_error("-N must be 0 or 1 mod 4, got N = " + N.str());
    Int s = 1;
    for (const auto& [p, e] : factorize(N).factors)
        if (e % 2 == 1) s *= p;
    Int d, f2;
    if (mod4(-s) == 1) {
        d = -s;
        f2 = N / s;
    } else {
        d = -4 * s;
        f2 = N / (4 * s);
    }
    Int f = boost::multiprecision::sqrt(f2);
    return {d, f};
}

}  // namespace siegelcong
