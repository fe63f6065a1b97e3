// siegelcong: Bernoulli numbers, quadratic characters, special L-values
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace siegelcong {

namespace detail {

struct BernoulliTable {
    std::vector<Rat> values{Rat(1)};  // B_0
    std::mutex mu;

    // Extends via the binomial recurrence
    //   sum_{i=0}^{m} C(m+1, i) B_i = 0  for m >= 1,
    // in the B_1 = -1/2 convention.
    Rat get(unsigned n) {
        std::lock_guard<std::mutex> lock(mu);
        while (values.size() <= n) {
            unsigned m = static_cast<unsigned>(values.size());
            Rat s = 0;
            for (unsigned i = 0; i < m; ++i) s += Rat(binomial(m + 1, i)) * values[i];
            values.push_back(-s / Rat(m + 1));
        }
        return values[n];
    }
};

inline BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

}  // namespace detail

/// Bernoulli number B_n with B_1 = -1/2. Memoized; safe to call concurrently.
inline Rat bernoulli(unsigned n) { return detail::bernoulli_table().get(n); }

/// Bernoulli polynomial B_n(x) = sum_i C(n, i) B_i x^(n-i).
inline Rat bernoulli_poly(unsigned n, const Rat& x) {
    Rat s = 0;
    for (unsigned i = 0; i <= n; ++i)
        s += Rat(binomial(n, i)) * bernoulli(i) * pow_rat(x, n - i);
    return s;
}

/// Real primitive quadratic character attached to a fundamental discriminant,
/// evaluated through the Kronecker symbol.
class QuadChar {
public:
    explicit QuadChar(Int d) : d_(std::move(d)) {
        if (!is_fundamental_discriminant(d_))
            throw std::domain_error("QuadChar requires a fundamental discriminant, got " +
                                    d_.str());
    }

    const Int& discriminant() const { return d_; }
    Int conductor() const { return boost::multiprecision::abs(d_); }
    int operator()(const Int& n) const { return kronecker(d_, n); }
    /// chi(-1): +1 for even characters (d > 0), -1 for odd (d < 0).
    int parity() const { return d_ > 0 ? 1 : -1; }

private:
    Int d_;
};

namespace detail {

struct GenBernoulliTable {
    std::map<std::pair<unsigned, Int>, Rat> values;
    std::mutex mu;
};

inline GenBernoulliTable& gen_bernoulli_table() {
    static GenBernoulliTable table;
    return table;
}

}  // namespace detail

/// Generalized Bernoulli number B_{n,chi} for chi of conductor f, computed
/// from ordinary Bernoulli numbers and the weighted power sums
/// S_j = sum_{a=1}^{f} chi(a) a^j:
///   B_{n,chi} = sum_{i=0}^{n} C(n, i) B_i f^(i-1) S_{n-i}.
/// For the trivial character (d = 1) this reproduces B_n except that
/// B_{1,triv} = +1/2. Memoized per (n, d).
inline Rat gen_bernoulli(unsigned n, const QuadChar& chi) {
    if (n == 0 && chi.discriminant() != 1)
        return 0;  // non-trivial characters have vanishing 0-th number
    auto& table = detail::gen_bernoulli_table();
    std::pair<unsigned, Int> key{n, chi.discriminant()};
    {
        std::lock_guard<std::mutex> lock(table.mu);
        auto it = table.values.find(key);
        if (it != table.values.end()) return it->second;
    }
    Int f = chi.conductor();
    std::vector<Int> S(n + 1, Int(0));
    for (Int a = 1; a <= f; ++a) {
        int c = chi(a);
        if (c == 0) continue;
        Int power = 1;  // a^0
        for (unsigned j = 0; j <= n; ++j) {
            S[j] += c > 0 ? power : -power;
            power *= a;
        }
    }
    Rat out = 0;
    for (unsigned i = 0; i <= n; ++i) {
        // f^(i-1) with i = 0 contributing the exact rational 1/f
        Rat fpow = (i == 0) ? Rat(1, f) : Rat(pow_int(f, i - 1));
        out += Rat(binomial(n, i)) * bernoulli(i) * fpow * Rat(S[n - i]);
    }
    std::lock_guard<std::mutex> lock(table.mu);
    table.values.emplace(key, out);
    return out;
}

/// zeta(1 - k) = -B_k / k for even k >= 2.
inline Rat zeta_neg(unsigned k) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("zeta_neg requires even k >= 2");
    return -bernoulli(k) / Rat(k);
}

/// L(1 - n, chi) = -B_{n,chi} / n for n >= 1.
inline Rat L_neg(unsigned n, const QuadChar& chi) {
    if (n < 1) throw std::domain_error("L_neg requires n >= 1");
    return -gen_bernoulli(n, chi) / Rat(n);
}

}  // namespace siegelcong
