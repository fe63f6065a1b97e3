// siegelcong: Cohen class-number function H(r, N) and local Siegel polynomials
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <vector>

#include "arith.hpp"
#include "bernoulli.hpp"

namespace siegelcong {

/// Local polynomial S_{N,q}(X) attached to the prime q and a determinant
/// value N with -N = d f^2, d fundamental. Degree e = ord_q(f). Defined by
///   S_0 = 1,
///   S_1 = X - chi_d(q) q^(k-2),
///   S_e = X S_{e-1} - q^(2k-3) S_{e-2}.
struct LocalPoly {
    std::vector<Int> coeffs;  // ascending powers of X
    Int N;
    Int q;
    unsigned k = 0;
    unsigned e = 0;

    Int eval(const Int& x) const {
        Int v = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
        return v;
    }
    Rat eval(const Rat& x) const {
        Rat v = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + Rat(*it);
        return v;
    }
};

/// Builds S_{N,q} for weight k. Requires N > 0 with -N ≡ 0,1 mod 4, q prime,
/// k >= 3.
inline LocalPoly local_poly(const Int& N, const Int& q, unsigned k) {
    if (!is_prime(q)) throw std::domain_error("local_poly requires a prime q");
    if (k < 3) throw std::domain_error("local_poly requires k >= 3");
    auto [d, f] = fundamental_decomposition(N);
    unsigned e = static_cast<unsigned>(ord_int(f, q));
    int chi = kronecker(d, q);
    Int qk2 = pow_int(q, k - 2);
    Int q2k3 = pow_int(q, 2 * k - 3);
    std::vector<Int> prev{Int(1)};  // S_0
    if (e == 0) return {prev, N, q, k, e};
    std::vector<Int> cur{-Int(chi) * qk2, Int(1)};  // S_1
    for (unsigned j = 2; j <= e; ++j) {
        std::vector<Int> next(j + 1, Int(0));
        for (unsigned i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
        for (unsigned i = 0; i < prev.size(); ++i) next[i] -= q2k3 * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {cur, N, q, k, e};
}

/// Product over primes q | f of S_{N,q}(1 + q^(2k-3)), where -N = d f^2.
/// Always a positive integer; equals 1 when f = 1.
inline Int siegel_factor(const Int& N, unsigned k) {
    if (k < 3) throw std::domain_error("siegel_factor requires k >= 3");
    auto [d, f] = fundamental_decomposition(N);
    Int out = 1;
    for (const auto& [q, e] : factorize(f).factors)
        out *= local_poly(N, q, k).eval(Int(1 + pow_int(q, 2 * k - 3)));
    return out;
}

/// Cohen's function H(r, N) for odd r >= 3:
///   H(r, 0)              = zeta(1 - 2r),
///   H(r, N)              = 0 unless -N ≡ 0,1 mod 4,
///   H(r, N), -N = d f^2  = L(2 - k, chi_d) * siegel_factor(N, k), k = r + 1.
inline Rat cohen_H(unsigned r, const Int& N) {
    if (r < 3 || r % 2 == 0) throw std::domain_error("cohen_H requires odd r >= 3");
    if (N < 0) throw std::domain_error("cohen_H requires N >= 0");
    if (N == 0) return zeta_neg(2 * r);
    Int rem = mod4(-N);
    if (rem != 0 && rem != 1) return 0;
    unsigned k = r + 1;
    auto [d, f] = fundamental_decomposition(N);
    return L_neg(k - 1, QuadChar(d)) * Rat(siegel_factor(N, k));
}

}  // namespace siegelcong
