// siegelcong: level-1 elliptic modular forms and Hecke eigen-system counting
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "bernoulli.hpp"

namespace siegelcong {

/// Truncated q-expansion of a weight-w form: coefficients a(0)..a(P).
struct QExpansion {
    unsigned w = 0;
    std::vector<Rat> a;  // size P + 1

    std::int64_t prec() const { return static_cast<std::int64_t>(a.size()) - 1; }

    const Rat& at(std::int64_t n) const {
        if (n < 0 || n > prec()) throw std::out_of_range("coefficient index out of range");
        return a[static_cast<std::size_t>(n)];
    }

    void write(std::ostream& os) const {
        for (std::int64_t n = 0; n <= prec(); ++n) os << n << " " << to_string(a[n]) << "\n";
    }
    std::string str() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }

    bool operator==(const QExpansion& o) const = default;
};

inline QExpansion operator+(const QExpansion& f, const QExpansion& g) {
    QExpansion h{f.w, std::vector<Rat>(std::min(f.a.size(), g.a.size()))};
    for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] = f.a[i] + g.a[i];
    return h;
}

inline QExpansion operator-(const QExpansion& f, const QExpansion& g) {
    QExpansion h{f.w, std::vector<Rat>(std::min(f.a.size(), g.a.size()))};
    for (std::size_t i = 0; i < h.a.size(); ++i) h.a[i] = f.a[i] - g.a[i];
    return h;
}

inline QExpansion operator*(const Rat& c, const QExpansion& f) {
    QExpansion h = f;
    for (auto& x : h.a) x *= c;
    return h;
}

/// Product truncated to the shorter precision; weights add.
inline QExpansion operator*(const QExpansion& f, const QExpansion& g) {
    std::size_t n = std::min(f.a.size(), g.a.size());
    QExpansion h{f.w + g.w, std::vector<Rat>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (f.a[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (g.a[j] == 0) continue;
            h.a[i + j] += f.a[i] * g.a[j];
        }
    }
    return h;
}

inline QExpansion qexp_pow(const QExpansion& f, unsigned e, std::int64_t P) {
    QExpansion out{0, std::vector<Rat>(static_cast<std::size_t>(P) + 1)};
    out.a[0] = 1;
    for (unsigned i = 0; i < e; ++i) out = out * f;
    out.w = f.w * e;
    return out;
}

/// dim M_w(SL_2(Z)) for even w >= 0.
inline std::size_t dim_modforms(unsigned w) {
    if (w % 2 != 0) return 0;
    if (w % 12 == 2) return w / 12;
    return w / 12 + 1;
}

/// dim S_w(SL_2(Z)).
inline std::size_t dim_cuspforms(unsigned w) {
    std::size_t m = dim_modforms(w);
    return m > 0 ? m - 1 : 0;
}

/// Weight-w Eisenstein series normalized as a Hecke eigenform with a(1) = 1:
///   zeta(1-w)/2 + sum_{n>=1} sigma_{w-1}(n) q^n,
/// with T_ell eigenvalue 1 + ell^(w-1).
inline QExpansion eis1_q(unsigned w, std::int64_t P) {
    if (w < 4 || w % 2 != 0) throw std::domain_error("eis1_q requires even w >= 4");
    if (P < 0) throw std::domain_error("negative precision");
    QExpansion f{w, std::vector<Rat>(static_cast<std::size_t>(P) + 1)};
    f.a[0] = zeta_neg(w) / 2;
    for (std::int64_t n = 1; n <= P; ++n) f.a[n] = Rat(sigma(w - 1, Int(n)));
    return f;
}

namespace detail {

// Classical normalization with a(0) = 1: E_w = 1 + (2/zeta(1-w)) sum sigma q^n.
inline QExpansion eis_classical(unsigned w, std::int64_t P) {
    QExpansion f = eis1_q(w, P);
    return (Rat(1) / f.a[0]) * f;
}

inline QExpansion discriminant_form(std::int64_t P) {
    QExpansion e4 = eis_classical(4, P), e6 = eis_classical(6, P);
    return Rat(1, 1728) * (qexp_pow(e4, 3, P) - qexp_pow(e6, 2, P));
}

}  // namespace detail

/// Victor Miller basis of M_w: integral forms basis[i] = q^i + O(q^d) with
/// d = dim M_w, echelonized from products delta^i E4^a E6^b. Requires
/// precision P >= dim M_w.
inline std::vector<QExpansion> miller_basis(unsigned w, std::int64_t P) {
    if (w % 2 != 0) throw std::domain_error("miller_basis requires even w");
    if (P < 0) throw std::domain_error("negative precision");
    std::size_t d = dim_modforms(w);
    if (static_cast<std::size_t>(P) < d)
        throw std::domain_error("precision must be at least dim M_w = " + std::to_string(d));
    if (d == 0) return {};
    QExpansion e4 = detail::eis_classical(4, P), e6 = detail::eis_classical(6, P);
    QExpansion delta = detail::discriminant_form(P);
    std::vector<QExpansion> basis;
    for (std::size_t i = 0; i < d; ++i) {
        unsigned m = w - 12 * static_cast<unsigned>(i);
        unsigned b = (m % 4 == 2) ? 1 : 0;
        unsigned aexp = (m - 6 * b) / 4;
        QExpansion g = qexp_pow(delta, static_cast<unsigned>(i), P) *
                       qexp_pow(e4, aexp, P) * qexp_pow(e6, b, P);
        g.w = w;
        basis.push_back(std::move(g));
    }
    // leading terms are unitriangular: basis[i] = q^i + ..., so integer
    // row-reduction clears columns 0..d-1 above each pivot
    for (std::size_t i = d; i-- > 0;)
        for (std::size_t j = 0; j < i; ++j)
            basis[j] = basis[j] - (basis[j].a[i] * basis[i]);
    return basis;
}

/// Integer matrix of T_ell on the cuspidal Miller basis of S_w.
struct HeckeMatrix {
    std::int64_t ell = 0;
    unsigned w = 0;
    std::vector<std::vector<Int>> m;  // dim S_w square, column j = image of basis j

    std::size_t dim() const { return m.size(); }
};

/// Matrix of (T_ell f)(n) = a(ell n) + ell^(w-1) a(n / ell) on the cuspidal
/// part of the Miller basis. Requires P >= ell * dim S_w.
inline HeckeMatrix hecke_matrix(unsigned w, std::int64_t ell, std::int64_t P) {
    if (!is_prime(Int(ell))) throw std::domain_error("hecke_matrix requires a prime ell");
    std::size_t s = dim_cuspforms(w);
    if (P < ell * static_cast<std::int64_t>(s))
        throw std::domain_error("hecke_matrix needs precision >= ell * dim S_w");
    std::vector<QExpansion> basis = miller_basis(w, P);
    Int lw = pow_int(Int(ell), w - 1);
    HeckeMatrix H{ell, w, std::vector<std::vector<Int>>(s, std::vector<Int>(s, Int(0)))};
    for (std::size_t j = 1; j <= s; ++j) {
        const QExpansion& f = basis[j];
        for (std::size_t i = 1; i <= s; ++i) {
            std::int64_t n = static_cast<std::int64_t>(i);
            Rat v = f.at(ell * n);
            if (n % ell == 0) v += Rat(lw) * f.at(n / ell);
            if (denom(v) != 1) throw std::logic_error("non-integral Hecke entry");
            H.m[i - 1][j - 1] = numer(v);
        }
    }
    return H;
}

inline HeckeMatrix hecke_matrix(unsigned w, std::int64_t ell) {
    std::int64_t s = static_cast<std::int64_t>(dim_cuspforms(w));
    return hecke_matrix(w, ell, std::max<std::int64_t>(ell * s, dim_modforms(w)));
}

namespace detail {

inline Int modp(const Int& x, const Int& p) {
    Int r = x % p;
    if (r < 0) r += p;
    return r;
}

using ModMatrix = std::vector<std::vector<Int>>;

inline ModMatrix matmul_mod(const ModMatrix& A, const ModMatrix& B, const Int& p) {
    std::size_t n = A.size(), m = B[0].size(), k = B.size();
    ModMatrix C(n, std::vector<Int>(m, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (A[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) C[i][j] = (C[i][j] + A[i][l] * B[l][j]) % p;
        }
    return C;
}

inline std::size_t rank_mod(ModMatrix M, const Int& p) {
    std::size_t rows = M.size();
    if (rows == 0) return 0;
    std::size_t cols = M[0].size(), rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && M[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(M[rank], M[pivot]);
        Int inv = boost::multiprecision::powm(M[rank][col], Int(p - 2), p);
        for (std::size_t j = col; j < cols; ++j) M[rank][j] = M[rank][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || M[i][col] == 0) continue;
            Int factor = M[i][col];
            for (std::size_t j = col; j < cols; ++j)
                M[i][j] = modp(M[i][j] - factor * M[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Number of Hecke eigen-systems of S_w (counted with multiplicity over the
/// prime field) whose T_ell eigenvalue is congruent to 1 + ell^(w-1) mod p
/// for every prime ell <= ell_bound. Computed as the dimension of the joint
/// generalized eigenspace of the reduced Hecke matrices; no number-field
/// arithmetic is involved.
inline std::size_t count_congruent_systems(unsigned w, const Int& p,
                                           std::int64_t ell_bound = 20) {
    if (!is_prime(p)) throw std::domain_error("count_congruent_systems requires prime p");
    if (p < 5) throw std::domain_error("p = 2, 3 rejected");
    if (ell_bound < 2) throw std::domain_error("ell_bound must be >= 2");
    std::size_t s = dim_cuspforms(w);
    if (s == 0) return 0;
    std::int64_t P = ell_bound * static_cast<std::int64_t>(s);
    detail::ModMatrix stacked;
    for (Int ell = 2; ell <= ell_bound; ell = next_prime(ell)) {
        std::int64_t l = static_cast<std::int64_t>(ell);
        HeckeMatrix H = hecke_matrix(w, l, P);
        Int lw = boost::multiprecision::powm(Int(l), Int(w - 1), p);
        Int lambda = detail::modp(1 + lw, p);
        detail::ModMatrix M(s, std::vector<Int>(s));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                M[i][j] = detail::modp(H.m[i][j], p);
                if (i == j) M[i][j] = detail::modp(M[i][j] - lambda, p);
            }
        // generalized eigenspace: kernel of (T_ell - lambda I)^s
        detail::ModMatrix power = M;
        for (std::size_t e = 1; e < s; ++e) power = detail::matmul_mod(power, M, p);
        for (auto& row : power) stacked.push_back(std::move(row));
    }
    return s - detail::rank_mod(std::move(stacked), p);
}

/// Monic characteristic polynomial of an integer matrix, ascending
/// coefficients, via the Faddeev-LeVerrier recurrence (exact divisions).
inline std::vector<Int> charpoly(const std::vector<std::vector<Int>>& A) {
    std::size_t n = A.size();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    if (n == 0) return c;
    std::vector<std::vector<Int>> M(n, std::vector<Int>(n, Int(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        // M <- A (M + c_{n-k+1} I)
        std::vector<std::vector<Int>> B = M;
        for (std::size_t i = 0; i < n; ++i) B[i][i] += c[n - k + 1];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Int s = 0;
                for (std::size_t l = 0; l < n; ++l) s += A[i][l] * B[l][j];
                M[i][j] = s;
            }
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += M[i][i];
        if (tr % Int(k) != 0) throw std::logic_error("charpoly trace division not exact");
        c[n - k] = -tr / Int(k);
    }
    return c;
}

namespace detail {

// Fraction-free determinant (Bareiss) of an integer matrix.
inline Int det_bareiss(std::vector<std::vector<Int>> M) {
    std::size_t n = M.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && M[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

}  // namespace detail

/// Discriminant of a monic integer polynomial (ascending coefficients):
/// (-1)^(n(n-1)/2) Res(f, f'). Degree <= 1 gives 1.
inline Int poly_discriminant(const std::vector<Int>& f) {
    std::size_t n = f.size() - 1;
    if (f.empty() || f[n] != 1) throw std::domain_error("poly_discriminant expects monic input");
    if (n <= 1) return 1;
    std::vector<Int> df(n);
    for (std::size_t i = 1; i <= n; ++i) df[i - 1] = Int(i) * f[i];
    // Sylvester matrix of f (degree n) and f' (degree n-1)
    std::size_t dim = 2 * n - 1;
    std::vector<std::vector<Int>> S(dim, std::vector<Int>(dim, Int(0)));
    for (std::size_t r = 0; r < n - 1; ++r)
        for (std::size_t i = 0; i <= n; ++i) S[r][r + i] = f[n - i];
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i) S[n - 1 + r][r + i] = df[n - 1 - i];
    Int res = detail::det_bareiss(std::move(S));
    return (n * (n - 1) / 2) % 2 == 0 ? res : -res;
}

/// True iff the characteristic polynomial of T_2 on S_w has discriminant of
/// ord_p = 0 (the coefficient-field separability proxy; a repeated-root
/// discriminant of 0 returns false).
inline bool hecke_field_separability(unsigned w, const Int& p) {
    if (!is_prime(p)) throw std::domain_error("hecke_field_separability requires prime p");
    std::size_t s = dim_cuspforms(w);
    if (s <= 1) return true;
    Int disc = poly_discriminant(charpoly(hecke_matrix(w, 2).m));
    if (disc == 0) return false;
    return ord_int(disc, p) == 0;
}

}  // namespace siegelcong
