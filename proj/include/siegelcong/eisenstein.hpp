// siegelcong: degree-2 Siegel Eisenstein series Fourier coefficients
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "bernoulli.hpp"
#include "cohen.hpp"
#include "quadform.hpp"

namespace siegelcong {

/// Rank-2 coefficient convention. content_sum applies the divisor sum over
/// the content of T (the default); det_only evaluates the determinant-level
/// formula L(2-k, chi_d) * siegel_factor, which depends on det2(T) alone.
/// The two agree exactly on forms of content 1.
enum class Variant { content_sum, det_only };

inline std::string variant_name(Variant v) {
    return v == Variant::content_sum ? "content-sum" : "det-only";
}

inline Variant parse_variant(const std::string& s) {
    if (s == "content-sum") return Variant::content_sum;
    if (s == "det-only") return Variant::det_only;
    throw std::invalid_argument("unknown variant '" + s + "' (content-sum, det-only)");
}

/// Normalized weight-k Eisenstein series of degree 2, scaled so that its
/// coefficients are the zeta-value multiples below (rank-0 coefficient
/// (1/2) zeta(1-k) zeta(3-2k) rather than 1).
struct EisensteinSpec {
    unsigned k;
    Variant variant = Variant::content_sum;

    explicit EisensteinSpec(unsigned k_, Variant v = Variant::content_sum)
        : k(k_), variant(v) {
        if (k < 4 || k % 2 != 0)
            throw std::domain_error("EisensteinSpec requires even k >= 4");
    }
};

/// Rank-0 coefficient: (1/2) zeta(1-k) zeta(3-2k).
inline Rat eis_coeff_rank0(const EisensteinSpec& spec) {
    return Rat(1, 2) * zeta_neg(spec.k) * zeta_neg(2 * spec.k - 2);
}

/// Rank-1 coefficient at the class diag(n, 0): zeta(3-2k) * sigma_{k-1}(n).
inline Rat eis_coeff_rank1(const EisensteinSpec& spec, std::int64_t n) {
    if (n < 1) throw std::domain_error("rank-1 index must be >= 1");
    return zeta_neg(2 * spec.k - 2) * Rat(sigma(spec.k - 1, Int(n)));
}

/// Rank-2 coefficient of a positive definite T.
inline Rat eis_coeff_rank2(const EisensteinSpec& spec, const HalfIntSym& T) {
    if (!T.is_valid() || T.rank() != 2)
        throw std::domain_error("rank-2 coefficient needs a positive definite form");
    unsigned r = spec.k - 1;
    Int N{T.det2()};
    if (spec.variant == Variant::det_only) {
        auto [d, f] = fundamental_decomposition(N);
        return L_neg(r, QuadChar(d)) * Rat(siegel_factor(N, spec.k));
    }
    Rat out = 0;
    std::int64_t content = T.content();
    for (std::int64_t e = 1; e <= content; ++e) {
        if (content % e != 0) continue;
        out += Rat(pow_int(Int(e), r)) * cohen_H(r, N / (Int(e) * e));
    }
    return out;
}

/// Coefficient at an arbitrary class index.
inline Rat eis_coeff(const EisensteinSpec& spec, const SeriesKey& key) {
    switch (key.rank) {
        case 0: return eis_coeff_rank0(spec);
        case 1: return eis_coeff_rank1(spec, key.n);
        default: return eis_coeff_rank2(spec, key.T);
    }
}

inline Rat eis_coeff(const EisensteinSpec& spec, const HalfIntSym& T) {
    switch (T.rank()) {
        case 0: return eis_coeff_rank0(spec);
        case 1: return eis_coeff_rank1(spec, rank1_invariant(T));
        default: return eis_coeff_rank2(spec, T);
    }
}

/// Full truncated expansion: rank 0, rank-1 n <= max_det, and every reduced
/// positive definite T with det2 <= max_det.
inline TIndexedSeries eis_expansion(const EisensteinSpec& spec, std::int64_t max_det) {
    if (max_det < 3) throw std::domain_error("expansion requires max_det >= 3");
    TIndexedSeries s;
    s.k = static_cast<int>(spec.k);
    s.max_det = max_det;
    s.variant = variant_name(spec.variant);
    s.rank0 = eis_coeff_rank0(spec);
    for (std::int64_t n = 1; n <= max_det; ++n) s.rank1[n] = eis_coeff_rank1(spec, n);
    for (const HalfIntSym& T : enumerate_reduced(max_det))
        s.rank2[T] = eis_coeff_rank2(spec, T);
    return s;
}

/// Outcome of a p-integrality scan over a truncated expansion.
struct IntegralityReport {
    unsigned k = 0;
    Int p;
    std::int64_t max_det = 0;
    std::string variant;
    /// Keys whose coefficient has ord_p < 0, with the offending valuation.
    std::vector<std::pair<SeriesKey, long>> violations;

    bool ok() const { return violations.empty(); }
};

/// Verifies ord_p >= 0 for every coefficient of expansion(spec, max_det).
/// Requires p prime with p - 1 > 2k - 2 (the integrality hypothesis); other
/// p are rejected, not reported as failures.
inline IntegralityReport check_integrality(const EisensteinSpec& spec, const Int& p,
                                           std::int64_t max_det) {
    if (!is_prime(p)) throw std::domain_error("check_integrality requires a prime p");
    if (p - 1 <= 2 * Int(spec.k) - 2)
        throw std::domain_error("integrality hypothesis needs p - 1 > 2k - 2, got p = " +
                                p.str());
    TIndexedSeries s = eis_expansion(spec, max_det);
    IntegralityReport report{spec.k, p, max_det, s.variant, {}};
    for (const SeriesKey& key : s.keys()) {
        long v = detail::ord_p_unchecked(s.at(key), p);
        if (v < 0) report.violations.emplace_back(key, v);
    }
    return report;
}

/// True iff every degenerate coefficient (rank 0 and all rank-1 n <= max_det)
/// has ord_p >= 1.
inline bool degenerate_vanishing(const EisensteinSpec& spec, const Int& p,
                                 std::int64_t max_det) {
    if (!is_prime(p)) throw std::domain_error("degenerate_vanishing requires a prime p");
    if (detail::ord_p_unchecked(eis_coeff_rank0(spec), p) < 1) return false;
    for (std::int64_t n = 1; n <= max_det; ++n)
        if (detail::ord_p_unchecked(eis_coeff_rank1(spec, n), p) < 1) return false;
    return true;
}

}  // namespace siegelcong
