// siegelcong: Saito-Kurokawa coefficient synthesis and mod-p congruence checks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "bernoulli.hpp"
#include "cohen.hpp"
#include "eisenstein.hpp"
#include "quadform.hpp"

namespace siegelcong {

/// Coefficients a_h(N) of a half-integral weight form in the plus space:
/// support restricted to N ≡ 0, 3 mod 4.
struct HalfIntegralData {
    unsigned k = 0;  // attached integral weight parameter
    Int bound = 0;
    std::map<Int, Rat> a;

    bool has(const Int& N) const { return a.find(N) != a.end(); }
    Rat at(const Int& N) const {
        auto it = a.find(N);
        if (it == a.end())
            throw std::out_of_range("half-integral data has no entry N = " + N.str());
        return it->second;
    }
    void insert(const Int& N, const Rat& v) {
        if (N < 0 || (mod4(N) != 0 && mod4(N) != 3))
            throw std::domain_error("half-integral support requires N ≡ 0,3 mod 4, got " +
                                    N.str());
        a[N] = v;
        if (N > bound) bound = N;
    }
};

/// Hecke eigenvalues a_phi(q) of the Shimura-corresponding weight-w form,
/// keyed by prime q.
struct EigenData {
    unsigned w = 0;
    std::map<Int, Rat> a;

    bool has(const Int& q) const { return a.find(q) != a.end(); }
    Rat at(const Int& q) const {
        auto it = a.find(q);
        if (it == a.end()) throw std::out_of_range("eigen data has no entry q = " + q.str());
        return it->second;
    }
    void insert(const Int& q, const Rat& v) {
        if (!is_prime(q)) throw std::domain_error("eigen data keys must be prime, got " + q.str());
        a[q] = v;
    }
};

namespace detail {

template <typename Insert>
inline void parse_keyed_lines(std::istream& is, const char* what, Insert insert) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key, value;
        if (!(ls >> key)) continue;
        if (key[0] == '#') continue;
        if (!(ls >> value))
            throw std::invalid_argument(std::string(what) + " parse error at line " +
                                        std::to_string(lineno) + ": expected '<key> <value>'");
        insert(parse_int(key), parse_rational(value));
    }
}

}  // namespace detail

/// Reads "N value" lines ('#' comments, blank lines allowed).
inline HalfIntegralData load_half_integral(std::istream& is, unsigned k) {
    HalfIntegralData h;
    h.k = k;
    detail::parse_keyed_lines(is, "half-integral data",
                              [&](const Int& N, const Rat& v) { h.insert(N, v); });
    return h;
}

/// Reads "q value" lines ('#' comments, blank lines allowed).
inline EigenData load_eigen(std::istream& is, unsigned w) {
    EigenData phi;
    phi.w = w;
    detail::parse_keyed_lines(is, "eigen data",
                              [&](const Int& q, const Rat& v) { phi.insert(q, v); });
    return phi;
}

inline HalfIntegralData load_half_integral_file(const std::string& path, unsigned k) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return load_half_integral(is, k);
}

inline EigenData load_eigen_file(const std::string& path, unsigned w) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return load_eigen(is, w);
}

/// Cohen H-function data a_h(N) = H(k-1, N): the coefficients whose lift is
/// the Eisenstein series itself. Support: all N ≡ 0, 3 mod 4 up to bound.
inline HalfIntegralData pseudo_eisenstein_h(unsigned k, const Int& bound) {
    HalfIntegralData h;
    h.k = k;
    for (Int N = 3; N <= bound; ++N) {
        Int r = mod4(N);
        if (r != 0 && r != 3) continue;
        h.insert(N, cohen_H(k - 1, N));
    }
    return h;
}

/// Eisenstein eigenvalues a_phi(q) = 1 + q^(2k-3) for primes q <= q_bound.
inline EigenData pseudo_eisenstein_phi(unsigned k, const Int& q_bound) {
    EigenData phi;
    phi.w = 2 * k - 2;
    for (Int q = 2; q <= q_bound; q = next_prime(q)) phi.insert(q, Rat(1 + pow_int(q, 2 * k - 3)));
    return phi;
}

namespace detail {

// c(N) = a_h(|d|) * prod_{q | f} S_{N,q}(a_phi(q)) with -N = d f^2.
inline Rat sk_primitive_coeff(const Int& N, const HalfIntegralData& h, const EigenData& phi,
                              unsigned k) {
    auto [d, f] = fundamental_decomposition(N);
    Rat c = h.at(-d);
    for (const auto& [q, e] : factorize(f).factors) c *= local_poly(N, q, k).eval(phi.at(q));
    return c;
}

}  // namespace detail

/// Lift coefficient at a positive definite T:
///   sum_{e | content(T)} e^(k-1) c(det2(T) / e^2),
/// where c(N) factors through the fundamental part as above. Missing h or
/// phi entries raise std::out_of_range.
inline Rat sk_coeff(const HalfIntSym& T, const HalfIntegralData& h, const EigenData& phi,
                    unsigned k) {
    if (!T.is_valid() || T.rank() != 2)
        throw std::domain_error("sk_coeff needs a positive definite form");
    Int N{T.det2()};
    Rat out = 0;
    std::int64_t content = T.content();
    for (std::int64_t e = 1; e <= content; ++e) {
        if (content % e != 0) continue;
        out += Rat(pow_int(Int(e), k - 1)) * detail::sk_primitive_coeff(N / (Int(e) * e), h, phi, k);
    }
    return out;
}

/// Checks the Hecke coherence equations
///   a_h(N q^2) = a_h(N) (a_phi(q) - chi(q) q^(k-2)) - q^(2k-3) a_h(N / q^2)
/// for all supported N and primes q with N q^2 <= bound, where chi(q) is the
/// Kronecker symbol (-N | q) (zero at primes dividing N). Terms at invalid
/// or absent indices read as 0; pairs whose eigenvalue is absent are skipped.
inline bool validate_maass_relations(const HalfIntegralData& h, const EigenData& phi,
                                     unsigned k, const Int& bound) {
    for (const auto& [N, aN] : h.a) {
        if (N < 1 || N * 4 > bound) continue;
        for (const auto& [q, aq] : phi.a) {
            if (N * q * q > bound) break;
            Rat lhs = h.has(N * q * q) ? h.at(N * q * q) : Rat(0);
            int chi = kronecker(-N, q);
            Rat rhs = aN * (aq - Rat(chi) * Rat(pow_int(q, k - 2)));
            if (N % (q * q) == 0) {
                Int M = N / (q * q);
                Int r = mod4(M);
                if ((r == 0 || r == 3) && h.has(M)) rhs -= Rat(pow_int(q, 2 * k - 3)) * h.at(M);
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

/// Truncated lift expansion: cuspidal, so rank-0 and rank-1 entries are 0;
/// rank-2 entries come from sk_coeff.
inline TIndexedSeries sk_expansion(const HalfIntegralData& h, const EigenData& phi, unsigned k,
                                   std::int64_t max_det) {
    if (max_det < 3) throw std::domain_error("sk_expansion requires max_det >= 3");
    TIndexedSeries s;
    s.k = static_cast<int>(k);
    s.max_det = max_det;
    s.variant = "sk";
    s.rank0 = 0;
    for (std::int64_t n = 1; n <= max_det; ++n) s.rank1[n] = 0;
    for (const HalfIntSym& T : enumerate_reduced(max_det)) s.rank2[T] = sk_coeff(T, h, phi, k);
    return s;
}

/// Raised when a congruence check meets a coefficient that is not p-integral;
/// distinct from a failed congruence.
class NonIntegralError : public std::runtime_error {
public:
    NonIntegralError(const SeriesKey& key_, std::string msg)
        : std::runtime_error(std::move(msg)), key(key_) {}
    SeriesKey key;
};

/// Result of comparing two series coefficient-wise mod p.
struct CongruenceReport {
    struct Failure {
        SeriesKey key;
        Rat lhs;
        Rat rhs;
        long ord_gap = 0;  // ord_p(lhs - rhs), < 1 at a failure
    };
    bool ok = false;
    std::size_t checked = 0;  // keys verified congruent
    std::optional<Failure> first_failure;
};

/// Verifies ord_p(lhs - rhs) >= 1 on every key present in both series,
/// walking keys in canonical order so first_failure is the smallest failing
/// key. Requires equal weights and prime p; non-p-integral coefficients
/// raise NonIntegralError.
inline CongruenceReport congruence_check(const TIndexedSeries& lhs, const TIndexedSeries& rhs,
                                         const Int& p) {
    if (!is_prime(p)) throw std::domain_error("congruence_check requires a prime p");
    if (lhs.k != rhs.k)
        throw std::domain_error("congruence_check requires equal weights, got " +
                                std::to_string(lhs.k) + " and " + std::to_string(rhs.k));
    std::vector<SeriesKey> keys;
    keys.push_back(SeriesKey::zero());
    for (const auto& [n, v] : lhs.rank1)
        if (rhs.rank1.count(n)) keys.push_back(SeriesKey::diag(n));
    for (const auto& [T, v] : lhs.rank2)
        if (rhs.rank2.count(T)) keys.push_back(SeriesKey::form(T));
    CongruenceReport report;
    for (const SeriesKey& key : keys) {
        Rat x = lhs.at(key), y = rhs.at(key);
        if (detail::ord_p_unchecked(x, p) < 0)
            throw NonIntegralError(key, "left value at " + to_string(key) + " is not " +
                                            p.str() + "-integral");
        if (detail::ord_p_unchecked(y, p) < 0)
            throw NonIntegralError(key, "right value at " + to_string(key) + " is not " +
                                            p.str() + "-integral");
        long gap = detail::ord_p_unchecked(x - y, p);
        if (gap < 1) {
            report.first_failure = CongruenceReport::Failure{key, x, y, gap};
            report.ok = false;
            return report;
        }
        ++report.checked;
    }
    report.ok = true;
    return report;
}

/// One hypothesis or verification stage of the main congruence theorem check.
struct StageResult {
    enum class Status { pass, fail, skip };
    std::string name;
    Status status = Status::skip;
    std::string detail;
};

struct TheoremReport {
    unsigned k = 0;
    Int p;
    Int D;
    std::int64_t max_det = 0;
    std::vector<StageResult> stages;

    bool ok() const {
        for (const auto& s : stages)
            if (s.status != StageResult::Status::pass) return false;
        return !stages.empty();
    }
};

/// Staged verification that the lift built from (h, phi) is congruent to the
/// normalized Eisenstein series mod p:
///   1. p prime, p >= 7;
///   2. p - 1 > 2k - 2;
///   3. ord_p(B_{2k-2}) > 0;
///   4. ord_p(B_{k-1, chi_D}) = 0;
///   5. congruence of the lift expansion with the Eisenstein expansion on
///      all keys, degenerate ones included (the cuspidal side contributes 0
///      there, so this subsumes degenerate vanishing).
/// Later stages are skipped after the first failure.
inline TheoremReport theorem_sk_verify(unsigned k, const Int& p, const Int& D,
                                       std::int64_t max_det, const HalfIntegralData& h,
                                       const EigenData& phi) {
    TheoremReport report{k, p, D, max_det, {}};
    auto stage = [&](const std::string& name, auto check) {
        bool prior_ok = report.stages.empty() ||
                        report.stages.back().status == StageResult::Status::pass;
        StageResult r{name, StageResult::Status::skip, ""};
        if (prior_ok) {
            try {
                auto [passed, detail_msg] = check();
                r.status = passed ? StageResult::Status::pass : StageResult::Status::fail;
                r.detail = detail_msg;
            } catch (const std::exception& e) {
                r.status = StageResult::Status::fail;
                r.detail = e.what();
            }
        }
        report.stages.push_back(std::move(r));
    };
    stage("p prime and p >= 7", [&] {
        return std::pair(p >= 7 && is_prime(p), "p = " + p.str());
    });
    stage("p - 1 > 2k - 2", [&] {
        return std::pair(p - 1 > 2 * Int(k) - 2,
                         "p - 1 = " + Int(p - 1).str() + ", 2k - 2 = " + std::to_string(2 * k - 2));
    });
    stage("ord_p(B_{2k-2}) > 0", [&] {
        long v = detail::ord_p_unchecked(bernoulli(2 * k - 2), p);
        return std::pair(v > 0, "ord = " + std::to_string(v));
    });
    stage("ord_p(B_{k-1, chi_D}) = 0", [&] {
        long v = detail::ord_p_unchecked(gen_bernoulli(k - 1, QuadChar(D)), p);
        return std::pair(v == 0,
                         v == ord_infinity ? std::string("value is 0") : "ord = " + std::to_string(v));
    });
    stage("lift congruent to Eisenstein series", [&] {
        TIndexedSeries lift = sk_expansion(h, phi, k, max_det);
        TIndexedSeries eis = eis_expansion(EisensteinSpec(k), max_det);
        CongruenceReport c = congruence_check(lift, eis, p);
        if (c.ok) return std::pair(true, "checked " + std::to_string(c.checked) + " keys");
        return std::pair(false, "first failure at " + to_string(c.first_failure->key));
    });
    return report;
}

/// Same staged verification with the Cohen H-function data and Eisenstein
/// eigenvalues generated internally.
inline TheoremReport theorem_sk_verify(unsigned k, const Int& p, const Int& D,
                                       std::int64_t max_det) {
    HalfIntegralData h = pseudo_eisenstein_h(k, max_det);
    EigenData phi = pseudo_eisenstein_phi(k, boost::multiprecision::sqrt(Int(max_det)) + 1);
    return theorem_sk_verify(k, p, D, max_det, h, phi);
}

}  // namespace siegelcong
