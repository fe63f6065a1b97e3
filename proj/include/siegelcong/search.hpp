// siegelcong: congruence-prime search and summary table construction
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"
#include "bernoulli.hpp"
#include "ellmod.hpp"

namespace siegelcong {

/// Prime factors p of numerator(B_{2k-2}) with p >= 7 and p - 1 > 2k - 2,
/// ascending. These are the candidate congruence primes for weight k.
inline std::vector<Int> candidate_primes(unsigned k) {
    if (k < 4 || k % 2 != 0) throw std::domain_error("candidate_primes requires even k >= 4");
    Int num = boost::multiprecision::abs(numer(bernoulli(2 * k - 2)));
    std::vector<Int> out;
    if (num == 1) return out;
    for (const auto& [p, e] : factorize(num).factors)
        if (p >= 7 && p - 1 > 2 * Int(k) - 2) out.push_back(p);
    return out;
}

/// True iff ord_p(B_{k-1, chi_D}) = 0: the non-vanishing witness hypothesis.
inline bool check_nonvanishing(unsigned k, const Int& p, const Int& D) {
    if (!is_prime(p)) throw std::domain_error("check_nonvanishing requires a prime p");
    Rat b = gen_bernoulli(k - 1, QuadChar(D));
    if (b == 0) return false;
    return detail::ord_p_unchecked(b, p) == 0;
}

/// One weight column of the summary table.
struct SearchRow {
    unsigned k = 0;
    unsigned weight2 = 0;  // 2k - 2
    Int chi_d = 0;         // discriminant witnessing non-vanishing, 0 if none
    std::vector<Int> primes;
    std::vector<std::size_t> t;       // lift count per prime
    std::vector<bool> separable;      // Hecke-field separability per prime
};

inline const std::vector<Int>& default_discriminants() {
    static const std::vector<Int> ds{-3, -4, -8, -7, -11, -19};
    return ds;
}

/// Builds one row per even k in [k_min, k_max]. Candidate primes are
/// filtered through check_nonvanishing at the first discriminant in d_list
/// admissible for at least one candidate; primes passing at that
/// discriminant are kept, with t and the separability flag computed per
/// prime.
inline std::vector<SearchRow> table1(unsigned k_min, unsigned k_max,
                                     const std::vector<Int>& d_list, std::int64_t ell_bound = 20) {
    if (k_min % 2 != 0 || k_max % 2 != 0 || k_min < 4 || k_max < k_min)
        throw std::domain_error("table1 requires an even weight range with 4 <= k_min <= k_max");
    if (d_list.empty()) throw std::domain_error("table1 requires a non-empty discriminant list");
    std::vector<SearchRow> rows;
    for (unsigned k = k_min; k <= k_max; k += 2) {
        SearchRow row;
        row.k = k;
        row.weight2 = 2 * k - 2;
        std::vector<Int> candidates = candidate_primes(k);
        for (const Int& D : d_list) {
            std::vector<Int> passing;
            for (const Int& p : candidates)
                if (check_nonvanishing(k, p, D)) passing.push_back(p);
            if (!passing.empty()) {
                row.chi_d = D;
                row.primes = std::move(passing);
                break;
            }
        }
        for (const Int& p : row.primes) {
            row.t.push_back(count_congruent_systems(row.weight2, p, ell_bound));
            row.separable.push_back(hecke_field_separability(row.weight2, p));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<SearchRow> table1(unsigned k_min, unsigned k_max) {
    return table1(k_min, k_max, default_discriminants());
}

/// Plain-text rendering: one aligned column per weight, rows k, 2k-2, p,
/// chi, t, sep. Byte-identical output for identical inputs.
inline std::string render_table(const std::vector<SearchRow>& rows) {
    auto join = [](const std::vector<std::string>& parts) {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ", ";
            s += parts[i];
        }
        return s.empty() ? std::string("-") : s;
    };
    std::vector<std::vector<std::string>> cells(6);
    cells[0].push_back("k");
    cells[1].push_back("2k-2");
    cells[2].push_back("p");
    cells[3].push_back("chi");
    cells[4].push_back("t");
    cells[5].push_back("sep");
    for (const SearchRow& row : rows) {
        cells[0].push_back(std::to_string(row.k));
        cells[1].push_back(std::to_string(row.weight2));
        std::vector<std::string> ps, ts, seps;
        for (const Int& p : row.primes) ps.push_back(p.str());
        for (std::size_t t : row.t) ts.push_back(std::to_string(t));
        for (bool b : row.separable) seps.push_back(b ? "yes" : "no");
        cells[2].push_back(join(ps));
        cells[3].push_back(row.chi_d == 0 ? "-" : "chi_{" + row.chi_d.str() + "}");
        cells[4].push_back(join(ts));
        cells[5].push_back(join(seps));
    }
    std::vector<std::size_t> widths(cells[0].size(), 0);
    for (const auto& line : cells)
        for (std::size_t j = 0; j < line.size(); ++j)
            widths[j] = std::max(widths[j], line[j].size());
    std::ostringstream os;
    for (const auto& line : cells) {
        for (std::size_t j = 0; j < line.size(); ++j) {
            if (j) os << "  ";
            os << line[j];
            if (j + 1 < line.size())
                os << std::string(widths[j] - line[j].size(), ' ');
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace siegelcong
