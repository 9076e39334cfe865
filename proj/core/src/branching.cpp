#include "genexp/branching.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "genexp/crystal.hpp"
#include "genexp/lr_maps.hpp"

namespace genexp {

namespace {

void require_ranks(const Partition& lambda, const Partition& nu, int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (lambda.length() > n) {
        throw std::invalid_argument("lambda must have at most n rows");
    }
    if (nu.length() > 2 * n) {
        throw std::invalid_argument("nu must have at most 2n rows");
    }
}

bool has_flag(const Tableau& t) {
    const auto& rows = t.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][0] < 2 * static_cast<int>(r) + 1) return false;
    }
    return true;
}

// Runs visit over the admissible middle weights delta: even column heights,
// at most 2n rows, contained in nu, of size |nu| - |lambda|.
void for_each_delta(const Partition& lambda, const Partition& nu, int n,
                    const std::function<void(const Partition&)>& visit) {
    const int rest = nu.size() - lambda.size();
    if (rest < 0) return;
    enumerate_partitions(rest, 2 * n, nu.first(), [&](const Partition& delta) {
        if (in_P11(delta) && nu.contains(delta)) visit(delta);
    });
}

// rev[j] = the j-th entry of delta reversed after padding to the given
// number of slots; rev[0] is unused.
std::vector<int> reversed_padded(const Partition& delta, int slots) {
    std::vector<int> rev(slots + 1, 0);
    for (int j = 1; j <= slots; ++j) rev[j] = delta.part(slots + 1 - j);
    return rev;
}

bool sundaram_rows_ok(const SkewTableau& tau, int n) {
    const auto& rows = tau.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int v : rows[r]) {
            if (v % 2 == 1 &&
                static_cast<int>(r) + 1 > sundaram_row_bound(v, n)) {
                return false;
            }
        }
    }
    return true;
}

std::string describe(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(p.parts()[i]);
    }
    return s + ")";
}

}  // namespace

int sundaram_row_bound(int letter, int n) {
    if (letter % 2 == 0 || letter < 1) {
        throw std::invalid_argument("row bounds apply to odd letters");
    }
    return n + (letter - 1) / 2;
}

std::vector<SundaramTableau> sundaram_tableaux(const Partition& lambda,
                                               const Partition& nu, int n) {
    require_ranks(lambda, nu, n);
    std::vector<SundaramTableau> out;
    if (!nu.contains(lambda)) return out;
    LrSkewOptions options;
    options.sundaram_rank = n;
    enumerate_lr_skew(nu, lambda, 2 * n, options, [&](const SkewTableau& tau) {
        // The lattice property makes the weight weakly decreasing.
        const Partition delta(tau.weight());
        if (!in_P11(delta)) return;
        out.push_back({tau, delta});
    });
    return out;
}

SundaramTableau add_kappa(const SundaramTableau& t, const Partition& kappa) {
    const SkewTableau& tau = t.tableau;
    if (!in_boxplus(kappa)) {
        throw std::invalid_argument(
            "kappa must have even parts and even column heights");
    }
    if (kappa.length() > tau.alphabet()) {
        throw std::invalid_argument("kappa has more rows than the alphabet");
    }
    const int nrows = std::max(tau.outer().length(), kappa.length());
    std::vector<int> outer_parts(nrows, 0);
    std::vector<std::vector<int>> rows(nrows);
    for (int r = 0; r < nrows; ++r) {
        if (r < tau.outer().length()) rows[r] = tau.rows()[r];
        outer_parts[r] = tau.outer().part(r + 1) + kappa.part(r + 1);
        for (int k = 0; k < kappa.part(r + 1); ++k) rows[r].push_back(r + 1);
    }
    SkewTableau grown(Partition(std::move(outer_parts)), tau.inner(),
                      std::move(rows), tau.alphabet());
    if (!is_lattice(grown)) {
        throw std::logic_error("padding broke the lattice property");
    }
    std::vector<int> weight_parts;
    const int wlen = std::max(t.weight.length(), kappa.length());
    for (int i = 1; i <= wlen; ++i) {
        weight_parts.push_back(t.weight.part(i) + kappa.part(i));
    }
    return {std::move(grown), Partition(std::move(weight_parts))};
}

std::vector<Tableau> kwon_tableaux(const Partition& lambda, const Partition& nu,
                                   int n) {
    require_ranks(lambda, nu, n);
    std::vector<Tableau> out;
    if (!nu.contains(lambda)) return out;
    const Partition lambda_c = conjugate(lambda);
    const Partition nu_c = conjugate(nu);
    const int alphabet = std::max(1, nu.first());
    const int p = lambda.length();  // first-row length of the shape lambda'
    for_each_delta(lambda, nu, n, [&](const Partition& delta) {
        const Partition delta_c = conjugate(delta);
        std::vector<int> content(alphabet, 0);
        for (int i = 1; i <= alphabet; ++i) {
            content[i - 1] = nu_c.part(i) - delta_c.part(i);
        }
        const std::vector<int> rev = reversed_padded(delta, 2 * n);
        SsytOptions options;
        options.content = std::move(content);
        enumerate_ssyt(lambda_c, alphabet, options, [&](const Tableau& s) {
            if (!lr_membership(s, delta_c)) return;
            for (int i = 1; i <= p; ++i) {
                if (s.rows()[0][i - 1] <= rev[2 * i - 1]) return;
            }
            out.push_back(s);
        });
    });
    return out;
}

long long kwon_via_c3(const Partition& lambda, const Partition& nu, int n) {
    require_ranks(lambda, nu, n);
    if (!nu.contains(lambda)) return 0;
    long long count = 0;
    for_each_delta(lambda, nu, n, [&](const Partition& delta) {
        std::vector<int> content(2 * n, 0);
        for (int i = 1; i <= 2 * n; ++i) {
            content[i - 1] = nu.part(i) - delta.part(i);
        }
        SsytOptions options;
        options.content = std::move(content);
        enumerate_ssyt(lambda, 2 * n, options, [&](const Tableau& b) {
            if (!lr_membership(b, delta)) return;
            if (has_flag(lusztig_involution(b))) ++count;
        });
    });
    return count;
}

long long branching_sp(const Partition& lambda, const Partition& nu, int n) {
    const long long s =
        static_cast<long long>(sundaram_tableaux(lambda, nu, n).size());
    const long long k =
        static_cast<long long>(kwon_tableaux(lambda, nu, n).size());
    const long long v = kwon_via_c3(lambda, nu, n);
    if (s != k || k != v) {
        throw std::runtime_error(
            "branching rules disagree at lambda=" + describe(lambda) +
            " nu=" + describe(nu) + " n=" + std::to_string(n) + ": " +
            std::to_string(s) + " / " + std::to_string(k) + " / " +
            std::to_string(v));
    }
    return s;
}

TruncatedSeries branching_series(const Partition& lambda, int n, int cutoff) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (lambda.length() > n) {
        throw std::invalid_argument("lambda must have at most n rows");
    }
    TruncatedSeries series(cutoff);
    for (int half = 0; half <= cutoff; ++half) {
        enumerate_partitions(half, 2 * n, half, [&](const Partition& mu) {
            std::vector<int> doubled;
            doubled.reserve(mu.length());
            for (int part : mu.parts()) doubled.push_back(2 * part);
            const Partition nu(std::move(doubled));
            if (!nu.contains(lambda)) return;
            const long long c = branching_sp(lambda, nu, n);
            if (c != 0) series.set_coeff(half, series.coeff(half) + c);
        });
    }
    return series;
}

BranchReport compare_rules(const Partition& lambda, const Partition& nu, int n,
                           bool collect_cases) {
    require_ranks(lambda, nu, n);
    BranchReport report;
    report.lambda = lambda;
    report.nu = nu;
    report.rank = n;
    if (!nu.contains(lambda)) return report;
    for_each_delta(lambda, nu, n, [&](const Partition& delta) {
        DeltaReport dr;
        dr.delta = delta;
        std::set<Tableau> images;
        LrSkewOptions options;
        std::vector<int> weight(2 * n, 0);
        for (int i = 1; i <= delta.length(); ++i) weight[i - 1] = delta.part(i);
        options.weight = std::move(weight);
        enumerate_lr_skew(nu, lambda, 2 * n, options, [&](const SkewTableau& tau) {
            ++dr.lr_count;
            const bool admissible = sundaram_rows_ok(tau, n);
            Tableau companion = companion_tableau(tau, 2 * n);
            Tableau swapped = r_matrix_highest(lambda, companion).image;
            Tableau evacuated = lusztig_involution(swapped);
            const bool flag = has_flag(evacuated);
            if (admissible) {
                ++dr.sundaram_count;
                if (!images.insert(evacuated).second) {
                    dr.injective_on_sundaram = false;
                }
            }
            if (flag) ++dr.admissible_count;
            if (admissible != flag) dr.elementwise_match = false;
            if (collect_cases) {
                dr.cases.push_back({tau, admissible, std::move(companion),
                                    std::move(swapped), std::move(evacuated),
                                    flag});
            }
        });
        report.sundaram_total += dr.sundaram_count;
        report.admissible_total += dr.admissible_count;
        if (!dr.elementwise_match || !dr.injective_on_sundaram) {
            report.composition_bijective = false;
        }
        report.deltas.push_back(std::move(dr));
    });
    report.totals_match = (report.sundaram_total == report.admissible_total);
    return report;
}

}  // namespace genexp
