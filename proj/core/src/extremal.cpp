#include "genexp/extremal.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace genexp {

namespace {

void require_fits(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (lambda.length() > n) {
        throw std::invalid_argument("shape has more rows than the rank allows");
    }
}

void require_even_size(const Partition& lambda) {
    if (lambda.size() % 2 != 0) {
        throw std::invalid_argument("shape must have an even number of cells");
    }
}

// 1-based indices i with a_i odd, in increasing order.
std::vector<int> odd_coordinate_indices(const ExtremalSequences& seq) {
    std::vector<int> ks;
    for (int i = 1; i <= static_cast<int>(seq.a.size()); ++i) {
        if (seq.a[i - 1] % 2 != 0) ks.push_back(i);
    }
    return ks;
}

}  // namespace

ExtremalSequences extremal_sequences(const Partition& lambda, int n) {
    require_fits(lambda, n);
    ExtremalSequences seq;
    seq.a.assign(n, 0);
    for (const auto& [height, mult] : fundamental_coords(lambda)) {
        // height = n + 1 - i, so the 0-based slot for a_i is n - height.
        seq.a[n - height] = mult;
    }
    seq.s.assign(n, 0);
    int run = 0;
    for (int i = 0; i < n; ++i) {
        run += seq.a[i];
        seq.s[i] = run;
    }
    seq.b = seq.a;
    int last_odd = -1;
    for (int i = 0; i < n; ++i) {
        if (seq.a[i] % 2 != 0) {
            last_odd = i;
            seq.b[i] = (seq.s[i] % 2 != 0) ? seq.a[i] + 1 : seq.a[i] - 1;
        }
    }
    seq.c = seq.b;
    if (last_odd >= 0 && seq.s[last_odd] % 2 != 0) {
        seq.c[last_odd] = seq.a[last_odd];
    }
    return seq;
}

long long min_power(const Partition& lambda, int n) {
    require_fits(lambda, n);
    require_even_size(lambda);
    const ExtremalSequences seq = extremal_sequences(lambda, n);
    long long doubled = 0;
    for (int i = 1; i <= n; ++i) {
        doubled += static_cast<long long>(n + 1 - i) * seq.b[i - 1];
    }
    if (doubled % 2 != 0) {
        throw std::logic_error("smallest-power formula produced an odd total");
    }
    return doubled / 2;
}

long long max_power(const Partition& lambda, int n) {
    require_fits(lambda, n);
    require_even_size(lambda);
    long long doubled = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        doubled += static_cast<long long>(lambda.part(i)) * (2 * n - 2 * i + 1);
    }
    if (doubled % 2 != 0) {
        throw std::logic_error("largest-power formula produced an odd total");
    }
    return doubled / 2;
}

std::vector<int> sigma_min_row(const Partition& lambda, int n) {
    require_fits(lambda, n);
    require_even_size(lambda);
    const ExtremalSequences seq = extremal_sequences(lambda, n);
    std::vector<int> row;
    row.reserve(lambda.first());
    for (int i = 1; i <= n; ++i) {
        for (int rep = 0; rep < seq.c[i - 1]; ++rep) row.push_back(n + i);
    }
    return row;
}

std::vector<ColumnInfo> column_structure(const Partition& lambda, int n) {
    require_fits(lambda, n);
    require_even_size(lambda);
    const ExtremalSequences seq = extremal_sequences(lambda, n);
    const std::vector<int> ks = odd_coordinate_indices(seq);
    const int p = static_cast<int>(ks.size());
    const std::vector<int> heights = conjugate(lambda).parts();
    const std::vector<int> row = sigma_min_row(lambda, n);

    std::vector<ColumnInfo> cols(heights.size());
    for (std::size_t c = 0; c < heights.size(); ++c) {
        ColumnInfo& info = cols[c];
        info.height = heights[c];
        info.top = row[c];
        const int i = n + 1 - info.height;
        for (int pair = 0; 2 * pair + 1 < p; ++pair) {
            if (ks[2 * pair] <= i && i <= ks[2 * pair + 1]) {
                info.block = pair;
                info.block_odd = (ks[2 * pair + 1] - ks[2 * pair]) % 2 != 0;
                break;
            }
        }
        if (p % 2 != 0 && i >= ks[p - 1]) info.in_incomplete = true;
    }
    for (std::size_t c = 1; c < cols.size(); ++c) {
        if (cols[c].block >= 0 && cols[c].block == cols[c - 1].block &&
            cols[c].height != cols[c - 1].height) {
            cols[c].special = true;
            cols[c].odd_special = (cols[c].top - cols[c].height) % 2 == 0;
        }
    }
    return cols;
}

std::vector<int> row_entry_bounds(const Partition& lambda, int n) {
    require_fits(lambda, n);
    const ExtremalSequences seq = extremal_sequences(lambda, n);
    std::vector<int> bounds;
    bounds.reserve(lambda.first());
    for (int i = 1; i <= n; ++i) {
        for (int rep = 0; rep < seq.a[i - 1]; ++rep) bounds.push_back(n + i);
    }
    return bounds;
}

bool row_in_sigma(const std::vector<int>& row, const Partition& lambda, int n) {
    require_fits(lambda, n);
    const std::vector<int> bounds = row_entry_bounds(lambda, n);
    if (row.size() != bounds.size()) return false;
    for (std::size_t q = 0; q < row.size(); ++q) {
        if (row[q] < 1 || row[q] > bounds[q]) return false;
        if (q > 0 && row[q] < row[q - 1]) return false;
    }
    return true;
}

long long row_charge(const std::vector<int>& row, int n) {
    const std::vector<int> mults = row_multiplicities(row, n);
    long long total = 0;
    for (int i = 2; i <= 2 * n; ++i) {
        total += static_cast<long long>(2 * n + 1 - i) * ((mults[i - 1] + 1) / 2);
    }
    return total;
}

long long min_row_charge_bruteforce(const Partition& lambda, int n) {
    require_fits(lambda, n);
    const std::vector<int> bounds = row_entry_bounds(lambda, n);
    const int length = static_cast<int>(bounds.size());
    long long best = -1;
    std::vector<int> row(length);
    std::function<void(int, int)> descend = [&](int q, int lo) {
        if (q == length) {
            const long long charge = row_charge(row, n);
            if (best < 0 || charge < best) best = charge;
            return;
        }
        for (int v = lo; v <= bounds[q]; ++v) {
            row[q] = v;
            descend(q + 1, v);
        }
    };
    descend(0, 2);
    return best < 0 ? 0 : best;
}

std::vector<int> row_multiplicities(const std::vector<int>& row, int n) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    std::vector<int> mults(2 * n, 0);
    for (int v : row) {
        if (v < 1 || v > 2 * n) {
            throw std::invalid_argument("row entry outside the alphabet 1..2n");
        }
        ++mults[v - 1];
    }
    return mults;
}

std::vector<int> row_from_multiplicities(const std::vector<int>& mults) {
    std::vector<int> row;
    for (std::size_t i = 0; i < mults.size(); ++i) {
        if (mults[i] < 0) throw std::invalid_argument("negative multiplicity");
        for (int rep = 0; rep < mults[i]; ++rep) {
            row.push_back(static_cast<int>(i) + 1);
        }
    }
    return row;
}

std::vector<RowMove> legal_row_moves(const std::vector<int>& mults,
                                     const Partition& lambda, int n) {
    require_fits(lambda, n);
    if (static_cast<int>(mults.size()) != 2 * n) {
        throw std::invalid_argument("multiplicity vector must have length 2n");
    }
    std::vector<RowMove> moves;
    auto try_add = [&](int kind, int i, int j, std::vector<int> cand) {
        if (!row_in_sigma(row_from_multiplicities(cand), lambda, n)) return;
        RowMove mv;
        mv.kind = kind;
        mv.i = i;
        mv.j = j;
        mv.result = std::move(cand);
        moves.push_back(std::move(mv));
    };
    for (int i = 2; i < 2 * n; ++i) {
        if (mults[i - 1] >= 2) {
            std::vector<int> cand = mults;
            cand[i - 1] -= 2;
            cand[i] += 2;
            try_add(1, i, 0, std::move(cand));
        }
        if (mults[i - 1] % 2 != 0) {
            std::vector<int> cand = mults;
            cand[i - 1] -= 1;
            cand[i] += 1;
            try_add(2, i, 0, std::move(cand));
        }
    }
    for (int i = 1; i <= 2 * n; ++i) {
        for (int j = i + 1; j <= 2 * n; ++j) {
            if (mults[i - 1] % 2 != 0 && mults[j - 1] >= 1) {
                std::vector<int> cand = mults;
                cand[i - 1] += 1;
                cand[j - 1] -= 1;
                try_add(3, i, j, std::move(cand));
            }
            if (mults[i - 1] >= 2 && mults[i - 1] % 2 == 0 &&
                mults[j - 1] % 2 != 0) {
                std::vector<int> cand = mults;
                cand[i - 1] -= 1;
                cand[j - 1] += 1;
                try_add(4, i, j, std::move(cand));
            }
        }
    }
    return moves;
}

int lattice_moves_check(const std::vector<int>& row, const Partition& lambda,
                        int n) {
    const long long base = row_charge(row, n);
    const std::vector<int> mults = row_multiplicities(row, n);
    int checked = 0;
    for (const RowMove& mv : legal_row_moves(mults, lambda, n)) {
        const long long delta =
            row_charge(row_from_multiplicities(mv.result), n) - base;
        const bool ok = (mv.kind == 1 || mv.kind == 2) ? delta < 0
                        : (mv.kind == 3)               ? delta <= 0
                                                       : delta == 0;
        if (!ok) throw std::logic_error("charge comparison failed for a row move");
        ++checked;
    }
    return checked;
}

Tableau sigma_min(const Partition& lambda, int n) {
    const std::vector<ColumnInfo> cols = column_structure(lambda, n);
    const ExtremalSequences seq = extremal_sequences(lambda, n);
    const std::vector<int> ks = odd_coordinate_indices(seq);
    const int p = static_cast<int>(ks.size());
    const int total = static_cast<int>(cols.size());

    std::vector<std::vector<int>> fill(total);
    for (int c = 0; c < total; ++c) {
        if (cols[c].odd_special) continue;
        fill[c].resize(cols[c].height);
        for (int r = 0; r < cols[c].height; ++r) fill[c][r] = cols[c].top + r;
    }

    // The odd special columns are repaired from right to left.  An
    // unconstrained one is filled consecutively; its bottom entry is then
    // odd, and the next one to the left must contain the following even
    // letter while skipping the odd one.  When the number of odd coordinates
    // p is odd and the unpaired column height n+1-k_p is odd as well, the
    // chain starts already constrained, with the forced letter n+k_p.
    int forced = 0;
    if (p % 2 != 0 && (n + 1 - ks[p - 1]) % 2 != 0) forced = n + ks[p - 1];
    for (int c = total - 1; c >= 0; --c) {
        if (!cols[c].odd_special) continue;
        const int top = cols[c].top;
        const int height = cols[c].height;
        std::vector<int>& column = fill[c];
        if (forced == 0) {
            column.resize(height);
            for (int r = 0; r < height; ++r) column[r] = top + r;
            forced = top + height;
        } else {
            column.clear();
            if (top + height - 1 >= forced - 1) {
                for (int v = top; v <= top + height; ++v) {
                    if (v != forced - 1) column.push_back(v);
                }
            } else {
                for (int v = top; v <= top + height - 2; ++v) column.push_back(v);
                column.push_back(forced);
            }
            forced = 0;
        }
    }
    if (forced != 0) {
        throw std::logic_error("unmatched parity repair in the minimal filling");
    }

    std::vector<std::vector<int>> rows;
    for (int r = 0; r < lambda.length(); ++r) {
        std::vector<int> row;
        for (int c = 0; c < total && static_cast<int>(fill[c].size()) > r; ++c) {
            row.push_back(fill[c][r]);
        }
        rows.push_back(std::move(row));
    }
    return Tableau(rows, 2 * n);
}

}  // namespace genexp
