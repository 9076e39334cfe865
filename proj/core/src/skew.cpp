#include "genexp/skew.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "genexp/crystal.hpp"

namespace genexp {

SkewTableau::SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows,
                         int alphabet)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)),
      alphabet_(alphabet) {
    if (alphabet_ < 1 || alphabet_ > 255)
        throw std::invalid_argument("skew tableau alphabet out of range");
    if (!outer_.contains(inner_))
        throw std::invalid_argument("inner shape not contained in outer shape");
    if (static_cast<int>(rows_.size()) != outer_.length())
        throw std::invalid_argument("row count does not match outer shape");
    for (int r = 0; r < outer_.length(); ++r) {
        const int width = outer_.part(r + 1) - inner_.part(r + 1);
        if (static_cast<int>(rows_[r].size()) != width)
            throw std::invalid_argument("row length does not match skew shape");
        for (int k = 0; k < width; ++k) {
            const int v = rows_[r][k];
            if (v < 1 || v > alphabet_)
                throw std::invalid_argument("entry outside alphabet");
            if (k > 0 && rows_[r][k - 1] > v)
                throw std::invalid_argument("row not weakly increasing");
        }
    }
    for (int r = 0; r + 1 < outer_.length(); ++r) {
        const int lo = inner_.part(r + 2), hi = outer_.part(r + 2);
        for (int c = std::max(lo, inner_.part(r + 1)); c < std::min(hi, outer_.part(r + 1));
             ++c) {
            if (cell(r, c) >= cell(r + 1, c))
                throw std::invalid_argument("column not strictly increasing");
        }
    }
}

bool SkewTableau::empty() const { return outer_.size() == inner_.size(); }

int SkewTableau::cell(int r, int c) const { return rows_[r][c - inner_.part(r + 1)]; }

std::vector<int> SkewTableau::reading_word() const {
    std::vector<int> word;
    word.reserve(static_cast<size_t>(outer_.size() - inner_.size()));
    for (int c = outer_.first() - 1; c >= 0; --c)
        for (int r = 0; r < outer_.length(); ++r)
            if (c >= inner_.part(r + 1) && c < outer_.part(r + 1)) word.push_back(cell(r, c));
    return word;
}

std::vector<std::pair<int, int>> SkewTableau::reading_cells() const {
    std::vector<std::pair<int, int>> cells;
    cells.reserve(static_cast<size_t>(outer_.size() - inner_.size()));
    for (int c = outer_.first() - 1; c >= 0; --c)
        for (int r = 0; r < outer_.length(); ++r)
            if (c >= inner_.part(r + 1) && c < outer_.part(r + 1)) cells.emplace_back(r, c);
    return cells;
}

std::vector<int> SkewTableau::weight() const {
    std::vector<int> w(static_cast<size_t>(alphabet_), 0);
    for (const auto& row : rows_)
        for (int v : row) ++w[static_cast<size_t>(v - 1)];
    return w;
}

bool SkewTableau::operator==(const SkewTableau& o) const {
    return outer_ == o.outer_ && inner_ == o.inner_ && rows_ == o.rows_ &&
           alphabet_ == o.alphabet_;
}

bool SkewTableau::operator<(const SkewTableau& o) const {
    if (!(outer_ == o.outer_)) return outer_ < o.outer_;
    if (!(inner_ == o.inner_)) return inner_ < o.inner_;
    if (rows_ != o.rows_) return rows_ < o.rows_;
    return alphabet_ < o.alphabet_;
}

Tableau rectify(const SkewTableau& skew, const std::function<int(int)>& pick) {
    std::vector<int> outer(skew.outer().parts().begin(), skew.outer().parts().end());
    std::vector<int> inner(skew.inner().parts().begin(), skew.inner().parts().end());
    inner.resize(outer.size(), 0);

    // Dense grid; cells inside the inner shape hold 0 until slides expose them.
    std::vector<std::vector<int>> grid(outer.size());
    for (size_t r = 0; r < outer.size(); ++r) {
        grid[r].assign(static_cast<size_t>(outer[r]), 0);
        for (int c = inner[r]; c < outer[r]; ++c)
            grid[r][static_cast<size_t>(c)] = skew.cell(static_cast<int>(r), c);
    }

    auto inner_size = [&] { return std::accumulate(inner.begin(), inner.end(), 0); };
    while (inner_size() > 0) {
        // Removable corners of the inner shape, top to bottom.
        std::vector<int> corners;
        for (size_t r = 0; r < inner.size(); ++r) {
            const int below = r + 1 < inner.size() ? inner[r + 1] : 0;
            if (inner[r] > below) corners.push_back(static_cast<int>(r));
        }
        const int k = static_cast<int>(corners.size());
        int idx = pick ? pick(k) : k - 1;
        if (idx < 0 || idx >= k) throw std::logic_error("corner choice out of range");

        int r = corners[static_cast<size_t>(idx)];
        int c = inner[static_cast<size_t>(r)] - 1;
        --inner[static_cast<size_t>(r)];
        for (;;) {
            const bool has_right = c + 1 < outer[static_cast<size_t>(r)];
            const bool has_below = static_cast<size_t>(r + 1) < outer.size() &&
                                   c < outer[static_cast<size_t>(r + 1)] &&
                                   c >= inner[static_cast<size_t>(r + 1)];
            if (!has_right && !has_below) break;
            bool move_below;
            if (!has_right)
                move_below = true;
            else if (!has_below)
                move_below = false;
            else
                move_below = grid[static_cast<size_t>(r + 1)][static_cast<size_t>(c)] <=
                             grid[static_cast<size_t>(r)][static_cast<size_t>(c + 1)];
            if (move_below) {
                grid[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    grid[static_cast<size_t>(r + 1)][static_cast<size_t>(c)];
                ++r;
            } else {
                grid[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    grid[static_cast<size_t>(r)][static_cast<size_t>(c + 1)];
                ++c;
            }
        }
        --outer[static_cast<size_t>(r)];
        grid[static_cast<size_t>(r)].resize(static_cast<size_t>(outer[static_cast<size_t>(r)]));
        while (!outer.empty() && outer.back() == 0) {
            outer.pop_back();
            inner.pop_back();
            grid.pop_back();
        }
    }

    return Tableau(grid, skew.alphabet());
}

namespace {

SkewTableau skew_replaced(const SkewTableau& t, int r, int c, int v) {
    std::vector<std::vector<int>> rows = t.rows();
    rows[static_cast<size_t>(r)][static_cast<size_t>(c - t.inner().part(r + 1))] = v;
    return SkewTableau(t.outer(), t.inner(), std::move(rows), t.alphabet());
}

}  // namespace

std::optional<SkewTableau> skew_e(const SkewTableau& t, int i) {
    auto pos = raise_position(t.reading_word(), i);
    if (!pos) return std::nullopt;
    const auto [r, c] = t.reading_cells()[*pos];
    return skew_replaced(t, r, c, i);
}

std::optional<SkewTableau> skew_f(const SkewTableau& t, int i) {
    auto pos = lower_position(t.reading_word(), i);
    if (!pos) return std::nullopt;
    const auto [r, c] = t.reading_cells()[*pos];
    return skew_replaced(t, r, c, i + 1);
}

bool is_lattice(const SkewTableau& t) {
    const std::vector<int> word = t.reading_word();
    for (int i = 1; i < t.alphabet(); ++i)
        if (eps_on_word(word, i) != 0) return false;
    return true;
}

namespace {

struct LrSearch {
    std::vector<int> outer;
    std::vector<int> inner;
    int alphabet;
    const LrSkewOptions* options;
    const std::function<void(const SkewTableau&)>* visit;
    std::vector<std::pair<int, int>> cells;  // reading order
    std::vector<std::vector<int>> rows;
    std::vector<int> count;          // letters placed so far
    std::vector<int> target;         // exact weight, when constrained

    int entry(int r, int c) const {
        return rows[static_cast<size_t>(r)][static_cast<size_t>(c - inner[static_cast<size_t>(r)])];
    }

    void fill(size_t k) {
        if (k == cells.size()) {
            (*visit)(SkewTableau(Partition(outer), Partition(inner), rows, alphabet));
            return;
        }
        const auto [r, c] = cells[k];
        // Column above is filled (same column, earlier in reading order);
        // right neighbour lies in an earlier column.
        int lo = 1;
        if (r > 0 && c >= inner[static_cast<size_t>(r - 1)] && c < outer[static_cast<size_t>(r - 1)])
            lo = std::max(lo, entry(r - 1, c) + 1);
        int hi = alphabet;
        if (c + 1 < outer[static_cast<size_t>(r)]) hi = std::min(hi, entry(r, c + 1));
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && count[static_cast<size_t>(v - 2)] <= count[static_cast<size_t>(v - 1)])
                continue;  // reading prefix must stay a lattice word
            if (!target.empty() && count[static_cast<size_t>(v - 1)] >= target[static_cast<size_t>(v - 1)])
                continue;
            if (options->sundaram_rank && v % 2 == 1 &&
                r + 1 > *options->sundaram_rank + (v - 1) / 2)
                continue;
            ++count[static_cast<size_t>(v - 1)];
            rows[static_cast<size_t>(r)][static_cast<size_t>(c - inner[static_cast<size_t>(r)])] = v;
            fill(k + 1);
            --count[static_cast<size_t>(v - 1)];
        }
    }
};

}  // namespace

void enumerate_lr_skew(const Partition& outer, const Partition& inner, int alphabet,
                       const LrSkewOptions& options,
                       const std::function<void(const SkewTableau&)>& visit) {
    if (!outer.contains(inner)) throw std::invalid_argument("inner shape not inside outer");
    if (alphabet < 1) throw std::invalid_argument("alphabet must be positive");

    LrSearch s;
    s.outer.assign(outer.parts().begin(), outer.parts().end());
    s.inner.assign(inner.parts().begin(), inner.parts().end());
    s.inner.resize(s.outer.size(), 0);
    s.alphabet = alphabet;
    s.options = &options;
    s.visit = &visit;
    for (int c = outer.first() - 1; c >= 0; --c)
        for (int r = 0; r < outer.length(); ++r)
            if (c >= s.inner[static_cast<size_t>(r)] && c < s.outer[static_cast<size_t>(r)])
                s.cells.emplace_back(r, c);
    s.rows.resize(s.outer.size());
    for (size_t r = 0; r < s.outer.size(); ++r)
        s.rows[r].assign(static_cast<size_t>(s.outer[r] - s.inner[r]), 0);
    s.count.assign(static_cast<size_t>(alphabet), 0);
    if (options.weight) {
        s.target = *options.weight;
        s.target.resize(static_cast<size_t>(alphabet), 0);
        const long long total =
            std::accumulate(s.target.begin(), s.target.end(), 0LL);
        if (total != outer.size() - inner.size()) return;
    }
    s.fill(0);
}

}  // namespace genexp
