#include "genexp/tableau.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace genexp {

Tableau::Tableau(std::vector<std::vector<int>> rows, int alphabet)
    : rows_(std::move(rows)), alphabet_(alphabet) {
    if (alphabet_ < 1 || alphabet_ > 255)
        throw std::invalid_argument("tableau alphabet must be in 1..255");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw std::invalid_argument("tableau has an empty row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw std::invalid_argument("tableau row lengths must weakly decrease");
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > alphabet_)
                throw std::invalid_argument("tableau entry out of alphabet");
            if (c > 0 && row[c] < row[c - 1])
                throw std::invalid_argument("tableau rows must weakly increase");
            if (r > 0 && row[c] <= rows_[r - 1][c])
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
}

Partition Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

Tableau Tableau::replaced(int r, int c, int value) const {
    std::vector<std::vector<int>> rows = rows_;
    rows.at(r).at(c) = value;
    return Tableau(std::move(rows), alphabet_);
}

std::vector<int> Tableau::weight() const {
    std::vector<int> w(alphabet_, 0);
    for (const auto& row : rows_)
        for (int v : row) ++w[v - 1];
    return w;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    const int width = rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
    for (int c = width - 1; c >= 0; --c)
        for (const auto& row : rows_) {
            if (static_cast<int>(row.size()) <= c) break;
            word.push_back(row[c]);
        }
    return word;
}

std::vector<std::pair<int, int>> Tableau::reading_cells() const {
    std::vector<std::pair<int, int>> cells;
    const int width = rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
    for (int c = width - 1; c >= 0; --c)
        for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
            if (static_cast<int>(rows_[r].size()) <= c) break;
            cells.emplace_back(r, c);
        }
    return cells;
}

bool Tableau::operator<(const Tableau& other) const {
    return std::tie(rows_, alphabet_) < std::tie(other.rows_, other.alphabet_);
}

Tableau highest_weight_tableau(const Partition& shape, int alphabet) {
    if (shape.length() > alphabet)
        throw std::invalid_argument("shape has more rows than the alphabet allows");
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < shape.length(); ++r)
        rows.emplace_back(shape.parts()[r], r + 1);
    return Tableau(std::move(rows), alphabet);
}

Tableau lowest_weight_tableau(const Partition& shape, int alphabet) {
    if (shape.length() > alphabet)
        throw std::invalid_argument("shape has more rows than the alphabet allows");
    const Partition cols = conjugate(shape);
    std::vector<std::vector<int>> rows(shape.length());
    for (int r = 0; r < shape.length(); ++r) rows[r].resize(shape.parts()[r]);
    for (int c = 0; c < cols.length(); ++c) {
        const int h = cols.parts()[c];
        for (int r = 0; r < h; ++r) rows[r][c] = alphabet - h + r + 1;
    }
    return Tableau(std::move(rows), alphabet);
}

namespace {

struct SsytSearch {
    const Partition& shape;
    int alphabet;
    const SsytOptions& options;
    const std::function<void(const Tableau&)>& visit;
    std::vector<std::vector<int>> rows;
    std::vector<int> remaining;  // per letter, only with a content target

    void run() {
        rows.resize(shape.length());
        for (int r = 0; r < shape.length(); ++r) rows[r].resize(shape.parts()[r]);
        if (options.content) {
            remaining = *options.content;
            if (static_cast<int>(remaining.size()) != alphabet)
                throw std::invalid_argument("content vector length must equal the alphabet");
            int total = 0;
            for (int v : remaining) {
                if (v < 0) throw std::invalid_argument("content entries must be nonnegative");
                total += v;
            }
            if (total != shape.size()) return;  // no tableau can match
        }
        fill(0, 0);
    }

    void fill(int r, int c) {
        if (r == shape.length()) {
            visit(Tableau(rows, alphabet));
            return;
        }
        if (c == shape.parts()[r]) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (r < static_cast<int>(options.row_min.size())) lo = std::max(lo, options.row_min[r]);
        if (c > 0) lo = std::max(lo, rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
        for (int v = lo; v <= alphabet; ++v) {
            if (options.content) {
                if (remaining[v - 1] == 0) continue;
                --remaining[v - 1];
            }
            rows[r][c] = v;
            fill(r, c + 1);
            if (options.content) ++remaining[v - 1];
        }
    }
};

}  // namespace

void enumerate_ssyt(const Partition& shape, int alphabet, const SsytOptions& options,
                    const std::function<void(const Tableau&)>& visit) {
    if (shape.length() > alphabet) return;
    SsytSearch search{shape, alphabet, options, visit, {}, {}};
    search.run();
}

long long count_ssyt(const Partition& shape, int alphabet, const SsytOptions& options) {
    long long count = 0;
    enumerate_ssyt(shape, alphabet, options, [&](const Tableau&) { ++count; });
    return count;
}

}  // namespace genexp
