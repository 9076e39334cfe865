#include "genexp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace genexp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition part is negative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition parts are 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts()[i] > parts_[i]) return false;
    return true;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols(p.first(), 0);
    for (int part : p.parts())
        for (int c = 0; c < part; ++c) ++cols[c];
    return Partition(std::move(cols));
}

std::map<int, int> fundamental_coords(const Partition& p) {
    std::map<int, int> a;
    const Partition q = conjugate(p);
    for (int h : q.parts()) ++a[h];
    return a;
}

bool in_P2(const Partition& p) {
    for (int part : p.parts())
        if (part % 2 != 0) return false;
    return true;
}

bool in_P11(const Partition& p) { return in_P2(conjugate(p)); }

bool in_boxplus(const Partition& p) { return in_P2(p) && in_P11(p); }

std::pair<Partition, Partition> decompose_boxplus(const Partition& kappa) {
    std::map<int, long long> box, rem;
    for (const auto& [h, mult] : fundamental_coords(kappa)) {
        if (h % 2 == 0) {
            if (mult - mult % 2 > 0) box[h] = mult - mult % 2;
            if (mult % 2) rem[h] = 1;
        } else {
            rem[h] = mult;
        }
    }
    return {WeightVector(std::move(box)).to_partition(),
            WeightVector(std::move(rem)).to_partition()};
}

namespace {

void enumerate_rec(int remaining, int slots, int cap,
                   std::vector<int>& stack,
                   const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition(stack));
        return;
    }
    if (slots == 0) return;
    for (int v = std::min(cap, remaining); v >= 1; --v) {
        // The rest must fit into the remaining slots with parts <= v.
        if (remaining - v > v * (slots - 1)) continue;
        stack.push_back(v);
        enumerate_rec(remaining - v, slots - 1, v, stack, visit);
        stack.pop_back();
    }
}

}  // namespace

void enumerate_partitions(int size, int max_length, int max_part,
                          const std::function<void(const Partition&)>& visit) {
    if (size < 0) return;
    std::vector<int> stack;
    enumerate_rec(size, std::max(0, max_length), std::max(0, max_part), stack, visit);
}

WeightVector::WeightVector(std::map<int, long long> coords) : coords_(std::move(coords)) {
    for (auto it = coords_.begin(); it != coords_.end();) {
        if (it->first < 1) throw std::invalid_argument("weight coordinates are indexed from 1");
        it = it->second == 0 ? coords_.erase(it) : std::next(it);
    }
}

WeightVector WeightVector::from_partition(const Partition& p) {
    std::map<int, long long> c;
    for (const auto& [h, mult] : fundamental_coords(p)) c[h] = mult;
    return WeightVector(std::move(c));
}

Partition WeightVector::to_partition() const {
    if (!nonnegative())
        throw std::invalid_argument("weight with negative coordinates is not a partition");
    // coord(i) columns of height i, tallest first.
    std::vector<int> rows;
    for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) {
        const auto [height, mult] = *it;
        if (static_cast<int>(rows.size()) < height) rows.resize(height, 0);
        for (int r = 0; r < height; ++r) rows[r] += static_cast<int>(mult);
    }
    return Partition(std::move(rows));
}

long long WeightVector::coord(int i) const {
    auto it = coords_.find(i);
    return it == coords_.end() ? 0 : it->second;
}

void WeightVector::set_coord(int i, long long v) {
    if (i < 1) throw std::invalid_argument("weight coordinates are indexed from 1");
    if (v == 0)
        coords_.erase(i);
    else
        coords_[i] = v;
}

long long WeightVector::weighted_size() const {
    long long total = 0;
    for (const auto& [i, c] : coords_) total += static_cast<long long>(i) * c;
    return total;
}

bool WeightVector::nonnegative() const {
    for (const auto& [i, c] : coords_)
        if (c < 0) return false;
    return true;
}

WeightVector WeightVector::mod2() const {
    std::map<int, long long> c;
    for (const auto& [i, v] : coords_)
        if (v % 2 != 0) c[i] = 1;
    return WeightVector(std::move(c));
}

WeightVector WeightVector::operator+(const WeightVector& other) const {
    std::map<int, long long> c = coords_;
    for (const auto& [i, v] : other.coords_) {
        auto [it, inserted] = c.try_emplace(i, v);
        if (!inserted && (it->second += v) == 0) c.erase(it);
    }
    return WeightVector(std::move(c));
}

WeightVector WeightVector::operator-(const WeightVector& other) const {
    std::map<int, long long> c = coords_;
    for (const auto& [i, v] : other.coords_) {
        auto [it, inserted] = c.try_emplace(i, -v);
        if (!inserted && (it->second -= v) == 0) c.erase(it);
    }
    return WeightVector(std::move(c));
}

}  // namespace genexp
