#ifndef GENEXP_PARTITION_HPP
#define GENEXP_PARTITION_HPP

// Integer partitions and dominant weights written in the fundamental-weight
// basis. A partition is stored dense (weakly decreasing positive parts); a
// weight vector is a finitely supported map i -> coefficient of omega_i.
// The two views are linked by "omega_i = column of height i": a partition
// with a_i columns of height i corresponds to sum a_i * omega_i.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace genexp {

class Partition {
public:
    Partition() = default;
    // Accepts any weakly decreasing list with trailing zeros allowed;
    // throws std::invalid_argument otherwise.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // Number of cells.
    int size() const;
    // part(i) is 1-based and returns 0 past the last row.
    int part(int i) const;
    int first() const { return parts_.empty() ? 0 : parts_[0]; }

    bool operator==(const Partition&) const = default;
    // Lexicographic; only used to put partitions in ordered containers.
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

    // Diagram inclusion, row by row.
    bool contains(const Partition& inner) const;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// Column-height multiplicities: result[i] = number of columns of height i.
// Keys are present only for nonzero multiplicities.
std::map<int, int> fundamental_coords(const Partition& p);

// All parts even (the shape of a highest weight appearing in S^2-type
// plethysms; closed under the correspondence conjugate <-> column pairs).
bool in_P2(const Partition& p);
// All column heights even, i.e. fundamental coordinates supported on even
// indices; equivalently the conjugate has all parts even.
bool in_P11(const Partition& p);
// Both at once: even coordinates on even fundamental weights.
bool in_boxplus(const Partition& p);

// Splits kappa as kappa_box + kappa_rem where kappa_box has even
// coordinates on even fundamental weights (the largest such summand for
// the coordinatewise order) and kappa_rem keeps the odd-height columns
// plus one column for each odd multiplicity of an even height.
std::pair<Partition, Partition> decompose_boxplus(const Partition& kappa);

// Visits every partition of the given size with at most max_length parts,
// each at most max_part, in decreasing lexicographic order.  Size zero
// yields the empty partition once; a negative size yields nothing.
void enumerate_partitions(int size, int max_length, int max_part,
                          const std::function<void(const Partition&)>& visit);

class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::map<int, long long> coords);

    static WeightVector from_partition(const Partition& p);
    // Requires all coordinates nonnegative; throws otherwise.
    Partition to_partition() const;

    long long coord(int i) const;
    void set_coord(int i, long long v);
    const std::map<int, long long>& coords() const { return coords_; }

    // Sum of i * coord(i); for a dominant weight this is the number of
    // cells of the corresponding partition.
    long long weighted_size() const;
    bool nonnegative() const;

    // Coordinatewise mod 2.
    WeightVector mod2() const;

    WeightVector operator+(const WeightVector&) const;
    // Coordinatewise difference; may go negative, see nonnegative().
    WeightVector operator-(const WeightVector&) const;
    bool operator==(const WeightVector&) const = default;
    bool operator<(const WeightVector& other) const { return coords_ < other.coords_; }

private:
    std::map<int, long long> coords_;  // nonzero entries only
};

}  // namespace genexp

#endif
