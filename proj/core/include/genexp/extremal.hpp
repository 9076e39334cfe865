#ifndef GENEXP_EXTREMAL_HPP
#define GENEXP_EXTREMAL_HPP

// Extreme powers of t in the zero-weight generalized exponents of type C_n.
// The largest power has the closed form <lambda, rho_check>; the smallest
// power is computed from the column-height coordinates of lambda, together
// with an explicit filling sigma_min realizing it.  The supporting objects
// (block/special-column structure of the diagram, charge-monotone moves on
// first-row candidates) are exposed so that each step can be tested on its
// own.

#include <vector>

#include "genexp/partition.hpp"
#include "genexp/tableau.hpp"

namespace genexp {

// Writing lambda = sum_i a_i * omega_{n+1-i} (so a[i-1] counts columns of
// height n+1-i), s is the sequence of partial sums of a, and b and c are the
// parity adjustments used by the smallest-power formula and by the minimal
// first row respectively:
//   b_i = a_i + 1  when a_i is odd and s_i is odd,
//   b_i = a_i - 1  when a_i is odd and s_i is even,
//   b_i = a_i      when a_i is even;
// c_i = b_i except that for the largest i with a_i odd, if s_i is odd then
// c_i = a_i.  All four vectors have length n (index i-1 holds entry i), and
// sum(a) = sum(c) = lambda_1.
struct ExtremalSequences {
    std::vector<int> a;
    std::vector<int> s;
    std::vector<int> b;
    std::vector<int> c;
};

// Requires lambda to fit in n rows; b and c are meaningful only when |lambda|
// is even (they are still filled in from the formulas above otherwise).
ExtremalSequences extremal_sequences(const Partition& lambda, int n);

// Smallest and largest powers of t in the zero-weight generalized exponent
// polynomial for rank n.  Both require |lambda| even and at most n rows;
// they throw std::invalid_argument otherwise.
//   min: (1/2) sum_i (n+1-i) b_i
//   max: (1/2) sum_i lambda_i (2n - 2i + 1)
long long min_power(const Partition& lambda, int n);
long long max_power(const Partition& lambda, int n);

// The weakly increasing sequence ((n+1)^{c_1} (n+2)^{c_2} ... (2n)^{c_n}),
// which minimizes the row charge among admissible first rows.
std::vector<int> sigma_min_row(const Partition& lambda, int n);

// A filling of lambda over 1..2n whose first row is sigma_min_row and whose
// charge equals min_power.
Tableau sigma_min(const Partition& lambda, int n);

// Structure of the columns of lambda used to build sigma_min.  Columns are
// indexed left to right (0-based); heights are weakly decreasing.  Indices i
// with a_i odd are paired left to right as (k_1,k_2), (k_3,k_4), ...; the
// columns of heights n+1-i for k <= i <= k' form a block (odd when k'-k is
// odd), and when the count of odd a_i is odd the columns of height at most
// n+1-k_p form the incomplete block.  A column is special when it starts a
// run of equal heights inside a block without starting the block, and an
// odd special column is one whose top entry in sigma_min_row has the same
// parity as its height.
struct ColumnInfo {
    int height = 0;
    int top = 0;              // entry of sigma_min_row above this column
    int block = -1;           // 0-based block id, -1 outside every block
    bool block_odd = false;   // meaningful when block >= 0
    bool in_incomplete = false;
    bool special = false;
    bool odd_special = false;
};

// Requires |lambda| even and at most n rows.
std::vector<ColumnInfo> column_structure(const Partition& lambda, int n);

// Positional upper bounds for first rows: entry q (0-based) of a candidate
// first row must be at most bounds[q], where bounds[q] = n + k for the
// positions s_{k-1} < q+1 <= s_k.  The bounds vector itself is the largest
// admissible row.  Requires lambda nonzero parts <= n rows.
std::vector<int> row_entry_bounds(const Partition& lambda, int n);

// True when row is weakly increasing of length lambda_1 with entries in
// 1..2n respecting row_entry_bounds.
bool row_in_sigma(const std::vector<int>& row, const Partition& lambda, int n);

// Charge of a single weakly increasing row over 1..2n:
//   sum_{i=2}^{2n} (2n+1-i) * ceil(m_i / 2),
// where m_i is the multiplicity of the letter i.  This agrees with the
// type-C charge of the one-row tableau.
long long row_charge(const std::vector<int>& row, int n);

// Minimum of row_charge over admissible rows with entries >= 2 (entries
// equal to 1 never occur in the first row of the fillings being optimized,
// and admitting them would let the charge collapse).  Exponential search,
// only suitable for small shapes; used to cross-check min_power.
long long min_row_charge_bruteforce(const Partition& lambda, int n);

// Letter multiplicities of a row over 1..2n (result has length 2n) and the
// inverse expansion.
std::vector<int> row_multiplicities(const std::vector<int>& row, int n);
std::vector<int> row_from_multiplicities(const std::vector<int>& mults);

// A charge-monotone rewriting move on multiplicity vectors.  Kinds:
//   1: m_i -= 2, m_{i+1} += 2   (i >= 2, m_i >= 2); strictly decreases charge
//   2: m_i -= 1, m_{i+1} += 1   (i >= 2, m_i odd);  strictly decreases charge
//   3: m_i += 1, m_j -= 1       (j > i, m_i odd, m_j >= 1); weakly decreases
//   4: m_i -= 1, m_j += 1       (j > i, m_i even >= 2, m_j odd); preserves
// Only moves whose result still satisfies row_entry_bounds are legal.
struct RowMove {
    int kind = 0;
    int i = 0;
    int j = 0;  // used by kinds 3 and 4
    std::vector<int> result;
};

std::vector<RowMove> legal_row_moves(const std::vector<int>& mults,
                                     const Partition& lambda, int n);

// Applies every legal move once and checks the charge comparison promised
// for its kind, throwing std::logic_error on any violation.  Returns the
// number of moves checked.
int lattice_moves_check(const std::vector<int>& row, const Partition& lambda,
                        int n);

}  // namespace genexp

#endif
