#ifndef GENEXP_BRANCHING_HPP
#define GENEXP_BRANCHING_HPP

// Symplectic branching coefficients: the multiplicity of the rank-n
// symplectic irreducible labelled lambda inside the general-linear
// irreducible labelled nu.  Three equivalent computations are provided: a
// row-bounded lattice-tableau rule on the skew shape nu/lambda, a flagged
// rule on the conjugate side, and a transport of the flagged rule through
// evacuation.  A comparison pipeline reports, witness by witness, how the
// row-bounded rule relates to the flag condition.

#include <vector>

#include "genexp/partition.hpp"
#include "genexp/polynomial.hpp"
#include "genexp/skew.hpp"
#include "genexp/tableau.hpp"

namespace genexp {

// Largest 1-based row index in which an odd letter may appear: letter
// 2i + 1 (including 1, with i = 0) is confined to rows <= n + i.
int sundaram_row_bound(int letter, int n);

// A lattice skew filling of shape nu/lambda over 1..2n whose weight delta
// has all column heights even and whose odd letters respect the row bound.
struct SundaramTableau {
    SkewTableau tableau;
    Partition weight;
};

// All such fillings, any admissible weight.  Their number is the branching
// coefficient.
std::vector<SundaramTableau> sundaram_tableaux(const Partition& lambda,
                                               const Partition& nu, int n);

// Appends kappa_i cells carrying the letter i to the end of row i, sending
// a witness for (lambda, nu) to one for (lambda, nu + kappa) with weight
// delta + kappa.  kappa must have even parts, even column heights, and at
// most alphabet rows.
SundaramTableau add_kappa(const SundaramTableau& t, const Partition& kappa);

// The flagged rule on the conjugate side: for each admissible delta, the
// tableaux of shape lambda' and content nu' - delta' that are companions
// compatible with delta', and whose first-row entries strictly exceed the
// corresponding entries of delta reversed and padded to 2n slots.
std::vector<Tableau> kwon_tableaux(const Partition& lambda, const Partition& nu,
                                   int n);

// The same count on the unconjugated side: tableaux b of shape lambda and
// content nu - delta compatible with delta whose evacuation satisfies the
// flag condition (every row r entry is at least 2r - 1).
long long kwon_via_c3(const Partition& lambda, const Partition& nu, int n);

// The branching coefficient, computed by all routes; throws
// std::runtime_error should they ever disagree.
long long branching_sp(const Partition& lambda, const Partition& nu, int n);

// Sum over even-part partitions nu with at most 2n rows of t^{|nu|/2}
// times the branching coefficient, truncated at the cutoff.
TruncatedSeries branching_series(const Partition& lambda, int n, int cutoff);

// One lattice filling sent through the comparison pipeline.
struct PipelineCase {
    SkewTableau tau;
    bool sundaram_admissible = false;
    Tableau companion;   // shape delta, rows recording the rows of tau
    Tableau swapped;     // lambda-shaped image under the highest-weight swap
    Tableau evacuated;   // its evacuation
    bool passes_flag = false;
};

// Counts for one middle weight delta.
struct DeltaReport {
    Partition delta;
    long long lr_count = 0;          // all lattice fillings of weight delta
    long long sundaram_count = 0;    // those passing the row bounds
    long long admissible_count = 0;  // those whose pipeline image passes the flag
    bool elementwise_match = true;   // the two tests agree on every filling
    bool injective_on_sundaram = true;  // pipeline injective on the row-bound set
    std::vector<PipelineCase> cases;    // populated when collect_cases is set
};

struct BranchReport {
    Partition lambda;
    Partition nu;
    int rank = 0;
    long long sundaram_total = 0;
    long long admissible_total = 0;
    bool totals_match = true;
    bool composition_bijective = true;  // elementwise match and injectivity throughout
    std::vector<DeltaReport> deltas;
};

// Sends every lattice filling through companion, highest-weight swap and
// evacuation, and tabulates how the row-bounded rule compares with the flag
// condition.  Observational: nothing here is asserted, only reported.
BranchReport compare_rules(const Partition& lambda, const Partition& nu, int n,
                           bool collect_cases = false);

}  // namespace genexp

#endif
