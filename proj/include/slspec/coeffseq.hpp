#ifndef SLSPEC_COEFFSEQ_HPP
#define SLSPEC_COEFFSEQ_HPP

#include <vector>

#include "slspec/common.hpp"

namespace slspec {

enum class SeqKind { sine, cosine, plain };

// Finite indexed sequence of Fourier coefficients or eigenvalue remainders.
// Indices run contiguously from start_index; cosine sequences may start at 0,
// sine sequences start at 1.
struct CoeffSeq {
    SeqKind kind = SeqKind::plain;
    int start_index = 1;
    std::vector<cplx> values;

    CoeffSeq() = default;
    CoeffSeq(SeqKind k, int start, std::vector<cplx> v);

    int size() const { return (int)values.size(); }
    int max_index() const { return start_index + (int)values.size() - 1; }
    bool has_index(int n) const { return n >= start_index && n <= max_index(); }
    cplx at(int n) const;

    void validate() const;
};

// Entrywise product over the common index range; the kind follows the
// product table cos*cos -> cos, sin*sin -> cos, cos*sin -> sin, and anything
// involving a plain sequence stays plain.
CoeffSeq entrywise_product(const CoeffSeq& a, const CoeffSeq& b);

// (sum_{n>=1} n^{ps} |a_n|^p)^{1/p}; sup_n n^s |a_n| for p = infinity.
// An index-0 entry (cosine sequences) carries zero weight and is skipped.
double weighted_norm(const CoeffSeq& a, double p, double s);

// Truncated norm together with the fraction contributed by the top dyadic
// index block [max/2, max], so callers can assert tail convergence.
struct WeightedNormReport {
    double value = 0.0;
    double last_block_ratio = 0.0; // share of the p-th power sum (or of the sup)
};
WeightedNormReport weighted_norm_report(const CoeffSeq& a, double p, double s);

// Result of the empirical decay fit; `exponent` is +infinity with all_zero
// set when every entry on the fitted range vanishes, and is clamped to
// `cap` (flagged) when the fit exceeds it.
struct DecayEstimate {
    double exponent = 0.0;
    bool capped = false;
    bool all_zero = false;

    static constexpr double cap = 10.0;
};

// Least-squares fit of log(block max |a_n|) against log n over dyadic blocks
// of [n_min, n_max]; block maxima absorb structural zeros of oscillatory
// sequences.  Requires n_max >= 4*n_min.
DecayEstimate estimate_decay(const CoeffSeq& a, int n_min, int n_max);

} // namespace slspec

#endif
