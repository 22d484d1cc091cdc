#include "slspec/coeffseq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace slspec {

CoeffSeq::CoeffSeq(SeqKind k, int start, std::vector<cplx> v)
    : kind(k), start_index(start), values(std::move(v))
{
    validate();
}

void CoeffSeq::validate() const
{
    if (values.empty())
        throw std::invalid_argument("CoeffSeq: at least one entry required");
    if (kind == SeqKind::sine && start_index < 1)
        throw std::invalid_argument("CoeffSeq: sine sequences start at index 1");
    if (start_index < 0)
        throw std::invalid_argument("CoeffSeq: negative start index");
}

cplx CoeffSeq::at(int n) const
{
    if (!has_index(n))
        throw std::out_of_range("CoeffSeq: index " + std::to_string(n) + " out of range");
    return values[(size_t)(n - start_index)];
}

CoeffSeq entrywise_product(const CoeffSeq& a, const CoeffSeq& b)
{
    const int lo = std::max(a.start_index, b.start_index);
    const int hi = std::min(a.max_index(), b.max_index());
    if (lo > hi)
        throw NumericalError("entrywise_product: index ranges do not overlap");

    SeqKind kind = SeqKind::plain;
    if (a.kind == SeqKind::cosine && b.kind == SeqKind::cosine) kind = SeqKind::cosine;
    else if (a.kind == SeqKind::sine && b.kind == SeqKind::sine) kind = SeqKind::cosine;
    else if ((a.kind == SeqKind::cosine && b.kind == SeqKind::sine) ||
             (a.kind == SeqKind::sine && b.kind == SeqKind::cosine)) kind = SeqKind::sine;

    std::vector<cplx> v((size_t)(hi - lo + 1));
    for (int n = lo; n <= hi; ++n)
        v[(size_t)(n - lo)] = a.at(n) * b.at(n);
    return CoeffSeq(kind, lo, std::move(v));
}

double weighted_norm(const CoeffSeq& a, double p, double s)
{
    return weighted_norm_report(a, p, s).value;
}

WeightedNormReport weighted_norm_report(const CoeffSeq& a, double p, double s)
{
    if (p < 1.0)
        throw std::domain_error("weighted_norm: p must be >= 1");

    const int lo = std::max(1, a.start_index);
    const int hi = a.max_index();
    WeightedNormReport rep;
    if (lo > hi) return rep;

    const int block_lo = std::max(lo, hi / 2 + (hi % 2 ? 1 : 0));

    if (std::isinf(p)) {
        double sup = 0.0, sup_tail = 0.0;
        for (int n = lo; n <= hi; ++n) {
            const double t = std::pow((double)n, s) * std::abs(a.at(n));
            sup = std::max(sup, t);
            if (n >= block_lo) sup_tail = std::max(sup_tail, t);
        }
        rep.value = sup;
        rep.last_block_ratio = sup > 0.0 ? sup_tail / sup : 0.0;
        return rep;
    }

    double total = 0.0, tail = 0.0;
    for (int n = lo; n <= hi; ++n) {
        const double t = std::pow((double)n, p * s) * std::pow(std::abs(a.at(n)), p);
        total += t;
        if (n >= block_lo) tail += t;
    }
    rep.value = std::pow(total, 1.0 / p);
    rep.last_block_ratio = total > 0.0 ? tail / total : 0.0;
    return rep;
}

DecayEstimate estimate_decay(const CoeffSeq& a, int n_min, int n_max)
{
    if (n_min < 1 || n_max < 4 * n_min)
        throw std::invalid_argument("estimate_decay: require n_max >= 4*n_min, n_min >= 1");
    const int lo = std::max(n_min, a.start_index);
    const int hi = std::min(n_max, a.max_index());
    if (lo > hi)
        throw std::invalid_argument("estimate_decay: fit range misses the sequence");

    // dyadic block maxima (n*, |a_{n*}|)
    std::vector<double> logn, logv;
    for (int bstart = n_min; bstart <= n_max; bstart *= 2) {
        const int bend = std::min(n_max, 2 * bstart - 1);
        double best = 0.0;
        int best_n = 0;
        for (int n = std::max(bstart, lo); n <= std::min(bend, hi); ++n) {
            const double v = std::abs(a.at(n));
            if (v > best) { best = v; best_n = n; }
        }
        if (best_n > 0 && best > 0.0) {
            logn.push_back(std::log((double)best_n));
            logv.push_back(std::log(best));
        }
    }

    DecayEstimate est;
    if (logn.empty()) {
        est.all_zero = true;
        est.exponent = std::numeric_limits<double>::infinity();
        return est;
    }
    if (logn.size() == 1) {
        // a single non-zero block cannot anchor a slope; treat as beyond cap
        est.capped = true;
        est.exponent = DecayEstimate::cap;
        return est;
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = (double)logn.size();
    for (size_t i = 0; i < logn.size(); ++i) {
        sx += logn[i]; sy += logv[i];
        sxx += logn[i] * logn[i];
        sxy += logn[i] * logv[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    est.exponent = -slope;
    if (est.exponent > DecayEstimate::cap) {
        est.exponent = DecayEstimate::cap;
        est.capped = true;
    }
    return est;
}

} // namespace slspec
