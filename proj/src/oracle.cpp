#include "tfn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "tfn/kernels.hpp"

namespace fuzzy::oracle {

namespace {

constexpr double kSupportPad = 1e-9;
constexpr int kRefinements = 2;

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> ys(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) ys[i] = lo + step * static_cast<double>(i);
    ys[n - 1] = hi;
    return ys;
}

template <class Combine>
CutProfile combine_profiles(const Tfn& A, const Tfn& B, const AlphaGrid& grid, Combine combine) {
    CutProfile out;
    out.reserve(grid.levels().size());
    for (double alpha : grid.levels()) {
        out.push_back({alpha, combine(alpha_cut(A, alpha), alpha_cut(B, alpha))});
    }
    return out;
}

}  // namespace

AlphaGrid::AlphaGrid(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw ValidationError("alpha grid must not be empty");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const double l = levels_[i];
        if (!(l > 0.0 && l <= 1.0)) throw ValidationError("alpha levels must lie in ]0, 1]");
        if (i > 0 && !(levels_[i - 1] < l)) throw ValidationError("alpha levels must be strictly ascending");
    }
    if (levels_.back() != 1.0) throw ValidationError("alpha grid must end at 1");
}

AlphaGrid AlphaGrid::standard() { return uniform(10); }

AlphaGrid AlphaGrid::uniform(std::size_t k) {
    std::vector<double> levels(k);
    for (std::size_t i = 0; i < k; ++i) {
        levels[i] = static_cast<double>(i + 1) / static_cast<double>(k);
    }
    return AlphaGrid(std::move(levels));
}

Interval interval_add(const Interval& x, const Interval& y) noexcept {
    return Interval{x.lo + y.lo, x.hi + y.hi};
}

Interval interval_sub(const Interval& x, const Interval& y) noexcept {
    return Interval{x.lo - y.hi, x.hi - y.lo};
}

Interval interval_scale(double r, const Interval& x) noexcept {
    if (r < 0.0) return Interval{r * x.hi, r * x.lo};
    return Interval{r * x.lo, r * x.hi};
}

CutProfile profile(const Tfn& A, const AlphaGrid& grid) {
    CutProfile out;
    out.reserve(grid.levels().size());
    for (double alpha : grid.levels()) out.push_back({alpha, alpha_cut(A, alpha)});
    return out;
}

CutProfile oracle_add(const Tfn& A, const Tfn& B, const AlphaGrid& grid) {
    return combine_profiles(A, B, grid, interval_add);
}

CutProfile oracle_sub(const Tfn& A, const Tfn& B, const AlphaGrid& grid) {
    return combine_profiles(A, B, grid, interval_sub);
}

CutProfile oracle_scale(Crisp r, const Tfn& A, const AlphaGrid& grid) {
    CutProfile out;
    out.reserve(grid.levels().size());
    for (double alpha : grid.levels()) {
        out.push_back({alpha, interval_scale(r.value(), alpha_cut(A, alpha))});
    }
    return out;
}

double max_deviation(const CutProfile& x, const CutProfile& y) {
    if (x.size() != y.size()) throw DimensionMismatch("profiles have different lengths");
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].alpha != y[i].alpha) throw DimensionMismatch("profiles use different alpha grids");
        worst = std::max({worst, std::abs(x[i].cut.lo - y[i].cut.lo), std::abs(x[i].cut.hi - y[i].cut.hi)});
    }
    return worst;
}

double oracle_membership_convolution(const Tfn& A, const Tfn& B, ConvolutionOp op, double x,
                                     std::size_t samples) {
    if (samples < kMinConvolutionSamples) {
        throw DomainError("convolution needs at least 100 samples");
    }

    if (op == ConvolutionOp::mul) {
        if (!B.is_crisp()) throw DomainError("mul convolution needs a crisp right operand");
        const double r = B.b();
        // y * 0 = 0 for every y, and sup A = 1
        if (r == 0.0) return x == 0.0 ? 1.0 : 0.0;
        // as for add and sub, breakpoints whose product lands on x count
        double hit = membership(A, x / r);
        for (const double y : {A.a(), A.b(), A.c()}) {
            if (y * r == x) hit = std::max(hit, membership(A, y));
        }
        return hit;
    }

    const bool adding = op == ConvolutionOp::add;

    // Pairs of breakpoints whose floating-point combination lands on x. Next
    // to a vertical ramp the membership jumps, and the grid below cannot hit
    // such a pair when z = x - y rounds off it.
    double exact_hit = 0.0;
    for (const double y : {A.a(), A.b(), A.c()}) {
        for (const double z : {B.a(), B.b(), B.c()}) {
            if ((adding ? y + z : y - z) == x) {
                exact_hit = std::max(exact_hit, std::min(membership(A, y), membership(B, z)));
            }
        }
    }

    // A crisp operand leaves a single feasible pair, which a grid can only
    // hit up to rounding; evaluate it directly instead.
    if (B.is_crisp()) return std::max(exact_hit, membership(A, adding ? x - B.b() : x + B.b()));
    if (A.is_crisp()) return std::max(exact_hit, membership(B, adding ? x - A.b() : A.b() - x));

    // z as an affine function of y, and the y-range that keeps z in supp B
    const double slope = adding ? -1.0 : 1.0;
    const double offset = adding ? x : -x;
    const double z_lo = adding ? x - B.c() : x + B.a();
    const double z_hi = adding ? x - B.a() : x + B.c();

    double lo = std::max(A.a(), z_lo) - kSupportPad;
    double hi = std::min(A.c(), z_hi) + kSupportPad;
    if (lo > hi) return exact_hit;

    double best = exact_hit;
    {
        const double y_at_b2[] = {adding ? x - B.a() : x + B.a(), adding ? x - B.b() : x + B.b(),
                                  adding ? x - B.c() : x + B.c()};
        std::vector<double> breaks{A.a(), A.b(), A.c()};
        breaks.insert(breaks.end(), std::begin(y_at_b2), std::end(y_at_b2));
        std::erase_if(breaks, [&](double y) { return y < lo || y > hi; });
        best = std::max(best, kernels::sup_min_affine(A, B, slope, offset, breaks));
    }

    std::vector<double> values(samples);
    for (int level = 0; level <= kRefinements; ++level) {
        const std::vector<double> ys = linspace(lo, hi, samples);
        kernels::min_affine(A, B, slope, offset, ys, values);

        const double level_best = *std::max_element(values.begin(), values.end());
        best = std::max(best, level_best);
        if (level_best == 0.0) break;

        // the objective is quasi-concave in y, so the maximizers are contiguous
        // and the supremum lies within one step of them
        const auto first = static_cast<std::size_t>(
            std::find(values.begin(), values.end(), level_best) - values.begin());
        const auto last = static_cast<std::size_t>(
            values.rend() - std::find(values.rbegin(), values.rend(), level_best) - 1);
        lo = ys[first == 0 ? 0 : first - 1];
        hi = ys[std::min(last + 1, samples - 1)];
        if (!(lo < hi)) break;
    }
    return best;
}

}  // namespace fuzzy::oracle
