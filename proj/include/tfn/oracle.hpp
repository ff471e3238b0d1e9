#ifndef TFN_ORACLE_HPP
#define TFN_ORACLE_HPP

// Verification-only reconstructions of TFN arithmetic.
//
// Two routes that share nothing with the closed forms in core.hpp:
//
//   interval route   alpha-cut each operand, combine the cuts with interval
//                    arithmetic, one interval per level of an AlphaGrid
//   sup-min route    evaluate (A op B)(x) = sup min(A(y), B(z)) over the
//                    constraint x = y op z by grid search on y
//
// Library users have no reason to call these; the test suites compare them
// against the closed forms.

#include <cstddef>
#include <span>
#include <vector>

#include "tfn/core.hpp"

namespace fuzzy::oracle {

/// Strictly ascending alpha levels in ]0, 1] ending at 1.
class AlphaGrid {
public:
    /// Throws ValidationError if the levels are empty, not strictly
    /// ascending, outside ]0, 1] or do not end at 1.
    explicit AlphaGrid(std::vector<double> levels);

    /// {0.1, 0.2, ..., 1.0}
    static AlphaGrid standard();

    /// {1/k, 2/k, ..., 1}
    static AlphaGrid uniform(std::size_t k);

    std::span<const double> levels() const noexcept { return levels_; }

private:
    std::vector<double> levels_;
};

struct LevelCut {
    double alpha;
    Interval cut;
};

using CutProfile = std::vector<LevelCut>;

Interval interval_add(const Interval& x, const Interval& y) noexcept;
Interval interval_sub(const Interval& x, const Interval& y) noexcept;
Interval interval_scale(double r, const Interval& x) noexcept;

/// alpha_cut(A, alpha) at every level of the grid.
CutProfile profile(const Tfn& A, const AlphaGrid& grid);

CutProfile oracle_add(const Tfn& A, const Tfn& B, const AlphaGrid& grid);
CutProfile oracle_sub(const Tfn& A, const Tfn& B, const AlphaGrid& grid);
CutProfile oracle_scale(Crisp r, const Tfn& A, const AlphaGrid& grid);

/// Largest endpoint difference between two profiles over the same grid.
/// Throws DimensionMismatch if the grids differ.
double max_deviation(const CutProfile& x, const CutProfile& y);

enum class ConvolutionOp {
    add,  // x = y + z
    sub,  // x = y - z
    mul,  // x = y * z; the right operand must be crisp
};

inline constexpr std::size_t kMinConvolutionSamples = 100;

/// Grid estimate of (A op B)(x).
///
/// y runs over the part of supp A that is compatible with supp B, padded by
/// 1e-9 on both sides, at `samples` evenly spaced points plus the breakpoints
/// of both memberships. The best cell is then re-sampled twice at finer
/// spacing. Every evaluated point is a feasible (y, z), so the estimate never
/// exceeds the true value beyond rounding and approaches it as samples grow.
///
/// Throws DomainError when samples < 100, or for mul with a non-crisp B.
double oracle_membership_convolution(const Tfn& A, const Tfn& B, ConvolutionOp op, double x,
                                     std::size_t samples);

}  // namespace fuzzy::oracle

#endif  // TFN_ORACLE_HPP
