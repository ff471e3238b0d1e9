#ifndef TFN_KERNELS_HPP
#define TFN_KERNELS_HPP

// Data-parallel inner loops.
//
// Each kernel has a serial reference in fuzzy::kernels::serial and an OpenMP
// version in fuzzy::kernels::omp. Both produce bit-identical output: the
// batch kernels are elementwise and the reduction is a max, which does not
// depend on evaluation order. When the library is built without OpenMP the
// omp versions run serially.
//
// The unqualified fuzzy::kernels entry points pick the OpenMP version above
// kParallelThreshold elements.

#include <cstddef>
#include <span>

#include "tfn/core.hpp"
#include "tfn/order.hpp"

namespace fuzzy::kernels {

inline constexpr std::size_t kParallelThreshold = 4096;

/// max over y in ys of min(P(y), Q(slope * y + offset)); 0 for empty ys.
/// Addition uses slope -1, offset x (z = x - y); subtraction slope 1,
/// offset -x (z = y - x).
namespace serial {
double sup_min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                      std::span<const double> ys) noexcept;
/// out[i] = min(P(ys[i]), Q(slope * ys[i] + offset))
void min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                std::span<const double> ys, std::span<double> out) noexcept;
void membership(const Tfn& A, std::span<const double> xs, std::span<double> out) noexcept;
void classify(std::span<const Tfn> xs, std::span<SignClass> out) noexcept;
/// alpha must lie in ]0, 1] (not re-checked per element).
void alpha_cuts(std::span<const Tfn> xs, double alpha, std::span<Interval> out) noexcept;
}  // namespace serial

namespace omp {
double sup_min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                      std::span<const double> ys) noexcept;
void min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                std::span<const double> ys, std::span<double> out) noexcept;
void membership(const Tfn& A, std::span<const double> xs, std::span<double> out) noexcept;
void classify(std::span<const Tfn> xs, std::span<SignClass> out) noexcept;
void alpha_cuts(std::span<const Tfn> xs, double alpha, std::span<Interval> out) noexcept;
}  // namespace omp

/// Threads the OpenMP runtime would use; 1 without OpenMP.
int max_threads() noexcept;

double sup_min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                      std::span<const double> ys) noexcept;
void min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                std::span<const double> ys, std::span<double> out) noexcept;
void classify(std::span<const Tfn> xs, std::span<SignClass> out) noexcept;

/// Throws DomainError unless 0 < alpha <= 1 and DimensionMismatch when
/// out.size() != xs.size().
void alpha_cuts(std::span<const Tfn> xs, double alpha, std::span<Interval> out);

}  // namespace fuzzy::kernels

#endif  // TFN_KERNELS_HPP
