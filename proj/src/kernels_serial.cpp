#include <algorithm>
#include <cmath>

#include "tfn/kernels.hpp"

namespace fuzzy::kernels {

namespace serial {

double sup_min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                      std::span<const double> ys) noexcept {
    double best = 0.0;
    for (double y : ys) {
        const double v = std::min(fuzzy::membership(P, y), fuzzy::membership(Q, slope * y + offset));
        best = std::max(best, v);
    }
    return best;
}

void min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                std::span<const double> ys, std::span<double> out) noexcept {
    for (std::size_t i = 0; i < ys.size(); ++i) {
        out[i] = std::min(fuzzy::membership(P, ys[i]), fuzzy::membership(Q, slope * ys[i] + offset));
    }
}

void membership(const Tfn& A, std::span<const double> xs, std::span<double> out) noexcept {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = fuzzy::membership(A, xs[i]);
}

void classify(std::span<const Tfn> xs, std::span<SignClass> out) noexcept {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = classify_sign(xs[i]);
}

void alpha_cuts(std::span<const Tfn> xs, double alpha, std::span<Interval> out) noexcept {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out[i] = Interval{std::lerp(xs[i].a(), xs[i].b(), alpha), std::lerp(xs[i].c(), xs[i].b(), alpha)};
    }
}

}  // namespace serial

double sup_min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                      std::span<const double> ys) noexcept {
    if (ys.size() >= kParallelThreshold) return omp::sup_min_affine(P, Q, slope, offset, ys);
    return serial::sup_min_affine(P, Q, slope, offset, ys);
}

void min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                std::span<const double> ys, std::span<double> out) noexcept {
    if (ys.size() >= kParallelThreshold) {
        omp::min_affine(P, Q, slope, offset, ys, out);
    } else {
        serial::min_affine(P, Q, slope, offset, ys, out);
    }
}

void classify(std::span<const Tfn> xs, std::span<SignClass> out) noexcept {
    if (xs.size() >= kParallelThreshold) {
        omp::classify(xs, out);
    } else {
        serial::classify(xs, out);
    }
}

void alpha_cuts(std::span<const Tfn> xs, double alpha, std::span<Interval> out) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in ]0, 1]");
    if (out.size() != xs.size()) throw DimensionMismatch("alpha_cuts: output size differs from input");
    if (xs.size() >= kParallelThreshold) {
        omp::alpha_cuts(xs, alpha, out);
    } else {
        serial::alpha_cuts(xs, alpha, out);
    }
}

}  // namespace fuzzy::kernels
