#include <algorithm>
#include <cmath>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tfn/kernels.hpp"

namespace fuzzy::kernels {

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace omp {

double sup_min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                      std::span<const double> ys) noexcept {
    const auto n = static_cast<std::int64_t>(ys.size());
    const double* y = ys.data();
    double best = 0.0;
    #pragma omp parallel for reduction(max : best) default(none) shared(P, Q, y) firstprivate(n, slope, offset)
    for (std::int64_t i = 0; i < n; ++i) {
        const double v = std::min(fuzzy::membership(P, y[i]), fuzzy::membership(Q, slope * y[i] + offset));
        best = std::max(best, v);
    }
    return best;
}

void min_affine(const Tfn& P, const Tfn& Q, double slope, double offset,
                std::span<const double> ys, std::span<double> out) noexcept {
    const auto n = static_cast<std::int64_t>(ys.size());
    const double* y = ys.data();
    double* o = out.data();
    #pragma omp parallel for default(none) shared(P, Q, y, o) firstprivate(n, slope, offset)
    for (std::int64_t i = 0; i < n; ++i) {
        o[i] = std::min(fuzzy::membership(P, y[i]), fuzzy::membership(Q, slope * y[i] + offset));
    }
}

void membership(const Tfn& A, std::span<const double> xs, std::span<double> out) noexcept {
    const auto n = static_cast<std::int64_t>(xs.size());
    const double* x = xs.data();
    double* o = out.data();
    #pragma omp parallel for default(none) shared(A, x, o) firstprivate(n)
    for (std::int64_t i = 0; i < n; ++i) o[i] = fuzzy::membership(A, x[i]);
}

void classify(std::span<const Tfn> xs, std::span<SignClass> out) noexcept {
    const auto n = static_cast<std::int64_t>(xs.size());
    const Tfn* x = xs.data();
    SignClass* o = out.data();
    #pragma omp parallel for default(none) shared(x, o) firstprivate(n)
    for (std::int64_t i = 0; i < n; ++i) o[i] = classify_sign(x[i]);
}

void alpha_cuts(std::span<const Tfn> xs, double alpha, std::span<Interval> out) noexcept {
    const auto n = static_cast<std::int64_t>(xs.size());
    const Tfn* x = xs.data();
    Interval* o = out.data();
    #pragma omp parallel for default(none) shared(x, o) firstprivate(n, alpha)
    for (std::int64_t i = 0; i < n; ++i) {
        o[i] = Interval{std::lerp(x[i].a(), x[i].b(), alpha), std::lerp(x[i].c(), x[i].b(), alpha)};
    }
}

}  // namespace omp

}  // namespace fuzzy::kernels
