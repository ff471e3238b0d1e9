#ifndef TFN_TESTS_SUPPORT_HPP
#define TFN_TESTS_SUPPORT_HPP

// Test-only oracles. Nothing here calls the closed-form arithmetic or
// alpha_cut; everything is rebuilt from the membership function.

#include <gtest/gtest.h>

#include <cmath>

#include "tfn/core.hpp"

namespace fuzzy::testing {

/// {x : A(x) >= alpha} located by bisection on the membership function.
inline Interval cut_by_bisection(const Tfn& A, double alpha) {
    // left end: smallest x in [a, b] with A(x) >= alpha
    double lo = A.a(), hi = A.b();
    if (membership(A, lo) < alpha) {
        for (int i = 0; i < 200 && lo < hi; ++i) {
            const double mid = lo + (hi - lo) / 2;
            if (mid == lo || mid == hi) break;
            (membership(A, mid) >= alpha ? hi : lo) = mid;
        }
    } else {
        hi = lo;
    }
    const double left = hi;

    lo = A.b();
    hi = A.c();
    if (membership(A, hi) < alpha) {
        for (int i = 0; i < 200 && lo < hi; ++i) {
            const double mid = lo + (hi - lo) / 2;
            if (mid == lo || mid == hi) break;
            (membership(A, mid) >= alpha ? lo : hi) = mid;
        }
    } else {
        lo = hi;
    }
    return Interval{left, lo};
}

/// Recovers (a, b, c) from the cuts at alpha = 1/2 and alpha = 1, which
/// determine a triangle because the cut endpoints are affine in alpha.
inline Tfn triple_from_cuts(const Interval& half, const Interval& one) {
    const double b = one.lo;
    return Tfn(2 * half.lo - b, b, 2 * half.hi - b);
}

inline void expect_tfn_near(const Tfn& got, const Tfn& want, double tol) {
    EXPECT_NEAR(got.a(), want.a(), tol);
    EXPECT_NEAR(got.b(), want.b(), tol);
    EXPECT_NEAR(got.c(), want.c(), tol);
}

}  // namespace fuzzy::testing

#endif  // TFN_TESTS_SUPPORT_HPP
