#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "support.hpp"
#include "tfn/core.hpp"
#include "tfn/sampling.hpp"

namespace fuzzy {
namespace {

using testing::cut_by_bisection;
using testing::triple_from_cuts;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Interval arithmetic written out here so the expected values below do not
// pass through the closed forms under test.
Tfn oracle_sum(const Tfn& A, const Tfn& B) {
    const auto h = [&](double alpha) {
        const Interval x = cut_by_bisection(A, alpha), y = cut_by_bisection(B, alpha);
        return Interval{x.lo + y.lo, x.hi + y.hi};
    };
    return triple_from_cuts(h(0.5), h(1.0));
}

Tfn oracle_difference(const Tfn& A, const Tfn& B) {
    const auto h = [&](double alpha) {
        const Interval x = cut_by_bisection(A, alpha), y = cut_by_bisection(B, alpha);
        return Interval{x.lo - y.hi, x.hi - y.lo};
    };
    return triple_from_cuts(h(0.5), h(1.0));
}

Tfn oracle_scaled(double r, const Tfn& A) {
    const auto h = [&](double alpha) {
        const Interval x = cut_by_bisection(A, alpha);
        return r < 0 ? Interval{r * x.hi, r * x.lo} : Interval{r * x.lo, r * x.hi};
    };
    return triple_from_cuts(h(0.5), h(1.0));
}

TEST(MakeTfn, AcceptsOrderedTriples) {
    const Tfn A = make_tfn(1, 2, 3);
    EXPECT_EQ(A.a(), 1);
    EXPECT_EQ(A.b(), 2);
    EXPECT_EQ(A.c(), 3);
    EXPECT_EQ(make_tfn(0, 0, 0), Tfn(Crisp(0)));
    EXPECT_TRUE(make_tfn(0, 0, 0).is_crisp());
}

TEST(MakeTfn, RejectsBadTriples) {
    EXPECT_THROW(make_tfn(3, 2, 1), ValidationError);
    EXPECT_THROW(make_tfn(0, 2, 1), ValidationError);
    EXPECT_THROW(make_tfn(2, 1, 3), ValidationError);
    EXPECT_THROW(make_tfn(kNaN, 0, 1), ValidationError);
    EXPECT_THROW(make_tfn(0, 0, kInf), ValidationError);
    EXPECT_THROW(make_tfn(-kInf, 0, 1), ValidationError);
    EXPECT_THROW(Crisp{kNaN}, ValidationError);
}

TEST(Crisp, EmbeddingIsInjective) {
    EXPECT_EQ(Tfn(Crisp(2.5)), make_tfn(2.5, 2.5, 2.5));
    EXPECT_NE(Tfn(Crisp(2.5)), Tfn(Crisp(2.5000000000000004)));
}

TEST(Crisp, FieldOperationsOverflow) {
    EXPECT_EQ((Crisp(2) + Crisp(3)).value(), 5);
    EXPECT_EQ((Crisp(2) * Crisp(-3)).value(), -6);
    EXPECT_THROW(Crisp(1e308) * Crisp(10), OverflowError);
}

TEST(Membership, Examples) {
    const Tfn A = make_tfn(0, 1, 2);
    EXPECT_EQ(membership(A, 1), 1.0);
    EXPECT_EQ(membership(A, 0.5), 0.5);
    EXPECT_EQ(membership(A, 3), 0.0);
    EXPECT_EQ(membership(make_tfn(1, 1, 2), 1), 1.0);
}

TEST(Membership, DegenerateRamps) {
    const Tfn left = make_tfn(1, 1, 2);
    EXPECT_EQ(membership(left, 0.999), 0.0);
    EXPECT_EQ(membership(left, 1.5), 0.5);
    const Tfn right = make_tfn(0, 2, 2);
    EXPECT_EQ(membership(right, 2.001), 0.0);
    EXPECT_EQ(membership(right, 1.0), 0.5);
    const Tfn crisp(Crisp(4));
    EXPECT_EQ(membership(crisp, 4), 1.0);
    EXPECT_EQ(membership(crisp, std::nextafter(4.0, 5.0)), 0.0);
}

TEST(Membership, AttainsOneOnlyAtPeak) {
    const Tfn A = make_tfn(-1, 0.25, 3);
    EXPECT_EQ(membership(A, 0.25), 1.0);
    // one ulp away the ramp value rounds back to 1, so step off visibly
    EXPECT_LT(membership(A, 0.25 + 1e-9), 1.0);
    EXPECT_LT(membership(A, 0.25 - 1e-9), 1.0);
    EXPECT_EQ(membership(A, -1), 0.0);
    EXPECT_EQ(membership(A, 3), 0.0);
}

TEST(AlphaCut, Examples) {
    const Tfn A = make_tfn(0, 1, 2);
    EXPECT_EQ(alpha_cut(A, 1.0), (Interval{1, 1}));
    EXPECT_EQ(alpha_cut(A, 0.5), (Interval{0.5, 1.5}));
    EXPECT_EQ(alpha_cut(make_tfn(2, 2, 2), 0.3), (Interval{2, 2}));
}

TEST(AlphaCut, RejectsLevelsOutsideUnitInterval) {
    const Tfn A = make_tfn(0, 1, 2);
    EXPECT_THROW(alpha_cut(A, 0.0), DomainError);
    EXPECT_THROW(alpha_cut(A, -0.1), DomainError);
    EXPECT_THROW(alpha_cut(A, 1.5), DomainError);
    EXPECT_THROW(alpha_cut(A, kNaN), DomainError);
}

TEST(AlphaCut, PeakIsExactAtLevelOne) {
    // a + 1 * (b - a) would round to 0.30000000000000004 here
    const Tfn A = make_tfn(0.1, 0.3, 0.7);
    EXPECT_EQ(alpha_cut(A, 1.0), (Interval{0.3, 0.3}));
}

TEST(AlphaCut, LimitAtZeroIsSupport) {
    const Tfn A = make_tfn(-2, 1, 5);
    const Interval I = alpha_cut(A, 1e-12);
    EXPECT_NEAR(I.lo, -2, 1e-10);
    EXPECT_NEAR(I.hi, 5, 1e-10);
}

TEST(AlphaCut, AgreesWithBisectionOnMembership) {
    TfnSampler sampler(11, SampleMix{0.3, 0.3, 0.4, 1e3});
    for (int i = 0; i < 500; ++i) {
        const Tfn A = sampler.next();
        for (double alpha : {0.05, 0.3, 0.5, 0.77, 1.0}) {
            const Interval got = alpha_cut(A, alpha);
            const Interval want = cut_by_bisection(A, alpha);
            EXPECT_NEAR(got.lo, want.lo, 1e-9) << A << " alpha " << alpha;
            EXPECT_NEAR(got.hi, want.hi, 1e-9) << A << " alpha " << alpha;
        }
    }
}

TEST(AlphaCut, NestedInAlpha) {
    const Tfn A = make_tfn(-3, 0.5, 9);
    Interval prev = alpha_cut(A, 0.01);
    for (int k = 2; k <= 100; ++k) {
        const Interval cur = alpha_cut(A, k / 100.0);
        EXPECT_LE(prev.lo, cur.lo);
        EXPECT_GE(prev.hi, cur.hi);
        prev = cur;
    }
}

TEST(Add, Examples) {
    const Tfn A = make_tfn(1, 2, 3), B = make_tfn(0, 1, 2);
    const Tfn want = make_tfn(1, 3, 5);
    testing::expect_tfn_near(oracle_sum(A, B), want, 1e-9);
    EXPECT_EQ(A + B, want);
    EXPECT_EQ(A + Tfn{}, A);
}

TEST(Add, CommutativeAndAssociativeOnExactInputs) {
    TfnSampler sampler(3, kExactMix);
    for (int i = 0; i < 2000; ++i) {
        const Tfn A = sampler.next(), B = sampler.next(), C = sampler.next();
        EXPECT_EQ(A + B, B + A);
        EXPECT_EQ((A + B) + C, A + (B + C));
    }
}

TEST(Add, Overflow) {
    const Tfn big = make_tfn(0, 1e308, 1.7e308);
    EXPECT_THROW(big + big, OverflowError);
}

TEST(Sub, Examples) {
    EXPECT_EQ(make_tfn(1, 2, 4) - make_tfn(1, 2, 3), make_tfn(-2, 0, 3));
    EXPECT_EQ(Tfn(Crisp(3.7)) - Tfn(Crisp(3.7)), Tfn{});

    const Tfn A = make_tfn(0, 1, 2);
    const Tfn want = make_tfn(-2, 0, 2);
    testing::expect_tfn_near(oracle_difference(A, A), want, 1e-9);
    EXPECT_EQ(A - A, want);
    EXPECT_TRUE(is_zero_isosceles(A - A));
}

TEST(Sub, SelfDifferenceIsZeroIsoscelesAndZeroOnlyWhenCrisp) {
    TfnSampler sampler(5);
    for (int i = 0; i < 5000; ++i) {
        const Tfn A = sampler.next();
        const Tfn D = A - A;
        ASSERT_TRUE(is_zero_isosceles(D)) << A;
        EXPECT_EQ(D == Tfn{}, A.is_crisp()) << A;
    }
}

TEST(Neg, Examples) {
    EXPECT_EQ(-make_tfn(1, 2, 3), make_tfn(-3, -2, -1));
    EXPECT_EQ(-Tfn{}, Tfn{});
    EXPECT_EQ(-make_tfn(-1, 0, 1), make_tfn(-1, 0, 1));
}

TEST(Neg, Involution) {
    TfnSampler sampler(9);
    for (int i = 0; i < 1000; ++i) {
        const Tfn A = sampler.next();
        EXPECT_EQ(-(-A), A);
        EXPECT_EQ(Crisp(-1) * A, -A);
    }
}

TEST(ScalarMul, Examples) {
    const Tfn A = make_tfn(1, 2, 3);
    const Tfn want = make_tfn(2, 4, 6);
    testing::expect_tfn_near(oracle_scaled(2, A), want, 1e-9);
    EXPECT_EQ(Crisp(2) * A, want);
    EXPECT_EQ(Crisp(0) * A, Tfn{});
    EXPECT_EQ(Crisp(-1) * A, make_tfn(-3, -2, -1));
    testing::expect_tfn_near(oracle_scaled(-1, A), make_tfn(-3, -2, -1), 1e-9);
}

TEST(CrispMul, MatchesScalarMul) {
    const Tfn A = make_tfn(1, 2, 3);
    EXPECT_EQ(A * Crisp(2), make_tfn(2, 4, 6));
    EXPECT_EQ(A * Crisp(0), Tfn{});
    EXPECT_EQ(A * Crisp(-1), make_tfn(-3, -2, -1));

    TfnSampler sampler(21);
    for (int i = 0; i < 500; ++i) {
        const Tfn B = sampler.next();
        const Crisp r = sampler.dyadic_scalar();
        EXPECT_EQ(crisp_mul(B, r), scalar_mul(r, B));
    }
}

TEST(ScalarMul, AssociativeOnExactInputs) {
    TfnSampler sampler(13, kExactMix);
    for (int i = 0; i < 2000; ++i) {
        const Tfn A = sampler.next();
        const Crisp r = sampler.dyadic_scalar(), t = sampler.dyadic_scalar();
        EXPECT_EQ((r * t) * A, r * (t * A));
    }
}

TEST(ScalarMul, DistributesOverScalarsOfEqualSign) {
    TfnSampler sampler(17, kExactMix);
    for (int i = 0; i < 2000; ++i) {
        const Tfn A = sampler.next();
        Crisp r = sampler.dyadic_scalar(), t = sampler.dyadic_scalar();
        if ((r.value() < 0) != (t.value() < 0)) t = Crisp(-t.value());
        if ((r.value() < 0) != (t.value() < 0)) continue;  // t was zero
        EXPECT_EQ((r + t) * A, r * A + t * A);
    }
}

TEST(ScalarMul, MixedSignDistributivityFails) {
    // (2 - 1)A = A but 2A + (-1)A widens the support
    const Tfn A = make_tfn(0, 1, 2);
    EXPECT_EQ((Crisp(2) + Crisp(-1)) * A, A);
    EXPECT_EQ(Crisp(2) * A + Crisp(-1) * A, make_tfn(-2, 1, 4));
}

TEST(CrispDiv, Examples) {
    const Tfn A = make_tfn(2, 4, 6);
    EXPECT_EQ(A / Crisp(2), make_tfn(1, 2, 3));
    EXPECT_EQ(Crisp(2) * (A / Crisp(2)), A);
    EXPECT_EQ(A / Crisp(1), A);
    EXPECT_THROW(make_tfn(1, 2, 3) / Crisp(0), DivisionByZero);
    EXPECT_THROW(make_tfn(1, 2, 3) / Crisp(-0.0), DivisionByZero);
}

TEST(CrispDiv, NegativeDivisorSwapsEndpoints) {
    EXPECT_EQ(make_tfn(2, 4, 6) / Crisp(-2), make_tfn(-3, -2, -1));
}

TEST(CrispDiv, Overflow) {
    EXPECT_THROW(make_tfn(1, 2, 1e308) / Crisp(1e-300), OverflowError);
}

TEST(RepeatAdd, Examples) {
    const Tfn A = make_tfn(1, 2, 3);
    EXPECT_EQ(repeat_add(A, 3), make_tfn(3, 6, 9));
    EXPECT_EQ(repeat_add(A, 3), Crisp(3) * A);
    EXPECT_EQ(repeat_add(A, 1), A);
    EXPECT_EQ(repeat_add(Tfn{}, 7), Tfn{});
    EXPECT_THROW(repeat_add(A, 0), DomainError);
}

TEST(RepeatAdd, EqualsScalarMultipleOnExactInputs) {
    TfnSampler sampler(23, kExactMix);
    for (std::size_t n = 1; n <= 12; ++n) {
        for (int i = 0; i < 100; ++i) {
            const Tfn A = sampler.next();
            EXPECT_EQ(repeat_add(A, n), Crisp(static_cast<double>(n)) * A);
        }
    }
}

TEST(ZeroIsosceles, Examples) {
    EXPECT_TRUE(is_zero_isosceles(make_tfn(-2, 0, 2)));
    EXPECT_TRUE(is_zero_isosceles(make_tfn(0, 0, 0)));
    EXPECT_FALSE(is_zero_isosceles(make_tfn(-1, 0, 2)));
    EXPECT_FALSE(is_zero_isosceles(make_tfn(-1, 0.5, 1)));
}

TEST(Closure, ResultsAreValidTfns) {
    TfnSampler sampler(29);
    for (int i = 0; i < 5000; ++i) {
        const Tfn A = sampler.next(), B = sampler.next();
        const Crisp r(std::uniform_real_distribution<double>(-100, 100)(sampler.engine()));
        for (const Tfn& R : {A + B, A - B, -A, r * A, A / Crisp(r.value() == 0 ? 1 : r.value())}) {
            EXPECT_LE(R.a(), R.b());
            EXPECT_LE(R.b(), R.c());
        }
    }
}

}  // namespace
}  // namespace fuzzy
