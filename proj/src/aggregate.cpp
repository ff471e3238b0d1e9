#include "tfn/aggregate.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "tfn/order.hpp"
#include "tfn/sampling.hpp"

namespace fuzzy {

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw ValidationError("weight vector must not be empty");
    }
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) {
            throw ValidationError("weights must be finite and nonnegative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw ValidationError("weights must sum to 1");
    }
}

WeightVector WeightVector::uniform(std::size_t n) {
    if (n == 0) throw ValidationError("weight vector must not be empty");
    return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Aggregator::Aggregator(std::size_t arity, Fn fn, std::string name)
    : arity_(arity), fn_(std::move(fn)), name_(std::move(name)) {
    if (arity_ == 0) throw DimensionMismatch("aggregator arity must be >= 1");
}

Tfn Aggregator::operator()(const TfnVector& U) const {
    if (U.size() != arity_) {
        throw DimensionMismatch(name_ + ": expected " + std::to_string(arity_) + " arguments, got " +
                                std::to_string(U.size()));
    }
    return fn_(U);
}

Tfn arithmetic_mean(std::span<const Tfn> xs) {
    if (xs.empty()) throw DimensionMismatch("arithmetic mean of an empty list");
    Tfn sum = xs.front();
    for (const Tfn& x : xs.subspan(1)) sum = sum + x;
    return sum / Crisp(static_cast<double>(xs.size()));
}

Tfn weighted_mean(const WeightVector& W, const TfnVector& U) {
    if (W.size() != U.size()) {
        throw DimensionMismatch("weighted mean: " + std::to_string(W.size()) + " weights for " +
                                std::to_string(U.size()) + " values");
    }
    Tfn sum = W[0] * U[0];
    for (std::size_t i = 1; i < U.size(); ++i) sum = sum + W[i] * U[i];
    return sum;
}

Aggregator make_arithmetic_mean(std::size_t arity) {
    return Aggregator(arity, [](const TfnVector& U) { return arithmetic_mean(U); }, "mean");
}

Aggregator make_weighted_mean(WeightVector W) {
    const std::size_t n = W.size();
    return Aggregator(
        n, [W = std::move(W)](const TfnVector& U) { return weighted_mean(W, U); }, "wmean");
}

Aggregator make_ot_min(std::size_t arity) {
    return Aggregator(arity, [](const TfnVector& U) { return ot_min(U.components()); }, "min");
}

Aggregator make_ot_max(std::size_t arity) {
    return Aggregator(arity, [](const TfnVector& U) { return ot_max(U.components()); }, "max");
}

Witness<MonotonicityCounterexample> is_ot_increasing_witness(const Aggregator& E,
                                                             std::size_t trials,
                                                             std::uint64_t seed) {
    TfnSampler sampler(seed, kExactMix);
    std::bernoulli_distribution keep_component(0.1);
    Witness<MonotonicityCounterexample> result;

    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Tfn> lower, upper;
        lower.reserve(E.arity());
        upper.reserve(E.arity());
        for (std::size_t i = 0; i < E.arity(); ++i) {
            const Tfn A = sampler.next();
            const Tfn shift = keep_component(sampler.engine()) ? Tfn{} : sampler.next_ot_positive();
            lower.push_back(A);
            upper.push_back(A + shift);
        }
        TfnVector U(std::move(lower));
        TfnVector V(std::move(upper));
        ++result.trials_run;
        // exact pools keep the translation exact; skip a pair if it somehow is not dominated
        if (!vec_compare_otn(U, V)) continue;

        const Tfn eu = E(U);
        const Tfn ev = E(V);
        if (compare_ot(eu, ev) == OrderResult::gt) {
            result.holds = false;
            result.counterexample = MonotonicityCounterexample{std::move(U), std::move(V), eu, ev};
            return result;
        }
    }
    return result;
}

namespace {

bool close(double got, double want, double rel) {
    if (got == want) return true;
    return std::abs(got - want) <= rel * std::max(1.0, std::abs(want));
}

}  // namespace

Witness<IdempotencyCounterexample> is_idempotent_witness(const Aggregator& E,
                                                        std::size_t trials,
                                                        std::uint64_t seed,
                                                        double relative_tolerance) {
    TfnSampler sampler(seed, kExactMix);
    Witness<IdempotencyCounterexample> result;

    for (std::size_t t = 0; t < trials; ++t) {
        const Tfn A = sampler.next();
        const Tfn out = E(TfnVector::filled(E.arity(), A));
        ++result.trials_run;

        const double rel = is_integer_valued(A) ? 0.0 : relative_tolerance;
        const bool same = close(out.a(), A.a(), rel) && close(out.b(), A.b(), rel) &&
                          close(out.c(), A.c(), rel);
        if (!same) {
            result.holds = false;
            result.counterexample = IdempotencyCounterexample{A, out};
            return result;
        }
    }
    return result;
}

bool fta_bounds_check(const Aggregator& E, const TfnVector& U) {
    const Tfn value = E(U);
    return leq_ot(ot_min(U.components()), value) && leq_ot(value, ot_max(U.components()));
}

}  // namespace fuzzy
