#ifndef TFN_AGGREGATE_HPP
#define TFN_AGGREGATE_HPP

// Averaging aggregation on TFN^n.
//
// An aggregator E : TFN^n -> TFN is OT-increasing when U <=_OTn V implies
// E(U) <=_OT E(V). An OT-increasing E is a function of average type when
//
//     min_OT(A_1..A_n) <=_OT E(A_1..A_n) <=_OT max_OT(A_1..A_n),
//
// which for OT-increasing maps is the same as idempotency, E(A..A) = A.
// fta_bounds_check tests the bounds alone and makes no monotonicity claim.
//
// The two witnesses are randomized falsification checks. A returned
// counterexample is a proof of failure; a clean run is only evidence.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tfn/core.hpp"
#include "tfn/vector.hpp"

namespace fuzzy {

/// Nonnegative crisp weights summing to one. Validated, never renormalized.
class WeightVector {
public:
    static constexpr double kSumTolerance = 1e-12;

    /// Throws ValidationError for an empty list, a negative or non-finite
    /// weight, or a sum further than kSumTolerance from 1.
    explicit WeightVector(std::vector<double> weights);

    /// (1/n, ..., 1/n)
    static WeightVector uniform(std::size_t n);

    std::size_t size() const noexcept { return weights_.size(); }
    Crisp operator[](std::size_t i) const { return Crisp(weights_[i]); }
    std::span<const double> values() const noexcept { return weights_; }

private:
    std::vector<double> weights_;
};

/// An n-ary aggregation function with a checked arity.
class Aggregator {
public:
    using Fn = std::function<Tfn(const TfnVector&)>;

    Aggregator(std::size_t arity, Fn fn, std::string name = "aggregator");

    std::size_t arity() const noexcept { return arity_; }
    const std::string& name() const noexcept { return name_; }

    /// Throws DimensionMismatch when U.size() != arity().
    Tfn operator()(const TfnVector& U) const;

private:
    std::size_t arity_;
    Fn fn_;
    std::string name_;
};

/// Sum of the components, then divided by crisp n. Throws DimensionMismatch
/// for an empty list.
Tfn arithmetic_mean(std::span<const Tfn> xs);
inline Tfn arithmetic_mean(const TfnVector& U) { return arithmetic_mean(U.components()); }

/// sum of w_i A_i. Throws DimensionMismatch when the lengths differ.
Tfn weighted_mean(const WeightVector& W, const TfnVector& U);

Aggregator make_arithmetic_mean(std::size_t arity);
Aggregator make_weighted_mean(WeightVector W);
Aggregator make_ot_min(std::size_t arity);
Aggregator make_ot_max(std::size_t arity);

template <class Counterexample>
struct Witness {
    bool holds = true;
    std::size_t trials_run = 0;
    std::optional<Counterexample> counterexample;

    explicit operator bool() const noexcept { return holds; }
};

struct MonotonicityCounterexample {
    TfnVector lower;   // lower <=_OTn upper
    TfnVector upper;
    Tfn lower_value;   // E(lower), found >_OT E(upper)
    Tfn upper_value;
};

struct IdempotencyCounterexample {
    Tfn input;
    Tfn output;        // E(input, ..., input) != input
};

/// Samples U and builds V by adding an OT-positive (or zero) TFN to every
/// component, so U <=_OTn V holds by translation. Reports the first pair
/// with E(U) >_OT E(V).
Witness<MonotonicityCounterexample> is_ot_increasing_witness(const Aggregator& E,
                                                             std::size_t trials,
                                                             std::uint64_t seed);

/// Checks E(A, ..., A) == A. Integer-valued samples are compared exactly;
/// other samples within relative_tolerance per component (0 means exact).
Witness<IdempotencyCounterexample> is_idempotent_witness(const Aggregator& E,
                                                        std::size_t trials,
                                                        std::uint64_t seed,
                                                        double relative_tolerance = 0.0);

/// min_OT(U) <=_OT E(U) <=_OT max_OT(U), inclusive.
bool fta_bounds_check(const Aggregator& E, const TfnVector& U);

}  // namespace fuzzy

#endif  // TFN_AGGREGATE_HPP
