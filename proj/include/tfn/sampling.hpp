#ifndef TFN_SAMPLING_HPP
#define TFN_SAMPLING_HPP

// Seeded random generation of TFNs for the randomized witnesses and the
// property suites.
//
// Components come from three pools:
//   integer     whole numbers
//   dyadic      multiples of 1/64
//   continuous  uniform doubles
// Integer and dyadic values with magnitude <= 1e6 add, subtract and scale by
// dyadic crisp numbers without rounding, so algebraic laws can be asserted
// with exact equality on them. Continuous values exercise the rounding paths.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tfn/core.hpp"

namespace fuzzy {

struct SampleMix {
    double integer = 0.25;
    double dyadic = 0.5;
    double continuous = 0.25;
    /// Largest magnitude scale drawn; scales are picked from {10, 1e3, 1e6}
    /// not exceeding this bound. Components stay within [-max_scale, max_scale].
    double max_scale = 1e6;
};

/// Pool mix for witnesses whose checks rely on exact arithmetic.
inline constexpr SampleMix kExactMix{0.4, 0.6, 0.0, 1e6};

enum class ValueKind { integer, dyadic, continuous };

class TfnSampler {
public:
    explicit TfnSampler(std::uint64_t seed, SampleMix mix = {});

    Tfn next();
    Tfn next(ValueKind kind);

    /// Rejection-samples next() until the draw is OT-positive.
    Tfn next_ot_positive();

    /// A TFN sharing the given peak (and right endpoint, when given) with the
    /// other components drawn around it.
    Tfn with_peak(double b);
    Tfn with_peak_and_right(double b, double c);

    /// Pair where a fraction p_shared_b of draws share the peak exactly and a
    /// fraction p_shared_bc (counted inside p_shared_b) also share c.
    std::pair<Tfn, Tfn> tied_pair(double p_shared_b = 0.25, double p_shared_bc = 0.125);

    /// Dyadic crisp scalar k/16 with |k| <= 64.
    Crisp dyadic_scalar();

    /// n weights that are multiples of 2^-16, nonnegative, summing to exactly 1.
    std::vector<double> dyadic_weights(std::size_t n);

    ValueKind last_kind() const noexcept { return last_kind_; }
    std::mt19937_64& engine() noexcept { return rng_; }

private:
    ValueKind draw_kind();
    double draw_scale();
    double draw_value(ValueKind kind, double scale);
    double draw_width(ValueKind kind, double scale);
    double clamp(double x) const noexcept;

    std::mt19937_64 rng_;
    SampleMix mix_;
    ValueKind last_kind_ = ValueKind::integer;
};

/// True if every component is a whole number.
bool is_integer_valued(const Tfn& A) noexcept;

}  // namespace fuzzy

#endif  // TFN_SAMPLING_HPP
