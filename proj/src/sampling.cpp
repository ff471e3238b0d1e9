#include "tfn/sampling.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tfn/order.hpp"

namespace fuzzy {

namespace {

constexpr std::array<double, 3> kScales{10.0, 1e3, 1e6};
constexpr double kDyadicDenominator = 64.0;
constexpr std::int64_t kWeightUnits = 1 << 16;

}  // namespace

TfnSampler::TfnSampler(std::uint64_t seed, SampleMix mix) : rng_(seed), mix_(mix) {}

ValueKind TfnSampler::draw_kind() {
    const double total = mix_.integer + mix_.dyadic + mix_.continuous;
    const double u = std::uniform_real_distribution<double>(0.0, total)(rng_);
    if (u < mix_.integer) return ValueKind::integer;
    if (u < mix_.integer + mix_.dyadic) return ValueKind::dyadic;
    return ValueKind::continuous;
}

double TfnSampler::draw_scale() {
    std::size_t usable = 1;
    while (usable < kScales.size() && kScales[usable] <= mix_.max_scale) ++usable;
    const auto i = std::uniform_int_distribution<std::size_t>(0, usable - 1)(rng_);
    return std::min(kScales[i], mix_.max_scale);
}

double TfnSampler::draw_value(ValueKind kind, double scale) {
    switch (kind) {
        case ValueKind::integer: {
            const auto s = static_cast<std::int64_t>(scale);
            return static_cast<double>(std::uniform_int_distribution<std::int64_t>(-s, s)(rng_));
        }
        case ValueKind::dyadic: {
            const auto s = static_cast<std::int64_t>(scale * kDyadicDenominator);
            const auto k = std::uniform_int_distribution<std::int64_t>(-s, s)(rng_);
            return static_cast<double>(k) / kDyadicDenominator;
        }
        case ValueKind::continuous:
            return std::uniform_real_distribution<double>(-scale, scale)(rng_);
    }
    return 0.0;
}

double TfnSampler::draw_width(ValueKind kind, double scale) {
    if (std::bernoulli_distribution(0.15)(rng_)) return 0.0;
    return std::abs(draw_value(kind, scale));
}

double TfnSampler::clamp(double x) const noexcept {
    return std::clamp(x, -mix_.max_scale, mix_.max_scale);
}

Tfn TfnSampler::next() { return next(draw_kind()); }

Tfn TfnSampler::next(ValueKind kind) {
    last_kind_ = kind;
    const double scale = draw_scale();
    const double b = draw_value(kind, scale);
    if (std::bernoulli_distribution(0.05)(rng_)) {
        return Tfn(b, b, b);
    }
    const double a = clamp(b - draw_width(kind, scale));
    const double c = clamp(b + draw_width(kind, scale));
    return Tfn(a, b, c);
}

Tfn TfnSampler::next_ot_positive() {
    for (;;) {
        const Tfn A = next();
        if (classify_sign(A) == SignClass::ot_positive) return A;
    }
}

Tfn TfnSampler::with_peak(double b) {
    const ValueKind kind = draw_kind();
    const double scale = draw_scale();
    return Tfn(clamp(b - draw_width(kind, scale)), b, clamp(b + draw_width(kind, scale)));
}

Tfn TfnSampler::with_peak_and_right(double b, double c) {
    const ValueKind kind = draw_kind();
    const double scale = draw_scale();
    return Tfn(clamp(b - draw_width(kind, scale)), b, c);
}

std::pair<Tfn, Tfn> TfnSampler::tied_pair(double p_shared_b, double p_shared_bc) {
    const Tfn A = next();
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    if (u < p_shared_bc) return {A, with_peak_and_right(A.b(), A.c())};
    if (u < p_shared_b) return {A, with_peak(A.b())};
    return {A, next()};
}

Crisp TfnSampler::dyadic_scalar() {
    const auto k = std::uniform_int_distribution<int>(-64, 64)(rng_);
    return Crisp(static_cast<double>(k) / 16.0);
}

std::vector<double> TfnSampler::dyadic_weights(std::size_t n) {
    std::vector<double> w(n, 0.0);
    if (n == 0) return w;
    if (std::bernoulli_distribution(0.1)(rng_)) {
        w[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_)] = 1.0;
        return w;
    }
    // n - 1 sorted cut points split [0, 2^16] into n integer parts
    std::vector<std::int64_t> cuts(n - 1);
    std::uniform_int_distribution<std::int64_t> pick(0, kWeightUnits);
    for (auto& x : cuts) x = pick(rng_);
    std::sort(cuts.begin(), cuts.end());
    std::int64_t prev = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        w[i] = static_cast<double>(cuts[i] - prev) / static_cast<double>(kWeightUnits);
        prev = cuts[i];
    }
    w[n - 1] = static_cast<double>(kWeightUnits - prev) / static_cast<double>(kWeightUnits);
    return w;
}

bool is_integer_valued(const Tfn& A) noexcept {
    return std::trunc(A.a()) == A.a() && std::trunc(A.b()) == A.b() && std::trunc(A.c()) == A.c();
}

}  // namespace fuzzy
