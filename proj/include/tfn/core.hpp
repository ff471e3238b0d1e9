#ifndef TFN_CORE_HPP
#define TFN_CORE_HPP

// Triangular fuzzy numbers (a, b, c) with a <= b <= c and their closed-form
// arithmetic. Every value is validated on construction and every arithmetic
// result is re-checked for finiteness, so a Tfn in hand always satisfies its
// invariant.
//
// Comparisons between components are exact. Two triples are equal only when
// all three components compare equal as doubles.

#include <cstddef>
#include <iosfwd>

#include "tfn/errors.hpp"

namespace fuzzy {

/// Crisp fuzzy number r~: membership 1 at r and 0 elsewhere. Acts as the
/// scalar field for Tfn and TfnVector.
class Crisp {
public:
    /// Throws ValidationError when r is not finite.
    explicit Crisp(double r);

    double value() const noexcept { return r_; }

    /// Field operations of the reals; throw OverflowError on a non-finite result.
    friend Crisp operator+(Crisp x, Crisp y);
    friend Crisp operator*(Crisp x, Crisp y);
    friend bool operator==(Crisp x, Crisp y) noexcept { return x.r_ == y.r_; }

private:
    double r_;
};

/// Closed real interval [lo, hi]; the carrier of an alpha-cut.
struct Interval {
    double lo;
    double hi;

    /// Throws ValidationError unless lo <= hi.
    static Interval make(double lo, double hi);

    double width() const noexcept { return hi - lo; }
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

class Tfn {
public:
    /// The crisp zero (0, 0, 0).
    constexpr Tfn() noexcept = default;

    /// Throws ValidationError if any component is non-finite or a > b or b > c.
    Tfn(double a, double b, double c);

    /// Embedding r~ -> (r, r, r).
    explicit Tfn(Crisp r) noexcept : a_(r.value()), b_(r.value()), c_(r.value()) {}

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }

    bool is_crisp() const noexcept { return a_ == c_; }

    friend bool operator==(const Tfn& x, const Tfn& y) noexcept {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

private:
    double a_ = 0.0;
    double b_ = 0.0;
    double c_ = 0.0;
};

/// Same as the constructor; named form used by the parsers and the CLI.
Tfn make_tfn(double a, double b, double c);

/// Membership degree A(x). Degenerate ramps (a == b or b == c) are empty, so
/// a crisp number has membership 1 at b and 0 everywhere else.
double membership(const Tfn& A, double x) noexcept;

/// The alpha-level {x : A(x) >= alpha} = [a + alpha(b - a), c - alpha(c - b)].
/// Exact at alpha = 1 ([b, b]). Throws DomainError unless 0 < alpha <= 1.
Interval alpha_cut(const Tfn& A, double alpha);

Tfn operator+(const Tfn& A, const Tfn& B);

/// (a1 - c2, b1 - b2, c1 - a2). Not an inverse of +: A - A is (a - c, 0, c - a).
Tfn operator-(const Tfn& A, const Tfn& B);

/// (-c, -b, -a)
Tfn operator-(const Tfn& A) noexcept;

/// r~A: (ra, rb, rc) for r >= 0 and (rc, rb, ra) for r < 0.
Tfn operator*(Crisp r, const Tfn& A);

/// Product with a crisp right operand, the only TFN product that stays
/// triangular. Identical to r * A.
Tfn operator*(const Tfn& A, Crisp r);

/// Throws DivisionByZero when r == 0. Negative divisors swap the endpoints.
Tfn operator/(const Tfn& A, Crisp r);

inline Tfn add(const Tfn& A, const Tfn& B) { return A + B; }
inline Tfn sub(const Tfn& A, const Tfn& B) { return A - B; }
inline Tfn neg(const Tfn& A) noexcept { return -A; }
inline Tfn scalar_mul(Crisp r, const Tfn& A) { return r * A; }
inline Tfn crisp_mul(const Tfn& A, Crisp r) { return A * r; }
inline Tfn crisp_div(const Tfn& A, Crisp r) { return A / r; }

/// A + A + ... + A (n times) by repeated addition. Throws DomainError for n == 0.
Tfn repeat_add(const Tfn& A, std::size_t n);

/// True iff A = (-h, 0, h) for some h >= 0, i.e. A lies in the image of X - X.
bool is_zero_isosceles(const Tfn& A) noexcept;

std::ostream& operator<<(std::ostream& os, const Tfn& A);
std::ostream& operator<<(std::ostream& os, const Interval& I);

}  // namespace fuzzy

#endif  // TFN_CORE_HPP
