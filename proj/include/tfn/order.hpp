#ifndef TFN_ORDER_HPP
#define TFN_ORDER_HPP

// Orders on triangular fuzzy numbers.
//
//   leq_natural  componentwise partial order (a1<=a2, b1<=b2, c1<=c2)
//   compare_ot   admissible total order: lexicographic on (b, c, a)
//
// compare_ot refines leq_natural: A <=_N B implies A <=_OT B.
//
// All clauses compare doubles exactly. Inputs that are meant to tie on b
// (or on b and c) must be constructed bit-equal on those components; values
// that differ in the last place are ordered by that difference.

#include <span>
#include <string_view>
#include <vector>

#include "tfn/core.hpp"

namespace fuzzy {

enum class OrderResult { lt, eq, gt };

enum class SignClass { ot_positive, ot_negative, zero };

std::string_view to_string(OrderResult r) noexcept;
std::string_view to_string(SignClass s) noexcept;

bool leq_natural(const Tfn& A, const Tfn& B) noexcept;

OrderResult compare_ot(const Tfn& A, const Tfn& B) noexcept;

inline bool leq_ot(const Tfn& A, const Tfn& B) noexcept {
    return compare_ot(A, B) != OrderResult::gt;
}

inline bool less_ot(const Tfn& A, const Tfn& B) noexcept {
    return compare_ot(A, B) == OrderResult::lt;
}

/// Strict-weak-order functor for the standard algorithms.
struct OtLess {
    bool operator()(const Tfn& A, const Tfn& B) const noexcept { return less_ot(A, B); }
};

/// Sign relative to the crisp zero, decided from the peak and right endpoint:
/// positive iff b > 0 or (b == 0 and c > 0); negative iff b < 0 or
/// (a < 0 and b == c == 0); zero iff A is (0, 0, 0).
SignClass classify_sign(const Tfn& A) noexcept;

/// Ties return the first argument.
Tfn ot_max(const Tfn& A, const Tfn& B) noexcept;
Tfn ot_min(const Tfn& A, const Tfn& B) noexcept;

/// Extremes of a non-empty list; ties keep the earliest element.
/// Throw DimensionMismatch on an empty list.
Tfn ot_max(std::span<const Tfn> xs);
Tfn ot_min(std::span<const Tfn> xs);

/// Stable ascending sort under compare_ot.
std::vector<Tfn> ot_sort(std::span<const Tfn> xs);

}  // namespace fuzzy

#endif  // TFN_ORDER_HPP
