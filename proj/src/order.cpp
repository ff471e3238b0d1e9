#include "tfn/order.hpp"

#include <algorithm>

namespace fuzzy {

std::string_view to_string(OrderResult r) noexcept {
    switch (r) {
        case OrderResult::lt: return "LT";
        case OrderResult::eq: return "EQ";
        case OrderResult::gt: return "GT";
    }
    return "?";
}

std::string_view to_string(SignClass s) noexcept {
    switch (s) {
        case SignClass::ot_positive: return "positive";
        case SignClass::ot_negative: return "negative";
        case SignClass::zero: return "zero";
    }
    return "?";
}

bool leq_natural(const Tfn& A, const Tfn& B) noexcept {
    return A.a() <= B.a() && A.b() <= B.b() && A.c() <= B.c();
}

OrderResult compare_ot(const Tfn& A, const Tfn& B) noexcept {
    // key order: peak, then right endpoint, then left endpoint
    if (A.b() != B.b()) return A.b() < B.b() ? OrderResult::lt : OrderResult::gt;
    if (A.c() != B.c()) return A.c() < B.c() ? OrderResult::lt : OrderResult::gt;
    if (A.a() != B.a()) return A.a() < B.a() ? OrderResult::lt : OrderResult::gt;
    return OrderResult::eq;
}

SignClass classify_sign(const Tfn& A) noexcept {
    if (A.b() > 0.0 || (A.b() == 0.0 && A.c() > 0.0)) return SignClass::ot_positive;
    if (A.b() < 0.0 || (A.a() < 0.0 && A.b() == 0.0 && A.c() == 0.0)) return SignClass::ot_negative;
    return SignClass::zero;
}

Tfn ot_max(const Tfn& A, const Tfn& B) noexcept {
    return compare_ot(A, B) == OrderResult::lt ? B : A;
}

Tfn ot_min(const Tfn& A, const Tfn& B) noexcept {
    return compare_ot(A, B) == OrderResult::gt ? B : A;
}

Tfn ot_max(std::span<const Tfn> xs) {
    if (xs.empty()) throw DimensionMismatch("ot_max of an empty list");
    Tfn best = xs.front();
    for (const Tfn& x : xs.subspan(1)) best = ot_max(best, x);
    return best;
}

Tfn ot_min(std::span<const Tfn> xs) {
    if (xs.empty()) throw DimensionMismatch("ot_min of an empty list");
    Tfn best = xs.front();
    for (const Tfn& x : xs.subspan(1)) best = ot_min(best, x);
    return best;
}

std::vector<Tfn> ot_sort(std::span<const Tfn> xs) {
    std::vector<Tfn> out(xs.begin(), xs.end());
    std::stable_sort(out.begin(), out.end(), OtLess{});
    return out;
}

}  // namespace fuzzy
