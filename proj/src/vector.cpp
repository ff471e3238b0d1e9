#include "tfn/vector.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tfn/order.hpp"

namespace fuzzy {

namespace {

void require_same_size(const TfnVector& U, const TfnVector& V, const char* op) {
    if (U.size() != V.size()) {
        throw DimensionMismatch(std::string(op) + ": lengths " + std::to_string(U.size()) +
                                " and " + std::to_string(V.size()) + " differ");
    }
}

}  // namespace

TfnVector::TfnVector(std::vector<Tfn> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw DimensionMismatch("TfnVector needs at least one component");
    }
}

TfnVector::TfnVector(std::initializer_list<Tfn> components)
    : TfnVector(std::vector<Tfn>(components)) {}

TfnVector TfnVector::zero(std::size_t n) { return filled(n, Tfn{}); }

TfnVector TfnVector::filled(std::size_t n, const Tfn& A) {
    return TfnVector(std::vector<Tfn>(n, A));
}

TfnVector vec_add(const TfnVector& U, const TfnVector& V) {
    require_same_size(U, V, "vec_add");
    std::vector<Tfn> out;
    out.reserve(U.size());
    for (std::size_t i = 0; i < U.size(); ++i) out.push_back(U[i] + V[i]);
    return TfnVector(std::move(out));
}

TfnVector vec_scalar_mul(Crisp r, const TfnVector& U) {
    std::vector<Tfn> out;
    out.reserve(U.size());
    for (const Tfn& A : U) out.push_back(r * A);
    return TfnVector(std::move(out));
}

bool vec_compare_otn(const TfnVector& U, const TfnVector& V) {
    require_same_size(U, V, "vec_compare_otn");
    for (std::size_t i = 0; i < U.size(); ++i) {
        if (!leq_ot(U[i], V[i])) return false;
    }
    return true;
}

TfnVector vec_self_diff(const TfnVector& U) {
    std::vector<Tfn> out;
    out.reserve(U.size());
    for (const Tfn& A : U) out.push_back(A - A);
    return TfnVector(std::move(out));
}

bool is_zero_isosceles(const TfnVector& U) noexcept {
    return std::all_of(U.begin(), U.end(), [](const Tfn& A) { return is_zero_isosceles(A); });
}

}  // namespace fuzzy
