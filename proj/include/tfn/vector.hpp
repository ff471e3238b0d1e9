#ifndef TFN_VECTOR_HPP
#define TFN_VECTOR_HPP

// n-tuples of triangular fuzzy numbers with componentwise addition and crisp
// scalar multiplication.
//
// This is a semi-vector space, not a vector space: U + (-1~)U is the zero
// vector only when every component is crisp. There is deliberately no
// general subtraction; U - V is spelled vec_add(U, vec_scalar_mul(Crisp(-1), V)),
// and vec_self_diff covers the U - U case.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tfn/core.hpp"

namespace fuzzy {

class TfnVector {
public:
    /// Throws DimensionMismatch for an empty sequence.
    explicit TfnVector(std::vector<Tfn> components);
    TfnVector(std::initializer_list<Tfn> components);

    /// The zero vector of length n (n >= 1).
    static TfnVector zero(std::size_t n);

    /// (A, A, ..., A), n times.
    static TfnVector filled(std::size_t n, const Tfn& A);

    std::size_t size() const noexcept { return components_.size(); }
    const Tfn& operator[](std::size_t i) const noexcept { return components_[i]; }
    std::span<const Tfn> components() const noexcept { return components_; }

    auto begin() const noexcept { return components_.begin(); }
    auto end() const noexcept { return components_.end(); }

    friend bool operator==(const TfnVector&, const TfnVector&) = default;

private:
    std::vector<Tfn> components_;
};

/// Componentwise sum. Throws DimensionMismatch on unequal lengths.
TfnVector vec_add(const TfnVector& U, const TfnVector& V);

TfnVector vec_scalar_mul(Crisp r, const TfnVector& U);

/// Product order: U_i <=_OT V_i for every i. Partial for n > 1.
/// Throws DimensionMismatch on unequal lengths.
bool vec_compare_otn(const TfnVector& U, const TfnVector& V);

/// (A_1 - A_1, ..., A_n - A_n). Every component is 0-isosceles.
TfnVector vec_self_diff(const TfnVector& U);

bool is_zero_isosceles(const TfnVector& U) noexcept;

inline TfnVector operator+(const TfnVector& U, const TfnVector& V) { return vec_add(U, V); }
inline TfnVector operator*(Crisp r, const TfnVector& U) { return vec_scalar_mul(r, U); }

}  // namespace fuzzy

#endif  // TFN_VECTOR_HPP
