#include "tfn/core.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>

namespace fuzzy {

namespace {

bool finite(double x) noexcept { return std::isfinite(x); }

std::string triple_text(double a, double b, double c) {
    std::ostringstream os;
    os.precision(17);
    os << '(' << a << ", " << b << ", " << c << ')';
    return os.str();
}

// Arithmetic results are ordered by construction (IEEE rounding is monotone),
// so only finiteness needs re-checking.
Tfn checked(double a, double b, double c, const char* op) {
    if (!finite(a) || !finite(b) || !finite(c)) {
        throw OverflowError(std::string(op) + ": non-finite result " + triple_text(a, b, c));
    }
    return Tfn(a, b, c);
}

}  // namespace

Crisp::Crisp(double r) : r_(r) {
    if (!finite(r)) {
        throw ValidationError("crisp scalar must be finite");
    }
}

Crisp operator+(Crisp x, Crisp y) {
    const double r = x.r_ + y.r_;
    if (!finite(r)) throw OverflowError("crisp +: non-finite result");
    return Crisp(r);
}

Crisp operator*(Crisp x, Crisp y) {
    const double r = x.r_ * y.r_;
    if (!finite(r)) throw OverflowError("crisp *: non-finite result");
    return Crisp(r);
}

Interval Interval::make(double lo, double hi) {
    if (!(lo <= hi)) {
        throw ValidationError("interval requires lo <= hi");
    }
    return Interval{lo, hi};
}

Tfn::Tfn(double a, double b, double c) : a_(a), b_(b), c_(c) {
    if (!finite(a) || !finite(b) || !finite(c)) {
        throw ValidationError("TFN components must be finite, got " + triple_text(a, b, c));
    }
    if (a > b || b > c) {
        throw ValidationError("TFN requires a <= b <= c, got " + triple_text(a, b, c));
    }
}

Tfn make_tfn(double a, double b, double c) { return Tfn(a, b, c); }

double membership(const Tfn& A, double x) noexcept {
    if (x == A.b()) return 1.0;
    if (A.a() < x && x < A.b()) return (x - A.a()) / (A.b() - A.a());
    if (A.b() < x && x < A.c()) return (A.c() - x) / (A.c() - A.b());
    return 0.0;
}

Interval alpha_cut(const Tfn& A, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("alpha must lie in ]0, 1]");
    }
    // std::lerp is exact at both ends and monotone in alpha, so the cut
    // collapses to [b, b] at alpha = 1 and the cuts are nested.
    return Interval{std::lerp(A.a(), A.b(), alpha), std::lerp(A.c(), A.b(), alpha)};
}

Tfn operator+(const Tfn& A, const Tfn& B) {
    return checked(A.a() + B.a(), A.b() + B.b(), A.c() + B.c(), "add");
}

Tfn operator-(const Tfn& A, const Tfn& B) {
    return checked(A.a() - B.c(), A.b() - B.b(), A.c() - B.a(), "sub");
}

Tfn operator-(const Tfn& A) noexcept {
    return Tfn(-A.c(), -A.b(), -A.a());
}

Tfn operator*(Crisp r, const Tfn& A) {
    const double s = r.value();
    if (s < 0.0) {
        return checked(s * A.c(), s * A.b(), s * A.a(), "scalar_mul");
    }
    return checked(s * A.a(), s * A.b(), s * A.c(), "scalar_mul");
}

Tfn operator*(const Tfn& A, Crisp r) { return r * A; }

Tfn operator/(const Tfn& A, Crisp r) {
    const double s = r.value();
    if (s == 0.0) {
        throw DivisionByZero("division by the crisp zero");
    }
    if (s < 0.0) {
        return checked(A.c() / s, A.b() / s, A.a() / s, "crisp_div");
    }
    return checked(A.a() / s, A.b() / s, A.c() / s, "crisp_div");
}

Tfn repeat_add(const Tfn& A, std::size_t n) {
    if (n == 0) {
        throw DomainError("repeat_add needs n >= 1");
    }
    Tfn sum = A;
    for (std::size_t i = 1; i < n; ++i) {
        sum = sum + A;
    }
    return sum;
}

bool is_zero_isosceles(const Tfn& A) noexcept {
    return A.b() == 0.0 && A.a() == -A.c();
}

std::ostream& operator<<(std::ostream& os, const Tfn& A) {
    return os << '(' << A.a() << ',' << A.b() << ',' << A.c() << ')';
}

std::ostream& operator<<(std::ostream& os, const Interval& I) {
    return os << '[' << I.lo << ',' << I.hi << ']';
}

}  // namespace fuzzy
