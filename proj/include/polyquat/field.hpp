#pragma once

// Exact arithmetic in the real quartic field Q(sqrt2, sqrt5), the smallest
// field containing every coordinate used by the quaternionic constructions
// in this library (1/sqrt2 factors and the golden ratio tau = (1+sqrt5)/2).
//
// Elements are stored on the fixed basis {1, sqrt2, sqrt5, sqrt10} with
// arbitrary-precision rational coefficients, so equality, sign and all field
// operations are exact.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyquat::field {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero field element") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(int v) : a_(v) {}  // NOLINT: implicit by design
    FieldElement(Rational v) : a_(std::move(v)) {}
    FieldElement(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static FieldElement sqrt2() { return {0, 1, 0, 0}; }
    static FieldElement sqrt5() { return {0, 0, 1, 0}; }
    static FieldElement sqrt10() { return {0, 0, 0, 1}; }
    /// tau = (1+sqrt5)/2, the golden ratio.
    static FieldElement tau() { return {Rational(1, 2), 0, Rational(1, 2), 0}; }
    /// sigma = (1-sqrt5)/2, the algebraic conjugate of tau.
    static FieldElement sigma() { return {Rational(1, 2), 0, Rational(-1, 2), 0}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }
    /// Rational part, valid only when is_rational().
    const Rational& rational_value() const { return a_; }

    FieldElement operator-() const { return {-a_, -b_, -c_, -d_}; }
    FieldElement operator+(const FieldElement& o) const {
        return {a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_};
    }
    FieldElement operator-(const FieldElement& o) const {
        return {a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_};
    }
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Galois conjugate sqrt2 -> -sqrt2.
    FieldElement conj_sqrt2() const { return {a_, -b_, c_, -d_}; }
    /// Galois conjugate sqrt5 -> -sqrt5.
    FieldElement conj_sqrt5() const { return {a_, b_, -c_, -d_}; }

    /// Multiplicative inverse via the product of Galois conjugates.
    /// Throws DivisionByZero on zero.
    FieldElement inverse() const;

    /// Exact sign (-1, 0, +1), decided by interval refinement.
    int sign() const;

    /// Exact comparison; defines a total order used for canonical sorting.
    int compare(const FieldElement& o) const { return (*this - o).sign(); }
    bool operator<(const FieldElement& o) const { return compare(o) < 0; }

    /// Double approximation computed from a rational enclosure at the given
    /// working precision (bits >= 53). Export-only; never feeds back into
    /// exact results.
    double to_float(unsigned bits = 128) const;

    /// Serialization "a + b*r2 + c*r5 + d*r10", zero terms omitted.
    std::string str() const;
    static FieldElement parse(std::string_view text);

    std::size_t hash() const;

private:
    Rational a_, b_, c_, d_;  // a + b*sqrt2 + c*sqrt5 + d*sqrt10
};

inline FieldElement operator*(const Rational& r, const FieldElement& x) {
    return FieldElement(r) * x;
}

/// Square root of a rational within the field, if representable: r must equal
/// k*s^2 with k in {1, 2, 5, 10}. Returns the nonnegative root.
std::optional<FieldElement> sqrt_rational(const Rational& r);

struct FieldElementHash {
    std::size_t operator()(const FieldElement& x) const { return x.hash(); }
};

}  // namespace polyquat::field
