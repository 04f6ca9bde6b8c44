#pragma once

// Quaternions over Q(sqrt2, sqrt5) and the pair calculus of orthogonal
// transformations: [p, q] acts as t -> p t q and [p, q]* as t -> p conj(t) q.
// Pure-vector quaternions double as 3D points; the same maps restricted to
// them realize O(3).

#include "polyquat/field.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyquat::quat {

using field::FieldElement;
using field::Rational;

struct NonRepresentableNorm : std::domain_error {
    NonRepresentableNorm()
        : std::domain_error("root length has no square root in Q(sqrt2,sqrt5)") {}
};

struct Quaternion {
    FieldElement q0, q1, q2, q3;  // q0 + q1 e1 + q2 e2 + q3 e3

    Quaternion() = default;
    Quaternion(FieldElement s, FieldElement x, FieldElement y, FieldElement z)
        : q0(std::move(s)), q1(std::move(x)), q2(std::move(y)), q3(std::move(z)) {}

    static Quaternion zero() { return {}; }
    static Quaternion one() { return {1, 0, 0, 0}; }
    static Quaternion e1() { return {0, 1, 0, 0}; }
    static Quaternion e2() { return {0, 0, 1, 0}; }
    static Quaternion e3() { return {0, 0, 0, 1}; }
    static Quaternion vec(FieldElement x, FieldElement y, FieldElement z) {
        return {0, std::move(x), std::move(y), std::move(z)};
    }

    bool is_zero() const {
        return q0.is_zero() && q1.is_zero() && q2.is_zero() && q3.is_zero();
    }
    bool is_vector() const { return q0.is_zero(); }

    Quaternion operator-() const { return {-q0, -q1, -q2, -q3}; }
    Quaternion operator+(const Quaternion& o) const {
        return {q0 + o.q0, q1 + o.q1, q2 + o.q2, q3 + o.q3};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {q0 - o.q0, q1 - o.q1, q2 - o.q2, q3 - o.q3};
    }
    /// Hamilton product.
    Quaternion operator*(const Quaternion& o) const;
    /// Componentwise scaling.
    Quaternion operator*(const FieldElement& s) const {
        return {q0 * s, q1 * s, q2 * s, q3 * s};
    }

    Quaternion conj() const { return {q0, -q1, -q2, -q3}; }
    /// q * conj(q), a nonnegative field element.
    FieldElement norm() const { return q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3; }
    bool is_unit() const { return norm() == FieldElement(1); }

    bool operator==(const Quaternion& o) const {
        return q0 == o.q0 && q1 == o.q1 && q2 == o.q2 && q3 == o.q3;
    }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }
    /// Exact lexicographic order on (q0, q1, q2, q3); used for canonical
    /// element ordering everywhere.
    int compare(const Quaternion& o) const;
    bool operator<(const Quaternion& o) const { return compare(o) < 0; }

    std::size_t hash() const;
    /// Four field-element strings, comma separated.
    std::string str() const;
    static Quaternion parse(std::string_view text);
};

inline Quaternion operator*(const FieldElement& s, const Quaternion& q) { return q * s; }

/// Euclidean scalar product (p, q) = 1/2 (conj(p) q + conj(q) p).
FieldElement scalar_product(const Quaternion& p, const Quaternion& q);

/// Vector cross product of two pure-vector quaternions.
Quaternion cross(const Quaternion& p, const Quaternion& q);

/// An O(4) element [p, q] (star=false: t -> p t q) or [p, q]* (star=true:
/// t -> p conj(t) q), canonicalized under (p, q) ~ (-p, -q): the first
/// nonzero coefficient of (p0..p3, q0..q3) is positive. Both quaternions
/// must be unit.
class OrthoMap {
public:
    OrthoMap() : OrthoMap(Quaternion::one(), Quaternion::one(), false) {}
    OrthoMap(Quaternion left, Quaternion right, bool star);

    static OrthoMap identity() { return {}; }

    const Quaternion& left() const { return left_; }
    const Quaternion& right() const { return right_; }
    bool star() const { return star_; }

    Quaternion apply(const Quaternion& t) const {
        return star_ ? left_ * t.conj() * right_ : left_ * t * right_;
    }

    /// Composition: (m1 * m2)(t) = m1(m2(t)).
    OrthoMap operator*(const OrthoMap& o) const;
    OrthoMap inverse() const;

    /// Restriction to pure-vector quaternions: [p, q]* acts on vectors
    /// exactly as [p, -q] does, so star maps convert to plain pairs. The
    /// result is only valid as a map on vectors.
    OrthoMap vector_form() const {
        return star_ ? OrthoMap(left_, -right_, false) : *this;
    }

    bool operator==(const OrthoMap& o) const {
        return star_ == o.star_ && left_ == o.left_ && right_ == o.right_;
    }
    bool operator!=(const OrthoMap& o) const { return !(*this == o); }
    int compare(const OrthoMap& o) const;
    bool operator<(const OrthoMap& o) const { return compare(o) < 0; }

    std::size_t hash() const { return hash_; }
    /// "left ; right ; star"
    std::string str() const;
    static OrthoMap parse(std::string_view text);

private:
    Quaternion left_, right_;
    bool star_ = false;
    std::size_t hash_ = 0;
};

/// Reflection with respect to the hyperplane orthogonal to alpha:
/// t -> -(alpha/|alpha|) conj(t) (alpha/|alpha|), i.e. [a, -a]* with
/// a = alpha/|alpha|. Throws NonRepresentableNorm when |alpha| is not in the
/// field, and std::invalid_argument for alpha = 0.
OrthoMap reflection_map(const Quaternion& alpha);

struct QuaternionHash {
    std::size_t operator()(const Quaternion& q) const { return q.hash(); }
};
struct OrthoMapHash {
    std::size_t operator()(const OrthoMap& m) const { return m.hash(); }
};

}  // namespace polyquat::quat
