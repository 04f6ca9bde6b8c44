#include "polyquat/quat.hpp"

#include <doctest.h>

#include <vector>

using namespace polyquat::quat;
using polyquat::field::Rational;

namespace {

Quaternion half_unit(int s0, int s1, int s2, int s3) {
    const Rational h(1, 2);
    return {FieldElement(Rational(s0) * h), FieldElement(Rational(s1) * h),
            FieldElement(Rational(s2) * h), FieldElement(Rational(s3) * h)};
}

}  // namespace

TEST_CASE("hamilton product") {
    CHECK(Quaternion::e1() * Quaternion::e2() == Quaternion::e3());
    CHECK(Quaternion::e2() * Quaternion::e3() == Quaternion::e1());
    CHECK(Quaternion::e3() * Quaternion::e1() == Quaternion::e2());
    CHECK(Quaternion::e2() * Quaternion::e1() == -Quaternion::e3());
    CHECK(Quaternion::e1() * Quaternion::e1() == -Quaternion::one());
    Quaternion p = half_unit(1, 1, 1, 1);
    CHECK(p * p.conj() == Quaternion::one());
    CHECK(p.norm() == FieldElement(1));
    CHECK(p * p == half_unit(-1, 1, 1, 1));
}

TEST_CASE("scalar product and cross product") {
    Quaternion p = half_unit(1, 1, 1, 1);
    CHECK(scalar_product(p, p) == FieldElement(1));
    CHECK(scalar_product(Quaternion::e1(), Quaternion::e2()) == FieldElement(0));
    CHECK(cross(Quaternion::e1(), Quaternion::e2()) == Quaternion::e3());
    CHECK(cross(Quaternion::e2(), Quaternion::e1()) == -Quaternion::e3());
}

TEST_CASE("quaternion string round trip") {
    Quaternion p{FieldElement::tau() * FieldElement(Rational(1, 2)), FieldElement(0),
                 FieldElement(Rational(-1, 2)), FieldElement::sqrt2()};
    CHECK(Quaternion::parse(p.str()) == p);
    CHECK(Quaternion::parse("1, 0, 0, 0") == Quaternion::one());
}

TEST_CASE("ortho map canonicalization") {
    Quaternion p = half_unit(1, 1, -1, -1);
    Quaternion q = half_unit(1, -1, 1, -1);
    CHECK(OrthoMap(p, q, false) == OrthoMap(-p, -q, false));
    CHECK(OrthoMap(p, q, true) == OrthoMap(-p, -q, true));
    CHECK(OrthoMap(p, q, false) != OrthoMap(p, q, true));
    CHECK(OrthoMap(p, q, false) != OrthoMap(-p, q, false));
    CHECK(OrthoMap(p, q, false).hash() == OrthoMap(-p, -q, false).hash());
    CHECK_THROWS_AS(OrthoMap(p + p, q, false), std::invalid_argument);
}

TEST_CASE("composition matches pointwise application") {
    Quaternion p = half_unit(1, 1, -1, -1);
    Quaternion q = half_unit(1, -1, 1, -1);
    std::vector<OrthoMap> maps = {
        OrthoMap(p, q, false),
        OrthoMap(q, p, true),
        OrthoMap(Quaternion::e2(), half_unit(-1, 1, 1, 1), false),
        OrthoMap(half_unit(1, -1, -1, 1), Quaternion::e3(), true),
    };
    std::vector<Quaternion> points = {Quaternion::one(), Quaternion::e2(),
                                      half_unit(1, 1, 1, -1)};
    for (const auto& m1 : maps)
        for (const auto& m2 : maps) {
            OrthoMap composed = m1 * m2;
            for (const auto& t : points)
                CHECK(composed.apply(t) == m1.apply(m2.apply(t)));
        }
}

TEST_CASE("inverse") {
    Quaternion p = half_unit(1, 1, -1, -1);
    Quaternion q = half_unit(1, -1, 1, -1);
    for (bool star : {false, true}) {
        OrthoMap m(p, q, star);
        CHECK(m * m.inverse() == OrthoMap::identity());
        CHECK(m.inverse() * m == OrthoMap::identity());
    }
}

TEST_CASE("vector form agrees on vectors") {
    OrthoMap m(half_unit(1, 1, -1, -1), half_unit(1, -1, 1, -1), true);
    OrthoMap v = m.vector_form();
    CHECK_FALSE(v.star());
    for (const Quaternion& t :
         {Quaternion::e1(), Quaternion::e2(), Quaternion::e3(),
          Quaternion::vec(FieldElement(2), FieldElement(-3), FieldElement(1)) *
              FieldElement(Rational(1, 2))})
        CHECK(v.apply(t) == m.apply(t));
}

TEST_CASE("reflections") {
    Quaternion alpha = Quaternion::e1() - Quaternion::e2();
    OrthoMap r = reflection_map(alpha);
    CHECK(r.star());
    CHECK(r.apply(alpha) == -alpha);
    CHECK(r.apply(Quaternion::e3()) == Quaternion::e3());
    CHECK(r.apply(Quaternion::e1()) == Quaternion::e2());
    CHECK(r * r == OrthoMap::identity());
    // Scaling the mirror normal changes nothing.
    CHECK(reflection_map(alpha * FieldElement(7)) == r);
    // A reflection in 4D fixes the whole mirror hyperplane.
    OrthoMap r1 = reflection_map(Quaternion::one() - Quaternion::e1());
    CHECK(r1.apply(Quaternion::one()) == Quaternion::e1());
    CHECK(r1.apply(Quaternion::e2()) == Quaternion::e2());
    CHECK(r1.apply(Quaternion::e3()) == Quaternion::e3());
    CHECK_THROWS_AS(reflection_map(Quaternion::zero()), std::invalid_argument);
    // |1 + tau e1| is not an element of the field.
    CHECK_THROWS_AS(
        reflection_map(Quaternion{FieldElement(1), FieldElement::tau(), FieldElement(0),
                                  FieldElement(0)}),
        NonRepresentableNorm);
}

TEST_CASE("ortho map string round trip") {
    OrthoMap m(half_unit(1, 1, -1, -1), half_unit(1, -1, 1, -1), true);
    CHECK(OrthoMap::parse(m.str()) == m);
    OrthoMap id = OrthoMap::identity();
    CHECK(OrthoMap::parse(id.str()) == id);
}
