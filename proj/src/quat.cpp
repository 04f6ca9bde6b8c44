#include "polyquat/quat.hpp"

#include <boost/functional/hash.hpp>
#include <array>

namespace polyquat::quat {

Quaternion Quaternion::operator*(const Quaternion& o) const {
    // e_i e_j = -delta_ij + eps_ijk e_k, extended bilinearly.
    return {
        q0 * o.q0 - q1 * o.q1 - q2 * o.q2 - q3 * o.q3,
        q0 * o.q1 + q1 * o.q0 + q2 * o.q3 - q3 * o.q2,
        q0 * o.q2 - q1 * o.q3 + q2 * o.q0 + q3 * o.q1,
        q0 * o.q3 + q1 * o.q2 - q2 * o.q1 + q3 * o.q0,
    };
}

int Quaternion::compare(const Quaternion& o) const {
    if (int c = q0.compare(o.q0)) return c;
    if (int c = q1.compare(o.q1)) return c;
    if (int c = q2.compare(o.q2)) return c;
    return q3.compare(o.q3);
}

std::size_t Quaternion::hash() const {
    std::size_t seed = q0.hash();
    boost::hash_combine(seed, q1.hash());
    boost::hash_combine(seed, q2.hash());
    boost::hash_combine(seed, q3.hash());
    return seed;
}

std::string Quaternion::str() const {
    return q0.str() + ", " + q1.str() + ", " + q2.str() + ", " + q3.str();
}

Quaternion Quaternion::parse(std::string_view text) {
    std::array<FieldElement, 4> parts;
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t comma = text.find(',', pos);
        bool last = i == 3;
        if (last != (comma == std::string_view::npos))
            throw field::ParseError("quaternion needs 4 components: " + std::string(text));
        parts[i] = FieldElement::parse(
            text.substr(pos, last ? std::string_view::npos : comma - pos));
        pos = comma + 1;
    }
    return {parts[0], parts[1], parts[2], parts[3]};
}

FieldElement scalar_product(const Quaternion& p, const Quaternion& q) {
    return p.q0 * q.q0 + p.q1 * q.q1 + p.q2 * q.q2 + p.q3 * q.q3;
}

Quaternion cross(const Quaternion& p, const Quaternion& q) {
    return Quaternion::vec(p.q2 * q.q3 - p.q3 * q.q2, p.q3 * q.q1 - p.q1 * q.q3,
                           p.q1 * q.q2 - p.q2 * q.q1);
}

OrthoMap::OrthoMap(Quaternion left, Quaternion right, bool star)
    : left_(std::move(left)), right_(std::move(right)), star_(star) {
    if (!left_.is_unit() || !right_.is_unit())
        throw std::invalid_argument("OrthoMap requires unit quaternions");
    const FieldElement* coeffs[8] = {&left_.q0,  &left_.q1,  &left_.q2,  &left_.q3,
                                     &right_.q0, &right_.q1, &right_.q2, &right_.q3};
    for (const auto* c : coeffs) {
        if (c->is_zero()) continue;
        if (c->sign() < 0) {
            left_ = -left_;
            right_ = -right_;
        }
        break;
    }
    hash_ = left_.hash();
    boost::hash_combine(hash_, right_.hash());
    boost::hash_combine(hash_, star_);
}

OrthoMap OrthoMap::operator*(const OrthoMap& o) const {
    // [p,q][r,s] = [pr, sq];          [p,q][r,s]* = [pr, sq]*
    // [p,q]*[r,s] = [p conj(s), conj(r) q]*;
    // [p,q]*[r,s]* = [p conj(s), conj(r) q].
    if (!star_)
        return {left_ * o.left_, o.right_ * right_, o.star_};
    return {left_ * o.right_.conj(), o.left_.conj() * right_, !o.star_};
}

OrthoMap OrthoMap::inverse() const {
    // [p,q]^-1 = [conj(p), conj(q)]; ([p,q]*)^-1 = [q, p]*.
    if (!star_) return {left_.conj(), right_.conj(), false};
    return {right_, left_, true};
}

int OrthoMap::compare(const OrthoMap& o) const {
    if (star_ != o.star_) return star_ ? 1 : -1;
    if (int c = left_.compare(o.left_)) return c;
    return right_.compare(o.right_);
}

std::string OrthoMap::str() const {
    return left_.str() + " ; " + right_.str() + " ; " + (star_ ? "star" : "plain");
}

OrthoMap OrthoMap::parse(std::string_view text) {
    std::size_t s1 = text.find(';');
    std::size_t s2 = s1 == std::string_view::npos ? s1 : text.find(';', s1 + 1);
    if (s2 == std::string_view::npos)
        throw field::ParseError("OrthoMap needs 'left ; right ; star'");
    Quaternion left = Quaternion::parse(text.substr(0, s1));
    Quaternion right = Quaternion::parse(text.substr(s1 + 1, s2 - s1 - 1));
    std::string_view tail = text.substr(s2 + 1);
    std::size_t b = tail.find_first_not_of(' ');
    std::size_t e = tail.find_last_not_of(' ');
    std::string_view flag = tail.substr(b, e - b + 1);
    if (flag != "star" && flag != "plain")
        throw field::ParseError("bad star flag: " + std::string(flag));
    return {left, right, flag == "star"};
}

OrthoMap reflection_map(const Quaternion& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("reflection through zero root");
    auto len = field::sqrt_rational([&] {
        FieldElement n = alpha.norm();
        if (!n.is_rational()) throw NonRepresentableNorm();
        return n.rational_value();
    }());
    if (!len) throw NonRepresentableNorm();
    Quaternion unit = alpha * len->inverse();
    return {unit, -unit, true};
}

}  // namespace polyquat::quat
