#include "polyquat/field.hpp"

#include <boost/functional/hash.hpp>
#include <array>
#include <cctype>
#include <sstream>

namespace polyquat::field {

namespace {

// Rational enclosure [lo, hi] of sqrt(n) with 2^-k resolution.
void sqrt_enclosure(unsigned n, unsigned k, Rational& lo, Rational& hi) {
    BigInt scaled = BigInt(n) << (2 * k);
    BigInt s = boost::multiprecision::sqrt(scaled);
    BigInt den = BigInt(1) << k;
    lo = Rational(s, den);
    hi = Rational(s + 1, den);
}

// [lo, hi] enclosing coeff * sqrt(n), respecting the coefficient sign.
void scaled_term(const Rational& coeff, const Rational& rlo, const Rational& rhi,
                 Rational& lo, Rational& hi) {
    if (coeff >= 0) {
        lo = coeff * rlo;
        hi = coeff * rhi;
    } else {
        lo = coeff * rhi;
        hi = coeff * rlo;
    }
}

void enclose(const FieldElement& x, unsigned k, Rational& lo, Rational& hi) {
    lo = x.a();
    hi = x.a();
    static const std::array<unsigned, 3> radicands = {2, 5, 10};
    const std::array<const Rational*, 3> coeffs = {&x.b(), &x.c(), &x.d()};
    for (int i = 0; i < 3; ++i) {
        if (*coeffs[i] == 0) continue;
        Rational rlo, rhi, tlo, thi;
        sqrt_enclosure(radicands[i], k, rlo, rhi);
        scaled_term(*coeffs[i], rlo, rhi, tlo, thi);
        lo += tlo;
        hi += thi;
    }
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Rational parse_rational(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational");
    try {
        return Rational(std::string(s));
    } catch (const std::exception&) {
        throw ParseError("bad rational: " + std::string(s));
    }
}

}  // namespace

FieldElement FieldElement::operator*(const FieldElement& o) const {
    // Structure constants of the basis {1, sqrt2, sqrt5, sqrt10}:
    // sqrt2^2 = 2, sqrt5^2 = 5, sqrt2*sqrt5 = sqrt10,
    // sqrt2*sqrt10 = 2*sqrt5, sqrt5*sqrt10 = 5*sqrt2, sqrt10^2 = 10.
    Rational ra, rb, rc, rd;
    if (a_ != 0) {
        if (o.a_ != 0) ra += a_ * o.a_;
        if (o.b_ != 0) rb += a_ * o.b_;
        if (o.c_ != 0) rc += a_ * o.c_;
        if (o.d_ != 0) rd += a_ * o.d_;
    }
    if (b_ != 0) {
        if (o.a_ != 0) rb += b_ * o.a_;
        if (o.b_ != 0) ra += 2 * (b_ * o.b_);
        if (o.c_ != 0) rd += b_ * o.c_;
        if (o.d_ != 0) rc += 2 * (b_ * o.d_);
    }
    if (c_ != 0) {
        if (o.a_ != 0) rc += c_ * o.a_;
        if (o.b_ != 0) rd += c_ * o.b_;
        if (o.c_ != 0) ra += 5 * (c_ * o.c_);
        if (o.d_ != 0) rb += 5 * (c_ * o.d_);
    }
    if (d_ != 0) {
        if (o.a_ != 0) rd += d_ * o.a_;
        if (o.b_ != 0) rc += 2 * (d_ * o.b_);
        if (o.c_ != 0) rb += 5 * (d_ * o.c_);
        if (o.d_ != 0) ra += 10 * (d_ * o.d_);
    }
    return {std::move(ra), std::move(rb), std::move(rc), std::move(rd)};
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return FieldElement(Rational(1) / a_);
    // x * conj2(x) * conj5(x) * conj25(x) is the field norm, a rational.
    FieldElement num = conj_sqrt2() * conj_sqrt5() * conj_sqrt2().conj_sqrt5();
    FieldElement norm = *this * num;
    if (!norm.is_rational() || norm.a() == 0)
        throw std::logic_error("field norm must be a nonzero rational");
    Rational inv_norm = Rational(1) / norm.a();
    return {num.a() * inv_norm, num.b() * inv_norm, num.c() * inv_norm,
            num.d() * inv_norm};
}

int FieldElement::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return a_ > 0 ? 1 : -1;
    // A nonzero element is bounded away from zero, so the refinement stops.
    for (unsigned k = 32;; k *= 2) {
        Rational lo, hi;
        enclose(*this, k, lo, hi);
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
}

double FieldElement::to_float(unsigned bits) const {
    if (bits < 53) bits = 53;
    Rational lo, hi;
    enclose(*this, bits, lo, hi);
    Rational mid = (lo + hi) / 2;
    return mid.convert_to<double>();
}

std::string FieldElement::str() const {
    static const std::array<const char*, 3> tags = {"r2", "r5", "r10"};
    const std::array<const Rational*, 3> coeffs = {&b_, &c_, &d_};
    std::string out;
    auto append = [&out](const Rational& coeff, const char* tag) {
        bool negative = coeff < 0;
        Rational abs_coeff = negative ? Rational(-coeff) : coeff;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        if (tag == nullptr) {
            out += rational_str(abs_coeff);
        } else if (abs_coeff == 1) {
            out += tag;
        } else {
            out += rational_str(abs_coeff);
            out += '*';
            out += tag;
        }
    };
    if (a_ != 0) append(a_, nullptr);
    for (int i = 0; i < 3; ++i)
        if (*coeffs[i] != 0) append(*coeffs[i], tags[i]);
    if (out.empty()) out = "0";
    return out;
}

FieldElement FieldElement::parse(std::string_view text) {
    Rational coeff[4];  // 1, r2, r5, r10
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw ParseError("empty field element");
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected + or - in: " + std::string(text));
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '+' && text[i] != '-')
            ++i;
        std::string_view term = text.substr(start, i - start);
        if (term.empty()) throw ParseError("dangling sign in: " + std::string(text));
        int slot = 0;
        Rational value;
        auto radical_slot = [](std::string_view t) -> int {
            if (t == "r2") return 1;
            if (t == "r5") return 2;
            if (t == "r10") return 3;
            return -1;
        };
        if (auto star = term.find('*'); star != std::string_view::npos) {
            slot = radical_slot(term.substr(star + 1));
            if (slot < 0) throw ParseError("bad radical in: " + std::string(term));
            value = parse_rational(term.substr(0, star));
        } else if (int rs = radical_slot(term); rs > 0) {
            slot = rs;
            value = 1;
        } else {
            slot = 0;
            value = parse_rational(term);
        }
        coeff[slot] += sign * value;
        first = false;
        skip_ws();
    }
    return {coeff[0], coeff[1], coeff[2], coeff[3]};
}

std::size_t FieldElement::hash() const {
    std::size_t seed = 0;
    boost::hash_combine(seed, a_);
    boost::hash_combine(seed, b_);
    boost::hash_combine(seed, c_);
    boost::hash_combine(seed, d_);
    return seed;
}

std::optional<FieldElement> sqrt_rational(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return FieldElement(0);
    // sqrt(p/q) = sqrt(p*q)/q; representable iff p*q = k*m^2, k in {1,2,5,10}.
    BigInt pq = numerator(r) * denominator(r);
    struct Radical {
        unsigned k;
        FieldElement unit;
    };
    const Radical radicals[] = {{1, FieldElement(1)},
                                {2, FieldElement::sqrt2()},
                                {5, FieldElement::sqrt5()},
                                {10, FieldElement::sqrt10()}};
    for (const auto& rad : radicals) {
        if (pq % rad.k != 0) continue;
        BigInt reduced = pq / rad.k;
        BigInt m = boost::multiprecision::sqrt(reduced);
        if (m * m == reduced)
            return Rational(m, denominator(r)) * rad.unit;
    }
    return std::nullopt;
}

}  // namespace polyquat::field
