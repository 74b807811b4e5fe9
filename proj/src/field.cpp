#include "cct/field.hpp"

#include <charconv>
#include <stdexcept>

namespace cct {

namespace {

constexpr std::int64_t kMaxCharacteristic = 2147483647;  // residues fit in int64 products

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_pos(std::int64_t x, std::int64_t p) {
    std::int64_t r = x % p;
    return r < 0 ? r + p : r;
}

// extended euclid inverse of a mod p, a != 0
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return mod_pos(t, p);
}

}  // namespace

FieldSpec FieldSpec::parse(std::string_view token) {
    if (token == "q" || token == "Q") return rationals();
    if (token.size() >= 2 && (token[0] == 'z' || token[0] == 'Z')) {
        std::int64_t p = 0;
        auto body = token.substr(1);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec == std::errc() && ptr == body.data() + body.size())
            return prime(p);
    }
    throw std::invalid_argument("bad field token '" + std::string(token) +
                                "' (expected q or z<p>)");
}

std::string FieldSpec::str() const {
    return kind == FieldKind::rationals ? "q" : "z" + std::to_string(characteristic);
}

Field::Field(FieldSpec spec) : spec_(spec) {
    if (spec_.kind == FieldKind::prime_field) {
        if (spec_.characteristic > kMaxCharacteristic)
            throw std::invalid_argument("characteristic too large: " +
                                        std::to_string(spec_.characteristic));
        if (!is_prime(spec_.characteristic))
            throw std::invalid_argument("characteristic is not prime: " +
                                        std::to_string(spec_.characteristic));
    }
}

std::int64_t Field::residue_of(const Scalar& a) const {
    return std::get<std::int64_t>(a.value_);
}

const Rational& Field::rational_of(const Scalar& a) const {
    return std::get<Rational>(a.value_);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
    if (spec_.kind == FieldKind::prime_field)
        return Scalar(mod_pos(n, spec_.characteristic));
    return Scalar(Rational(n));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (spec_.kind == FieldKind::prime_field)
        return Scalar((residue_of(a) + residue_of(b)) % spec_.characteristic);
    return Scalar(rational_of(a) + rational_of(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (spec_.kind == FieldKind::prime_field)
        return Scalar(mod_pos(residue_of(a) - residue_of(b), spec_.characteristic));
    return Scalar(rational_of(a) - rational_of(b));
}

Scalar Field::negate(const Scalar& a) const { return sub(zero(), a); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (spec_.kind == FieldKind::prime_field)
        return Scalar((residue_of(a) * residue_of(b)) % spec_.characteristic);
    return Scalar(rational_of(a) * rational_of(b));
}

Scalar Field::invert(const Scalar& a) const {
    if (is_zero(a)) throw std::domain_error("invert(zero)");
    if (spec_.kind == FieldKind::prime_field)
        return Scalar(mod_inverse(residue_of(a), spec_.characteristic));
    return Scalar(Rational(1) / rational_of(a));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, invert(b)); }

bool Field::is_zero(const Scalar& a) const {
    if (spec_.kind == FieldKind::prime_field) return residue_of(a) == 0;
    return rational_of(a) == 0;
}

std::string Field::str(const Scalar& a) const {
    if (spec_.kind == FieldKind::prime_field) return std::to_string(residue_of(a));
    const Rational& q = rational_of(a);
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace cct
