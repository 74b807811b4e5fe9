#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace cct {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { rationals, prime_field };

/// Which exact coefficient field to compute over: the rationals ("q"), or a
/// prime field Z/p ("z<p>").
struct FieldSpec {
    FieldKind kind = FieldKind::prime_field;
    std::int64_t characteristic = 0;  // prime, meaningful iff kind == prime_field

    static FieldSpec rationals() { return {FieldKind::rationals, 0}; }
    static FieldSpec prime(std::int64_t p) { return {FieldKind::prime_field, p}; }

    /// Accepts "q" or "z<p>", e.g. "z101".
    static FieldSpec parse(std::string_view token);

    std::string str() const;

    bool operator==(const FieldSpec&) const = default;
};

/// An element of a Field, in canonical form: a residue in [0, p) for prime
/// fields, a reduced fraction for the rationals. Construct and combine
/// through a Field; equality is structural.
class Scalar {
  public:
    bool operator==(const Scalar&) const = default;

  private:
    friend class Field;
    explicit Scalar(std::int64_t residue) : value_(residue) {}
    explicit Scalar(Rational q) : value_(std::move(q)) {}

    std::variant<std::int64_t, Rational> value_;
};

/// Exact field arithmetic. All operations are total except invert(zero).
class Field {
  public:
    /// Throws std::invalid_argument if the spec names a non-prime (or out of
    /// range) characteristic. Primality is checked by trial division.
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar negate(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    /// Throws std::domain_error on zero input.
    Scalar invert(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    bool is_zero(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const { return a == b; }

    std::string str(const Scalar& a) const;

  private:
    std::int64_t residue_of(const Scalar& a) const;
    const Rational& rational_of(const Scalar& a) const;

    FieldSpec spec_;
};

/// Free-function constructor; identical to Field's constructor.
inline Field field_make(FieldSpec spec) { return Field(spec); }

}  // namespace cct
