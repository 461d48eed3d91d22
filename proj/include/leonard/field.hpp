#ifndef LEONARD_FIELD_HPP
#define LEONARD_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace leonard {

/// Base error type for mathematical failures (invalid operands, violated
/// invariants, singular systems).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Error type for malformed input text or files, as opposed to
/// mathematically invalid but well-formed input.
struct ParseError : Error {
    using Error::Error;
};

/// Identifies a ground field: the rationals, or a prime field GF(p).
///
/// Primality of p is checked once here, by trial division; elements carry
/// their FieldSpec so that operands from different fields can never be
/// combined silently.
class FieldSpec {
  public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime_field(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    std::uint64_t modulus() const { return p_; }

    bool operator==(const FieldSpec&) const = default;

    std::string name() const;

  private:
    explicit FieldSpec(std::uint64_t p) : p_(p) {}
    std::uint64_t p_; // 0 means rationals
};

/// An exact scalar: an arbitrary-precision rational, or a residue mod p.
///
/// Values are immutable after construction and always canonical
/// (rationals in lowest terms with positive denominator, residues in
/// [0, p)).  Arithmetic between elements of different fields throws.
class FieldElement {
  public:
    /// Rational zero.  Containers need a default constructor; code that
    /// cares about the field should use FieldSpec-aware factories.
    FieldElement() : spec_(FieldSpec::rationals()), rat_(0), res_(0) {}

    static FieldElement from_int(long v, const FieldSpec& f);
    static FieldElement from_rational(mpq_class v); // canonicalizes
    static FieldElement from_mpz(const mpz_class& v, const FieldSpec& f);

    const FieldSpec& field() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement inverse() const;

    /// Equality of exact values; elements of different fields are unequal.
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Underlying rational value (throws for prime-field elements).
    const mpq_class& rational_value() const;
    /// Underlying residue (throws for rational elements).
    std::uint64_t residue() const;

  private:
    FieldElement(const FieldSpec& f, mpq_class r, std::uint64_t m)
        : spec_(f), rat_(std::move(r)), res_(m) {}

    void require_same_field(const FieldElement& o) const;

    FieldSpec spec_;
    mpq_class rat_;     // valid iff rational
    std::uint64_t res_; // valid iff prime field
};

/// Parses "a" or "a/b" over the rationals, or "a" over GF(p); the result
/// is canonical ("-3/6" gives -1/2, "10" over GF(7) gives 3).
FieldElement parse_element(std::string_view text, const FieldSpec& f);

/// Canonical text form; round-trips through parse_element.
std::string format_element(const FieldElement& a);

/// Zero and one of a given field.
FieldElement field_zero(const FieldSpec& f);
FieldElement field_one(const FieldSpec& f);

} // namespace leonard

#endif
