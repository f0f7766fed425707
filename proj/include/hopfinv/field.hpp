#ifndef HOPFINV_FIELD_HPP
#define HOPFINV_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hopfinv/error.hpp"

namespace hopfinv {

enum class FieldKind { Rational, Prime };

/// Coefficient domain: the rationals, or a prime field of odd or even
/// characteristic p < 2^31. Primality is checked at construction.
class FieldSpec {
  public:
    static FieldSpec rational();
    static FieldSpec prime(std::uint32_t p);

    FieldKind kind() const { return kind_; }
    std::uint32_t p() const { return p_; }

    bool operator==(const FieldSpec& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

    std::string to_string() const; // "rational" or "p:7"
    static FieldSpec parse(const std::string& text);

  private:
    FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint32_t p_;
};

/// An exact field element. Rational values are kept fully reduced with
/// positive denominator; prime-field values are canonical residues in [0, p).
class Scalar {
  public:
    Scalar(); // rational zero

    static Scalar zero(const FieldSpec& field);
    static Scalar one(const FieldSpec& field);
    static Scalar from_int(const FieldSpec& field, long value);
    /// Literal syntax: optional sign, decimal integer, optional "/denominator".
    /// Over GF(p) the value is reduced mod p (fractions via modular inverse).
    static Scalar parse(const FieldSpec& field, const std::string& literal);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar inverse() const; // DivisionByZero on 0
    Scalar pow(std::uint64_t e) const; // pow(0, 0) = 1

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

    // Rational-case accessors (Internal error when called on a prime field value).
    const mpq_class& rational_value() const;
    // Prime-case accessor.
    std::uint32_t residue() const;

  private:
    explicit Scalar(const FieldSpec& field) : field_(field), residue_(0) {}

    void check_same_field(const Scalar& rhs) const;

    FieldSpec field_;
    mpq_class rational_;     // used iff field is rational
    std::uint32_t residue_;  // used iff field is prime
};

} // namespace hopfinv

#endif
