#include "hopfinv/field.hpp"

#include <cctype>

namespace hopfinv {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return std::uint32_t((std::uint64_t(a) * b) % p);
}

std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint32_t acc = 1 % p;
    std::uint32_t base = a;
    while (e > 0) {
        if (e & 1)
            acc = mod_mul(acc, base, p);
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    return acc;
}

} // namespace

FieldSpec FieldSpec::rational() { return FieldSpec(FieldKind::Rational, 0); }

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p > 0x7fffffffu)
        throw Error(ErrorCode::InvalidArgument,
                    "prime modulus must be below 2^31, got " + std::to_string(p));
    if (!is_prime_u32(p))
        throw Error(ErrorCode::InvalidArgument,
                    std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::Prime, p);
}

std::string FieldSpec::to_string() const {
    return kind_ == FieldKind::Rational ? "rational" : "p:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "rational" || text == "q" || text == "Q")
        return rational();
    if (text.size() > 2 && text[0] == 'p' && text[1] == ':') {
        const std::string digits = text.substr(2);
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(ErrorCode::ParseError, "bad field spec '" + text + "'");
        unsigned long v;
        try {
            v = std::stoul(digits);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad field spec '" + text + "'");
        }
        if (v > 0x7fffffffu)
            throw Error(ErrorCode::InvalidArgument,
                        "prime modulus must be below 2^31, got " + digits);
        return prime(static_cast<std::uint32_t>(v));
    }
    throw Error(ErrorCode::ParseError,
                "bad field spec '" + text + "' (expected \"rational\" or \"p:<prime>\")");
}

Scalar::Scalar() : field_(FieldSpec::rational()), rational_(0), residue_(0) {}

Scalar Scalar::zero(const FieldSpec& field) { return Scalar(field); }

Scalar Scalar::one(const FieldSpec& field) {
    Scalar s(field);
    if (field.kind() == FieldKind::Rational)
        s.rational_ = 1;
    else
        s.residue_ = 1 % field.p();
    return s;
}

Scalar Scalar::from_int(const FieldSpec& field, long value) {
    Scalar s(field);
    if (field.kind() == FieldKind::Rational) {
        s.rational_ = value;
    } else {
        long r = value % long(field.p());
        if (r < 0)
            r += field.p();
        s.residue_ = std::uint32_t(r);
    }
    return s;
}

Scalar Scalar::parse(const FieldSpec& field, const std::string& literal) {
    // grammar: [+-] digits [ "/" digits ]
    std::size_t pos = 0;
    bool negative = false;
    if (pos < literal.size() && (literal[pos] == '+' || literal[pos] == '-')) {
        negative = literal[pos] == '-';
        ++pos;
    }
    const std::size_t num_begin = pos;
    while (pos < literal.size() && std::isdigit(static_cast<unsigned char>(literal[pos])))
        ++pos;
    if (pos == num_begin)
        throw Error(ErrorCode::ParseError, "bad scalar literal '" + literal + "'");
    const std::string num = literal.substr(num_begin, pos - num_begin);
    std::string den = "1";
    if (pos < literal.size() && literal[pos] == '/') {
        ++pos;
        const std::size_t den_begin = pos;
        while (pos < literal.size() && std::isdigit(static_cast<unsigned char>(literal[pos])))
            ++pos;
        if (pos == den_begin)
            throw Error(ErrorCode::ParseError, "bad scalar literal '" + literal + "'");
        den = literal.substr(den_begin, pos - den_begin);
    }
    if (pos != literal.size())
        throw Error(ErrorCode::ParseError, "bad scalar literal '" + literal + "'");

    mpz_class num_z(num, 10), den_z(den, 10);
    if (den_z == 0)
        throw Error(ErrorCode::DivisionByZero,
                    "zero denominator in scalar literal '" + literal + "'");
    if (negative)
        num_z = -num_z;

    Scalar s(field);
    if (field.kind() == FieldKind::Rational) {
        s.rational_ = mpq_class(num_z) / mpq_class(den_z);
        s.rational_.canonicalize();
        return s;
    }
    const std::uint32_t p = field.p();
    mpz_class m(p);
    mpz_class nr = ((num_z % m) + m) % m;
    mpz_class dr = ((den_z % m) + m) % m;
    std::uint32_t n32 = std::uint32_t(nr.get_ui());
    std::uint32_t d32 = std::uint32_t(dr.get_ui());
    if (d32 == 0)
        throw Error(ErrorCode::DivisionByZero,
                    "denominator of '" + literal + "' vanishes mod " + std::to_string(p));
    s.residue_ = d32 == 1 ? n32 : mod_mul(n32, mod_pow(d32, p - 2, p), p);
    return s;
}

bool Scalar::is_zero() const {
    return field_.kind() == FieldKind::Rational ? rational_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind() == FieldKind::Rational ? rational_ == 1
                                                : residue_ == 1 % field_.p();
}

void Scalar::check_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_)
        throw Error(ErrorCode::FieldMismatch,
                    "scalar fields differ: " + field_.to_string() + " vs " +
                        rhs.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    check_same_field(rhs);
    Scalar s(field_);
    if (field_.kind() == FieldKind::Rational)
        s.rational_ = rational_ + rhs.rational_;
    else
        s.residue_ = mod_add(residue_, rhs.residue_, field_.p());
    return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    check_same_field(rhs);
    Scalar s(field_);
    if (field_.kind() == FieldKind::Rational)
        s.rational_ = rational_ * rhs.rational_;
    else
        s.residue_ = mod_mul(residue_, rhs.residue_, field_.p());
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.kind() == FieldKind::Rational)
        s.rational_ = -rational_;
    else
        s.residue_ = residue_ == 0 ? 0 : field_.p() - residue_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    Scalar s(field_);
    if (field_.kind() == FieldKind::Rational) {
        s.rational_ = 1 / rational_;
    } else {
        s.residue_ = mod_pow(residue_, field_.p() - 2, field_.p());
    }
    return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
    // 0^0 = 1 by convention, so c_1(y, z) = y^0 z^0 = 1 uniformly.
    Scalar acc = one(field_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_)
        return false;
    return field_.kind() == FieldKind::Rational ? rational_ == rhs.rational_
                                                : residue_ == rhs.residue_;
}

std::string Scalar::to_string() const {
    return field_.kind() == FieldKind::Rational ? rational_.get_str()
                                                : std::to_string(residue_);
}

const mpq_class& Scalar::rational_value() const {
    if (field_.kind() != FieldKind::Rational)
        throw Error(ErrorCode::Internal, "rational_value() on prime-field scalar");
    return rational_;
}

std::uint32_t Scalar::residue() const {
    if (field_.kind() != FieldKind::Prime)
        throw Error(ErrorCode::Internal, "residue() on rational scalar");
    return residue_;
}

} // namespace hopfinv
