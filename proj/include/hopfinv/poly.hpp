#ifndef HOPFINV_POLY_HPP
#define HOPFINV_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hopfinv/field.hpp"
#include "hopfinv/word.hpp"

namespace hopfinv {

/// Sparse element of the free associative algebra on x1..xr: a finite map
/// from words to nonzero coefficients. Zero coefficients are never stored,
/// so equality of term maps is equality of polynomials. Iteration over terms
/// follows the word order (shorter first, lex within a degree).
class FreePoly {
  public:
    FreePoly(const FieldSpec& field, std::uint32_t rank);

    static FreePoly zero(const FieldSpec& field, std::uint32_t rank);
    static FreePoly one(const FieldSpec& field, std::uint32_t rank);
    static FreePoly monomial(const FieldSpec& field, std::uint32_t rank,
                             const Word& word, const Scalar& coeff);
    static FreePoly generator(const FieldSpec& field, std::uint32_t rank, GenIndex i);

    const FieldSpec& field() const { return field_; }
    std::uint32_t rank() const { return rank_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Accumulate coeff on word, dropping the term if the sum vanishes.
    void add_term(const Word& word, const Scalar& coeff);
    Scalar coeff(const Word& word) const; // zero if absent

    FreePoly operator+(const FreePoly& rhs) const;
    FreePoly operator-(const FreePoly& rhs) const;
    FreePoly operator*(const FreePoly& rhs) const; // word concatenation, bilinear
    FreePoly operator-() const;
    FreePoly scaled(const Scalar& c) const;
    FreePoly pow(std::uint32_t e) const;

    bool operator==(const FreePoly& rhs) const;
    bool operator!=(const FreePoly& rhs) const { return !(*this == rhs); }

    /// Degree of the highest term; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    /// The zero polynomial counts as homogeneous of every degree.
    bool is_homogeneous_of(std::size_t n) const;
    FreePoly homogeneous_component(std::size_t n) const;

    bool has_prefix_in_support(const Word& w) const;

    std::string to_string() const; // signed sum of scalar-literal terms; "0" when zero
    static FreePoly parse(const FieldSpec& field, std::uint32_t rank,
                          const std::string& text);

  private:
    void check_compatible(const FreePoly& rhs) const;

    FieldSpec field_;
    std::uint32_t rank_;
    std::map<Word, Scalar> terms_;
};

/// Splice operator: bilinear extension of (u v, w) -> u w v, where f is
/// homogeneous of degree i+j (split after position i) and g homogeneous of
/// degree k. The split position comes from (i, j), never from inspecting f.
FreePoly insert(std::size_t i, std::size_t j, std::size_t k,
                const FreePoly& f, const FreePoly& g);

} // namespace hopfinv

#endif
