#ifndef HOPFINV_CONSTRUCTIONS_HPP
#define HOPFINV_CONSTRUCTIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfinv/action.hpp"

namespace hopfinv {

/// c_n(y, z) = sum_{i=0}^{n-1} y^{n-1-i} z^i, evaluated exactly.
/// Satisfies (y - z) c_n(y, z) = y^n - z^n.
Scalar cn_eval(std::uint32_t n, const Scalar& y, const Scalar& z);

enum class ActionClass { Scalar, LinearNonScalar };

struct ScalarClassification {
    ActionClass verdict;
    // generator name -> base, present iff verdict == Scalar
    std::map<std::string, Scalar> bases;
};

/// Scalar iff every generator matrix is a scalar matrix; the bases map then
/// records each generator's scalar. A spec with no generators is scalar.
ScalarClassification classify_action(const ActionSpec& spec);

/// Smallest t <= cap such that x1^t is invariant. Requires a scalar action
/// (NotScalar otherwise); in that case one degree-t monomial being invariant
/// makes every degree-t monomial invariant.
std::optional<std::uint32_t> minimal_invariant_degree(const ActionSpec& spec,
                                                      std::uint32_t cap);

struct JordanBlock {
    std::uint32_t start;  // 1-based, inclusive
    std::uint32_t end;
    Scalar eigenvalue;
};

/// Lower-triangular Jordan layout under the column convention: within a
/// block (b, s, lambda) the matrix sends x_j to lambda x_j + x_{j+1} for
/// b <= j < s and x_s to lambda x_s; every entry outside those positions
/// vanishes. Jordan form is an input requirement, never computed here.
struct JordanShape {
    std::vector<JordanBlock> blocks;

    static JordanShape from_matrix(const Matrix& m); // NotJordanShape
    const JordanBlock& block_containing(std::uint32_t i) const;
};

/// The sum of all words x_{j1}..x_{jn} with j_1+...+j_n = i + (n-1)s and
/// every index in [i, s], where s is the end of the Jordan block containing
/// i. The index range is restricted to the block: together with the sum
/// constraint it keeps every word (and every word of the image's residual)
/// inside the block, and it guarantees x_i x_s^{n-1} in the support.
/// Requires delta's sigma and tau to act scalarly and delta's matrix to be
/// in Jordan form.
FreePoly jair_element(const ActionSpec& spec, const std::string& delta,
                      std::uint32_t i, std::uint32_t n);

struct FrobeniusCheck {
    bool applicable;           // prime characteristic and eta == mu
    std::string reason;        // set when not applicable
    std::uint32_t exponent;    // p
    FreePoly image;            // delta . f^p
    bool image_is_zero;
    // The commuting-case computation predicts zero; a nonzero image records
    // that the prediction does not survive noncommuting f, g.
    bool matches_commuting_case;
};

struct JairVerifyReport {
    FreePoly element;         // f
    FreePoly image;           // delta . f
    Scalar c;                 // c_n(eta, mu)
    Scalar eigenvalue;        // lambda of the block
    Scalar eta, mu;
    std::uint32_t block_start, block_end;
    bool prefix_present;      // supp(f) meets x_i F
    bool c_is_zero;
    bool image_zero_when_c_zero;   // meaningful iff c_is_zero
    bool residual_supported_ok;    // meaningful iff !c_is_zero
    FreePoly quotient;             // f'' = c^{-1} (image - lambda c f), zero poly when c = 0
    std::optional<FrobeniusCheck> frobenius;
};

/// Computes f = jair_element(...), its image under delta, and checks the
/// support and divisibility behavior of the residual image - lambda c f.
/// With frobenius set, also applies delta to f^p over a prime field with
/// eta == mu and records whether the image vanishes (reported, not asserted).
JairVerifyReport jair_verify(const ActionSpec& spec, const std::string& delta,
                             std::uint32_t i, std::uint32_t n,
                             bool frobenius = false);

/// Iterated splice pumping a length-k run of x onto an invariant f that
/// carries x as a prefix: step m replaces f by insert(m-1, t-m+1, d, f~, f)
/// with t the current degree and d = deg f. Raises PreconditionFailed when f
/// is not homogeneous invariant with the x prefix, and CancellationDetected
/// if coefficient cancellation ever empties the pumped prefix support.
FreePoly build_prefix_invariant(const ActionSpec& spec, const FreePoly& f,
                                GenIndex x, std::uint32_t k);

} // namespace hopfinv

#endif
