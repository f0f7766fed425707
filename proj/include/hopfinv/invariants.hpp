#ifndef HOPFINV_INVARIANTS_HPP
#define HOPFINV_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfinv/action.hpp"
#include "hopfinv/constructions.hpp"

namespace hopfinv {

/// Default refusal threshold on the coordinate count rank^degree.
inline constexpr std::uint64_t kDefaultSizeCap = 1000000;

/// rank^n, or SizeCapExceeded when it overflows or exceeds cap.
std::uint64_t ambient_dim_checked(std::uint32_t rank, std::uint32_t n,
                                  std::uint64_t cap);

/// Matrix of the generator's action on the degree-n component, columns
/// indexed by the lex word order.
Matrix operator_matrix_group_like(const ActionSpec& spec, const std::string& name,
                                  std::uint32_t n);
Matrix operator_matrix_skew(const ActionSpec& spec, const std::string& name,
                            std::uint32_t n);

/// Deterministic basis of the degree-n invariants: kernel of the stacked
/// system { (sigma - id) f = 0, delta f = 0 } over all listed generators,
/// in the canonical echelon normal form, returned as polynomials.
std::vector<FreePoly> invariant_basis(const ActionSpec& spec, std::uint32_t n,
                                      std::uint64_t size_cap = kDefaultSizeCap);

/// Canonical basis of G_n = sum over 0 < a < n of R^H_a * R^H_{n-a}, from
/// the supplied bases of lower degrees (lower_bases[d] is the basis in
/// degree d; index 0 is ignored). Two-factor products suffice: any longer
/// product regroups as f1 * (f2 ... fk).
std::vector<FreePoly> decomposable_component(
    const ActionSpec& spec, std::uint32_t n,
    const std::vector<std::vector<FreePoly>>& lower_bases,
    std::uint64_t size_cap = kDefaultSizeCap);

struct ProbeRow {
    std::uint32_t degree;
    std::uint64_t dim_ambient;      // rank^degree
    std::uint64_t dim_invariants;   // dim R^H_n
    std::uint64_t dim_decomposable; // dim G_n
    std::uint64_t new_generators;   // dim R^H_n - dim G_n
};

struct ProbeReport {
    std::uint32_t horizon;
    ScalarClassification classification;
    std::optional<std::uint32_t> minimal_degree; // least n <= horizon with invariants
    std::vector<ProbeRow> rows;
    std::string verdict; // finite-degree evidence wording, never a proof claim
};

/// Degree-by-degree generator count up to the horizon. The verdict reports
/// either "no new generators in degrees (t, N]" or the degrees where new
/// generators appear, with language that stays evidence-only: a finite
/// horizon cannot witness infinite generation.
ProbeReport probe_generation(const ActionSpec& spec, std::uint32_t horizon,
                             std::uint64_t size_cap = kDefaultSizeCap);

} // namespace hopfinv

#endif
