// Test-only reference path for the action and its invariants: operators on a
// degree component are assembled densely from Kronecker expansions of the
// generator matrices (group-likes as n-fold Kronecker powers, skew-primitives
// as sums tau^(j) (x) delta (x) sigma^(n-1-j)), and ranks come from a plain
// forward-elimination routine of its own. It shares only scalar arithmetic
// with the engine, never the word-rewriting or kernel code it is checking.

#ifndef HOPFINV_TESTS_ORACLE_HPP
#define HOPFINV_TESTS_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "hopfinv/action.hpp"
#include "hopfinv/matrix.hpp"
#include "hopfinv/poly.hpp"

namespace oracle {

using hopfinv::ActionSpec;
using hopfinv::FreePoly;
using hopfinv::Matrix;
using hopfinv::Scalar;

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_power(const Matrix& a, std::uint32_t n);

Matrix dense_group_like_op(const ActionSpec& spec, const std::string& name,
                           std::uint32_t degree);
Matrix dense_skew_op(const ActionSpec& spec, const std::string& name,
                     std::uint32_t degree);

// Apply a dense degree-preserving operator to a homogeneous polynomial.
FreePoly dense_apply(const ActionSpec& spec, const Matrix& op, const FreePoly& f,
                     std::uint32_t degree);

// Coordinates of a homogeneous polynomial in the lex word order.
std::vector<Scalar> coords(const ActionSpec& spec, const FreePoly& f,
                           std::uint32_t degree);

// Rows of the stacked dense system { (sigma - id) v = 0, delta v = 0 }.
std::vector<std::vector<Scalar>> stacked_invariant_system(const ActionSpec& spec,
                                                          std::uint32_t degree);

std::size_t row_echelon_rank(std::vector<std::vector<Scalar>> rows);

std::size_t invariant_dim(const ActionSpec& spec, std::uint32_t degree);

bool vector_in_kernel(const ActionSpec& spec, std::uint32_t degree,
                      const std::vector<Scalar>& v);

bool in_span(const std::vector<std::vector<Scalar>>& vectors,
             const std::vector<Scalar>& v);

} // namespace oracle

#endif
