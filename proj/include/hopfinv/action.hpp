#ifndef HOPFINV_ACTION_HPP
#define HOPFINV_ACTION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfinv/matrix.hpp"
#include "hopfinv/poly.hpp"

namespace hopfinv {

// Matrix column convention throughout: entry (i, j) is the coefficient of
// x_{i+1} in the image of x_{j+1}, i.e. columns hold generator images.

struct GroupLikeGen {
    std::string name;
    Matrix matrix; // must be invertible: group-likes act as automorphisms
};

struct SkewPrimitiveGen {
    std::string name;
    std::string sigma; // group-like name, or "1" for the identity
    std::string tau;   // group-like name, or "1"
    Matrix matrix;
};

struct Finding {
    enum class Severity { Error, Warning };
    Severity severity;
    std::string message;
};

using GroupTable = std::map<std::pair<std::string, std::string>, std::string>;

/// The action data: a field, a rank, and generator matrices. Generators act
/// on the whole free algebra through their coproduct type: group-likes as
/// algebra endomorphisms, skew-primitives as twisted derivations. The
/// identity group-like "1" is always implicitly available.
class ActionSpec {
  public:
    ActionSpec(const FieldSpec& field, std::uint32_t rank,
               std::vector<GroupLikeGen> group_likes,
               std::vector<SkewPrimitiveGen> skew_primitives,
               std::optional<GroupTable> group_table = std::nullopt);

    const FieldSpec& field() const { return field_; }
    std::uint32_t rank() const { return rank_; }
    const std::vector<GroupLikeGen>& group_likes() const { return group_likes_; }
    const std::vector<SkewPrimitiveGen>& skew_primitives() const { return skew_primitives_; }
    const std::optional<GroupTable>& group_table() const { return group_table_; }

    const GroupLikeGen* find_group_like(const std::string& name) const;
    const SkewPrimitiveGen* find_skew_primitive(const std::string& name) const;

    /// Matrix of a group-like by name; "1" resolves to the identity matrix.
    /// Throws UnknownGenerator otherwise.
    Matrix group_like_matrix(const std::string& name) const;

  private:
    FieldSpec field_;
    std::uint32_t rank_;
    std::vector<GroupLikeGen> group_likes_;
    std::vector<SkewPrimitiveGen> skew_primitives_;
    std::optional<GroupTable> group_table_;
};

/// Structural checks: matrix shapes, group-like invertibility, name
/// resolution, and (when a group table is present) group axioms plus
/// homomorphy of the matrix assignment. Findings are data, not errors.
/// A warning that faithfulness cannot be verified from generator data alone
/// is always emitted when no group table is given.
std::vector<Finding> validate_spec(const ActionSpec& spec);

bool has_error(const std::vector<Finding>& findings);

/// Extend the group-like's matrix multiplicatively over each word.
FreePoly apply_group_like(const ActionSpec& spec, const std::string& name,
                          const FreePoly& f);

/// Twisted-derivation action on a word x_{j1}..x_{jn}:
///   sum over positions k of (tau . prefix) (delta . x_{jk}) (sigma . suffix);
/// the empty word maps to 0.
FreePoly apply_skew_primitive(const ActionSpec& spec, const std::string& name,
                              const FreePoly& f);

/// True iff every listed group-like fixes f and every listed skew-primitive
/// annihilates f. Generator conditions suffice: invariance propagates over
/// products of Hopf elements.
bool is_invariant(const ActionSpec& spec, const FreePoly& f);

} // namespace hopfinv

#endif
