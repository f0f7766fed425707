#include "hopfinv/action.hpp"

#include <set>

#include "hopfinv/error.hpp"

namespace hopfinv {

ActionSpec::ActionSpec(const FieldSpec& field, std::uint32_t rank,
                       std::vector<GroupLikeGen> group_likes,
                       std::vector<SkewPrimitiveGen> skew_primitives,
                       std::optional<GroupTable> group_table)
    : field_(field), rank_(rank), group_likes_(std::move(group_likes)),
      skew_primitives_(std::move(skew_primitives)),
      group_table_(std::move(group_table)) {
    if (rank_ < 1)
        throw Error(ErrorCode::InvalidArgument, "rank must be at least 1");
    auto check_matrix = [&](const std::string& name, const Matrix& m) {
        if (m.rows() != rank_ || m.cols() != rank_)
            throw Error(ErrorCode::InvalidArgument,
                        "matrix of '" + name + "' is not " + std::to_string(rank_) +
                            "x" + std::to_string(rank_));
        if (m.field() != field_)
            throw Error(ErrorCode::FieldMismatch,
                        "matrix of '" + name + "' is over the wrong field");
    };
    for (const auto& g : group_likes_)
        check_matrix(g.name, g.matrix);
    for (const auto& d : skew_primitives_)
        check_matrix(d.name, d.matrix);
}

const GroupLikeGen* ActionSpec::find_group_like(const std::string& name) const {
    for (const auto& g : group_likes_)
        if (g.name == name)
            return &g;
    return nullptr;
}

const SkewPrimitiveGen* ActionSpec::find_skew_primitive(const std::string& name) const {
    for (const auto& d : skew_primitives_)
        if (d.name == name)
            return &d;
    return nullptr;
}

Matrix ActionSpec::group_like_matrix(const std::string& name) const {
    if (name == "1")
        return Matrix::identity(field_, rank_);
    if (const GroupLikeGen* g = find_group_like(name))
        return g->matrix;
    throw Error(ErrorCode::UnknownGenerator, "unknown group-like '" + name + "'");
}

bool has_error(const std::vector<Finding>& findings) {
    for (const auto& f : findings)
        if (f.severity == Finding::Severity::Error)
            return true;
    return false;
}

std::vector<Finding> validate_spec(const ActionSpec& spec) {
    std::vector<Finding> out;
    auto error = [&](std::string msg) {
        out.push_back({Finding::Severity::Error, std::move(msg)});
    };
    auto warning = [&](std::string msg) {
        out.push_back({Finding::Severity::Warning, std::move(msg)});
    };

    std::set<std::string> names;
    auto check_name = [&](const std::string& n) {
        if (n == "1")
            error("generator name '1' is reserved for the identity");
        else if (!names.insert(n).second)
            error("duplicate generator name '" + n + "'");
    };
    for (const auto& g : spec.group_likes())
        check_name(g.name);
    for (const auto& d : spec.skew_primitives())
        check_name(d.name);

    for (const auto& g : spec.group_likes())
        if (!g.matrix.is_invertible())
            error("group-like matrix not invertible: '" + g.name + "'");

    auto resolves = [&](const std::string& n) {
        return n == "1" || spec.find_group_like(n) != nullptr;
    };
    for (const auto& d : spec.skew_primitives()) {
        if (!resolves(d.sigma))
            error("unknown group-like reference '" + d.sigma + "' in skew-primitive '" +
                  d.name + "'");
        if (!resolves(d.tau))
            error("unknown group-like reference '" + d.tau + "' in skew-primitive '" +
                  d.name + "'");
    }

    if (!spec.group_table().has_value()) {
        warning("faithfulness not verifiable from generator data");
        return out;
    }

    const GroupTable& table = *spec.group_table();
    std::vector<std::string> elems{"1"};
    for (const auto& g : spec.group_likes())
        elems.push_back(g.name);
    auto known = [&](const std::string& n) {
        for (const auto& e : elems)
            if (e == n)
                return true;
        return false;
    };
    bool refs_ok = true;
    for (const auto& [key, value] : table) {
        for (const std::string& n : {key.first, key.second, value})
            if (!known(n)) {
                error("group table references unknown generator '" + n + "'");
                refs_ok = false;
            }
    }
    if (!refs_ok)
        return out;

    // product with implicit identity rules; empty string marks "undefined"
    auto product = [&](const std::string& a, const std::string& b) -> std::string {
        auto it = table.find({a, b});
        if (it != table.end())
            return it->second;
        if (a == "1")
            return b;
        if (b == "1")
            return a;
        return "";
    };

    bool closed = true;
    for (const auto& a : elems)
        for (const auto& b : elems) {
            const std::string ab = product(a, b);
            if (ab.empty()) {
                error("group table not closed: missing product (" + a + ", " + b + ")");
                closed = false;
            } else if ((a == "1" && ab != b) || (b == "1" && ab != a)) {
                error("group table breaks the identity at (" + a + ", " + b + ")");
                closed = false;
            }
        }
    if (!closed)
        return out;

    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems)
                if (product(product(a, b), c) != product(a, product(b, c)))
                    error("group table not associative at (" + a + ", " + b + ", " + c + ")");

    for (const auto& a : elems) {
        bool has_inverse = false;
        for (const auto& b : elems)
            if (product(a, b) == "1" && product(b, a) == "1")
                has_inverse = true;
        if (!has_inverse)
            error("group table missing inverse for '" + a + "'");
    }

    if (!has_error(out)) {
        for (const auto& a : elems)
            for (const auto& b : elems) {
                const Matrix lhs = spec.group_like_matrix(a).multiply(spec.group_like_matrix(b));
                if (!(lhs == spec.group_like_matrix(product(a, b))))
                    error("representation inconsistent: matrix(" + a + ")*matrix(" + b +
                          ") != matrix(" + product(a, b) + ")");
            }
    }
    return out;
}

namespace {

// Column j of the matrix as the linear polynomial image of x_{j+1}.
std::vector<FreePoly> matrix_columns(const FieldSpec& field, std::uint32_t rank,
                                     const Matrix& m) {
    std::vector<FreePoly> cols;
    cols.reserve(rank);
    for (std::uint32_t j = 0; j < rank; ++j) {
        FreePoly col(field, rank);
        for (std::uint32_t i = 0; i < rank; ++i)
            col.add_term(Word::single(i + 1), m.at(i, j));
        cols.push_back(std::move(col));
    }
    return cols;
}

FreePoly word_image_multiplicative(const std::vector<FreePoly>& cols,
                                   const FieldSpec& field, std::uint32_t rank,
                                   const Word& w) {
    FreePoly acc = FreePoly::one(field, rank);
    for (GenIndex idx : w.indices())
        acc = acc * cols[idx - 1];
    return acc;
}

} // namespace

FreePoly apply_group_like(const ActionSpec& spec, const std::string& name,
                          const FreePoly& f) {
    const Matrix m = spec.group_like_matrix(name);
    const std::vector<FreePoly> cols = matrix_columns(spec.field(), spec.rank(), m);
    FreePoly out(spec.field(), spec.rank());
    for (const auto& [w, c] : f.terms()) {
        const FreePoly image = word_image_multiplicative(cols, spec.field(), spec.rank(), w);
        out = out + image.scaled(c);
    }
    return out;
}

FreePoly apply_skew_primitive(const ActionSpec& spec, const std::string& name,
                              const FreePoly& f) {
    const SkewPrimitiveGen* delta = spec.find_skew_primitive(name);
    if (delta == nullptr)
        throw Error(ErrorCode::UnknownGenerator, "unknown skew-primitive '" + name + "'");
    const std::vector<FreePoly> delta_cols =
        matrix_columns(spec.field(), spec.rank(), delta->matrix);
    const std::vector<FreePoly> sigma_cols =
        matrix_columns(spec.field(), spec.rank(), spec.group_like_matrix(delta->sigma));
    const std::vector<FreePoly> tau_cols =
        matrix_columns(spec.field(), spec.rank(), spec.group_like_matrix(delta->tau));

    FreePoly out(spec.field(), spec.rank());
    for (const auto& [w, c] : f.terms()) {
        const std::size_t n = w.length();
        if (n == 0)
            continue; // counit of a skew-primitive is 0
        // prefix images under tau, suffix images under sigma
        std::vector<FreePoly> prefix(n + 1, FreePoly::one(spec.field(), spec.rank()));
        for (std::size_t k = 0; k < n; ++k)
            prefix[k + 1] = prefix[k] * tau_cols[w[k] - 1];
        std::vector<FreePoly> suffix(n + 1, FreePoly::one(spec.field(), spec.rank()));
        for (std::size_t k = n; k > 0; --k)
            suffix[k - 1] = sigma_cols[w[k - 1] - 1] * suffix[k];
        FreePoly image(spec.field(), spec.rank());
        for (std::size_t k = 0; k < n; ++k)
            image = image + prefix[k] * delta_cols[w[k] - 1] * suffix[k + 1];
        out = out + image.scaled(c);
    }
    return out;
}

bool is_invariant(const ActionSpec& spec, const FreePoly& f) {
    for (const auto& g : spec.group_likes())
        if (apply_group_like(spec, g.name, f) != f)
            return false;
    for (const auto& d : spec.skew_primitives())
        if (!apply_skew_primitive(spec, d.name, f).is_zero())
            return false;
    return true;
}

} // namespace hopfinv
