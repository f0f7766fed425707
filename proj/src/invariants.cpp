#include "hopfinv/invariants.hpp"

#include <functional>

#include "hopfinv/error.hpp"

namespace hopfinv {

std::uint64_t ambient_dim_checked(std::uint32_t rank, std::uint32_t n,
                                  std::uint64_t cap) {
    std::uint64_t dim = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        if (dim > cap / rank)
            throw Error(ErrorCode::SizeCapExceeded,
                        "degree " + std::to_string(n) + " needs " +
                            std::to_string(rank) + "^" + std::to_string(n) +
                            " coordinates, above the cap of " + std::to_string(cap));
        dim *= rank;
    }
    return dim;
}

namespace {

std::uint64_t word_index(const Word& w, std::uint32_t rank) {
    std::uint64_t idx = 0;
    for (GenIndex i : w.indices())
        idx = idx * rank + (i - 1);
    return idx;
}

Matrix operator_matrix(const ActionSpec& spec, std::uint32_t n,
                       const std::function<FreePoly(const FreePoly&)>& op) {
    const std::vector<Word> words = words_of_degree(spec.rank(), n);
    Matrix m(spec.field(), words.size(), words.size());
    for (std::size_t col = 0; col < words.size(); ++col) {
        const FreePoly image = op(FreePoly::monomial(
            spec.field(), spec.rank(), words[col], Scalar::one(spec.field())));
        for (const auto& [w, c] : image.terms()) {
            if (w.length() != n)
                throw Error(ErrorCode::Internal, "operator does not preserve degree");
            m.at(word_index(w, spec.rank()), col) = c;
        }
    }
    return m;
}

std::vector<FreePoly> rows_to_polys(const ActionSpec& spec, const Matrix& basis,
                                    const std::vector<Word>& words) {
    std::vector<FreePoly> out;
    out.reserve(basis.rows());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        FreePoly p(spec.field(), spec.rank());
        for (std::size_t c = 0; c < basis.cols(); ++c)
            p.add_term(words[c], basis.at(r, c));
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

Matrix operator_matrix_group_like(const ActionSpec& spec, const std::string& name,
                                  std::uint32_t n) {
    return operator_matrix(spec, n, [&](const FreePoly& f) {
        return apply_group_like(spec, name, f);
    });
}

Matrix operator_matrix_skew(const ActionSpec& spec, const std::string& name,
                            std::uint32_t n) {
    return operator_matrix(spec, n, [&](const FreePoly& f) {
        return apply_skew_primitive(spec, name, f);
    });
}

std::vector<FreePoly> invariant_basis(const ActionSpec& spec, std::uint32_t n,
                                      std::uint64_t size_cap) {
    const std::uint64_t dim = ambient_dim_checked(spec.rank(), n, size_cap);
    const std::vector<Word> words = words_of_degree(spec.rank(), n);

    Matrix stacked(spec.field(), 0, dim);
    for (const auto& g : spec.group_likes()) {
        Matrix m = operator_matrix_group_like(spec, g.name, n);
        for (std::size_t i = 0; i < dim; ++i)
            m.at(i, i) = m.at(i, i) - Scalar::one(spec.field());
        stacked.append_rows(m);
    }
    for (const auto& d : spec.skew_primitives())
        stacked.append_rows(operator_matrix_skew(spec, d.name, n));

    return rows_to_polys(spec, stacked.kernel_basis(), words);
}

std::vector<FreePoly> decomposable_component(
    const ActionSpec& spec, std::uint32_t n,
    const std::vector<std::vector<FreePoly>>& lower_bases,
    std::uint64_t size_cap) {
    const std::uint64_t dim = ambient_dim_checked(spec.rank(), n, size_cap);
    if (lower_bases.size() < n)
        throw Error(ErrorCode::InvalidArgument,
                    "decomposable_component needs bases for all degrees below " +
                        std::to_string(n));
    const std::vector<Word> words = words_of_degree(spec.rank(), n);

    std::vector<FreePoly> products;
    for (std::uint32_t a = 1; a < n; ++a)
        for (const FreePoly& f : lower_bases[a])
            for (const FreePoly& g : lower_bases[n - a]) {
                FreePoly p = f * g;
                if (!p.is_zero())
                    products.push_back(std::move(p));
            }

    Matrix rows(spec.field(), products.size(), dim);
    for (std::size_t r = 0; r < products.size(); ++r)
        for (const auto& [w, c] : products[r].terms())
            rows.at(r, word_index(w, spec.rank())) = c;

    return rows_to_polys(spec, rows.row_space_basis(), words);
}

namespace {

std::string join_degrees(const std::vector<std::uint32_t>& degrees) {
    std::string out;
    for (std::size_t k = 0; k < degrees.size(); ++k) {
        if (k > 0)
            out += ", ";
        out += std::to_string(degrees[k]);
    }
    return out;
}

std::string make_verdict(const ScalarClassification& cls,
                         const std::optional<std::uint32_t>& minimal_degree,
                         const std::vector<ProbeRow>& rows, std::uint32_t horizon) {
    const bool scalar = cls.verdict == ActionClass::Scalar;
    std::string verdict = scalar ? "scalar action" : "non-scalar linear action";
    if (!minimal_degree) {
        verdict += "; no nonzero invariants up to degree " + std::to_string(horizon);
    } else {
        const std::uint32_t t = *minimal_degree;
        std::vector<std::uint32_t> new_degrees;
        bool new_after_t = false;
        for (const auto& row : rows)
            if (row.new_generators > 0) {
                new_degrees.push_back(row.degree);
                if (row.degree > t)
                    new_after_t = true;
            }
        verdict += "; minimal invariant degree " + std::to_string(t) + "; ";
        if (new_after_t)
            verdict += "new generators in degrees " + join_degrees(new_degrees);
        else
            verdict += "no new generators in degrees (" + std::to_string(t) + ", " +
                       std::to_string(horizon) + "]";
        if (scalar && !new_after_t)
            verdict += "; consistent with finitely generated invariants";
        else if (!scalar && new_after_t)
            verdict += "; consistent with infinitely generated invariants";
    }
    return verdict + " (finite-degree evidence, not a proof)";
}

} // namespace

ProbeReport probe_generation(const ActionSpec& spec, std::uint32_t horizon,
                             std::uint64_t size_cap) {
    if (horizon < 1)
        throw Error(ErrorCode::InvalidArgument, "probe horizon must be at least 1");
    ProbeReport report{horizon, classify_action(spec), std::nullopt, {}, ""};

    std::vector<std::vector<FreePoly>> bases(horizon + 1);
    for (std::uint32_t n = 1; n <= horizon; ++n) {
        const std::uint64_t dim = ambient_dim_checked(spec.rank(), n, size_cap);
        bases[n] = invariant_basis(spec, n, size_cap);
        const std::vector<FreePoly> decomposable =
            decomposable_component(spec, n, bases, size_cap);
        const std::uint64_t dim_inv = bases[n].size();
        const std::uint64_t dim_dec = decomposable.size();
        report.rows.push_back({n, dim, dim_inv, dim_dec, dim_inv - dim_dec});
        if (!report.minimal_degree && dim_inv > 0)
            report.minimal_degree = n;
    }
    report.verdict = make_verdict(report.classification, report.minimal_degree,
                                  report.rows, horizon);
    return report;
}

} // namespace hopfinv
