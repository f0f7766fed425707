#include "hopfinv/constructions.hpp"

#include "hopfinv/error.hpp"

namespace hopfinv {

Scalar cn_eval(std::uint32_t n, const Scalar& y, const Scalar& z) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "cn_eval requires n >= 1");
    if (y.field() != z.field())
        throw Error(ErrorCode::FieldMismatch, "cn_eval: fields differ");
    Scalar acc = Scalar::zero(y.field());
    for (std::uint32_t i = 0; i < n; ++i)
        acc = acc + y.pow(n - 1 - i) * z.pow(i);
    return acc;
}

ScalarClassification classify_action(const ActionSpec& spec) {
    ScalarClassification out{ActionClass::Scalar, {}};
    auto take = [&](const std::string& name, const Matrix& m) {
        if (!m.is_scalar()) {
            out.verdict = ActionClass::LinearNonScalar;
            return;
        }
        out.bases.emplace(name, m.at(0, 0));
    };
    for (const auto& g : spec.group_likes())
        take(g.name, g.matrix);
    for (const auto& d : spec.skew_primitives())
        take(d.name, d.matrix);
    if (out.verdict != ActionClass::Scalar)
        out.bases.clear();
    return out;
}

std::optional<std::uint32_t> minimal_invariant_degree(const ActionSpec& spec,
                                                      std::uint32_t cap) {
    if (classify_action(spec).verdict != ActionClass::Scalar)
        throw Error(ErrorCode::NotScalar,
                    "minimal_invariant_degree requires a scalar action");
    // In the scalar case x1^t stands in for all degree-t monomials: if it is
    // invariant, every monomial of that degree is.
    for (std::uint32_t t = 1; t <= cap; ++t) {
        const FreePoly probe =
            FreePoly::monomial(spec.field(), spec.rank(), Word::repeated(1, t),
                               Scalar::one(spec.field()));
        if (is_invariant(spec, probe))
            return t;
    }
    return std::nullopt;
}

JordanShape JordanShape::from_matrix(const Matrix& m) {
    const std::size_t r = m.rows();
    if (m.cols() != r || r == 0)
        throw Error(ErrorCode::NotJordanShape, "matrix is not square");
    const Scalar zero = Scalar::zero(m.field());
    const Scalar one = Scalar::one(m.field());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j)
                continue;
            if (i == j + 1) {
                if (m.at(i, j) != zero && m.at(i, j) != one)
                    throw Error(ErrorCode::NotJordanShape,
                                "subdiagonal entry is neither 0 nor 1");
                continue;
            }
            if (m.at(i, j) != zero)
                throw Error(ErrorCode::NotJordanShape,
                            "nonzero entry outside diagonal and subdiagonal");
        }
    JordanShape shape;
    std::size_t b = 0;
    while (b < r) {
        std::size_t e = b;
        while (e + 1 < r && m.at(e + 1, e) == one) {
            if (m.at(e + 1, e + 1) != m.at(b, b))
                throw Error(ErrorCode::NotJordanShape,
                            "eigenvalue changes inside a block");
            ++e;
        }
        shape.blocks.push_back({std::uint32_t(b + 1), std::uint32_t(e + 1), m.at(b, b)});
        b = e + 1;
    }
    return shape;
}

const JordanBlock& JordanShape::block_containing(std::uint32_t i) const {
    for (const auto& blk : blocks)
        if (blk.start <= i && i <= blk.end)
            return blk;
    throw Error(ErrorCode::InvalidIndex,
                "index " + std::to_string(i) + " outside every Jordan block");
}

namespace {

struct JairContext {
    const SkewPrimitiveGen* delta;
    Scalar eta, mu;
    JordanShape shape;
};

JairContext jair_context(const ActionSpec& spec, const std::string& delta_name) {
    const SkewPrimitiveGen* delta = spec.find_skew_primitive(delta_name);
    if (delta == nullptr)
        throw Error(ErrorCode::UnknownGenerator,
                    "unknown skew-primitive '" + delta_name + "'");
    const Matrix sigma = spec.group_like_matrix(delta->sigma);
    const Matrix tau = spec.group_like_matrix(delta->tau);
    if (!sigma.is_scalar() || !tau.is_scalar())
        throw Error(ErrorCode::NotScalarSigmaTau,
                    "sigma and tau of '" + delta_name + "' must act scalarly");
    return {delta, sigma.at(0, 0), tau.at(0, 0), JordanShape::from_matrix(delta->matrix)};
}

void enumerate_words(std::uint32_t lo, std::uint32_t hi, std::uint32_t n,
                     std::uint64_t target_sum, std::vector<GenIndex>& prefix,
                     FreePoly& out) {
    if (n == 0) {
        if (target_sum == 0)
            out.add_term(Word(prefix), Scalar::one(out.field()));
        return;
    }
    for (std::uint32_t j = lo; j <= hi; ++j) {
        if (target_sum < j)
            break;
        const std::uint64_t rest = target_sum - j;
        if (rest < std::uint64_t(n - 1) * lo || rest > std::uint64_t(n - 1) * hi)
            continue;
        prefix.push_back(j);
        enumerate_words(lo, hi, n - 1, rest, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

FreePoly jair_element(const ActionSpec& spec, const std::string& delta,
                      std::uint32_t i, std::uint32_t n) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "jair_element requires n >= 1");
    if (i < 1 || i > spec.rank())
        throw Error(ErrorCode::InvalidIndex,
                    "index " + std::to_string(i) + " outside [1, " +
                        std::to_string(spec.rank()) + "]");
    const JairContext ctx = jair_context(spec, delta);
    const JordanBlock& blk = ctx.shape.block_containing(i);
    // Words of length n, indices in [i, s], index sum i + (n-1)s. The block
    // range keeps the whole construction (and its image's residual) inside
    // the block; x_i x_s^{n-1} always qualifies.
    FreePoly out(spec.field(), spec.rank());
    std::vector<GenIndex> prefix;
    enumerate_words(i, blk.end, n, std::uint64_t(i) + std::uint64_t(n - 1) * blk.end,
                    prefix, out);
    return out;
}

JairVerifyReport jair_verify(const ActionSpec& spec, const std::string& delta,
                             std::uint32_t i, std::uint32_t n, bool frobenius) {
    const FreePoly f = jair_element(spec, delta, i, n);
    const JairContext ctx = jair_context(spec, delta);
    const JordanBlock& blk = ctx.shape.block_containing(i);
    const Scalar c = cn_eval(n, ctx.eta, ctx.mu);
    const FreePoly image = apply_skew_primitive(spec, delta, f);

    JairVerifyReport report{
        f,
        image,
        c,
        blk.eigenvalue,
        ctx.eta,
        ctx.mu,
        blk.start,
        blk.end,
        f.has_prefix_in_support(Word::single(i)),
        c.is_zero(),
        false,
        false,
        FreePoly::zero(spec.field(), spec.rank()),
        std::nullopt,
    };

    if (report.c_is_zero) {
        report.image_zero_when_c_zero = image.is_zero();
    } else {
        const FreePoly residual = image - f.scaled(blk.eigenvalue * c);
        const std::uint64_t want_sum =
            std::uint64_t(i) + 1 + std::uint64_t(n - 1) * blk.end;
        bool ok = true;
        for (const auto& [w, coeff] : residual.terms())
            if (w.index_sum() != want_sum || w.max_index() > blk.end)
                ok = false;
        report.residual_supported_ok = ok;
        report.quotient = residual.scaled(c.inverse());
    }

    if (frobenius) {
        FrobeniusCheck check{false, "", 0, FreePoly::zero(spec.field(), spec.rank()),
                             false, false};
        if (spec.field().kind() != FieldKind::Prime) {
            check.reason = "field has characteristic 0";
        } else if (ctx.eta != ctx.mu) {
            check.reason = "sigma and tau bases differ";
        } else {
            check.applicable = true;
            check.exponent = spec.field().p();
            check.image = apply_skew_primitive(spec, delta, f.pow(check.exponent));
            check.image_is_zero = check.image.is_zero();
            check.matches_commuting_case = check.image_is_zero;
        }
        report.frobenius = std::move(check);
    }
    return report;
}

FreePoly build_prefix_invariant(const ActionSpec& spec, const FreePoly& f,
                                GenIndex x, std::uint32_t k) {
    if (k < 1)
        throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    if (x < 1 || x > spec.rank())
        throw Error(ErrorCode::InvalidIndex,
                    "generator index " + std::to_string(x) + " outside [1, " +
                        std::to_string(spec.rank()) + "]");
    if (f.is_zero())
        throw Error(ErrorCode::PreconditionFailed, "input polynomial is zero");
    const std::size_t d = *f.degree();
    if (!f.is_homogeneous_of(d))
        throw Error(ErrorCode::PreconditionFailed, "input polynomial is not homogeneous");
    if (!is_invariant(spec, f))
        throw Error(ErrorCode::PreconditionFailed, "input polynomial is not invariant");
    if (!f.has_prefix_in_support(Word::single(x)))
        throw Error(ErrorCode::PreconditionFailed,
                    "support has no word starting with x" + std::to_string(x));

    FreePoly current = f;
    for (std::uint32_t m = 2; m <= k; ++m) {
        const std::size_t t = *current.degree();
        current = insert(m - 1, t - (m - 1), d, current, f);
        if (!current.has_prefix_in_support(Word::repeated(x, m)))
            throw Error(ErrorCode::CancellationDetected,
                        "x" + std::to_string(x) + "^" + std::to_string(m) +
                            " prefix support vanished by cancellation");
    }
    return current;
}

} // namespace hopfinv
