#include "hopfinv/poly.hpp"

#include <cctype>

namespace hopfinv {

FreePoly::FreePoly(const FieldSpec& field, std::uint32_t rank)
    : field_(field), rank_(rank) {
    if (rank == 0)
        throw Error(ErrorCode::InvalidArgument, "rank must be at least 1");
}

FreePoly FreePoly::zero(const FieldSpec& field, std::uint32_t rank) {
    return FreePoly(field, rank);
}

FreePoly FreePoly::one(const FieldSpec& field, std::uint32_t rank) {
    FreePoly p(field, rank);
    p.add_term(Word(), Scalar::one(field));
    return p;
}

FreePoly FreePoly::monomial(const FieldSpec& field, std::uint32_t rank,
                            const Word& word, const Scalar& coeff) {
    FreePoly p(field, rank);
    for (GenIndex i : word.indices())
        if (i < 1 || i > rank)
            throw Error(ErrorCode::InvalidIndex,
                        "generator index " + std::to_string(i) +
                            " outside [1, " + std::to_string(rank) + "]");
    p.add_term(word, coeff);
    return p;
}

FreePoly FreePoly::generator(const FieldSpec& field, std::uint32_t rank, GenIndex i) {
    return monomial(field, rank, Word::single(i), Scalar::one(field));
}

void FreePoly::add_term(const Word& word, const Scalar& coeff) {
    if (coeff.is_zero())
        return;
    auto it = terms_.find(word);
    if (it == terms_.end()) {
        terms_.emplace(word, coeff);
        return;
    }
    Scalar sum = it->second + coeff;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

Scalar FreePoly::coeff(const Word& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void FreePoly::check_compatible(const FreePoly& rhs) const {
    if (rank_ != rhs.rank_)
        throw Error(ErrorCode::RankMismatch,
                    "ranks differ: " + std::to_string(rank_) + " vs " +
                        std::to_string(rhs.rank_));
    if (field_ != rhs.field_)
        throw Error(ErrorCode::FieldMismatch,
                    "fields differ: " + field_.to_string() + " vs " +
                        rhs.field_.to_string());
}

FreePoly FreePoly::operator+(const FreePoly& rhs) const {
    check_compatible(rhs);
    FreePoly out = *this;
    for (const auto& [w, c] : rhs.terms_)
        out.add_term(w, c);
    return out;
}

FreePoly FreePoly::operator-(const FreePoly& rhs) const {
    check_compatible(rhs);
    FreePoly out = *this;
    for (const auto& [w, c] : rhs.terms_)
        out.add_term(w, -c);
    return out;
}

FreePoly FreePoly::operator*(const FreePoly& rhs) const {
    check_compatible(rhs);
    FreePoly out(field_, rank_);
    for (const auto& [wl, cl] : terms_)
        for (const auto& [wr, cr] : rhs.terms_)
            out.add_term(wl.concat(wr), cl * cr);
    return out;
}

FreePoly FreePoly::operator-() const {
    FreePoly out(field_, rank_);
    for (const auto& [w, c] : terms_)
        out.terms_.emplace(w, -c);
    return out;
}

FreePoly FreePoly::scaled(const Scalar& c) const {
    FreePoly out(field_, rank_);
    if (c.is_zero())
        return out;
    for (const auto& [w, coeff] : terms_)
        out.terms_.emplace(w, coeff * c);
    return out;
}

FreePoly FreePoly::pow(std::uint32_t e) const {
    FreePoly acc = one(field_, rank_);
    for (std::uint32_t k = 0; k < e; ++k)
        acc = acc * *this;
    return acc;
}

bool FreePoly::operator==(const FreePoly& rhs) const {
    return rank_ == rhs.rank_ && field_ == rhs.field_ && terms_ == rhs.terms_;
}

std::optional<std::size_t> FreePoly::degree() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first.length();
}

bool FreePoly::is_homogeneous_of(std::size_t n) const {
    for (const auto& [w, c] : terms_)
        if (w.length() != n)
            return false;
    return true;
}

FreePoly FreePoly::homogeneous_component(std::size_t n) const {
    FreePoly out(field_, rank_);
    for (const auto& [w, c] : terms_)
        if (w.length() == n)
            out.terms_.emplace(w, c);
    return out;
}

bool FreePoly::has_prefix_in_support(const Word& w) const {
    for (const auto& [word, c] : terms_)
        if (word.starts_with(w))
            return true;
    return false;
}

std::string FreePoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string mag;
        bool negative = false;
        if (field_.kind() == FieldKind::Rational) {
            mpq_class q = c.rational_value();
            if (q < 0) {
                negative = true;
                q = -q;
            }
            mag = q.get_str();
        } else {
            mag = c.to_string();
        }
        if (first) {
            if (negative)
                out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (w.empty())
            out += mag;
        else if (mag == "1")
            out += w.to_string();
        else
            out += mag + "*" + w.to_string();
    }
    return out;
}

namespace {

struct PolyParser {
    const std::string& text;
    std::size_t pos = 0;
    const FieldSpec& field;
    std::uint32_t rank;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorCode::ParseError,
                    what + " at position " + std::to_string(pos) + " in '" + text + "'");
    }

    std::string digits() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail("expected digits");
        return text.substr(start, pos - start);
    }

    // scalar := digits [ '/' digits ] ; gen := 'x' digits
    void parse_factor(Scalar& coeff, Word& word) {
        skip_ws();
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            const std::string d = digits();
            unsigned long i = std::stoul(d);
            if (i < 1 || i > rank)
                fail("generator x" + d + " outside rank " + std::to_string(rank));
            word = word.concat(Word::single(static_cast<GenIndex>(i)));
            return;
        }
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string lit = digits();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                lit += '/' + digits();
            }
            coeff = coeff * Scalar::parse(field, lit);
            return;
        }
        fail("expected scalar or generator factor");
    }

    FreePoly parse() {
        FreePoly out(field, rank);
        skip_ws();
        if (pos == text.size())
            fail("empty polynomial");
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
        }
        while (true) {
            Scalar coeff = Scalar::one(field);
            Word word;
            parse_factor(coeff, word);
            skip_ws();
            while (pos < text.size() && text[pos] == '*') {
                ++pos;
                parse_factor(coeff, word);
                skip_ws();
            }
            out.add_term(word, negative ? -coeff : coeff);
            if (at_end())
                break;
            if (text[pos] == '+' || text[pos] == '-') {
                negative = text[pos] == '-';
                ++pos;
            } else {
                fail("expected '+' or '-'");
            }
        }
        return out;
    }
};

} // namespace

FreePoly FreePoly::parse(const FieldSpec& field, std::uint32_t rank,
                         const std::string& text) {
    PolyParser parser{text, 0, field, rank};
    return parser.parse();
}

FreePoly insert(std::size_t i, std::size_t j, std::size_t k,
                const FreePoly& f, const FreePoly& g) {
    if (f.rank() != g.rank())
        throw Error(ErrorCode::RankMismatch, "insert: ranks differ");
    if (f.field() != g.field())
        throw Error(ErrorCode::FieldMismatch, "insert: fields differ");
    if (!f.is_homogeneous_of(i + j))
        throw Error(ErrorCode::DegreeMismatch,
                    "insert: first argument is not homogeneous of degree " +
                        std::to_string(i + j));
    if (!g.is_homogeneous_of(k))
        throw Error(ErrorCode::DegreeMismatch,
                    "insert: second argument is not homogeneous of degree " +
                        std::to_string(k));
    FreePoly out(f.field(), f.rank());
    for (const auto& [wf, cf] : f.terms()) {
        const Word u = wf.prefix(i);
        const Word v = wf.suffix_from(i);
        for (const auto& [wg, cg] : g.terms())
            out.add_term(u.concat(wg).concat(v), cf * cg);
    }
    return out;
}

} // namespace hopfinv
