#include "hopfinv/spec_io.hpp"

#include <json.hpp>

#include "hopfinv/error.hpp"

namespace hopfinv {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorCode::ParseError, what);
}

Scalar parse_entry(const FieldSpec& field, const json& entry, const std::string& where) {
    try {
        if (entry.is_string())
            return Scalar::parse(field, entry.get<std::string>());
        if (entry.is_number_integer())
            return Scalar::parse(field, std::to_string(entry.get<long long>()));
    } catch (const Error& e) {
        parse_fail(where + ": " + e.what());
    }
    parse_fail(where + ": matrix entries must be scalar literals or integers");
}

Matrix parse_matrix(const FieldSpec& field, std::uint32_t rank, const json& value,
                    const std::string& name) {
    if (!value.is_array() || value.size() != rank)
        parse_fail("matrix of '" + name + "' must have " + std::to_string(rank) + " rows");
    Matrix m(field, rank, rank);
    for (std::uint32_t i = 0; i < rank; ++i) {
        const json& row = value[i];
        if (!row.is_array() || row.size() != rank)
            parse_fail("matrix of '" + name + "': row " + std::to_string(i + 1) +
                       " must have " + std::to_string(rank) + " entries");
        for (std::uint32_t j = 0; j < rank; ++j)
            m.at(i, j) = parse_entry(field, row[j],
                                     "matrix of '" + name + "' entry (" +
                                         std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + ")");
    }
    return m;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key) || !obj[key].is_string())
        parse_fail(where + ": missing string field \"" + key + "\"");
    return obj[key].get<std::string>();
}

} // namespace

ActionSpec parse_spec_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        parse_fail(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        parse_fail("spec document must be a JSON object");

    if (!doc.contains("field") || !doc["field"].is_object())
        parse_fail("missing \"field\" object");
    const json& field_obj = doc["field"];
    const std::string kind = require_string(field_obj, "kind", "field");
    FieldSpec field = FieldSpec::rational();
    if (kind == "prime") {
        if (!field_obj.contains("p") || !field_obj["p"].is_number_integer())
            parse_fail("prime field needs an integer \"p\"");
        const long long p = field_obj["p"].get<long long>();
        if (p < 2 || p > 0x7fffffffLL)
            parse_fail("field modulus out of range: " + std::to_string(p));
        try {
            field = FieldSpec::prime(static_cast<std::uint32_t>(p));
        } catch (const Error& e) {
            parse_fail(e.what());
        }
    } else if (kind != "rational") {
        parse_fail("field kind must be \"rational\" or \"prime\", got \"" + kind + "\"");
    }

    if (!doc.contains("rank") || !doc["rank"].is_number_integer())
        parse_fail("missing integer \"rank\"");
    const long long rank_ll = doc["rank"].get<long long>();
    if (rank_ll < 1 || rank_ll > 0xffff)
        parse_fail("rank out of range: " + std::to_string(rank_ll));
    const auto rank = static_cast<std::uint32_t>(rank_ll);

    std::vector<GroupLikeGen> group_likes;
    if (doc.contains("group_likes")) {
        if (!doc["group_likes"].is_array())
            parse_fail("\"group_likes\" must be an array");
        for (const json& entry : doc["group_likes"]) {
            if (!entry.is_object())
                parse_fail("group-like entries must be objects");
            const std::string name = require_string(entry, "name", "group-like");
            if (!entry.contains("matrix"))
                parse_fail("group-like '" + name + "' has no matrix");
            group_likes.push_back({name, parse_matrix(field, rank, entry["matrix"], name)});
        }
    }

    std::vector<SkewPrimitiveGen> skew_primitives;
    if (doc.contains("skew_primitives")) {
        if (!doc["skew_primitives"].is_array())
            parse_fail("\"skew_primitives\" must be an array");
        for (const json& entry : doc["skew_primitives"]) {
            if (!entry.is_object())
                parse_fail("skew-primitive entries must be objects");
            const std::string name = require_string(entry, "name", "skew-primitive");
            const std::string sigma = require_string(entry, "sigma", "skew-primitive '" + name + "'");
            const std::string tau = require_string(entry, "tau", "skew-primitive '" + name + "'");
            if (!entry.contains("matrix"))
                parse_fail("skew-primitive '" + name + "' has no matrix");
            skew_primitives.push_back(
                {name, sigma, tau, parse_matrix(field, rank, entry["matrix"], name)});
        }
    }

    std::optional<GroupTable> table;
    if (doc.contains("group_table")) {
        if (!doc["group_table"].is_object())
            parse_fail("\"group_table\" must be an object");
        GroupTable t;
        for (const auto& [key, value] : doc["group_table"].items()) {
            const std::size_t comma = key.find(',');
            if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
                parse_fail("group table key '" + key + "' is not of the form \"a,b\"");
            if (!value.is_string())
                parse_fail("group table value for '" + key + "' must be a name");
            t[{key.substr(0, comma), key.substr(comma + 1)}] = value.get<std::string>();
        }
        table = std::move(t);
    }

    try {
        return ActionSpec(field, rank, std::move(group_likes), std::move(skew_primitives),
                          std::move(table));
    } catch (const Error& e) {
        parse_fail(e.what());
    }
}

ActionSpec parse_spec_file(const std::string& text) {
    ActionSpec spec = parse_spec_json(text);
    const std::vector<Finding> findings = validate_spec(spec);
    if (has_error(findings)) {
        std::string msg = "spec validation failed:";
        for (const auto& f : findings)
            if (f.severity == Finding::Severity::Error)
                msg += "\n  " + f.message;
        throw Error(ErrorCode::ValidationError, msg);
    }
    return spec;
}

namespace {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string serialize_spec(const ActionSpec& spec) {
    json doc;
    if (spec.field().kind() == FieldKind::Rational)
        doc["field"] = {{"kind", "rational"}};
    else
        doc["field"] = {{"kind", "prime"}, {"p", spec.field().p()}};
    doc["rank"] = spec.rank();
    doc["group_likes"] = json::array();
    for (const auto& g : spec.group_likes())
        doc["group_likes"].push_back({{"name", g.name}, {"matrix", matrix_to_json(g.matrix)}});
    doc["skew_primitives"] = json::array();
    for (const auto& d : spec.skew_primitives())
        doc["skew_primitives"].push_back({{"name", d.name},
                                          {"sigma", d.sigma},
                                          {"tau", d.tau},
                                          {"matrix", matrix_to_json(d.matrix)}});
    if (spec.group_table()) {
        json t = json::object();
        for (const auto& [key, value] : *spec.group_table())
            t[key.first + "," + key.second] = value;
        doc["group_table"] = std::move(t);
    }
    return doc.dump(2) + "\n";
}

bool specs_equal(const ActionSpec& a, const ActionSpec& b) {
    if (a.field() != b.field() || a.rank() != b.rank())
        return false;
    if (a.group_likes().size() != b.group_likes().size() ||
        a.skew_primitives().size() != b.skew_primitives().size() ||
        a.group_table().has_value() != b.group_table().has_value())
        return false;
    for (std::size_t i = 0; i < a.group_likes().size(); ++i) {
        const auto& x = a.group_likes()[i];
        const auto& y = b.group_likes()[i];
        if (x.name != y.name || !(x.matrix == y.matrix))
            return false;
    }
    for (std::size_t i = 0; i < a.skew_primitives().size(); ++i) {
        const auto& x = a.skew_primitives()[i];
        const auto& y = b.skew_primitives()[i];
        if (x.name != y.name || x.sigma != y.sigma || x.tau != y.tau ||
            !(x.matrix == y.matrix))
            return false;
    }
    if (a.group_table() && !(*a.group_table() == *b.group_table()))
        return false;
    return true;
}

} // namespace hopfinv
