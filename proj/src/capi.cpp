#include "hopfinv/hopfinv.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "hopfinv/constructions.hpp"
#include "hopfinv/error.hpp"
#include "hopfinv/invariants.hpp"
#include "hopfinv/spec_io.hpp"

using nlohmann::json;

struct hopfinv_spec {
    hopfinv::ActionSpec spec;
    std::vector<hopfinv::Finding> findings;
};

namespace {

thread_local std::string g_last_error;

hopfinv_status status_of(hopfinv::ErrorCode code) {
    using hopfinv::ErrorCode;
    switch (code) {
    case ErrorCode::ParseError: return HOPFINV_ERR_PARSE;
    case ErrorCode::ValidationError: return HOPFINV_ERR_VALIDATION;
    case ErrorCode::SizeCapExceeded: return HOPFINV_ERR_SIZE_CAP;
    case ErrorCode::DivisionByZero: return HOPFINV_ERR_DIVISION_BY_ZERO;
    case ErrorCode::RankMismatch: return HOPFINV_ERR_RANK_MISMATCH;
    case ErrorCode::FieldMismatch: return HOPFINV_ERR_FIELD_MISMATCH;
    case ErrorCode::DegreeMismatch: return HOPFINV_ERR_DEGREE_MISMATCH;
    case ErrorCode::UnknownGenerator: return HOPFINV_ERR_UNKNOWN_GENERATOR;
    case ErrorCode::NotScalar: return HOPFINV_ERR_NOT_SCALAR;
    case ErrorCode::NotJordanShape: return HOPFINV_ERR_NOT_JORDAN_SHAPE;
    case ErrorCode::NotScalarSigmaTau: return HOPFINV_ERR_NOT_SCALAR_SIGMA_TAU;
    case ErrorCode::InvalidIndex: return HOPFINV_ERR_INVALID_INDEX;
    case ErrorCode::InvalidArgument: return HOPFINV_ERR_INVALID_ARGUMENT;
    case ErrorCode::PreconditionFailed: return HOPFINV_ERR_PRECONDITION_FAILED;
    case ErrorCode::CancellationDetected: return HOPFINV_ERR_CANCELLATION_DETECTED;
    case ErrorCode::Internal: return HOPFINV_ERR_INTERNAL;
    }
    return HOPFINV_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
hopfinv_status guarded(Fn&& fn) {
    try {
        fn();
        return HOPFINV_OK;
    } catch (const hopfinv::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HOPFINV_ERR_INTERNAL;
    }
}

hopfinv_status arg_error(const std::string& msg) {
    g_last_error = msg;
    return HOPFINV_ERR_INVALID_ARGUMENT;
}

// Operations other than validate refuse to run on a spec with error findings.
void require_valid(const hopfinv_spec* spec) {
    if (hopfinv::has_error(spec->findings)) {
        std::string msg = "spec has validation errors:";
        for (const auto& f : spec->findings)
            if (f.severity == hopfinv::Finding::Severity::Error)
                msg += " " + f.message + ";";
        throw hopfinv::Error(hopfinv::ErrorCode::ValidationError, msg);
    }
}

json classification_json(const hopfinv::ScalarClassification& cls) {
    json out;
    if (cls.verdict == hopfinv::ActionClass::Scalar) {
        out["verdict"] = "scalar";
        json bases = json::object();
        for (const auto& [name, base] : cls.bases)
            bases[name] = base.to_string();
        out["bases"] = std::move(bases);
    } else {
        out["verdict"] = "linear-non-scalar";
    }
    return out;
}

} // namespace

extern "C" {

const char* hopfinv_status_name(hopfinv_status status) {
    switch (status) {
    case HOPFINV_OK: return "ok";
    case HOPFINV_ERR_PARSE: return "parse-error";
    case HOPFINV_ERR_VALIDATION: return "validation-error";
    case HOPFINV_ERR_SIZE_CAP: return "size-cap-exceeded";
    case HOPFINV_ERR_DIVISION_BY_ZERO: return "division-by-zero";
    case HOPFINV_ERR_RANK_MISMATCH: return "rank-mismatch";
    case HOPFINV_ERR_FIELD_MISMATCH: return "field-mismatch";
    case HOPFINV_ERR_DEGREE_MISMATCH: return "degree-mismatch";
    case HOPFINV_ERR_UNKNOWN_GENERATOR: return "unknown-generator";
    case HOPFINV_ERR_NOT_SCALAR: return "not-scalar";
    case HOPFINV_ERR_NOT_JORDAN_SHAPE: return "not-jordan-shape";
    case HOPFINV_ERR_NOT_SCALAR_SIGMA_TAU: return "not-scalar-sigma-tau";
    case HOPFINV_ERR_INVALID_INDEX: return "invalid-index";
    case HOPFINV_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case HOPFINV_ERR_PRECONDITION_FAILED: return "precondition-failed";
    case HOPFINV_ERR_CANCELLATION_DETECTED: return "cancellation-detected";
    case HOPFINV_ERR_INTERNAL: return "internal-error";
    }
    return "unknown-status";
}

const char* hopfinv_last_error(void) { return g_last_error.c_str(); }

void hopfinv_free_string(char* s) { std::free(s); }

hopfinv_status hopfinv_spec_parse(const char* json_text, hopfinv_spec** out) {
    if (json_text == nullptr || out == nullptr)
        return arg_error("hopfinv_spec_parse: null argument");
    *out = nullptr;
    return guarded([&] {
        hopfinv::ActionSpec spec = hopfinv::parse_spec_json(json_text);
        std::vector<hopfinv::Finding> findings = hopfinv::validate_spec(spec);
        *out = new hopfinv_spec{std::move(spec), std::move(findings)};
    });
}

hopfinv_status hopfinv_spec_serialize(const hopfinv_spec* spec, char** json_out) {
    if (spec == nullptr || json_out == nullptr)
        return arg_error("hopfinv_spec_serialize: null argument");
    return guarded([&] { *json_out = dup_string(hopfinv::serialize_spec(spec->spec)); });
}

void hopfinv_spec_free(hopfinv_spec* spec) { delete spec; }

hopfinv_status hopfinv_validate(const hopfinv_spec* spec, char** json_out) {
    if (spec == nullptr || json_out == nullptr)
        return arg_error("hopfinv_validate: null argument");
    return guarded([&] {
        json findings = json::array();
        std::size_t errors = 0, warnings = 0;
        for (const auto& f : spec->findings) {
            const bool is_error = f.severity == hopfinv::Finding::Severity::Error;
            (is_error ? errors : warnings) += 1;
            findings.push_back({{"severity", is_error ? "error" : "warning"},
                                {"message", f.message}});
        }
        json out{{"findings", std::move(findings)},
                 {"error_count", errors},
                 {"warning_count", warnings}};
        *json_out = dup_string(out.dump());
    });
}

hopfinv_status hopfinv_classify(const hopfinv_spec* spec, char** json_out) {
    if (spec == nullptr || json_out == nullptr)
        return arg_error("hopfinv_classify: null argument");
    return guarded([&] {
        require_valid(spec);
        *json_out = dup_string(classification_json(hopfinv::classify_action(spec->spec)).dump());
    });
}

hopfinv_status hopfinv_minimal_degree(const hopfinv_spec* spec, uint32_t cap,
                                      char** json_out) {
    if (spec == nullptr || json_out == nullptr)
        return arg_error("hopfinv_minimal_degree: null argument");
    return guarded([&] {
        require_valid(spec);
        const auto degree = hopfinv::minimal_invariant_degree(spec->spec, cap);
        json out{{"cap", cap}, {"found", degree.has_value()}};
        if (degree)
            out["degree"] = *degree;
        *json_out = dup_string(out.dump());
    });
}

hopfinv_status hopfinv_invariant_basis(const hopfinv_spec* spec, uint32_t degree,
                                       uint64_t size_cap, char** json_out) {
    if (spec == nullptr || json_out == nullptr)
        return arg_error("hopfinv_invariant_basis: null argument");
    return guarded([&] {
        require_valid(spec);
        const auto basis = hopfinv::invariant_basis(spec->spec, degree, size_cap);
        json elements = json::array();
        for (const auto& f : basis)
            elements.push_back(f.to_string());
        json out{{"degree", degree},
                 {"dim_ambient",
                  hopfinv::ambient_dim_checked(spec->spec.rank(), degree, size_cap)},
                 {"dim", basis.size()},
                 {"basis", std::move(elements)}};
        *json_out = dup_string(out.dump());
    });
}

hopfinv_status hopfinv_probe(const hopfinv_spec* spec, uint32_t max_degree,
                             uint64_t size_cap, char** json_out) {
    if (spec == nullptr || json_out == nullptr)
        return arg_error("hopfinv_probe: null argument");
    return guarded([&] {
        require_valid(spec);
        const hopfinv::ProbeReport report =
            hopfinv::probe_generation(spec->spec, max_degree, size_cap);
        json rows = json::array();
        for (const auto& row : report.rows)
            rows.push_back({{"degree", row.degree},
                            {"dim_ambient", row.dim_ambient},
                            {"dim_invariants", row.dim_invariants},
                            {"dim_decomposable", row.dim_decomposable},
                            {"new_generators", row.new_generators}});
        json out{{"horizon", report.horizon},
                 {"rank", spec->spec.rank()},
                 {"field", spec->spec.field().to_string()},
                 {"classification", classification_json(report.classification)},
                 {"rows", std::move(rows)},
                 {"verdict", report.verdict}};
        out["minimal_degree"] =
            report.minimal_degree ? json(*report.minimal_degree) : json(nullptr);
        *json_out = dup_string(out.dump());
    });
}

hopfinv_status hopfinv_cn(const char* field, uint32_t n, const char* eta,
                          const char* mu, char** json_out) {
    if (field == nullptr || eta == nullptr || mu == nullptr || json_out == nullptr)
        return arg_error("hopfinv_cn: null argument");
    return guarded([&] {
        const hopfinv::FieldSpec fs = hopfinv::FieldSpec::parse(field);
        const hopfinv::Scalar y = hopfinv::Scalar::parse(fs, eta);
        const hopfinv::Scalar z = hopfinv::Scalar::parse(fs, mu);
        const hopfinv::Scalar value = hopfinv::cn_eval(n, y, z);
        json out{{"field", fs.to_string()},
                 {"n", n},
                 {"eta", y.to_string()},
                 {"mu", z.to_string()},
                 {"value", value.to_string()}};
        *json_out = dup_string(out.dump());
    });
}

hopfinv_status hopfinv_jair(const hopfinv_spec* spec, const char* delta,
                            uint32_t i, uint32_t n, int verify,
                            int frobenius_check, char** json_out) {
    if (spec == nullptr || delta == nullptr || json_out == nullptr)
        return arg_error("hopfinv_jair: null argument");
    return guarded([&] {
        require_valid(spec);
        const hopfinv::JairVerifyReport report =
            hopfinv::jair_verify(spec->spec, delta, i, n, frobenius_check != 0);
        json out{{"delta", delta},
                 {"i", i},
                 {"n", n},
                 {"eta", report.eta.to_string()},
                 {"mu", report.mu.to_string()},
                 {"eigenvalue", report.eigenvalue.to_string()},
                 {"block", {{"start", report.block_start}, {"end", report.block_end}}},
                 {"element", report.element.to_string()}};
        if (verify != 0) {
            json v{{"prefix_present", report.prefix_present},
                   {"c", report.c.to_string()},
                   {"c_is_zero", report.c_is_zero},
                   {"image", report.image.to_string()}};
            if (report.c_is_zero)
                v["image_zero_when_c_zero"] = report.image_zero_when_c_zero;
            else {
                v["residual_supported_ok"] = report.residual_supported_ok;
                v["quotient"] = report.quotient.to_string();
            }
            out["verify"] = std::move(v);
        }
        if (report.frobenius) {
            const hopfinv::FrobeniusCheck& fc = *report.frobenius;
            json f{{"applicable", fc.applicable}};
            if (!fc.applicable) {
                f["reason"] = fc.reason;
            } else {
                f["exponent"] = fc.exponent;
                f["image"] = fc.image.to_string();
                f["image_is_zero"] = fc.image_is_zero;
                f["matches_commuting_case"] = fc.matches_commuting_case;
            }
            out["frobenius"] = std::move(f);
        }
        *json_out = dup_string(out.dump());
    });
}

hopfinv_status hopfinv_insert_check(const hopfinv_spec* spec, uint32_t max_degree,
                                    uint64_t size_cap, char** json_out) {
    if (spec == nullptr || json_out == nullptr)
        return arg_error("hopfinv_insert_check: null argument");
    return guarded([&] {
        require_valid(spec);
        std::vector<std::vector<hopfinv::FreePoly>> bases(max_degree + 1);
        for (uint32_t d = 0; d <= max_degree; ++d)
            bases[d] = hopfinv::invariant_basis(spec->spec, d, size_cap);

        std::uint64_t checked = 0;
        json violations = json::array();
        for (uint32_t df = 0; df <= max_degree; ++df)
            for (uint32_t dk = 0; df + dk <= max_degree; ++dk)
                for (uint32_t i = 0; i <= df; ++i) {
                    const uint32_t j = df - i;
                    for (const auto& f : bases[df])
                        for (const auto& g : bases[dk]) {
                            const hopfinv::FreePoly spliced = hopfinv::insert(i, j, dk, f, g);
                            ++checked;
                            if (!hopfinv::is_invariant(spec->spec, spliced))
                                violations.push_back({{"i", i},
                                                      {"j", j},
                                                      {"k", dk},
                                                      {"f", f.to_string()},
                                                      {"g", g.to_string()},
                                                      {"result", spliced.to_string()}});
                        }
                }
        json out{{"max_degree", max_degree},
                 {"inserts_checked", checked},
                 {"violations", std::move(violations)}};
        *json_out = dup_string(out.dump());
    });
}

hopfinv_status hopfinv_prefix_pump(const hopfinv_spec* spec, const char* poly_text,
                                   uint32_t x, uint32_t k, char** json_out) {
    if (spec == nullptr || poly_text == nullptr || json_out == nullptr)
        return arg_error("hopfinv_prefix_pump: null argument");
    return guarded([&] {
        require_valid(spec);
        const hopfinv::FreePoly input =
            hopfinv::FreePoly::parse(spec->spec.field(), spec->spec.rank(), poly_text);
        const hopfinv::FreePoly output =
            hopfinv::build_prefix_invariant(spec->spec, input, x, k);
        const hopfinv::Word prefix = hopfinv::Word::repeated(x, k);
        json out{{"x", x},
                 {"k", k},
                 {"input", input.to_string()},
                 {"output", output.to_string()},
                 {"prefix_word", prefix.to_string()},
                 {"prefix_present", output.has_prefix_in_support(prefix)},
                 {"invariant", hopfinv::is_invariant(spec->spec, output)}};
        *json_out = dup_string(out.dump());
    });
}

} // extern "C"
