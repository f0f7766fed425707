// hopfinv command-line front end. Talks to the engine exclusively through
// the C API in hopfinv/hopfinv.h; every subcommand fetches one JSON payload
// and renders it as a table, as JSON, or as flattened CSV, so the three
// formats carry the same data by construction.
//
// Exit codes: 0 success; 1 parse/validation error; 2 size cap exceeded;
// 3 a check command found a property violation.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfinv/hopfinv.h"

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSizeCap = 1000000;

struct CommandError {
    int exit_code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CommandError{1, "cannot read file '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int exit_code_of(hopfinv_status status) {
    switch (status) {
    case HOPFINV_OK: return 0;
    case HOPFINV_ERR_SIZE_CAP: return 2;
    case HOPFINV_ERR_CANCELLATION_DETECTED: return 3;
    default: return 1;
    }
}

void check_status(hopfinv_status status) {
    if (status != HOPFINV_OK)
        throw CommandError{exit_code_of(status),
                           std::string(hopfinv_status_name(status)) + ": " +
                               hopfinv_last_error()};
}

// RAII wrappers over the C handles.
struct SpecHandle {
    hopfinv_spec* spec = nullptr;
    explicit SpecHandle(const std::string& path) {
        check_status(hopfinv_spec_parse(read_file(path).c_str(), &spec));
    }
    ~SpecHandle() { hopfinv_spec_free(spec); }
    SpecHandle(const SpecHandle&) = delete;
    SpecHandle& operator=(const SpecHandle&) = delete;
};

template <typename Fn>
json fetch_payload(Fn&& call) {
    char* raw = nullptr;
    check_status(call(&raw));
    std::string text(raw);
    hopfinv_free_string(raw);
    return json::parse(text);
}

std::uint64_t resolve_size_cap(bool allow_large) {
    if (allow_large)
        return UINT64_MAX;
    if (const char* env = std::getenv("HOPFINV_SIZE_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CommandError{1, std::string("bad HOPFINV_SIZE_CAP value '") + env + "'"};
        }
    }
    return kDefaultSizeCap;
}

// ---- rendering ----------------------------------------------------------

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string scalar_to_text(const json& v) {
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_null())
        return "null";
    return v.dump();
}

void render_csv(const json& payload, std::ostream& out) {
    const json flat = payload.flatten();
    out << "key,value\n";
    for (const auto& [pointer, value] : flat.items())
        out << csv_escape(pointer.substr(1)) << ',' << csv_escape(scalar_to_text(value))
            << '\n';
}

void render_rows(const std::vector<std::vector<std::string>>& rows, std::ostream& out) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (widths.size() <= c)
                widths.push_back(0);
            widths[c] = std::max(widths[c], row[c].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            if (c + 1 < row.size())
                cell.resize(widths[c], ' ');
            line += cell;
            if (c + 1 < row.size())
                line += "  ";
        }
        out << line << '\n';
    }
}

std::string yes_no(const json& b) { return b.get<bool>() ? "yes" : "no"; }

void render_validate_table(const json& p, std::ostream& out) {
    for (const auto& f : p["findings"])
        out << f["severity"].get<std::string>() << ": "
            << f["message"].get<std::string>() << '\n';
    out << "findings: " << p["error_count"] << " error(s), " << p["warning_count"]
        << " warning(s)\n";
}

void render_classification(const json& cls, std::ostream& out) {
    out << "classification: " << cls["verdict"].get<std::string>();
    if (cls.contains("bases")) {
        std::string bases;
        for (const auto& [name, base] : cls["bases"].items()) {
            if (!bases.empty())
                bases += ", ";
            bases += name + " = " + base.get<std::string>();
        }
        if (!bases.empty())
            out << " (based on: " << bases << ")";
    }
    out << '\n';
}

void render_invariants_block(const json& p, std::ostream& out) {
    out << "degree " << p["degree"] << ": dim " << p["dim"] << " of "
        << p["dim_ambient"] << '\n';
    for (const auto& element : p["basis"])
        out << element.get<std::string>() << '\n';
}

void render_probe_table(const json& p, std::ostream& out) {
    out << "field: " << p["field"].get<std::string>() << "  rank: " << p["rank"]
        << "  horizon: " << p["horizon"] << '\n';
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"degree", "dim_ambient", "dim_invariants", "dim_decomposable",
                    "new_generators"});
    for (const auto& row : p["rows"])
        rows.push_back({row["degree"].dump(), row["dim_ambient"].dump(),
                        row["dim_invariants"].dump(), row["dim_decomposable"].dump(),
                        row["new_generators"].dump()});
    render_rows(rows, out);
    render_classification(p["classification"], out);
    out << "minimal degree: "
        << (p["minimal_degree"].is_null() ? std::string("none")
                                          : p["minimal_degree"].dump())
        << '\n';
    out << "verdict: " << p["verdict"].get<std::string>() << '\n';
}

void render_jair_table(const json& p, std::ostream& out) {
    out << "delta: " << p["delta"].get<std::string>() << "  i: " << p["i"]
        << "  n: " << p["n"] << '\n';
    out << "block: [" << p["block"]["start"] << ", " << p["block"]["end"]
        << "]  eigenvalue: " << p["eigenvalue"].get<std::string>() << '\n';
    out << "eta: " << p["eta"].get<std::string>()
        << "  mu: " << p["mu"].get<std::string>() << '\n';
    out << "element: " << p["element"].get<std::string>() << '\n';
    if (p.contains("verify")) {
        const json& v = p["verify"];
        out << "verify: prefix present: " << yes_no(v["prefix_present"]) << '\n';
        out << "verify: c = " << v["c"].get<std::string>() << '\n';
        out << "verify: image: " << v["image"].get<std::string>() << '\n';
        if (v["c_is_zero"].get<bool>())
            out << "verify: image is zero (c = 0 branch): "
                << yes_no(v["image_zero_when_c_zero"]) << '\n';
        else {
            out << "verify: residual supported in block: "
                << yes_no(v["residual_supported_ok"]) << '\n';
            out << "verify: quotient: " << v["quotient"].get<std::string>() << '\n';
        }
    }
    if (p.contains("frobenius")) {
        const json& f = p["frobenius"];
        if (!f["applicable"].get<bool>())
            out << "frobenius: not applicable (" << f["reason"].get<std::string>()
                << ")\n";
        else {
            out << "frobenius: exponent " << f["exponent"] << ", image "
                << f["image"].get<std::string>() << ", zero: "
                << yes_no(f["image_is_zero"]);
            if (!f["matches_commuting_case"].get<bool>())
                out << " (commuting-case prediction was zero)";
            out << '\n';
        }
    }
}

void render_insert_check_table(const json& p, std::ostream& out) {
    out << "max degree: " << p["max_degree"] << '\n';
    out << "inserts checked: " << p["inserts_checked"] << '\n';
    out << "violations: " << p["violations"].size() << '\n';
    for (const auto& v : p["violations"])
        out << "violation: insert(" << v["i"] << "," << v["j"] << "," << v["k"]
            << ") of f = " << v["f"].get<std::string>()
            << ", g = " << v["g"].get<std::string>() << '\n';
}

void render_prefix_table(const json& p, std::ostream& out) {
    out << "input: " << p["input"].get<std::string>() << '\n';
    out << "x: " << p["x"] << "  k: " << p["k"] << '\n';
    out << "output: " << p["output"].get<std::string>() << '\n';
    out << "prefix " << p["prefix_word"].get<std::string>()
        << " present: " << yes_no(p["prefix_present"]) << '\n';
    out << "invariant: " << yes_no(p["invariant"]) << '\n';
}

using TableRenderer = void (*)(const json&, std::ostream&);

void emit(const json& payload, const std::string& format, TableRenderer table) {
    if (format == "json")
        std::cout << payload.dump(2) << '\n';
    else if (format == "csv")
        render_csv(payload, std::cout);
    else
        table(payload, std::cout);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact degree-by-degree invariants of free algebras under "
                 "group-like and skew-primitive generator actions"};
    app.require_subcommand(1);
    bool allow_large = false;
    app.add_flag("--allow-large", allow_large,
                 "lift the coordinate-count size cap (default 10^6, or HOPFINV_SIZE_CAP)");

    std::string spec_path, output = "table", poly_file, delta_name, field_text = "rational";
    std::string eta_text, mu_text;
    std::uint32_t degree = 0, max_degree = 0, cap = 64, n = 0, idx = 0, x = 0, k = 0;
    bool verify = false, frobenius = false;

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", output, "table, json, or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
    };
    auto add_spec = [&](CLI::App* cmd) {
        cmd->fallthrough(); // lets --allow-large appear after the subcommand
        cmd->add_option("spec", spec_path, "action spec file (JSON)")->required();
    };

    CLI::App* cmd_validate = app.add_subcommand("validate", "check a spec file");
    add_spec(cmd_validate);
    add_output(cmd_validate);

    CLI::App* cmd_classify = app.add_subcommand("classify", "scalar or non-scalar action");
    add_spec(cmd_classify);
    add_output(cmd_classify);

    CLI::App* cmd_minimal =
        app.add_subcommand("minimal-degree", "least degree carrying a nonzero invariant "
                                             "(scalar actions)");
    add_spec(cmd_minimal);
    cmd_minimal->add_option("--cap", cap, "search bound")->capture_default_str();
    add_output(cmd_minimal);

    CLI::App* cmd_invariants =
        app.add_subcommand("invariants", "basis of the invariants in one or more degrees");
    add_spec(cmd_invariants);
    CLI::Option* opt_degree = cmd_invariants->add_option("--degree", degree, "single degree");
    CLI::Option* opt_maxdeg =
        cmd_invariants->add_option("--max-degree", max_degree, "all degrees 1..N");
    opt_degree->excludes(opt_maxdeg);
    add_output(cmd_invariants);

    CLI::App* cmd_probe =
        app.add_subcommand("probe", "degree-by-degree new-generator counts");
    add_spec(cmd_probe);
    cmd_probe->add_option("--max-degree", max_degree, "horizon")->required();
    add_output(cmd_probe);

    CLI::App* cmd_cn = app.add_subcommand("cn", "evaluate c_n(eta, mu)");
    cmd_cn->add_option("--n", n, "number of summands")->required();
    cmd_cn->add_option("--eta", eta_text, "scalar literal")->required();
    cmd_cn->add_option("--mu", mu_text, "scalar literal")->required();
    cmd_cn->add_option("--field", field_text, "rational or p:<prime>")
        ->capture_default_str();
    add_output(cmd_cn);

    CLI::App* cmd_jair = app.add_subcommand(
        "jair", "block element with image divisible by c_n(eta, mu)");
    add_spec(cmd_jair);
    cmd_jair->add_option("--delta", delta_name, "skew-primitive name")->required();
    cmd_jair->add_option("--i", idx, "generator index")->required();
    cmd_jair->add_option("--n", n, "word length")->required();
    cmd_jair->add_flag("--verify", verify, "check the image's support and divisibility");
    cmd_jair->add_flag("--frobenius-check", frobenius,
                       "apply delta to f^p in characteristic p and report the result");
    add_output(cmd_jair);

    CLI::App* cmd_insert = app.add_subcommand(
        "insert-check", "closure of the invariant bases under the splice operator");
    add_spec(cmd_insert);
    cmd_insert->add_option("--max-degree", max_degree, "bound on i+j+k")->required();
    add_output(cmd_insert);

    CLI::App* cmd_prefix =
        app.add_subcommand("prefix", "pump a power-of-x prefix onto an invariant");
    add_spec(cmd_prefix);
    cmd_prefix->add_option("--poly-file", poly_file, "file holding the polynomial")
        ->required();
    cmd_prefix->add_option("--x", x, "generator index")->required();
    cmd_prefix->add_option("--k", k, "prefix length")->required();
    add_output(cmd_prefix);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const std::uint64_t size_cap = resolve_size_cap(allow_large);

        if (app.got_subcommand(cmd_validate)) {
            SpecHandle spec(spec_path);
            const json payload = fetch_payload(
                [&](char** out) { return hopfinv_validate(spec.spec, out); });
            emit(payload, output, render_validate_table);
            return payload["error_count"].get<std::uint64_t>() > 0 ? 1 : 0;
        }
        if (app.got_subcommand(cmd_classify)) {
            SpecHandle spec(spec_path);
            const json payload = fetch_payload(
                [&](char** out) { return hopfinv_classify(spec.spec, out); });
            emit(payload, output, [](const json& p, std::ostream& out) {
                render_classification(p, out);
            });
            return 0;
        }
        if (app.got_subcommand(cmd_minimal)) {
            SpecHandle spec(spec_path);
            const json payload = fetch_payload(
                [&](char** out) { return hopfinv_minimal_degree(spec.spec, cap, out); });
            emit(payload, output, [](const json& p, std::ostream& out) {
                if (p["found"].get<bool>())
                    out << "minimal invariant degree: " << p["degree"] << '\n';
                else
                    out << "minimal invariant degree: none up to cap " << p["cap"] << '\n';
            });
            return 0;
        }
        if (app.got_subcommand(cmd_invariants)) {
            if (opt_degree->count() == 0 && opt_maxdeg->count() == 0)
                throw CommandError{1, "invariants: pass --degree or --max-degree"};
            SpecHandle spec(spec_path);
            if (opt_degree->count() > 0) {
                const json payload = fetch_payload([&](char** out) {
                    return hopfinv_invariant_basis(spec.spec, degree, size_cap, out);
                });
                emit(payload, output, render_invariants_block);
            } else {
                json payload;
                payload["degrees"] = json::array();
                for (std::uint32_t d = 1; d <= max_degree; ++d)
                    payload["degrees"].push_back(fetch_payload([&](char** out) {
                        return hopfinv_invariant_basis(spec.spec, d, size_cap, out);
                    }));
                emit(payload, output, [](const json& p, std::ostream& out) {
                    for (const auto& block : p["degrees"])
                        render_invariants_block(block, out);
                });
            }
            return 0;
        }
        if (app.got_subcommand(cmd_probe)) {
            SpecHandle spec(spec_path);
            const json payload = fetch_payload([&](char** out) {
                return hopfinv_probe(spec.spec, max_degree, size_cap, out);
            });
            emit(payload, output, render_probe_table);
            return 0;
        }
        if (app.got_subcommand(cmd_cn)) {
            const json payload = fetch_payload([&](char** out) {
                return hopfinv_cn(field_text.c_str(), n, eta_text.c_str(),
                                  mu_text.c_str(), out);
            });
            emit(payload, output, [](const json& p, std::ostream& out) {
                out << p["value"].get<std::string>() << '\n';
            });
            return 0;
        }
        if (app.got_subcommand(cmd_jair)) {
            SpecHandle spec(spec_path);
            const json payload = fetch_payload([&](char** out) {
                return hopfinv_jair(spec.spec, delta_name.c_str(), idx, n,
                                    verify ? 1 : 0, frobenius ? 1 : 0, out);
            });
            emit(payload, output, render_jair_table);
            if (payload.contains("verify")) {
                const json& v = payload["verify"];
                const bool ok =
                    v["prefix_present"].get<bool>() &&
                    (v["c_is_zero"].get<bool>() ? v["image_zero_when_c_zero"].get<bool>()
                                                : v["residual_supported_ok"].get<bool>());
                if (!ok)
                    return 3;
            }
            return 0;
        }
        if (app.got_subcommand(cmd_insert)) {
            SpecHandle spec(spec_path);
            const json payload = fetch_payload([&](char** out) {
                return hopfinv_insert_check(spec.spec, max_degree, size_cap, out);
            });
            emit(payload, output, render_insert_check_table);
            return payload["violations"].empty() ? 0 : 3;
        }
        if (app.got_subcommand(cmd_prefix)) {
            SpecHandle spec(spec_path);
            const std::string poly_text = read_file(poly_file);
            const json payload = fetch_payload([&](char** out) {
                return hopfinv_prefix_pump(spec.spec, poly_text.c_str(), x, k, out);
            });
            emit(payload, output, render_prefix_table);
            return 0;
        }
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
