#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    std::string out;
    int exit_code;
};

RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        (env.empty() ? "" : "env " + env + " ") + HOPFINV_CLI_PATH " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        out.append(buffer, got);
    const int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string fx(const std::string& name) {
    return std::string(HOPFINV_FIXTURES_DIR) + "/" + name;
}

} // namespace

TEST_CASE("invariants: Sweedler degree 3 prints the two basis rows") {
    const RunResult r = run("invariants " + fx("sweedler.spec.json") + " --degree 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "degree 3: dim 2 of 8\n"
                   "x1*x1*x1\n"
                   "x1*x2*x2 - x2*x1*x2 + x2*x2*x1\n");
}

TEST_CASE("cn prints the bare value") {
    const RunResult r = run("cn --n 4 --eta 1 --mu 2 --field p:5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");
}

TEST_CASE("probe table for the scalar spec") {
    const RunResult r = run("probe " + fx("scalar_minus1.spec.json") + " --max-degree 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("degree  dim_ambient  dim_invariants  dim_decomposable  "
                     "new_generators") != std::string::npos);
    CHECK(r.out.find("2       4            4               0                 4") !=
          std::string::npos);
    CHECK(r.out.find("classification: scalar (based on: g = -1)") != std::string::npos);
    CHECK(r.out.find("minimal degree: 2") != std::string::npos);
    CHECK(r.out.find("no new generators in degrees (2, 6]") != std::string::npos);
    for (int degree = 1; degree <= 6; ++degree) {
        const std::string needle = "\n" + std::to_string(degree) + " ";
        CHECK(r.out.find(needle) != std::string::npos);
    }
}

TEST_CASE("probe output is byte-identical across runs") {
    const std::string args = "probe " + fx("sweedler.spec.json") + " --max-degree 5";
    CHECK(run(args).out == run(args).out);
    const std::string json_args = args + " --output json";
    CHECK(run(json_args).out == run(json_args).out);
}

TEST_CASE("json, table, and csv renderings carry identical data") {
    const std::string base = "probe " + fx("nonscalar_diag.spec.json") + " --max-degree 4";
    const RunResult as_json = run(base + " --output json");
    const RunResult as_csv = run(base + " --output csv");
    REQUIRE(as_json.exit_code == 0);
    REQUIRE(as_csv.exit_code == 0);

    const json payload = json::parse(as_json.out);
    // rebuild the flattened key/value map from the CSV text
    std::vector<std::string> lines;
    std::string line;
    for (char c : as_csv.out) {
        if (c == '\n') {
            lines.push_back(line);
            line.clear();
        } else
            line += c;
    }
    REQUIRE(lines.size() > 1);
    CHECK(lines[0] == "key,value");
    CHECK(lines.size() - 1 == payload.flatten().size());
    // spot-check some rows (unquoted simple values match the payload)
    auto has_line = [&](const std::string& s) {
        for (const auto& l : lines)
            if (l == s)
                return true;
        return false;
    };
    CHECK(has_line("rows/0/new_generators,1"));
    CHECK(has_line("rows/3/dim_invariants,8"));
    CHECK(has_line("classification/verdict,linear-non-scalar"));
}

TEST_CASE("validate: findings and exit codes") {
    const RunResult ok = run("validate " + fx("sweedler.spec.json"));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "findings: 0 error(s), 0 warning(s)\n");

    const RunResult warn = run("validate " + fx("nonscalar_diag.spec.json"));
    CHECK(warn.exit_code == 0);
    CHECK(warn.out ==
          "warning: faithfulness not verifiable from generator data\n"
          "findings: 0 error(s), 1 warning(s)\n");

    const RunResult bad = run("validate " + fx("singular.spec.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("error: group-like matrix not invertible: 'g'") !=
          std::string::npos);
}

TEST_CASE("parse failures exit 1") {
    CHECK(run("classify " + fx("bad_row_length.spec.json")).exit_code == 1);
    CHECK(run("classify /nonexistent/path.json").exit_code == 1);
    CHECK(run("invariants " + fx("singular.spec.json") + " --degree 2").exit_code == 1);
}

TEST_CASE("size cap: env var, exit 2, and --allow-large") {
    const std::string args = "invariants " + fx("sweedler.spec.json") + " --degree 4";
    CHECK(run(args).exit_code == 0);
    const RunResult capped = run(args, "HOPFINV_SIZE_CAP=4");
    CHECK(capped.exit_code == 2);
    CHECK(capped.out.find("size-cap-exceeded") != std::string::npos);
    CHECK(run("--allow-large " + args, "HOPFINV_SIZE_CAP=4").exit_code == 0);
}

TEST_CASE("classify and minimal-degree output") {
    const RunResult c = run("classify " + fx("gf7_scalar2.spec.json"));
    CHECK(c.exit_code == 0);
    CHECK(c.out == "classification: scalar (based on: g = 2)\n");

    const RunResult m = run("minimal-degree " + fx("gf7_scalar2.spec.json"));
    CHECK(m.exit_code == 0);
    CHECK(m.out == "minimal invariant degree: 3\n");

    const RunResult none = run("minimal-degree " + fx("nonscalar_diag.spec.json"));
    CHECK(none.exit_code == 1);
    CHECK(none.out.find("not-scalar") != std::string::npos);
}

TEST_CASE("minimal-degree reports absence under the cap") {
    // base 2 over the rationals: 2^t is never 1
    const std::string doc = R"({"field": {"kind": "rational"}, "rank": 2,
        "group_likes": [{"name": "g", "matrix": [["2", "0"], ["0", "2"]]}]})";
    const std::string path = "/tmp/hopfinv_q2_scalar.spec.json";
    {
        std::FILE* f = std::fopen(path.c_str(), "w");
        REQUIRE(f != nullptr);
        std::fwrite(doc.data(), 1, doc.size(), f);
        std::fclose(f);
    }
    const RunResult r = run("minimal-degree " + path + " --cap 64");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "minimal invariant degree: none up to cap 64\n");

    // 0^0 = 1 makes the one-term sum identically 1
    CHECK(run("cn --n 1 --eta 0 --mu 0").out == "1\n");
}

TEST_CASE("jair with verification and the Frobenius report") {
    const RunResult r = run("jair " + fx("jordan_gf5.spec.json") +
                            " --delta d --i 1 --n 2 --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("element: x1*x2 + x2*x1") != std::string::npos);
    CHECK(r.out.find("verify: residual supported in block: yes") != std::string::npos);

    const RunResult f = run("jair " + fx("frobenius_gf3.spec.json") +
                            " --delta d --i 1 --n 1 --verify --frobenius-check");
    CHECK(f.exit_code == 0);
    CHECK(f.out.find("frobenius: exponent 3, image x1*x1*x2 + x1*x2*x1 + x2*x1*x1, "
                     "zero: no (commuting-case prediction was zero)") !=
          std::string::npos);
}

TEST_CASE("insert-check passes on the fixtures") {
    const RunResult r = run("insert-check " + fx("sweedler.spec.json") + " --max-degree 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("violations: 0") != std::string::npos);
}

TEST_CASE("prefix subcommand") {
    const RunResult r = run("prefix " + fx("nonscalar_diag.spec.json") + " --poly-file " +
                            fx("x2x2.poly") + " --x 2 --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("output: x2*x2*x2*x2") != std::string::npos);
    CHECK(r.out.find("prefix x2*x2 present: yes") != std::string::npos);
    CHECK(r.out.find("invariant: yes") != std::string::npos);

    const RunResult second = run("prefix " + fx("nonscalar_diag.spec.json") +
                                 " --poly-file " + fx("x2x1x2.poly") + " --x 2 --k 2");
    CHECK(second.exit_code == 0);
    CHECK(second.out.find("output: x2*x2*x1*x2*x1*x2") != std::string::npos);
}

TEST_CASE("invariants requires a degree option") {
    CHECK(run("invariants " + fx("sweedler.spec.json")).exit_code == 1);
}

TEST_CASE("invariants over a degree range") {
    const RunResult r = run("invariants " + fx("sweedler.spec.json") + " --max-degree 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "degree 1: dim 1 of 2\n"
                   "x1\n"
                   "degree 2: dim 1 of 4\n"
                   "x1*x1\n"
                   "degree 3: dim 2 of 8\n"
                   "x1*x1*x1\n"
                   "x1*x2*x2 - x2*x1*x2 + x2*x2*x1\n");
    // json rendering carries the same blocks
    const RunResult j = run("invariants " + fx("sweedler.spec.json") +
                            " --max-degree 3 --output json");
    const json payload = json::parse(j.out);
    REQUIRE(payload["degrees"].size() == 3);
    CHECK(payload["degrees"][2]["basis"][1] == "x1*x2*x2 - x2*x1*x2 + x2*x2*x1");
}
