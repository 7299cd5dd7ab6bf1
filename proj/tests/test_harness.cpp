#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "parhiggs/report.hpp"

using namespace parhiggs;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kSp2R5Config = R"({
  "schema": "parhiggs-config/1",
  "name": "sp2_r5_inline",
  "seed": 12,
  "curve": {"points": ["0", "1", "-1", "2", "-2"]},
  "bundle": {"splitting": [0, 0], "weights": "standard", "flags": "generic"},
  "pairing": {"symmetry": "antisymmetric", "target_degree": 0, "omega": "standard"},
  "tasks": ["sections", "hitchin", "equivariance", "serre", "very-stable", "stability", "dimensions"],
  "dimension_params": [
    {"group": "Sp", "m": 1, "g": 2, "r": 1},
    {"group": "SO-even", "m": 2, "g": 2, "r": 1},
    {"group": "SO-odd", "m": 1, "g": 2, "r": 0}
  ]
})";

}  // namespace

TEST_CASE("parse_config accepts the inline rank-2 instance") {
    const JobConfig cfg = parse_config(kSp2R5Config, "inline");
    CHECK(cfg.name == "sp2_r5_inline");
    CHECK(cfg.seed == 12);
    CHECK(cfg.curve.count() == 5);
    CHECK(cfg.splitting == std::vector<int>{0, 0});
    CHECK(cfg.tasks.size() == 7);
    const ParabolicBundle e = cfg.bundle();
    CHECK(validate(e).ok());
    CHECK(check_pairing_iso(e, cfg.pairing).ok());
}

TEST_CASE("parse_config rejects structural problems with per-field messages") {
    auto expect_issue = [](const std::string& text, const std::string& needle) {
        try {
            parse_config(text, "inline");
            FAIL_CHECK("expected ConfigError for " << needle);
        } catch (const ConfigError& err) {
            bool found = false;
            for (const auto& issue : err.issues())
                if (issue.find(needle) != std::string::npos) found = true;
            if (!found) {
                for (const auto& issue : err.issues()) MESSAGE(issue);
            }
            CHECK(found);
        }
    };

    std::string dup = kSp2R5Config;
    dup.replace(dup.find("\"-2\""), 4, "\"0\"");
    expect_issue(dup, "duplicate marked point");

    // standard antisymmetric omega on odd rank
    std::string odd = kSp2R5Config;
    odd.replace(odd.find("[0, 0]"), 6, "[0, 0, 0]");
    expect_issue(odd, "even rank");

    std::string no_tasks = kSp2R5Config;
    no_tasks.replace(no_tasks.find("[\"sections\", \"hitchin\", \"equivariance\", \"serre\", \"very-stable\", \"stability\", \"dimensions\"]"),
                     std::string("[\"sections\", \"hitchin\", \"equivariance\", \"serre\", \"very-stable\", \"stability\", \"dimensions\"]").size(),
                     "[]");
    expect_issue(no_tasks, "nonempty");

    std::string unknown = kSp2R5Config;
    unknown.replace(unknown.find("\"sections\""), 10, "\"spectra\"");
    expect_issue(unknown, "unknown task");

    expect_issue("{ not json", "inline");
}

TEST_CASE("run_report on the rank-2 instance carries the expected verdicts") {
    const JobConfig cfg = parse_config(kSp2R5Config, "inline");
    const std::string report = run_report(cfg);

    // dim W_st = 2, Serre identity passes, very stable with certificate,
    // moduli dimensions 8 / 16 / 6
    CHECK(report.find("\"strong_dimension\": 2") != std::string::npos);
    CHECK(report.find("\"equal\": true") != std::string::npos);
    CHECK(report.find("\"strongly_very_stable\": true") != std::string::npos);
    CHECK(report.find("\"dimension\": 8") != std::string::npos);
    CHECK(report.find("\"dimension\": 16") != std::string::npos);
    CHECK(report.find("\"dimension\": 6") != std::string::npos);
    CHECK(report.find("\"verdict\": \"Stable\"") != std::string::npos);
    // no floating point anywhere: exact rationals are strings (the only
    // digit.digit token allowed is the tool version)
    std::string scrubbed = report;
    for (std::size_t pos = scrubbed.find(kToolVersion); pos != std::string::npos;
         pos = scrubbed.find(kToolVersion))
        scrubbed.erase(pos, std::string(kToolVersion).size());
    for (std::size_t i = 1; i + 1 < scrubbed.size(); ++i) {
        if (scrubbed[i] != '.') continue;
        const bool decimal = std::isdigit(static_cast<unsigned char>(scrubbed[i - 1])) &&
                             std::isdigit(static_cast<unsigned char>(scrubbed[i + 1]));
        CHECK(!decimal);
    }

    // determinism: identical config and seed give byte-identical reports
    CHECK(report == run_report(cfg));

    JobConfig reseeded = cfg;
    reseeded.seed = 999;
    CHECK(run_report(reseeded) != report);  // flags are seed-derived
}

TEST_CASE("emit_examples writes a deterministic corpus that self-checks") {
    const fs::path dir = fs::temp_directory_path() / "parhiggs_corpus_test";
    fs::remove_all(dir);
    const auto files = emit_examples(dir.string());
    CHECK(files.size() >= 6);

    std::vector<std::string> first;
    for (const auto& name : files) first.push_back(slurp(dir / name));

    // byte-identical rerun
    const auto files2 = emit_examples(dir.string());
    REQUIRE(files2 == files);
    for (std::size_t i = 0; i < files.size(); ++i) CHECK(slurp(dir / files[i]) == first[i]);

    // every instance parses, validates, and passes the pairing check
    for (const auto& name : files) {
        const JobConfig cfg = load_config((dir / name).string());
        const ParabolicBundle e = cfg.bundle();
        const auto bd = validate(e);
        for (const auto& v : bd.violations) MESSAGE(name << ": " << v);
        CHECK(bd.ok());
        const auto pd = check_pairing_iso(e, cfg.pairing);
        for (const auto& v : pd.violations) MESSAGE(name << ": " << v);
        CHECK(pd.ok());
        CHECK(!cfg.tasks.empty());
    }
    fs::remove_all(dir);
}

TEST_CASE("load_config reports missing files as config errors") {
    CHECK_THROWS_AS(load_config("/nonexistent/path/x.json"), ConfigError);
}
