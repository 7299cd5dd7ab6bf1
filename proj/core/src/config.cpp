#include "parhiggs/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "parhiggs/generators.hpp"
#include "parhiggs/report.hpp"

namespace parhiggs {

using nlohmann::json;

const std::vector<std::string>& known_tasks() {
    static const std::vector<std::string> tasks = {
        "sections", "hitchin", "equivariance", "serre", "very-stable", "stability", "dimensions"};
    return tasks;
}

namespace {

Rational parse_rational_field(const json& j, const std::string& where,
                              std::vector<std::string>& issues) {
    if (!j.is_string()) {
        issues.push_back(where + ": expected a rational string like \"3/4\"");
        return Rational(0);
    }
    const auto r = Rational::parse(j.get<std::string>());
    if (!r) {
        issues.push_back(where + ": cannot parse rational \"" + j.get<std::string>() + "\"");
        return Rational(0);
    }
    return *r;
}

Poly parse_poly_field(const json& j, const std::string& where, std::vector<std::string>& issues) {
    if (!j.is_array()) {
        issues.push_back(where + ": expected an array of coefficient strings (ascending powers)");
        return Poly();
    }
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < j.size(); ++k) {
        std::ostringstream os;
        os << where << "[" << k << "]";
        coeffs.push_back(parse_rational_field(j[k], os.str(), issues));
    }
    return Poly(std::move(coeffs));
}

RatMat parse_ratmat_field(const json& j, int n, const std::string& where,
                          std::vector<std::string>& issues) {
    RatMat m(n, n);
    if (!j.is_array() || static_cast<int>(j.size()) != n) {
        issues.push_back(where + ": expected " + std::to_string(n) + " rows");
        return m;
    }
    for (int i = 0; i < n; ++i) {
        if (!j[static_cast<std::size_t>(i)].is_array() ||
            static_cast<int>(j[static_cast<std::size_t>(i)].size()) != n) {
            issues.push_back(where + ": row " + std::to_string(i) + " must have " +
                             std::to_string(n) + " entries");
            continue;
        }
        for (int k = 0; k < n; ++k) {
            std::ostringstream os;
            os << where << "[" << i << "][" << k << "]";
            m.at(i, k) = parse_rational_field(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                                              os.str(), issues);
        }
    }
    return m;
}

std::optional<GroupKind> parse_group_token(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "sp") return GroupKind::Sp;
    if (s == "so-even" || s == "soeven" || s == "so_even") return GroupKind::SOEven;
    if (s == "so-odd" || s == "soodd" || s == "so_odd") return GroupKind::SOOdd;
    if (s == "gl") return GroupKind::GL;
    return std::nullopt;
}

}  // namespace

ParabolicBundle JobConfig::bundle() const {
    ParabolicBundle e;
    e.curve = curve;
    e.splitting = splitting;
    e.weights = weights;
    if (generic_flags) {
        SplitMix64 rng(seed ^ 0x5eedf1a65ULL);
        e.flags = parhiggs::generic_flags(rng, static_cast<int>(splitting.size()),
                                          curve.count(), &pairing);
    } else {
        e.flags = explicit_flags;
    }
    return e;
}

JobConfig parse_config(const std::string& text, const std::string& origin) {
    std::vector<std::string> issues;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ConfigError({origin + ": " + err.what()});
    }

    JobConfig cfg;
    if (!j.contains("schema") || j["schema"] != kConfigSchema)
        issues.push_back("schema: expected \"" + std::string(kConfigSchema) + "\"");
    cfg.name = j.value("name", origin);
    if (j.contains("seed")) {
        if (j["seed"].is_number_unsigned() || j["seed"].is_number_integer())
            cfg.seed = j["seed"].get<std::uint64_t>();
        else
            issues.push_back("seed: expected an integer");
    }

    // curve
    if (!j.contains("curve") || !j["curve"].contains("points") || !j["curve"]["points"].is_array()) {
        issues.push_back("curve.points: missing");
    } else {
        const auto& pts = j["curve"]["points"];
        for (std::size_t k = 0; k < pts.size(); ++k) {
            std::ostringstream os;
            os << "curve.points[" << k << "]";
            cfg.curve.points.push_back(parse_rational_field(pts[k], os.str(), issues));
        }
        for (std::size_t a = 0; a < cfg.curve.points.size(); ++a)
            for (std::size_t b = a + 1; b < cfg.curve.points.size(); ++b)
                if (cfg.curve.points[a] == cfg.curve.points[b])
                    issues.push_back("curve.points: duplicate marked point " +
                                     cfg.curve.points[a].str());
    }
    const int r = cfg.curve.count();

    // bundle
    if (!j.contains("bundle")) {
        issues.push_back("bundle: missing");
        throw ConfigError(issues);
    }
    const json& jb = j["bundle"];
    if (!jb.contains("splitting") || !jb["splitting"].is_array() || jb["splitting"].empty()) {
        issues.push_back("bundle.splitting: expected a nonempty integer array");
    } else {
        for (const auto& d : jb["splitting"]) {
            if (!d.is_number_integer()) {
                issues.push_back("bundle.splitting: entries must be integers");
                break;
            }
            cfg.splitting.push_back(d.get<int>());
        }
        for (std::size_t i = 0; i + 1 < cfg.splitting.size(); ++i)
            if (cfg.splitting[i] < cfg.splitting[i + 1])
                issues.push_back("bundle.splitting: must be non-increasing");
    }
    const int n = static_cast<int>(cfg.splitting.size());

    // pairing (needed before weights/flags for the "standard" expansions)
    if (!j.contains("pairing")) {
        issues.push_back("pairing: missing");
        throw ConfigError(issues);
    }
    const json& jp = j["pairing"];
    const std::string sym = jp.value("symmetry", "");
    if (sym == "antisymmetric")
        cfg.pairing.symmetry = PairingSymmetry::Antisymmetric;
    else if (sym == "symmetric")
        cfg.pairing.symmetry = PairingSymmetry::Symmetric;
    else
        issues.push_back("pairing.symmetry: expected \"antisymmetric\" or \"symmetric\"");
    cfg.pairing.target_degree = jp.value("target_degree", 0);
    if (jp.contains("omega") && jp["omega"].is_string()) {
        if (jp["omega"] != "standard") {
            issues.push_back("pairing.omega: the only named form is \"standard\"");
        } else {
            try {
                cfg.pairing = standard_pairing(n, cfg.pairing.symmetry);
                cfg.pairing.target_degree = jp.value("target_degree", 0);
            } catch (const std::invalid_argument& err) {
                issues.push_back(std::string("pairing.omega: ") + err.what());
            }
        }
    } else if (jp.contains("omega") && jp["omega"].is_array()) {
        const json& jo = jp["omega"];
        cfg.pairing.omega = PolyMat(n, n);
        if (static_cast<int>(jo.size()) != n) {
            issues.push_back("pairing.omega: expected " + std::to_string(n) + " rows");
        } else {
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n && jo[static_cast<std::size_t>(i)].is_array() &&
                                static_cast<int>(jo[static_cast<std::size_t>(i)].size()) == n;
                     ++k) {
                    std::ostringstream os;
                    os << "pairing.omega[" << i << "][" << k << "]";
                    cfg.pairing.omega.at(i, k) = parse_poly_field(
                        jo[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], os.str(), issues);
                }
        }
    } else {
        issues.push_back("pairing.omega: missing");
    }

    // weights
    if (jb.contains("weights") && jb["weights"].is_string() && jb["weights"] == "standard") {
        try {
            const auto w = standard_selfdual_weights(n, cfg.pairing.symmetry);
            cfg.weights.assign(static_cast<std::size_t>(r), w);
        } catch (const std::invalid_argument& err) {
            issues.push_back(std::string("bundle.weights: ") + err.what());
        }
    } else if (jb.contains("weights") && jb["weights"].is_array()) {
        const json& jw = jb["weights"];
        if (static_cast<int>(jw.size()) != r) {
            issues.push_back("bundle.weights: expected one weight list per marked point");
        } else {
            for (int p = 0; p < r; ++p) {
                std::vector<Rational> w;
                const json& row = jw[static_cast<std::size_t>(p)];
                if (!row.is_array() || static_cast<int>(row.size()) != n) {
                    issues.push_back("bundle.weights[" + std::to_string(p) + "]: expected " +
                                     std::to_string(n) + " entries");
                    w.assign(static_cast<std::size_t>(n), Rational(0));
                } else {
                    for (int i = 0; i < n; ++i) {
                        std::ostringstream os;
                        os << "bundle.weights[" << p << "][" << i << "]";
                        w.push_back(parse_rational_field(row[static_cast<std::size_t>(i)], os.str(), issues));
                    }
                    for (int i = 0; i + 1 < n; ++i)
                        if (!(w[static_cast<std::size_t>(i)] < w[static_cast<std::size_t>(i + 1)]))
                            issues.push_back("bundle.weights[" + std::to_string(p) +
                                             "]: weights not increasing");
                    for (const auto& a : w)
                        if (a < Rational(0) || a >= Rational(1))
                            issues.push_back("bundle.weights[" + std::to_string(p) +
                                             "]: weight outside [0,1)");
                }
                cfg.weights.push_back(std::move(w));
            }
        }
    } else {
        issues.push_back("bundle.weights: missing (\"standard\" or explicit per-point lists)");
    }

    // flags
    if (jb.contains("flags") && jb["flags"].is_string() && jb["flags"] == "generic") {
        cfg.generic_flags = true;
        bool constant = true;
        for (int i = 0; i < cfg.pairing.omega.rows(); ++i)
            for (int k = 0; k < cfg.pairing.omega.cols(); ++k)
                if (!cfg.pairing.omega.at(i, k).is_constant()) constant = false;
        if (!constant)
            issues.push_back("bundle.flags: \"generic\" needs a constant pairing form");
    } else if (jb.contains("flags") && jb["flags"].is_array()) {
        const json& jf = jb["flags"];
        if (static_cast<int>(jf.size()) != r) {
            issues.push_back("bundle.flags: expected one matrix per marked point");
        } else {
            for (int p = 0; p < r; ++p) {
                std::ostringstream os;
                os << "bundle.flags[" << p << "]";
                RatMat f = parse_ratmat_field(jf[static_cast<std::size_t>(p)], n, os.str(), issues);
                if (f.rank() != n)
                    issues.push_back(os.str() + ": flag matrix not invertible");
                cfg.explicit_flags.push_back(std::move(f));
            }
        }
    } else {
        issues.push_back("bundle.flags: missing (\"generic\" or explicit matrices)");
    }

    // tasks
    if (!j.contains("tasks") || !j["tasks"].is_array() || j["tasks"].empty()) {
        issues.push_back("tasks: must be a nonempty array");
    } else {
        for (const auto& t : j["tasks"]) {
            const std::string name = t.is_string() ? t.get<std::string>() : "";
            bool known = false;
            for (const auto& k : known_tasks())
                if (k == name) known = true;
            if (!known)
                issues.push_back("tasks: unknown task \"" + name + "\"");
            else
                cfg.tasks.push_back(name);
        }
    }

    // dimension parameters
    if (j.contains("dimension_params")) {
        for (const auto& d : j["dimension_params"]) {
            ModuliDimParams params;
            const auto g = parse_group_token(d.value("group", ""));
            if (!g || *g == GroupKind::GL) {
                issues.push_back("dimension_params: group must be Sp, SO-even or SO-odd");
                continue;
            }
            params.group = *g;
            params.m = d.value("m", 0);
            params.g = d.value("g", 0);
            params.r = d.value("r", 0);
            if (params.m < 1 || params.g < 0 || params.r < 0)
                issues.push_back("dimension_params: need m >= 1, g >= 0, r >= 0");
            cfg.dimension_params.push_back(params);
        }
    }
    for (const auto& t : cfg.tasks)
        if (t == "dimensions" && cfg.dimension_params.empty())
            issues.push_back("tasks: \"dimensions\" requires dimension_params");

    if (!issues.empty()) throw ConfigError(issues);
    return cfg;
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({path + ": cannot open file"});
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::filesystem::path(path).stem().string());
}

namespace {

json standard_config_skeleton(const std::string& name, std::uint64_t seed,
                              const std::vector<std::string>& points, int rank,
                              const std::string& symmetry,
                              const std::vector<std::string>& tasks) {
    json j;
    j["schema"] = kConfigSchema;
    j["name"] = name;
    j["seed"] = seed;
    j["curve"]["points"] = points;
    j["bundle"]["splitting"] = std::vector<int>(static_cast<std::size_t>(rank), 0);
    j["bundle"]["weights"] = "standard";
    j["bundle"]["flags"] = "generic";
    j["pairing"]["symmetry"] = symmetry;
    j["pairing"]["target_degree"] = 0;
    j["pairing"]["omega"] = "standard";
    j["tasks"] = tasks;
    return j;
}

const std::vector<std::string> kAllTasks = {"sections", "hitchin",     "equivariance", "serre",
                                            "very-stable", "stability", "dimensions"};

json dimension_examples() {
    json arr = json::array();
    arr.push_back({{"group", "Sp"}, {"m", 1}, {"g", 2}, {"r", 1}});
    arr.push_back({{"group", "SO-even"}, {"m", 2}, {"g", 2}, {"r", 1}});
    arr.push_back({{"group", "SO-odd"}, {"m", 1}, {"g", 2}, {"r", 0}});
    return arr;
}

}  // namespace

std::vector<std::string> emit_examples(const std::string& directory) {
    namespace fs = std::filesystem;
    fs::create_directories(directory);
    std::vector<std::pair<std::string, json>> files;

    // Generic symplectic rank-2 instances (k = dim W_st is 1 resp. 2).
    files.emplace_back(
        "sp2_r4.json",
        standard_config_skeleton("sp2_r4", 11, {"0", "1", "-1", "2"}, 2, "antisymmetric",
                                 {"sections", "hitchin", "equivariance", "serre", "very-stable",
                                  "stability"}));
    {
        json j = standard_config_skeleton("sp2_r5", 12, {"0", "1", "-1", "2", "-2"}, 2,
                                          "antisymmetric", kAllTasks);
        j["dimension_params"] = dimension_examples();
        files.emplace_back("sp2_r5.json", j);
    }

    // Flag-tuned instance: the strong space contains the nilpotent field
    // [[z, -z^2], [1, -z]] because every deep flag line is its kernel (p, 1).
    {
        json j = standard_config_skeleton("sp2_r4_nilpotent", 13, {"0", "1", "-1", "2"}, 2,
                                          "antisymmetric",
                                          {"sections", "hitchin", "serre", "very-stable",
                                           "stability"});
        json flags = json::array();
        for (const char* p : {"0", "1", "-1", "2"})
            flags.push_back(json::array({json::array({"1", p}), json::array({"0", "1"})}));
        j["bundle"]["flags"] = flags;
        j["bundle"]["weights"] = "standard";
        files.emplace_back("sp2_r4_nilpotent.json", j);
    }

    // Unstable splitting: with three points the O(1) summand has pardeg 1
    // against slope 3/4.
    {
        json j = standard_config_skeleton("sp2_unstable", 14, {"0", "1", "-1"}, 2,
                                          "antisymmetric", {"sections", "very-stable", "stability"});
        j["bundle"]["splitting"] = std::vector<int>{1, -1};
        json w = json::array();
        for (int p = 0; p < 3; ++p) w.push_back(json::array({"0", "1/2"}));
        j["bundle"]["weights"] = w;
        files.emplace_back("sp2_unstable.json", j);
    }

    // Strictly semistable: two deep flag lines aligned with a constant direction.
    {
        json j = standard_config_skeleton("sp2_semistable", 15, {"0", "1", "-1", "2"}, 2,
                                          "antisymmetric", {"stability"});
        json w = json::array();
        for (int p = 0; p < 4; ++p) w.push_back(json::array({"0", "1/2"}));
        j["bundle"]["weights"] = w;
        json flags = json::array();
        flags.push_back(json::array({json::array({"1", "1"}), json::array({"0", "1"})}));
        flags.push_back(json::array({json::array({"1", "1"}), json::array({"0", "1"})}));
        flags.push_back(json::array({json::array({"1", "0"}), json::array({"0", "1"})}));
        flags.push_back(json::array({json::array({"1", "3"}), json::array({"1", "1"})}));
        j["bundle"]["flags"] = flags;
        files.emplace_back("sp2_semistable.json", j);
    }

    files.emplace_back(
        "sp4_r4.json",
        standard_config_skeleton("sp4_r4", 16, {"0", "1", "-1", "2"}, 4, "antisymmetric",
                                 {"sections", "hitchin", "equivariance", "serre"}));
    files.emplace_back(
        "so3_r4.json",
        standard_config_skeleton("so3_r4", 17, {"0", "1", "-1", "2"}, 3, "symmetric",
                                 {"sections", "hitchin", "equivariance"}));
    files.emplace_back(
        "so4_r4.json",
        standard_config_skeleton("so4_r4", 18, {"0", "1", "-1", "2"}, 4, "symmetric",
                                 {"sections", "hitchin", "equivariance", "serre"}));
    {
        json j = standard_config_skeleton("dimensions", 19, {"0"}, 2, "antisymmetric",
                                          {"dimensions"});
        j["dimension_params"] = dimension_examples();
        files.emplace_back("dimensions.json", j);
    }

    std::vector<std::string> written;
    for (const auto& [name, content] : files) {
        const fs::path path = fs::path(directory) / name;
        std::ofstream out(path);
        if (!out) throw std::runtime_error("emit_examples: cannot write " + path.string());
        out << content.dump(2) << "\n";
        written.push_back(name);
    }
    return written;
}

}  // namespace parhiggs
