#include "parhiggs/report.hpp"

#include <fstream>

#include "json.hpp"

#include "parhiggs/generators.hpp"
#include "parhiggs/stability.hpp"

namespace parhiggs {

using nlohmann::json;

namespace {

json poly_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

json polymat_json(const PolyMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(poly_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json diagnostics_json(const Diagnostics& d) {
    json j;
    j["ok"] = d.ok();
    j["violations"] = d.violations;
    return j;
}

json locus_json(const NilpotentLocusResult& res) {
    json j;
    j["verdict"] = verdict_name(res.verdict);
    j["method"] = res.method;
    if (res.empty_over_closure.has_value()) j["empty_over_closure"] = *res.empty_over_closure;
    if (!res.detail.empty()) j["detail"] = res.detail;
    if (res.budget_used > 0) j["budget_used"] = res.budget_used;
    if (res.witness) {
        j["witness"] = polymat_json(*res.witness);
        json coords = json::array();
        for (const auto& c : res.witness_coords) coords.push_back(c.str());
        j["witness_coords"] = coords;
    }
    return j;
}

json subbundle_json(const SubbundleData& f) {
    json j;
    j["degree"] = f.degree;
    json sec = json::array();
    for (const auto& s : f.section) sec.push_back(poly_json(s));
    j["section"] = sec;
    j["incidence"] = f.incidence;
    json w = json::array();
    for (const auto& a : f.induced_weights) w.push_back(a.str());
    j["induced_weights"] = w;
    j["pardeg"] = subbundle_pardeg(f).str();
    return j;
}

GroupKind pairing_group(const PairingForm& p, int rank) {
    if (p.symmetry == PairingSymmetry::Antisymmetric) return GroupKind::Sp;
    return (rank % 2 == 0) ? GroupKind::SOEven : GroupKind::SOOdd;
}

json run_sections(const ParabolicBundle& e, const PairingForm& p) {
    json j;
    const int k = e.curve.twist();
    j["twist"] = k;
    const auto strong = compatible_higgs_space(e, p, SectionMode::Strong);
    const auto parab = compatible_higgs_space(e, p, SectionMode::Parabolic);
    j["strong_dimension"] = strong.dimension();
    j["parabolic_dimension"] = parab.dimension();
    j["hom_strong_dimension"] = hom_section_space(e, k, SectionMode::Strong).dimension();
    j["hom_parabolic_dimension"] = hom_section_space(e, k, SectionMode::Parabolic).dimension();
    json basis = json::array();
    for (const auto& b : strong.basis) basis.push_back(polymat_json(b));
    j["strong_basis"] = basis;
    json pbasis = json::array();
    for (const auto& b : parab.basis) pbasis.push_back(polymat_json(b));
    j["parabolic_basis"] = pbasis;
    return j;
}

json run_hitchin(const ParabolicBundle& e, const PairingForm& p) {
    json j;
    const GroupKind group = pairing_group(p, e.rank());
    j["group"] = group_name(group, e.rank());
    const auto strong = compatible_higgs_space(e, p, SectionMode::Strong);
    json images = json::array();
    for (const auto& b : strong.basis) {
        const auto image = hitchin_image(b, group, &p);
        json entry;
        json coeffs = json::array();
        for (const auto& c : image.coefficients) coeffs.push_back(poly_json(c));
        entry["coefficients"] = coeffs;
        entry["strong_vanishing"] = strong_vanishing_check(image, e.curve);
        entry["residue_nilpotent"] = residue_nilpotency_check(b, e);
        entry["nilpotent"] = nilpotency_check(b);
        images.push_back(std::move(entry));
    }
    j["strong_basis_images"] = images;
    return j;
}

json run_equivariance(const ParabolicBundle& e, const PairingForm& p, std::uint64_t seed) {
    json j;
    const GroupKind group = pairing_group(p, e.rank());
    const auto space = compatible_higgs_space(e, p, SectionMode::Parabolic);
    const int instances = space.dimension() == 0 ? 0 : 20;
    SplitMix64 rng(seed ^ 0xEC41A7B1ULL);
    bool all_pass = true;
    for (int i = 0; i < instances; ++i) {
        const PolyMat phi = random_element(rng, space);
        Rational t(0);
        while (t.is_zero()) t = random_rational(rng, 7, 3);
        if (!equivariance_check(phi, t, group, &p)) all_pass = false;
    }
    j["group"] = group_name(group, e.rank());
    j["instances"] = instances;
    j["all_pass"] = all_pass;
    if (instances == 0) j["note"] = "compatible space is zero; nothing to scale";
    return j;
}

json run_serre(const ParabolicBundle& e, const PairingForm& p) {
    const auto rep = serre_duality_check(e, p);
    json j;
    j["dim_strong"] = rep.dim_strong;
    j["h0"] = rep.h0;
    j["sheaf_rank"] = rep.sheaf_rank;
    j["sheaf_degree"] = rep.sheaf_degree;
    j["chi"] = rep.chi;
    j["h1"] = rep.h1;
    j["equal"] = rep.equal;
    j["conditions_per_point"] = rep.conditions_per_point;
    return j;
}

json run_very_stable(const ParabolicBundle& e, const PairingForm& p, std::uint64_t seed) {
    LocusOptions opts;
    opts.seed = seed ^ 0x57AB1E00ULL;
    const auto rep = very_stability_verdict(e, p, opts);
    json j;
    j["dim_strong"] = rep.dim_strong;
    j["dim_parabolic"] = rep.dim_parabolic;
    j["strong"] = locus_json(rep.strong);
    j["parabolic"] = locus_json(rep.parabolic);
    j["strongly_very_stable"] =
        rep.strong.verdict == LocusVerdict::Inconclusive
            ? json("inconclusive")
            : json(rep.strongly_very_stable());
    j["very_stable"] = rep.parabolic.verdict == LocusVerdict::Inconclusive
                           ? json("inconclusive")
                           : json(rep.very_stable());
    j["certificate"] = rep.certificate;
    if (!rep.fiber_sample.empty()) {
        json orbit = json::array();
        for (const auto& m : rep.fiber_sample) orbit.push_back(polymat_json(m));
        j["fiber_sample"] = orbit;
    }
    return j;
}

json run_stability(const ParabolicBundle& e, const PairingForm& p) {
    const auto v = stability_decide_rank2(e, p, nullptr);
    json j;
    j["verdict"] = stability_name(v.kind);
    j["bundle_slope"] = v.bundle_slope.str();
    j["complete"] = v.search_complete;
    if (!v.note.empty()) j["note"] = v.note;
    if (v.witness) {
        j["witness"] = subbundle_json(*v.witness);
        j["witness_pardeg"] = v.witness_pardeg.str();
    }
    return j;
}

json run_dimensions(const std::vector<ModuliDimParams>& params) {
    json arr = json::array();
    for (const auto& p : params) {
        json j;
        switch (p.group) {
            case GroupKind::Sp: j["group"] = "Sp"; break;
            case GroupKind::SOEven: j["group"] = "SO-even"; break;
            case GroupKind::SOOdd: j["group"] = "SO-odd"; break;
            default: j["group"] = "GL"; break;
        }
        j["m"] = p.m;
        j["g"] = p.g;
        j["r"] = p.r;
        j["dimension"] = moduli_dimension(p);
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace

std::string run_report(const JobConfig& cfg) {
    json rep;
    rep["schema"] = kReportSchema;
    rep["tool"] = {{"name", "parhiggs"}, {"version", kToolVersion}};
    rep["config_name"] = cfg.name;
    rep["seed"] = cfg.seed;

    const ParabolicBundle e = cfg.bundle();
    rep["bundle_check"] = diagnostics_json(validate(e));
    rep["pairing_check"] = diagnostics_json(check_pairing_iso(e, cfg.pairing));

    json tasks;
    for (const auto& task : cfg.tasks) {
        try {
            if (task == "sections") tasks[task] = run_sections(e, cfg.pairing);
            else if (task == "hitchin") tasks[task] = run_hitchin(e, cfg.pairing);
            else if (task == "equivariance") tasks[task] = run_equivariance(e, cfg.pairing, cfg.seed);
            else if (task == "serre") tasks[task] = run_serre(e, cfg.pairing);
            else if (task == "very-stable") tasks[task] = run_very_stable(e, cfg.pairing, cfg.seed);
            else if (task == "stability") tasks[task] = run_stability(e, cfg.pairing);
            else if (task == "dimensions") tasks[task] = run_dimensions(cfg.dimension_params);
        } catch (const std::exception& err) {
            tasks[task] = {{"error", err.what()}};
        }
    }
    rep["tasks"] = tasks;
    return rep.dump(2) + "\n";
}

void write_report(const JobConfig& cfg, const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("write_report: cannot open " + out_path);
    out << run_report(cfg);
}

}  // namespace parhiggs
