// symsum: exact-arithmetic engine for minimality of symplectic sums.
//
// Exit codes (stable contract):
//   0  knef / minimal / success
//   1  not knef, ruled-section exception, or not minimal
//   2  parse or validation error
//   3  oracle-certificate disagreement (bug sentinel)
//   4  conditional verdict (minimal iff the other summand is)

#include "symsum/report.hpp"
#include "symsum/presets.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <thread>

using namespace symsum;

namespace {

struct RunConfig {
    i64 degree_bound = 6;
    i64 coeff_bound = 10;
    int jobs = 0; // 0 = hardware
    std::string format = "text";
    unsigned long long seed = 20240501ULL;
    bool oracle = false;

    int effective_jobs() const {
        if (jobs > 0) return jobs;
        unsigned hw = std::thread::hardware_concurrency();
        return hw ? static_cast<int>(hw) : 1;
    }
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--degree-bound", cfg.degree_bound, "exceptional search bound (default 6)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--coeff-bound", cfg.coeff_bound, "oracle/splitting box bound (default 10)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", cfg.jobs, "worker count (default: available cores)");
    cmd->add_option("--format", cfg.format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--seed", cfg.seed, "seed for randomized property checks");
}

void emit(const RunConfig& cfg, const std::string& text, const json& j) {
    if (cfg.format == "structured")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_invariants(const std::string& file, const RunConfig& cfg) {
    ParsedManifold pm = parse_manifold_file(file);
    emit(cfg, invariants_text(pm), invariants_json(pm));
    return 0;
}

int cmd_knef(const std::string& file, const std::string& surface, const RunConfig& cfg) {
    ParsedManifold pm = parse_manifold_file(file);
    const SurfaceInModel& F = pm.surface(surface);
    KnefCertificate cert = is_rationally_knef(pm.model, F, cfg.degree_bound, cfg.effective_jobs());

    OracleResult oracle;
    bool have_oracle = false;
    bool agree = true;
    if (cfg.oracle && cert.verdict != KnefVerdict::not_knef) {
        oracle = knef_oracle(pm.model, F, cfg.coeff_bound, cfg.effective_jobs());
        have_oracle = true;
        agree = (cert.verdict == KnefVerdict::knef) == !oracle.violation;
    }
    emit(cfg, knef_text(cert, have_oracle ? &oracle : nullptr, agree),
         knef_json(cert, have_oracle ? &oracle : nullptr, agree));
    if (!agree) return 3;
    return cert.verdict == KnefVerdict::knef ? 0 : 1;
}

int cmd_sum(const std::string& file, bool splittings, const RunConfig& cfg) {
    ParsedSum ps = parse_sum_file(file);
    auto val = validate_sum(ps.sum);
    if (!val.ok) {
        for (auto& v : val.violations) std::cerr << "error: " << v << "\n";
        return 2;
    }
    MinimalityDecision dec = decide_minimality(ps.sum, cfg.degree_bound, cfg.effective_jobs());
    SplittingEnumeration sp;
    bool have_sp = false;
    if (splittings) {
        sp = enumerate_can_splittings(ps.sum, cfg.coeff_bound, cfg.effective_jobs());
        have_sp = true;
    }
    emit(cfg, sum_text(dec, have_sp ? &sp : nullptr), sum_json(dec, have_sp ? &sp : nullptr));
    switch (dec.verdict) {
        case MinimalityVerdict::minimal_case_iii: return 0;
        case MinimalityVerdict::not_minimal_case_i: return 1;
        case MinimalityVerdict::conditional_case_ii:
            if (dec.resolved_minimal) return *dec.resolved_minimal ? 0 : 1;
            return 4;
    }
    return 2;
}

int cmd_geography_blocks(const RunConfig& cfg) {
    auto blocks = building_blocks(cfg.degree_bound, cfg.effective_jobs());
    emit(cfg, blocks_text(blocks), blocks_json(blocks));
    return 0;
}

int cmd_geography_region(i64 a_lo, i64 a_hi, i64 b_lo, i64 b_hi, i64 r, const RunConfig& cfg) {
    auto pts = enumerate_region(a_lo, a_hi, b_lo, b_hi, r);
    emit(cfg, region_text(pts, r), region_json(pts, r));
    return 0;
}

int cmd_geography_chain(const std::string& builtin, const RunConfig& cfg) {
    std::vector<ChainStage> stages;
    if (builtin == "s11") stages = s11_stages();
    else if (builtin == "p1-selfsum") stages = p1_selfsum_stages();
    else if (builtin == "failure-demo") stages = failure_demo_stages();
    else {
        std::cerr << "error: unknown built-in chain '" << builtin
                  << "' (s11 | p1-selfsum | failure-demo)\n";
        return 2;
    }
    ChainReport rep = verify_chain(stages, cfg.degree_bound, cfg.effective_jobs());
    emit(cfg, chain_text(rep), chain_json(rep));
    return rep.all_minimal ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic minimality engine for symplectic sums"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string manifold_file, surface_name, sum_file, chain_builtin = "s11";
    bool with_splittings = false;
    i64 a_lo = 0, a_hi = 48, b_lo = 0, b_hi = 48, region_r = 0;

    auto* inv = app.add_subcommand("invariants", "lattice, K, Chern pair and surfaces of a manifold");
    inv->add_option("manifold", manifold_file, "manifold descriptor file")->required();
    add_common(inv, cfg);

    auto* knef = app.add_subcommand("knef", "certify a surface rationally K-nef");
    knef->add_option("manifold", manifold_file, "manifold descriptor file")->required();
    knef->add_option("surface", surface_name, "surface name in the descriptor")->required();
    knef->add_flag("--oracle", cfg.oracle, "cross-check against the brute-force oracle");
    add_common(knef, cfg);

    auto* sum = app.add_subcommand("sum", "decide minimality of a symplectic sum");
    sum->add_option("sum", sum_file, "sum descriptor file")->required();
    sum->add_flag("--splittings", with_splittings, "enumerate relation-(-1) splittings");
    add_common(sum, cfg);

    auto* geo = app.add_subcommand("geography", "building blocks, realizable region, chains");
    geo->require_subcommand(1);
    auto* blocks = geo->add_subcommand("blocks", "the seven building blocks, verified");
    add_common(blocks, cfg);
    auto* region = geo->add_subcommand("region", "realizable (c1^2, c2) pairs in a box");
    region->add_option("--a-min", a_lo, "c1^2 lower bound");
    region->add_option("--a-max", a_hi, "c1^2 upper bound");
    region->add_option("--b-min", b_lo, "c2 lower bound");
    region->add_option("--b-max", b_hi, "c2 upper bound");
    region->add_option("-r,--r", region_r, "group constant r(G)");
    add_common(region, cfg);
    auto* chain = geo->add_subcommand("chain", "verify an iterated-sum chain");
    chain->add_option("--builtin", chain_builtin, "s11 | p1-selfsum | failure-demo");
    add_common(chain, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (inv->parsed()) return cmd_invariants(manifold_file, cfg);
        if (knef->parsed()) return cmd_knef(manifold_file, surface_name, cfg);
        if (sum->parsed()) return cmd_sum(sum_file, with_splittings, cfg);
        if (geo->parsed()) {
            if (blocks->parsed()) return cmd_geography_blocks(cfg);
            if (region->parsed())
                return cmd_geography_region(a_lo, a_hi, b_lo, b_hi, region_r, cfg);
            if (chain->parsed()) return cmd_geography_chain(chain_builtin, cfg);
        }
    } catch (const DescriptorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
