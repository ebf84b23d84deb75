// ttc: exact tree-code and triangular-total-nonsingularity toolkit.
//
// Exit codes: 0 = success / verdict true; 1 = verdict false (witness in the
// JSON output); 2 = usage or data error.  Randomized commands require --seed
// and identical invocations are bit-identical.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ttc/birkhoff.hpp"
#include "ttc/concat.hpp"
#include "ttc/families.hpp"
#include "ttc/growth.hpp"
#include "ttc/io.hpp"
#include "ttc/treecode.hpp"
#include "ttc/ttn.hpp"

using json = nlohmann::json;
using namespace ttc;

namespace {

json verdict_json(const Verdict& v) {
    json j;
    j["holds"] = v.holds;
    if (v.witness) {
        j["witness"] = {{"rows", v.witness->rows}, {"cols", v.witness->cols}};
    }
    j["minors_checked"] = v.minors_checked;
    return j;
}

json distance_json(const DistanceReport& r, const FieldPtr& F) {
    json seg = json::array();
    for (const auto& s : r.segment) seg.push_back(F->to_string(s));
    return json{{"delta", rat_str(r.delta)},
                {"weight_mode", r.mode == WeightMode::F ? "F" : "Sigma"},
                {"witness", {{"k", r.k}, {"l", r.l}, {"segment", seg}}}};
}

void emit(bool as_json, const json& j, const std::string& human) {
    if (as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << human << "\n";
}

std::vector<Scalar> parse_scalar_list(const FieldPtr& F, const std::string& s) {
    std::vector<Scalar> out;
    char sep;
    if (s.find(';') != std::string::npos) {
        sep = ';';
    } else if (F->kind() == FieldKind::Extension) {
        // a single extension scalar (commas belong to its coefficients)
        out.push_back(F->parse(s));
        return out;
    } else {
        sep = ',';
    }
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, sep))
        if (!tok.empty()) out.push_back(F->parse(tok));
    return out;
}

std::vector<std::size_t> parse_orders(const std::string& s) {
    std::vector<std::size_t> out;
    if (s.empty()) return out;
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoul(tok));
    return out;
}

// "0=1,2=3" -> orders and values
std::pair<std::vector<std::size_t>, std::vector<std::string>> parse_conditions(
    const std::string& s) {
    std::vector<std::size_t> orders;
    std::vector<std::string> values;
    if (s.empty()) return {orders, values};
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw Error("BadCondition", "expected order=value, got '" + tok + "'");
        orders.push_back(std::stoul(tok.substr(0, eq)));
        values.push_back(tok.substr(eq + 1));
    }
    return {orders, values};
}

ScanMode mode_from(const std::string& s) {
    if (s == "lower") return ScanMode::Lower;
    if (s == "upper") return ScanMode::Upper;
    if (s == "all") return ScanMode::All;
    throw Error("BadMode", "unknown scan mode '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tree codes and triangular totally nonsingular matrices"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- gen ------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a matrix from a named family");
    std::string g_family, g_field = "Q", g_a, g_b, g_g, g_h, g_xs, g_out;
    std::size_t g_n = 0, g_rows = 0, g_cols = 0, g_m = 0, g_k = 0;
    u64 g_p = 2, g_seed = 0;
    std::string g_eps = "1/4";
    bool g_json = false;
    gen->add_option("--family", g_family,
                    "cauchy|cauchy-like|hilbert|pascal|binomial|vandermonde|singleton|wn|block")
        ->required();
    gen->add_option("--field", g_field, "field spec: Q | p | 'p k c0 ... ck'");
    gen->add_option("--a", g_a, "node list (or element for singleton)");
    gen->add_option("--b", g_b, "node list");
    gen->add_option("--gs", g_g, "row scalings (cauchy-like)");
    gen->add_option("--hs", g_h, "column scalings (cauchy-like)");
    gen->add_option("--xs", g_xs, "vandermonde nodes");
    gen->add_option("--n", g_n, "order (pascal/binomial/singleton/wn)");
    gen->add_option("--rows", g_rows, "row count");
    gen->add_option("--cols", g_cols, "column count");
    gen->add_option("--p", g_p, "prime (wn)");
    gen->add_option("--k", g_k, "block code input bits");
    gen->add_option("--m", g_m, "block code output bits");
    gen->add_option("--eps", g_eps, "block code relative distance");
    gen->add_option("--seed", g_seed, "seed (wn/block)");
    gen->add_option("-o,--out", g_out, "output matrix file")->required();
    gen->add_flag("--json", g_json);
    gen->callback([&] {
        FieldPtr F = parse_field_spec(g_field);
        std::optional<Matrix> m;
        std::vector<std::string> comments;
        if (g_family == "cauchy" || g_family == "cauchy-like") {
            auto a = parse_scalar_list(F, g_a), b = parse_scalar_list(F, g_b);
            std::vector<Scalar> gg, hh;
            if (!g_g.empty()) gg = parse_scalar_list(F, g_g);
            if (!g_h.empty()) hh = parse_scalar_list(F, g_h);
            m = cauchy_like(F, a, b, gg, hh);
        } else if (g_family == "hilbert") {
            m = hilbert(F, g_rows, g_cols);
        } else if (g_family == "pascal") {
            m = pascal_family(g_n, PascalKind::Full);
            if (F->kind() == FieldKind::Prime) m = m->mod_p(F);
        } else if (g_family == "binomial") {
            m = pascal_family(g_n, PascalKind::LowerBinomial);
            if (F->kind() == FieldKind::Prime) m = m->mod_p(F);
        } else if (g_family == "vandermonde") {
            m = vandermonde(F, g_rows, parse_scalar_list(F, g_xs));
        } else if (g_family == "singleton") {
            m = singleton_matrix(F, F->parse(g_a), g_n);
        } else if (g_family == "wn") {
            auto [ef, inst] = wn_field_instance(g_n, g_p, g_seed);
            comments.push_back("W_" + std::to_string(g_n) + " over F_" + std::to_string(g_p) +
                               "[x]/(f), f degree " + std::to_string(ef->degree()));
            m = inst;
        } else if (g_family == "block") {
            m = find_block_code(g_k, g_m, rat_parse(g_eps), g_seed);
        } else {
            throw Error("BadFamily", "unknown family '" + g_family + "'");
        }
        write_matrix_file(g_out, *m, comments);
        emit(g_json,
             json{{"rows", m->rows()}, {"cols", m->cols()}, {"field", m->field()->spec_string()}},
             "wrote " + std::to_string(m->rows()) + "x" + std::to_string(m->cols()) +
                 " matrix to " + g_out);
    });

    // ---- ttn / tns check --------------------------------------------------
    auto* ttn_cmd = app.add_subcommand("ttn", "triangular total nonsingularity");
    auto* ttn_check = ttn_cmd->add_subcommand("check", "scan admissible minors");
    std::string tc_matrix, tc_mode = "lower";
    unsigned tc_threads = 1;
    bool tc_json = false;
    ttn_check->add_option("--matrix", tc_matrix)->required();
    ttn_check->add_option("--mode", tc_mode, "lower|upper");
    ttn_check->add_option("--threads", tc_threads);
    ttn_check->add_flag("--json", tc_json);
    ttn_check->callback([&] {
        Matrix m = read_matrix_file(tc_matrix);
        Verdict v = nonsingularity_scan(m, mode_from(tc_mode), tc_threads);
        emit(tc_json, verdict_json(v),
             v.holds ? "triangular totally nonsingular (" + std::to_string(v.minors_checked) +
                           " minors)"
                     : "fails at an admissible minor; rerun with --json for the witness");
        exit_code = v.holds ? 0 : 1;
    });

    auto* tns_cmd = app.add_subcommand("tns", "total nonsingularity");
    auto* tns_check = tns_cmd->add_subcommand("check", "scan all square submatrices");
    std::string nc_matrix;
    unsigned nc_threads = 1;
    bool nc_json = false;
    tns_check->add_option("--matrix", nc_matrix)->required();
    tns_check->add_option("--threads", nc_threads);
    tns_check->add_flag("--json", nc_json);
    tns_check->callback([&] {
        Matrix m = read_matrix_file(nc_matrix);
        Verdict v = nonsingularity_scan(m, ScanMode::All, nc_threads);
        emit(nc_json, verdict_json(v),
             v.holds ? "totally nonsingular (" + std::to_string(v.minors_checked) + " minors)"
                     : "fails at a square submatrix; rerun with --json for the witness");
        exit_code = v.holds ? 0 : 1;
    });

    // ---- lu check ---------------------------------------------------------
    auto* lu_cmd = app.add_subcommand("lu", "LU-factor properties");
    auto* lu_check = lu_cmd->add_subcommand("check", "cryer-ttn or band property");
    std::string lc_matrix, lc_prop = "cryer-ttn";
    bool lc_json = false;
    lu_check->add_option("--matrix", lc_matrix)->required();
    lu_check->add_option("--property", lc_prop, "cryer-ttn|band");
    lu_check->add_flag("--json", lc_json);
    lu_check->callback([&] {
        Matrix m = read_matrix_file(lc_matrix);
        if (lc_prop == "cryer-ttn") {
            CryerReport r = lu_cryer_check(m);
            json j{{"holds", r.holds},
                   {"l", verdict_json(r.lower)},
                   {"u", verdict_json(r.upper)}};
            emit(lc_json, j, r.holds ? "both LU factors are triangular totally nonsingular"
                                     : "an LU factor fails; rerun with --json");
            exit_code = r.holds ? 0 : 1;
        } else if (lc_prop == "band") {
            Verdict v = lu_band_check(m);
            emit(lc_json, verdict_json(v),
                 v.holds ? "band property holds" : "band property fails; rerun with --json");
            exit_code = v.holds ? 0 : 1;
        } else {
            throw Error("BadProperty", "unknown property '" + lc_prop + "'");
        }
    });

    // ---- scan primes --------------------------------------------------------
    auto* scan_cmd = app.add_subcommand("scan", "prime-field scans");
    auto* scan_primes_cmd = scan_cmd->add_subcommand("primes", "reduce mod p over a range");
    std::string sp_matrix, sp_family, sp_mode = "lower";
    std::size_t sp_n = 0;
    u64 sp_pmin = 2, sp_pmax = 97;
    unsigned sp_threads = 1;
    bool sp_json = false;
    scan_primes_cmd->add_option("--matrix", sp_matrix, "integral matrix over Q");
    scan_primes_cmd->add_option("--family", sp_family, "pascal|binomial");
    scan_primes_cmd->add_option("--n", sp_n);
    scan_primes_cmd->add_option("--pmin", sp_pmin);
    scan_primes_cmd->add_option("--pmax", sp_pmax);
    scan_primes_cmd->add_option("--mode", sp_mode, "lower|upper|all");
    scan_primes_cmd->add_option("--threads", sp_threads);
    scan_primes_cmd->add_flag("--json", sp_json);
    scan_primes_cmd->callback([&] {
        std::optional<Matrix> m;
        if (!sp_matrix.empty()) {
            m = read_matrix_file(sp_matrix);
        } else if (sp_family == "pascal") {
            m = pascal_family(sp_n, PascalKind::Full);
        } else if (sp_family == "binomial") {
            m = pascal_family(sp_n, PascalKind::LowerBinomial);
        } else {
            throw Error("BadFamily", "scan primes needs --matrix or --family pascal|binomial");
        }
        ScanReport rep = scan_primes(*m, sp_pmin, sp_pmax, mode_from(sp_mode), sp_threads);
        json results = json::array();
        for (const auto& r : rep.results) {
            json e = verdict_json(r.verdict);
            e["p"] = r.p;
            results.push_back(e);
        }
        json j{{"results", results}};
        j["minimal_passing"] = rep.minimal_passing ? json(*rep.minimal_passing) : json(nullptr);
        emit(sp_json, j,
             rep.minimal_passing
                 ? "minimal passing prime " + std::to_string(*rep.minimal_passing)
                 : "no passing prime in range");
        exit_code = rep.minimal_passing ? 0 : 1;
    });

    // ---- code ---------------------------------------------------------------
    auto* code_cmd = app.add_subcommand("code", "tree-code operations");

    auto* mindist = code_cmd->add_subcommand("mindist", "minimum relative distance");
    std::string md_gen, md_pcheck, md_method = "bruteforce";
    bool md_sigma = false, md_json = false;
    std::size_t md_d = 2;
    mindist->add_option("--generator", md_gen);
    mindist->add_option("--pcheck", md_pcheck);
    mindist->add_option("-d,--width", md_d, "block width of the code");
    mindist->add_option("--method", md_method, "bruteforce|pcheck");
    mindist->add_flag("--sigma", md_sigma, "count Sigma symbols instead of F coordinates");
    mindist->add_flag("--json", md_json);
    mindist->callback([&] {
        WeightMode mode = md_sigma ? WeightMode::Sigma : WeightMode::F;
        DistMethod method =
            md_method == "pcheck" ? DistMethod::Pcheck : DistMethod::Bruteforce;
        FieldPtr F;
        DistanceReport rep = [&] {
            if (!md_gen.empty()) {
                TreeCode code = TreeCode::from_generator(read_matrix_file(md_gen), md_d);
                F = code.field;
                return min_rel_distance(code, mode, method);
            }
            if (md_pcheck.empty())
                throw Error("BadUsage", "mindist needs --generator or --pcheck");
            NormalFormPcheck pc = normalize_pcheck(read_matrix_file(md_pcheck), md_d);
            F = pc.m.field();
            if (method == DistMethod::Pcheck && mode == WeightMode::F)
                return min_rel_distance_pcheck(pc);
            return min_rel_distance(generator_from_pcheck(pc), mode, method);
        }();
        emit(md_json, distance_json(rep, F), "delta = " + rat_str(rep.delta));
    });

    auto* mds = code_cmd->add_subcommand("mds", "MDS verdict for a rate-1/2 code");
    std::string mm_pcheck, mm_method = "columns";
    bool mm_json = false;
    mds->add_option("--pcheck", mm_pcheck)->required();
    mds->add_option("--method", mm_method, "columns|distance");
    mds->add_flag("--json", mm_json);
    mds->callback([&] {
        NormalFormPcheck pc = normalize_pcheck(read_matrix_file(mm_pcheck), 2);
        MdsVerdict v = is_mds(pc, mm_method == "distance" ? MdsMethod::Distance
                                                          : MdsMethod::Columns);
        json j{{"mds", v.mds}, {"method", mm_method}};
        if (v.witness) j["witness"] = *v.witness;
        if (v.delta) j["delta"] = rat_str(*v.delta);
        j["tuples_checked"] = v.tuples_checked;
        emit(mm_json, j, v.mds ? "MDS tree code" : "not MDS; rerun with --json");
        exit_code = v.mds ? 0 : 1;
    });

    auto* normalize = code_cmd->add_subcommand("normalize", "parity check to normal form");
    std::string nz_pcheck, nz_out;
    std::size_t nz_d = 2;
    bool nz_json = false;
    normalize->add_option("--pcheck", nz_pcheck)->required();
    normalize->add_option("-d,--width", nz_d);
    normalize->add_option("-o,--out", nz_out)->required();
    normalize->add_flag("--json", nz_json);
    normalize->callback([&] {
        NormalFormPcheck pc = normalize_pcheck(read_matrix_file(nz_pcheck), nz_d);
        write_matrix_file(nz_out, pc.m);
        emit(nz_json, json{{"n", pc.n}, {"d", pc.d}}, "wrote normal form to " + nz_out);
    });

    auto* build_mds =
        code_cmd->add_subcommand("build-mds", "MDS generator from a lower TTN matrix");
    std::string bm_t, bm_out, bm_pcheck_out;
    bool bm_json = false;
    build_mds->add_option("--t,--matrix", bm_t)->required();
    build_mds->add_option("-o,--out", bm_out)->required();
    build_mds->add_option("--pcheck-out", bm_pcheck_out);
    build_mds->add_flag("--json", bm_json);
    build_mds->callback([&] {
        Matrix t = read_matrix_file(bm_t);
        try {
            TreeCode code = mds_generator(t);
            write_matrix_file(bm_out, code.gen);
            if (!bm_pcheck_out.empty()) write_matrix_file(bm_pcheck_out, *code.pcheck);
            emit(bm_json, json{{"mds", true}, {"n", code.n}},
                 "wrote MDS generator to " + bm_out);
        } catch (const NotTTN& e) {
            emit(bm_json,
                 json{{"mds", false}, {"witness", {{"rows", e.rows}, {"cols", e.cols}}}},
                 "input is not triangular totally nonsingular");
            exit_code = 1;
        }
    });

    auto* extract = code_cmd->add_subcommand("extract", "triangular matrix from a normal form");
    std::string ex_pcheck, ex_out;
    bool ex_json = false;
    extract->add_option("--pcheck", ex_pcheck)->required();
    extract->add_option("-o,--out", ex_out)->required();
    extract->add_flag("--json", ex_json);
    extract->callback([&] {
        NormalFormPcheck pc = normalize_pcheck(read_matrix_file(ex_pcheck), 2);
        ExtractResult r = extract_triangular(pc);
        write_matrix_file(ex_out, r.t);
        emit(ex_json, json{{"swapped_blocks", r.swapped_blocks}},
             "wrote triangular factor to " + ex_out +
                 (r.swapped_blocks.empty() ? "" : " (with column swaps)"));
    });

    // ---- search -------------------------------------------------------------
    auto* search_cmd = app.add_subcommand("search", "randomized and exhaustive code search");

    auto* grow = search_cmd->add_subcommand("grow", "grow a code with verified distance");
    GrowthParams gp;
    std::string gr_delta = "1/2", gr_out;
    bool gr_toeplitz = false, gr_json = false;
    grow->add_option("--q", gp.q)->required();
    grow->add_option("--d", gp.d)->required();
    grow->add_option("--delta", gr_delta)->required();
    grow->add_option("--n", gp.n)->required();
    grow->add_option("--seed", gp.seed)->required();
    grow->add_option("--retries", gp.retry_limit);
    grow->add_flag("--toeplitz", gr_toeplitz, "block-Toeplitz (cyclic) growth");
    grow->add_option("-o,--out", gr_out, "generator matrix file");
    grow->add_flag("--json", gr_json);
    grow->callback([&] {
        gp.delta = rat_parse(gr_delta);
        try {
            GrowResult r = gr_toeplitz ? grow_toeplitz(gp) : grow_random(gp);
            if (!gr_out.empty()) write_matrix_file(gr_out, r.code.gen);
            json j{{"achieved", true},
                   {"delta", rat_str(r.dist.delta)},
                   {"target", rat_str(gp.delta)},
                   {"n", r.code.n},
                   {"d", r.code.d},
                   {"attempts", r.attempts},
                   {"failures", r.failures},
                   {"entropy",
                    {{"satisfied", r.entropy.satisfied},
                     {"value", r.entropy.value},
                     {"margin", r.entropy.margin}}}};
            emit(gr_json, j, "grew a code with delta = " + rat_str(r.dist.delta));
        } catch (const RetriesExhausted& e) {
            emit(gr_json, json{{"achieved", false}, {"failed_step", e.step}},
                 "retries exhausted at step " + std::to_string(e.step));
            exit_code = 1;
        }
    });

    auto* exhaustive = search_cmd->add_subcommand("exhaustive", "scan all block-Toeplitz codes");
    u64 eh_q = 2;
    std::size_t eh_d = 2, eh_len = 1;
    std::string eh_delta = "1/2", eh_out;
    bool eh_json = false;
    exhaustive->add_option("--q", eh_q)->required();
    exhaustive->add_option("--d", eh_d)->required();
    exhaustive->add_option("--delta", eh_delta)->required();
    exhaustive->add_option("--len", eh_len)->required();
    exhaustive->add_option("-o,--out", eh_out);
    exhaustive->add_flag("--json", eh_json);
    exhaustive->callback([&] {
        auto r = exhaustive_short(eh_q, eh_d, rat_parse(eh_delta), eh_len);
        if (!r) {
            emit(eh_json, json{{"found", false}}, "no code in the family reaches the bound");
            exit_code = 1;
            return;
        }
        if (!eh_out.empty()) write_matrix_file(eh_out, r->code.gen);
        emit(eh_json,
             json{{"found", true},
                  {"delta", rat_str(r->dist.delta)},
                  {"candidates_scanned", r->attempts}},
             "found a code with delta = " + rat_str(r->dist.delta));
    });

    // ---- concat ---------------------------------------------------------------
    auto* concat_cmd = app.add_subcommand("concat", "alphabet reduction to a binary code");
    std::string cc_long, cc_short, cc_block, cc_out;
    bool cc_json = false, cc_verify = false;
    std::size_t cc_long_d = 2;
    concat_cmd->add_option("--long", cc_long, "long code generator (over F_{2^l})")->required();
    concat_cmd->add_option("--long-d", cc_long_d, "block width of the long code");
    concat_cmd->add_option("--short", cc_short, "short cyclic binary generator")->required();
    concat_cmd->add_option("--block", cc_block, "binary block code generator")->required();
    concat_cmd->add_option("-o,--out", cc_out)->required();
    concat_cmd->add_flag("--verify", cc_verify, "brute-force the output distance");
    concat_cmd->add_flag("--json", cc_json);
    concat_cmd->callback([&] {
        Matrix lg = read_matrix_file(cc_long);
        Matrix sg = read_matrix_file(cc_short);
        Matrix bg = read_matrix_file(cc_block);
        std::size_t short_d = sg.cols() / sg.rows();
        ConcatSpec spec{TreeCode::from_generator(lg, cc_long_d),
                        TreeCode::from_generator(sg, short_d), bg};
        ConcatResult r = concatenate(spec);
        std::vector<std::string> comments;
        comments.push_back("concatenated tree code: ell=" + std::to_string(r.ell) +
                           " d=" + std::to_string(r.d) + " d''=" + std::to_string(r.d_short) +
                           " d*=" + std::to_string(r.d_star));
        if (spec.long_code.field->kind() == FieldKind::Extension)
            comments.push_back("long-code field: " + spec.long_code.field->spec_string());
        write_matrix_file(cc_out, r.code.gen, comments);
        json j{{"n_prime", r.code.n}, {"d_prime", r.code.d}, {"ell", r.ell},
               {"d", r.d},           {"d_short", r.d_short}, {"d_star", r.d_star}};
        if (cc_verify) j["delta"] = rat_str(min_rel_distance(r.code).delta);
        emit(cc_json, j, "wrote binary tree code to " + cc_out);
    });

    // ---- birkhoff ---------------------------------------------------------------
    auto* birk = app.add_subcommand("birkhoff", "two-node Birkhoff interpolation");

    auto* solve = birk->add_subcommand("solve", "solve an interpolation instance");
    std::string bs_a, bs_b, bs_left, bs_right, bs_field = "Q";
    bool bs_standard = false, bs_json = false;
    solve->add_option("--a", bs_a)->required();
    solve->add_option("--b", bs_b)->required();
    solve->add_option("--left", bs_left, "conditions at a: order=value,...");
    solve->add_option("--right", bs_right, "conditions at b: order=value,...");
    solve->add_option("--field", bs_field);
    solve->add_flag("--standard", bs_standard, "standard instead of Hasse derivatives");
    solve->add_flag("--json", bs_json);
    solve->callback([&] {
        FieldPtr F = parse_field_spec(bs_field);
        auto [jset, avals_s] = parse_conditions(bs_left);
        auto [kset, bvals_s] = parse_conditions(bs_right);
        BirkhoffInstance inst{F->parse(bs_a), F->parse(bs_b), jset, kset, {}, {}};
        for (const auto& s : avals_s) inst.avals.push_back(F->parse(s));
        for (const auto& s : bvals_s) inst.bvals.push_back(F->parse(s));
        DerivKind kind = bs_standard ? DerivKind::Standard : DerivKind::Hasse;
        try {
            Poly f = solve_birkhoff(inst, F, kind);
            json coeffs = json::array();
            for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(f.deg(), 0)); ++i)
                coeffs.push_back(F->to_string(f.coeff(i)));
            emit(bs_json, json{{"solvable", true}, {"coefficients", coeffs}, {"degree", f.deg()}},
                 "f(x) = " + f.str());
        } catch (const SingularSystem&) {
            emit(bs_json, json{{"solvable", false}}, "system is singular");
            exit_code = 1;
        }
    });

    auto* polya = birk->add_subcommand("polya", "test the counting condition");
    std::string bp_left, bp_right;
    bool bp_json = false;
    polya->add_option("--left", bp_left, "orders at a, comma separated");
    polya->add_option("--right", bp_right, "orders at b");
    polya->add_flag("--json", bp_json);
    polya->callback([&] {
        bool ok = polya_condition(parse_orders(bp_left), parse_orders(bp_right));
        emit(bp_json, json{{"polya", ok}}, ok ? "condition holds" : "condition fails");
        exit_code = ok ? 0 : 1;
    });

    auto* equiv = birk->add_subcommand("equiv", "Polya solvability vs MDS of M(a,b)");
    std::string be_a = "1", be_b = "0", be_field = "Q";
    std::size_t be_n = 2;
    bool be_json = false;
    equiv->add_option("--a", be_a);
    equiv->add_option("--b", be_b);
    equiv->add_option("--n", be_n)->required();
    equiv->add_option("--field", be_field);
    equiv->add_flag("--json", be_json);
    equiv->callback([&] {
        FieldPtr F = parse_field_spec(be_field);
        PolyaMdsReport r = polya_mds_equiv(F->parse(be_a), F->parse(be_b), be_n, F);
        json j{{"agree", r.agree},
               {"polya_holds", r.polya_holds},
               {"mds", r.mds.mds},
               {"structural_ok", r.structural_ok},
               {"instances_checked", r.instances_checked}};
        if (r.first_violation)
            j["witness_instance"] = {{"jset", r.first_violation->jset},
                                     {"kset", r.first_violation->kset},
                                     {"polya", r.first_violation->polya},
                                     {"nonsingular", r.first_violation->nonsingular}};
        if (r.mds.witness) j["mds_witness"] = *r.mds.witness;
        emit(be_json, j,
             std::string(r.agree ? "sides agree" : "DISAGREEMENT") +
                 "; polya_holds=" + (r.polya_holds ? "true" : "false") +
                 " mds=" + (r.mds.mds ? "true" : "false"));
        exit_code = r.agree ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::cout << app.help() << std::endl;
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.code() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
