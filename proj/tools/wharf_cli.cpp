// Command-line surface: validate / info / mpdo / verify / witness-nogluing /
// preset. Reports are deterministic JSON (timings opt-in via --timings).

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wharf/algebra/presets.hpp"
#include "wharf/channels/channels.hpp"
#include "wharf/circuits/circuits.hpp"
#include "wharf/engine/identities.hpp"
#include "wharf/io/dump.hpp"
#include "wharf/mpdo/mpdo.hpp"

using namespace wharf;
using ordered_json = nlohmann::ordered_json;

namespace {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Report {
    ordered_json j;
    bool pass = true;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    ordered_json checks = ordered_json::object();
    ordered_json timings = ordered_json::object();
    std::chrono::steady_clock::time_point last = t0;

    void check(const std::string& name, double residual, double tol) {
        const bool ok = residual <= tol;
        pass = pass && ok;
        ordered_json c;
        c["residual"] = residual;
        c["tolerance"] = tol;
        c["pass"] = ok;
        checks[name] = c;
        mark(name);
    }
    void check_flag(const std::string& name, bool ok) {
        pass = pass && ok;
        ordered_json c;
        c["pass"] = ok;
        checks[name] = c;
        mark(name);
    }
    void mark(const std::string& name) {
        auto now = std::chrono::steady_clock::now();
        timings[name] = std::chrono::duration<double, std::milli>(now - last).count();
        last = now;
    }
};

int emit(Report& rep, const std::string& command, const WhaSpec* spec, const std::string& out_path,
         bool with_timings, ordered_json extra = ordered_json::object()) {
    ordered_json j;
    j["command"] = command;
    if (spec) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      (unsigned long long)fnv1a64(spec_to_json(*spec)));
        j["spec_fingerprint"] = std::string(buf);
    }
    for (auto& [k, v] : extra.items()) j[k] = v;
    j["checks"] = rep.checks;
    j["overall_pass"] = rep.pass;
    if (with_timings) j["timings_ms"] = rep.timings;
    const std::string text = j.dump(1) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        f << text;
    } else {
        std::cout << text;
    }
    return rep.pass ? 0 : 1;
}

WhaSpec load_or_die(const std::string& path) { return load_spec(path); }

AlgebraElement resolve_x(const WhaSpec& spec, const DistinguishedElements& d,
                         const std::string& sel) {
    if (sel == "omega") return d.Omega;
    if (sel == "unit") return spec.unit;
    if (sel == "chihat1") return d.dual_characters[d.dual_sector_data.trivial_sector];
    // otherwise a file with a JSON array of [re, im] coefficient pairs
    std::ifstream in(sel);
    if (!in) throw std::runtime_error("cannot open element file: " + sel);
    auto j = ordered_json::parse(in);
    AlgebraElement x(spec.n, cplx(0, 0));
    std::size_t i = 0;
    for (const auto& p : j) {
        if (i >= spec.n) throw std::runtime_error("element file too long");
        x[i++] = cplx(p.at(0).get<double>(), p.at(1).get<double>());
    }
    if (i != spec.n) throw std::runtime_error("element file has wrong length");
    return x;
}

int cmd_validate(const std::string& path, double tol, const std::string& out, bool timings) {
    WhaSpec spec = load_or_die(path);
    Report rep;
    auto ax = validate_axioms(spec, tol);
    for (const auto& [k, v] : ax.residuals)
        if (k != "hopf_unit" && k != "hopf_counit") rep.check("axiom." + k, v, tol);
    ordered_json extra;
    extra["is_weak_hopf"] = ax.is_weak_hopf;
    extra["is_hopf"] = ax.is_hopf;
    extra["hopf_unit_residual"] = ax.residuals.at("hopf_unit");
    rep.check_flag("weak_hopf", ax.is_weak_hopf);
    return emit(rep, "validate", &spec, out, timings, extra);
}

int cmd_info(const std::string& path, std::uint64_t seed, const std::string& out, bool timings) {
    WhaSpec spec = load_or_die(path);
    Report rep;
    auto d = distinguished_elements(spec, seed);
    const auto& sd = d.sector_data;
    ordered_json extra;
    extra["n"] = spec.n;
    extra["rep_dim"] = spec.rep_dim;
    extra["sectors"] = sd.r;
    extra["irrep_dims"] = sd.irrep_dims;
    extra["fp_dims"] = sd.fp_dims;
    extra["D2"] = sd.D2;
    extra["eps_of_unit"] = d.eps1;
    extra["connected"] = sd.connected;
    extra["coconnected"] = sd.coconnected;
    extra["trivial_sector"] = sd.trivial_sector;
    ordered_json fus = ordered_json::array();
    for (std::size_t a = 0; a < sd.r; ++a) {
        ordered_json row = ordered_json::array();
        for (std::size_t b = 0; b < sd.r; ++b) row.push_back(sd.fusion[a][b]);
        fus.push_back(row);
    }
    extra["fusion"] = fus;
    extra["dual_fp_dims"] = d.dual_fp_dims;
    ordered_json dist;
    {
        ordered_json om = ordered_json::array();
        for (const auto& v : d.Omega) om.push_back({v.real(), v.imag()});
        dist["Omega"] = om;
        ordered_json cw = ordered_json::array();
        for (const auto& v : d.c_omega) cw.push_back({v.real(), v.imag()});
        dist["c_omega"] = cw;
    }
    extra["distinguished"] = dist;
    rep.check("T_expdef_residual", d.T_expdef_residual, 1e-9);
    rep.check_flag("biconnected", sd.connected && sd.coconnected);
    return emit(rep, "info", &spec, out, timings, extra);
}

int cmd_mpdo(const std::string& path, const std::string& xsel, std::size_t N,
             const std::string& out_state, std::uint64_t seed, const std::string& out,
             bool timings) {
    WhaSpec spec = load_or_die(path);
    Report rep;
    auto d = distinguished_elements(spec, seed);
    AlgebraElement x = resolve_x(spec, d, xsel);
    auto st = build_rho(spec, d, x, N, xsel);
    rep.check("trace_one", std::abs(st.rho.trace() - cplx(1, 0)), 1e-10);
    rep.check("psd_min_eig", std::max(0.0, -min_eigenvalue(st.rho)), 1e-10);
    ordered_json extra;
    extra["N"] = N;
    extra["x"] = xsel;
    extra["dim"] = st.rho.rows;
    extra["omega_x"] = st.norm_omega;
    if (!out_state.empty()) {
        ordered_json meta;
        meta["label"] = "rho_" + std::to_string(N) + "(" + xsel + ")";
        meta["N"] = N;
        dump_matrix(st.rho, out_state, meta.dump());
        extra["state_file"] = out_state;
    }
    return emit(rep, "mpdo", &spec, out, timings, extra);
}

void dump_channel(const Channel& ch, const std::string& path) {
    auto r = ch.cptp_residuals();
    ordered_json meta;
    meta["label"] = ch.label;
    meta["d_in"] = ch.d_in;
    meta["d_out"] = ch.d_out;
    ordered_json res;
    res["choi_min_eig"] = r.choi_min_eig;
    res["tp_residual"] = r.tp_residual;
    res["herm_residual"] = r.herm_residual;
    meta["cptp_residuals"] = res;
    dump_matrix(ch.choi, path, meta.dump());
}

int cmd_verify(const std::string& path, const std::string& suite, std::size_t N, double tol,
               std::uint64_t seed, const std::string& out, bool timings,
               const std::string& dump_path) {
    WhaSpec spec = load_or_die(path);
    Report rep;
    auto d = distinguished_elements(spec, seed);
    const bool hopf = validate_axioms(spec).is_hopf;
    if (suite == "rfp") {
        CMatrix tc = transfer_coarse(spec, d);
        CMatrix tf = transfer_fine(spec, d);
        Channel cgc = coarse_grain(spec, d);
        if (!dump_path.empty()) dump_channel(cgc, dump_path);
        auto cg = cgc.cptp_residuals();
        auto fg = fine_grain(spec, d).cptp_residuals();
        rep.check("T_choi_min_eig", std::max(0.0, -cg.choi_min_eig), 1e-9);
        rep.check("T_tp", cg.tp_residual, 1e-9);
        rep.check("S_choi_min_eig", std::max(0.0, -fg.choi_min_eig), 1e-9);
        rep.check("S_tp", fg.tp_residual, 1e-9);
        std::size_t k = 0;
        for (const auto& x : {d.Omega, spec.unit, random_positive_element(spec, seed + 11)}) {
            auto r1 = build_rho(spec, d, x, 1);
            auto r2 = build_rho(spec, d, x, 2);
            const std::string tag = k == 0 ? "omega" : (k == 1 ? "unit" : "random");
            rep.check("T_fixed_point." + tag, trace_distance(apply_transfer(tc, r1.rho), r2.rho),
                      tol);
            rep.check("S_fixed_point." + tag, trace_distance(apply_transfer(tf, r2.rho), r1.rho),
                      tol);
            ++k;
        }
    } else if (suite == "glue") {
        if (hopf) {
            for (int sel = 0; sel < 2; ++sel) {
                AlgebraElement x = sel == 0 ? d.Omega : random_positive_element(spec, seed + 23);
                const std::string tag = sel == 0 ? "omega" : "random";
                Channel g = glue_hopf(spec, d, x);
                if (sel == 0 && !dump_path.empty()) dump_channel(g, dump_path);
                auto c = g.cptp_residuals();
                rep.check("choi_min_eig." + tag, std::max(0.0, -c.choi_min_eig), 1e-9);
                rep.check("tp." + tag, c.tp_residual, 1e-9);
                CMatrix tg = choi_to_transfer(g.choi, g.d_in, g.d_out);
                auto r1 = build_rho(spec, d, d.Omega, 1);
                rep.check("glue_11." + tag,
                          trace_distance(apply_transfer(tg, kron(r1.rho, r1.rho)),
                                         build_rho(spec, d, x, 2).rho),
                          tol);
            }
        } else {
            Channel g = glue_trivial(spec, d);
            if (!dump_path.empty()) dump_channel(g, dump_path);
            auto c = g.cptp_residuals();
            rep.check("choi_min_eig", std::max(0.0, -c.choi_min_eig), 1e-9);
            rep.check("tp", c.tp_residual, 1e-9);
            CMatrix tg = choi_to_transfer(g.choi, g.d_in, g.d_out);
            auto r1 = build_rho(spec, d, spec.unit, 1);
            auto r2 = build_rho(spec, d, spec.unit, 2);
            rep.check("glue_11",
                      trace_distance(apply_transfer(tg, kron(r1.rho, r1.rho)), r2.rho), tol);
            CMatrix st = kron(r2.rho, r2.rho);
            CMatrix glued =
                apply_window(transfer_glue_inner_trivial(spec, d), st, 4, spec.rep_dim, 1, 2, 1);
            glued = apply_window(transfer_coarse(spec, d), glued, 3, spec.rep_dim, 1, 1, 2);
            rep.check("glue_22", trace_distance(glued, build_rho(spec, d, spec.unit, 4).rho), tol);
        }
    } else if (suite == "circuit") {
        AlgebraElement x = hopf ? d.Omega : spec.unit;
        if (N == 0) N = 4;
        auto r = verify_trivial_phase(spec, d, x, N, hopf ? "omega" : "unit");
        rep.check("circuit_distance", r.distance, 1e-8);
    } else if (suite == "hopf-special") {
        auto hs = hopf_specialization_report(spec, d);
        for (const auto& [k, v] : hs) rep.check(k, v, tol);
    } else if (suite == "identities") {
        auto ids = identity_suite(spec, d, seed);
        for (const auto& [k, v] : ids) rep.check(k, v, tol);
        rep.check("omega_uniqueness_violations",
                  (double)omega_uniqueness_violations(spec, d, 20, seed), 0.5);
    } else {
        throw std::runtime_error("unknown suite: " + suite);
    }
    ordered_json extra;
    extra["suite"] = suite;
    extra["seed"] = seed;
    return emit(rep, "verify", &spec, out, timings, extra);
}

int cmd_witness(const std::string& path, std::uint64_t seed, const std::string& out, bool timings) {
    WhaSpec spec = load_or_die(path);
    Report rep;
    auto d = distinguished_elements(spec, seed);
    auto w = no_gluing_witness(spec, d);
    ordered_json extra;
    extra["distance"] = w.distance;
    extra["product_deviation"] = w.product_deviation;
    const bool hopf = validate_axioms(spec).is_hopf;
    extra["is_hopf"] = hopf;
    if (hopf)
        rep.check("witness_vanishes", w.distance, 1e-10);
    else
        rep.check_flag("witness_positive", w.distance > 1e-3);
    return emit(rep, "witness-nogluing", &spec, out, timings, extra);
}

int cmd_preset(const std::string& name, const std::string& out_path) {
    WhaSpec s;
    if (name == "z2") s = build_z2();
    else if (name == "cz2") s = build_function_z2();
    else if (name == "s3") s = build_s3();
    else if (name == "kac_paljutkin" || name == "h8") s = build_kac_paljutkin();
    else if (name == "lee_yang") s = build_lee_yang();
    else throw std::runtime_error("unknown preset: " + name);
    if (out_path.empty()) {
        std::cout << spec_to_json(s);
    } else {
        save_spec(s, out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weak Hopf algebra RFP MPDO toolkit"};
    app.require_subcommand(1);

    std::string spec_path, out_path, suite = "identities", xsel = "omega", state_out, preset_name;
    std::size_t N = 3;
    double tol = 1e-9;
    std::uint64_t seed = 7;
    bool timings = false;

    auto add_common = [&](CLI::App* c, bool with_spec = true) {
        if (with_spec) {
            c->add_option("spec_pos", spec_path, "spec file (positional)");
            c->add_option("--spec", spec_path, "spec file");
        }
        c->add_option("--out", out_path, "write the JSON report here instead of stdout");
        c->add_option("--seed", seed, "RNG seed (default 7)");
        c->add_option("--tol", tol, "check tolerance");
        c->add_flag("--timings", timings, "include timings in the report");
    };

    auto* v = app.add_subcommand("validate", "axioms and derived antipode properties");
    add_common(v);
    auto* i = app.add_subcommand("info", "sectors, fusion, dimensions, distinguished elements");
    add_common(i);
    auto* m = app.add_subcommand("mpdo", "build rho_N(x) and optionally dump it");
    add_common(m);
    m->add_option("--x", xsel, "omega | unit | chihat1 | FILE");
    m->add_option("--n", N, "number of sites");
    m->add_option("--dump", state_out, "binary state dump path");
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    add_common(vf);
    vf->add_option("--suite", suite, "rfp | glue | circuit | hopf-special | identities");
    vf->add_option("--n", N, "chain length for the circuit suite");
    vf->add_option("--dump", state_out, "export the suite's channel as a Choi dump");
    auto* w = app.add_subcommand("witness-nogluing", "partial-trace obstruction witness");
    add_common(w);
    auto* p = app.add_subcommand("preset", "emit a built-in spec as canonical JSON");
    p->add_option("--name", preset_name, "z2 | cz2 | s3 | kac_paljutkin | lee_yang")->required();
    p->add_option("--out", out_path, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (v->parsed()) return cmd_validate(spec_path, v->count("--tol") ? tol : 1e-10, out_path, timings);
        if (i->parsed()) return cmd_info(spec_path, seed, out_path, timings);
        if (m->parsed()) return cmd_mpdo(spec_path, xsel, N, state_out, seed, out_path, timings);
        if (vf->parsed()) return cmd_verify(spec_path, suite, vf->count("--n") ? N : 0, tol, seed,
                                            out_path, timings, vf->count("--dump") ? state_out : "");
        if (w->parsed()) return cmd_witness(spec_path, seed, out_path, timings);
        if (p->parsed()) return cmd_preset(preset_name, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
