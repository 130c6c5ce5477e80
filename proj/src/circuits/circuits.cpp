#include <chrono>
#include <cmath>

#include "wharf/circuits/circuits.hpp"

namespace wharf {

CircuitPlan plan_depth_two(const WhaSpec& spec, const DistinguishedElements& d,
                           const AlgebraElement& x, std::size_t N, const std::string& x_label) {
    if (N == 0) throw std::invalid_argument("plan_depth_two: N must be positive");
    auto rep = validate_axioms(spec);
    CircuitPlan plan;
    plan.N = N;
    plan.site_dim = spec.rep_dim;
    plan.target_x = x;
    plan.x_label = x_label;
    AlgebraElement seed;
    if (rep.is_hopf) {
        seed = d.Omega;
    } else {
        // weak case: only x = 1 or x = chihat_1 are supported; blocks are
        // seeded with the same element and glued with G_1
        const auto& chi1 = d.dual_characters[d.dual_sector_data.trivial_sector];
        const bool is_unit = max_abs_diff_vec(x, spec.unit) < 1e-10;
        const bool is_chi1 = max_abs_diff_vec(x, chi1) < 1e-10;
        if (!is_unit && !is_chi1)
            throw std::invalid_argument(
                "plan_depth_two: weak specs support only x = 1 or x = chihat1");
        seed = x;
    }
    std::vector<std::size_t> widths;
    std::size_t rem = N;
    if (N == 1) {
        widths.push_back(1);
        rem = 0;
    } else if (N % 2 == 1) {
        widths.push_back(3);
        rem -= 3;
    }
    while (rem > 0) {
        widths.push_back(2);
        rem -= 2;
    }
    std::size_t site = 0;
    for (auto w : widths) {
        CircuitPlan::InitBlock blk;
        blk.site = site;
        blk.width = w;
        blk.rho = build_rho(spec, d, seed, w).rho;
        plan.layer1.push_back(std::move(blk));
        site += w;
    }
    CMatrix coarse = transfer_coarse(spec, d);
    std::vector<std::size_t> junctions;
    std::size_t pos = 0;
    for (std::size_t b = 0; b + 1 < widths.size(); ++b) {
        pos += widths[b];
        junctions.push_back(pos - 1);
    }
    for (std::size_t k = 0; k < junctions.size(); ++k) {
        CircuitPlan::GlueStep step;
        step.site = junctions[k];
        step.coarse = coarse;
        if (rep.is_hopf)
            step.inner = transfer_glue_inner_hopf(spec, d,
                                                  k + 1 == junctions.size() ? x : d.Omega);
        else
            step.inner = transfer_glue_inner_trivial(spec, d);
        plan.layer2.push_back(std::move(step));
    }
    return plan;
}

CMatrix run_circuit(const WhaSpec& spec, const CircuitPlan& plan, const CMatrix& input,
                    bool swap_layers, bool check_state) {
    (void)spec;
    const std::size_t dim = plan.site_dim;
    std::size_t total = 1;
    for (std::size_t s = 0; s < plan.N; ++s) total *= dim;
    if (input.rows != total || input.cols != total)
        throw std::invalid_argument("run_circuit: input dimension mismatch");
    CMatrix state = input;
    auto layer1 = [&]() {
        for (const auto& blk : plan.layer1)
            state = apply_replace_window(blk.rho, state, plan.N, dim, blk.site, blk.width);
    };
    auto layer2 = [&]() {
        for (const auto& g : plan.layer2) {
            state = apply_window(g.inner, state, plan.N, dim, g.site, 2, 1);
            state = apply_window(g.coarse, state, plan.N - 1, dim, g.site, 1, 2);
        }
    };
    if (swap_layers) {
        layer2();
        layer1();
    } else {
        layer1();
        layer2();
    }
    if (check_state) {
        if (std::abs(state.trace() - cplx(1, 0)) > 1e-9)
            throw std::runtime_error("run_circuit: output trace deviates from 1");
        if (!is_psd(state, 1e-9, 1e-6))
            throw std::runtime_error("run_circuit: output not PSD");
    }
    return state;
}

TrivialPhaseReport verify_trivial_phase(const WhaSpec& spec, const DistinguishedElements& d,
                                        const AlgebraElement& x, std::size_t N,
                                        const std::string& x_label) {
    const auto t0 = std::chrono::steady_clock::now();
    auto plan = plan_depth_two(spec, d, x, N, x_label);
    std::size_t total = 1;
    for (std::size_t s = 0; s < N; ++s) total *= spec.rep_dim;
    CMatrix mixed(total, total);
    for (std::size_t i = 0; i < total; ++i) mixed(i, i) = 1.0 / (double)total;
    CMatrix out = run_circuit(spec, plan, mixed);
    auto target = build_rho(spec, d, x, N, x_label);
    TrivialPhaseReport rep;
    rep.distance = trace_distance(out, target.rho);
    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace wharf
