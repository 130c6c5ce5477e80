#pragma once

#include "wharf/channels/channels.hpp"
#include "wharf/mpdo/mpdo.hpp"

namespace wharf {

/// Depth-two preparation circuit: an initialization layer of block-replacement
/// channels followed by a layer of gluing channels on the block junctions.
struct CircuitPlan {
    std::size_t N = 0;
    std::size_t site_dim = 0;
    struct InitBlock {
        std::size_t site = 0;
        std::size_t width = 0;
        CMatrix rho;   // replacement state on the block
    };
    struct GlueStep {
        std::size_t site = 0;              // left site of the 2-site junction window
        CMatrix inner;                     // End(V (x) V) -> End(V) transfer
        CMatrix coarse;                    // End(V) -> End(V (x) V) transfer
    };
    std::vector<InitBlock> layer1;
    std::vector<GlueStep> layer2;
    AlgebraElement target_x;
    std::string x_label;
};

/// Layer-1 blocks of rho_2(Omega) (Hopf) or rho_2(1)/rho_2(chihat1) (weak),
/// one leftmost block of 3 when N is odd; layer-2 gluing channels G_Omega at
/// every junction except the last, which carries G_x (Hopf), or a G_1 chain
/// (weak). Weak specs accept only x = 1 or x = chihat1.
CircuitPlan plan_depth_two(const WhaSpec& spec, const DistinguishedElements& d,
                           const AlgebraElement& x, std::size_t N, const std::string& x_label = "");

/// Applies layer 1 then layer 2 (set swap_layers to deliberately run them in
/// the wrong order). check_state verifies PSD/trace of the output.
CMatrix run_circuit(const WhaSpec& spec, const CircuitPlan& plan, const CMatrix& input,
                    bool swap_layers = false, bool check_state = false);

struct TrivialPhaseReport {
    double distance = 0.0;
    double runtime_seconds = 0.0;
};

/// Trace distance between the circuit output on the maximally mixed state and
/// the directly built rho_N(x).
TrivialPhaseReport verify_trivial_phase(const WhaSpec& spec, const DistinguishedElements& d,
                                        const AlgebraElement& x, std::size_t N,
                                        const std::string& x_label = "");

}  // namespace wharf
