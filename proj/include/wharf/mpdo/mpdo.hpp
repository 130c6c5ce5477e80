#pragma once

#include "wharf/engine/engine.hpp"

namespace wharf {

/// Dense-matrix entry budget (default 2e7); WHA_BUDGET_ENTRIES overrides.
std::size_t budget_entries();

struct MpdoState {
    std::size_t N = 0;
    std::string x_label;
    CMatrix rho;
    double norm_omega = 0.0;   // omega(x)
};

/// rho_N(x) = omega(x)^{-1} phi^{(x)N}(c_omega^{(x)N} Delta^{(N-1)}(x)),
/// assembled site by site through the coproduct bond.
MpdoState build_rho(const WhaSpec& spec, const DistinguishedElements& d, const AlgebraElement& x,
                    std::size_t N, const std::string& label = "");

struct MpoTensor {
    std::size_t bond_dim = 0;   // = n
    std::size_t phys_dim = 0;
    bool weighted = false;
    // entries[(l*bond+r)] = phys_dim x phys_dim operator block
    std::vector<CMatrix> blocks;

    const CMatrix& block(std::size_t l, std::size_t r) const { return blocks[l * bond_dim + r]; }
};

/// Bond space = the algebra itself: block(l, r) = sum_i D[l,i,r] phi(e_i)
/// (weighted form multiplies by phi(c_omega)).
MpoTensor export_mpo_tensor(const WhaSpec& spec, const DistinguishedElements& d,
                            bool weighted = false);

/// Close the MPO over N sites with the boundary map of x; reproduces
/// phi^{(x)N} Delta^{(N-1)}(x) (weighted: with c_omega factors).
CMatrix mpo_closure(const WhaSpec& spec, const MpoTensor& t, const AlgebraElement& x, std::size_t N);

/// || tr_last rho_N(x) - s * rho_{N-1}((id (x) omega) Delta x) ||_1
double marginal_check(const WhaSpec& spec, const DistinguishedElements& d, const AlgebraElement& x,
                      std::size_t N);

}  // namespace wharf
