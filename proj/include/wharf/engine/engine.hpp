#pragma once

#include <map>
#include <optional>
#include <string>

#include "wharf/algebra/spec.hpp"

namespace wharf {

struct AxiomReport {
    std::map<std::string, double> residuals;
    bool is_weak_hopf = false;
    bool is_hopf = false;
    double worst_weak = 0.0;
};

/// Every weak Hopf axiom evaluated on all basis tuples, plus derived antipode
/// properties. The antipode equations are checked in the order
///   S(x_(1)) x_(2) = 1_(1) eps(x 1_(2)),   x_(1) S(x_(2)) = eps(1_(1) x) 1_(2),
/// which is the one the Lee-Yang data satisfies (see decisions ledger).
AxiomReport validate_axioms(const WhaSpec& spec, double tol = 1e-9);

/// Delta^(k)(x): coefficient tensor over n^(k+1) entries (row-major legs).
Vec delta_power(const WhaSpec& spec, const AlgebraElement& x, std::size_t k,
                std::size_t budget_entries = 0);

/// Bases (rows) of the counital subalgebras A^L and A^R.
std::pair<std::vector<Vec>, std::vector<Vec>> counital_subalgebras(const WhaSpec& spec);

struct SectorData {
    std::size_t r = 0;
    std::vector<AlgebraElement> idempotents;   // minimal central, ordered
    std::vector<Functional> characters;
    std::vector<std::size_t> irrep_dims;
    std::vector<std::size_t> multiplicities;   // within the attached rep
    std::vector<std::vector<std::vector<long>>> fusion;   // N[a][b][c]
    std::vector<double> fp_dims;
    double D2 = 0.0;
    bool connected = false;
    bool coconnected = false;
    std::size_t trivial_sector = 0;            // the sector carrying the Haar integral
};

SectorData sectors(const WhaSpec& spec, std::uint64_t seed = 7);

/// Dual weak Hopf algebra on the dual basis, with a faithful *-representation
/// built by GNS (omega-functional inner product, regular-trace fallback).
WhaSpec dualize(const WhaSpec& spec, std::uint64_t seed = 7);

/// Haar integral: the positive idempotent two-sided integral.
AlgebraElement haar_integral(const WhaSpec& spec);

struct DistinguishedElements {
    AlgebraElement Omega;
    Functional omega;
    AlgebraElement haar;
    Functional dual_haar;
    AlgebraElement gL, gR, g;
    Functional ghat;
    AlgebraElement xi, xi_inv, xiL, xiR;
    AlgebraElement c_omega;
    CMatrix T;                       // T(e_i) = sum_j T(j,i) e_j
    AlgebraElement t_dual_integral;
    std::vector<AlgebraElement> dual_characters;   // chi-hat_a as elements of A
    std::vector<double> dual_fp_dims;
    SectorData sector_data;
    SectorData dual_sector_data;
    double D2 = 0.0;
    double eps1 = 0.0;               // eps(1)
    double T_expdef_residual = 0.0;  // cross-check vs S(x_(1)) ghat(x_(2))
};

/// All distinguished elements; requires a biconnected spec (throws otherwise,
/// naming the failing flag).
DistinguishedElements distinguished_elements(const WhaSpec& spec, std::uint64_t seed = 7);

/// Left and right Radon-Nikodym derivatives of x with respect to `against`:
/// mu(a_(1)) a_(2) = x = a_(1) mu'(a_(2)).
std::pair<Functional, Functional> radon_nikodym(const WhaSpec& spec, const AlgebraElement& x,
                                                const AlgebraElement& against, double tol = 1e-10);

/// Residuals of the Hopf specializations (S^2 = id, g = 1, Omega = h, T = S,
/// t = D^2 Omega, xi = D^2 1, gL = gR = D^{-1} 1). Throws on non-Hopf specs.
std::map<std::string, double> hopf_specialization_report(const WhaSpec& spec,
                                                         const DistinguishedElements& d);

// small helpers shared across modules
CMatrix delta_matrix(const WhaSpec& spec, const AlgebraElement& x);   // = spec.delta
Vec sweedler3(const WhaSpec& spec, const AlgebraElement& x);          // n^3 tensor
AlgebraElement random_positive_element(const WhaSpec& spec, std::uint64_t seed);
std::vector<Vec> intersect_spans(const std::vector<Vec>& a, const std::vector<Vec>& b);

}  // namespace wharf
