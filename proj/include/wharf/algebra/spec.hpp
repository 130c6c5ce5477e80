#pragma once

#include <string>
#include <vector>

#include "wharf/core/linalg.hpp"
#include "wharf/core/matrix.hpp"

namespace wharf {

/// Element of the algebra (coefficients over the basis) or functional
/// (coefficients over the dual basis). Both are plain coefficient vectors.
using AlgebraElement = Vec;
using Functional = Vec;

/// A weak Hopf algebra given by structure constants plus a faithful
/// *-representation. Tensors are dense, row-major:
///   mult[(i*n+j)*n+k]   : e_i e_j = sum_k mult[i,j,k] e_k
///   coprod[(i*n+a)*n+b] : Delta(e_i) = sum D[i,a,b] e_a (x) e_b
///   star(j,i)           : (e_i)^* = sum_j star(j,i) e_j   (coefficients conjugated)
///   antipode(j,i)       : S(e_i) = sum_j antipode(j,i) e_j
struct WhaSpec {
    std::size_t n = 0;
    std::vector<std::string> basis;
    Vec mult;
    AlgebraElement unit;
    CMatrix star;
    Vec coprod;
    Functional counit;
    CMatrix antipode;
    std::size_t rep_dim = 0;
    std::vector<CMatrix> rep;

    cplx mult_at(std::size_t i, std::size_t j, std::size_t k) const {
        return mult[(i * n + j) * n + k];
    }
    cplx coprod_at(std::size_t i, std::size_t a, std::size_t b) const {
        return coprod[(i * n + a) * n + b];
    }

    AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement star_of(const AlgebraElement& x) const;
    AlgebraElement antipode_of(const AlgebraElement& x) const;
    AlgebraElement basis_el(std::size_t i) const;

    /// Delta(x) as an n x n matrix over (first leg, second leg).
    CMatrix delta(const AlgebraElement& x) const;

    /// phi(x) in the attached representation.
    CMatrix phi(const AlgebraElement& x) const;

    /// Structural sanity: shapes, unit identity, *-rep and faithfulness.
    /// Throws std::runtime_error with a description when violated.
    void validate_shape(double tol = 1e-10) const;
};

cplx dot(const Functional& f, const AlgebraElement& x);
double max_abs_diff_vec(const Vec& a, const Vec& b);

/// Canonical JSON (see README for the schema). save(load(p)) is byte-identical.
WhaSpec load_spec(const std::string& path);
void save_spec(const WhaSpec& spec, const std::string& path);
std::string spec_to_json(const WhaSpec& spec);
WhaSpec spec_from_json(const std::string& text);

}  // namespace wharf
