#pragma once

#include "wharf/algebra/spec.hpp"

namespace wharf {

/// Group algebra CG with Delta(g) = g (x) g, eps(g) = 1, S(g) = g* = g^{-1}.
/// `table[i][j]` is the index of the product; index 0 must be the identity.
/// `reps` supplies unitary matrices per element; labels optional.
WhaSpec build_group_algebra(const std::vector<std::vector<std::size_t>>& table,
                            const std::vector<CMatrix>& reps,
                            std::vector<std::string> labels = {});

/// Function algebra C^G in the delta basis; rep = diagonal matrices on C^|G|.
WhaSpec build_function_algebra(const std::vector<std::vector<std::size_t>>& table,
                               std::vector<std::string> labels = {});

/// Kac-Paljutkin 8-dimensional C*-Hopf algebra on the word basis
/// {x^a y^b z^c}; rep = left regular representation.
WhaSpec build_kac_paljutkin();

/// Lee-Yang C*-weak Hopf algebra on M_2 (+) M_3 matrix units with the
/// block-diagonal representation on C^5.
WhaSpec build_lee_yang();

// convenience presets
WhaSpec build_z2();                 // CZ_2 with phi(g) = sigma_z
WhaSpec build_function_z2();        // C^{Z_2}
WhaSpec build_s3();                 // CS_3, left regular representation
std::vector<std::vector<std::size_t>> z2_table();
std::vector<std::vector<std::size_t>> s3_table();
std::vector<CMatrix> regular_rep_of_table(const std::vector<std::vector<std::size_t>>& table);

/// Positive root of z^4 + z^2 - 1 (Newton), used by the Lee-Yang preset.
double lee_yang_zeta();

}  // namespace wharf
