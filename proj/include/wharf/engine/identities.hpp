#pragma once

#include <map>

#include "wharf/engine/engine.hpp"

namespace wharf {

/// Residuals of the structural identities behind the channel constructions:
/// pulling-through, omega invariances, xi/g/ghat relations, integral
/// characterizations, trivial-sector identities. Hopf-only identities are
/// included only for Hopf specs ("omega_mid", "mu_x_normalization").
std::map<std::string, double> identity_suite(const WhaSpec& spec, const DistinguishedElements& d,
                                             std::uint64_t seed = 7);

/// Uniqueness probe for omega: draws trace-like positive functionals in the
/// character span and returns the number that also look idempotent (expected 0).
std::size_t omega_uniqueness_violations(const WhaSpec& spec, const DistinguishedElements& d,
                                        std::size_t samples = 20, std::uint64_t seed = 7);

}  // namespace wharf
