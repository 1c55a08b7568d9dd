#pragma once

#include <cstddef>
#include <vector>

#include "walkctl/exact.hpp"

namespace walkctl {

/// Degrees of the irreducible factors of f modulo the prime p, by
/// distinct-degree factorisation. Requires p not dividing lead(f) and f
/// squarefree mod p; returns an empty vector if either fails.
std::vector<std::size_t> modular_factor_degrees(const IntPoly& f, unsigned long p);

/// Irreducibility over Q for small-degree integer polynomials.
///
/// Method: reject non-squarefree inputs, intersect the possible factor
/// degrees allowed by factorisation modulo a handful of small primes, then
/// run Kronecker's divisor search for every surviving degree k <= deg/2.
/// Exact but exponential; intended for degree <= 10. Constants are not
/// irreducible.
bool is_irreducible_over_q(const IntPoly& f);

/// A nontrivial factor of f of exactly degree k found by Kronecker's method,
/// or the zero polynomial if none exists.
IntPoly kronecker_factor(const IntPoly& f, std::size_t k);

} // namespace walkctl
