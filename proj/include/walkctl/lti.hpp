#pragma once

// Single-input single-output discrete linear systems
//   x_{n+1} = A x_n + u_n b,   output c_n = c^T x_n.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "walkctl/exact.hpp"

namespace walkctl {

struct DiscreteSystem {
    Matrix a;
    Vector b;
    Vector c;
    Vector x0;

    std::size_t dimension() const { return a.rows(); }
    /// Throws InputError when the dimensions disagree.
    void validate() const;
};

/// Scalar power series truncated to `order` coefficients.
struct PowerSeriesPrefix {
    std::vector<Rational> coefficients;
    std::size_t order() const { return coefficients.size(); }
};

/// States x_0 .. x_steps. Needs at least `steps` inputs.
std::vector<Vector> simulate(const DiscreteSystem& sys, std::span<const Rational> inputs, std::size_t steps);

/// Outputs c^T x_n for each state.
std::vector<Rational> outputs(const DiscreteSystem& sys, const std::vector<Vector>& states);

Matrix controllability_matrix(const Matrix& a, const Vector& b);
Matrix observability_matrix(const Matrix& a, const Vector& c);

bool is_controllable(const DiscreteSystem& sys);
bool is_observable(const DiscreteSystem& sys);

/// c^T adj(I - tA) b over det(I - tA), not reduced; both scaled by a common
/// positive integer when A has fractional entries.
RationalFunction transfer_function(const DiscreteSystem& sys);

/// Taylor coefficients at t = 0. Requires a nonzero constant term in the
/// denominator.
PowerSeriesPrefix power_series(const RationalFunction& r, std::size_t order);

struct IdentityCheck {
    bool ok = true;
    std::optional<std::size_t> first_mismatch;
};

/// Compares the trajectory's generating series with
///   (I - tA)^{-1} x0 + t u(t) (I - tA)^{-1} b
/// expanded through t^(trajectory.size() - 1).
IdentityCheck check_trajectory(const DiscreteSystem& sys, std::span<const Rational> inputs,
                               const std::vector<Vector>& trajectory);

/// Simulates `order` steps and checks coefficients of t^0 .. t^order.
IdentityCheck generating_identity_check(const DiscreteSystem& sys, std::span<const Rational> inputs,
                                        std::size_t order);

/// Recovers x_m from the d outputs c^T x_m, ..., c^T A^(d-1) x_m observed with
/// zero input from time m on. Throws InputError when the observability matrix
/// is singular.
Vector recover_state(const DiscreteSystem& sys, std::span<const Rational> observed, std::size_t m);

} // namespace walkctl
