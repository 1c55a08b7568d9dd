#include "walkctl/lti.hpp"

#include <stdexcept>

#include "walkctl/controllability.hpp"
#include "walkctl/errors.hpp"

namespace walkctl {

void DiscreteSystem::validate() const {
    const std::size_t d = a.rows();
    if (!a.is_square()) throw InputError("system matrix A must be square");
    if (b.size() != d || c.size() != d || x0.size() != d) throw InputError("b, c and x0 must have length dim(A)");
}

std::vector<Vector> simulate(const DiscreteSystem& sys, std::span<const Rational> inputs, std::size_t steps) {
    sys.validate();
    if (inputs.size() < steps) throw InputError("simulate: fewer inputs than steps");
    std::vector<Vector> states{sys.x0};
    states.reserve(steps + 1);
    for (std::size_t n = 0; n < steps; ++n) {
        Vector next = sys.a.apply(states.back());
        for (std::size_t i = 0; i < next.size(); ++i) next[i] += inputs[n] * sys.b[i];
        states.push_back(std::move(next));
    }
    return states;
}

std::vector<Rational> outputs(const DiscreteSystem& sys, const std::vector<Vector>& states) {
    std::vector<Rational> out;
    out.reserve(states.size());
    for (const auto& x : states) out.push_back(dot(sys.c, x));
    return out;
}

Matrix controllability_matrix(const Matrix& a, const Vector& b) {
    if (!a.is_square() || b.size() != a.rows()) throw InputError("controllability_matrix: dimension mismatch");
    return krylov_matrix(a, b, a.rows());
}

Matrix observability_matrix(const Matrix& a, const Vector& c) {
    if (!a.is_square() || c.size() != a.rows()) throw InputError("observability_matrix: dimension mismatch");
    // Rows c^T A^k are the columns (A^T)^k c.
    return krylov_matrix(a.transpose(), c, a.rows()).transpose();
}

bool is_controllable(const DiscreteSystem& sys) {
    return mat_rank(controllability_matrix(sys.a, sys.b)) == sys.dimension();
}

bool is_observable(const DiscreteSystem& sys) {
    return mat_rank(observability_matrix(sys.a, sys.c)) == sys.dimension();
}

RationalFunction transfer_function(const DiscreteSystem& sys) {
    sys.validate();
    const std::size_t d = sys.dimension();
    // P(t) = I - tA is nonsingular at t = 0.
    PencilForms f = pencil_forms(Matrix::identity(d), Rational(-1) * sys.a, sys.b, sys.c, 0);
    Integer l = 1;
    for (const auto* p : {&f.det, &f.form})
        for (const auto& q : *p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    for (auto* p : {&f.det, &f.form})
        for (auto& q : *p) q *= l;
    return {to_int_poly(f.form), to_int_poly(f.det)};
}

PowerSeriesPrefix power_series(const RationalFunction& r, std::size_t order) {
    const Integer d0 = r.denominator.coefficient(0);
    if (sgn(d0) == 0) throw std::domain_error("power_series: denominator vanishes at t = 0");
    PowerSeriesPrefix s;
    s.coefficients.reserve(order);
    for (std::size_t n = 0; n < order; ++n) {
        Rational acc = r.numerator.coefficient(n);
        for (std::size_t k = 1; k <= n; ++k) acc -= r.denominator.coefficient(k) * s.coefficients[n - k];
        s.coefficients.push_back(acc / d0);
    }
    return s;
}

IdentityCheck check_trajectory(const DiscreteSystem& sys, std::span<const Rational> inputs,
                               const std::vector<Vector>& trajectory) {
    sys.validate();
    const std::size_t terms = trajectory.size();
    if (terms > 0 && inputs.size() + 1 < terms) throw InputError("check_trajectory: not enough inputs");
    // Neumann terms A^n x0 and A^n b.
    std::vector<Vector> ax0{sys.x0}, ab{sys.b};
    for (std::size_t n = 1; n < terms; ++n) {
        ax0.push_back(sys.a.apply(ax0.back()));
        ab.push_back(sys.a.apply(ab.back()));
    }
    IdentityCheck result;
    const std::size_t d = sys.dimension();
    for (std::size_t n = 0; n < terms; ++n) {
        // [t^n] of t·u(t)·(I - tA)^{-1} b is sum_{k < n} u_k A^(n-1-k) b.
        Vector rhs = ax0[n];
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < d; ++i) rhs[i] += inputs[k] * ab[n - 1 - k][i];
        if (!(rhs == trajectory[n])) {
            result.ok = false;
            result.first_mismatch = n;
            break;
        }
    }
    return result;
}

IdentityCheck generating_identity_check(const DiscreteSystem& sys, std::span<const Rational> inputs,
                                        std::size_t order) {
    return check_trajectory(sys, inputs, simulate(sys, inputs, order));
}

Vector recover_state(const DiscreteSystem& sys, std::span<const Rational> observed, std::size_t /*m*/) {
    sys.validate();
    const std::size_t d = sys.dimension();
    if (observed.size() != d) throw InputError("recover_state: need exactly dim(A) observations");
    auto x = solve(observability_matrix(sys.a, sys.c), Vector(observed.begin(), observed.end()));
    if (!x) throw InputError("recover_state: observability matrix is singular");
    return *x;
}

} // namespace walkctl
