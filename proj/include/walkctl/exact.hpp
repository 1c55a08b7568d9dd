#pragma once

// Exact linear and polynomial algebra over Z and Q, backed by GMP.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace walkctl {

using Integer = mpz_class;
using Rational = mpq_class; // GMP keeps mpq results in lowest terms, denominator > 0
using Vector = std::vector<Rational>;

Rational dot(const Vector& a, const Vector& b);

/// Dense row-major matrix of rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::span<const Vector> columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_integral() const;

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Matrix transpose() const;
    Vector apply(const Vector& x) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t mat_rank(const Matrix& m);

Rational determinant(const Matrix& m);

/// Solves m·x = b for square nonsingular m. Returns nullopt when m is singular.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Throws std::domain_error when m is singular.
Matrix inverse(const Matrix& m);

/// Univariate polynomial with integer coefficients, index = degree.
/// The zero polynomial has no coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    static IntPoly monomial(const Integer& c, std::size_t degree);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(std::size_t i) const;
    const Integer& lead() const;

    Integer content() const;
    IntPoly primitive_part() const;
    IntPoly derivative() const;
    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;
    /// t^n · p(1/t); requires n >= degree.
    IntPoly reversed(std::size_t n) const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Integer& s, const IntPoly& a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Quotient of f by g when g divides f in Z[t]; nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g);

/// lead(g)^(deg f - deg g + 1) · f mod g.
IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g);

/// Primitive gcd with positive leading coefficient (primitive PRS).
/// Throws std::invalid_argument when both inputs are zero.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

/// True iff gcd(f, f') is constant. Throws on the zero polynomial.
bool poly_squarefree(const IntPoly& f);

/// Number of distinct complex roots: deg(f / gcd(f, f')).
std::size_t distinct_root_count(const IntPoly& f);

/// det(tI - m) for a square integer matrix.
IntPoly char_poly(const Matrix& m);

struct RationalFunction {
    IntPoly numerator;
    IntPoly denominator;
};

bool operator==(const RationalFunction& a, const RationalFunction& b);

/// Cancels the common factor and sign-normalises the denominator.
RationalFunction rf_normalize(const RationalFunction& r);

/// Distinct roots of the reduced denominator.
std::size_t distinct_pole_count(const RationalFunction& r);

/// Rational-coefficient polynomial (index = degree), used for interpolation
/// and for forms built from non-integral vectors.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p);
RatPoly interpolate(std::span<const Integer> xs, std::span<const Rational> ys);
/// Throws std::domain_error if a coefficient is not an integer.
IntPoly to_int_poly(const RatPoly& p);
RatPoly to_rat_poly(const IntPoly& p);

/// det(P(t)) and y^T adj(P(t)) x for the affine pencil P(t) = base + t·slope,
/// each recovered by interpolation from exact solves at integer sample points
/// starting at first_sample (points where P is singular are skipped).
struct PencilForms {
    RatPoly det;
    RatPoly form;
};

PencilForms pencil_forms(const Matrix& base, const Matrix& slope, const Vector& x,
                         const Vector& y, long first_sample);

} // namespace walkctl
