#include "walkctl/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walkctl {

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
    if (columns.empty()) return {};
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != m.rows_) throw std::invalid_argument("from_columns: ragged columns");
        for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool Matrix::is_integral() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rational& q) { return q.get_den() == 1; });
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::column(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::apply(const Vector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    Vector y(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn((*this)(i, j)) != 0) s += (*this)(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix +: shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix -: shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix *: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ------------------------------------------------------------ elimination

namespace {

struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> a;
    Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

// Clears denominators row by row; scale[i] is the multiplier applied to row i.
IntegerMatrix integerize(const Matrix& m, std::vector<Integer>* scale = nullptr) {
    IntegerMatrix out{m.rows(), m.cols(), std::vector<Integer>(m.rows() * m.cols())};
    if (scale) scale->assign(m.rows(), Integer(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer& d = m(i, j).get_den();
            if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            out.at(i, j) = q.get_num() * (l / q.get_den());
        }
        if (scale) (*scale)[i] = l;
    }
    return out;
}

struct Elimination {
    std::size_t rank = 0;
    int sign = 1;
};

// Fraction-free Gaussian elimination in place. Pivots are taken only from the
// first pivot_cols columns; every intermediate entry is a minor of the input,
// so each division is exact.
Elimination bareiss(IntegerMatrix& m, std::size_t pivot_cols) {
    Elimination e;
    Integer prev = 1;
    Integer t;
    for (std::size_t col = 0; col < pivot_cols && e.rank < m.rows; ++col) {
        std::size_t p = e.rank;
        while (p < m.rows && sgn(m.at(p, col)) == 0) ++p;
        if (p == m.rows) continue;
        const std::size_t r = e.rank;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
            e.sign = -e.sign;
        }
        const Integer& piv = m.at(r, col);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            Integer& lead = m.at(i, col);
            for (std::size_t j = col + 1; j < m.cols; ++j) {
                Integer& x = m.at(i, j);
                x *= piv;
                t = lead * m.at(r, j);
                x -= t;
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = piv;
        ++e.rank;
    }
    return e;
}

Integer integer_determinant(IntegerMatrix m) {
    if (m.rows == 0) return 1;
    Elimination e = bareiss(m, m.cols);
    if (e.rank < m.rows) return 0;
    Integer d = m.at(m.rows - 1, m.cols - 1);
    return e.sign < 0 ? Integer(-d) : d;
}

// Solves with the determinant as a by-product. Returns false if singular.
bool solve_with_det(const Matrix& m, const Vector& b, Vector& x, Rational& det) {
    const std::size_t n = m.rows();
    if (!m.is_square() || b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
    Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    std::vector<Integer> scale;
    IntegerMatrix im = integerize(aug, &scale);
    Elimination e = bareiss(im, n);
    if (e.rank < n) return false;
    x.assign(n, Rational(0));
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s = im.at(ii, n);
        for (std::size_t j = ii + 1; j < n; ++j) s -= im.at(ii, j) * x[j];
        x[ii] = s / im.at(ii, ii);
    }
    Integer scale_prod = 1;
    for (const auto& s : scale) scale_prod *= s;
    Rational d(n == 0 ? Integer(1) : Integer(im.at(n - 1, n - 1)), scale_prod);
    d.canonicalize();
    det = e.sign < 0 ? Rational(-d) : d;
    return true;
}

} // namespace

std::size_t mat_rank(const Matrix& m) {
    IntegerMatrix im = integerize(m);
    return bareiss(im, im.cols).rank;
}

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: non-square matrix");
    std::vector<Integer> scale;
    IntegerMatrix im = integerize(m, &scale);
    Integer prod = 1;
    for (const auto& s : scale) prod *= s;
    Rational d(integer_determinant(std::move(im)), prod);
    d.canonicalize();
    return d;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    Vector x;
    Rational det;
    if (!solve_with_det(m, b, x, det)) return std::nullopt;
    return x;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = m.rows();
    Matrix inv(n, n);
    Vector e(n, Rational(0)), x;
    Rational det;
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), Rational(0));
        e[j] = 1;
        if (!solve_with_det(m, e, x, det)) throw std::domain_error("inverse: singular matrix");
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = x[i];
    }
    return inv;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1, Integer(0));
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPoly::coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& IntPoly::lead() const {
    if (coeffs_.empty()) throw std::domain_error("lead of zero polynomial");
    return coeffs_.back();
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (sgn(lead()) < 0) g = -g;
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(v));
}

Integer IntPoly::eval(const Integer& x) const {
    Integer r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

IntPoly IntPoly::reversed(std::size_t n) const {
    if (degree() > static_cast<int>(n)) throw std::invalid_argument("reversed: degree exceeds n");
    std::vector<Integer> v(n + 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[n - i] = coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& s, const IntPoly& a) {
    IntPoly r = a;
    for (auto& c : r.coeffs_) c *= s;
    r.trim();
    return r;
}

std::string IntPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Integer& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag;
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    if (f.is_zero()) return IntPoly{};
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<Integer> r = f.coefficients();
    const auto& gc = g.coefficients();
    const std::size_t dg = gc.size() - 1;
    std::vector<Integer> q(r.size() - dg, Integer(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer& top = r[k + dg];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), gc.back().get_mpz_t())) return std::nullopt;
        Integer qk;
        mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), gc.back().get_mpz_t());
        for (std::size_t j = 0; j <= dg; ++j) r[k + j] -= qk * gc[j];
        q[k] = qk;
    }
    for (const auto& c : r)
        if (sgn(c) != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
    std::vector<Integer> r = f.coefficients();
    const auto& gc = g.coefficients();
    const std::size_t dg = gc.size() - 1;
    const Integer& lg = gc.back();
    while (!r.empty() && r.size() - 1 >= dg) {
        const std::size_t shift = r.size() - 1 - dg;
        Integer top = r.back();
        for (auto& c : r) c *= lg;
        for (std::size_t j = 0; j <= dg; ++j) r[shift + j] -= top * gc[j];
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    }
    return IntPoly(std::move(r));
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("poly_gcd: both inputs zero");
    IntPoly a = f.primitive_part();
    IntPoly b = g.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a.primitive_part();
}

bool poly_squarefree(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("poly_squarefree: zero polynomial");
    if (f.degree() <= 0) return true;
    return poly_gcd(f, f.derivative()).is_constant();
}

std::size_t distinct_root_count(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("distinct_root_count: zero polynomial");
    if (f.degree() <= 0) return 0;
    IntPoly g = poly_gcd(f, f.derivative());
    return static_cast<std::size_t>(f.degree() - g.degree());
}

IntPoly char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly: non-square matrix");
    if (!m.is_integral()) throw std::invalid_argument("char_poly: non-integral matrix");
    const std::size_t n = m.rows();
    std::vector<Integer> xs(n + 1);
    std::vector<Rational> ys(n + 1);
    IntegerMatrix base = integerize(m);
    for (std::size_t k = 0; k <= n; ++k) {
        xs[k] = static_cast<long>(k);
        IntegerMatrix e = base;
        for (auto& x : e.a) x = -x;
        for (std::size_t i = 0; i < n; ++i) e.at(i, i) += xs[k];
        ys[k] = integer_determinant(std::move(e));
    }
    return to_int_poly(interpolate(xs, ys));
}

// ------------------------------------------------------- rational functions

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator == b.numerator && a.denominator == b.denominator;
}

RationalFunction rf_normalize(const RationalFunction& r) {
    if (r.denominator.is_zero()) throw std::invalid_argument("rf_normalize: zero denominator");
    if (r.numerator.is_zero()) return {IntPoly{}, IntPoly{1}};
    IntPoly g = poly_gcd(r.numerator, r.denominator);
    IntPoly num = *exact_divide(r.numerator, g);
    IntPoly den = *exact_divide(r.denominator, g);
    Integer c;
    Integer cn = num.content(), cd = den.content();
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (sgn(den.lead()) < 0) c = -c;
    num = *exact_divide(num, IntPoly({c}));
    den = *exact_divide(den, IntPoly({c}));
    return {std::move(num), std::move(den)};
}

std::size_t distinct_pole_count(const RationalFunction& r) {
    if (r.denominator.is_zero()) throw std::invalid_argument("distinct_pole_count: zero denominator");
    return distinct_root_count(rf_normalize(r).denominator);
}

// ----------------------------------------------------------- interpolation

void trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly interpolate(std::span<const Integer> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    const std::size_t n = xs.size();
    // Newton divided differences, in place.
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational denom(xs[i] - xs[i - level]);
            dd[i] = (dd[i] - dd[i - 1]) / denom;
        }
    RatPoly p;
    for (std::size_t k = n; k-- > 0;) {
        // p = p·(t - x_k) + dd[k]
        RatPoly q(p.size() + 1, Rational(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] -= p[i] * xs[k];
        }
        q[0] += dd[k];
        p = std::move(q);
    }
    trim(p);
    return p;
}

IntPoly to_int_poly(const RatPoly& p) {
    std::vector<Integer> v;
    v.reserve(p.size());
    for (const auto& c : p) {
        if (c.get_den() != 1) throw std::domain_error("to_int_poly: non-integral coefficient");
        v.push_back(c.get_num());
    }
    return IntPoly(std::move(v));
}

RatPoly to_rat_poly(const IntPoly& p) {
    RatPoly r;
    for (const auto& c : p.coefficients()) r.emplace_back(c);
    return r;
}

PencilForms pencil_forms(const Matrix& base, const Matrix& slope, const Vector& x,
                         const Vector& y, long first_sample) {
    const std::size_t n = base.rows();
    if (!base.is_square() || slope.rows() != n || slope.cols() != n || x.size() != n || y.size() != n)
        throw std::invalid_argument("pencil_forms: dimension mismatch");
    std::vector<Integer> xs;
    std::vector<Rational> dets, forms;
    Vector sol;
    Rational det;
    std::size_t singular = 0;
    for (long c = first_sample; xs.size() < n + 1; ++c) {
        Matrix m = base + Rational(c) * slope;
        if (!solve_with_det(m, x, sol, det)) {
            if (++singular > n) throw std::domain_error("pencil_forms: pencil is singular");
            continue;
        }
        xs.emplace_back(c);
        dets.push_back(det);
        forms.push_back(dot(y, sol) * det);
    }
    return {interpolate(xs, dets), interpolate(xs, forms)};
}

} // namespace walkctl
