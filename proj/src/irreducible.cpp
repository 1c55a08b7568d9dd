#include "walkctl/irreducible.hpp"

#include "walkctl/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace walkctl {

namespace {

// ---- arithmetic in Z_p[t]; coefficients in [0, p), index = degree

using ModPoly = std::vector<std::uint64_t>;

void mp_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Remainder of a by b (b nonzero), quotient optional.
ModPoly mp_divmod(ModPoly a, const ModPoly& b, std::uint64_t p, ModPoly* quotient = nullptr) {
    mp_trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t inv = invmod(b.back(), p);
    if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const std::uint64_t q = mulmod(a.back(), inv, p);
        if (quotient) (*quotient)[shift] = q;
        for (std::size_t j = 0; j <= db; ++j)
            a[shift + j] = (a[shift + j] + p - mulmod(q, b[j], p)) % p;
        mp_trim(a);
    }
    if (quotient) mp_trim(*quotient);
    return a;
}

ModPoly mp_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
    return mp_divmod(std::move(c), f, p);
}

ModPoly mp_pow(ModPoly base, std::uint64_t e, const ModPoly& f, std::uint64_t p) {
    ModPoly r{1};
    base = mp_divmod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = mp_mulmod(r, base, f, p);
        base = mp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    mp_trim(a);
    mp_trim(b);
    while (!b.empty()) {
        ModPoly r = mp_divmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

ModPoly mp_derivative(const ModPoly& a, std::uint64_t p) {
    ModPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mulmod(a[i], i % p, p));
    mp_trim(d);
    return d;
}

ModPoly reduce(const IntPoly& f, std::uint64_t p) {
    ModPoly r;
    Integer m;
    for (const auto& c : f.coefficients()) {
        mpz_fdiv_r_ui(m.get_mpz_t(), c.get_mpz_t(), p);
        r.push_back(m.get_ui());
    }
    mp_trim(r);
    return r;
}

// ---- Kronecker search

std::vector<std::int64_t> divisors(std::uint64_t n) {
    std::vector<std::int64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            small.push_back(static_cast<std::int64_t>(d));
            if (d * d != n) large.push_back(static_cast<std::int64_t>(n / d));
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

struct SamplePoint {
    std::int64_t x;
    std::vector<std::int64_t> divs; // positive divisors of |f(x)|
};

class KroneckerSearch {
public:
    KroneckerSearch(const IntPoly& f, std::vector<SamplePoint> pts) : f_(f), pts_(std::move(pts)) {}

    IntPoly run(std::size_t k) {
        k_ = k;
        chosen_.assign(pts_.size(), 0);
        found_ = IntPoly{};
        recurse(0);
        return found_;
    }

private:
    bool recurse(std::size_t i) {
        if (i == pts_.size()) return test_candidate();
        for (std::int64_t d : pts_[i].divs) {
            for (int s : {1, -1}) {
                // g and -g give the same factor; pin the sign of g at the first point.
                if (i == 0 && s < 0) continue;
                const std::int64_t val = s * d;
                bool ok = true;
                for (std::size_t j = 0; j < i && ok; ++j)
                    ok = (val - chosen_[j]) % (pts_[i].x - pts_[j].x) == 0;
                if (!ok) continue;
                chosen_[i] = val;
                if (recurse(i + 1)) return true;
            }
        }
        return false;
    }

    bool test_candidate() {
        std::vector<Integer> xs;
        std::vector<Rational> ys;
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            xs.emplace_back(static_cast<long>(pts_[i].x));
            ys.emplace_back(static_cast<long>(chosen_[i]));
        }
        RatPoly g = interpolate(xs, ys);
        if (g.size() != k_ + 1) return false;
        for (const auto& c : g)
            if (c.get_den() != 1) return false;
        IntPoly gi = to_int_poly(g);
        if (!mpz_divisible_p(f_.lead().get_mpz_t(), gi.lead().get_mpz_t())) return false;
        if (!exact_divide(f_, gi)) return false;
        found_ = gi;
        return true;
    }

    const IntPoly& f_;
    std::vector<SamplePoint> pts_;
    std::size_t k_ = 0;
    std::vector<std::int64_t> chosen_;
    IntPoly found_;
};

constexpr unsigned long kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};

} // namespace

std::vector<std::size_t> modular_factor_degrees(const IntPoly& f, unsigned long p) {
    if (f.degree() < 1) return {};
    ModPoly g = reduce(f, p);
    if (static_cast<int>(g.size()) - 1 != f.degree()) return {};
    if (mp_gcd(g, mp_derivative(g, p), p).size() != 1) return {};
    {
        const std::uint64_t inv = invmod(g.back(), p);
        for (auto& c : g) c = mulmod(c, inv, p);
    }
    std::vector<std::size_t> degrees;
    const ModPoly x{0, 1};
    ModPoly h = x;
    for (std::size_t i = 1; 2 * i <= g.size() - 1; ++i) {
        h = mp_pow(h, p, g, p);
        ModPoly hx = h;
        hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
        hx[1] = (hx[1] + p - 1) % p;
        mp_trim(hx);
        ModPoly d = mp_gcd(hx, g, p);
        if (d.size() > 1) {
            for (std::size_t c = 0; c < (d.size() - 1) / i; ++c) degrees.push_back(i);
            ModPoly q;
            mp_divmod(g, d, p, &q);
            g = std::move(q);
            h = mp_divmod(h, g, p);
        }
    }
    if (g.size() > 1) degrees.push_back(g.size() - 1);
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

IntPoly kronecker_factor(const IntPoly& f, std::size_t k) {
    if (k == 0 || static_cast<int>(k) >= f.degree()) return {};
    std::vector<SamplePoint> candidates;
    for (std::int64_t x = -8; x <= 8; ++x) {
        Integer v = abs(f.eval(Integer(static_cast<long>(x))));
        if (sgn(v) == 0) {
            IntPoly lin{-x, 1};
            if (k == 1) return lin;
            continue;
        }
        if (!v.fits_slong_p() || v > Integer(1000000000000L)) continue;
        candidates.push_back({x, divisors(v.get_ui())});
    }
    if (candidates.size() < k + 1) throw GuardError("kronecker_factor: not enough usable sample points");
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const SamplePoint& a, const SamplePoint& b) { return a.divs.size() < b.divs.size(); });
    candidates.resize(k + 1);
    KroneckerSearch search(f, std::move(candidates));
    return search.run(k);
}

bool is_irreducible_over_q(const IntPoly& poly) {
    if (poly.degree() < 1) return false;
    if (poly.degree() == 1) return true;
    const IntPoly f = poly.primitive_part();
    if (!poly_squarefree(f)) return false;
    const std::size_t n = static_cast<std::size_t>(f.degree());

    std::set<std::size_t> allowed;
    for (std::size_t k = 1; k <= n / 2; ++k) allowed.insert(k);
    for (unsigned long p : kPrimes) {
        if (allowed.empty()) break;
        std::vector<std::size_t> degs = modular_factor_degrees(f, p);
        if (degs.empty()) continue;
        // A degree-k factor over Q reduces to a product of some of these.
        std::vector<bool> reachable(n + 1, false);
        reachable[0] = true;
        for (std::size_t d : degs)
            for (std::size_t s = n; s >= d; --s)
                if (reachable[s - d]) reachable[s] = true;
        for (auto it = allowed.begin(); it != allowed.end();)
            it = reachable[*it] ? std::next(it) : allowed.erase(it);
    }
    for (std::size_t k : allowed)
        if (!kronecker_factor(f, k).is_zero()) return false;
    return true;
}

} // namespace walkctl
