#include <sofdyck/series.hpp>

#include <algorithm>
#include <sstream>

namespace sofdyck
{

std::string to_string(const Rational &q)
{
    return q.get_str();
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs) {
        c_.emplace_back(c);
    }
    normalize();
}

Polynomial Polynomial::constant(const Rational &c)
{
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(const Rational &c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize()
{
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

Rational Polynomial::coeff(std::size_t i) const
{
    return i < c_.size() ? c_[i] : Rational(0);
}

const Rational &Polynomial::leading() const
{
    if (c_.empty()) {
        throw std::domain_error("leading coefficient of the zero polynomial");
    }
    return c_.back();
}

Polynomial Polynomial::substitute_monomial(const Rational &scale, std::size_t power) const
{
    if (c_.empty()) {
        return {};
    }
    if (power == 0) {
        return constant(evaluate(scale));
    }
    std::vector<Rational> out((c_.size() - 1) * power + 1);
    Rational s = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        out[i * power] = c_[i] * s;
        s *= scale;
    }
    return Polynomial(std::move(out));
}

double Polynomial::evaluate(double z) const
{
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * z + it->get_d();
    }
    return acc;
}

Rational Polynomial::evaluate(const Rational &z) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

std::string Polynomial::to_string(const char *var) const
{
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) {
            continue;
        }
        Rational a = abs(c_[i]);
        if (first) {
            if (c_[i] < 0) {
                os << "-";
            }
        } else {
            os << (c_[i] < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) {
            os << a.get_str();
        }
        if (i >= 1) {
            os << var;
        }
        if (i >= 2) {
            os << "^" << i;
        }
    }
    return os.str();
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    normalize();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    normalize();
    return *this;
}

Polynomial &Polynomial::operator*=(const Polynomial &o)
{
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            out[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(out);
    normalize();
    return *this;
}

Polynomial operator*(const Rational &s, Polynomial p)
{
    for (auto &c : p.c_) {
        c *= s;
    }
    p.normalize();
    return p;
}

Polynomial operator-(Polynomial p)
{
    for (auto &c : p.c_) {
        c = -c;
    }
    return p;
}

PolyDivision divmod(const Polynomial &num, const Polynomial &den)
{
    if (den.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    std::vector<Rational> rem = num.coeffs();
    const auto dd = static_cast<std::size_t>(den.degree());
    if (rem.size() <= dd) {
        return {Polynomial{}, num};
    }
    std::vector<Rational> quot(rem.size() - dd);
    const Rational &lead = den.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + dd] / lead;
        quot[k] = q;
        if (q == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[k + j] -= q * den.coeffs()[j];
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

InexactDivision::InexactDivision(Polynomial quotient, Polynomial remainder)
    : std::domain_error("inexact polynomial division, remainder " + remainder.to_string()),
      quotient_(std::move(quotient)), remainder_(std::move(remainder))
{
}

Polynomial exact_div(const Polynomial &num, const Polynomial &den)
{
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) {
        throw InexactDivision(std::move(q), std::move(r));
    }
    return q;
}

// ---------------------------------------------------------------- PowerSeries

PowerSeries::PowerSeries() : c_(1) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    if (c_.empty()) {
        throw std::invalid_argument("PowerSeries needs at least one coefficient");
    }
}

PowerSeries::PowerSeries(std::size_t order, std::initializer_list<long> leading) : c_(order + 1)
{
    std::size_t i = 0;
    for (long v : leading) {
        if (i > order) {
            break;
        }
        c_[i++] = v;
    }
}

PowerSeries PowerSeries::zero(std::size_t order)
{
    return PowerSeries(std::vector<Rational>(order + 1));
}

PowerSeries PowerSeries::one(std::size_t order)
{
    return constant(1, order);
}

PowerSeries PowerSeries::constant(const Rational &c, std::size_t order)
{
    std::vector<Rational> v(order + 1);
    v[0] = c;
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::variable(std::size_t order)
{
    std::vector<Rational> v(order + 1);
    if (order >= 1) {
        v[1] = 1;
    }
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::from_polynomial(const Polynomial &p, std::size_t order)
{
    std::vector<Rational> v(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        v[i] = p.coeff(i);
    }
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::truncate(std::size_t order) const
{
    if (order >= this->order()) {
        return *this;
    }
    return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

PowerSeries PowerSeries::shift(std::size_t k) const
{
    std::vector<Rational> v(c_.size());
    for (std::size_t i = k; i < c_.size(); ++i) {
        v[i] = c_[i - k];
    }
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::derivative() const
{
    if (c_.size() == 1) {
        return zero(0);
    }
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        v[i - 1] = c_[i] * static_cast<long>(i);
    }
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::integral() const
{
    std::vector<Rational> v(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        v[i + 1] = c_[i] / static_cast<long>(i + 1);
    }
    return PowerSeries(std::move(v));
}

std::string PowerSeries::to_string(const char *var) const
{
    std::string s = Polynomial(c_).to_string(var);
    return s + " + O(" + var + "^" + std::to_string(order() + 1) + ")";
}

PowerSeries &PowerSeries::operator+=(const PowerSeries &o)
{
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    return *this;
}

PowerSeries &PowerSeries::operator-=(const PowerSeries &o)
{
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    return *this;
}

PowerSeries &PowerSeries::operator*=(const PowerSeries &o)
{
    const std::size_t n = std::min(c_.size(), o.c_.size());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            out[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(out);
    return *this;
}

PowerSeries &PowerSeries::operator*=(const Rational &s)
{
    for (auto &c : c_) {
        c *= s;
    }
    return *this;
}

PowerSeries operator-(PowerSeries a)
{
    for (auto &c : a.c_) {
        c = -c;
    }
    return a;
}

PowerSeries operator+(PowerSeries a, const Rational &s)
{
    a.c_[0] += s;
    return a;
}

PowerSeries inverse(const PowerSeries &a)
{
    if (a[0] == 0) {
        throw std::domain_error("series division: divisor has zero constant term");
    }
    const std::size_t n = a.order() + 1;
    std::vector<Rational> q(n);
    const Rational inv0 = 1 / a[0];
    q[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a[j] != 0) {
                acc += a[j] * q[k - j];
            }
        }
        q[k] = -acc * inv0;
    }
    return PowerSeries(std::move(q));
}

PowerSeries operator/(const PowerSeries &a, const PowerSeries &b)
{
    if (b[0] == 0) {
        throw std::domain_error("series division: divisor has zero constant term");
    }
    const std::size_t n = std::min(a.order(), b.order()) + 1;
    std::vector<Rational> q(n);
    const Rational inv0 = 1 / b[0];
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = a[k];
        for (std::size_t j = 1; j <= k; ++j) {
            if (b[j] != 0) {
                acc -= b[j] * q[k - j];
            }
        }
        q[k] = acc * inv0;
    }
    return PowerSeries(std::move(q));
}

// Coefficients of s^2 = a solved one degree at a time:
// 2 s_0 s_n = a_n - sum_{1<=k<n} s_k s_{n-k}.
PowerSeries sqrt(const PowerSeries &a)
{
    if (a[0] != 1) {
        throw std::domain_error("series sqrt: constant term must be 1, got " + a[0].get_str());
    }
    const std::size_t n = a.order() + 1;
    std::vector<Rational> s(n);
    s[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc = a[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= s[j] * s[k - j];
        }
        s[k] = acc / 2;
    }
    return PowerSeries(std::move(s));
}

// e' = a' e, so n e_n = sum_{1<=k<=n} k a_k e_{n-k}.
PowerSeries exp(const PowerSeries &a)
{
    if (a[0] != 0) {
        throw std::domain_error("series exp: constant term must be 0, got " + a[0].get_str());
    }
    const std::size_t n = a.order() + 1;
    std::vector<Rational> e(n);
    e[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        Rational acc = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (a[k] != 0) {
                acc += a[k] * e[m - k] * static_cast<long>(k);
            }
        }
        e[m] = acc / static_cast<long>(m);
    }
    return PowerSeries(std::move(e));
}

// a l' = a', so n l_n = n a_n - sum_{1<=k<n} k l_k a_{n-k}.
PowerSeries log(const PowerSeries &a)
{
    if (a[0] != 1) {
        throw std::domain_error("series log: constant term must be 1, got " + a[0].get_str());
    }
    const std::size_t n = a.order() + 1;
    std::vector<Rational> l(n);
    for (std::size_t m = 1; m < n; ++m) {
        Rational acc = a[m] * static_cast<long>(m);
        for (std::size_t k = 1; k < m; ++k) {
            if (l[k] != 0) {
                acc -= l[k] * a[m - k] * static_cast<long>(k);
            }
        }
        l[m] = acc / static_cast<long>(m);
    }
    return PowerSeries(std::move(l));
}

PowerSeries pow(const PowerSeries &a, unsigned k)
{
    PowerSeries result = PowerSeries::one(a.order());
    PowerSeries base = a;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

PolyMatrix PolyMatrix::minor(std::size_t k) const
{
    if (k >= dim_) {
        throw std::out_of_range("PolyMatrix::minor index");
    }
    PolyMatrix m(dim_ - 1);
    for (std::size_t i = 0, r = 0; i < dim_; ++i) {
        if (i == k) {
            continue;
        }
        for (std::size_t j = 0, c = 0; j < dim_; ++j) {
            if (j == k) {
                continue;
            }
            m.at(r, c++) = at(i, j);
        }
        ++r;
    }
    return m;
}

PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b)
{
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("PolyMatrix product: dimension mismatch");
    }
    const std::size_t n = a.dim();
    PolyMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial acc;
            for (std::size_t k = 0; k < n; ++k) {
                acc += a.at(i, k) * b.at(k, j);
            }
            out.at(i, j) = std::move(acc);
        }
    }
    return out;
}

Polynomial det(const PolyMatrix &m)
{
    const std::size_t n = m.dim();
    if (n == 0) {
        return Polynomial::constant(1);
    }
    std::vector<Polynomial> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = m.at(i, j);
        }
    }
    auto at = [&](std::size_t i, std::size_t j) -> Polynomial & { return a[i * n + j]; };

    bool negate = false;
    Polynomial prev = Polynomial::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && at(p, k).is_zero()) {
                ++p;
            }
            if (p == n) {
                return {};
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(at(k, j), at(p, j));
            }
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Bareiss: the division by the previous pivot is exact.
                at(i, j) = exact_div(at(k, k) * at(i, j) - at(i, k) * at(k, j), prev);
            }
            at(i, k) = Polynomial{};
        }
        prev = at(k, k);
    }
    Polynomial d = at(n - 1, n - 1);
    return negate ? -d : d;
}

// ------------------------------------------------------------ zeta <-> counts

PowerSeries zeta_from_counts(std::span<const Integer> counts, std::size_t order)
{
    if (counts.size() < order) {
        throw std::invalid_argument("zeta_from_counts: need " + std::to_string(order) + " counts, got " +
                                    std::to_string(counts.size()));
    }
    std::vector<Rational> v(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        if (counts[n - 1] < 0) {
            throw std::invalid_argument("zeta_from_counts: negative count");
        }
        v[n] = Rational(counts[n - 1]) / static_cast<long>(n);
    }
    return exp(PowerSeries(std::move(v)));
}

PowerSeries zeta_from_counts(std::span<const std::uint64_t> counts, std::size_t order)
{
    std::vector<Integer> big;
    big.reserve(counts.size());
    for (auto c : counts) {
        Integer z;
        mpz_import(z.get_mpz_t(), 1, -1, sizeof(c), 0, 0, &c);
        big.push_back(z);
    }
    return zeta_from_counts(std::span<const Integer>(big), order);
}

std::vector<Rational> counts_from_zeta(const PowerSeries &zeta)
{
    if (zeta[0] != 1) {
        throw std::domain_error("counts_from_zeta: constant term must be 1");
    }
    const PowerSeries l = log(zeta);
    std::vector<Rational> p(zeta.order());
    for (std::size_t n = 1; n <= zeta.order(); ++n) {
        p[n - 1] = l[n] * static_cast<long>(n);
    }
    return p;
}

bool all_nonnegative_integers(std::span<const Rational> values)
{
    return std::all_of(values.begin(), values.end(),
                       [](const Rational &q) { return q.get_den() == 1 && q >= 0; });
}

} // namespace sofdyck
