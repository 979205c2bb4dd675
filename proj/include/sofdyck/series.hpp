#ifndef SOFDYCK_SERIES_HPP
#define SOFDYCK_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sofdyck
{

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational &q);

// Polynomial over Q. Coefficients are stored lowest degree first and the
// leading coefficient is nonzero unless the polynomial is zero.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const Rational &c);
    static Polynomial monomial(const Rational &c, std::size_t degree);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    // Zero past the degree.
    Rational coeff(std::size_t i) const;
    const std::vector<Rational> &coeffs() const { return c_; }
    const Rational &leading() const;

    // p(scale * z^power)
    Polynomial substitute_monomial(const Rational &scale, std::size_t power) const;

    double evaluate(double z) const;
    Rational evaluate(const Rational &z) const;

    std::string to_string(const char *var = "z") const;

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Polynomial &o);

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial &b) { return a *= b; }
    friend Polynomial operator*(const Rational &s, Polynomial p);
    friend Polynomial operator-(Polynomial p);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    void normalize();

    std::vector<Rational> c_;
};

struct PolyDivision {
    Polynomial quotient;
    Polynomial remainder;
};

// Euclidean division; throws std::domain_error on a zero divisor.
PolyDivision divmod(const Polynomial &num, const Polynomial &den);

// Thrown by exact_div when the division leaves a remainder.
class InexactDivision : public std::domain_error
{
public:
    InexactDivision(Polynomial quotient, Polynomial remainder);

    const Polynomial &quotient() const { return quotient_; }
    const Polynomial &remainder() const { return remainder_; }

private:
    Polynomial quotient_;
    Polynomial remainder_;
};

Polynomial exact_div(const Polynomial &num, const Polynomial &den);

// Truncated power series sum_{0<=n<=M} c_n z^n with exact coefficients.
// Binary operations truncate to the smaller order and never extend it.
class PowerSeries
{
public:
    // The zero series of order 0.
    PowerSeries();
    PowerSeries(std::vector<Rational> coeffs);
    PowerSeries(std::size_t order, std::initializer_list<long> leading);

    static PowerSeries zero(std::size_t order);
    static PowerSeries one(std::size_t order);
    static PowerSeries constant(const Rational &c, std::size_t order);
    // z truncated at the given order.
    static PowerSeries variable(std::size_t order);
    static PowerSeries from_polynomial(const Polynomial &p, std::size_t order);

    std::size_t order() const { return c_.size() - 1; }
    const Rational &operator[](std::size_t n) const { return c_[n]; }
    const std::vector<Rational> &coeffs() const { return c_; }

    PowerSeries truncate(std::size_t order) const;
    // Multiply by z^k, keeping the order.
    PowerSeries shift(std::size_t k) const;
    PowerSeries derivative() const;
    // Integral with zero constant term; the result has one more coefficient.
    PowerSeries integral() const;

    std::string to_string(const char *var = "z") const;

    PowerSeries &operator+=(const PowerSeries &o);
    PowerSeries &operator-=(const PowerSeries &o);
    PowerSeries &operator*=(const PowerSeries &o);
    PowerSeries &operator*=(const Rational &s);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries &b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries &b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const PowerSeries &b) { return a *= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational &s) { return a *= s; }
    friend PowerSeries operator*(const Rational &s, PowerSeries a) { return a *= s; }
    friend PowerSeries operator-(PowerSeries a);
    friend PowerSeries operator+(PowerSeries a, const Rational &s);
    friend PowerSeries operator+(const Rational &s, PowerSeries a) { return std::move(a) + s; }
    friend PowerSeries operator-(PowerSeries a, const Rational &s) { return std::move(a) + Rational(-s); }
    friend PowerSeries operator-(const Rational &s, PowerSeries a) { return -std::move(a) + s; }

    friend bool operator==(const PowerSeries &, const PowerSeries &) = default;

private:
    std::vector<Rational> c_;
};

// 1/a; throws std::domain_error when a has zero constant term.
PowerSeries inverse(const PowerSeries &a);
PowerSeries operator/(const PowerSeries &a, const PowerSeries &b);

// Square root with constant term +1; requires a_0 == 1.
PowerSeries sqrt(const PowerSeries &a);
// Requires a_0 == 0.
PowerSeries exp(const PowerSeries &a);
// Requires a_0 == 1.
PowerSeries log(const PowerSeries &a);

PowerSeries pow(const PowerSeries &a, unsigned k);

// Square matrix with polynomial entries.
class PolyMatrix
{
public:
    explicit PolyMatrix(std::size_t dim = 0);

    std::size_t dim() const { return dim_; }
    Polynomial &at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Polynomial &at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    // Delete row and column k.
    PolyMatrix minor(std::size_t k) const;

    friend PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b);

private:
    std::size_t dim_;
    std::vector<Polynomial> entries_;
};

// Bareiss fraction-free elimination over Q[z]. det of the 0x0 matrix is 1.
Polynomial det(const PolyMatrix &m);

// exp(sum_{1<=n<=M} p_n z^n / n). Requires at least M counts.
PowerSeries zeta_from_counts(std::span<const Integer> counts, std::size_t order);
PowerSeries zeta_from_counts(std::span<const std::uint64_t> counts, std::size_t order);

// p_1..p_M from the coefficients of z * zeta' / zeta. Requires zeta_0 == 1.
std::vector<Rational> counts_from_zeta(const PowerSeries &zeta);

// True when every entry is a nonnegative integer.
bool all_nonnegative_integers(std::span<const Rational> values);

} // namespace sofdyck

#endif
