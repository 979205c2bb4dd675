#include <sofdyck/entropy.hpp>

#include <cmath>
#include <vector>

#include <sofdyck/formulas.hpp>

namespace sofdyck
{

namespace
{

std::vector<double> to_doubles(const Polynomial &p)
{
    std::vector<double> out;
    for (const auto &c : p.coeffs()) {
        out.push_back(c.get_d());
    }
    return out;
}

double horner(const std::vector<double> &c, double z)
{
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

double horner_derivative(const std::vector<double> &c, double z)
{
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) {
        acc = acc * z + static_cast<double>(i) * c[i];
    }
    return acc;
}

int sign(double x)
{
    return (x > 0) - (x < 0);
}

EntropyResult from_root(const Root &r)
{
    EntropyResult e;
    e.root = r.z;
    e.value = -std::log(r.z);
    e.residual = r.residual;
    e.bracket_lo = r.lo;
    e.bracket_hi = r.hi;
    e.method = EntropyMethod::root_equation;
    return e;
}

EntropyResult closed(double value)
{
    EntropyResult e;
    e.value = value;
    e.root = std::exp(-value);
    e.bracket_lo = e.bracket_hi = e.root;
    e.method = EntropyMethod::closed_form;
    return e;
}

} // namespace

const char *to_string(EntropyMethod m)
{
    switch (m) {
    case EntropyMethod::root_equation:
        return "root-equation";
    case EntropyMethod::closed_form:
        return "closed-form";
    case EntropyMethod::growth_estimate:
        return "growth-estimate";
    }
    return "?";
}

const char *to_string(ClosedEntropy c)
{
    switch (c) {
    case ClosedEntropy::bouquet_n12:
        return "bouquet_N12";
    case ClosedEntropy::schroeder:
        return "schroeder";
    case ClosedEntropy::even_odd:
        return "even_odd";
    case ClosedEntropy::psi_uniform:
        return "psi_uniform";
    }
    return "?";
}

Root smallest_root(const std::function<double(double)> &f, const std::function<double(double)> &df, double upper,
                   double residual_tol)
{
    if (!(upper > 0.0)) {
        throw NumericFailure("root search: empty interval");
    }
    const double step = upper / root_scan_steps;
    double lo = 0.0;
    double flo = f(lo);
    double hi = -1.0;
    for (int i = 1; i <= root_scan_steps; ++i) {
        const double z = i == root_scan_steps ? upper : step * i;
        const double fz = f(z);
        if (fz == 0.0) {
            return {z, z, z, 0.0};
        }
        if (sign(fz) != sign(flo) && flo != 0.0) {
            hi = z;
            break;
        }
        lo = z;
        flo = fz;
    }
    if (hi < 0.0) {
        throw NumericFailure("root search: no sign change on (0, " + std::to_string(upper) + ")");
    }
    while (hi - lo > root_bracket_width) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double fm = f(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (sign(fm) == sign(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double z = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        const double d = df(z);
        if (d == 0.0) {
            break;
        }
        const double next = z - f(z) / d;
        if (next < lo || next > hi) {
            break;
        }
        z = next;
    }
    const double residual = std::fabs(f(z));
    if (residual > residual_tol) {
        throw NumericFailure("root search: residual " + std::to_string(residual) + " above tolerance");
    }
    return {z, lo, hi, residual};
}

EntropyResult entropy_section2(const SectionTwo &s)
{
    if (!s.graph.distinguished()) {
        throw std::invalid_argument("entropy_section2: graph needs a distinguished vertex");
    }
    LoopTotals t = loop_totals(s);
    bool reflected = false;
    if (t.k_plus > t.k_minus) {
        std::swap(t.k_plus, t.k_minus);
        reflected = true;
    }
    const auto ratio = first_return_ratio(s.graph, *s.graph.distinguished());
    const auto num = to_doubles(ratio.numerator);
    const auto den = to_doubles(ratio.denominator);
    const double c = static_cast<double>(t.k_minus * t.k_minus + t.k);
    const double km = static_cast<double>(t.k_minus);

    // The root must lie below the first pole of gR.
    double upper = 1.0;
    {
        const double step = 1.0 / root_scan_steps;
        for (int i = 1; i <= root_scan_steps; ++i) {
            if (sign(horner(den, step * i)) != sign(horner(den, 0.0))) {
                auto d = [&](double z) { return horner(den, z); };
                auto dd = [&](double z) { return horner_derivative(den, z); };
                upper = smallest_root(d, dd, step * i, 1e-9).z;
                break;
            }
        }
    }

    auto f = [&](double z) { return z * horner(num, z) * c - km * horner(den, z); };
    auto df = [&](double z) {
        return (horner(num, z) + z * horner_derivative(num, z)) * c - km * horner_derivative(den, z);
    };
    EntropyResult e = from_root(smallest_root(f, df, upper));
    if (reflected) {
        e.note = "K+ > K-: roles of the bracket signs exchanged";
    }
    return e;
}

EntropyResult entropy_bouquet(int n, int j, int q)
{
    if (n < 1 || j < 1 || q < 1) {
        throw std::invalid_argument("entropy_bouquet: N, J, Q must be positive");
    }
    const double a = static_cast<double>(n + 1) / j;
    const double b = 1.0 / j;
    auto f = [&](double z) { return std::pow(z, q) + a * z - b; };
    auto df = [&](double z) { return q * std::pow(z, q - 1) + a; };
    return from_root(smallest_root(f, df, 1.0));
}

EntropyResult entropy_closed(ClosedEntropy which, int n, int k)
{
    if (n < 1) {
        throw std::invalid_argument("entropy_closed: N must be positive");
    }
    const double nn = n;
    switch (which) {
    case ClosedEntropy::bouquet_n12:
        return closed(std::log(2.0) - std::log(std::sqrt((nn + 1) * (nn + 1) + 4) - nn - 1));
    case ClosedEntropy::schroeder:
        return closed(std::log(2.0) - std::log(std::sqrt((nn + 2) * (nn + 2) + 4) - nn - 2));
    case ClosedEntropy::even_odd:
        return closed(std::log(2.0) + std::log(nn) - std::log(nn + 2 - std::sqrt((nn + 2) * (nn + 2) - 4 * nn)));
    case ClosedEntropy::psi_uniform: {
        if (k < 1 || k > n) {
            throw std::invalid_argument("entropy_closed: psi_uniform needs 1 <= K <= N");
        }
        if (k == n) {
            EntropyResult e = closed(std::log(nn + 1));
            e.degenerate_fallback = true;
            e.note = "K = N: formula indeterminate, Dyck value log(N+1)";
            return e;
        }
        const double kk = k;
        const double n2 = nn * nn;
        return closed(std::log(nn) + std::log(nn - kk) + std::log(2.0) -
                      std::log(std::sqrt((n2 + kk) * (n2 + kk) + 4 * (nn - kk) * n2) - n2 - kk));
    }
    }
    throw std::invalid_argument("entropy_closed: unknown formula");
}

EntropyResult entropy_growth_check(const Shift &shift, std::size_t n_max, unsigned threads)
{
    const GrowthEstimate g = entropy_estimate(shift, n_max, threads);
    EntropyResult e;
    e.value = g.value;
    e.root = std::exp(-g.value);
    e.bracket_lo = e.bracket_hi = e.root;
    e.method = EntropyMethod::growth_estimate;
    e.note = "card L_" + std::to_string(n_max) + " = " + std::to_string(g.counts.back());
    return e;
}

} // namespace sofdyck
