#ifndef SOFDYCK_ENTROPY_HPP
#define SOFDYCK_ENTROPY_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include <sofdyck/shifts.hpp>

namespace sofdyck
{

class NumericFailure : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class EntropyMethod { root_equation, closed_form, growth_estimate };
const char *to_string(EntropyMethod m);

// Natural-log entropy. For root methods value = -log(root).
struct EntropyResult {
    double value = 0.0;
    double root = 0.0;
    double residual = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    EntropyMethod method = EntropyMethod::root_equation;
    bool degenerate_fallback = false;
    std::string note;
};

constexpr int root_scan_steps = 1024;
constexpr double root_bracket_width = 1e-14;
constexpr double root_residual_tol = 1e-12;

struct Root {
    double z = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double residual = 0.0;
};

// Smallest root of f in (0, upper): scan for a sign change, bisect, then a
// Newton polish that stays inside the bracket. Throws NumericFailure.
Root smallest_root(const std::function<double(double)> &f, const std::function<double(double)> &df, double upper,
                   double residual_tol = root_residual_tol);

// Smallest positive root of z gR(z) = K_-/(K_-^2 + K), reflecting +/- first
// when K_+ > K_-.
EntropyResult entropy_section2(const SectionTwo &s);

// Positive root of z^Q + ((N+1)/J) z - 1/J.
EntropyResult entropy_bouquet(int n, int j, int q);

enum class ClosedEntropy { bouquet_n12, schroeder, even_odd, psi_uniform };
const char *to_string(ClosedEntropy c);

// k is used only by psi_uniform; K = N returns log(N+1) flagged as a fallback.
EntropyResult entropy_closed(ClosedEntropy which, int n, int k = 0);

// (1/n) log card L_n at n = n_max.
EntropyResult entropy_growth_check(const Shift &shift, std::size_t n_max, unsigned threads = 1);

} // namespace sofdyck

#endif
