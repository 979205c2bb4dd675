#ifndef SOFDYCK_PSI_HPP
#define SOFDYCK_PSI_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <sofdyck/monoid.hpp>
#include <sofdyck/series.hpp>
#include <sofdyck/shifts.hpp>

namespace sofdyck
{

// Raised by classify_psi for N beyond the exhaustive symmetry search.
class CapabilityError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Per class A of Delta_circ: |psi(alpha) cap X| for X = Delta_Gamma,
// Delta_setminus, Delta_bullet and each class B (same order as circ_classes).
struct ClassConstants {
    int k_gamma = 0;
    int k_setminus = 0;
    int k_bullet = 0;
    std::vector<int> k_class;
};

// All letters 1-based and sorted. The four delta sets partition Gamma; on
// overlap Delta_Gamma wins over Delta_setminus, which wins over Delta_bullet.
struct PsiClassification {
    int n = 0;
    // perm[i] = pi(i + 1)
    std::vector<std::vector<int>> symmetries;
    std::vector<std::vector<int>> classes; // all ~-classes
    std::vector<int> delta_gamma;
    std::vector<int> delta_setminus;
    std::vector<int> delta_bullet;
    std::vector<int> delta_circ;
    std::vector<std::vector<int>> circ_classes;
    std::vector<ClassConstants> constants; // parallel to circ_classes
};

constexpr int max_classify_n = 8;

// Throws CapabilityError for N > 8, std::invalid_argument on a malformed psi,
// std::logic_error if a class constant depends on the representative.
PsiClassification classify_psi(int n, const LetterSets &psi);

struct PsiSystem {
    std::vector<PowerSeries> g; // g(D_gamma), gamma = 1..N
    PowerSeries xi;             // 1 - sum g
};

// (order + 1) Jacobi sweeps of g_a = z^2 (1 + (1/xi) sum_{b in psi(a)} g_b)
// from g = 0.
PsiSystem solve_psi_system(int n, const LetterSets &psi, std::size_t order);

// lhs - rhs of each fixed-point equation; all zero for an exact solution.
std::vector<PowerSeries> psi_residuals(const LetterSets &psi, const PsiSystem &s);

// Per-letter closed forms in terms of xi.
PowerSeries gf_uniform(int n, int k, std::size_t order); // all |psi| = K
PowerSeries gf_delta_gamma(const PowerSeries &xi);
PowerSeries gf_delta_setminus(const PowerSeries &xi);
PowerSeries gf_delta_bullet(const PowerSeries &xi);
// Requires Delta_circ to be a single class.
PowerSeries gf_delta_circ_single(const ClassConstants &c, const PowerSeries &xi);

// Dyck code words written in generators.
using GeneratorWord = std::vector<Generator>;

// Code words of the given length beginning with alpha(-) that are admissible
// for the psi exclusion shift.
std::vector<GeneratorWord> code_words(int n, const LetterSets &psi, int alpha, std::size_t length);

bool is_code_word(const LetterSets &psi, int alpha, const GeneratorWord &d);

// Length-preserving bijection D_alpha -> D_beta for uniform psi, with
// chi(alpha, beta) the order-preserving map between the sorted sets.
// Throws std::domain_error if d is not in D_alpha.
GeneratorWord eta_bijection(const LetterSets &psi, int alpha, int beta, const GeneratorWord &d);

} // namespace sofdyck

#endif
