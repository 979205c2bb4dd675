#ifndef SOFDYCK_FORMULAS_HPP
#define SOFDYCK_FORMULAS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include <sofdyck/graphs.hpp>
#include <sofdyck/series.hpp>
#include <sofdyck/shifts.hpp>

namespace sofdyck
{

// K_- = sum K^-_gamma, K_+ = sum K^+_gamma, K = sum K^-_gamma K^+_gamma.
struct LoopTotals {
    long k_minus = 0;
    long k_plus = 0;
    long k = 0;
};
LoopTotals loop_totals(const SectionTwo &s);

// 1/2 (1 - sqrt(1 - 4 K gR^2 z^2)); throws std::invalid_argument for K < 1.
PowerSeries gf_c0_section2(long k, const PowerSeries &gR);
// gC0 / (1 - K_mp gR z), with K_mp the opposite-sign total.
PowerSeries gf_cpm_section2(long k_mp, const PowerSeries &gR, const PowerSeries &gC0);

enum class ZetaY0Source { degenerate, edge_shift, enumeration };
const char *to_string(ZetaY0Source s);

struct ZetaY0 {
    PowerSeries zeta;
    ZetaY0Source source = ZetaY0Source::degenerate;
};

// zeta of the sofic shift presented by the carrier graph: 1 for the
// degenerate graph, 1/det(1 - Az) for a bijective labeling, otherwise from
// enumerated periodic counts.
ZetaY0 zeta_y0_catalog(const LabeledGraph &g, std::size_t order);

// Number of words w over the labels of g for which w^inf is the label of a
// bi-infinite path, n = 1..max_n.
std::vector<std::uint64_t> sofic_periodic_counts(const LabeledGraph &g, std::size_t max_n);

PowerSeries zeta_section2(const SectionTwo &s, const PowerSeries &zeta_y0, std::size_t order);
PowerSeries zeta_section2(const SectionTwo &s, std::size_t order);

PowerSeries zeta_dyck(int n, std::size_t order);
PowerSeries zeta_motzkin(int n, std::size_t order);
PowerSeries zeta_bouquet(int n, int j, int q, std::size_t order);
PowerSeries zeta_schroeder(int n, std::size_t order);
PowerSeries zeta_even_odd(int n, std::size_t order);

// A_psi(beta, alpha) = 1 iff beta in psi(alpha).
AdjacencyMatrix psi_matrix(const LetterSets &psi);
PowerSeries zeta_psi_uniform(int n, int k, const AdjacencyMatrix &a_psi, std::size_t order);
// Throws std::domain_error when psi is not uniform.
PowerSeries zeta_psi_uniform(int n, const LetterSets &psi, std::size_t order);

PowerSeries zeta_triple_exclusion(int n, std::size_t order);
// The displayed closed form, verbatim. Disagrees with the periodic counts
// from n = 2 on; kept for comparison.
PowerSeries zeta_triple_exclusion_as_printed(int n, std::size_t order);

PowerSeries zeta_motzkin_restricted(int n, std::size_t order);

// Structure of the loop transition matrix A(w, w') = 1 iff w' in xi_omega(w).
struct XiStructure {
    AdjacencyMatrix a;
    long k = 0; // row sum
    long l = 0; // |xi_gamma(gamma)|
    int period = 1;
    Polynomial q; // det(1 - Az) = q(z)(1 - K^pi z^pi)
};
XiStructure xi_structure(const XiExclusion &x);
PowerSeries zeta_xi(const XiExclusion &x, std::size_t order);

// zeta_{Y-} zeta_{Y+} / zeta_{Y- cap Y+} * (1 - gC0) / ((1 - gC-)(1 - gC+))
PowerSeries zeta_combiner(const PowerSeries &z_ym, const PowerSeries &z_yp, const PowerSeries &z_ymyp,
                          const PowerSeries &g_cm, const PowerSeries &g_c0, const PowerSeries &g_cp);

// Closed form for the family, or nullopt (non-uniform psi).
std::optional<PowerSeries> closed_form_zeta(const ShiftSpec &spec, std::size_t order);

} // namespace sofdyck

#endif
