#include <sofdyck/formulas.hpp>

#include <stdexcept>

namespace sofdyck
{

namespace
{

PowerSeries poly(const Polynomial &p, std::size_t order)
{
    return PowerSeries::from_polynomial(p, order);
}

void require_n(int n)
{
    if (n < 1) {
        throw std::invalid_argument("N must be positive");
    }
}

bool relation_has_cycle(const std::vector<std::uint64_t> &rel)
{
    const std::size_t v = rel.size();
    std::uint64_t alive = v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
    bool changed = true;
    while (changed && alive) {
        changed = false;
        for (std::size_t u = 0; u < v; ++u) {
            const std::uint64_t bit = std::uint64_t{1} << u;
            if ((alive & bit) && (rel[u] & alive) == 0) {
                alive &= ~bit;
                changed = true;
            }
        }
    }
    return alive != 0;
}

} // namespace

LoopTotals loop_totals(const SectionTwo &s)
{
    LoopTotals t;
    for (std::size_t i = 0; i < s.k_minus.size(); ++i) {
        t.k_minus += s.k_minus[i];
        t.k_plus += s.k_plus[i];
        t.k += static_cast<long>(s.k_minus[i]) * s.k_plus[i];
    }
    return t;
}

PowerSeries gf_c0_section2(long k, const PowerSeries &gR)
{
    if (k < 1) {
        throw std::invalid_argument("gf_c0_section2: K must be at least 1");
    }
    const std::size_t m = gR.order();
    const PowerSeries z = PowerSeries::variable(m);
    const PowerSeries s = sqrt(1 - Rational(4 * k) * gR * gR * z * z);
    return Rational(1, 2) * (1 - s);
}

PowerSeries gf_cpm_section2(long k_mp, const PowerSeries &gR, const PowerSeries &gC0)
{
    const PowerSeries z = PowerSeries::variable(gR.order());
    return gC0 / (1 - Rational(k_mp) * gR * z);
}

const char *to_string(ZetaY0Source s)
{
    switch (s) {
    case ZetaY0Source::degenerate:
        return "degenerate";
    case ZetaY0Source::edge_shift:
        return "edge-shift";
    case ZetaY0Source::enumeration:
        return "enumeration";
    }
    return "?";
}

std::vector<std::uint64_t> sofic_periodic_counts(const LabeledGraph &g, std::size_t max_n)
{
    const std::size_t v = g.vertex_count();
    if (v > 64) {
        throw std::invalid_argument("sofic_periodic_counts: at most 64 vertices supported");
    }
    const auto labels = g.labels();
    std::vector<std::vector<std::uint64_t>> step(labels.size(), std::vector<std::uint64_t>(v, 0));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (const auto &e : g.edges()) {
            if (e.label == labels[i]) {
                step[i][e.from] |= std::uint64_t{1} << e.to;
            }
        }
    }
    std::vector<std::uint64_t> counts(max_n, 0);
    if (max_n == 0 || labels.empty()) {
        return counts;
    }
    std::vector<std::vector<std::uint64_t>> rel(max_n + 1, std::vector<std::uint64_t>(v, 0));
    for (std::size_t u = 0; u < v; ++u) {
        rel[0][u] = std::uint64_t{1} << u;
    }
    auto dfs = [&](auto &&self, std::size_t depth) -> void {
        for (std::size_t s = 0; s < labels.size(); ++s) {
            auto &next = rel[depth + 1];
            bool any = false;
            for (std::size_t u = 0; u < v; ++u) {
                std::uint64_t row = rel[depth][u];
                std::uint64_t out = 0;
                while (row) {
                    const int w = __builtin_ctzll(row);
                    row &= row - 1;
                    out |= step[s][static_cast<std::size_t>(w)];
                }
                next[u] = out;
                any = any || out != 0;
            }
            if (!any) {
                continue;
            }
            if (relation_has_cycle(next)) {
                ++counts[depth];
            }
            if (depth + 1 < max_n) {
                self(self, depth + 1);
            }
        }
    };
    dfs(dfs, 0);
    return counts;
}

ZetaY0 zeta_y0_catalog(const LabeledGraph &g, std::size_t order)
{
    if (g.is_degenerate()) {
        return {PowerSeries::one(order), ZetaY0Source::degenerate};
    }
    if (g.is_label_bijective()) {
        return {inverse(poly(det(identity_minus_z(adjacency(g))), order)), ZetaY0Source::edge_shift};
    }
    const auto counts = sofic_periodic_counts(g, order);
    return {zeta_from_counts(std::span<const std::uint64_t>(counts), order), ZetaY0Source::enumeration};
}

PowerSeries zeta_section2(const SectionTwo &s, const PowerSeries &zeta_y0, std::size_t order)
{
    if (!s.graph.distinguished()) {
        throw std::invalid_argument("zeta_section2: graph needs a distinguished vertex");
    }
    const auto t = loop_totals(s);
    if (t.k < 1) {
        throw std::invalid_argument("zeta_section2: K must be at least 1");
    }
    const PowerSeries gR = first_return_gf(s.graph, *s.graph.distinguished(), order);
    const PowerSeries z = PowerSeries::variable(order);
    const PowerSeries root = sqrt(1 - Rational(4 * t.k) * gR * gR * z * z);
    const PowerSeries num = Rational(2) * zeta_y0.truncate(order) * (1 + root);
    const PowerSeries den = (1 - Rational(2 * t.k_minus) * gR * z + root) * (1 - Rational(2 * t.k_plus) * gR * z + root);
    return num / den;
}

PowerSeries zeta_section2(const SectionTwo &s, std::size_t order)
{
    return zeta_section2(s, zeta_y0_catalog(s.graph, order).zeta, order);
}

PowerSeries zeta_dyck(int n, std::size_t order)
{
    require_n(n);
    return zeta_section2(make_section_two(build_degenerate(), n), PowerSeries::one(order), order);
}

PowerSeries zeta_motzkin(int n, std::size_t order)
{
    return zeta_bouquet(n, 1, 1, order);
}

PowerSeries zeta_bouquet(int n, int j, int q, std::size_t order)
{
    require_n(n);
    if (j < 1 || q < 1) {
        throw std::invalid_argument("zeta_bouquet: J and Q must be positive");
    }
    const PowerSeries z = PowerSeries::variable(order);
    const PowerSeries base = 1 - Rational(j) * poly(Polynomial::monomial(1, static_cast<std::size_t>(q)), order);
    const PowerSeries t = sqrt(base * base - Rational(4L * n) * z * z);
    const PowerSeries den = base - Rational(2L * n) * z + t;
    return Rational(2) * (base + t) / (den * den);
}

PowerSeries zeta_schroeder(int n, std::size_t order)
{
    require_n(n);
    const PowerSeries z = PowerSeries::variable(order);
    const PowerSeries f = poly(Polynomial{1, -1, -1}, order);
    const PowerSeries t = sqrt(f * f - Rational(4L * n) * z * z);
    const PowerSeries den = poly(Polynomial{1, -(2L * n + 1), -1}, order) + t;
    return Rational(2) * (1 + z) * (f + t) / (den * den);
}

PowerSeries zeta_even_odd(int n, std::size_t order)
{
    require_n(n);
    const PowerSeries z = PowerSeries::variable(order);
    const PowerSeries f = poly(Polynomial{1, -1, -1}, order);
    const PowerSeries w = (1 - z) * z;
    const PowerSeries t = sqrt(f * f - Rational(4L * n) * w * w);
    const PowerSeries den = poly(Polynomial{1, -(2L * n + 1), 2L * n - 1}, order) + t;
    return Rational(2) * (1 + z) * (f + t) / (den * den);
}

AdjacencyMatrix psi_matrix(const LetterSets &psi)
{
    const std::size_t n = psi.size();
    AdjacencyMatrix a(n);
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
        for (int beta : psi[alpha]) {
            if (beta < 1 || static_cast<std::size_t>(beta) > n) {
                throw std::invalid_argument("psi_matrix: letter out of range");
            }
            a(static_cast<std::size_t>(beta - 1), alpha) = 1;
        }
    }
    return a;
}

PowerSeries zeta_psi_uniform(int n, int k, const AdjacencyMatrix &a_psi, std::size_t order)
{
    require_n(n);
    if (k < 1 || k > n) {
        throw std::invalid_argument("zeta_psi_uniform: need 1 <= K <= N");
    }
    if (a_psi.dim() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("zeta_psi_uniform: A_psi must be N x N");
    }
    const PowerSeries z = PowerSeries::variable(order);
    const PowerSeries b = 1 + Rational(n - k) * z * z;
    const PowerSeries g = Rational(1, 2) * (b - sqrt(b * b - Rational(4L * n) * z * z));
    const PowerSeries d = poly(det(identity_minus_z(a_psi)), order);
    const PowerSeries kz = Rational(k) * z;
    return (1 - kz) * (1 - g) / (d * (1 - Rational(n) * z - g) * (1 - kz - g));
}

PowerSeries zeta_psi_uniform(int n, const LetterSets &psi, std::size_t order)
{
    const int k = uniform_size(psi);
    if (k < 0) {
        throw std::domain_error("zeta_psi_uniform: psi is not uniform");
    }
    if (psi.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("zeta_psi_uniform: psi must have N entries");
    }
    return zeta_psi_uniform(n, k, psi_matrix(psi), order);
}

namespace
{

PowerSeries triple_rho(int n, const PowerSeries &z)
{
    const PowerSeries z2 = z * z;
    const PowerSeries a = 1 - Rational(n + 1) * z2;
    return sqrt(a * a - Rational(4L * n * n) * z2 * z2);
}

// zeta of the positive-bracket factor: no gamma'(+)gamma(+)gamma''(+) with
// gamma' != gamma''.
PowerSeries triple_plus_zeta(int n, std::size_t order)
{
    const PowerSeries z = PowerSeries::variable(order);
    const auto pairs = static_cast<unsigned>(n * (n - 1) / 2);
    return inverse(pow(1 - z, static_cast<unsigned>(n)) * pow(1 - z * z, pairs));
}

} // namespace

// Assembled from the three codes. The C+ code is gamma(-)gamma(+) bare (N z^2)
// plus the words with a nonempty positive tail.
PowerSeries zeta_triple_exclusion(int n, std::size_t order)
{
    require_n(n);
    const PowerSeries z = PowerSeries::variable(order);
    const PowerSeries z2 = z * z;
    const PowerSeries rho = triple_rho(n, z);
    const PowerSeries g0 = Rational(1, 2) * (1 + Rational(n - 1) * z2 - rho);
    const PowerSeries gm = g0 / (1 - Rational(n) * z);
    const PowerSeries gp =
        Rational(n) * z2 + (Rational(2L * n * n) * z2 * z + 1 - Rational(n + 1) * z2 - rho) / (Rational(2) * (1 - z));
    const PowerSeries y_minus = inverse(1 - Rational(n) * z);
    return zeta_combiner(y_minus, triple_plus_zeta(n, order), PowerSeries::one(order), gm, g0, gp);
}

PowerSeries zeta_triple_exclusion_as_printed(int n, std::size_t order)
{
    require_n(n);
    const PowerSeries z = PowerSeries::variable(order);
    const PowerSeries z2 = z * z;
    const PowerSeries rho = triple_rho(n, z);
    const PowerSeries num = Rational(2) * (1 - Rational(n - 1) * z2 + rho);
    const PowerSeries d1 = 1 - Rational(2L * n) * z - Rational(n - 1) * z2 + rho;
    const PowerSeries d2 = 1 - Rational(2) * z + Rational(n + 1) * z2 - Rational(2L * n * n) * z2 * z + rho;
    const auto pairs = static_cast<unsigned>(n * (n - 1) / 2);
    const PowerSeries tail = pow(1 - z, static_cast<unsigned>(n - 1)) * pow(1 - z2, pairs);
    return num / (d1 * d2 * tail);
}

PowerSeries zeta_motzkin_restricted(int n, std::size_t order)
{
    require_n(n);
    const PowerSeries z = PowerSeries::variable(order);
    const PowerSeries z3 = z * z * z;
    const PowerSeries g = Rational(1, 2) * (1 - z - sqrt((1 - z) * (1 - z - Rational(4L * n) * z3)));
    return (1 - z - g) / ((1 - Rational(n + 1) * z - g) * ((1 - Rational(n) * z * z) * (1 - z) - g));
}

XiStructure xi_structure(const XiExclusion &x)
{
    XiStructure s;
    s.a = AdjacencyMatrix(static_cast<std::size_t>(x.j));
    for (std::size_t w = 0; w < x.xi_omega.size(); ++w) {
        for (int v : x.xi_omega[w]) {
            s.a(w, static_cast<std::size_t>(v - 1)) = 1;
        }
    }
    s.k = uniform_size(x.xi_omega);
    s.l = uniform_size(x.xi_gamma);
    if (s.k < 1 || s.l < 1) {
        throw std::domain_error("xi: xi_omega and xi_gamma must have uniform sizes");
    }
    s.period = matrix_period(s.a);
    s.q = q_polynomial(s.a, s.k, s.period);
    return s;
}

PowerSeries zeta_xi(const XiExclusion &x, std::size_t order)
{
    require_n(x.n);
    const XiStructure st = xi_structure(x);
    const long n = x.n;
    const long j = x.j;
    const PowerSeries z = PowerSeries::variable(order);
    const PowerSeries z2 = z * z;
    const PowerSeries z3 = z2 * z;
    const PowerSeries jz = 1 - Rational(j) * z;
    const PowerSeries b = jz + Rational(n * (st.l - st.k)) * z3;
    const PowerSeries g = Rational(1, 2) * (b - sqrt(b * b - Rational(4 * n * st.l) * z3 * jz));

    std::vector<Rational> geo(2 * static_cast<std::size_t>(st.period) - 1);
    Rational nk = 1;
    for (int rr = 0; rr < st.period; ++rr) {
        geo[2 * static_cast<std::size_t>(rr)] = nk;
        nk *= n * st.k;
    }
    const PowerSeries partial = poly(Polynomial(std::move(geo)), order);
    const PowerSeries qn = poly(st.q.substitute_monomial(n, 2), order);

    return (jz - g) / ((1 - Rational(j + n) * z - g) * ((1 - Rational(n * st.k) * z2) * jz - g) * qn * partial);
}

PowerSeries zeta_combiner(const PowerSeries &z_ym, const PowerSeries &z_yp, const PowerSeries &z_ymyp,
                          const PowerSeries &g_cm, const PowerSeries &g_c0, const PowerSeries &g_cp)
{
    for (const PowerSeries *g : {&g_cm, &g_c0, &g_cp}) {
        if ((*g)[0] != 0) {
            throw std::domain_error("zeta_combiner: code generating functions need zero constant term");
        }
    }
    for (const PowerSeries *zz : {&z_ym, &z_yp, &z_ymyp}) {
        if ((*zz)[0] != 1) {
            throw std::domain_error("zeta_combiner: zeta functions need constant term 1");
        }
    }
    return z_ym * z_yp / z_ymyp * (1 - g_c0) / ((1 - g_cm) * (1 - g_cp));
}

std::optional<PowerSeries> closed_form_zeta(const ShiftSpec &spec, std::size_t order)
{
    if (const auto *d = std::get_if<Dyck>(&spec)) {
        return zeta_dyck(d->n, order);
    }
    if (const auto *m = std::get_if<Motzkin>(&spec)) {
        return zeta_motzkin(m->n, order);
    }
    if (const auto *s = std::get_if<SectionTwo>(&spec)) {
        return zeta_section2(*s, order);
    }
    if (const auto *p = std::get_if<PsiExclusion>(&spec)) {
        if (uniform_size(p->psi) < 0) {
            return std::nullopt;
        }
        return zeta_psi_uniform(p->n, p->psi, order);
    }
    if (const auto *t = std::get_if<TripleExclusion>(&spec)) {
        return zeta_triple_exclusion(t->n, order);
    }
    if (const auto *mr = std::get_if<MotzkinRestricted>(&spec)) {
        return zeta_motzkin_restricted(mr->n, order);
    }
    return zeta_xi(std::get<XiExclusion>(spec), order);
}

} // namespace sofdyck
