#include <sofdyck/graphs.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace sofdyck
{

LabeledGraph::LabeledGraph(std::size_t vertex_count, std::vector<Edge> edges,
                           std::optional<std::size_t> distinguished)
    : vertex_count_(vertex_count), edges_(std::move(edges)), distinguished_(distinguished)
{
    if (vertex_count_ == 0) {
        throw std::invalid_argument("LabeledGraph needs at least one vertex");
    }
    for (const auto &e : edges_) {
        if (e.from >= vertex_count_ || e.to >= vertex_count_) {
            throw std::invalid_argument("LabeledGraph: edge endpoint out of range");
        }
    }
    if (distinguished_ && *distinguished_ >= vertex_count_) {
        throw std::invalid_argument("LabeledGraph: distinguished vertex out of range");
    }
}

LabeledGraph LabeledGraph::with_distinguished(std::size_t v) const
{
    return LabeledGraph(vertex_count_, edges_, v);
}

std::vector<std::string> LabeledGraph::labels() const
{
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const auto &e : edges_) {
        if (seen.insert(e.label).second) {
            out.push_back(e.label);
        }
    }
    return out;
}

bool LabeledGraph::every_vertex_has_in_and_out() const
{
    std::vector<bool> in(vertex_count_), out(vertex_count_);
    for (const auto &e : edges_) {
        out[e.from] = true;
        in[e.to] = true;
    }
    for (std::size_t v = 0; v < vertex_count_; ++v) {
        if (!in[v] || !out[v]) {
            return false;
        }
    }
    return true;
}

bool LabeledGraph::is_right_resolving() const
{
    std::set<std::pair<std::size_t, std::string>> seen;
    for (const auto &e : edges_) {
        if (!seen.emplace(e.from, e.label).second) {
            return false;
        }
    }
    return true;
}

bool LabeledGraph::is_label_bijective() const
{
    return labels().size() == edges_.size();
}

AdjacencyMatrix::AdjacencyMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : dim_(rows.size()), a_(rows.size() * rows.size(), 0)
{
    std::size_t i = 0;
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("AdjacencyMatrix must be square");
        }
        std::size_t j = 0;
        for (long v : row) {
            (*this)(i, j++) = v;
        }
        ++i;
    }
}

long AdjacencyMatrix::row_sum(std::size_t i) const
{
    long s = 0;
    for (std::size_t j = 0; j < dim_; ++j) {
        s += (*this)(i, j);
    }
    return s;
}

LabeledGraph build_degenerate()
{
    return LabeledGraph(1, {}, 0);
}

LabeledGraph build_bouquet(int circles, int circle_length)
{
    if (circles < 1 || circle_length < 1) {
        throw std::invalid_argument("bouquet needs J >= 1 and Q >= 1");
    }
    const auto J = static_cast<std::size_t>(circles);
    const auto Q = static_cast<std::size_t>(circle_length);
    std::vector<Edge> edges;
    for (std::size_t j = 1; j <= J; ++j) {
        auto name = [&](std::size_t q) {
            return Q == 1 ? "w" + std::to_string(j) : "w" + std::to_string(j) + "_" + std::to_string(q);
        };
        if (Q == 1) {
            edges.push_back({0, 0, name(1)});
            continue;
        }
        const std::size_t base = 1 + (j - 1) * (Q - 1);
        edges.push_back({0, base, name(1)});
        for (std::size_t q = 1; q + 1 < Q; ++q) {
            edges.push_back({base + q - 1, base + q, name(q + 1)});
        }
        edges.push_back({base + Q - 2, 0, name(Q)});
    }
    return LabeledGraph(1 + J * (Q - 1), std::move(edges), 0);
}

LabeledGraph build_even_automaton(EvenVertex distinguished)
{
    std::vector<Edge> edges{{0, 0, "1"}, {0, 1, "0"}, {1, 0, "0"}};
    return LabeledGraph(2, std::move(edges), distinguished == EvenVertex::even ? 0 : 1);
}

AdjacencyMatrix adjacency(const LabeledGraph &g)
{
    AdjacencyMatrix a(g.vertex_count());
    for (const auto &e : g.edges()) {
        a(e.from, e.to) += 1;
    }
    return a;
}

PolyMatrix identity_minus_z(const AdjacencyMatrix &a)
{
    PolyMatrix m(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            m.at(i, j) = Polynomial{i == j ? 1L : 0L, -a(i, j)};
        }
    }
    return m;
}

RationalFunction first_return_ratio(const LabeledGraph &g, std::size_t v)
{
    if (v >= g.vertex_count()) {
        throw std::out_of_range("first_return_ratio: vertex out of range");
    }
    const PolyMatrix m = identity_minus_z(adjacency(g));
    return {det(m.minor(v)), det(m)};
}

PowerSeries first_return_gf(const LabeledGraph &g, std::size_t v, std::size_t order)
{
    const auto [num, den] = first_return_ratio(g, v);
    return PowerSeries::from_polynomial(num, order) / PowerSeries::from_polynomial(den, order);
}

namespace
{

std::vector<bool> reachable_from(const AdjacencyMatrix &a, std::size_t s, bool reverse)
{
    std::vector<bool> seen(a.dim());
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < a.dim(); ++v) {
            const long entry = reverse ? a(v, u) : a(u, v);
            if (entry > 0 && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

} // namespace

bool is_irreducible(const AdjacencyMatrix &a)
{
    if (a.dim() == 0) {
        return false;
    }
    const auto fwd = reachable_from(a, 0, false);
    const auto bwd = reachable_from(a, 0, true);
    const bool all = std::all_of(fwd.begin(), fwd.end(), [](bool b) { return b; }) &&
                     std::all_of(bwd.begin(), bwd.end(), [](bool b) { return b; });
    if (!all) {
        return false;
    }
    // A single vertex without a loop has no cycle.
    for (std::size_t j = 0; j < a.dim(); ++j) {
        if (a(0, j) > 0) {
            return true;
        }
    }
    return false;
}

// BFS levels from vertex 0; every edge u -> v closes cycles whose lengths
// differ by level(u) + 1 - level(v), and the gcd of these is the period.
int matrix_period(const AdjacencyMatrix &a)
{
    if (!is_irreducible(a)) {
        throw std::domain_error("matrix_period: matrix is not irreducible");
    }
    const std::size_t n = a.dim();
    std::vector<long> level(n, -1);
    std::queue<std::size_t> q;
    level[0] = 0;
    q.push(0);
    while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        for (std::size_t v = 0; v < n; ++v) {
            if (a(u, v) > 0 && level[v] < 0) {
                level[v] = level[u] + 1;
                q.push(v);
            }
        }
    }
    long g = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (a(u, v) > 0) {
                g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
            }
        }
    }
    return static_cast<int>(g);
}

Polynomial q_polynomial(const AdjacencyMatrix &a, long row_sum, int period)
{
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (a(i, j) != 0 && a(i, j) != 1) {
                throw std::domain_error("q_polynomial: matrix is not 0/1");
            }
        }
        if (a.row_sum(i) != row_sum) {
            throw std::domain_error("q_polynomial: row " + std::to_string(i) + " does not sum to " +
                                    std::to_string(row_sum));
        }
    }
    if (period < 1) {
        throw std::domain_error("q_polynomial: period must be positive");
    }
    Rational kp = 1;
    for (int i = 0; i < period; ++i) {
        kp *= row_sum;
    }
    const auto p = static_cast<std::size_t>(period);
    const Polynomial divisor = Polynomial::constant(1) - Polynomial::monomial(kp, p);
    return exact_div(det(identity_minus_z(a)), divisor);
}

} // namespace sofdyck
