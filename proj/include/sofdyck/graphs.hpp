#ifndef SOFDYCK_GRAPHS_HPP
#define SOFDYCK_GRAPHS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <sofdyck/series.hpp>

namespace sofdyck
{

struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::string label;

    friend bool operator==(const Edge &, const Edge &) = default;
};

// Finite directed graph with labeled edges on dense vertex indices and an
// optional distinguished vertex.
class LabeledGraph
{
public:
    LabeledGraph() = default;
    LabeledGraph(std::size_t vertex_count, std::vector<Edge> edges, std::optional<std::size_t> distinguished = {});

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::optional<std::size_t> &distinguished() const { return distinguished_; }

    LabeledGraph with_distinguished(std::size_t v) const;

    // Distinct labels in order of first occurrence.
    std::vector<std::string> labels() const;

    bool is_degenerate() const { return vertex_count_ == 1 && edges_.empty(); }
    // Every vertex has an incoming and an outgoing edge.
    bool every_vertex_has_in_and_out() const;
    // At each vertex the outgoing labels are pairwise distinct.
    bool is_right_resolving() const;
    // Distinct edges carry distinct labels.
    bool is_label_bijective() const;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::size_t> distinguished_;
};

// Nonnegative integer matrix; entry (u,v) counts edges u -> v.
class AdjacencyMatrix
{
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {}
    AdjacencyMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t dim() const { return dim_; }
    long &operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    long operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    long row_sum(std::size_t i) const;

    friend bool operator==(const AdjacencyMatrix &, const AdjacencyMatrix &) = default;

private:
    std::size_t dim_ = 0;
    std::vector<long> a_;
};

enum class EvenVertex { even, odd };

// One vertex, no edges.
LabeledGraph build_degenerate();

// J circles of Q edges through the distinguished vertex 0. Circle j passes
// through vertices 1 + (j-1)(Q-1) .. j(Q-1); edge labels are "w<j>" when
// Q == 1 and "w<j>_<q>" otherwise, so the labeling is bijective.
LabeledGraph build_bouquet(int circles, int circle_length);

// Fischer automaton of the even shift: vertex 0 = v_even, 1 = v_odd; a loop
// labeled "1" at v_even and edges labeled "0" both ways.
LabeledGraph build_even_automaton(EvenVertex distinguished = EvenVertex::even);

AdjacencyMatrix adjacency(const LabeledGraph &g);

// 1 - A z
PolyMatrix identity_minus_z(const AdjacencyMatrix &a);

// det(1 - Az) with row and column v deleted, and det(1 - Az).
struct RationalFunction {
    Polynomial numerator;
    Polynomial denominator;
};
RationalFunction first_return_ratio(const LabeledGraph &g, std::size_t v);

// Generating function of paths v -> v (including the empty path), expanded
// from the Cramer's-rule ratio det(1-Az)^<v> / det(1-Az).
PowerSeries first_return_gf(const LabeledGraph &g, std::size_t v, std::size_t order);

bool is_irreducible(const AdjacencyMatrix &a);
// gcd of cycle lengths; throws std::domain_error for reducible matrices.
int matrix_period(const AdjacencyMatrix &a);

// q with det(1 - Az) = q(z)(1 - K^pi z^pi). Throws std::domain_error if the
// row sums are not all K, InexactDivision when the factor does not divide.
Polynomial q_polynomial(const AdjacencyMatrix &a, long row_sum, int period);

} // namespace sofdyck

#endif
