#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <sofdyck/graphs.hpp>

using namespace sofdyck;

namespace
{

// Closed walks v -> v of length n, by depth-first search.
std::uint64_t closed_walks(const AdjacencyMatrix &a, std::size_t v, std::size_t n)
{
    std::uint64_t count = 0;
    auto dfs = [&](auto &&self, std::size_t at, std::size_t left) -> void {
        if (left == 0) {
            count += at == v ? 1 : 0;
            return;
        }
        for (std::size_t w = 0; w < a.dim(); ++w) {
            for (long e = 0; e < a(at, w); ++e) {
                self(self, w, left - 1);
            }
        }
    };
    dfs(dfs, v, n);
    return count;
}

PowerSeries series_of(const Polynomial &num, const Polynomial &den, std::size_t order)
{
    return PowerSeries::from_polynomial(num, order) / PowerSeries::from_polynomial(den, order);
}

} // namespace

TEST_CASE("degenerate graph")
{
    const auto g = build_degenerate();
    CHECK(g.vertex_count() == 1);
    CHECK(g.edges().empty());
    CHECK(g.is_degenerate());
    CHECK(first_return_gf(g, 0, 8) == PowerSeries::one(8));
    CHECK(adjacency(g) == AdjacencyMatrix{{0}});
}

TEST_CASE("bouquets")
{
    const auto b11 = build_bouquet(1, 1);
    CHECK(b11.vertex_count() == 1);
    REQUIRE(b11.edges().size() == 1);
    CHECK(b11.edges()[0].from == 0);
    CHECK(b11.edges()[0].to == 0);

    const auto b22 = build_bouquet(2, 2);
    CHECK(b22.vertex_count() == 3);
    CHECK(b22.edges().size() == 4);
    CHECK(b22.is_label_bijective());
    CHECK(b22.every_vertex_has_in_and_out());

    for (int j = 1; j <= 3; ++j) {
        for (int q = 1; q <= 3; ++q) {
            const auto g = build_bouquet(j, q);
            const Polynomial den = Polynomial{1} - Polynomial::monomial(j, static_cast<std::size_t>(q));
            CHECK(first_return_gf(g, 0, 12) == series_of(Polynomial{1}, den, 12));
        }
    }
    CHECK_THROWS_AS(build_bouquet(0, 1), std::invalid_argument);
}

TEST_CASE("even automaton")
{
    const auto even = build_even_automaton(EvenVertex::even);
    const auto odd = build_even_automaton(EvenVertex::odd);
    CHECK(first_return_gf(even, 0, 12) == series_of(Polynomial{1}, Polynomial{1, -1, -1}, 12));
    CHECK(first_return_gf(odd, 1, 12) == series_of(Polynomial{1, -1}, Polynomial{1, -1, -1}, 12));
    CHECK(adjacency(even) == AdjacencyMatrix{{1, 1}, {1, 0}});
    CHECK(even.is_right_resolving());
    CHECK_FALSE(even.is_label_bijective());
    CHECK(even.labels() == std::vector<std::string>{"1", "0"});
}

TEST_CASE("first_return_gf counts closed walks")
{
    std::vector<LabeledGraph> catalog{build_bouquet(2, 1), build_bouquet(2, 2), build_bouquet(3, 2),
                                      build_bouquet(1, 3), build_even_automaton(EvenVertex::even)};
    // An irregular strongly connected graph.
    catalog.push_back(LabeledGraph(3, {{0, 1, "x"}, {1, 2, "x"}, {2, 0, "x"}, {1, 0, "y"}, {2, 2, "y"}}, 0));
    for (const auto &g : catalog) {
        const auto a = adjacency(g);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            const auto gf = first_return_gf(g, v, 10);
            for (std::size_t n = 0; n <= 10; ++n) {
                CHECK(gf[n] == Rational(static_cast<long>(closed_walks(a, v, n))));
            }
        }
    }
}

TEST_CASE("irreducibility and period")
{
    const AdjacencyMatrix cycle3{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    CHECK(is_irreducible(cycle3));
    CHECK(matrix_period(cycle3) == 3);
    const AdjacencyMatrix swap{{0, 1}, {1, 0}};
    CHECK(matrix_period(swap) == 2);
    const AdjacencyMatrix ones{{1, 1}, {1, 1}};
    CHECK(matrix_period(ones) == 1);
    const AdjacencyMatrix reducible{{1, 1}, {0, 1}};
    CHECK_FALSE(is_irreducible(reducible));
    CHECK_THROWS_AS(matrix_period(reducible), std::domain_error);
    CHECK_FALSE(is_irreducible(AdjacencyMatrix{{0}}));
    const AdjacencyMatrix mixed{{0, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}};
    CHECK(matrix_period(mixed) == 1); // cycles of length 3 and 4
}

TEST_CASE("q polynomial")
{
    CHECK(q_polynomial(AdjacencyMatrix{{0, 1}, {1, 0}}, 1, 2) == Polynomial{1});
    CHECK(q_polynomial(AdjacencyMatrix{{1, 1}, {1, 1}}, 2, 1) == Polynomial{1});
    CHECK(q_polynomial(AdjacencyMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 2, 1) == Polynomial{1, 2, 1});
    CHECK_THROWS_AS(q_polynomial(AdjacencyMatrix{{1, 1}, {1, 0}}, 2, 1), std::domain_error);
    // 1 - z^3 does not divide 1 - z^2.
    CHECK_THROWS_AS(q_polynomial(AdjacencyMatrix{{0, 1}, {1, 0}}, 1, 3), InexactDivision);
}

TEST_CASE("(1 - K^pi z^pi) divides det(1 - Az) for constant row sums")
{
    std::mt19937 rng(5);
    int tested = 0;
    for (int t = 0; t < 400 && tested < 40; ++t) {
        const std::size_t dim = 2 + static_cast<std::size_t>(t % 4);
        const std::size_t k = 1 + static_cast<std::size_t>(rng() % dim);
        AdjacencyMatrix a(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<std::size_t> cols(dim);
            std::iota(cols.begin(), cols.end(), 0);
            std::shuffle(cols.begin(), cols.end(), rng);
            for (std::size_t c = 0; c < k; ++c) {
                a(i, cols[c]) = 1;
            }
        }
        if (!is_irreducible(a)) {
            continue;
        }
        ++tested;
        const int pi = matrix_period(a);
        const Polynomial q = q_polynomial(a, static_cast<long>(k), pi);
        CHECK(q.coeff(0) == 1);
    }
    CHECK(tested >= 20);
}

TEST_CASE("graph validation")
{
    CHECK_THROWS_AS(LabeledGraph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph(1, {{0, 1, "x"}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph(1, {}, 2), std::invalid_argument);
    const LabeledGraph nondet(2, {{0, 0, "x"}, {0, 1, "x"}, {1, 0, "y"}}, 0);
    CHECK_FALSE(nondet.is_right_resolving());
}
