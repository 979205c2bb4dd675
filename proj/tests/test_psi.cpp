#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <sofdyck/psi.hpp>

using namespace sofdyck;

namespace
{

LetterSets random_psi(std::mt19937 &rng, int n)
{
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> pick(1, n);
    LetterSets psi(static_cast<std::size_t>(n));
    for (auto &s : psi) {
        for (int b = 1; b <= n; ++b) {
            if (bit(rng)) {
                s.push_back(b);
            }
        }
        if (s.empty()) {
            s.push_back(pick(rng));
        }
    }
    return psi;
}

GeneratorWord gw(std::initializer_list<std::pair<int, char>> letters)
{
    GeneratorWord w;
    for (auto [l, s] : letters) {
        w.push_back({l, s == '-' ? Sign::minus : Sign::plus});
    }
    return w;
}

bool is_zero(const PowerSeries &s)
{
    return std::all_of(s.coeffs().begin(), s.coeffs().end(), [](const Rational &c) { return c == 0; });
}

} // namespace

TEST_CASE("classification examples")
{
    const auto mixed = classify_psi(3, {{1, 2, 3}, {1, 3}, {3}});
    CHECK(mixed.delta_gamma == std::vector<int>{1});
    CHECK(mixed.delta_setminus == std::vector<int>{2});
    CHECK(mixed.delta_bullet == std::vector<int>{3});
    CHECK(mixed.delta_circ.empty());

    const auto swap = classify_psi(2, {{2}, {1}});
    CHECK(std::find(swap.symmetries.begin(), swap.symmetries.end(), std::vector<int>{2, 1}) != swap.symmetries.end());
    CHECK(swap.delta_setminus == std::vector<int>{1, 2});

    const auto blocks = classify_psi(4, {{3, 4}, {3, 4}, {1, 2}, {1, 2}});
    REQUIRE(blocks.circ_classes.size() == 1);
    CHECK(blocks.circ_classes[0] == std::vector<int>{1, 2, 3, 4});
    REQUIRE(blocks.constants.size() == 1);
    CHECK(blocks.constants[0].k_class == std::vector<int>{2});
    CHECK(blocks.constants[0].k_gamma == 0);

    CHECK_THROWS_AS(classify_psi(9, LetterSets(9, {1})), CapabilityError);
    CHECK_THROWS_AS(classify_psi(2, {{1}, {}}), std::invalid_argument);
}

TEST_CASE("classification invariants on random psi")
{
    std::mt19937 rng(3);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + t % 4;
        const auto psi = random_psi(rng, n);
        const auto c = classify_psi(n, psi);
        std::vector<int> all;
        for (const auto *part : {&c.delta_gamma, &c.delta_setminus, &c.delta_bullet, &c.delta_circ}) {
            all.insert(all.end(), part->begin(), part->end());
        }
        std::sort(all.begin(), all.end());
        std::vector<int> gamma(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            gamma[static_cast<std::size_t>(i)] = i + 1;
        }
        CHECK(all == gamma);
        // identity is always a symmetry
        CHECK(std::find(c.symmetries.begin(), c.symmetries.end(), gamma) != c.symmetries.end());
        CHECK(c.constants.size() == c.circ_classes.size());
    }
}

TEST_CASE("fixed-point system")
{
    std::mt19937 rng(4);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + t % 3;
        const auto psi = random_psi(rng, n);
        const auto s = solve_psi_system(n, psi, 14);
        CHECK(s.g.size() == static_cast<std::size_t>(n));
        for (const auto &r : psi_residuals(psi, s)) {
            CHECK(is_zero(r));
        }
    }
}

TEST_CASE("class closed forms")
{
    constexpr std::size_t order = 14;
    {
        const LetterSets psi{{1, 2, 3}, {1, 3}, {3}};
        const auto s = solve_psi_system(3, psi, order);
        CHECK(s.g[0] == gf_delta_gamma(s.xi));
        CHECK(s.g[1] == gf_delta_setminus(s.xi));
        CHECK(s.g[2] == gf_delta_bullet(s.xi));
    }
    {
        const LetterSets psi{{3, 4}, {3, 4}, {1, 2}, {1, 2}};
        const auto c = classify_psi(4, psi);
        const auto s = solve_psi_system(4, psi, order);
        for (const auto &g : s.g) {
            CHECK(g == gf_delta_circ_single(c.constants[0], s.xi));
        }
        CHECK(s.g[0] == gf_uniform(4, 2, order));
    }
    {
        // Delta_circ together with Delta_Gamma: psi(4) = Gamma.
        const LetterSets psi{{2, 4}, {3, 4}, {1, 4}, {1, 2, 3, 4}};
        const auto c = classify_psi(4, psi);
        CHECK(c.delta_gamma == std::vector<int>{4});
        REQUIRE(c.circ_classes.size() == 1);
        const auto s = solve_psi_system(4, psi, order);
        CHECK(s.g[3] == gf_delta_gamma(s.xi));
        CHECK(s.g[0] == gf_delta_circ_single(c.constants[0], s.xi));
    }
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            LetterSets psi(static_cast<std::size_t>(n));
            for (int a = 0; a < n; ++a) {
                for (int i = 0; i < k; ++i) {
                    psi[static_cast<std::size_t>(a)].push_back((a + i) % n + 1);
                }
                std::sort(psi[static_cast<std::size_t>(a)].begin(), psi[static_cast<std::size_t>(a)].end());
            }
            const auto s = solve_psi_system(n, psi, order);
            for (const auto &g : s.g) {
                CHECK(g == gf_uniform(n, k, order));
            }
        }
    }
}

TEST_CASE("eta examples")
{
    const LetterSets swap{{2}, {1}};
    CHECK(eta_bijection(swap, 1, 2, gw({{1, '-'}, {1, '+'}})) == gw({{2, '-'}, {2, '+'}}));
    const LetterSets identity{{1}, {2}};
    const auto d = gw({{1, '-'}, {1, '-'}, {1, '+'}, {1, '+'}});
    CHECK(is_code_word(identity, 1, d));
    CHECK(eta_bijection(identity, 1, 1, d) == d);
    CHECK_THROWS_AS(eta_bijection(identity, 1, 2, gw({{2, '-'}, {2, '+'}})), std::domain_error);
    CHECK_THROWS_AS(eta_bijection(identity, 1, 2, gw({{1, '-'}, {1, '+'}, {1, '-'}, {1, '+'}})), std::domain_error);
    CHECK_THROWS_AS(eta_bijection(LetterSets{{1}, {1, 2}}, 1, 2, gw({{1, '-'}, {1, '+'}})), std::domain_error);
}

TEST_CASE("eta is a length-preserving bijection")
{
    const std::vector<LetterSets> specs{{{1}, {2}}, {{2}, {1}}, {{1, 2}, {1, 2}}, {{1, 2}, {2, 3}, {1, 3}}};
    for (const auto &psi : specs) {
        const int n = static_cast<int>(psi.size());
        for (int alpha = 1; alpha <= n; ++alpha) {
            for (int beta = 1; beta <= n; ++beta) {
                for (std::size_t len = 2; len <= (n == 2 ? 12u : 8u); len += 2) {
                    const auto from = code_words(n, psi, alpha, len);
                    const auto to = code_words(n, psi, beta, len);
                    std::set<GeneratorWord> image;
                    for (const auto &d : from) {
                        const auto e = eta_bijection(psi, alpha, beta, d);
                        CHECK(e.size() == d.size());
                        CHECK(is_code_word(psi, beta, e));
                        image.insert(e);
                    }
                    CHECK(image.size() == from.size());
                    CHECK(image == std::set<GeneratorWord>(to.begin(), to.end()));
                }
            }
        }
    }
}
