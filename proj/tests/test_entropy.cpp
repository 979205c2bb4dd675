#include <doctest.h>

#include <cmath>

#include <sofdyck/entropy.hpp>
#include <sofdyck/formulas.hpp>

using namespace sofdyck;

TEST_CASE("Dyck entropy")
{
    for (int n = 2; n <= 5; ++n) {
        const auto e = entropy_section2(make_section_two(build_degenerate(), n));
        CHECK(std::fabs(e.root - 1.0 / (n + 1)) < 1e-12);
        CHECK(std::fabs(e.value - std::log(n + 1.0)) < 1e-10);
        CHECK(e.residual <= root_residual_tol);
        CHECK(e.bracket_lo <= e.root);
        CHECK(e.root <= e.bracket_hi);
        CHECK(e.method == EntropyMethod::root_equation);
    }
}

TEST_CASE("bouquet root equation against the general one")
{
    for (int n = 2; n <= 4; ++n) {
        for (int j = 1; j <= 3; ++j) {
            double prev = 1e9;
            for (int q = 1; q <= 3; ++q) {
                CAPTURE(n);
                CAPTURE(j);
                CAPTURE(q);
                const auto b = entropy_bouquet(n, j, q);
                const auto s = entropy_section2(make_section_two(build_bouquet(j, q), n));
                CHECK(std::fabs(b.value - s.value) < 1e-10);
                CHECK(b.value < prev); // longer circles, less entropy
                prev = b.value;
                if (n > 2) {
                    CHECK(entropy_bouquet(n - 1, j, q).value < b.value);
                }
                CHECK(b.value > std::log(n + 1.0));
            }
        }
    }
}

TEST_CASE("closed-form entropies")
{
    constexpr double tol = 1e-5;
    CHECK(std::fabs(entropy_closed(ClosedEntropy::schroeder, 2).value - 1.44363) < tol);
    CHECK(std::fabs(entropy_closed(ClosedEntropy::even_odd, 2).value - 1.22795) < tol);
    // log((sqrt 41 + 5)/4) = 1.047593..., not the 1.04766 quoted alongside it.
    const double psi21 = entropy_closed(ClosedEntropy::psi_uniform, 2, 1).value;
    CHECK(std::fabs(psi21 - std::log((std::sqrt(41.0) + 5) / 4)) < 1e-12);
    CHECK(std::fabs(psi21 - 1.047593) < tol);
    // Periodic-point growth of the identity exclusion agrees.
    const auto p = counts_from_zeta(zeta_psi_uniform(2, LetterSets{{1}, {2}}, 60));
    CHECK(std::fabs(std::log(p[59].get_d() / p[58].get_d()) - psi21) < 1e-3);
    CHECK(std::fabs(entropy_closed(ClosedEntropy::bouquet_n12, 2).value - 1.19476) < tol);

    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(std::fabs(entropy_closed(ClosedEntropy::schroeder, n).value -
                        entropy_section2(make_section_two(build_even_automaton(EvenVertex::even), n)).value) < 1e-10);
        CHECK(std::fabs(entropy_closed(ClosedEntropy::even_odd, n).value -
                        entropy_section2(make_section_two(build_even_automaton(EvenVertex::odd), n)).value) < 1e-10);
        CHECK(std::fabs(entropy_closed(ClosedEntropy::bouquet_n12, n).value - entropy_bouquet(n, 1, 2).value) <
              1e-10);
        for (int k = 1; k < n; ++k) {
            CHECK(entropy_closed(ClosedEntropy::psi_uniform, n, k).value < std::log(n + 1.0));
            CHECK(entropy_closed(ClosedEntropy::psi_uniform, n, k).value > 0.0);
        }
    }
}

TEST_CASE("degenerate psi_uniform case")
{
    const auto e = entropy_closed(ClosedEntropy::psi_uniform, 3, 3);
    CHECK(e.degenerate_fallback);
    CHECK(e.value == doctest::Approx(std::log(4.0)).epsilon(1e-15));
    CHECK_FALSE(entropy_closed(ClosedEntropy::psi_uniform, 3, 2).degenerate_fallback);
    CHECK_THROWS_AS(entropy_closed(ClosedEntropy::psi_uniform, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(entropy_closed(ClosedEntropy::schroeder, 0), std::invalid_argument);
}

TEST_CASE("asymmetric loop counts")
{
    const auto g = build_even_automaton(EvenVertex::even);
    const auto a = entropy_section2(make_section_two(g, 2, 3, 1));
    const auto b = entropy_section2(make_section_two(g, 2, 1, 3));
    CHECK(std::fabs(a.value - b.value) < 1e-12);
    CHECK(a.note.empty());
    CHECK_FALSE(b.note.empty());
}

TEST_CASE("root finder")
{
    const auto r = smallest_root([](double z) { return z * z - 0.25; }, [](double z) { return 2 * z; }, 1.0);
    CHECK(std::fabs(r.z - 0.5) < 1e-14);
    CHECK_THROWS_AS(smallest_root([](double z) { return 1.0 + z; }, [](double) { return 1.0; }, 1.0), NumericFailure);
    CHECK_THROWS_AS(smallest_root([](double z) { return z; }, [](double) { return 1.0; }, 0.0), NumericFailure);
}

TEST_CASE("growth estimate")
{
    const auto e = entropy_growth_check(Shift(Dyck{2}), 10);
    CHECK(e.method == EntropyMethod::growth_estimate);
    CHECK(std::fabs(e.value - std::log(3.0)) < 0.15);
    // (1/n) log card L_n decreases towards h from above for the Dyck shift.
    CHECK(e.value >= std::log(3.0));
}
