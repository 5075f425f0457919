#include <doctest.h>

#include <cmath>
#include <vector>

#include "layersim/physical.hpp"
#include "layersim/rng.hpp"

using namespace layersim;
using namespace layersim::physical;

namespace {

// Direct series-parallel solution: source V*sqrt(N) and R_V in series with
// n resistors of R = N*R_0 in parallel; the agent owns a_i of them.
double circuit_power(long a_i, long n, int N, double R_V, double R_0, double V) {
    const double R = N * R_0;
    const double R_eq = R / static_cast<double>(n);
    const double I = V * std::sqrt(static_cast<double>(N)) / (R_V + R_eq);
    const double U = I * R_eq;
    return U * U * static_cast<double>(a_i) / R;
}

double rel_err(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

}  // namespace

TEST_CASE("power_per_agent matches the circuit solution") {
    // R_V = 2, R_0 = 200, V = 1 gives mu = 100, P_typ = 0.5.
    SUBCASE("N=2, half the resistors at the optimum") {
        const Circuit c{2, 100.0, 0.5};
        CHECK(power_per_agent(100, 200, c) == doctest::Approx(0.5 / 4).epsilon(1e-12));
        CHECK(rel_err(power_per_agent(100, 200, c), circuit_power(100, 200, 2, 2, 200, 1)) < 1e-12);
    }
    SUBCASE("N=1 single resistor") {
        const Circuit c{1, 100.0, 0.5};
        CHECK(power_per_agent(1, 1, c) == doctest::Approx(0.5 * 100.0 / (101.0 * 101.0)).epsilon(1e-12));
        CHECK(rel_err(power_per_agent(1, 1, c), circuit_power(1, 1, 1, 2, 200, 1)) < 1e-12);
    }
    SUBCASE("random states, several sizes and resistances") {
        Rng rng(7);
        for (int N : {1, 2, 5, 100}) {
            for (int k = 0; k < 200; ++k) {
                const double R_V = 0.5 + 10 * rng.uniform01();
                const double R_0 = 1 + 500 * rng.uniform01();
                const double V = 0.1 + 5 * rng.uniform01();
                const Circuit c{N, R_0 / R_V, V * V / R_V};
                const long n = N + static_cast<long>(rng.uniform_index(5000));
                const long a_i = 1 + static_cast<long>(rng.uniform_index(static_cast<uint64_t>(n)));
                CHECK(rel_err(power_per_agent(a_i, n, c), circuit_power(a_i, n, N, R_V, R_0, V)) < 1e-12);
            }
        }
    }
}

TEST_CASE("power_per_agent domain errors") {
    const Circuit c{5, 100.0, 0.5};
    CHECK_THROWS_AS(power_per_agent(0, 10, c), std::domain_error);
    CHECK_THROWS_AS(power_per_agent(11, 10, c), std::domain_error);
}

TEST_CASE("total_power") {
    const Circuit c{10, 100.0, 0.5};
    std::vector<int> at_optimum(10, 100);
    CHECK(total_power(at_optimum, c) == doctest::Approx(10 * 0.5 / 4).epsilon(1e-12));
    CHECK(total_power_for(1000, c) == doctest::Approx(10 * 0.5 / 4).epsilon(1e-12));

    const Circuit single{1, 100.0, 0.5};
    std::vector<int> one{37};
    CHECK(total_power(one, single) == power_per_agent(37, 37, single));

    std::vector<int> mixed{1, 5, 300, 20, 7, 7, 90, 2, 150, 33};
    const long n = 615;
    CHECK(total_power(mixed, c) == doctest::Approx(total_power_for(n, c)).epsilon(1e-12));
}

TEST_CASE("total power peaks at n = N*mu") {
    for (int N : {5, 10, 100}) {
        const Circuit c{N, 100.0, 0.5};
        long best = N;
        for (long n = N; n <= 3L * N * 100; ++n)
            if (total_power_for(n, c) > total_power_for(best, c)) best = n;
        CHECK(std::abs(best - N * 100L) <= 1);
    }
}

TEST_CASE("powers are permutation-equivariant and others lose when n grows") {
    const Circuit c{4, 100.0, 0.5};
    std::vector<int> a{3, 50, 7, 120};
    std::vector<int> b{120, 7, 50, 3};
    const auto Pa = powers(a, c);
    const auto Pb = powers(b, c);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(Pa[i] == Pb[a.size() - 1 - i]);

    std::vector<int> more = a;
    more[0] += 1;
    const auto Pm = powers(more, c);
    for (std::size_t j = 1; j < a.size(); ++j) CHECK(Pm[j] < Pa[j]);
}

TEST_CASE("exact_gain") {
    CHECK(exact_gain(3.0, 3.0) == 0.0);
    CHECK(exact_gain(2.0, 1.0) == 1.0);
    CHECK_THROWS_AS(exact_gain(1.0, 0.0), std::domain_error);

    const Circuit c{1, 100.0, 0.5};
    const double g = exact_gain(power_per_agent(2, 2, c), power_per_agent(1, 1, c));
    CHECK(g == doctest::Approx(2.0 * (101.0 / 102.0) * (101.0 / 102.0) - 1.0).epsilon(1e-12));
    CHECK(g == doctest::Approx(0.96097).epsilon(1e-5));
}

TEST_CASE("approx_gain") {
    const Circuit huge{1'000'000'000, 100.0, 0.5};
    CHECK(approx_gain(100, 1, 0, 100.0, huge) == doctest::Approx(0.01).epsilon(1e-9));

    const Circuit c{100, 100.0, 0.5};
    CHECK(approx_gain(40, 0, 0, 80.0, c) == 0.0);

    SUBCASE("agrees with exact gain for small perturbations") {
        for (long a_i = 90; a_i <= 110; ++a_i)
            for (long avg = 90; avg <= 110; avg += 5)
                for (int da : {-1, 0, 1})
                    for (int dr : {-1, 0, 1}) {
                        if (da == 0 && dr == 0) continue;
                        const long n = avg * 100;
                        const double exact =
                            exact_gain(power_per_agent(a_i, n, c), power_per_agent(a_i - da, n - da - dr, c));
                        const double approx = approx_gain(a_i, da, dr, static_cast<double>(n) / 100, c);
                        CHECK(std::abs(approx - exact) / std::abs(exact) < 0.1);
                    }
    }

    SUBCASE("matches a central finite difference of the power law") {
        const long a_i = 100;
        const long r = 100 * 100 - a_i;  // a_avg = mu
        auto P = [&](long a, long others) { return power_per_agent(a, a + others, c); };
        const double P0 = P(a_i, r);
        const double fd_a = (P(a_i + 1, r) - P(a_i - 1, r)) / 2.0 / P0;
        const double fd_r = (P(a_i, r + 1) - P(a_i, r - 1)) / 2.0 / P0;
        CHECK(std::abs(approx_gain(a_i, 1, 0, 100.0, c) - fd_a) / std::abs(fd_a) < 0.05);
        CHECK(std::abs(approx_gain(a_i, 0, 1, 100.0, c) - fd_r) / std::abs(fd_r) < 0.05);
    }
}

TEST_CASE("tipping_point") {
    CHECK(tipping_point(0.0005) == doctest::Approx(2000.0).epsilon(1e-12));
    CHECK(tipping_point(1.0) == 1.0);
    CHECK(tipping_point(0.005) == doctest::Approx(200.0).epsilon(1e-12));
    CHECK_THROWS_AS(tipping_point(0.0), std::domain_error);
    CHECK_THROWS_AS(tipping_point(-1.0), std::domain_error);
}
