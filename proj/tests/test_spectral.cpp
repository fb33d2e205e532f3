#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "specturan/spectral.hpp"

using namespace specturan;

namespace {

WeightedSGraph random_weighted(std::mt19937& rng, int n, int s, int edge_tries, int max_w) {
    std::vector<std::vector<int>> keys;
    for (int t = 0; t < edge_tries; ++t) {
        std::vector<int> e;
        while (static_cast<int>(e.size()) < s) {
            int v = static_cast<int>(rng() % n);
            if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        std::sort(e.begin(), e.end());
        keys.push_back(e);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    WeightedSGraph w;
    w.n = n;
    w.s = s;
    for (auto& k : keys) w.edges.emplace_back(std::move(k), 1 + rng() % max_w);
    return w;
}

std::vector<double> random_point(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    std::vector<double> x(n);
    for (double& v : x) v = unif(rng);
    return x;
}

}  // namespace

TEST_CASE("poly_eval") {
    WeightedSGraph k2 = unit_weighted(complete_graph(2, 2));
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<double> x{inv_sqrt2, inv_sqrt2};
    CHECK(poly_eval(k2, x) == doctest::Approx(1.0));

    WeightedSGraph dc5 = derive_weighted(cycle_graph(5), cycle_graph(5));
    std::vector<double> uniform(5, 0.2);
    CHECK(poly_eval(dc5, uniform) == doctest::Approx(120.0 / 3125.0));

    std::vector<double> zeroed{0.0, 1.0, 1.0, 1.0, 1.0};
    CHECK(poly_eval(dc5, zeroed) == 0.0);

    CHECK_THROWS_AS(poly_eval(dc5, x), std::invalid_argument);
}

TEST_CASE("poly_grad") {
    WeightedSGraph dk3 = unit_weighted(complete_graph(3, 2));
    std::vector<double> uniform(3, 1.0 / 3.0);
    for (double g : poly_grad(dk3, uniform)) CHECK(g == doctest::Approx(4.0 / 3.0));

    std::vector<double> zeros(3, 0.0);
    for (double g : poly_grad(dk3, zeros)) CHECK(g == 0.0);
}

TEST_CASE("gradient matches central finite differences") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        int s = 2 + static_cast<int>(rng() % 3);
        int n = s + 1 + static_cast<int>(rng() % 4);
        WeightedSGraph w = random_weighted(rng, n, s, 6, 4);
        std::vector<double> x = random_point(rng, n);
        std::vector<double> g = poly_grad(w, x);
        const double h = 1e-6;
        for (int i = 0; i < n; ++i) {
            std::vector<double> hi(x), lo(x);
            hi[i] += h;
            lo[i] -= h;
            double fd = (poly_eval(w, hi) - poly_eval(w, lo)) / (2 * h);
            CHECK(std::abs(fd - g[i]) <= 1e-6 * std::max(1.0, std::abs(g[i])));
        }
    }
}

TEST_CASE("Euler identity") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        int s = 2 + static_cast<int>(rng() % 3);
        int n = s + 1 + static_cast<int>(rng() % 4);
        WeightedSGraph w = random_weighted(rng, n, s, 7, 3);
        std::vector<double> x = random_point(rng, n);
        std::vector<double> g = poly_grad(w, x);
        double lhs = 0.0;
        for (int i = 0; i < n; ++i) lhs += x[i] * g[i];
        double rhs = s * poly_eval(w, x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("p=2 matches the adjacency spectral radius") {
    SolverOptions opts;
    SpectralResult c4 = spectral_radius(unit_weighted(cycle_graph(4)), 2.0, opts);
    CHECK(std::abs(c4.lambda - 2.0) <= 1e-8);
    CHECK(c4.converged);
    CHECK(c4.residual <= 1e-8);

    for (int n = 3; n <= 7; ++n) {
        SpectralResult kn = spectral_radius(unit_weighted(complete_graph(n, 2)), 2.0, opts);
        CHECK(std::abs(kn.lambda - (n - 1.0)) <= 1e-8);
    }

    // irregular cases against the oracle
    std::mt19937 rng(47);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        std::vector<std::vector<int>> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 2) edges.push_back({a, b});
        Hypergraph g = build(n, 2, edges);
        SpectralResult res = spectral_radius(unit_weighted(g), 2.0, opts);
        CHECK(std::abs(res.lambda - oracle::adjacency_spectral_radius(g)) <= 1e-8);
    }
}

TEST_CASE("large p approaches s! N") {
    WeightedSGraph dc5 = derive_weighted(cycle_graph(5), cycle_graph(5));
    SpectralResult res = spectral_radius(dc5, 64.0, {});
    // the symmetric maximizer is exact here: lambda = 120 * 5^(-5/64)
    double exact = 120.0 * std::pow(5.0, -5.0 / 64.0);
    CHECK(res.lambda == doctest::Approx(exact).epsilon(1e-9));
    CHECK(res.lambda <= 120.0);
    CHECK(res.lambda >= 105.0);
}

TEST_CASE("p=1 solver") {
    SpectralResult k3 = spectral_radius_p1(unit_weighted(complete_graph(3, 2)), {});
    CHECK(k3.lambda == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK_FALSE(k3.heuristic);

    SpectralResult dc5 = spectral_radius_p1(derive_weighted(cycle_graph(5), cycle_graph(5)), {});
    CHECK(dc5.lambda == doctest::Approx(120.0 / 3125.0).epsilon(1e-9));

    // Motzkin-Straus on all graphs with <= 5 vertices
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : enumerate_graphs(n, 2)) {
            SpectralResult res = spectral_radius_p1(unit_weighted(g), {});
            double expected = 1.0 - 1.0 / oracle::clique_number(g);
            CHECK(std::abs(res.lambda - expected) <= 1e-6);
        }
    }
}

TEST_CASE("empty weighted graphs") {
    WeightedSGraph empty;
    empty.n = 4;
    empty.s = 2;
    SpectralResult res = spectral_radius(empty, 2.0, {});
    CHECK(res.lambda == 0.0);
    CHECK(res.converged);
    CHECK(res.witness.x.size() == 4);

    SpectralResult res1 = spectral_radius_p1(empty, {});
    CHECK(res1.lambda == 0.0);
    CHECK(res1.converged);

    CHECK_THROWS_AS(spectral_radius(empty, 1.0, {}), std::invalid_argument);
}

TEST_CASE("p sweep laws on a triangle") {
    WeightedSGraph dk3 = unit_weighted(complete_graph(3, 2));
    std::vector<double> ps{1.0, 2.0, 4.0};
    SweepReport report = p_sweep(dk3, ps, {});
    REQUIRE(report.points.size() == 3);
    CHECK(report.violations.empty());
    CHECK(report.points[0].result.lambda == doctest::Approx(2.0 / 3.0));
    CHECK(report.points[1].result.lambda == doctest::Approx(2.0));
    CHECK(report.points[2].result.lambda <= 6.0 + 1e-9);
    CHECK(report.points[0].f_value >= report.points[1].f_value - 1e-9);
    CHECK(report.points[1].f_value >= report.points[2].f_value - 1e-9);

    std::vector<double> bad{2.0, 1.0};
    CHECK_THROWS_AS(p_sweep(dk3, bad, {}), std::invalid_argument);
}

TEST_CASE("scaled deletion ratio helper is non-increasing") {
    for (int s = 2; s <= 6; ++s) {
        for (double p : {1.5, 2.0, 4.0}) {
            double prev = deletion_ratio_bound(s, p, 0.0);
            for (int k = 1; k <= 99; ++k) {
                double x = k / 100.0;
                double cur = deletion_ratio_bound(s, p, x);
                CHECK(cur <= prev + 1e-12);
                prev = cur;
            }
        }
    }
    CHECK_THROWS_AS(deletion_ratio_bound(3, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("removing an edge never helps") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        int s = 2 + static_cast<int>(rng() % 2);
        int n = s + 2 + static_cast<int>(rng() % 3);
        WeightedSGraph w = random_weighted(rng, n, s, 8, 3);
        if (w.edges.size() < 2) continue;
        WeightedSGraph sub = w;
        sub.edges.erase(sub.edges.begin() + static_cast<long>(rng() % sub.edges.size()));
        for (double p : {1.5, 2.0, 3.0}) {
            double full = spectral_radius(w, p, {}).lambda;
            double less = spectral_radius(sub, p, {}).lambda;
            CHECK(less <= full + 1e-7 * std::max(1.0, full));
        }
    }
}

TEST_CASE("unit-weight derived graphs match their plain support") {
    Hypergraph l8 = c5_blowup(8);
    WeightedSGraph d = derive_weighted(cycle_graph(5), l8);
    WeightedSGraph plain = unit_weighted(support_graph(d));
    CHECK(d == plain);
    SpectralResult a = spectral_radius(d, 2.0, {});
    SpectralResult b = spectral_radius(plain, 2.0, {});
    CHECK(a.lambda == b.lambda);
}

TEST_CASE("sandwich bounds hold for solver output") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        int s = 2 + static_cast<int>(rng() % 3);
        int n = s + 1 + static_cast<int>(rng() % 4);
        WeightedSGraph w = random_weighted(rng, n, s, 6, 4);
        double sfact_n = static_cast<double>(factorial(s)) * static_cast<double>(w.total_weight());
        for (double p : {1.5, 2.0, 6.0}) {
            SpectralResult res = spectral_radius(w, p, {});
            CHECK(res.lower_bound <= res.lambda + 1e-12);
            CHECK(res.lambda <= res.upper_bound + 1e-9);
            CHECK(res.lambda >= sfact_n / std::pow(n, static_cast<double>(s) / p) - 1e-7);
            CHECK(res.lambda <= sfact_n + 1e-7);
        }
    }
}
