#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "specturan/embed.hpp"

namespace specturan {

/// Non-negative vector on the unit p-sphere (p = 1 means the standard simplex).
struct PVector {
    std::vector<double> x;
    double p = 2.0;
};

struct SolverOptions {
    int restarts = 32;
    double tol_residual = 1e-9;
    double tol_stall = 1e-12;
    int max_iter = 100000;
    std::uint64_t seed = 0;
    /// Exhaustive support search bound for the p = 1 solver.
    int support_cap = 12;
    /// Additional starting vectors (renormalized internally), e.g. warm
    /// starts from a neighboring p.
    std::vector<std::vector<double>> extra_starts;
};

struct SpectralResult {
    double lambda = 0.0;
    PVector witness;
    /// Max-norm eigenequation defect over the support of the witness. For
    /// p = 1 this is the simplex stationarity defect instead.
    double residual = 0.0;
    int restarts_used = 0;
    bool converged = false;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    /// p = 1 only: true when the support search was not exhaustive.
    bool heuristic = false;

    std::string to_json(double p) const;
};

/// P_{Q,H}(x) evaluated on a weighted s-graph:
/// s! * sum over keys I of w(I) * prod_{i in I} x_i.
double poly_eval(const WeightedSGraph& w, std::span<const double> x);

/// Component v: s! * sum over keys containing v of w(I) * prod_{i in I\{v}} x_i.
/// Satisfies the Euler identity sum_v x_v * grad_v = s * poly_eval.
std::vector<double> poly_grad(const WeightedSGraph& w, std::span<const double> x);

/// lambda^(p) for p > 1: best objective over restarts of a shifted non-linear
/// power iteration (x <- grad^(1/(p-1)), renormalized) safeguarded by
/// projected-gradient ascent; for p < 1.25 pure projected gradient with an
/// Armijo line search. The reported lambda is an attained objective value and
/// hence a certified lower bound; upper_bound = s! * total weight.
SpectralResult spectral_radius(const WeightedSGraph& w, double p, const SolverOptions& opts = {});

/// lambda^(1): maximum of the polynomial over the simplex. Combines
/// replicator (Baum-Eagon) ascent from random starts, exhaustive evaluation
/// of uniform-on-S vectors for every support S when n <= support_cap, and
/// per-support replicator polishing. heuristic = false only when the support
/// search was exhaustive and every polish converged.
SpectralResult spectral_radius_p1(const WeightedSGraph& w, const SolverOptions& opts = {});

/// derive_weighted + the appropriate solver for p >= 1.
SpectralResult q_spectral_radius(const Hypergraph& q, const Hypergraph& h, double p,
                                 const SolverOptions& opts = {});

struct SweepPoint {
    double p = 1.0;
    SpectralResult result;
    double f_value = 0.0;  // (lambda / (s! N))^p
    double scaled = 0.0;   // lambda * n^(s/p - s)
};

struct SweepReport {
    std::vector<SweepPoint> points;
    std::vector<std::string> violations;  // empty = all laws hold within slack
    std::string to_csv() const;
};

/// Solves at each p of a sorted ascending list (all >= 1), warm-starting each
/// solve with the previous witness, and flags violations of: monotone
/// increase in p, the Lipschitz bound |dlambda| <= dp * s! * N, a
/// non-increasing f, and the uniform-vector sandwich
/// s!N/n^(s/p) <= lambda <= s!N.
SweepReport p_sweep(const WeightedSGraph& w, std::span<const double> p_list,
                    const SolverOptions& opts = {}, double slack = 1e-6);

/// (1 - s*x) / (1 - x)^(s/p), non-increasing on [0, 1) for p > 1, s >= 2;
/// scalar helper behind the scaled-sequence analyses.
double deletion_ratio_bound(int s, double p, double x);

}  // namespace specturan
