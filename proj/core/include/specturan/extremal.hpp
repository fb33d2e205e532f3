#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specturan/enumerate.hpp"
#include "specturan/spectral.hpp"
#include "specturan/util.hpp"

namespace specturan {

/// One order of a hereditary family: exact maxima over the enumerated family.
struct DensityPoint {
    int n = 0;
    count_t ex_count = 0;       // max N(Q,H) over the family at order n
    double ex_ratio = 0.0;      // ex_count / C(n,s)
    double lambda_max = 0.0;    // max lambda^(p) over the family
    double lambda_scaled = 0.0; // lambda_max * n^(s/p) / (n)_s
    CanonicalLabel witness_ex;
    CanonicalLabel witness_lambda;
};

/// A density run bundles the points with the parameters they came from.
struct DensityRun {
    int s = 0;
    double p = 1.0;
    std::string q_label;
    std::string family_label;
    std::vector<DensityPoint> points;

    std::string to_csv() const;
    std::string to_plot_tsv() const;  // two columns: n, scaled value
};

struct CheckInstance {
    std::string id;
    bool pass = true;
    double margin = 0.0;  // slack left in the checked inequality (>= 0 when pass)
    std::string note;
    std::vector<std::string> witness_hgr;
};

struct VerificationReport {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool pass = true;
    double worst_margin = 0.0;
    std::vector<CheckInstance> instances;

    void add(CheckInstance inst);
    std::string to_json() const;
    std::string to_csv() const;
};

struct ExtremalOptions {
    SolverOptions solver;
    int threads = 0;  // 0 = hardware concurrency
    int ceiling_override = 0;
};

/// Enumerates the F-free family at each order of [n_lo, n_hi] and takes the
/// exact maxima of N(Q,.) and of the solver lambda^(p).
DensityRun density_sequence(const Hypergraph& q, const FamilySpec& family, int n_lo, int n_hi,
                            double p, const ExtremalOptions& opts = {});

/// Sequence laws for one run, with relative slack 1e-7: p = 1 -> lambda_max
/// non-decreasing and <= s!; p > 1 -> lambda_scaled non-increasing; at every
/// order lambda_scaled >= ex_ratio.
VerificationReport verify_monotone(const DensityRun& run);

/// Exhaustive spectral pentagon check over the triangle-free family of order
/// n: for p > 1 the maximizer must be the balanced blow-up of C_5 (deviations
/// are reported as explicit small-n exceptions); for p = 1 the maximum must
/// equal 5!/5^5 and every maximizer must contain a C_5.
VerificationReport pentagon_check(int n, double p, const ExtremalOptions& opts = {});
VerificationReport pentagon_check(int n, std::span<const double> ps,
                                  const ExtremalOptions& opts = {});

/// Exhaustive spectral Turan check: family = K_{l+1}-free, Q = K_s; the
/// maximizer must be T_l(n) (unique for p > 1); for p = 1 every maximizer
/// must contain K_l and the maximum must equal (l)_s / l^s.
VerificationReport turan_check(int l, int s, int n, double p, const ExtremalOptions& opts = {});

/// The three bound checks for a Q-flat family with known density pi:
/// N(Q,H) <= pi n^s / s! (exact integers), lambda^(p) <= pi n^(s-s/p), and
/// lambda^(p) <= pi^(1/p) (s! N)^(1-1/p), with relative solver slack.
VerificationReport flat_bounds_check(const Hypergraph& q, const Hypergraph& h, Rational pi,
                                     double p, const ExtremalOptions& opts = {});

/// Exact-integer check of P_{Q,H}((k_1,...,k_n)) <= s! N(Q, H(k_1,...,k_n)).
VerificationReport blowup_inequality_check(const Hypergraph& q, const Hypergraph& h,
                                           std::span<const int> sizes);

/// Locates the lambda^(p)-extremal graph of the family at order n and reports
/// (a) its minimum Q-degree against (1-eps) pi C(n, s-1), (b) the witness
/// minimum entry against (1/n)(1 - p/((p-1) s log n)), (c) the successive
/// difference lambda_n - lambda_{n-1} against pi (s - s/p)(1 - sigma)
/// n^(s-s/p-1) with sigma = eps pi / (5 s! (s-1)), plus the observed
/// correction column a_n. All observational: the instances carry margins,
/// pass is not tied to the asymptotic claims. pi is caller-supplied.
VerificationReport stability_check(const Hypergraph& q, const FamilySpec& family, int n, double p,
                                   double eps, Rational pi, const ExtremalOptions& opts = {});

}  // namespace specturan
