#include "specturan/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"

namespace specturan {

namespace {

constexpr double kPowerGradSwitch = 1.25;  // below this, pure projected gradient

struct PolyCtx {
    int n = 0;
    int s = 2;
    double sfact = 2.0;
    double total_w = 0.0;
    std::vector<double> w;
    std::vector<int> verts;  // s entries per edge

    explicit PolyCtx(const WeightedSGraph& g) : n(g.n), s(g.s) {
        sfact = static_cast<double>(factorial(g.s));
        w.reserve(g.edges.size());
        verts.reserve(g.edges.size() * g.s);
        for (const auto& [key, weight] : g.edges) {
            w.push_back(static_cast<double>(weight));
            total_w += static_cast<double>(weight);
            for (int v : key) verts.push_back(v);
        }
    }

    std::size_t edge_count() const { return w.size(); }

    double eval(std::span<const double> x) const {
        double acc = 0.0;
        const int* vp = verts.data();
        for (double we : w) {
            double prod = we;
            for (int i = 0; i < s; ++i) prod *= x[*vp++];
            acc += prod;
        }
        return sfact * acc;
    }

    // g_v = s! * sum_{I contains v} w_I prod_{u in I\v} x_u
    void grad(std::span<const double> x, std::vector<double>& g) const {
        g.assign(n, 0.0);
        const int* vp = verts.data();
        for (double we : w) {
            for (int i = 0; i < s; ++i) {
                double prod = we;
                for (int j = 0; j < s; ++j)
                    if (j != i) prod *= x[vp[j]];
                g[vp[i]] += prod;
            }
            vp += s;
        }
        for (double& gv : g) gv *= sfact;
    }
};

double pnorm(std::span<const double> x, double p) {
    double acc = 0.0;
    for (double v : x) acc += std::pow(std::abs(v), p);
    return std::pow(acc, 1.0 / p);
}

bool normalize_p(std::vector<double>& x, double p) {
    double norm = pnorm(x, p);
    if (!(norm > 0.0)) return false;
    for (double& v : x) v /= norm;
    return true;
}

// eigenequation defect: max_i over the support of
// |lambda x_i^(p-1) - (s-1)! sum_{I contains i} w_I x_{I\i}|
double eigen_residual(const PolyCtx& ctx, std::span<const double> x, double lambda, double p,
                      std::vector<double>& scratch) {
    ctx.grad(x, scratch);
    double worst = 0.0;
    for (int i = 0; i < ctx.n; ++i) {
        if (x[i] <= 1e-13) continue;
        double lhs = lambda * std::pow(x[i], p - 1.0);
        double rhs = scratch[i] / static_cast<double>(ctx.s);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

struct LineSearchResult {
    bool ok = false;
    std::vector<double> x;
    double obj = 0.0;
};

// Ascent along the gradient with renormalization as the retraction.
LineSearchResult armijo_step(const PolyCtx& ctx, const std::vector<double>& x, double obj,
                             const std::vector<double>& g, double p) {
    LineSearchResult out;
    double gg = 0.0, gx = 0.0, gmax = 0.0;
    for (int i = 0; i < ctx.n; ++i) {
        gg += g[i] * g[i];
        gx += g[i] * std::pow(x[i], p - 1.0);
        gmax = std::max(gmax, std::abs(g[i]));
    }
    double dir_deriv = gg - static_cast<double>(ctx.s) * obj * gx;
    double scale = std::max({1.0, std::abs(obj), gmax});
    if (dir_deriv <= 1e-15 * scale * scale) return out;

    double t = 1.0 / std::max(1.0, gmax);
    for (int back = 0; back < 60; ++back, t *= 0.5) {
        std::vector<double> y(x);
        for (int i = 0; i < ctx.n; ++i) y[i] += t * g[i];
        if (!normalize_p(y, p)) continue;
        double oy = ctx.eval(y);
        if (oy >= obj + 1e-4 * t * dir_deriv && oy > obj) {
            out.ok = true;
            out.x = std::move(y);
            out.obj = oy;
            return out;
        }
    }
    return out;
}

struct RestartResult {
    std::vector<double> x;
    double obj = 0.0;
    bool converged = false;
    double residual = 0.0;
};

RestartResult solve_from(const PolyCtx& ctx, std::vector<double> x, double p,
                         const SolverOptions& opts) {
    RestartResult res;
    std::vector<double> g, z;
    if (!normalize_p(x, p)) {
        x.assign(ctx.n, std::pow(1.0 / ctx.n, 1.0 / p));
    }
    double obj = ctx.eval(x);
    double gamma = 0.0;
    int stall = 0;
    double last_defect = std::numeric_limits<double>::infinity();

    for (int iter = 0; iter < opts.max_iter; ++iter) {
        ctx.grad(x, g);

        bool stepped = false;
        std::vector<double> y;
        double oy = 0.0;
        if (p >= kPowerGradSwitch) {
            // shifted non-linear power step; the shift is raised until the
            // objective stops decreasing (SS-HOPM style safeguard)
            for (int retry = 0; retry < 48 && !stepped; ++retry) {
                y = x;
                double zmax = 0.0;
                for (int i = 0; i < ctx.n; ++i) {
                    double zi = g[i] / static_cast<double>(ctx.s);
                    if (gamma > 0.0) zi += gamma * std::pow(x[i], p - 1.0);
                    y[i] = zi;
                    zmax = std::max(zmax, zi);
                }
                if (!(zmax > 0.0)) { y.clear(); break; }
                for (int i = 0; i < ctx.n; ++i) y[i] = std::pow(y[i] / zmax, 1.0 / (p - 1.0));
                if (!normalize_p(y, p)) { y.clear(); break; }
                oy = ctx.eval(y);
                if (oy >= obj - 1e-15 * std::max(1.0, std::abs(obj)))
                    stepped = true;
                else
                    gamma = (gamma == 0.0) ? std::max(1.0, obj) : gamma * 2.0;
            }
        }
        if (!stepped) {
            LineSearchResult ls = armijo_step(ctx, x, obj, g, p);
            if (!ls.ok) break;  // stationary
            y = std::move(ls.x);
            oy = ls.obj;
        }

        double delta = oy - obj;
        x = std::move(y);
        obj = oy;
        if (delta <= opts.tol_stall * std::max(1.0, std::abs(obj)))
            ++stall;
        else
            stall = 0;

        if (stall >= 6) {
            double defect = eigen_residual(ctx, x, obj, p, z);
            if (defect <= opts.tol_residual) break;
            if (defect < 0.98 * last_defect) {
                // objective is flat but the witness is still contracting:
                // keep polishing with fixed-point steps
                last_defect = defect;
                stall = 0;
                continue;
            }
            ctx.grad(x, g);
            LineSearchResult kick = armijo_step(ctx, x, obj, g, p);
            if (!kick.ok) break;
            x = std::move(kick.x);
            obj = kick.obj;
            stall = 0;
            last_defect = std::numeric_limits<double>::infinity();
        }
    }

    res.obj = ctx.eval(x);
    res.residual = eigen_residual(ctx, x, res.obj, p, z);
    res.converged = res.residual <= opts.tol_residual;
    res.x = std::move(x);
    return res;
}

std::vector<double> dirichlet_start(std::mt19937_64& rng, int n, double p) {
    std::uniform_real_distribution<double> unif(1e-12, 1.0);
    std::vector<double> x(n);
    for (double& v : x) v = std::pow(-std::log(unif(rng)), 1.0 / p);
    normalize_p(x, p);
    return x;
}

SpectralResult empty_result(const WeightedSGraph& w, double p) {
    SpectralResult res;
    res.converged = true;
    res.witness.p = p;
    if (w.n > 0) res.witness.x.assign(w.n, std::pow(1.0 / w.n, 1.0 / p));
    return res;
}

}  // namespace

double poly_eval(const WeightedSGraph& w, std::span<const double> x) {
    if (static_cast<int>(x.size()) != w.n)
        throw std::invalid_argument("poly_eval dimension mismatch");
    return PolyCtx(w).eval(x);
}

std::vector<double> poly_grad(const WeightedSGraph& w, std::span<const double> x) {
    if (static_cast<int>(x.size()) != w.n)
        throw std::invalid_argument("poly_grad dimension mismatch");
    std::vector<double> g;
    PolyCtx(w).grad(x, g);
    return g;
}

SpectralResult spectral_radius(const WeightedSGraph& w, double p, const SolverOptions& opts) {
    if (!(p > 1.0)) throw std::invalid_argument("spectral_radius needs p > 1");
    if (w.n == 0 || w.edges.empty()) return empty_result(w, p);

    PolyCtx ctx(w);
    const double sfact_n = ctx.sfact * ctx.total_w;
    const double uniform_value = sfact_n / std::pow(static_cast<double>(w.n),
                                                    static_cast<double>(w.s) / p);

    std::vector<std::vector<double>> starts;
    starts.emplace_back(w.n, std::pow(1.0 / w.n, 1.0 / p));
    for (const auto& extra : opts.extra_starts) {
        if (static_cast<int>(extra.size()) != w.n) continue;
        std::vector<double> x(extra);
        for (double& v : x) v = std::max(v, 0.0);
        if (normalize_p(x, p)) starts.push_back(std::move(x));
    }
    std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
    while (static_cast<int>(starts.size()) < std::max(1, opts.restarts) +
                                                 static_cast<int>(opts.extra_starts.size()))
        starts.push_back(dirichlet_start(rng, w.n, p));

    RestartResult best;
    best.obj = -1.0;
    for (auto& start : starts) {
        RestartResult res = solve_from(ctx, std::move(start), p, opts);
        if (res.obj > best.obj) best = std::move(res);
    }

    SpectralResult out;
    out.lambda = best.obj;
    out.witness = PVector{best.x, p};
    out.residual = best.residual;
    out.restarts_used = static_cast<int>(starts.size());
    out.converged = best.converged;
    out.lower_bound = std::max(best.obj, uniform_value);
    out.upper_bound = sfact_n;
    return out;
}

SpectralResult spectral_radius_p1(const WeightedSGraph& w, const SolverOptions& opts) {
    if (w.n == 0 || w.edges.empty()) {
        SpectralResult res = empty_result(w, 1.0);
        if (w.n > 0) res.witness.x.assign(w.n, 1.0 / w.n);
        return res;
    }

    PolyCtx ctx(w);
    const int n = w.n;
    const int s = w.s;
    const double sfact_n = ctx.sfact * ctx.total_w;

    std::vector<double> best_x(n, 1.0 / n);
    double best = ctx.eval(best_x);

    auto consider = [&](std::vector<double>&& x, double val) {
        if (val > best) {
            best = val;
            best_x = std::move(x);
        }
    };

    std::vector<std::size_t> all_edges(ctx.edge_count());
    for (std::size_t e = 0; e < all_edges.size(); ++e) all_edges[e] = e;

    auto eval_on = [&](const std::vector<std::size_t>& edges, std::span<const double> x) {
        double acc = 0.0;
        for (std::size_t e : edges) {
            double prod = ctx.w[e];
            for (int i = 0; i < s; ++i) prod *= x[ctx.verts[e * s + i]];
            acc += prod;
        }
        return ctx.sfact * acc;
    };
    std::vector<double> g(n, 0.0);
    auto grad_on = [&](const std::vector<std::size_t>& edges, std::span<const double> x) {
        std::fill(g.begin(), g.end(), 0.0);
        for (std::size_t e : edges) {
            const int* vp = ctx.verts.data() + e * s;
            for (int i = 0; i < s; ++i) {
                double prod = ctx.w[e];
                for (int j = 0; j < s; ++j)
                    if (j != i) prod *= x[vp[j]];
                g[vp[i]] += prod;
            }
        }
        for (double& gv : g) gv *= ctx.sfact;
    };

    // replicator (Baum-Eagon) ascent: x_i <- x_i g_i / (s P); monotone for
    // polynomials with non-negative coefficients
    auto polish = [&](std::vector<double> x, const std::vector<std::size_t>& edges,
                      int iters) -> std::pair<std::vector<double>, bool> {
        double val = eval_on(edges, x);
        if (!(val > 0.0)) return {std::move(x), true};
        for (int it = 0; it < iters; ++it) {
            grad_on(edges, x);
            double denom = static_cast<double>(s) * val;
            double sum = 0.0;
            for (int i = 0; i < n; ++i) {
                x[i] = x[i] * g[i] / denom;
                sum += x[i];
            }
            if (sum > 0.0)
                for (double& v : x) v /= sum;
            double nv = eval_on(edges, x);
            if (nv - val <= 1e-15 * std::max(1.0, nv)) return {std::move(x), true};
            val = nv;
        }
        return {std::move(x), false};
    };

    bool exhaustive = n <= opts.support_cap && n <= 63;
    bool all_polished = true;

    if (exhaustive) {
        std::vector<std::uint64_t> edge_mask(ctx.edge_count(), 0);
        for (std::size_t e = 0; e < ctx.edge_count(); ++e) {
            std::uint64_t m = 0;
            for (int i = 0; i < s; ++i) m |= 1ull << ctx.verts[e * s + i];
            edge_mask[e] = m;
        }
        const std::uint64_t full = (1ull << n) - 1;
        std::vector<std::size_t> inside;
        for (std::uint64_t mask = 1; mask <= full; ++mask) {
            inside.clear();
            double wsum = 0.0;
            for (std::size_t e = 0; e < ctx.edge_count(); ++e) {
                if ((edge_mask[e] & mask) == edge_mask[e]) {
                    inside.push_back(e);
                    wsum += ctx.w[e];
                }
            }
            if (inside.empty()) continue;
            int size = std::popcount(mask);
            double uniform = 1.0 / size;
            std::vector<double> x(n, 0.0);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1ull) x[i] = uniform;
            double val = ctx.sfact * wsum * std::pow(uniform, s);
            consider(std::vector<double>(x), val);
            auto [polished, done] = polish(std::move(x), inside, 3000);
            all_polished = all_polished && done;
            double pv = eval_on(inside, polished);
            consider(std::move(polished), pv);
        }
    } else {
        all_polished = false;
    }

    std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ull + 0x452821e638d01377ull);
    for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
        std::vector<double> x = dirichlet_start(rng, n, 1.0);
        auto [polished, done] = polish(std::move(x), all_edges, 5000);
        double pv = ctx.eval(polished);
        consider(std::move(polished), pv);
    }

    // stationarity defect on the simplex: gradient equal to s*lambda on the
    // support, at most s*lambda off it
    ctx.grad(best_x, g);
    double mu = static_cast<double>(s) * best;
    double defect = 0.0;
    for (int i = 0; i < n; ++i) {
        if (best_x[i] > 1e-13)
            defect = std::max(defect, std::abs(g[i] - mu));
        else
            defect = std::max(defect, std::max(0.0, g[i] - mu));
    }

    SpectralResult out;
    out.lambda = best;
    out.witness = PVector{std::move(best_x), 1.0};
    out.residual = defect;
    out.restarts_used = std::max(1, opts.restarts);
    out.converged = defect <= std::max(opts.tol_residual, 1e-7 * std::max(1.0, mu));
    out.lower_bound = best;
    out.upper_bound = sfact_n;
    out.heuristic = !(exhaustive && all_polished);
    return out;
}

SpectralResult q_spectral_radius(const Hypergraph& q, const Hypergraph& h, double p,
                                 const SolverOptions& opts) {
    WeightedSGraph d = derive_weighted(q, h);
    return p == 1.0 ? spectral_radius_p1(d, opts) : spectral_radius(d, p, opts);
}

std::string SpectralResult::to_json(double p) const {
    nlohmann::ordered_json j;
    j["lambda"] = lambda;
    j["p"] = p;
    j["witness"] = witness.x;
    j["residual"] = residual;
    j["converged"] = converged;
    j["lower_bound"] = lower_bound;
    j["upper_bound"] = upper_bound;
    j["restarts_used"] = restarts_used;
    j["heuristic"] = heuristic;
    return j.dump();
}

SweepReport p_sweep(const WeightedSGraph& w, std::span<const double> p_list,
                    const SolverOptions& opts, double slack) {
    for (std::size_t i = 0; i < p_list.size(); ++i) {
        if (p_list[i] < 1.0) throw std::invalid_argument("p_sweep needs p >= 1");
        if (i > 0 && p_list[i] <= p_list[i - 1])
            throw std::invalid_argument("p_sweep needs a strictly ascending p list");
    }

    PolyCtx ctx(w);
    const double sfact_n = ctx.sfact * ctx.total_w;
    SweepReport report;

    SolverOptions local = opts;
    for (double p : p_list) {
        SpectralResult res =
            (p == 1.0) ? spectral_radius_p1(w, local) : spectral_radius(w, p, local);
        SweepPoint point;
        point.p = p;
        point.f_value = sfact_n > 0.0 ? std::pow(res.lambda / sfact_n, p) : 0.0;
        point.scaled =
            w.n > 0 ? res.lambda * std::pow(static_cast<double>(w.n), w.s / p - w.s) : 0.0;
        local.extra_starts = {res.witness.x};  // warm start for the next p
        point.result = std::move(res);
        report.points.push_back(std::move(point));
    }

    const double scale = std::max(1.0, sfact_n);
    auto flag = [&](const std::string& msg) { report.violations.push_back(msg); };
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        const auto& pt = report.points[i];
        std::ostringstream id;
        id << "p=" << pt.p;
        if (w.n > 0) {
            double lower = sfact_n / std::pow(static_cast<double>(w.n), w.s / pt.p);
            if (pt.result.lambda < lower - slack * scale)
                flag(id.str() + ": lambda below the uniform-vector bound");
        }
        if (pt.result.lambda > sfact_n + slack * scale)
            flag(id.str() + ": lambda above s! N");
        if (i == 0) continue;
        const auto& prev = report.points[i - 1];
        if (pt.result.lambda < prev.result.lambda - slack * scale)
            flag(id.str() + ": lambda decreased in p");
        if (std::abs(pt.result.lambda - prev.result.lambda) >
            (pt.p - prev.p) * sfact_n + slack * scale)
            flag(id.str() + ": Lipschitz bound violated");
        if (pt.f_value > prev.f_value + slack)
            flag(id.str() + ": f(p) increased");
    }
    return report;
}

std::string SweepReport::to_csv() const {
    std::ostringstream os;
    os << "p,lambda,f,scaled,residual,converged\n";
    os.precision(17);
    for (const auto& pt : points)
        os << pt.p << ',' << pt.result.lambda << ',' << pt.f_value << ',' << pt.scaled << ','
           << pt.result.residual << ',' << (pt.result.converged ? 1 : 0) << '\n';
    return os.str();
}

double deletion_ratio_bound(int s, double p, double x) {
    if (x < 0.0 || x >= 1.0) throw std::invalid_argument("deletion_ratio_bound needs 0 <= x < 1");
    return (1.0 - s * x) / std::pow(1.0 - x, static_cast<double>(s) / p);
}

}  // namespace specturan
