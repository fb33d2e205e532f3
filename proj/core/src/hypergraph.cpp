#include "specturan/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace specturan {

bool Hypergraph::has_edge(std::span<const int> sorted_edge) const {
    if (static_cast<int>(sorted_edge.size()) != r) return false;
    return std::binary_search(edges.begin(), edges.end(), sorted_edge,
                              [](const auto& a, const auto& b) {
                                  return std::lexicographical_compare(a.begin(), a.end(),
                                                                      b.begin(), b.end());
                              });
}

Hypergraph build(int n, int r, const std::vector<std::vector<int>>& raw) {
    if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    Hypergraph h;
    h.n = n;
    h.r = r;
    h.edges.reserve(raw.size());
    for (const auto& e : raw) {
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("edge arity does not match uniformity");
        std::vector<int> s(e);
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= n) throw std::invalid_argument("edge vertex out of range");
            if (i > 0 && s[i] == s[i - 1])
                throw std::invalid_argument("edge with repeated vertex");
        }
        h.edges.push_back(std::move(s));
    }
    std::sort(h.edges.begin(), h.edges.end());
    h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
    return h;
}

namespace {

// All r-subsets of [n], visiting cb(subset).
template <typename Cb>
void for_each_subset(int n, int r, Cb&& cb) {
    if (r > n || r < 0) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        cb(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Hypergraph complete_graph(int n, int r) {
    if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
    std::vector<std::vector<int>> edges;
    for_each_subset(n, r, [&](const std::vector<int>& e) { edges.push_back(e); });
    return build(n, r, edges);
}

std::vector<int> balanced_sizes(int n, int l) {
    if (l <= 0) throw std::invalid_argument("need at least one part");
    std::vector<int> sizes(l, n / l);
    for (int i = 0; i < n % l; ++i) ++sizes[i];
    return sizes;
}

Hypergraph turan_graph(int n, int l, int r) {
    if (r < 2) throw std::invalid_argument("uniformity r must be >= 2");
    if (l < r) throw std::invalid_argument("Turan graph needs l >= r");
    std::vector<int> sizes = balanced_sizes(n, l);
    std::vector<int> start(l, 0);
    for (int i = 1; i < l; ++i) start[i] = start[i - 1] + sizes[i - 1];

    std::vector<std::vector<int>> edges;
    // one vertex from each of r distinct parts
    for_each_subset(l, r, [&](const std::vector<int>& parts) {
        std::vector<int> pick(r, 0);
        while (true) {
            std::vector<int> e(r);
            bool ok = true;
            for (int i = 0; i < r; ++i) {
                if (pick[i] >= sizes[parts[i]]) { ok = false; break; }
                e[i] = start[parts[i]] + pick[i];
            }
            if (ok) edges.push_back(e);
            int i = r - 1;
            while (i >= 0) {
                if (++pick[i] < std::max(sizes[parts[i]], 1)) break;
                pick[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
    });
    return build(n, r, edges);
}

Hypergraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return build(n, 2, edges);
}

Hypergraph c5_blowup(int n) {
    if (n < 5) throw std::invalid_argument("balanced C5 blow-up needs n >= 5");
    return blow_up({cycle_graph(5), balanced_sizes(n, 5)});
}

Hypergraph generate(const GeneratorSpec& spec) {
    switch (spec.kind) {
        case GeneratorSpec::Kind::Complete: return complete_graph(spec.n, spec.r);
        case GeneratorSpec::Kind::Turan: return turan_graph(spec.n, spec.l, spec.r);
        case GeneratorSpec::Kind::Cycle: return cycle_graph(spec.n);
        case GeneratorSpec::Kind::C5Blowup: return c5_blowup(spec.n);
    }
    throw std::invalid_argument("unknown generator");
}

Hypergraph induced(const Hypergraph& h, std::span<const int> keep) {
    std::vector<int> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> newindex(h.n, -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= h.n)
            throw std::invalid_argument("induced subset vertex out of range");
        newindex[sorted[i]] = static_cast<int>(i);
    }
    Hypergraph out;
    out.n = static_cast<int>(sorted.size());
    out.r = h.r;
    for (const auto& e : h.edges) {
        std::vector<int> mapped;
        mapped.reserve(e.size());
        bool inside = true;
        for (int v : e) {
            if (newindex[v] < 0) { inside = false; break; }
            mapped.push_back(newindex[v]);
        }
        if (inside) out.edges.push_back(std::move(mapped));  // order preserved
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

Hypergraph delete_vertex(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.n) throw std::invalid_argument("delete_vertex out of range");
    std::vector<int> keep;
    keep.reserve(h.n - 1);
    for (int u = 0; u < h.n; ++u)
        if (u != v) keep.push_back(u);
    return induced(h, keep);
}

Hypergraph blow_up(const BlowupSpec& spec) {
    if (static_cast<int>(spec.sizes.size()) != spec.base.n)
        throw std::invalid_argument("blow-up needs one size per base vertex");
    for (int k : spec.sizes)
        if (k < 1) throw std::invalid_argument("blow-up sizes must be >= 1");

    std::vector<int> start(spec.base.n, 0);
    int total = 0;
    for (int i = 0; i < spec.base.n; ++i) {
        start[i] = total;
        total += spec.sizes[i];
    }

    Hypergraph out;
    out.n = total;
    out.r = spec.base.r;
    for (const auto& e : spec.base.edges) {
        const int r = static_cast<int>(e.size());
        std::vector<int> pick(r, 0);
        while (true) {
            std::vector<int> edge(r);
            for (int i = 0; i < r; ++i) edge[i] = start[e[i]] + pick[i];
            std::sort(edge.begin(), edge.end());
            out.edges.push_back(std::move(edge));
            int i = r - 1;
            while (i >= 0) {
                if (++pick[i] < spec.sizes[e[i]]) break;
                pick[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

Hypergraph shadow2(const Hypergraph& h) {
    std::vector<std::vector<int>> pairs;
    for (const auto& e : h.edges)
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) pairs.push_back({e[i], e[j]});
    return build(h.n, 2, pairs);
}

Hypergraph expansion(const Hypergraph& g, int s) {
    if (g.r != 2) throw std::invalid_argument("expansion takes a 2-graph");
    if (s < 2) throw std::invalid_argument("expansion needs s >= 2");
    Hypergraph out;
    out.n = g.n + (s - 2) * static_cast<int>(g.edges.size());
    out.r = s;
    int fresh = g.n;
    for (const auto& e : g.edges) {
        std::vector<int> edge(e);
        for (int k = 0; k < s - 2; ++k) edge.push_back(fresh++);
        std::sort(edge.begin(), edge.end());
        out.edges.push_back(std::move(edge));
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::string to_hgr(const Hypergraph& h) {
    std::ostringstream os;
    os << h.n << ' ' << h.r << '\n';
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << '\n';
    }
    return os.str();
}

Hypergraph from_hgr(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1, r = -1;
    std::vector<std::vector<int>> edges;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> nums;
        long long v;
        while (ls >> v) nums.push_back(v);
        if (nums.empty()) continue;
        if (n < 0) {
            if (nums.size() != 2) throw std::invalid_argument("HGR header must be 'n r'");
            n = static_cast<int>(nums[0]);
            r = static_cast<int>(nums[1]);
            continue;
        }
        std::vector<int> e(nums.begin(), nums.end());
        edges.push_back(std::move(e));
    }
    if (n < 0) throw std::invalid_argument("empty HGR input");
    return build(n, r, edges);
}

Hypergraph read_hgr_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_hgr(ss.str());
}

void write_hgr_file(const Hypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_hgr(h);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        long long den = 1;
        for (std::size_t i = 0; i < text.size() - dot - 1; ++i) den *= 10;
        return Rational(std::stoll(digits), den);
    }
    return Rational(std::stoll(text), 1);
}

}  // namespace specturan
