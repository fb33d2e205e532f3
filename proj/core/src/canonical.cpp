#include <algorithm>
#include <map>
#include <set>

#include "specturan/enumerate.hpp"

namespace specturan {

namespace {

constexpr int kMaxCanonicalOrder = 61;

char vertex_char(int v) {
    if (v < 10) return static_cast<char>('0' + v);
    if (v < 36) return static_cast<char>('A' + (v - 10));
    return static_cast<char>('a' + (v - 36));
}

int vertex_index(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
    if (c >= 'a' && c <= 'z') return c - 'a' + 36;
    throw std::invalid_argument("bad vertex character in label");
}

// Iterated equitable-ish refinement. Vertex key: (current color, sorted
// multiset over incident edges of the sorted color lists of the co-members).
// New colors are ranks of the sorted distinct keys, so they are canonical.
void refine_colors(const Hypergraph& h, const std::vector<std::vector<int>>& incident,
                   std::vector<int>& colors) {
    const int n = h.n;
    int distinct = 0;
    {
        std::set<int> seen(colors.begin(), colors.end());
        distinct = static_cast<int>(seen.size());
    }
    while (distinct < n) {
        std::vector<std::vector<int>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::vector<int>> sigs;
            sigs.reserve(incident[v].size());
            for (int e : incident[v]) {
                std::vector<int> sig;
                sig.reserve(h.edges[e].size() - 1);
                for (int u : h.edges[e])
                    if (u != v) sig.push_back(colors[u]);
                std::sort(sig.begin(), sig.end());
                sigs.push_back(std::move(sig));
            }
            std::sort(sigs.begin(), sigs.end());
            std::vector<int> key{colors[v]};
            for (const auto& sig : sigs) {
                key.push_back(-1);
                key.insert(key.end(), sig.begin(), sig.end());
            }
            keys[v] = std::move(key);
        }
        std::map<std::vector<int>, int> rank;
        for (int v = 0; v < n; ++v) rank.emplace(keys[v], 0);
        int next = 0;
        for (auto& [key, id] : rank) id = next++;
        for (int v = 0; v < n; ++v) colors[v] = rank[keys[v]];
        if (next == distinct) break;
        distinct = next;
    }
}

struct CanonSearch {
    const Hypergraph& h;
    std::vector<std::vector<int>> incident;  // vertex -> edge ids
    std::vector<int> twin_root;              // union-find roots of the twin partition

    std::vector<int> pos_of;   // vertex -> canonical position or -1
    std::vector<int> vert_at;  // position -> vertex
    std::vector<unsigned char> enc;
    std::vector<unsigned char> best_enc;
    std::vector<int> best_vert_at;
    bool best_valid = false;
    unsigned long epoch = 0;
    std::set<int> last_set;  // vertices seen at the final canonical position

    enum Cmp { EQ, LT };
    Cmp cmp = LT;  // LT also covers "no best yet"

    explicit CanonSearch(const Hypergraph& h_) : h(h_) {
        incident.assign(h.n, {});
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            for (int v : h.edges[e]) incident[v].push_back(static_cast<int>(e));
        pos_of.assign(h.n, -1);
        vert_at.assign(h.n, -1);
        compute_twins();
    }

    int find_root(int v) {
        while (twin_root[v] != v) {
            twin_root[v] = twin_root[twin_root[v]];
            v = twin_root[v];
        }
        return v;
    }

    // u,v are twins when swapping them maps the edge set onto itself; the
    // transposition is then an automorphism.
    void compute_twins() {
        twin_root.resize(h.n);
        for (int v = 0; v < h.n; ++v) twin_root[v] = v;
        for (int u = 0; u < h.n; ++u) {
            for (int v = u + 1; v < h.n; ++v) {
                if (find_root(u) == find_root(v)) continue;
                std::vector<std::vector<int>> swapped;
                swapped.reserve(h.edges.size());
                for (const auto& e : h.edges) {
                    std::vector<int> f(e);
                    for (int& x : f) {
                        if (x == u) x = v;
                        else if (x == v) x = u;
                    }
                    std::sort(f.begin(), f.end());
                    swapped.push_back(std::move(f));
                }
                std::sort(swapped.begin(), swapped.end());
                if (swapped == h.edges) twin_root[find_root(v)] = find_root(u);
            }
        }
    }

    // Appends the block of edges completed by placing `v`; returns false
    // when the branch is now strictly worse than the incumbent.
    bool append_block(int v, Cmp& state) {
        std::vector<std::vector<int>> block;
        for (int e : incident[v]) {
            std::vector<int> positions;
            positions.reserve(h.edges[e].size());
            bool complete = true;
            for (int u : h.edges[e]) {
                if (pos_of[u] < 0) { complete = false; break; }
                positions.push_back(pos_of[u]);
            }
            if (!complete) continue;
            std::sort(positions.begin(), positions.end());
            block.push_back(std::move(positions));
        }
        std::sort(block.begin(), block.end());

        std::size_t mark = enc.size();
        enc.push_back(static_cast<unsigned char>(block.size() & 0xff));
        enc.push_back(static_cast<unsigned char>((block.size() >> 8) & 0xff));
        for (const auto& e : block)
            for (int p : e) enc.push_back(static_cast<unsigned char>(p));

        if (!best_valid || state == LT) return true;
        for (std::size_t i = mark; i < enc.size(); ++i) {
            if (enc[i] < best_enc[i]) { state = LT; return true; }
            if (enc[i] > best_enc[i]) return false;
        }
        return true;  // still EQ
    }

    void dfs(int depth, const std::vector<int>& colors) {
        const int n = h.n;
        if (depth == n) {
            if (!best_valid || cmp == LT) {
                best_enc = enc;
                best_vert_at = vert_at;
                best_valid = true;
                ++epoch;
                last_set.clear();
            }
            last_set.insert(vert_at[n - 1]);
            return;
        }

        int cell_color = -1;
        for (int v = 0; v < n; ++v) {
            if (pos_of[v] >= 0) continue;
            if (cell_color < 0 || colors[v] < cell_color) cell_color = colors[v];
        }

        std::set<int> tried_roots;
        for (int v = 0; v < n; ++v) {
            if (pos_of[v] >= 0 || colors[v] != cell_color) continue;
            int root = find_root(v);
            if (!tried_roots.insert(root).second) continue;

            pos_of[v] = depth;
            vert_at[depth] = v;
            std::size_t enc_mark = enc.size();
            Cmp cmp_mark = cmp;
            unsigned long epoch_mark = epoch;

            if (append_block(v, cmp)) {
                if (depth + 1 == n) {
                    dfs(depth + 1, colors);
                } else {
                    std::vector<int> next_colors(colors);
                    next_colors[v] = n + depth;  // individualize
                    refine_colors(h, incident, next_colors);
                    dfs(depth + 1, next_colors);
                }
            }

            enc.resize(enc_mark);
            cmp = (epoch != epoch_mark) ? EQ : cmp_mark;
            pos_of[v] = -1;
            vert_at[depth] = -1;
        }
    }
};

}  // namespace

CanonicalResult canonical_form_full(const Hypergraph& h) {
    if (h.n > kMaxCanonicalOrder)
        throw std::invalid_argument("canonical_form supports at most 61 vertices");

    CanonicalResult out;
    if (h.n == 0) {
        out.label = "0." + std::to_string(h.r) + ":";
        return out;
    }

    CanonSearch search(h);
    std::vector<int> colors(h.n, 0);
    for (const auto& e : h.edges)
        for (int v : e) ++colors[v];  // seed with degrees
    refine_colors(h, search.incident, colors);
    search.dfs(0, colors);

    out.position_of.assign(h.n, -1);
    for (int p = 0; p < h.n; ++p) out.position_of[search.best_vert_at[p]] = p;

    // close the collected last-position vertices under the twin partition
    std::set<int> orbit;
    for (int v : search.last_set) {
        int root = search.find_root(v);
        for (int u = 0; u < h.n; ++u)
            if (search.find_root(u) == root) orbit.insert(u);
    }
    out.last_orbit.assign(orbit.begin(), orbit.end());

    // label: relabeled edge list in plain lexicographic order
    std::vector<std::vector<int>> edges;
    edges.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(out.position_of[v]);
        std::sort(mapped.begin(), mapped.end());
        edges.push_back(std::move(mapped));
    }
    std::sort(edges.begin(), edges.end());

    std::string label = std::to_string(h.n) + "." + std::to_string(h.r) + ":";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) label.push_back(';');
        for (int p : edges[i]) label.push_back(vertex_char(p));
    }
    out.label = std::move(label);
    return out;
}

CanonicalLabel canonical_form(const Hypergraph& h) { return canonical_form_full(h).label; }

Hypergraph canonical_copy(const Hypergraph& h) {
    CanonicalResult res = canonical_form_full(h);
    std::vector<std::vector<int>> edges;
    edges.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(res.position_of[v]);
        edges.push_back(std::move(mapped));
    }
    return build(h.n, h.r, edges);
}

Hypergraph graph_from_label(const CanonicalLabel& label) {
    auto dot = label.find('.');
    auto colon = label.find(':');
    if (dot == std::string::npos || colon == std::string::npos || dot > colon)
        throw std::invalid_argument("malformed canonical label");
    int n = std::stoi(label.substr(0, dot));
    int r = std::stoi(label.substr(dot + 1, colon - dot - 1));
    std::vector<std::vector<int>> edges;
    std::vector<int> edge;
    for (std::size_t i = colon + 1; i < label.size(); ++i) {
        if (label[i] == ';') continue;
        edge.push_back(vertex_index(label[i]));
        if (static_cast<int>(edge.size()) == r) {
            edges.push_back(edge);
            edge.clear();
        }
    }
    if (!edge.empty()) throw std::invalid_argument("truncated canonical label");
    return build(n, r, edges);
}

}  // namespace specturan
