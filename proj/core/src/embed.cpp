#include "specturan/embed.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace specturan {

namespace {

// Vertex order for the backtracking search: greedily prefer vertices with the
// most already-placed co-edge partners (ties by degree). Isolated vertices
// end up last, where the remaining count is a falling factorial.
struct EmbedPlan {
    std::vector<int> order;                            // position -> Q vertex
    std::vector<std::vector<std::vector<int>>> check;  // per position: edges
                                                       // (as position lists)
                                                       // completed there
    int first_tail = 0;  // first position from which no checks remain
};

EmbedPlan make_plan(const Hypergraph& q) {
    const int nq = q.n;
    std::vector<int> degree(nq, 0);
    for (const auto& e : q.edges)
        for (int v : e) ++degree[v];

    std::vector<char> placed(nq, 0);
    std::vector<int> order;
    order.reserve(nq);
    for (int step = 0; step < nq; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < nq; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (const auto& e : q.edges) {
                if (std::find(e.begin(), e.end(), v) == e.end()) continue;
                for (int u : e)
                    if (u != v && placed[u]) ++links;
            }
            if (links > best_links || (links == best_links && degree[v] > best_deg)) {
                best = v;
                best_links = links;
                best_deg = degree[v];
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }

    std::vector<int> pos_of(nq, -1);
    for (int i = 0; i < nq; ++i) pos_of[order[i]] = i;

    EmbedPlan plan;
    plan.order = order;
    plan.check.assign(nq, {});
    for (const auto& e : q.edges) {
        int last = 0;
        std::vector<int> positions;
        positions.reserve(e.size());
        for (int v : e) {
            positions.push_back(pos_of[v]);
            last = std::max(last, pos_of[v]);
        }
        plan.check[last].push_back(std::move(positions));
    }
    plan.first_tail = nq;
    while (plan.first_tail > 0 && plan.check[plan.first_tail - 1].empty()) --plan.first_tail;
    return plan;
}

struct EmbedSearch {
    const Hypergraph& h;
    const EmbedPlan& plan;
    std::vector<int> image;  // position -> H vertex
    std::vector<char> used;
    std::vector<int> scratch;
    count_t total = 0;
    bool exist_only = false;
    bool done = false;

    EmbedSearch(const Hypergraph& h_, const EmbedPlan& plan_)
        : h(h_), plan(plan_), image(plan_.order.size(), -1), used(h_.n, 0) {}

    bool edges_ok(int pos) {
        for (const auto& positions : plan.check[pos]) {
            scratch.clear();
            for (int p : positions) scratch.push_back(image[p]);
            std::sort(scratch.begin(), scratch.end());
            if (!h.has_edge(scratch)) return false;
        }
        return true;
    }

    void run(int pos) {
        const int nq = static_cast<int>(plan.order.size());
        if (pos >= plan.first_tail) {
            if (pos == nq) {
                total = checked_add(total, 1);
            } else {
                int avail = 0;
                for (char u : used) avail += (u == 0);
                total = checked_add(total, falling_factorial(avail, nq - pos));
            }
            if (exist_only && total > 0) done = true;
            return;
        }
        for (int v = 0; v < h.n && !done; ++v) {
            if (used[v]) continue;
            image[pos] = v;
            used[v] = 1;
            if (edges_ok(pos)) run(pos + 1);
            used[v] = 0;
            image[pos] = -1;
        }
    }
};

count_t embeddings_impl(const Hypergraph& q, const Hypergraph& h, bool exist_only) {
    if (q.r != h.r) throw std::invalid_argument("uniformity mismatch");
    if (q.n > h.n) return 0;
    EmbedPlan plan = make_plan(q);
    EmbedSearch search(h, plan);
    search.exist_only = exist_only;
    search.run(0);
    return search.total;
}

}  // namespace

count_t count_embeddings(const Hypergraph& q, const Hypergraph& h) {
    return embeddings_impl(q, h, false);
}

bool has_embedding(const Hypergraph& q, const Hypergraph& h) {
    return embeddings_impl(q, h, true) != 0;
}

count_t aut_order(const Hypergraph& q) { return count_embeddings(q, q); }

count_t count_copies(const Hypergraph& q, const Hypergraph& h) {
    count_t em = count_embeddings(q, h);
    count_t aut = aut_order(q);
    if (em % aut != 0) throw std::logic_error("embedding count not divisible by |Aut(Q)|");
    return em / aut;
}

count_t spanning_copies(const Hypergraph& q, const Hypergraph& h, std::span<const int> subset) {
    if (static_cast<int>(subset.size()) != q.n)
        throw std::invalid_argument("spanning_copies needs |I| = v(Q)");
    return count_copies(q, induced(h, subset));
}

count_t q_degree(const Hypergraph& q, const Hypergraph& h, int v) {
    if (v < 0 || v >= h.n) throw std::invalid_argument("q_degree vertex out of range");
    WeightedSGraph d = derive_weighted(q, h);
    count_t total = 0;
    for (const auto& [key, w] : d.edges)
        if (std::binary_search(key.begin(), key.end(), v)) total = checked_add(total, w);
    return total;
}

count_t min_q_degree(const Hypergraph& q, const Hypergraph& h) {
    WeightedSGraph d = derive_weighted(q, h);
    std::vector<count_t> deg(h.n, 0);
    for (const auto& [key, w] : d.edges)
        for (int v : key) deg[v] = checked_add(deg[v], w);
    count_t best = deg.empty() ? 0 : deg[0];
    for (count_t d0 : deg) best = std::min(best, d0);
    return best;
}

FamilySpec make_family(std::vector<Hypergraph> members) {
    if (members.empty()) throw std::invalid_argument("family must be non-empty");
    int r = members.front().r;
    for (const auto& m : members) {
        if (m.r != r) throw std::invalid_argument("family uniformities disagree");
        if (m.edges.empty()) throw std::invalid_argument("family member with no edges");
        std::vector<char> covered(m.n, 0);
        for (const auto& e : m.edges)
            for (int v : e) covered[v] = 1;
        for (char c : covered)
            if (!c) throw std::invalid_argument("family member with isolated vertex");
    }
    return FamilySpec{std::move(members)};
}

bool is_free(const Hypergraph& h, const FamilySpec& family) {
    for (const auto& f : family.members) {
        if (f.r != h.r) throw std::invalid_argument("uniformity mismatch");
        if (has_embedding(f, h)) return false;
    }
    return true;
}

bool is_colorable(const Hypergraph& h, const Hypergraph& target) {
    if (h.r != target.r) throw std::invalid_argument("uniformity mismatch");
    if (h.n > 0 && target.n == 0) return false;
    if (h.edges.empty()) return true;
    if (target.edges.empty()) return false;
    EmbedPlan plan = make_plan(h);

    std::vector<int> image(h.n, -1);
    std::vector<int> mapped;
    auto edges_ok = [&](int pos) {
        for (const auto& positions : plan.check[pos]) {
            mapped.clear();
            for (int p : positions) mapped.push_back(image[p]);
            std::sort(mapped.begin(), mapped.end());
            mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
            if (static_cast<int>(mapped.size()) != h.r) return false;  // collapsed edge
            if (!target.has_edge(mapped)) return false;
        }
        return true;
    };

    // non-injective backtracking over target vertices
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == h.n) return true;
        for (int v = 0; v < target.n; ++v) {
            image[pos] = v;
            if (edges_ok(pos) && rec(pos + 1)) return true;
        }
        image[pos] = -1;
        return false;
    };
    return rec(0);
}

count_t WeightedSGraph::total_weight() const {
    count_t total = 0;
    for (const auto& [key, w] : edges) total = checked_add(total, w);
    return total;
}

WeightedSGraph derive_weighted(const Hypergraph& q, const Hypergraph& h) {
    if (q.n > h.n) throw std::invalid_argument("derive_weighted needs v(Q) <= v(H)");
    WeightedSGraph out;
    out.n = h.n;
    out.s = q.n;
    const int s = q.n;
    if (s == 0) return out;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        count_t w = spanning_copies(q, h, idx);
        if (w > 0) out.edges.emplace_back(idx, w);
        int i = s - 1;
        while (i >= 0 && idx[i] == h.n - s + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;  // keys generated in lexicographic order
}

WeightedSGraph unit_weighted(const Hypergraph& h) {
    WeightedSGraph out;
    out.n = h.n;
    out.s = h.r;
    out.edges.reserve(h.edges.size());
    for (const auto& e : h.edges) out.edges.emplace_back(e, 1);
    return out;
}

Hypergraph support_graph(const WeightedSGraph& w) {
    std::vector<std::vector<int>> edges;
    edges.reserve(w.edges.size());
    for (const auto& [key, weight] : w.edges) edges.push_back(key);
    return build(w.n, w.s, edges);
}

std::string to_wsg(const WeightedSGraph& w) {
    std::ostringstream os;
    os << w.n << ' ' << w.s << " weighted\n";
    for (const auto& [key, weight] : w.edges) {
        for (int v : key) os << v << ' ';
        os << weight << '\n';
    }
    return os.str();
}

WeightedSGraph from_wsg(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    WeightedSGraph w;
    bool header = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!header) {
            std::string tag;
            if (!(ls >> w.n >> w.s >> tag)) continue;
            if (tag != "weighted") throw std::invalid_argument("expected 'n s weighted' header");
            if (w.s < 2 || w.n < 0) throw std::invalid_argument("bad weighted header");
            header = true;
            continue;
        }
        std::vector<long long> nums;
        long long v;
        while (ls >> v) nums.push_back(v);
        if (nums.empty()) continue;
        if (static_cast<int>(nums.size()) != w.s + 1)
            throw std::invalid_argument("weighted edge line needs s vertices and a weight");
        std::vector<int> key(nums.begin(), nums.end() - 1);
        std::sort(key.begin(), key.end());
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (key[i] < 0 || key[i] >= w.n)
                throw std::invalid_argument("weighted edge vertex out of range");
            if (i > 0 && key[i] == key[i - 1])
                throw std::invalid_argument("weighted edge with repeated vertex");
        }
        if (nums.back() < 1) throw std::invalid_argument("weights must be >= 1");
        w.edges.emplace_back(std::move(key), static_cast<count_t>(nums.back()));
    }
    if (!header) throw std::invalid_argument("empty weighted input");
    std::sort(w.edges.begin(), w.edges.end());
    for (std::size_t i = 1; i < w.edges.size(); ++i)
        if (w.edges[i].first == w.edges[i - 1].first)
            throw std::invalid_argument("duplicate weighted edge");
    return w;
}

WeightedSGraph read_wsg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_wsg(ss.str());
}

void write_wsg_file(const WeightedSGraph& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_wsg(w);
}

}  // namespace specturan
