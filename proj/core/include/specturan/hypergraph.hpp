#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "specturan/util.hpp"

namespace specturan {

/// An r-uniform hypergraph on vertices 0..n-1. Edges are stored canonically:
/// each edge sorted ascending, the edge list strictly increasing
/// lexicographically, no duplicates. All operations below preserve this, so
/// two equal values are structurally identical. Values are immutable in
/// practice: every transform returns a fresh graph.
struct Hypergraph {
    int n = 0;
    int r = 2;
    std::vector<std::vector<int>> edges;

    int order() const { return n; }
    count_t size() const { return edges.size(); }
    bool has_edge(std::span<const int> sorted_edge) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

/// Validates and canonicalizes raw input. Duplicate edges are silently
/// dropped; out-of-range vertices, repeated vertices inside an edge, wrong
/// arity and r < 2 are rejected with std::invalid_argument.
Hypergraph build(int n, int r, const std::vector<std::vector<int>>& edges);

Hypergraph complete_graph(int n, int r);

/// T_l^r(n): complete l-partite r-graph, part sizes differing by at most one,
/// larger parts at lower part indices. Requires l >= r >= 2.
Hypergraph turan_graph(int n, int l, int r);

/// C_n as a 2-graph, n >= 3.
Hypergraph cycle_graph(int n);

/// Balanced blow-up of C_5 on n >= 5 vertices; larger classes sit at lower
/// base indices and blocks are labeled contiguously.
Hypergraph c5_blowup(int n);

/// Part sizes for a balanced split of n into l parts, ceil sizes first.
std::vector<int> balanced_sizes(int n, int l);

struct GeneratorSpec {
    enum class Kind { Complete, Turan, Cycle, C5Blowup };
    Kind kind = Kind::Complete;
    int n = 0;
    int l = 0;  // Turan only
    int r = 2;
};

Hypergraph generate(const GeneratorSpec& spec);

/// Subgraph induced by `keep` (need not be sorted); vertices are relabeled
/// 0..|keep|-1 preserving the original relative order.
Hypergraph induced(const Hypergraph& h, std::span<const int> keep);

Hypergraph delete_vertex(const Hypergraph& h, int v);

struct BlowupSpec {
    Hypergraph base;
    std::vector<int> sizes;  // one positive size per base vertex
};

/// H(k_1,...,k_n): every vertex i becomes a contiguous block of sizes[i]
/// vertices, every base edge becomes all transversals of its blocks.
Hypergraph blow_up(const BlowupSpec& spec);

/// 2-shadow: pairs covered by at least one edge.
Hypergraph shadow2(const Hypergraph& h);

/// s-expansion of a 2-graph: each edge gains s-2 fresh vertices, distinct
/// edges get disjoint fresh sets.
Hypergraph expansion(const Hypergraph& g, int s);

// --- HGR text format ---------------------------------------------------
// line 1: "n r"; then one edge per line as r vertex indices; '#' starts a
// comment line; blank lines ignored. Writers emit canonical edge order.

std::string to_hgr(const Hypergraph& h);
Hypergraph from_hgr(const std::string& text);
Hypergraph read_hgr_file(const std::string& path);
void write_hgr_file(const Hypergraph& h, const std::string& path);

}  // namespace specturan
