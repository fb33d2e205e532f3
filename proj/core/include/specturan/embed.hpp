#pragma once

#include <span>
#include <string>
#include <vector>

#include "specturan/hypergraph.hpp"

namespace specturan {

/// Number of injective homomorphisms V(Q) -> V(H); edge images must be edges
/// of H. Isolated vertices of Q map to any unused vertex of H.
count_t count_embeddings(const Hypergraph& q, const Hypergraph& h);

/// True iff at least one embedding exists (early exit).
bool has_embedding(const Hypergraph& q, const Hypergraph& h);

/// |Aut(Q)| = count_embeddings(Q, Q): an injective self-homomorphism of a
/// finite graph maps the edge set onto itself.
count_t aut_order(const Hypergraph& q);

/// N(Q,H): copies of Q in H as (not necessarily induced) subgraphs,
/// embeddings / |Aut(Q)|. The division is always exact.
count_t count_copies(const Hypergraph& q, const Hypergraph& h);

/// N(Q, H[I]) for |I| = v(Q): copies spanning the whole of I.
count_t spanning_copies(const Hypergraph& q, const Hypergraph& h, std::span<const int> subset);

/// d_{Q,H}(v): copies of Q in H that contain v.
count_t q_degree(const Hypergraph& q, const Hypergraph& h, int v);
count_t min_q_degree(const Hypergraph& q, const Hypergraph& h);

/// A forbidden family: members share the uniformity, have at least one edge
/// and no isolated vertices.
struct FamilySpec {
    std::vector<Hypergraph> members;

    int uniformity() const { return members.empty() ? 2 : members.front().r; }
};

FamilySpec make_family(std::vector<Hypergraph> members);

bool is_free(const Hypergraph& h, const FamilySpec& family);

/// True iff a (not necessarily injective) homomorphism V(H) -> V(target) exists.
bool is_colorable(const Hypergraph& h, const Hypergraph& target);

/// The derived s-graph D(Q,H): keys are the s-subsets spanning at least one
/// copy of Q, weights are the spanning-copy counts, keys sorted
/// lexicographically.
struct WeightedSGraph {
    int n = 0;
    int s = 2;
    std::vector<std::pair<std::vector<int>, count_t>> edges;

    count_t total_weight() const;

    friend bool operator==(const WeightedSGraph&, const WeightedSGraph&) = default;
};

WeightedSGraph derive_weighted(const Hypergraph& q, const Hypergraph& h);

/// Views a plain s-graph as a weighted one with unit weights.
WeightedSGraph unit_weighted(const Hypergraph& h);

/// Forgets the weights.
Hypergraph support_graph(const WeightedSGraph& w);

// --- weighted s-graph text format ---------------------------------------
// line 1: "n s weighted"; then one line per edge: s vertex indices followed
// by the integer weight. '#' comments and blank lines allowed on input.

std::string to_wsg(const WeightedSGraph& w);
WeightedSGraph from_wsg(const std::string& text);
WeightedSGraph read_wsg_file(const std::string& path);
void write_wsg_file(const WeightedSGraph& w, const std::string& path);

}  // namespace specturan
