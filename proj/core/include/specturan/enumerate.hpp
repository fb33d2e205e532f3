#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specturan/embed.hpp"
#include "specturan/hypergraph.hpp"

namespace specturan {

/// Total-order key, constant on isomorphism classes and distinct across
/// classes of the same (n, r). Printable.
using CanonicalLabel = std::string;

struct CanonicalResult {
    CanonicalLabel label;
    std::vector<int> position_of;   // position_of[old vertex] = canonical position
    std::vector<int> last_orbit;    // vertices that occupy the last canonical
                                    // position in some minimal labeling (the
                                    // automorphism orbit of the canonical-last
                                    // vertex), sorted ascending
};

/// Invariant refinement followed by branch-and-bound over the remaining
/// orderings; the label is the relabeled canonical-sorted edge list.
CanonicalLabel canonical_form(const Hypergraph& h);
CanonicalResult canonical_form_full(const Hypergraph& h);

/// The graph relabeled into canonical positions.
Hypergraph canonical_copy(const Hypergraph& h);

/// Inverse of the label encoding: reconstructs the canonical representative.
Hypergraph graph_from_label(const CanonicalLabel& label);

/// Default per-uniformity ceiling for exhaustive enumeration, overridable by
/// SPECTURAN_CEILING in the environment.
int enumeration_ceiling(int r);

struct EnumerationOptions {
    std::function<bool(const Hypergraph&)> predicate;  // empty = accept all
    /// Authorizes pruning: the predicate is closed under induced subgraphs,
    /// so a failing graph cannot extend to a passing one.
    bool hereditary = false;
    /// 0 = use enumeration_ceiling(r).
    int ceiling_override = 0;
};

/// Resumable producer of pairwise non-isomorphic r-graphs of order n that
/// pass the predicate (isolated vertices permitted). Generation is orderly
/// (extend-by-vertex with a canonical-deletion orbit test) so no global
/// dedup table is kept; children of each parent are emitted in canonical
/// label order, making the sequence deterministic.
class EnumerationStream {
  public:
    EnumerationStream(int n, int r, EnumerationOptions opts = {});
    /// Resume a previous stream: reproduces exactly the records that would
    /// have followed the checkpointed one.
    EnumerationStream(int n, int r, EnumerationOptions opts, const std::string& checkpoint);
    ~EnumerationStream();
    EnumerationStream(EnumerationStream&&) noexcept;
    EnumerationStream& operator=(EnumerationStream&&) noexcept;

    std::optional<Hypergraph> next();

    /// Opaque printable token identifying the last record returned by
    /// next(); empty before the first record.
    std::string checkpoint() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Collects the whole stream.
std::vector<Hypergraph> enumerate_graphs(int n, int r, EnumerationOptions opts = {});

}  // namespace specturan
