#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "binpack/core.hpp"
#include "binpack/rng.hpp"

namespace binpack {

/// Per-type item counts for one unit bin.
struct BinConfiguration {
    std::vector<long long> counts;

    Rat fill(const std::vector<Rat>& sizes) const;
    Rat waste(const std::vector<Rat>& sizes) const { return Rat(1) - fill(sizes); }
    bool reduces(const std::vector<long long>& demand_counts) const;

    friend auto operator<=>(const BinConfiguration&, const BinConfiguration&) = default;
};

enum class Provenance { exhaustive, sampled };

/// An ordered set of distinct configurations, all members of e_delta for the
/// recorded delta, together with how the set was obtained.
struct ConfigSet {
    std::vector<Rat> sizes;  // ascending type sizes the counts refer to
    Rat delta;
    std::vector<BinConfiguration> configs;
    Provenance provenance = Provenance::exhaustive;
    long long requested = 0;    // walks requested when sampled
    std::uint64_t seed = 0;     // stream seed when sampled
};

/// floor(1/s_i) per type: the most copies of a type a unit bin can hold.
std::vector<long long> default_caps(const std::vector<Rat>& sizes);

/// min(n_i, floor(1/s_i)): never plan more copies than the instance owns.
std::vector<long long> instance_caps(const Instance& inst);

/// Exhaustive e_delta by direct recursion over per-type counts. Oracle for
/// small type counts; guarded against blow-up.
ConfigSet enumerate_configs(const std::vector<Rat>& sizes, const Rat& delta,
                            const std::vector<long long>& caps = {},
                            long long max_configs = 2000000);

/// True iff every type appears in some member of e_delta (then repetition of
/// such members covers any demand; a missing type can never be covered).
bool delta_feasible(const std::vector<Rat>& sizes, const Rat& delta,
                    const std::vector<long long>& caps = {});

/// Smallest delta in {eps, 2eps, ...} union {1/2}, capped at 1/2, that is
/// delta-feasible. Always exists under the default caps.
Rat min_delta(const std::vector<Rat>& sizes, const Rat& eps);

/// min_delta under caller-supplied caps; nullopt when even 1/2 fails (can
/// happen with tight per-instance caps).
std::optional<Rat> try_min_delta(const std::vector<Rat>& sizes, const Rat& eps,
                                 const std::vector<long long>& caps);

struct KpgEdge {
    long long multiplicity;
    int target;  // node index in the next layer
};

struct KpgNode {
    long long weight;  // fill scaled by the graph's scale
    std::vector<KpgEdge> edges;
};

/// Layered DAG over types: node (t, w) is a fill w reachable using types
/// 1..t; edges add m copies of type t+1. Source (0, 0); paths to layer k are
/// in one-to-one correspondence with configurations of fill <= 1, and after
/// pruning with the members of e_delta.
class KnapsackGraph {
public:
    const std::vector<Rat>& sizes() const { return sizes_; }
    const std::vector<long long>& caps() const { return caps_; }
    const Rat& delta() const { return delta_; }
    long long scale() const { return scale_; }
    long long min_accept_weight() const { return min_accept_; }
    size_t num_layers() const { return layers_.size(); }
    const std::vector<KpgNode>& layer(size_t t) const { return layers_[t]; }
    bool pruned() const { return pruned_; }
    bool empty() const { return layers_.empty() || layers_[0].empty(); }

    /// Number of source-to-layer-k paths ending at an accepting fill
    /// (saturating at UINT64_MAX).
    std::uint64_t path_count() const;

    size_t node_count() const;

    friend KnapsackGraph build_kpg(const std::vector<Rat>&, const Rat&,
                                   const std::vector<long long>&);
    friend KnapsackGraph prune_useless(const KnapsackGraph&);

private:
    std::vector<Rat> sizes_;
    std::vector<long long> caps_;
    Rat delta_;
    long long scale_ = 1;
    std::vector<long long> scaled_sizes_;
    long long min_accept_ = 0;
    std::vector<std::vector<KpgNode>> layers_;
    bool pruned_ = false;
};

KnapsackGraph build_kpg(const std::vector<Rat>& sizes, const Rat& delta,
                        const std::vector<long long>& caps = {});

/// Removes every node/edge not on a path from the source to an accepting
/// sink. Idempotent; an empty result signals that e_delta is empty.
KnapsackGraph prune_useless(const KnapsackGraph& g);

/// `count` random walks through the pruned graph, each yielding a member of
/// e_delta; duplicates removed. By default each step picks uniformly among
/// the surviving out-edges (biased toward path-sparse configurations); with
/// weight_by_paths the walk is uniform over configurations.
ConfigSet sample_configs(const KnapsackGraph& g, long long count, RngStream& rng,
                         bool weight_by_paths = false);

/// All accepting paths as configurations, in lexicographic count order.
std::vector<BinConfiguration> enumerate_paths(const KnapsackGraph& g);

}  // namespace binpack
