#include "binpack/configs.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace binpack {

namespace {

struct ScaledSizes {
    long long scale = 1;
    std::vector<long long> weights;  // size_i * scale, ascending
};

ScaledSizes scale_sizes(const std::vector<Rat>& sizes) {
    if (sizes.empty()) fail(ErrorCode::invalid_argument, "empty size set");
    ScaledSizes s;
    for (const auto& size : sizes) {
        if (size <= Rat(0) || size > Rat(1))
            fail(ErrorCode::invalid_argument, "size out of (0, 1]: " + format_exact(size));
        s.scale = lcm_ll(s.scale, size.denominator());
        if (s.scale > 1000000) fail(ErrorCode::invalid_argument, "size grid finer than 1e6");
    }
    long long prev = 0;
    for (const auto& size : sizes) {
        long long w = size.numerator() * (s.scale / size.denominator());
        if (w <= prev)
            fail(ErrorCode::invalid_argument, "sizes must be strictly increasing and distinct");
        s.weights.push_back(w);
        prev = w;
    }
    return s;
}

long long min_accept_weight(const Rat& delta, long long scale) {
    if (delta < Rat(0) || delta >= Rat(1))
        fail(ErrorCode::invalid_argument, "delta must be in [0, 1)");
    Rat threshold = (Rat(1) - delta) * scale;
    return rat_ceil(threshold);
}

std::vector<long long> resolve_caps(const ScaledSizes& s, const std::vector<long long>& caps) {
    std::vector<long long> out(s.weights.size());
    for (size_t i = 0; i < s.weights.size(); ++i) {
        long long fit = s.scale / s.weights[i];  // floor(1/s_i)
        out[i] = caps.empty() ? fit : std::min(caps[i], fit);
        if (out[i] < 0) fail(ErrorCode::invalid_argument, "negative per-type cap");
    }
    return out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s < a ? UINT64_MAX : s;
}

}  // namespace

Rat BinConfiguration::fill(const std::vector<Rat>& sizes) const {
    Rat sum(0);
    for (size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 0) sum += sizes[i] * counts[i];
    return sum;
}

bool BinConfiguration::reduces(const std::vector<long long>& demand_counts) const {
    for (size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0 && demand_counts[i] > 0) return true;
    return false;
}

std::vector<long long> default_caps(const std::vector<Rat>& sizes) {
    ScaledSizes s = scale_sizes(sizes);
    return resolve_caps(s, {});
}

std::vector<long long> instance_caps(const Instance& inst) {
    std::vector<long long> caps;
    caps.reserve(inst.num_types());
    for (size_t i = 0; i < inst.num_types(); ++i) {
        long long fit = floor_div(Rat(1), inst.size(i));
        caps.push_back(std::min(fit, inst.types[i].count));
    }
    return caps;
}

ConfigSet enumerate_configs(const std::vector<Rat>& sizes, const Rat& delta,
                            const std::vector<long long>& caps, long long max_configs) {
    ScaledSizes s = scale_sizes(sizes);
    std::vector<long long> cap = resolve_caps(s, caps);
    long long accept = min_accept_weight(delta, s.scale);

    ConfigSet out;
    out.sizes = sizes;
    out.delta = delta;
    out.provenance = Provenance::exhaustive;

    std::vector<long long> current(sizes.size(), 0);
    auto recurse = [&](auto&& self, size_t type, long long weight) -> void {
        if (type == sizes.size()) {
            if (weight >= accept) {
                if (static_cast<long long>(out.configs.size()) >= max_configs)
                    fail(ErrorCode::guard_exceeded, "configuration enumeration limit exceeded");
                out.configs.push_back(BinConfiguration{current});
            }
            return;
        }
        for (long long m = 0; m <= cap[type]; ++m) {
            long long w = weight + m * s.weights[type];
            if (w > s.scale) break;
            current[type] = m;
            self(self, type + 1, w);
        }
        current[type] = 0;
    };
    recurse(recurse, 0, 0);
    return out;
}

KnapsackGraph build_kpg(const std::vector<Rat>& sizes, const Rat& delta,
                        const std::vector<long long>& caps) {
    ScaledSizes s = scale_sizes(sizes);
    KnapsackGraph g;
    g.sizes_ = sizes;
    g.delta_ = delta;
    g.scale_ = s.scale;
    g.scaled_sizes_ = s.weights;
    g.caps_ = resolve_caps(s, caps);
    g.min_accept_ = min_accept_weight(delta, s.scale);

    g.layers_.resize(sizes.size() + 1);
    g.layers_[0].push_back(KpgNode{0, {}});
    for (size_t t = 0; t < sizes.size(); ++t) {
        // assign next-layer node indices in weight order for determinism
        std::map<long long, int> index_of;
        for (const auto& node : g.layers_[t]) {
            for (long long m = 0; m <= g.caps_[t]; ++m) {
                long long w = node.weight + m * s.weights[t];
                if (w > s.scale) break;
                index_of.emplace(w, 0);
            }
        }
        int next = 0;
        for (auto& [w, idx] : index_of) idx = next++;
        g.layers_[t + 1].resize(index_of.size());
        for (const auto& [w, idx] : index_of) g.layers_[t + 1][idx].weight = w;
        for (auto& node : g.layers_[t]) {
            for (long long m = 0; m <= g.caps_[t]; ++m) {
                long long w = node.weight + m * s.weights[t];
                if (w > s.scale) break;
                node.edges.push_back(KpgEdge{m, index_of.at(w)});
            }
        }
    }
    return g;
}

KnapsackGraph prune_useless(const KnapsackGraph& g) {
    KnapsackGraph out;
    out.sizes_ = g.sizes_;
    out.caps_ = g.caps_;
    out.delta_ = g.delta_;
    out.scale_ = g.scale_;
    out.scaled_sizes_ = g.scaled_sizes_;
    out.min_accept_ = g.min_accept_;
    out.pruned_ = true;
    if (g.layers_.empty()) return out;

    size_t k = g.layers_.size() - 1;
    std::vector<std::vector<char>> keep(g.layers_.size());
    for (size_t t = 0; t <= k; ++t) keep[t].assign(g.layers_[t].size(), 0);
    for (size_t i = 0; i < g.layers_[k].size(); ++i)
        keep[k][i] = g.layers_[k][i].weight >= g.min_accept_ ? 1 : 0;
    for (size_t t = k; t-- > 0;) {
        for (size_t i = 0; i < g.layers_[t].size(); ++i)
            for (const auto& e : g.layers_[t][i].edges)
                if (keep[t + 1][e.target]) {
                    keep[t][i] = 1;
                    break;
                }
    }
    if (keep[0].empty() || !keep[0][0]) return out;  // e_delta empty

    std::vector<std::vector<int>> remap(g.layers_.size());
    out.layers_.resize(g.layers_.size());
    for (size_t t = 0; t <= k; ++t) {
        remap[t].assign(g.layers_[t].size(), -1);
        for (size_t i = 0; i < g.layers_[t].size(); ++i) {
            if (!keep[t][i]) continue;
            remap[t][i] = static_cast<int>(out.layers_[t].size());
            out.layers_[t].push_back(KpgNode{g.layers_[t][i].weight, {}});
        }
    }
    for (size_t t = 0; t < k; ++t) {
        for (size_t i = 0; i < g.layers_[t].size(); ++i) {
            if (!keep[t][i]) continue;
            auto& node = out.layers_[t][remap[t][i]];
            for (const auto& e : g.layers_[t][i].edges)
                if (keep[t + 1][e.target])
                    node.edges.push_back(KpgEdge{e.multiplicity, remap[t + 1][e.target]});
        }
    }
    return out;
}

std::uint64_t KnapsackGraph::path_count() const {
    if (empty()) return 0;
    size_t k = layers_.size() - 1;
    std::vector<std::uint64_t> next(layers_[k].size());
    for (size_t i = 0; i < layers_[k].size(); ++i)
        next[i] = layers_[k][i].weight >= min_accept_ ? 1 : 0;
    for (size_t t = k; t-- > 0;) {
        std::vector<std::uint64_t> cur(layers_[t].size(), 0);
        for (size_t i = 0; i < layers_[t].size(); ++i)
            for (const auto& e : layers_[t][i].edges) cur[i] = sat_add(cur[i], next[e.target]);
        next = std::move(cur);
    }
    return next[0];
}

size_t KnapsackGraph::node_count() const {
    size_t n = 0;
    for (const auto& layer : layers_) n += layer.size();
    return n;
}

bool delta_feasible(const std::vector<Rat>& sizes, const Rat& delta,
                    const std::vector<long long>& caps) {
    if (sizes.empty()) return true;
    KnapsackGraph g = prune_useless(build_kpg(sizes, delta, caps));
    if (g.empty()) return false;
    // type t coverable <=> some surviving layer-t edge carries multiplicity >= 1
    for (size_t t = 0; t < sizes.size(); ++t) {
        bool covered = false;
        for (const auto& node : g.layer(t)) {
            for (const auto& e : node.edges)
                if (e.multiplicity >= 1) {
                    covered = true;
                    break;
                }
            if (covered) break;
        }
        if (!covered) return false;
    }
    return true;
}

std::optional<Rat> try_min_delta(const std::vector<Rat>& sizes, const Rat& eps,
                                 const std::vector<long long>& caps) {
    if (eps <= Rat(0) || eps >= Rat(1, 2))
        fail(ErrorCode::invalid_argument, "eps must be in (0, 1/2)");
    Rat half(1, 2);
    Rat delta = eps;
    Rat last(0);
    while (delta <= half) {
        if (delta_feasible(sizes, delta, caps)) return delta;
        last = delta;
        delta += eps;
    }
    if (last < half && delta_feasible(sizes, half, caps)) return half;
    return std::nullopt;
}

Rat min_delta(const std::vector<Rat>& sizes, const Rat& eps) {
    auto d = try_min_delta(sizes, eps, {});
    if (!d) fail(ErrorCode::internal, "no feasible delta at 1/2 under default caps");
    return *d;
}

ConfigSet sample_configs(const KnapsackGraph& g, long long count, RngStream& rng,
                         bool weight_by_paths) {
    if (count < 1) fail(ErrorCode::invalid_argument, "sample count must be >= 1");
    if (!g.pruned()) fail(ErrorCode::invalid_argument, "sample_configs needs a pruned graph");
    if (g.empty())
        fail(ErrorCode::infeasible, "no configurations at delta = " + format_exact(g.delta()));

    size_t k = g.num_layers() - 1;
    // per-node accepting-path counts, for the configuration-uniform walk
    std::vector<std::vector<std::uint64_t>> paths;
    if (weight_by_paths) {
        paths.resize(k + 1);
        paths[k].assign(g.layer(k).size(), 1);  // pruned: every sink accepts
        for (size_t t = k; t-- > 0;) {
            paths[t].assign(g.layer(t).size(), 0);
            for (size_t i = 0; i < g.layer(t).size(); ++i)
                for (const auto& e : g.layer(t)[i].edges)
                    paths[t][i] = sat_add(paths[t][i], paths[t + 1][e.target]);
        }
    }

    ConfigSet out;
    out.sizes = g.sizes();
    out.delta = g.delta();
    out.provenance = Provenance::sampled;
    out.requested = count;
    out.seed = rng.seed();

    std::set<std::vector<long long>> seen;
    for (long long walk = 0; walk < count; ++walk) {
        std::vector<long long> counts(k, 0);
        int node = 0;
        for (size_t t = 0; t < k; ++t) {
            const auto& edges = g.layer(t)[node].edges;
            size_t pick = 0;
            if (!weight_by_paths || paths[t][node] == UINT64_MAX) {
                pick = static_cast<size_t>(rng.next_below(edges.size()));
            } else {
                std::uint64_t r = rng.next_below(paths[t][node]);
                std::uint64_t acc = 0;
                for (size_t j = 0; j < edges.size(); ++j) {
                    acc += paths[t + 1][edges[j].target];
                    if (r < acc) {
                        pick = j;
                        break;
                    }
                }
            }
            counts[t] = edges[pick].multiplicity;
            node = edges[pick].target;
        }
        if (seen.insert(counts).second) out.configs.push_back(BinConfiguration{counts});
    }
    return out;
}

std::vector<BinConfiguration> enumerate_paths(const KnapsackGraph& g) {
    std::vector<BinConfiguration> out;
    if (g.empty()) return out;
    size_t k = g.num_layers() - 1;
    std::vector<long long> counts(k, 0);
    auto dfs = [&](auto&& self, size_t t, int node) -> void {
        if (t == k) {
            if (g.layer(k)[node].weight >= g.min_accept_weight())
                out.push_back(BinConfiguration{counts});
            return;
        }
        for (const auto& e : g.layer(t)[node].edges) {
            counts[t] = e.multiplicity;
            self(self, t + 1, e.target);
        }
        counts[t] = 0;
    };
    dfs(dfs, 0, 0);
    return out;
}

}  // namespace binpack
