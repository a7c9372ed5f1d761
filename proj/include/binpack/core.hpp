#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "binpack/rational.hpp"

namespace binpack {

/// Fixed-point size grid: every size is an integer multiple of 1/unit.
struct SizeGrid {
    long long unit = 100;  // u >= 2
};

struct ItemType {
    long long size_num = 0;  // size = size_num / grid.unit, in (0, 1]
    long long count = 0;     // >= 1 for stored types
};

/// Aggregated multiset of item sizes. Types are sorted by strictly
/// increasing size; this canonical order indexes every per-type vector in
/// the library (distribution vectors, configurations, demands, packings).
/// Values are immutable by convention once built.
struct Instance {
    SizeGrid grid;
    std::vector<ItemType> types;
    std::map<std::string, std::string> meta;  // provenance: family, seed, opt, ...

    size_t num_types() const { return types.size(); }
    bool empty() const { return types.empty(); }
    long long num_items() const;
    Rat size(size_t i) const { return Rat(types[i].size_num, grid.unit); }
    std::vector<Rat> sizes() const;
    Rat total_size() const;
};

/// Validates, aggregates duplicates, drops zero counts, sorts by size.
/// Rejects sizes off the grid or outside (0, 1] and negative counts.
Instance build_instance(const std::vector<std::pair<Rat, long long>>& pairs, SizeGrid grid = {});

/// Ceils every size to the 1/k grid (the nearest multiple of 1/k that is
/// greater than or equal to the size); merges types that collide. The
/// result's grid is lcm(u, k). Requires k >= 2.
Instance round_sizes(const Instance& inst, long long k);

/// d(L): per-type total size n_i * s_i.
struct DistributionVector {
    std::vector<Rat> components;
    std::vector<Rat> sizes;
    Rat length;  // sum of components = total instance size
};

DistributionVector distribution_vector(const Instance& inst);

/// A c-length vector parallel to d(L): t_i = d_i * c / |d|.
struct Segment {
    Rat target_length;
    std::vector<Rat> components;
    std::vector<Rat> sizes;

    Rat length() const;
};

/// Requires 0 < c <= |d|.
Segment segment(const DistributionVector& d, const Rat& c);

/// Truncates each component down to the nearest integer multiple of s_i.
Segment truncate_segment(const Segment& t);

/// Per-type item counts t_i / s_i of a truncated segment; rejects segments
/// with non-integral components.
std::vector<long long> segment_item_counts(const Segment& t);

}  // namespace binpack
