#include "binpack/core.hpp"

#include <algorithm>
#include <map>

namespace binpack {

long long Instance::num_items() const {
    long long n = 0;
    for (const auto& t : types) n += t.count;
    return n;
}

std::vector<Rat> Instance::sizes() const {
    std::vector<Rat> out;
    out.reserve(types.size());
    for (const auto& t : types) out.emplace_back(t.size_num, grid.unit);
    return out;
}

Rat Instance::total_size() const {
    long long num = 0;
    for (const auto& t : types) num += t.size_num * t.count;
    return Rat(num, grid.unit);
}

Instance build_instance(const std::vector<std::pair<Rat, long long>>& pairs, SizeGrid grid) {
    if (grid.unit < 2) fail(ErrorCode::invalid_argument, "grid denominator must be >= 2");
    std::map<long long, long long> by_num;
    for (const auto& [size, count] : pairs) {
        if (count < 0)
            fail(ErrorCode::invalid_argument, "negative count for size " + format_exact(size));
        if (count == 0) continue;
        if (size <= Rat(0) || size > Rat(1))
            fail(ErrorCode::invalid_argument, "size out of (0, 1]: " + format_exact(size));
        if (grid.unit % size.denominator() != 0)
            fail(ErrorCode::invalid_argument,
                 "size off the 1/" + std::to_string(grid.unit) + " grid: " + format_exact(size));
        long long num = size.numerator() * (grid.unit / size.denominator());
        by_num[num] += count;
    }
    Instance inst;
    inst.grid = grid;
    for (const auto& [num, count] : by_num) inst.types.push_back({num, count});
    return inst;
}

Instance round_sizes(const Instance& inst, long long k) {
    if (k < 2) fail(ErrorCode::invalid_argument, "rounding grid must be >= 2");
    long long unit = lcm_ll(inst.grid.unit, k);
    if (unit <= 0 || unit > 1000000000LL)
        fail(ErrorCode::invalid_argument, "rounding grid lcm too large");
    std::map<long long, long long> by_num;
    for (const auto& t : inst.types) {
        // ceil(s * k) on the 1/k grid, expressed on the lcm grid
        long long on_k = ceil_div_ll(t.size_num * k, inst.grid.unit);
        by_num[on_k * (unit / k)] += t.count;
    }
    Instance out;
    out.grid = SizeGrid{unit};
    for (const auto& [num, count] : by_num) out.types.push_back({num, count});
    return out;
}

DistributionVector distribution_vector(const Instance& inst) {
    if (inst.empty()) fail(ErrorCode::invalid_argument, "distribution vector of empty instance");
    DistributionVector d;
    d.length = Rat(0);
    for (const auto& t : inst.types) {
        Rat size(t.size_num, inst.grid.unit);
        d.sizes.push_back(size);
        d.components.push_back(size * t.count);
        d.length += d.components.back();
    }
    return d;
}

Rat Segment::length() const {
    Rat sum(0);
    for (const auto& c : components) sum += c;
    return sum;
}

Segment segment(const DistributionVector& d, const Rat& c) {
    if (c <= Rat(0)) fail(ErrorCode::invalid_argument, "segment length must be positive");
    if (c > d.length)
        fail(ErrorCode::invalid_argument,
             "segment length " + format_exact(c) + " exceeds |d| = " + format_exact(d.length));
    Segment t;
    t.target_length = c;
    t.sizes = d.sizes;
    Rat scale = c / d.length;
    for (const auto& di : d.components) t.components.push_back(di * scale);
    return t;
}

Segment truncate_segment(const Segment& t) {
    Segment out;
    out.target_length = t.target_length;
    out.sizes = t.sizes;
    for (size_t i = 0; i < t.components.size(); ++i) {
        long long whole = floor_div(t.components[i], t.sizes[i]);
        out.components.push_back(t.sizes[i] * whole);
    }
    return out;
}

std::vector<long long> segment_item_counts(const Segment& t) {
    std::vector<long long> counts;
    counts.reserve(t.components.size());
    for (size_t i = 0; i < t.components.size(); ++i) {
        Rat q = t.components[i] / t.sizes[i];
        if (q.denominator() != 1)
            fail(ErrorCode::invalid_argument, "segment component " + format_exact(t.components[i]) +
                                                  " is not a whole number of items");
        counts.push_back(q.numerator());
    }
    return counts;
}

}  // namespace binpack
