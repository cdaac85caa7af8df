#include "schmidt/oracle.hpp"

#include <algorithm>

namespace schmidt {

namespace {

/* Emits every over-line placement of a positive non-increasing size
 * sequence that lands in the family.  An over-partition is exactly a
 * size multiset plus a set of over-lined sizes (each on the last
 * occurrence), so placements enumerate members bijectively. */
struct OverlinePlacer {
    const FamilyTag& family;
    const std::function<void(const OverPartition&)>& cb;

    void place(const std::vector<long long>& sizes) {
        std::vector<long long> distinct;  // descending, last-occurrence index
        std::vector<size_t> last_pos;
        for (size_t i = 0; i < sizes.size(); ++i) {
            if (distinct.empty() || sizes[i] != distinct.back()) {
                distinct.push_back(sizes[i]);
                last_pos.push_back(i);
            } else {
                last_pos.back() = i;
            }
        }
        size_t k = distinct.size();
        bool plain_only = family.kind == FamilyTag::Kind::P || family.kind == FamilyTag::Kind::P_m;
        size_t subsets = plain_only ? 1 : (size_t{1} << k);
        std::vector<PartValue> parts(sizes.size());
        for (size_t mask = 0; mask < subsets; ++mask) {
            for (size_t i = 0; i < sizes.size(); ++i) parts[i] = PartValue::plain(sizes[i]);
            for (size_t b = 0; b < k; ++b)
                if (mask & (size_t{1} << b)) parts[last_pos[b]] = PartValue::over(distinct[b]);
            OverPartition l{std::vector<PartValue>(parts)};
            if (is_member(l.seq(), family)) cb(l);
        }
    }
};

}  // namespace

void enum_family_by_s_weight(const FamilyTag& family, const IndexSet& S, long long cap,
                             std::optional<long long> size_cap,
                             const std::function<void(const OverPartition&)>& cb) {
    if (cap < 0) throw ParameterError("enum_family_by_s_weight: cap must be >= 0");
    long long bound;
    if (S.element(1) == 1) {
        // the first part is S-weighted, so sizes are bounded by the budget
        bound = size_cap ? std::min(*size_cap, cap) : cap;
    } else {
        if (!size_cap)
            throw InfiniteSetError(
                "enum_family_by_s_weight: S misses 1; a finite size cap (color degree) is required");
        bound = *size_cap;
    }

    OverlinePlacer placer{family, cb};
    std::vector<long long> sizes;
    // March positions left to right; s_idx is the 1-based index of the next
    // S-position at or beyond the current one.
    std::function<void(long long, int, long long, long long)> walk =
        [&](long long pos, int s_idx, long long ub, long long budget) {
            placer.place(sizes);  // the sequence that ends here
            bool in_S = S.element(s_idx) == pos;
            long long hi = in_S ? std::min(ub, budget) : ub;
            for (long long v = 1; v <= hi; ++v) {
                sizes.push_back(v);
                walk(pos + 1, s_idx + (in_S ? 1 : 0), v, budget - (in_S ? v : 0));
                sizes.pop_back();
            }
        };
    walk(1, 1, bound, cap);
}

void enum_family_by_weight(const FamilyTag& family, long long cap,
                           const std::function<void(const OverPartition&)>& cb) {
    enum_family_by_s_weight(family, IndexSet::all(), cap, std::nullopt, cb);
}

void naive_enum_overpartitions(long long max_len, long long max_size,
                               const std::function<void(const OverPartition&)>& cb) {
    std::vector<PartValue> parts;
    std::function<void(long long)> walk = [&](long long max_rank) {
        try {
            cb(OverPartition{std::vector<PartValue>(parts)});
        } catch (const ValidationError&) {
            // over-line placement invalid; prune nothing, just skip
        }
        if (static_cast<long long>(parts.size()) >= max_len) return;
        for (long long r = max_rank; r >= 1; --r) {
            PartValue v((r + 1) / 2, r % 2 == 1);
            parts.push_back(v);
            walk(r);
            parts.pop_back();
        }
    };
    walk(2 * max_size);
}

long long PlanePartition::weight() const {
    long long w = 0;
    for (const auto& row : rows)
        for (long long v : row) w += v;
    return w;
}

namespace {

/* All non-increasing rows bounded elementwise by `bound` with sum in
 * [1, budget]; invokes row_cb(row, sum). */
void enum_rows(const std::vector<long long>& bound, long long budget,
               const std::function<void(const std::vector<long long>&, long long)>& row_cb) {
    std::vector<long long> row;
    std::function<void(size_t, long long)> walk = [&](size_t col, long long used) {
        if (used > 0) row_cb(row, used);
        if (col >= bound.size()) return;
        long long hi = std::min(bound[col], budget - used);
        if (!row.empty()) hi = std::min(hi, row.back());
        for (long long v = hi; v >= 1; --v) {
            row.push_back(v);
            walk(col + 1, used + v);
            row.pop_back();
        }
    };
    walk(0, 0);
}

}  // namespace

void enum_plane_partitions(long long n, const std::function<void(const PlanePartition&)>& cb) {
    if (n < 0) throw ParameterError("enum_plane_partitions: weight must be >= 0");
    if (n == 0) {
        cb(PlanePartition{});
        return;
    }
    PlanePartition pp;
    std::function<void(const std::vector<long long>&, long long)> add_row =
        [&](const std::vector<long long>& bound, long long remaining) {
            enum_rows(bound, remaining, [&](const std::vector<long long>& row, long long sum) {
                pp.rows.push_back(row);
                if (sum == remaining)
                    cb(pp);
                else
                    add_row(row, remaining - sum);
                pp.rows.pop_back();
            });
        };
    // first row: parts bounded only by the budget
    std::vector<long long> top(static_cast<size_t>(n), n);
    add_row(top, n);
}

Int count_plane_partitions(long long n) {
    Int c = 0;
    enum_plane_partitions(n, [&](const PlanePartition&) { ++c; });
    return c;
}

void enum_overpartitions_by_floor_sum(const IndexSet& S, long long floor_cap,
                                      long long zero_floor_cap,
                                      const std::function<void(const OverPartition&)>& cb) {
    if (floor_cap < 0 || zero_floor_cap < 0)
        throw ParameterError("enum_overpartitions_by_floor_sum: caps must be >= 0");
    long long max_size = S.element(static_cast<int>(floor_cap) + 1) - 1;
    OverlinePlacer placer{FamilyTag::ovp(), cb};
    std::vector<long long> sizes;
    std::function<void(long long, long long, long long)> walk =
        [&](long long ub, long long floor_left, long long zeros_left) {
            placer.place(sizes);
            for (long long k = std::min(ub, max_size); k >= 1; --k) {
                long long cost = S.count_leq(k);
                if (cost == 0) {
                    if (zeros_left == 0) continue;
                } else if (cost > floor_left) {
                    continue;
                }
                sizes.push_back(k);
                walk(k, floor_left - cost, zeros_left - (cost == 0 ? 1 : 0));
                sizes.pop_back();
            }
        };
    walk(max_size, floor_cap, zero_floor_cap);
}

}  // namespace schmidt
