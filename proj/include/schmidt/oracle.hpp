#ifndef SCHMIDT_ORACLE_HPP
#define SCHMIDT_ORACLE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "schmidt/series.hpp"

namespace schmidt {

/* Aggregated (weight, color monomial) -> count data produced by the
 * brute-force side of an identity.  Shares the truncation discipline and
 * the canonical text form of TruncatedSeries. */
class CountTable {
public:
    explicit CountTable(SeriesCaps caps) : data_(TruncatedSeries::zero(caps)) {}

    void add(long long weight, const ColorMonomial& mono, Int count = 1) {
        if (weight > data_.caps().n) return;
        data_.add_term(static_cast<int>(weight), mono, count);
    }

    const TruncatedSeries& series() const { return data_; }
    std::string text() const { return data_.text(); }

private:
    TruncatedSeries data_;
};

/* Enumerates every member of the family with S-weight <= cap, each
 * exactly once.  size_cap bounds all part sizes; pass the color cap when
 * the statistic's monomial degree equals the largest part (true for
 * C(lambda), the rho-monomials and the theta-monomials), or any safe
 * bound.  When S misses 1, a finite size_cap is required (the family per
 * S-weight is otherwise infinite).
 *
 * Strategy: choose the sizes at S-indexed positions first (they consume
 * the budget), interpolate the gaps non-increasingly, then place
 * over-lines on last occurrences.  Completeness: a member with S-weight
 * <= cap has every part size <= size_cap by assumption, and its support
 * ends before the (cap+1)-th S-position, so the recursion covers it;
 * distinct (size sequence, over-line set) pairs give distinct members. */
void enum_family_by_s_weight(const FamilyTag& family, const IndexSet& S, long long cap,
                             std::optional<long long> size_cap,
                             const std::function<void(const OverPartition&)>& cb);

/* Weight-based enumeration (S = Z>=1). */
void enum_family_by_weight(const FamilyTag& family, long long cap,
                           const std::function<void(const OverPartition&)>& cb);

/* Reference enumerator for tests: filters every part sequence with
 * support <= max_len and sizes <= max_size. */
void naive_enum_overpartitions(long long max_len, long long max_size,
                               const std::function<void(const OverPartition&)>& cb);

/* A plane partition: non-negative integers, rows and columns
 * non-increasing, finite support.  Stored as its rows. */
struct PlanePartition {
    std::vector<std::vector<long long>> rows;
    long long weight() const;
};

/* All plane partitions of weight exactly n, each once. */
void enum_plane_partitions(long long n, const std::function<void(const PlanePartition&)>& cb);
Int count_plane_partitions(long long n);

/* Over-partitions mu with sum_i floor_S(mu_i) <= floor_cap and at most
 * zero_floor_cap parts of S-floor zero (Corollary 3.3's enumeration:
 * weight in the colored world is the floor sum, and every floor-zero part
 * costs one unit of color degree). */
void enum_overpartitions_by_floor_sum(const IndexSet& S, long long floor_cap,
                                      long long zero_floor_cap,
                                      const std::function<void(const OverPartition&)>& cb);

}  // namespace schmidt

#endif
