#ifndef SCHMIDT_GROUNDED_HPP
#define SCHMIDT_GROUNDED_HPP

#include <functional>
#include <vector>

#include "schmidt/colored.hpp"

namespace schmidt {

/* The color order and epsilon function of the mod-m Glaisher setup:
 * colors c_0 < c_{1~} < c_1 < ... < c_{m-1} < c_{m~}, and
 * eps(c, d) = chi(c < d) + chi(c = d with an over-lined index). */
class EpsilonContext {
public:
    explicit EpsilonContext(int m);

    int m() const { return m_; }

    /* The ordered color list, ascending. */
    const std::vector<ColorIndex>& colors() const { return colors_; }
    bool valid_color(ColorIndex c) const;
    int color_rank(ColorIndex c) const;

    int epsilon(ColorIndex c, ColorIndex d) const;

private:
    int m_;
    std::vector<ColorIndex> colors_;
};

/* A grounded colored partition: a chain (pi_0, ..., pi_s) of colored
 * integers ending at the ground 0@c0.  Only the internal entries
 * pi_0..pi_{s-1} are stored; the ground is implicit. */
struct GroundedPart {
    long long size = 0;
    ColorIndex color;

    friend bool operator==(const GroundedPart& a, const GroundedPart& b) {
        return a.size == b.size && a.color == b.color;
    }
};

class GroundedPartition {
public:
    GroundedPartition() = default;
    explicit GroundedPartition(std::vector<GroundedPart> internal);

    const std::vector<GroundedPart>& internal() const { return internal_; }
    long long weight() const;

    /* The color content of the internal entries; drop_c0 removes ground-
     * colored entries (the flat side of the Glaisher comparison). */
    ColorMonomial content(bool drop_c0) const;

    friend bool operator==(const GroundedPartition& a, const GroundedPartition& b) {
        return a.internal_ == b.internal_;
    }

private:
    std::vector<GroundedPart> internal_;
};

std::string to_text(const GroundedPartition& gp);

/* Flat: consecutive differences are exactly epsilon and the entry before
 * the ground is not another ground copy.  Regular: differences at least
 * epsilon and no internal entry is c0-colored. */
bool is_flat(const GroundedPartition& gp, const EpsilonContext& ctx);
bool is_regular(const GroundedPartition& gp, const EpsilonContext& ctx);

/* Complete enumeration of flat or regular partitions with weight <=
 * weight_cap and at most color_cap internal entries counted by the
 * relevant color content (non-c0 entries for flat, all entries for
 * regular).  Terminates: chain length <= weight + color_cap. */
enum class GroundedKind { Flat, Regular };
void enumerate_grounded(GroundedKind kind, const EpsilonContext& ctx, long long weight_cap,
                        long long color_cap,
                        const std::function<void(const GroundedPartition&)>& cb);

/* The alpha_S transfer: internal entry j@c_i maps to the colored part of
 * size floor_S(i + jm) whose color is the underlying index i + jm (the
 * mod-m identification c_{i+jm} = c_i read backwards).  A bijection onto
 * the colored over-partitions. */
ColoredSeq alpha_S(const GroundedPartition& gp, const ModMShape& shape);

}  // namespace schmidt

#endif
