#include "schmidt/grounded.hpp"

#include <algorithm>

namespace schmidt {

EpsilonContext::EpsilonContext(int m) : m_(m) {
    if (m < 1) throw ParameterError("epsilon context: m must be >= 1");
    colors_.push_back(ColorIndex::c0());
    for (int i = 1; i <= m; ++i) {
        colors_.push_back(ColorIndex::over(i));
        if (i < m) colors_.push_back(ColorIndex::plain(i));
    }
}

bool EpsilonContext::valid_color(ColorIndex c) const {
    if (c.is_c0()) return true;
    if (c.overlined()) return c.index() >= 1 && c.index() <= m_;
    return c.index() >= 1 && c.index() <= m_ - 1;
}

int EpsilonContext::color_rank(ColorIndex c) const {
    if (!valid_color(c)) throw ParameterError("color " + to_text(c) + " not in the mod-" +
                                              std::to_string(m_) + " palette");
    if (c.is_c0()) return 0;
    return static_cast<int>(2 * c.index() - (c.overlined() ? 1 : 0));
}

int EpsilonContext::epsilon(ColorIndex c, ColorIndex d) const {
    int rc = color_rank(c), rd = color_rank(d);
    if (rc < rd) return 1;
    if (rc == rd && c.overlined()) return 1;
    return 0;
}

GroundedPartition::GroundedPartition(std::vector<GroundedPart> internal)
    : internal_(std::move(internal)) {
    for (const GroundedPart& p : internal_)
        if (p.size < 0) throw ValidationError("grounded partition: negative part");
}

long long GroundedPartition::weight() const {
    long long w = 0;
    for (const GroundedPart& p : internal_) w += p.size;
    return w;
}

ColorMonomial GroundedPartition::content(bool drop_c0) const {
    ColorMonomial m;
    for (const GroundedPart& p : internal_) {
        if (p.color.is_c0()) {
            if (!drop_c0)
                throw ValidationError("grounded partition: c0 entry in a regular content");
            continue;
        }
        m *= ColorMonomial::color(p.color);
    }
    return m;
}

std::string to_text(const GroundedPartition& gp) {
    std::string out = "(";
    for (const GroundedPart& p : gp.internal()) {
        out += std::to_string(p.size) + "@" + to_text(p.color) + ",";
    }
    out += "0@c0)";
    return out;
}

namespace {

bool well_ordered(const GroundedPartition& gp, const EpsilonContext& ctx, bool exact) {
    const auto& in = gp.internal();
    for (size_t i = 0; i + 1 < in.size(); ++i) {
        long long d = in[i].size - in[i + 1].size;
        int eps = ctx.epsilon(in[i].color, in[i + 1].color);
        if (exact ? (d != eps) : (d < eps)) return false;
    }
    if (!in.empty()) {
        long long d = in.back().size;  // step onto the ground 0@c0
        int eps = ctx.epsilon(in.back().color, ColorIndex::c0());
        if (exact ? (d != eps) : (d < eps)) return false;
    }
    return true;
}

}  // namespace

bool is_flat(const GroundedPartition& gp, const EpsilonContext& ctx) {
    for (const GroundedPart& p : gp.internal())
        if (!ctx.valid_color(p.color)) return false;
    // pi_{s-1} != 0@c0 when s > 0
    if (!gp.internal().empty()) {
        const GroundedPart& last = gp.internal().back();
        if (last.size == 0 && last.color.is_c0()) return false;
    }
    return well_ordered(gp, ctx, /*exact=*/true);
}

bool is_regular(const GroundedPartition& gp, const EpsilonContext& ctx) {
    for (const GroundedPart& p : gp.internal()) {
        if (!ctx.valid_color(p.color)) return false;
        if (p.color.is_c0()) return false;
    }
    return well_ordered(gp, ctx, /*exact=*/false);
}

void enumerate_grounded(GroundedKind kind, const EpsilonContext& ctx, long long weight_cap,
                        long long color_cap,
                        const std::function<void(const GroundedPartition&)>& cb) {
    if (weight_cap < 0 || color_cap < 0)
        throw ParameterError("enumerate_grounded: caps must be >= 0");

    // Build chains upward from the ground; rev holds pi_s, pi_{s-1}, ...
    std::vector<GroundedPart> rev;
    std::function<void(long long, long long)> extend = [&](long long wt, long long nc0) {
        {
            std::vector<GroundedPart> fwd(rev.rbegin(), rev.rend());
            cb(GroundedPartition(std::move(fwd)));
        }
        ColorIndex below = rev.empty() ? ColorIndex::c0() : rev.back().color;
        long long below_size = rev.empty() ? 0 : rev.back().size;
        for (ColorIndex c : ctx.colors()) {
            if (kind == GroundedKind::Regular && c.is_c0()) continue;
            long long counts = c.is_c0() ? 0 : 1;
            if (nc0 + counts > color_cap) continue;
            int eps = ctx.epsilon(c, below);
            if (kind == GroundedKind::Flat) {
                long long sz = below_size + eps;
                if (rev.empty() && sz == 0 && c.is_c0()) continue;  // pi_{s-1} != ground
                if (wt + sz > weight_cap) continue;
                rev.push_back({sz, c});
                extend(wt + sz, nc0 + counts);
                rev.pop_back();
            } else {
                for (long long sz = below_size + eps; wt + sz <= weight_cap; ++sz) {
                    rev.push_back({sz, c});
                    extend(wt + sz, nc0 + counts);
                    rev.pop_back();
                }
            }
        }
    };
    extend(0, 0);
}

ColoredSeq alpha_S(const GroundedPartition& gp, const ModMShape& shape) {
    EpsilonContext ctx(shape.m);
    IndexSet S = IndexSet::mod_m(shape);
    std::vector<ColoredPart> parts;
    for (const GroundedPart& p : gp.internal()) {
        if (!ctx.valid_color(p.color))
            throw ParameterError("alpha_S: color " + to_text(p.color) +
                                 " out of range for modulus " + std::to_string(shape.m));
        long long full = p.color.index() + p.size * shape.m;
        if (full == 0) {
            parts.push_back({0, ColorIndex::c0()});
            continue;
        }
        ColorIndex color(full, p.color.overlined());
        parts.push_back({S.s_floor(color.as_part_value()), color});
    }
    return ColoredSeq(std::move(parts), S);
}

}  // namespace schmidt
