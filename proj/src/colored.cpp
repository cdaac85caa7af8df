#include "schmidt/colored.hpp"

#include <algorithm>

namespace schmidt {

std::string to_text(ColorIndex c) {
    if (c.is_c0()) return "c0";
    std::string s = "c(" + std::to_string(c.index());
    if (c.overlined()) s += '~';
    s += ')';
    return s;
}

ColorMonomial ColorMonomial::color(ColorIndex c, int exp) {
    if (c.is_c0()) throw ValidationError("c0 never appears in a color monomial");
    if (exp < 1) throw ValidationError("monomial exponents are positive");
    ColorMonomial m;
    m.factors_.emplace_back(c, exp);
    return m;
}

long long ColorMonomial::total_degree() const {
    long long d = 0;
    for (const auto& [c, e] : factors_) d += e;
    return d;
}

ColorMonomial& ColorMonomial::operator*=(const ColorMonomial& o) {
    std::vector<std::pair<ColorIndex, int>> merged;
    merged.reserve(factors_.size() + o.factors_.size());
    size_t i = 0, j = 0;
    while (i < factors_.size() || j < o.factors_.size()) {
        if (j == o.factors_.size() || (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
            merged.push_back(factors_[i++]);
        } else if (i == factors_.size() || o.factors_[j].first < factors_[i].first) {
            merged.push_back(o.factors_[j++]);
        } else {
            merged.emplace_back(factors_[i].first, factors_[i].second + o.factors_[j].second);
            ++i, ++j;
        }
    }
    factors_ = std::move(merged);
    return *this;
}

ColorMonomial ColorMonomial::pow(int e) const {
    if (e < 0) throw ValidationError("monomial power must be non-negative");
    ColorMonomial out;
    if (e == 0) return out;
    out.factors_ = factors_;
    for (auto& [c, exp] : out.factors_) exp *= e;
    return out;
}

bool operator<(const ColorMonomial& a, const ColorMonomial& b) {
    return std::lexicographical_compare(
        a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
        [](const std::pair<ColorIndex, int>& x, const std::pair<ColorIndex, int>& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

std::string ColorMonomial::text() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += '*';
        out += to_text(factors_[i].first);
        if (factors_[i].second != 1) out += '^' + std::to_string(factors_[i].second);
    }
    return out;
}

ColorMonomial normalize_mod_m(const ColorMonomial& mono, int m) {
    if (m < 1) throw ParameterError("normalize_mod_m: m must be >= 1");
    ColorMonomial out;
    for (const auto& [c, e] : mono.factors()) {
        long long r = (c.index() - 1) % m + 1;
        out *= ColorMonomial::color(ColorIndex(r, c.overlined()), e);
    }
    return out;
}

std::string to_text(const ColoredPart& p) {
    return std::to_string(p.size) + "@" + to_text(p.color);
}

ColoredSeq::ColoredSeq(std::vector<ColoredPart> parts, IndexSet context)
    : parts_(std::move(parts)), context_(std::move(context)) {
    while (!parts_.empty() && parts_.back().size == 0 && parts_.back().color.is_c0())
        parts_.pop_back();
    for (const ColoredPart& p : parts_) {
        if (p.color.is_c0()) {
            if (p.size != 0)
                throw ValidationError("color c0 can only be assigned to 0 (got size " +
                                      std::to_string(p.size) + ")");
        } else if (p.size != context_.s_floor(p.color.as_part_value())) {
            throw ValidationError("colored part " + to_text(p) + " violates size = floor_S(" +
                                  std::to_string(p.color.index()) + ")");
        }
    }
    index_seq();  // validates the underlying index sequence
}

long long ColoredSeq::colored_weight() const {
    long long w = 0;
    for (const ColoredPart& p : parts_) w += p.size;
    return w;
}

ColorMonomial ColoredSeq::monomial() const {
    ColorMonomial m;
    for (const ColoredPart& p : parts_)
        if (!p.color.is_c0()) m *= ColorMonomial::color(p.color);
    return m;
}

PartSeq ColoredSeq::index_seq() const {
    std::vector<PartValue> idx;
    idx.reserve(parts_.size());
    for (const ColoredPart& p : parts_) idx.push_back(p.color.as_part_value());
    return PartSeq(std::move(idx));
}

std::string to_text(const ColoredSeq& seq) {
    std::string out = "(";
    for (size_t i = 0; i < seq.parts().size(); ++i) {
        if (i) out += ',';
        out += to_text(seq.parts()[i]);
    }
    out += ')';
    return out;
}

ColorMonomial color_sequence(const PartSeq& seq) {
    OverPartition conj = conjugate(seq);
    ColorMonomial m;
    for (const PartValue& v : conj.parts())
        m *= ColorMonomial::color(ColorIndex::of_part_value(v));
    return m;
}

ColoredSeq psi_S(const OverPartition& l, const IndexSet& S) {
    std::vector<ColoredPart> parts;
    parts.reserve(static_cast<size_t>(l.support()));
    for (long long i = 1; i <= l.support(); ++i) {
        PartValue v = l.at(i);
        parts.push_back({S.s_floor(v), ColorIndex::of_part_value(v)});
    }
    return ColoredSeq(std::move(parts), S);
}

ColoredSeq phi_S(const OverPartition& l, const IndexSet& S) { return psi_S(conjugate(l), S); }

OverPartition phi_S_inverse(const ColoredSeq& mu) {
    // Validity of mu was checked at construction; the index read-back of a
    // Phi_S image is non-increasing, which OverPartition re-checks.
    return conjugate(OverPartition(mu.index_seq()));
}

ColoredFamilies colored_family_of(const ColoredSeq& mu) {
    PartSeq idx = mu.index_seq();
    ColoredFamilies f;
    f.ovp = is_member(idx, FamilyTag::ovp());
    f.p = is_member(idx, FamilyTag::p());
    f.ovd = is_member(idx, FamilyTag::ovd());
    f.ovf = is_member(idx, FamilyTag::ovf());
    return f;
}

bool mod_m_color_check(const std::vector<ColoredPart>& parts, const ModMShape& shape) {
    const int m = shape.m, t = shape.t;
    for (const ColoredPart& p : parts) {
        if (p.color.is_c0()) continue;
        long long r = (p.color.index() - 1) % m + 1;  // residue in [1, m]
        long long k = p.size;
        bool ok = false;
        if (k % t != 0) {
            // class i != 0 mod t: colors c_{s_i} .. c_{s_{i+1}-1} and twins
            long long i = k % t;
            long long lo = shape.s[static_cast<size_t>(i - 1)];
            long long hi = (i < t) ? shape.s[static_cast<size_t>(i)] - 1 : m;
            ok = (r >= lo && r <= hi);
        } else if (k == 0) {
            // non-negative multiple of t: colors c_1 .. c_{s_1 - 1} and twins
            ok = (r >= 1 && r <= shape.s[0] - 1);
        } else {
            // a positive multiple of t is also a non-negative one, so both
            // ranges c_1..c_{s_1-1} and c_{s_t}..c_m are legal
            ok = (r >= 1 && r <= shape.s[0] - 1) ||
                 (r >= shape.s[static_cast<size_t>(t - 1)] && r <= m);
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace schmidt
