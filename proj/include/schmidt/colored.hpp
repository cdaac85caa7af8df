#ifndef SCHMIDT_COLORED_HPP
#define SCHMIDT_COLORED_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schmidt/part_seq.hpp"

namespace schmidt {

/* A color: the sentinel c0, or c_i / c_{i~} for i >= 1. */
class ColorIndex {
public:
    constexpr ColorIndex() = default;  // c0
    constexpr ColorIndex(long long index, bool overlined) : index_(index), overlined_(overlined) {
        if (index < 0) throw ValidationError("color index must be non-negative");
        if (overlined && index == 0) throw ValidationError("c0 has no over-lined twin");
    }

    static constexpr ColorIndex c0() { return ColorIndex(); }
    static constexpr ColorIndex plain(long long i) { return ColorIndex(i, false); }
    static constexpr ColorIndex over(long long i) { return ColorIndex(i, true); }

    constexpr long long index() const { return index_; }
    constexpr bool overlined() const { return overlined_; }
    constexpr bool is_c0() const { return index_ == 0; }

    /* The color index read back as a part value (c0 -> 0). */
    PartValue as_part_value() const { return PartValue(index_, overlined_); }
    static ColorIndex of_part_value(PartValue v) { return ColorIndex(v.size(), v.overlined()); }

    /* Canonical sort key: (index, plain before over-lined). */
    friend constexpr bool operator<(ColorIndex a, ColorIndex b) {
        if (a.index_ != b.index_) return a.index_ < b.index_;
        return a.overlined_ < b.overlined_;
    }
    friend constexpr bool operator==(ColorIndex a, ColorIndex b) {
        return a.index_ == b.index_ && a.overlined_ == b.overlined_;
    }
    friend constexpr bool operator!=(ColorIndex a, ColorIndex b) { return !(a == b); }

private:
    long long index_ = 0;
    bool overlined_ = false;
};

/* Machine rendering: "c0", "c(3)", "c(3~)". */
std::string to_text(ColorIndex c);

/* A multiplicative monomial in the colors (c0 excluded; its contribution
 * is neutral).  Stored as sorted (color, exponent) pairs, no zeros. */
class ColorMonomial {
public:
    ColorMonomial() = default;

    static ColorMonomial one() { return {}; }
    static ColorMonomial color(ColorIndex c, int exp = 1);

    bool is_one() const { return factors_.empty(); }
    long long total_degree() const;
    const std::vector<std::pair<ColorIndex, int>>& factors() const { return factors_; }

    ColorMonomial& operator*=(const ColorMonomial& o);
    friend ColorMonomial operator*(ColorMonomial a, const ColorMonomial& b) { return a *= b; }
    ColorMonomial pow(int e) const;

    friend bool operator==(const ColorMonomial& a, const ColorMonomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const ColorMonomial& a, const ColorMonomial& b) { return !(a == b); }
    friend bool operator<(const ColorMonomial& a, const ColorMonomial& b);

    std::string text() const;  // "1" or "c(1)^2*c(2~)"

private:
    std::vector<std::pair<ColorIndex, int>> factors_;
};

/* Maps a monomial's indices to residues mod m (index i -> ((i-1) mod m)+1,
 * bars preserved), implementing the identification c_{i+jm} = c_i. */
ColorMonomial normalize_mod_m(const ColorMonomial& mono, int m);

/* A colored integer: a size paired with a color.  Relative to an index
 * set, color c_i is only valid on size floor_S(i) and c0 only on 0. */
struct ColoredPart {
    long long size = 0;
    ColorIndex color;

    friend bool operator==(const ColoredPart& a, const ColoredPart& b) {
        return a.size == b.size && a.color == b.color;
    }
};
std::string to_text(const ColoredPart& p);  // "size@c(i)", "0@c0"

/* A finite sequence of colored parts over an explicit index-set context.
 * Validity: sizes match their colors' S-floors, and the sequence of color
 * indices, read as part values, is itself a valid part sequence (this is
 * the Ens_C^S discipline).  Trailing 0@c0 entries are implicit.  Two
 * sequences compare equal only if their contexts agree. */
class ColoredSeq {
public:
    ColoredSeq(std::vector<ColoredPart> parts, IndexSet context);

    const std::vector<ColoredPart>& parts() const { return parts_; }
    const IndexSet& context() const { return context_; }

    /* Sum of part sizes. */
    long long colored_weight() const;

    /* Product of the colors of all parts different from 0@c0. */
    ColorMonomial monomial() const;

    /* The color indices read back as a part sequence (c0 -> 0). */
    PartSeq index_seq() const;

    friend bool operator==(const ColoredSeq& a, const ColoredSeq& b) {
        return a.context_ == b.context_ && a.parts_ == b.parts_;
    }

private:
    std::vector<ColoredPart> parts_;
    IndexSet context_;
};

std::string to_text(const ColoredSeq& seq);

/* C(lambda): the product over i = 1..max size of the color indexed by the
 * i-th conjugate part.  C(empty) = 1. */
ColorMonomial color_sequence(const PartSeq& seq);
inline ColorMonomial color_sequence(const OverPartition& l) { return color_sequence(l.seq()); }

/* Psi_S: part-wise (floor_S(l_i))_{c_{l_i}}. */
ColoredSeq psi_S(const OverPartition& l, const IndexSet& S);

/* Phi_S = Psi_S after conjugation: carries S-weight to colored weight and
 * C(.) to the monomial. */
ColoredSeq phi_S(const OverPartition& l, const IndexSet& S);

/* Inverse of Phi_S: read the color indices back and conjugate. */
OverPartition phi_S_inverse(const ColoredSeq& mu);

/* Which of the four colored families contain mu (by testing the color
 * index sequence against the family predicates). */
struct ColoredFamilies {
    bool ovp = false, p = false, ovd = false, ovf = false;
};
ColoredFamilies colored_family_of(const ColoredSeq& mu);

/* Theorem 1.7's congruence-class/color-range table: every part, with its
 * color index reduced mod m, must carry a color legal for its size class
 * (classes i != 0 mod t use colors c_{s_i}..c_{s_{i+1}-1} and twins,
 * non-negative multiples of t use c_1..c_{s_1-1}, positive multiples also
 * admit c_{s_t}..c_m).  Takes raw parts: in the mod-m world colors are
 * residues and sizes run over floor(i + jm), outside ColoredSeq's
 * full-index validity. */
bool mod_m_color_check(const std::vector<ColoredPart>& parts, const ModMShape& shape);
inline bool mod_m_color_check(const ColoredSeq& mu, const ModMShape& shape) {
    return mod_m_color_check(mu.parts(), shape);
}

}  // namespace schmidt

#endif
