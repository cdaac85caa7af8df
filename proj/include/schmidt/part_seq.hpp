#ifndef SCHMIDT_PART_SEQ_HPP
#define SCHMIDT_PART_SEQ_HPP

#include <string>
#include <vector>

#include "schmidt/index_set.hpp"
#include "schmidt/part_value.hpp"

namespace schmidt {

/* A member of the ambient set of part sequences: an infinite sequence of
 * part values with finitely many positive terms, where each over-lined
 * value appears at most once and after every plain occurrence of the same
 * size.  Only the prefix ending at the last positive part is stored;
 * the zero tail is implicit.  Construction validates the invariants. */
class PartSeq {
public:
    PartSeq() = default;
    explicit PartSeq(std::vector<PartValue> parts);

    /* 1-based access with the implicit zero tail. */
    PartValue at(long long i) const {
        if (i < 1 || i > static_cast<long long>(parts_.size())) return PartValue();
        return parts_[static_cast<size_t>(i - 1)];
    }

    /* Number of stored entries (position of the last positive part). */
    long long support() const { return static_cast<long long>(parts_.size()); }

    const std::vector<PartValue>& parts() const { return parts_; }

    /* Size of the largest part, 0 for the empty sequence. */
    long long max_size() const;

    /* True iff the over-lined value k~ occurs. */
    bool contains_over(long long k) const;

    friend bool operator==(const PartSeq& a, const PartSeq& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const PartSeq& a, const PartSeq& b) { return !(a == b); }
    friend bool operator<(const PartSeq& a, const PartSeq& b);

private:
    std::vector<PartValue> parts_;
};

/* An over-partition: a non-increasing part sequence. */
class OverPartition {
public:
    OverPartition() = default;
    explicit OverPartition(std::vector<PartValue> parts);
    explicit OverPartition(PartSeq seq);

    const PartSeq& seq() const { return seq_; }
    PartValue at(long long i) const { return seq_.at(i); }
    long long support() const { return seq_.support(); }
    const std::vector<PartValue>& parts() const { return seq_.parts(); }

    friend bool operator==(const OverPartition& a, const OverPartition& b) { return a.seq_ == b.seq_; }
    friend bool operator!=(const OverPartition& a, const OverPartition& b) { return !(a == b); }
    friend bool operator<(const OverPartition& a, const OverPartition& b) { return a.seq_ < b.seq_; }

private:
    PartSeq seq_;
};

/* The seven families of over-partitions.  The mod-m variants carry m. */
struct FamilyTag {
    enum class Kind { OvP, P, OvD, OvF, OvP_m, P_m, OvF_m };
    Kind kind = Kind::OvP;
    int m = 0;

    static FamilyTag ovp() { return {Kind::OvP, 0}; }
    static FamilyTag p() { return {Kind::P, 0}; }
    static FamilyTag ovd() { return {Kind::OvD, 0}; }
    static FamilyTag ovf() { return {Kind::OvF, 0}; }
    static FamilyTag ovp_m(int m);
    static FamilyTag p_m(int m);
    static FamilyTag ovf_m(int m);

    std::string name() const;
    static FamilyTag parse(const std::string& name, int m);
};

long long weight(const PartSeq& seq);
inline long long weight(const OverPartition& l) { return weight(l.seq()); }

/* S-weight: the sum of sizes at positions indexed by S. */
long long s_weight(const PartSeq& seq, const IndexSet& S);
inline long long s_weight(const OverPartition& l, const IndexSet& S) { return s_weight(l.seq(), S); }

/* S-greatest-integer function of a part value. */
inline long long s_floor(PartValue v, const IndexSet& S) { return S.s_floor(v); }

/* The conjugate: part i has size #{j : seq_j >= i~} and is over-lined iff
 * i~ occurs in seq.  Always an over-partition; preserves the weight. */
OverPartition conjugate(const PartSeq& seq);
inline OverPartition conjugate(const OverPartition& l) { return conjugate(l.seq()); }

/* Exact membership predicate for the seven families (all of which are
 * subsets of the over-partitions, so non-monotone sequences are never
 * members). */
bool is_member(const PartSeq& seq, const FamilyTag& f);
inline bool is_member(const OverPartition& l, const FamilyTag& f) { return is_member(l.seq(), f); }

/* Mod-m occurrence statistics of Theorem 1.7's preamble:
 * rho[j-1]     = sum_{i>=0} (l_{j+im} - l_{j+1+im} - chi(l_{j+im} over-lined))
 * rho_bar[j-1] = #{i >= 0 : l_{j+im} over-lined},   1 <= j <= m. */
struct RhoStats {
    std::vector<long long> rho;
    std::vector<long long> rho_bar;
};
RhoStats rho_stats(const OverPartition& l, int m);

/* The four statistics displayed before Corollary 1.11 (parameters m, l). */
struct ThetaStats {
    long long theta1 = 0, theta2 = 0, theta3 = 0, theta4 = 0;
};
ThetaStats theta_stats(const OverPartition& l, int m, int ell);

/* Text forms: "(3,2~,1)" and "()" for the empty sequence. */
std::string to_text(const PartSeq& seq);
inline std::string to_text(const OverPartition& l) { return to_text(l.seq()); }

}  // namespace schmidt

#endif
