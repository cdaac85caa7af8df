#ifndef SCHMIDT_BLOCKS_HPP
#define SCHMIDT_BLOCKS_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schmidt/part_seq.hpp"

namespace schmidt {

/* A block-size sequence U = (u_n): an explicit finite prefix followed by
 * a repeating tail.  U_n denotes the prefix sums (U_0 = 0). */
class BlockType {
public:
    BlockType(std::vector<int> prefix, std::vector<int> tail);

    long long u(long long n) const;  // 1-based block size
    long long U(long long n) const;  // U_0 = 0

    /* The block index containing position p >= 1. */
    long long block_of(long long p) const;

    /* Positions U_{n_i} of the singleton blocks (u = 1), as the index set
     * for Theorem 1.14.  Finite when the tail has no singleton. */
    IndexSet singleton_positions() const;
    bool tail_has_singleton() const;

    /* "U=1,(2)*" builtin: u_{1+i(k+1)} = 1 and u = n elsewhere. */
    static BlockType unk(int n, int k);
    /* Parses "Unk(n,k)" or "U=a,b,(c,d)*" (prefix then repeated tail). */
    static BlockType parse(const std::string& spec);
    std::string text() const;

    friend bool operator==(const BlockType& a, const BlockType& b) {
        return a.prefix_ == b.prefix_ && a.tail_ == b.tail_;
    }

private:
    std::vector<int> prefix_;
    std::vector<int> tail_;
};

/* An over-composition: a fixed-length tuple of part values where each
 * over-lined value appears once, after the plain values of its size. */
class OverComposition {
public:
    explicit OverComposition(std::vector<PartValue> parts);

    const std::vector<PartValue>& parts() const { return parts_; }
    size_t length() const { return parts_.size(); }
    bool non_increasing() const;

    friend bool operator==(const OverComposition& a, const OverComposition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<PartValue> parts_;
};

/* A permutation of {1..u} in one-line notation (1-based images). */
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int u);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i - 1)]; }
    Permutation inverse() const;
    bool is_identity() const;
    /* Positions i with sigma(i) > sigma(i+1). */
    std::vector<int> descents() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

private:
    std::vector<int> img_;
};

/* mu is sigma-admissible when mu_i - mu_{i+1} > 0 at every descent of
 * sigma.  mu must be non-increasing. */
bool sigma_admissible(const Permutation& sigma, const OverComposition& mu);

/* Gamma_u: sorts an over-composition, returning the unique permutation of
 * eq. (23) together with the sorted tuple (which is sigma-admissible). */
std::pair<Permutation, OverComposition> gamma_u(const OverComposition& lambda);

/* Inverse of Gamma_u on sigma-admissible pairs. */
OverComposition gamma_u_inverse(const Permutation& sigma, const OverComposition& mu);

/* A sequence of per-block permutations, ultimately the identity. */
class PermSeq {
public:
    PermSeq(BlockType U, std::vector<Permutation> blocks);

    const BlockType& type() const { return U_; }
    const std::vector<Permutation>& stored_blocks() const { return blocks_; }
    Permutation block(long long i) const;

    /* The glued permutation Sigma(j) = U_{i-1} + sigma_i(j - U_{i-1}). */
    long long operator()(long long j) const;

    /* Global descent positions; finite because the tail is the identity
     * and block boundaries never descend. */
    std::vector<long long> descents() const;

    friend bool operator==(const PermSeq& a, const PermSeq& b) {
        return a.U_ == b.U_ && a.blocks_ == b.blocks_;
    }

private:
    BlockType U_;
    std::vector<Permutation> blocks_;  // trailing identities trimmed
};

enum class BlockFamily { OvP_U, P_U, OvD_U };
std::string block_family_name(BlockFamily f);

/* Block over-partition membership: min of each block dominates the max of
 * the next (in the part-value order); P(U) additionally has no over-lines;
 * D(U) requires a strictly positive size difference between consecutive
 * block extremes whenever the upper block's min is positive. */
bool is_block_member(const PartSeq& seq, const BlockType& U, BlockFamily f);

/* Gamma_U: per-block Gamma_u; the second component is the non-increasing
 * rearrangement, which equals the double conjugate. */
std::pair<PermSeq, OverPartition> gamma_U(const PartSeq& lambda, const BlockType& U);

bool is_sigma_admissible(const PermSeq& Sigma, const OverPartition& l);
/* Sizable: l has a part of size i (over-lined or not) at every descent i. */
bool is_sigma_sizable(const PermSeq& Sigma, const OverPartition& l);

/* Enumerates the members of a block family, either by weight or by
 * S-weight over the singleton positions (Theorem 1.14's statistic).
 * size_cap bounds every part size (pass the color cap: the monomial
 * degree of C(lambda) is the maximum part size).  The callback receives
 * each member exactly once. */
enum class BlockStat { Weight, SWeight };
void enum_block_family(const BlockType& U, BlockFamily f, BlockStat stat, long long cap,
                       std::optional<long long> size_cap,
                       const std::function<void(const PartSeq&)>& cb);

}  // namespace schmidt

#endif
