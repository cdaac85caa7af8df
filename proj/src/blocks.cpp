#include "schmidt/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace schmidt {

BlockType::BlockType(std::vector<int> prefix, std::vector<int> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    if (tail_.empty()) throw ParameterError("block type: repeating tail must be non-empty");
    for (int u : prefix_)
        if (u < 1) throw ParameterError("block type: block sizes must be >= 1");
    for (int u : tail_)
        if (u < 1) throw ParameterError("block type: block sizes must be >= 1");
}

long long BlockType::u(long long n) const {
    if (n < 1) throw ParameterError("block type: block index must be >= 1");
    long long p = static_cast<long long>(prefix_.size());
    if (n <= p) return prefix_[static_cast<size_t>(n - 1)];
    return tail_[static_cast<size_t>((n - 1 - p) % static_cast<long long>(tail_.size()))];
}

long long BlockType::U(long long n) const {
    long long sum = 0;
    for (long long i = 1; i <= n; ++i) sum += u(i);
    return sum;
}

long long BlockType::block_of(long long p) const {
    if (p < 1) throw ParameterError("block type: position must be >= 1");
    long long n = 1, end = u(1);
    while (end < p) {
        ++n;
        end += u(n);
    }
    return n;
}

bool BlockType::tail_has_singleton() const {
    return std::find(tail_.begin(), tail_.end(), 1) != tail_.end();
}

IndexSet BlockType::singleton_positions() const {
    BlockType self = *this;
    long long scan_limit =
        tail_has_singleton() ? 0
                             : static_cast<long long>(prefix_.size() + tail_.size());
    return IndexSet(
        "S(" + text() + ")",
        [self, scan_limit](const std::vector<long long>& cache) -> std::optional<long long> {
            size_t want = cache.size() + 1;  // the want-th singleton block
            size_t found = 0;
            long long pos = 0;
            for (long long n = 1;; ++n) {
                if (scan_limit && n > scan_limit) return std::nullopt;
                pos += self.u(n);
                if (self.u(n) == 1 && ++found == want) return pos;
            }
        });
}

BlockType BlockType::unk(int n, int k) {
    if (n < 1 || k < 1) throw ParameterError("Unk(n,k): need n,k >= 1");
    std::vector<int> tail{1};
    for (int j = 0; j < k; ++j) tail.push_back(n);
    return BlockType({}, tail);
}

BlockType BlockType::parse(const std::string& spec) {
    if (spec.rfind("Unk(", 0) == 0 && spec.back() == ')') {
        std::string body = spec.substr(4, spec.size() - 5);
        auto comma = body.find(',');
        if (comma == std::string::npos) throw ParameterError("bad block type '" + spec + "'");
        try {
            return unk(std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)));
        } catch (const std::exception&) {
            throw ParameterError("bad block type '" + spec + "'");
        }
    }
    if (spec.rfind("U=", 0) != 0) throw ParameterError("bad block type '" + spec + "'");
    std::string body = spec.substr(2);
    auto open = body.find('(');
    if (open == std::string::npos || body.size() < open + 3 || body.substr(body.size() - 2) != ")*")
        throw ParameterError("block type '" + spec + "': want U=p1,..,(t1,..)*");
    auto parse_list = [&](const std::string& text) {
        std::vector<int> out;
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty()) continue;
            try {
                out.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw ParameterError("block type '" + spec + "': bad size '" + item + "'");
            }
        }
        return out;
    };
    std::vector<int> prefix = parse_list(body.substr(0, open));
    std::vector<int> tail = parse_list(body.substr(open + 1, body.size() - open - 3));
    return BlockType(std::move(prefix), std::move(tail));
}

std::string BlockType::text() const {
    std::ostringstream out;
    out << "U=";
    for (int u : prefix_) out << u << ',';
    out << '(';
    for (size_t i = 0; i < tail_.size(); ++i) out << (i ? "," : "") << tail_[i];
    out << ")*";
    return out.str();
}

OverComposition::OverComposition(std::vector<PartValue> parts) : parts_(std::move(parts)) {
    std::map<long long, int> state;  // size -> 1 once its over-line passed
    for (const PartValue& v : parts_) {
        if (v.is_zero()) continue;
        auto& st = state[v.size()];
        if (v.overlined()) {
            if (st) throw ValidationError("over-composition: " + to_text(v) + " occurs twice");
            st = 1;
        } else if (st) {
            throw ValidationError("over-composition: plain " + std::to_string(v.size()) +
                                  " after its over-lined copy");
        }
    }
}

bool OverComposition::non_increasing() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i]) return false;
    return true;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<size_t>(v - 1)])
            throw ValidationError("not a permutation");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int u) {
    std::vector<int> img(static_cast<size_t>(u));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= degree(); ++i) inv[static_cast<size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::vector<int> Permutation::descents() const {
    std::vector<int> out;
    for (int i = 1; i < degree(); ++i)
        if ((*this)(i) > (*this)(i + 1)) out.push_back(i);
    return out;
}

bool sigma_admissible(const Permutation& sigma, const OverComposition& mu) {
    if (!mu.non_increasing()) return false;
    if (sigma.degree() != static_cast<int>(mu.length()))
        throw ParameterError("sigma_admissible: degree mismatch");
    for (int i : sigma.descents())
        if (diff(mu.parts()[static_cast<size_t>(i - 1)], mu.parts()[static_cast<size_t>(i)]) <= 0)
            return false;
    return true;
}

std::pair<Permutation, OverComposition> gamma_u(const OverComposition& lambda) {
    const auto& p = lambda.parts();
    int u = static_cast<int>(p.size());
    // eq. (23): sigma^{-1}(i) = #{j : l_j - l_i > 0} + #{j <= i : l_j - l_i = 0}
    std::vector<int> inv(static_cast<size_t>(u));
    for (int i = 1; i <= u; ++i) {
        int rank = 0;
        for (int j = 1; j <= u; ++j) {
            long long d = diff(p[static_cast<size_t>(j - 1)], p[static_cast<size_t>(i - 1)]);
            if (d > 0 || (d == 0 && j <= i)) ++rank;
        }
        inv[static_cast<size_t>(i - 1)] = rank;
    }
    Permutation sigma = Permutation(std::move(inv)).inverse();
    std::vector<PartValue> sorted(static_cast<size_t>(u));
    for (int i = 1; i <= u; ++i) sorted[static_cast<size_t>(i - 1)] = p[static_cast<size_t>(sigma(i) - 1)];
    return {sigma, OverComposition(std::move(sorted))};
}

OverComposition gamma_u_inverse(const Permutation& sigma, const OverComposition& mu) {
    if (!mu.non_increasing())
        throw ValidationError("gamma_u_inverse: mu must be non-increasing");
    if (!sigma_admissible(sigma, mu))
        throw ValidationError("gamma_u_inverse: mu is not sigma-admissible");
    Permutation inv = sigma.inverse();
    std::vector<PartValue> out(mu.length());
    for (int i = 1; i <= sigma.degree(); ++i)
        out[static_cast<size_t>(i - 1)] = mu.parts()[static_cast<size_t>(inv(i) - 1)];
    return OverComposition(std::move(out));
}

PermSeq::PermSeq(BlockType U, std::vector<Permutation> blocks)
    : U_(std::move(U)), blocks_(std::move(blocks)) {
    for (size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i].degree() != U_.u(static_cast<long long>(i + 1)))
            throw ValidationError("perm sequence: block " + std::to_string(i + 1) +
                                  " has the wrong degree");
    while (!blocks_.empty() && blocks_.back().is_identity()) blocks_.pop_back();
}

Permutation PermSeq::block(long long i) const {
    if (i < 1) throw ParameterError("perm sequence: block index must be >= 1");
    if (i <= static_cast<long long>(blocks_.size())) return blocks_[static_cast<size_t>(i - 1)];
    return Permutation::identity(static_cast<int>(U_.u(i)));
}

long long PermSeq::operator()(long long j) const {
    long long i = U_.block_of(j);
    if (i > static_cast<long long>(blocks_.size())) return j;  // identity tail
    return U_.U(i - 1) + blocks_[static_cast<size_t>(i - 1)](static_cast<int>(j - U_.U(i - 1)));
}

std::vector<long long> PermSeq::descents() const {
    std::vector<long long> out;
    for (size_t i = 0; i < blocks_.size(); ++i) {
        long long base = U_.U(static_cast<long long>(i));
        for (int d : blocks_[i].descents()) out.push_back(base + d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string block_family_name(BlockFamily f) {
    switch (f) {
        case BlockFamily::OvP_U: return "ovp(U)";
        case BlockFamily::P_U: return "p(U)";
        case BlockFamily::OvD_U: return "ovd(U)";
    }
    return "?";
}

namespace {

/* min over a block slice, with the implicit zero tail. */
PartValue block_min(const PartSeq& seq, long long lo, long long hi) {
    PartValue m = seq.at(lo);
    for (long long p = lo + 1; p <= hi; ++p) m = std::min(m, seq.at(p), std::less<PartValue>());
    return m;
}

PartValue block_max(const PartSeq& seq, long long lo, long long hi) {
    PartValue m = seq.at(lo);
    for (long long p = lo + 1; p <= hi; ++p) m = std::max(m, seq.at(p), std::less<PartValue>());
    return m;
}

}  // namespace

bool is_block_member(const PartSeq& seq, const BlockType& U, BlockFamily f) {
    if (f == BlockFamily::P_U)
        for (const PartValue& v : seq.parts())
            if (v.overlined()) return false;
    long long last_block = seq.support() ? U.block_of(seq.support()) : 1;
    for (long long n = 1; n <= last_block; ++n) {
        PartValue mn = block_min(seq, U.U(n - 1) + 1, U.U(n));
        PartValue mx = block_max(seq, U.U(n) + 1, U.U(n + 1));
        if (mn < mx) return false;
        if (f == BlockFamily::OvD_U && mn.size() > 0 && diff(mn, mx) <= 0) return false;
    }
    return true;
}

std::pair<PermSeq, OverPartition> gamma_U(const PartSeq& lambda, const BlockType& U) {
    if (!is_block_member(lambda, U, BlockFamily::OvP_U))
        throw ValidationError("gamma_U: input is not a block over-partition of this type");
    long long last_block = lambda.support() ? U.block_of(lambda.support()) : 0;
    std::vector<Permutation> sigmas;
    std::vector<PartValue> sorted;
    for (long long n = 1; n <= last_block; ++n) {
        std::vector<PartValue> slice;
        for (long long p = U.U(n - 1) + 1; p <= U.U(n); ++p) slice.push_back(lambda.at(p));
        auto [sigma, mu] = gamma_u(OverComposition(std::move(slice)));
        sigmas.push_back(sigma);
        sorted.insert(sorted.end(), mu.parts().begin(), mu.parts().end());
    }
    return {PermSeq(U, std::move(sigmas)), OverPartition(std::move(sorted))};
}

bool is_sigma_admissible(const PermSeq& Sigma, const OverPartition& l) {
    for (long long j : Sigma.descents())
        if (diff(l.at(j), l.at(j + 1)) <= 0) return false;
    return true;
}

bool is_sigma_sizable(const PermSeq& Sigma, const OverPartition& l) {
    std::set<long long> sizes;
    for (const PartValue& v : l.parts()) sizes.insert(v.size());
    for (long long j : Sigma.descents())
        if (!sizes.count(j)) return false;
    return true;
}

namespace {

struct BlockEnumState {
    const BlockType& U;
    BlockFamily family;
    BlockStat stat;
    long long budget;
    std::optional<long long> size_cap;
    const std::function<void(const PartSeq&)>& cb;

    std::vector<PartValue> parts;
    std::set<long long> used_bars;  // sizes whose over-line is already placed

    void emit() {
        PartSeq seq(parts);
        if (family != BlockFamily::OvD_U || is_block_member(seq, U, BlockFamily::OvD_U))
            cb(seq);
    }

    /* Fill position `pos` (0-based within block n); bound is the previous
     * block's min; cur_min the min so far in this block; bars_in_block the
     * sizes over-lined within this block (plain copies may not follow). */
    void fill_block(long long n, long long pos, PartValue bound, PartValue cur_min,
                    std::set<long long>& bars_in_block) {
        long long u = U.u(n);
        if (pos == u) {
            if (cur_min.is_zero()) {
                emit();  // every later block is forced to zero
            } else {
                std::set<long long> next_bars;
                fill_block(n + 1, 0, cur_min, PartValue::plain(*size_cap + 1), next_bars);
            }
            return;
        }
        bool in_S = stat == BlockStat::Weight || u == 1;
        long long max_size = std::min(bound.size(), *size_cap);
        if (in_S) max_size = std::min(max_size, budget);
        for (long long k = 0; k <= max_size; ++k) {
            for (int over = 0; over < 2; ++over) {
                if (over && (k == 0 || family == BlockFamily::P_U)) continue;
                PartValue v(k, over != 0);
                if (bound < v) continue;
                if (over && used_bars.count(k)) continue;
                if (!over && k > 0 && bars_in_block.count(k)) continue;
                parts.push_back(v);
                if (over) {
                    used_bars.insert(k);
                    bars_in_block.insert(k);
                }
                if (in_S) budget -= k;
                fill_block(n, pos + 1, bound, std::min(cur_min, v, std::less<PartValue>()),
                           bars_in_block);
                if (in_S) budget += k;
                if (over) {
                    used_bars.erase(k);
                    bars_in_block.erase(k);
                }
                parts.pop_back();
            }
        }
    }
};

}  // namespace

void enum_block_family(const BlockType& U, BlockFamily f, BlockStat stat, long long cap,
                       std::optional<long long> size_cap,
                       const std::function<void(const PartSeq&)>& cb) {
    if (cap < 0) throw ParameterError("enum_block_family: cap must be >= 0");
    if (stat == BlockStat::SWeight && !U.tail_has_singleton())
        throw InfiniteSetError("enum_block_family: S-weight needs a singleton in the repeating tail");
    if (stat == BlockStat::Weight && !size_cap) size_cap = cap;  // sizes bounded by the weight
    if (stat == BlockStat::SWeight && !size_cap)
        throw InfiniteSetError("enum_block_family: S-weight enumeration needs a size cap");
    BlockEnumState st{U, f, stat, cap, size_cap, cb, {}, {}};
    std::set<long long> bars;
    st.fill_block(1, 0, PartValue::plain(*size_cap + 1), PartValue::plain(*size_cap + 1), bars);
}

}  // namespace schmidt
