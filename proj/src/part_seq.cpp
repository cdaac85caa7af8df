#include "schmidt/part_seq.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace schmidt {

PartSeq::PartSeq(std::vector<PartValue> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back().is_zero()) parts_.pop_back();
    // Over-lined values are distinct and each sits after every plain
    // occurrence of its size.
    std::map<long long, bool> over_seen;
    for (const PartValue& v : parts_) {
        if (!v.overlined()) continue;
        auto [it, inserted] = over_seen.emplace(v.size(), true);
        if (!inserted) throw ValidationError("over-lined part " + to_text(v) + " occurs twice");
    }
    over_seen.clear();
    for (const PartValue& v : parts_) {
        if (v.is_zero()) continue;
        if (v.overlined()) {
            over_seen[v.size()] = true;
        } else if (over_seen.count(v.size())) {
            throw ValidationError("plain part " + std::to_string(v.size()) +
                                  " occurs after over-lined " + std::to_string(v.size()) + "~");
        }
    }
}

long long PartSeq::max_size() const {
    long long m = 0;
    for (const PartValue& v : parts_) m = std::max(m, v.size());
    return m;
}

bool PartSeq::contains_over(long long k) const {
    for (const PartValue& v : parts_)
        if (v.overlined() && v.size() == k) return true;
    return false;
}

bool operator<(const PartSeq& a, const PartSeq& b) {
    return std::lexicographical_compare(
        a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
        [](PartValue x, PartValue y) { return x.rank() < y.rank(); });
}

OverPartition::OverPartition(PartSeq seq) : seq_(std::move(seq)) {
    const auto& p = seq_.parts();
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i - 1] < p[i])
            throw ValidationError("over-partition must be non-increasing at position " +
                                  std::to_string(i));
}

OverPartition::OverPartition(std::vector<PartValue> parts) : OverPartition(PartSeq(std::move(parts))) {}

FamilyTag FamilyTag::ovp_m(int m) {
    if (m < 1) throw ParameterError("family ovp_m: m must be >= 1");
    return {Kind::OvP_m, m};
}
FamilyTag FamilyTag::p_m(int m) {
    if (m < 1) throw ParameterError("family p_m: m must be >= 1");
    return {Kind::P_m, m};
}
FamilyTag FamilyTag::ovf_m(int m) {
    if (m < 1) throw ParameterError("family ovf_m: m must be >= 1");
    return {Kind::OvF_m, m};
}

std::string FamilyTag::name() const {
    switch (kind) {
        case Kind::OvP: return "ovp";
        case Kind::P: return "p";
        case Kind::OvD: return "ovd";
        case Kind::OvF: return "ovf";
        case Kind::OvP_m: return "ovp_m";
        case Kind::P_m: return "p_m";
        case Kind::OvF_m: return "ovf_m";
    }
    return "?";
}

FamilyTag FamilyTag::parse(const std::string& name, int m) {
    if (name == "ovp") return ovp();
    if (name == "p") return p();
    if (name == "ovd") return ovd();
    if (name == "ovf") return ovf();
    if (name == "ovp_m") return ovp_m(m);
    if (name == "p_m") return p_m(m);
    if (name == "ovf_m") return ovf_m(m);
    throw ParameterError("unknown family '" + name + "'");
}

long long weight(const PartSeq& seq) {
    long long w = 0;
    for (const PartValue& v : seq.parts()) w += v.size();
    return w;
}

long long s_weight(const PartSeq& seq, const IndexSet& S) {
    long long w = 0;
    for (int i = 1;; ++i) {
        long long pos = S.element(i);
        if (pos > seq.support()) break;
        w += seq.at(pos).size();
    }
    return w;
}

OverPartition conjugate(const PartSeq& seq) {
    long long max = seq.max_size();
    // counts[k] = number of parts of size exactly k
    std::vector<long long> count(static_cast<size_t>(max) + 1, 0);
    std::vector<bool> over(static_cast<size_t>(max) + 1, false);
    for (const PartValue& v : seq.parts()) {
        if (v.is_zero()) continue;
        ++count[static_cast<size_t>(v.size())];
        if (v.overlined()) over[static_cast<size_t>(v.size())] = true;
    }
    std::vector<PartValue> out;
    out.reserve(static_cast<size_t>(max));
    long long at_least = 0;
    for (long long k = max; k >= 1; --k) at_least += count[static_cast<size_t>(k)];
    // at_least now is #parts of size >= 1; walk i upward maintaining it.
    for (long long i = 1; i <= max; ++i) {
        out.emplace_back(at_least, over[static_cast<size_t>(i)]);
        at_least -= count[static_cast<size_t>(i)];
    }
    return OverPartition(std::move(out));
}

namespace {

bool non_increasing(const PartSeq& seq) {
    const auto& p = seq.parts();
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i - 1] < p[i]) return false;
    return true;
}

/* Fewer than m plain occurrences of every positive size. */
bool occurrences_below(const PartSeq& seq, int m) {
    std::map<long long, int> plain;
    for (const PartValue& v : seq.parts())
        if (!v.is_zero() && !v.overlined() && ++plain[v.size()] >= m) return false;
    return true;
}

/* l_i - l_{i+1} = chi(l_i over-lined), restricted to positions where
 * keep(i) holds; positions past the support hold trivially except the
 * boundary step onto the zero tail. */
bool flat_steps(const PartSeq& seq, const std::function<bool(long long)>& keep) {
    for (long long i = 1; i <= seq.support(); ++i) {
        if (!keep(i)) continue;
        long long d = diff(seq.at(i), seq.at(i + 1));
        if (d != (seq.at(i).overlined() ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace

bool is_member(const PartSeq& seq, const FamilyTag& f) {
    if (!non_increasing(seq)) return false;
    switch (f.kind) {
        case FamilyTag::Kind::OvP:
            return true;
        case FamilyTag::Kind::P: {
            for (const PartValue& v : seq.parts())
                if (v.overlined()) return false;
            return true;
        }
        case FamilyTag::Kind::OvD: {
            for (const PartValue& v : seq.parts())
                if (!v.is_zero() && !v.overlined()) return false;
            return true;
        }
        case FamilyTag::Kind::OvF: {
            // i~ occurs for every 0 < i~ <= l_1, i.e. for i = 1..max size.
            for (long long i = 1; i <= seq.max_size(); ++i)
                if (!seq.contains_over(i)) return false;
            return true;
        }
        case FamilyTag::Kind::OvP_m:
            return occurrences_below(seq, f.m);
        case FamilyTag::Kind::P_m:
            return is_member(seq, FamilyTag::p()) && occurrences_below(seq, f.m);
        case FamilyTag::Kind::OvF_m:
            return occurrences_below(seq, f.m) &&
                   flat_steps(seq, [&](long long i) { return i % f.m != 0; });
    }
    return false;
}

RhoStats rho_stats(const OverPartition& l, int m) {
    if (m < 1) throw ParameterError("rho_stats: m must be >= 1");
    RhoStats st;
    st.rho.assign(static_cast<size_t>(m), 0);
    st.rho_bar.assign(static_cast<size_t>(m), 0);
    for (int j = 1; j <= m; ++j) {
        for (long long i = 0; j + i * m <= l.support(); ++i) {
            PartValue cur = l.at(j + i * m);
            long long term = diff(cur, l.at(j + 1 + i * m)) - (cur.overlined() ? 1 : 0);
            if (term < 0)
                throw ValidationError("rho_stats: negative summand, input is not an over-partition");
            st.rho[static_cast<size_t>(j - 1)] += term;
            if (cur.overlined()) ++st.rho_bar[static_cast<size_t>(j - 1)];
        }
    }
    return st;
}

ThetaStats theta_stats(const OverPartition& l, int m, int ell) {
    if (m < 1) throw ParameterError("theta_stats: m must be >= 1");
    if (ell < 1 || ell > m) throw ParameterError("theta_stats: need 1 <= l <= m");
    ThetaStats st;
    for (long long i = 0; 1 + i * m <= l.support(); ++i) {
        st.theta1 += diff(l.at(1 + i * m), l.at(ell + i * m));
        st.theta2 += diff(l.at(ell + i * m), l.at(m + i * m));
        st.theta3 += diff(l.at(m + i * m), l.at(m + 1 + i * m));
    }
    for (long long i = 1; i * m <= l.support(); ++i)
        if (l.at(i * m).overlined()) ++st.theta4;
    return st;
}

std::string to_text(const PartSeq& seq) {
    std::string out = "(";
    for (size_t i = 0; i < seq.parts().size(); ++i) {
        if (i) out += ',';
        out += to_text(seq.parts()[i]);
    }
    out += ')';
    return out;
}

}  // namespace schmidt
