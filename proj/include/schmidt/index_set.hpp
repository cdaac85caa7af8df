#ifndef SCHMIDT_INDEX_SET_HPP
#define SCHMIDT_INDEX_SET_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/errors.hpp"
#include "schmidt/part_value.hpp"

namespace schmidt {

/* Periodic index-set shape: 1 <= s_1 < ... < s_t <= m, extended by
 * s_{u+t} = s_u + m. */
struct ModMShape {
    int m = 1;
    int t = 1;
    std::vector<long long> s;

    ModMShape(int m_, int t_, std::vector<long long> s_);

    /* q-power class of a color residue: v with floor(i + jm) = jt + v.
     * residue i in [0, m]; v = 0 for i < s_1, v for s_v <= i < s_{v+1},
     * t for i >= s_t. */
    int v_class(long long residue) const;
};

/* A strictly increasing set S = {s_1 < s_2 < ...} of positive integers,
 * supplied as a generator with a memoized prefix so infinite sets are
 * first-class.  Finite "list:" sets are prefixes of an unknown set: any
 * query that needs elements past the prefix throws ExhaustedError.
 *
 * The prefix cache is guarded; concurrent queries behave as if sequential. */
class IndexSet {
public:
    /* Generator: given the cached prefix, produce the next element or
     * nullopt when the (finite) prefix is exhausted. */
    using NextFn = std::function<std::optional<long long>(const std::vector<long long>&)>;

    IndexSet(std::string spec, NextFn next);

    /* 1-based i-th element. */
    long long element(int i) const;

    /* #{s in S : s <= v}.  Monotone non-decreasing in v. */
    long long count_leq(long long v) const;

    /* The S-greatest-integer function: #{s in S : value >= s~}, which
     * equals #{s in S : s <= size}.  Identical for k and k~. */
    long long s_floor(PartValue v) const { return count_leq(v.size()); }

    const std::string& spec_text() const { return spec_; }

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.spec_ == b.spec_; }

    /* Builtins (spec syntax names). */
    static IndexSet odds();     // 2n-1
    static IndexSet tri1();     // n(n-1)/2 + 1
    static IndexSet tri();      // n(n+1)/2
    static IndexSet squares();  // n^2
    static IndexSet fib();      // F_{n+1}: 1, 2, 3, 5, 8, ...
    static IndexSet pow2();     // 2^{n-1}
    static IndexSet all();      // Z>=1
    static IndexSet mod_m(const ModMShape& shape);
    static IndexSet from_list(std::vector<long long> values);

    /* Parses "odds", "tri1", "tri", "squares", "fib", "pow2",
     * "modm:m=<m>,t=<t>,s=<s1,..,st>", "list:<a,b,c,...>". */
    static IndexSet parse(const std::string& spec);

private:
    struct State {
        std::vector<long long> cache;
        bool exhausted = false;
        std::mutex mu;
    };

    void extend_until(const std::function<bool(const std::vector<long long>&)>& done) const;

    std::string spec_;
    NextFn next_;
    std::shared_ptr<State> state_;
};

}  // namespace schmidt

#endif
