#ifndef SCHMIDT_PART_VALUE_HPP
#define SCHMIDT_PART_VALUE_HPP

#include <cstdint>
#include <string>

#include "schmidt/errors.hpp"

namespace schmidt {

/* An element of Z>=0 together with the over-lined positive integers,
 * totally ordered by 0 < 1~ < 1 < 2~ < 2 < ...  Zero is never over-lined.
 * Sums and differences of part values are plain integers (sizes). */
class PartValue {
public:
    constexpr PartValue() = default;

    constexpr PartValue(long long size, bool overlined) : size_(size), overlined_(overlined) {
        if (size < 0) throw ValidationError("part size must be non-negative");
        if (overlined && size == 0) throw ValidationError("zero is never over-lined");
    }

    static constexpr PartValue plain(long long k) { return PartValue(k, false); }
    static constexpr PartValue over(long long k) { return PartValue(k, true); }

    constexpr long long size() const { return size_; }
    constexpr bool overlined() const { return overlined_; }
    constexpr bool is_zero() const { return size_ == 0; }

    /* Rank in the total order: 0, 1~, 1, 2~, 2, ... -> 0, 1, 2, 3, 4, ... */
    constexpr long long rank() const { return 2 * size_ - (overlined_ ? 1 : 0); }

    friend constexpr bool operator==(PartValue a, PartValue b) { return a.rank() == b.rank(); }
    friend constexpr bool operator!=(PartValue a, PartValue b) { return !(a == b); }
    friend constexpr bool operator<(PartValue a, PartValue b) { return a.rank() < b.rank(); }
    friend constexpr bool operator<=(PartValue a, PartValue b) { return a.rank() <= b.rank(); }
    friend constexpr bool operator>(PartValue a, PartValue b) { return a.rank() > b.rank(); }
    friend constexpr bool operator>=(PartValue a, PartValue b) { return a.rank() >= b.rank(); }

private:
    long long size_ = 0;
    bool overlined_ = false;
};

enum class Ordering { less, equal, greater };

constexpr Ordering cmp(PartValue a, PartValue b) {
    if (a.rank() < b.rank()) return Ordering::less;
    if (a.rank() > b.rank()) return Ordering::greater;
    return Ordering::equal;
}

/* The difference of part values is the difference of their sizes, a plain
 * integer.  Note i - i~ = 0 even though i > i~. */
constexpr long long diff(PartValue a, PartValue b) { return a.size() - b.size(); }

/* Machine rendering: "k" for a plain part, "k~" for an over-lined one. */
inline std::string to_text(PartValue v) {
    std::string s = std::to_string(v.size());
    if (v.overlined()) s += '~';
    return s;
}

}  // namespace schmidt

#endif
