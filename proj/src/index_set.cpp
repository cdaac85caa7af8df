#include "schmidt/index_set.hpp"

#include <algorithm>
#include <sstream>

namespace schmidt {

ModMShape::ModMShape(int m_, int t_, std::vector<long long> s_) : m(m_), t(t_), s(std::move(s_)) {
    if (m < 1) throw ParameterError("modm shape: m must be >= 1");
    if (t < 1 || t > m) throw ParameterError("modm shape: need 1 <= t <= m");
    if (static_cast<int>(s.size()) != t) throw ParameterError("modm shape: s must have t entries");
    for (int i = 0; i < t; ++i) {
        if (s[i] < 1 || s[i] > m) throw ParameterError("modm shape: entries must lie in [1, m]");
        if (i > 0 && s[i] <= s[i - 1]) throw ParameterError("modm shape: s must be strictly increasing");
    }
}

int ModMShape::v_class(long long residue) const {
    if (residue < 0 || residue > m) throw ParameterError("modm shape: residue out of range");
    if (residue < s[0]) return 0;
    if (residue >= s[t - 1]) return t;
    // s_v <= residue < s_{v+1}
    int v = 0;
    for (int i = 0; i < t; ++i)
        if (s[i] <= residue) v = i + 1;
    return v;
}

IndexSet::IndexSet(std::string spec, NextFn next)
    : spec_(std::move(spec)), next_(std::move(next)), state_(std::make_shared<State>()) {}

void IndexSet::extend_until(const std::function<bool(const std::vector<long long>&)>& done) const {
    std::lock_guard<std::mutex> lock(state_->mu);
    while (!done(state_->cache)) {
        if (state_->exhausted)
            throw ExhaustedError("index set '" + spec_ + "': finite prefix exhausted");
        auto nxt = next_(state_->cache);
        if (!nxt) {
            state_->exhausted = true;
            continue;
        }
        long long v = *nxt;
        if (v < 1) throw ValidationError("index set '" + spec_ + "': elements must be >= 1");
        if (!state_->cache.empty() && v <= state_->cache.back())
            throw ValidationError("index set '" + spec_ + "': elements must be strictly increasing");
        state_->cache.push_back(v);
    }
}

long long IndexSet::element(int i) const {
    if (i < 1) throw ParameterError("index set element: index must be >= 1");
    extend_until([i](const std::vector<long long>& c) { return static_cast<int>(c.size()) >= i; });
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->cache[i - 1];
}

long long IndexSet::count_leq(long long v) const {
    if (v < 1) return 0;
    extend_until([v](const std::vector<long long>& c) { return !c.empty() && c.back() > v; });
    std::lock_guard<std::mutex> lock(state_->mu);
    return static_cast<long long>(
        std::upper_bound(state_->cache.begin(), state_->cache.end(), v) - state_->cache.begin());
}

namespace {

IndexSet formula_set(std::string spec, long long (*f)(long long)) {
    return IndexSet(std::move(spec), [f](const std::vector<long long>& c) -> std::optional<long long> {
        return f(static_cast<long long>(c.size()) + 1);
    });
}

}  // namespace

IndexSet IndexSet::odds() {
    return formula_set("odds", [](long long n) { return 2 * n - 1; });
}

IndexSet IndexSet::tri1() {
    return formula_set("tri1", [](long long n) { return n * (n - 1) / 2 + 1; });
}

IndexSet IndexSet::tri() {
    return formula_set("tri", [](long long n) { return n * (n + 1) / 2; });
}

IndexSet IndexSet::squares() {
    return formula_set("squares", [](long long n) { return n * n; });
}

IndexSet IndexSet::fib() {
    // s_1 = 1, s_2 = 2, s_n = s_{n-1} + s_{n-2}: the Fibonacci numbers
    // F_{n+1} starting from F_2, which keeps the set strictly increasing.
    return IndexSet("fib", [](const std::vector<long long>& c) -> std::optional<long long> {
        size_t n = c.size();
        if (n == 0) return 1;
        if (n == 1) return 2;
        return c[n - 1] + c[n - 2];
    });
}

IndexSet IndexSet::pow2() {
    return formula_set("pow2", [](long long n) { return 1LL << (n - 1); });
}

IndexSet IndexSet::all() {
    return formula_set("all", [](long long n) { return n; });
}

IndexSet IndexSet::mod_m(const ModMShape& shape) {
    std::ostringstream spec;
    spec << "modm:m=" << shape.m << ",t=" << shape.t << ",s=";
    for (int i = 0; i < shape.t; ++i) spec << (i ? "," : "") << shape.s[i];
    long long m = shape.m;
    int t = shape.t;
    std::vector<long long> s = shape.s;
    return IndexSet(spec.str(), [m, t, s](const std::vector<long long>& c) -> std::optional<long long> {
        long long u = static_cast<long long>(c.size());  // 0-based index of next element
        return (u / t) * m + s[static_cast<size_t>(u % t)];
    });
}

IndexSet IndexSet::from_list(std::vector<long long> values) {
    std::ostringstream spec;
    spec << "list:";
    for (size_t i = 0; i < values.size(); ++i) spec << (i ? "," : "") << values[i];
    return IndexSet(spec.str(), [values](const std::vector<long long>& c) -> std::optional<long long> {
        if (c.size() >= values.size()) return std::nullopt;
        return values[c.size()];
    });
}

namespace {

std::vector<long long> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw ParameterError(what + ": empty entry in list");
        size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw ParameterError(what + ": bad integer '" + item + "'");
        }
        if (pos != item.size()) throw ParameterError(what + ": bad integer '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ParameterError(what + ": empty list");
    return out;
}

}  // namespace

IndexSet IndexSet::parse(const std::string& spec) {
    if (spec == "odds") return odds();
    if (spec == "tri1") return tri1();
    if (spec == "tri") return tri();
    if (spec == "squares") return squares();
    if (spec == "fib") return fib();
    if (spec == "pow2") return pow2();
    if (spec == "all") return all();
    if (spec.rfind("list:", 0) == 0) return from_list(parse_int_list(spec.substr(5), "list index set"));
    if (spec.rfind("modm:", 0) == 0) {
        std::string body = spec.substr(5);
        // Expected layout: m=<m>,t=<t>,s=<s1,..,st>
        auto need = [&](const std::string& key) -> std::string {
            auto pos = body.find(key + "=");
            if (pos == std::string::npos || (pos > 0 && body[pos - 1] != ','))
                throw ParameterError("modm index set: missing '" + key + "='");
            return body.substr(pos + key.size() + 1);
        };
        auto upto_comma = [](const std::string& text) { return text.substr(0, text.find(',')); };
        int m = static_cast<int>(parse_int_list(upto_comma(need("m")), "modm m")[0]);
        int t = static_cast<int>(parse_int_list(upto_comma(need("t")), "modm t")[0]);
        std::vector<long long> s = parse_int_list(need("s"), "modm s");
        return mod_m(ModMShape(m, t, std::move(s)));
    }
    throw ParameterError("unknown index set spec '" + spec + "'");
}

}  // namespace schmidt
