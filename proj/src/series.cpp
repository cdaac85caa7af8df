#include "schmidt/series.hpp"

#include <sstream>

namespace schmidt {

ColorPolynomial ColorPolynomial::constant(Int c) {
    ColorPolynomial p;
    p.add_term(ColorMonomial::one(), c);
    return p;
}

ColorPolynomial ColorPolynomial::term(ColorMonomial m, Int c) {
    ColorPolynomial p;
    p.add_term(m, c);
    return p;
}

Int ColorPolynomial::constant_value() const {
    auto it = terms_.find(ColorMonomial::one());
    return it == terms_.end() ? Int(0) : it->second;
}

long long ColorPolynomial::max_degree() const {
    long long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void ColorPolynomial::add_term(const ColorMonomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ColorPolynomial& ColorPolynomial::operator+=(const ColorPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ColorPolynomial& ColorPolynomial::operator-=(const ColorPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ColorPolynomial ColorPolynomial::mul(const ColorPolynomial& o, std::optional<long long> degree_cap) const {
    ColorPolynomial out;
    for (const auto& [m1, c1] : terms_) {
        long long d1 = m1.total_degree();
        if (degree_cap && d1 > *degree_cap) continue;
        for (const auto& [m2, c2] : o.terms_) {
            if (degree_cap && d1 + m2.total_degree() > *degree_cap) continue;
            out.add_term(m1 * m2, c1 * c2);
        }
    }
    return out;
}

std::string ColorPolynomial::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (m.is_one())
            out << c;
        else
            out << c << " * " << m.text();
    }
    return out.str();
}

std::string SeriesCaps::text() const {
    std::string s = "N=" + std::to_string(n);
    s += ",D=";
    s += d ? std::to_string(*d) : std::string("inf");
    return s;
}

TruncatedSeries TruncatedSeries::one(SeriesCaps caps) {
    TruncatedSeries s(caps);
    s.add_term(0, ColorMonomial::one(), 1);
    return s;
}

TruncatedSeries TruncatedSeries::term(SeriesCaps caps, int qdeg, ColorMonomial mono, Int coeff) {
    TruncatedSeries s(caps);
    s.add_term(qdeg, mono, coeff);
    return s;
}

ColorPolynomial TruncatedSeries::coeff(int qdeg) const {
    auto it = coeffs_.find(qdeg);
    return it == coeffs_.end() ? ColorPolynomial() : it->second;
}

void TruncatedSeries::prune(int qdeg) {
    auto it = coeffs_.find(qdeg);
    if (it != coeffs_.end() && it->second.is_zero()) coeffs_.erase(it);
}

void TruncatedSeries::add_term(int qdeg, const ColorMonomial& m, const Int& c) {
    if (qdeg < 0) throw ParameterError("series q-degree must be >= 0");
    if (qdeg > caps_.n) return;
    if (caps_.d && m.total_degree() > *caps_.d) return;
    coeffs_[qdeg].add_term(m, c);
    prune(qdeg);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (!(caps_ == o.caps_)) throw ParameterError("series cap mismatch in add");
    for (const auto& [d, p] : o.coeffs_) {
        coeffs_[d] += p;
        prune(d);
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (!(caps_ == o.caps_)) throw ParameterError("series cap mismatch in sub");
    for (const auto& [d, p] : o.coeffs_) {
        coeffs_[d] -= p;
        prune(d);
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
    if (!(caps_ == o.caps_)) throw ParameterError("series cap mismatch in mul");
    std::map<int, ColorPolynomial> out;
    for (const auto& [d1, p1] : coeffs_) {
        for (const auto& [d2, p2] : o.coeffs_) {
            if (d1 + d2 > caps_.n) break;  // d2 ascending
            ColorPolynomial prod = p1.mul(p2, caps_.d);
            if (prod.is_zero()) continue;
            auto it = out.find(d1 + d2);
            if (it == out.end())
                out.emplace(d1 + d2, std::move(prod));
            else
                it->second += prod;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    coeffs_ = std::move(out);
    return *this;
}

std::optional<std::vector<Int>> TruncatedSeries::scalar_coefficients() const {
    std::vector<Int> out(static_cast<size_t>(caps_.n) + 1, 0);
    for (const auto& [d, p] : coeffs_) {
        if (!p.is_constant()) return std::nullopt;
        out[static_cast<size_t>(d)] = p.constant_value();
    }
    return out;
}

std::string TruncatedSeries::text() const {
    std::ostringstream out;
    for (const auto& [d, p] : coeffs_) {
        for (const auto& [m, c] : p.terms()) {
            out << "q^" << d << " : " << c;
            if (!m.is_one()) out << " * " << m.text();
            out << '\n';
        }
    }
    return out.str();
}

TruncatedSeries geometric_inverse(const ColorMonomial& mono, int k, SeriesCaps caps, int sign) {
    if (k < 0) throw ParameterError("geometric_inverse: q-power must be >= 0");
    if (sign != 1 && sign != -1) throw ParameterError("geometric_inverse: sign must be +-1");
    if (k == 0) {
        if (mono.is_one()) throw ParameterError("geometric_inverse: 1/(1-1) is singular");
        if (!caps.d)
            throw InfiniteSetError(
                "geometric_inverse: q-free factor needs a finite color cap to terminate");
    }
    TruncatedSeries out(caps);
    Int c = 1;
    ColorMonomial acc;
    for (long long j = 0;; ++j) {
        long long qd = static_cast<long long>(k) * j;
        if (qd > caps.n) break;
        if (caps.d && acc.total_degree() > *caps.d) break;
        out.add_term(static_cast<int>(qd), acc, c);
        acc *= mono;
        c *= sign;
    }
    return out;
}

TruncatedSeries pochhammer(const ColorPolynomial& a_poly, int a_qpow, int step,
                           std::optional<long long> n, SeriesCaps caps) {
    if (a_qpow < 0) throw ParameterError("pochhammer: q-power must be >= 0");
    if (step < 1)
        throw InfiniteSetError("pochhammer: step must be >= 1 for the product to terminate");
    TruncatedSeries out = TruncatedSeries::one(caps);
    for (long long j = 0; !n || j < *n; ++j) {
        long long qd = a_qpow + step * j;
        if (qd > caps.n) break;  // all further factors are 1 at these caps
        TruncatedSeries factor = TruncatedSeries::one(caps);
        for (const auto& [m, c] : a_poly.terms()) factor.add_term(static_cast<int>(qd), m, -c);
        out *= factor;
    }
    return out;
}

ColorAssignment ColorAssignment::all_to_one() {
    ColorAssignment a;
    a.all_one_ = true;
    return a;
}

void ColorAssignment::set_to_one(ColorIndex c) { map_[c] = std::nullopt; }

void ColorAssignment::set_to_color(ColorIndex from, ColorIndex to) {
    if (from == to) return;
    map_[from] = to;
    resolve(from);
}

void ColorAssignment::resolve(ColorIndex from) {
    // Follow chains; a cycle back to `from` is an error.
    std::optional<ColorIndex> cur = map_[from];
    int guard = 0;
    while (cur) {
        auto it = map_.find(*cur);
        if (it == map_.end()) break;
        if (*cur == from || ++guard > 1000)
            throw ParameterError("color assignment contains a cycle");
        cur = it->second;
    }
    map_[from] = cur;
}

std::optional<ColorIndex> ColorAssignment::apply(ColorIndex c) const {
    if (c.is_c0()) return c;
    auto it = map_.find(c);
    if (it != map_.end()) return it->second;
    if (all_one_) return std::nullopt;
    return c;
}

ColorMonomial ColorAssignment::apply(const ColorMonomial& m) const {
    if (is_identity()) return m;
    ColorMonomial out;
    for (const auto& [c, e] : m.factors()) {
        auto t = apply(c);
        if (t) out *= ColorMonomial::color(*t, e);
    }
    return out;
}

ColorPolynomial ColorAssignment::apply(const ColorPolynomial& p) const {
    if (is_identity()) return p;
    ColorPolynomial out;
    for (const auto& [m, c] : p.terms()) out.add_term(apply(m), c);
    return out;
}

TruncatedSeries ColorAssignment::apply(const TruncatedSeries& s) const {
    if (is_identity()) return s;
    TruncatedSeries out(s.caps());
    for (const auto& [d, p] : s.coeffs())
        for (const auto& [m, c] : p.terms()) out.add_term(d, apply(m), c);
    return out;
}

namespace {

ColorIndex parse_color_name(const std::string& name) {
    if (name == "c0") return ColorIndex::c0();
    if (name.size() < 2 || name[0] != 'c')
        throw ParameterError("bad color name '" + name + "' (want cI or cI~)");
    std::string digits = name.substr(1);
    bool over = false;
    if (!digits.empty() && digits.back() == '~') {
        over = true;
        digits.pop_back();
    }
    try {
        size_t pos = 0;
        long long idx = std::stoll(digits, &pos);
        if (pos != digits.size() || idx < 1) throw ParameterError("");
        return ColorIndex(idx, over);
    } catch (const std::exception&) {
        throw ParameterError("bad color name '" + name + "' (want cI or cI~)");
    }
}

}  // namespace

ColorAssignment ColorAssignment::parse(const std::vector<std::string>& entries) {
    ColorAssignment a;
    for (const std::string& e : entries) {
        auto eq = e.find('=');
        if (eq == std::string::npos) throw ParameterError("bad color assignment '" + e + "'");
        std::string lhs = e.substr(0, eq), rhs = e.substr(eq + 1);
        if (lhs == "all") {
            if (rhs != "1") throw ParameterError("only 'all=1' is supported");
            a.all_one_ = true;
            continue;
        }
        ColorIndex from = parse_color_name(lhs);
        if (rhs == "1")
            a.set_to_one(from);
        else
            a.set_to_color(from, parse_color_name(rhs));
    }
    return a;
}

}  // namespace schmidt
