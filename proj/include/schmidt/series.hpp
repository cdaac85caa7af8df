#ifndef SCHMIDT_SERIES_HPP
#define SCHMIDT_SERIES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/colored.hpp"

namespace schmidt {

using Int = boost::multiprecision::cpp_int;

/* A sparse polynomial in the colors with arbitrary-precision integer
 * coefficients; zero coefficients are never stored. */
class ColorPolynomial {
public:
    ColorPolynomial() = default;
    static ColorPolynomial constant(Int c);
    static ColorPolynomial term(ColorMonomial m, Int c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Int constant_value() const;  // coefficient of the empty monomial
    const std::map<ColorMonomial, Int>& terms() const { return terms_; }
    long long max_degree() const;

    void add_term(const ColorMonomial& m, const Int& c);

    ColorPolynomial& operator+=(const ColorPolynomial& o);
    ColorPolynomial& operator-=(const ColorPolynomial& o);
    friend ColorPolynomial operator+(ColorPolynomial a, const ColorPolynomial& b) { return a += b; }
    friend ColorPolynomial operator-(ColorPolynomial a, const ColorPolynomial& b) { return a -= b; }
    friend ColorPolynomial operator-(const ColorPolynomial& a) {
        return ColorPolynomial() - a;
    }

    /* Product, dropping monomials with total degree above cap (if given). */
    ColorPolynomial mul(const ColorPolynomial& o, std::optional<long long> degree_cap) const;

    friend bool operator==(const ColorPolynomial& a, const ColorPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    std::string text() const;

private:
    std::map<ColorMonomial, Int> terms_;
};

/* Truncation caps: retain q-degrees <= n and color degrees <= d (no d
 * means colors are unbounded).  Both cuts are ideals, so ring identities
 * survive the quotient. */
struct SeriesCaps {
    int n = 0;
    std::optional<long long> d;

    friend bool operator==(const SeriesCaps& a, const SeriesCaps& b) { return a.n == b.n && a.d == b.d; }
    std::string text() const;
};

/* A q-series truncated at the caps, with sparse color-polynomial
 * coefficients. */
class TruncatedSeries {
public:
    explicit TruncatedSeries(SeriesCaps caps) : caps_(caps) {
        if (caps.n < 0) throw ParameterError("series cap N must be >= 0");
        if (caps.d && *caps.d < 0) throw ParameterError("series cap D must be >= 0");
    }

    static TruncatedSeries zero(SeriesCaps caps) { return TruncatedSeries(caps); }
    static TruncatedSeries one(SeriesCaps caps);
    /* coeff * mono * q^qdeg, truncated. */
    static TruncatedSeries term(SeriesCaps caps, int qdeg, ColorMonomial mono, Int coeff = 1);

    const SeriesCaps& caps() const { return caps_; }
    const std::map<int, ColorPolynomial>& coeffs() const { return coeffs_; }
    ColorPolynomial coeff(int qdeg) const;

    void add_term(int qdeg, const ColorMonomial& m, const Int& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.caps_ == b.caps_ && a.coeffs_ == b.coeffs_;
    }

    /* When every coefficient is constant, the dense q-coefficient list
     * (degree 0..N); otherwise nullopt. */
    std::optional<std::vector<Int>> scalar_coefficients() const;

    /* Canonical text: one line per (q-degree, monomial, coefficient),
     * q-degrees ascending, monomials in (index, overlined) lex order:
     *   q^0 : 1
     *   q^2 : 5 * c(1)^2          */
    std::string text() const;

private:
    void prune(int qdeg);

    SeriesCaps caps_;
    std::map<int, ColorPolynomial> coeffs_;
};

/* Expansion of 1 / (1 - sign * mono * q^k) at the caps.  k = 0 requires a
 * non-empty monomial and a finite color cap. */
TruncatedSeries geometric_inverse(const ColorMonomial& mono, int k, SeriesCaps caps, int sign = +1);

/* Truncated q-Pochhammer (a ; q^step)_n with a = a_poly * q^{a_qpow}:
 * the product of (1 - a q^{a_qpow + j*step}) for j = 0..n-1, n possibly
 * infinite.  step >= 1. */
TruncatedSeries pochhammer(const ColorPolynomial& a_poly, int a_qpow, int step,
                           std::optional<long long> n, SeriesCaps caps);

/* Specialization of color symbols: each color maps to itself (default),
 * to the constant 1, or to another color.  The substitution must be
 * acyclic; it is resolved transitively at construction. */
class ColorAssignment {
public:
    ColorAssignment() = default;

    static ColorAssignment all_to_one();
    void set_to_one(ColorIndex c);
    void set_to_color(ColorIndex from, ColorIndex to);

    bool is_identity() const { return !all_one_ && map_.empty(); }

    /* nullopt means the color disappears (maps to 1). */
    std::optional<ColorIndex> apply(ColorIndex c) const;
    ColorMonomial apply(const ColorMonomial& m) const;
    ColorPolynomial apply(const ColorPolynomial& p) const;
    TruncatedSeries apply(const TruncatedSeries& s) const;

    /* Parses entries like "all=1", "c3=1", "c3~=c1~", "c3=c1". */
    static ColorAssignment parse(const std::vector<std::string>& entries);

private:
    void resolve(ColorIndex from);

    bool all_one_ = false;
    std::map<ColorIndex, std::optional<ColorIndex>> map_;
};

}  // namespace schmidt

#endif
