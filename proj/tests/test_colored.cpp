#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "schmidt/colored.hpp"
#include "schmidt/oracle.hpp"

using namespace schmidt;

namespace {
PartValue P(long long k) { return PartValue::plain(k); }
PartValue O(long long k) { return PartValue::over(k); }
ColorIndex cp(long long i) { return ColorIndex::plain(i); }
ColorIndex co(long long i) { return ColorIndex::over(i); }
ColorMonomial mono(std::initializer_list<ColorIndex> cs) {
    ColorMonomial m;
    for (ColorIndex c : cs) m *= ColorMonomial::color(c);
    return m;
}
}  // namespace

TEST_CASE("color monomials are canonical") {
    ColorMonomial a = mono({cp(2), co(1), cp(2)});
    CHECK(a.text() == "c(1~)*c(2)^2");
    CHECK(a.total_degree() == 3);
    CHECK(mono({}).is_one());
    CHECK(mono({co(3), cp(1)}) == mono({cp(1), co(3)}));
    CHECK(a.pow(2).total_degree() == 6);
    CHECK(a.pow(0).is_one());
    CHECK_THROWS_AS(ColorMonomial::color(ColorIndex::c0()), ValidationError);
}

TEST_CASE("mod-m normalization identifies c_{i+jm} with c_i") {
    ColorMonomial a = mono({cp(5), co(4), cp(2)});
    CHECK(normalize_mod_m(a, 3) == mono({cp(2), co(1), cp(2)}));
    CHECK(normalize_mod_m(mono({cp(3), co(3)}), 3) == mono({cp(3), co(3)}));  // m stays m
}

TEST_CASE("color sequence C(lambda)") {
    CHECK(color_sequence(PartSeq({})).is_one());
    // conjugate of the printed example is (6~,5~,3,2~); with the intended
    // 3~ in lambda it is (6~,5~,3~,2~)
    CHECK(color_sequence(PartSeq({P(2), P(4), O(4), O(2), P(3), O(1)})) ==
          mono({co(6), co(5), cp(3), co(2)}));
    CHECK(color_sequence(PartSeq({P(2), P(4), O(4), O(2), O(3), O(1)})) ==
          mono({co(6), co(5), co(3), co(2)}));
    CHECK(color_sequence(PartSeq({P(1)})) == mono({cp(1)}));
}

TEST_CASE("colored part validity") {
    IndexSet odds = IndexSet::odds();
    CHECK_NOTHROW(ColoredSeq({{2, cp(3)}, {1, cp(1)}}, odds));
    CHECK_THROWS_AS(ColoredSeq({{1, cp(3)}}, odds), ValidationError);   // floor(3) = 2
    CHECK_THROWS_AS(ColoredSeq({{1, ColorIndex::c0()}}, odds), ValidationError);
    // paper example: color c_j only on integers floor(j); c8 colors 4
    CHECK_NOTHROW(ColoredSeq({{4, cp(8)}, {4, cp(8)}, {4, co(8)}, {3, co(5)}, {2, cp(4)},
                              {1, cp(1)}, {1, cp(1)}, {1, co(1)}},
                             odds));
    // ...but the over-lined copy must come after the plain ones
    CHECK_THROWS_AS(ColoredSeq({{4, cp(8)}, {4, co(8)}, {4, cp(8)}}, odds), ValidationError);
    CHECK_THROWS_AS(ColoredSeq({{1, co(1)}, {1, co(1)}}, odds), ValidationError);
}

TEST_CASE("psi_S") {
    IndexSet odds = IndexSet::odds();
    CHECK(psi_S(OverPartition({P(3), P(1)}), odds) ==
          ColoredSeq({{2, cp(3)}, {1, cp(1)}}, odds));
    CHECK(psi_S(OverPartition({}), odds) == ColoredSeq({}, odds));
    CHECK(psi_S(OverPartition({O(2)}), odds) == ColoredSeq({{1, co(2)}}, odds));
}

TEST_CASE("phi_S on the spec examples") {
    IndexSet odds = IndexSet::odds();
    OverPartition lam({P(4), P(3), P(1)});
    ColoredSeq mu = phi_S(lam, odds);
    CHECK(mu == ColoredSeq({{2, cp(3)}, {1, cp(2)}, {1, cp(2)}, {1, cp(1)}}, odds));
    CHECK(mu.colored_weight() == 5);
    CHECK(mu.colored_weight() == s_weight(lam, odds));
    CHECK(phi_S(OverPartition({}), odds) == ColoredSeq({}, odds));
    ColoredSeq mu2 = phi_S(OverPartition({O(2), P(1)}), odds);
    CHECK(mu2 == ColoredSeq({{1, cp(2)}, {1, co(1)}}, odds));
    CHECK(mu2.colored_weight() == 2);
}

TEST_CASE("phi_S inverse") {
    IndexSet odds = IndexSet::odds();
    CHECK(phi_S_inverse(ColoredSeq({{2, cp(3)}, {1, cp(2)}, {1, cp(2)}, {1, cp(1)}}, odds)) ==
          OverPartition({P(4), P(3), P(1)}));
    CHECK(phi_S_inverse(ColoredSeq({}, odds)) == OverPartition({}));
    CHECK(phi_S_inverse(ColoredSeq({{1, cp(2)}, {1, co(1)}}, odds)) ==
          OverPartition({O(2), P(1)}));
}

TEST_CASE("colored family classification") {
    IndexSet odds = IndexSet::odds();
    ColoredFamilies f = colored_family_of(ColoredSeq({}, odds));
    CHECK((f.ovp && f.p && f.ovd && f.ovf));
    // image of an F-bar member lies in D-bar_C^S, and of a partition in P_C^S
    enum_family_by_weight(FamilyTag::ovp(), 8, [&](const OverPartition& l) {
        ColoredFamilies fams = colored_family_of(phi_S(l, odds));
        if (is_member(l, FamilyTag::ovf())) CHECK(fams.ovd);
        if (is_member(l, FamilyTag::p())) CHECK(fams.p);
        if (is_member(l, FamilyTag::ovd())) CHECK(fams.ovf);
        CHECK(fams.ovp);
    });
}

TEST_CASE("phi_S is a statistic-preserving bijection at small caps") {
    for (IndexSet S : {IndexSet::odds(), IndexSet::tri1()}) {
        std::set<std::string> images;
        long long total = 0;
        enum_family_by_s_weight(FamilyTag::ovp(), S, 8, 8, [&](const OverPartition& l) {
            ColoredSeq mu = phi_S(l, S);
            CHECK(mu.colored_weight() == s_weight(l, S));
            CHECK(mu.monomial() == color_sequence(l));
            CHECK(phi_S_inverse(mu) == l);
            CHECK(images.insert(to_text(mu)).second);
            ++total;
        });
        CHECK(total == static_cast<long long>(images.size()));
    }
}

TEST_CASE("rho-to-color correspondence") {
    // C(lambda) with indices reduced mod m equals the rho monomial
    for (int m : {2, 3}) {
        enum_family_by_weight(FamilyTag::ovp(), 10, [&](const OverPartition& l) {
            RhoStats st = rho_stats(l, m);
            ColorMonomial expect;
            for (int j = 1; j <= m; ++j) {
                if (st.rho[static_cast<size_t>(j - 1)] > 0)
                    expect *= ColorMonomial::color(cp(j)).pow(
                        static_cast<int>(st.rho[static_cast<size_t>(j - 1)]));
                if (st.rho_bar[static_cast<size_t>(j - 1)] > 0)
                    expect *= ColorMonomial::color(co(j)).pow(
                        static_cast<int>(st.rho_bar[static_cast<size_t>(j - 1)]));
            }
            CHECK(normalize_mod_m(color_sequence(l), m) == expect);
        });
    }
}

TEST_CASE("mod-m color check accepts every Phi image") {
    ModMShape shape(3, 2, {1, 2});
    IndexSet S = IndexSet::mod_m(shape);
    enum_family_by_s_weight(FamilyTag::ovp(), S, 6, 4, [&](const OverPartition& l) {
        CHECK(mod_m_color_check(phi_S(l, S), shape));
    });
    CHECK(mod_m_color_check(ColoredSeq({}, S), shape));
}

TEST_CASE("mod-m color check rejects size/class mismatches") {
    // with s_t = 2 < m = 3, color c_m only attaches to sizes jt + t, so a
    // size-1 part colored c_3 is illegal (it would force size t = 2)
    ModMShape shape(3, 2, {1, 2});
    CHECK_FALSE(mod_m_color_check(std::vector<ColoredPart>{{1, cp(3)}}, shape));
    CHECK(mod_m_color_check(std::vector<ColoredPart>{{2, cp(3)}}, shape));
    CHECK(mod_m_color_check(std::vector<ColoredPart>{{4, co(3)}}, shape));
    // residue 1 lives on sizes congruent to 1 mod t
    CHECK(mod_m_color_check(std::vector<ColoredPart>{{5, cp(7)}}, shape));
    CHECK_FALSE(mod_m_color_check(std::vector<ColoredPart>{{2, cp(1)}}, shape));
}

TEST_CASE("text forms") {
    IndexSet odds = IndexSet::odds();
    CHECK(to_text(ColoredSeq({{2, cp(3)}, {1, co(1)}}, odds)) == "(2@c(3),1@c(1~))");
    CHECK(to_text(ColorIndex::c0()) == "c0");
}
