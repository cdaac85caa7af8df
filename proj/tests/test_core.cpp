#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schmidt/oracle.hpp"
#include "schmidt/part_seq.hpp"

using namespace schmidt;

namespace {
PartValue P(long long k) { return PartValue::plain(k); }
PartValue O(long long k) { return PartValue::over(k); }
PartSeq seq(std::vector<PartValue> v) { return PartSeq(std::move(v)); }
OverPartition op(std::vector<PartValue> v) { return OverPartition(std::move(v)); }
}  // namespace

TEST_CASE("part value order: 0 < 1~ < 1 < 2~ < 2 < ...") {
    CHECK(cmp(P(0), O(1)) == Ordering::less);
    CHECK(cmp(O(2), P(2)) == Ordering::less);
    CHECK(cmp(P(3), P(3)) == Ordering::equal);
    CHECK(P(1) < O(2));
    CHECK(O(1) < P(1));
    CHECK_THROWS_AS(PartValue(0, true), ValidationError);
    CHECK_THROWS_AS(PartValue(-1, false), ValidationError);
}

TEST_CASE("differences are size differences") {
    CHECK(diff(P(3), O(3)) == 0);
    CHECK(P(3) > O(3));  // i - i~ = 0 but i > i~
    CHECK(diff(O(5), P(2)) == 3);
    CHECK(diff(P(0), P(4)) == -4);
}

TEST_CASE("part sequence invariants") {
    CHECK_NOTHROW(seq({P(2), P(4), O(4), O(2), P(3), O(1)}));
    // per-size over-line at most once
    CHECK_THROWS_AS(seq({O(2), O(2)}), ValidationError);
    // over-lined copy after every plain one
    CHECK_THROWS_AS(seq({O(2), P(2)}), ValidationError);
    // internal zeros are fine (Figure 1's mu has one)
    CHECK_NOTHROW(seq({O(4), P(5), P(6), P(3), P(0), O(5), O(1), P(3)}));
    // trailing zeros trim
    CHECK(seq({P(2), P(0), P(0)}).support() == 1);
    CHECK(seq({}) == seq({P(0)}));
}

TEST_CASE("over-partitions are non-increasing") {
    CHECK_NOTHROW(op({P(4), O(4), O(3), P(2), O(2), O(1)}));
    CHECK_THROWS_AS(op({O(2), P(2)}), ValidationError);  // 2~ < 2
    CHECK_NOTHROW(op({P(2), O(2)}));
    CHECK_THROWS_AS(op({P(1), P(2)}), ValidationError);
}

TEST_CASE("conjugate of the paper's example pair") {
    // As printed, lambda's fifth part is a plain 3 and the conjugate
    // differs from mu's in the over-line of its third part.
    CHECK(conjugate(seq({P(2), P(4), O(4), O(2), P(3), O(1)})) ==
          op({O(6), O(5), P(3), O(2)}));
    // With the evidently intended 3~ both conjugates agree.
    CHECK(conjugate(seq({P(2), P(4), O(4), O(2), O(3), O(1)})) ==
          op({O(6), O(5), O(3), O(2)}));
    CHECK(conjugate(seq({P(4), O(4), O(3), P(2), O(2), O(1)})) ==
          op({O(6), O(5), O(3), O(2)}));
    CHECK(conjugate(seq({})) == op({}));
}

TEST_CASE("weights") {
    CHECK(weight(seq({P(2), P(4), O(4), O(2), P(3), O(1)})) == 16);
    CHECK(weight(seq({})) == 0);
    CHECK(weight(seq({O(5)})) == 5);
}

TEST_CASE("S-weight") {
    IndexSet odds = IndexSet::odds();
    // Figure 2's marked rows
    CHECK(s_weight(seq({P(6), P(5), O(5), O(4), P(3), P(3), O(1)}), odds) == 15);
    PartSeq lam({P(4), P(3), P(2), P(1)});
    CHECK(s_weight(lam, IndexSet::all()) == weight(lam));
    CHECK(s_weight(seq({P(3)}), IndexSet::from_list({2, 3, 4})) == 0);
}

TEST_CASE("S-greatest-integer function") {
    IndexSet odds = IndexSet::odds();
    CHECK(s_floor(P(5), odds) == 3);
    CHECK(s_floor(O(5), odds) == 3);
    CHECK(s_floor(P(0), odds) == 0);
    CHECK(s_floor(P(0), IndexSet::tri1()) == 0);
    // monotone, over-line-blind
    for (long long a = 0; a <= 12; ++a)
        for (long long b = a; b <= 12; ++b) {
            CHECK(s_floor(P(a), odds) <= s_floor(P(b), odds));
            if (a >= 1) CHECK(s_floor(O(a), odds) == s_floor(P(a), odds));
        }
}

TEST_CASE("index set builtins") {
    CHECK(IndexSet::odds().element(3) == 5);
    CHECK(IndexSet::tri1().element(5) == 11);   // 1,2,4,7,11
    CHECK(IndexSet::tri().element(4) == 10);    // 1,3,6,10
    CHECK(IndexSet::squares().element(4) == 16);
    CHECK(IndexSet::fib().element(5) == 8);     // 1,2,3,5,8
    CHECK(IndexSet::pow2().element(5) == 16);   // 1,2,4,8,16
    CHECK(IndexSet::all().count_leq(7) == 7);
    CHECK(IndexSet::parse("modm:m=3,t=2,s=1,2").element(4) == 5);  // 1,2,4,5,7,8
    CHECK_THROWS_AS(IndexSet::from_list({1, 2, 3}).element(4), ExhaustedError);
    CHECK_THROWS_AS(IndexSet::from_list({1, 2, 3}).count_leq(5), ExhaustedError);
    CHECK(IndexSet::from_list({1, 2, 5}).count_leq(4) == 2);
    CHECK_THROWS_AS(IndexSet::from_list({2, 2}).element(2), ValidationError);
    CHECK_THROWS_AS(ModMShape(3, 2, {2, 1}), ParameterError);
    CHECK_THROWS_AS(ModMShape(3, 2, {1, 4}), ParameterError);
}

TEST_CASE("mod-m index sets satisfy s_{u+t} = s_u + m") {
    ModMShape shape(5, 3, {1, 3, 4});
    IndexSet S = IndexSet::mod_m(shape);
    for (int u = 1; u <= 12; ++u) CHECK(S.element(u + 3) == S.element(u) + 5);
}

TEST_CASE("family membership") {
    CHECK(is_member(seq({P(4), O(4), O(3), P(2), O(2), O(1)}), FamilyTag::ovf()));
    CHECK_FALSE(is_member(seq({P(4), O(4), O(3), P(2), O(2), O(1)}), FamilyTag::ovd()));
    CHECK(is_member(seq({O(4), O(2), O(1)}), FamilyTag::ovd()));
    CHECK_FALSE(is_member(seq({O(4), O(2), O(1)}), FamilyTag::ovf()));
    CHECK(is_member(seq({P(4), P(4), P(3)}), FamilyTag::p()));
    CHECK_FALSE(is_member(seq({P(2), P(4)}), FamilyTag::ovp()));  // not sorted
    for (auto f : {FamilyTag::ovp(), FamilyTag::p(), FamilyTag::ovd(), FamilyTag::ovf(),
                   FamilyTag::ovp_m(2), FamilyTag::p_m(2), FamilyTag::ovf_m(2)})
        CHECK(is_member(seq({}), f));
    // fewer than m plain occurrences
    CHECK(is_member(seq({P(2), P(2), O(2)}), FamilyTag::ovp_m(3)));
    CHECK_FALSE(is_member(seq({P(2), P(2), O(2)}), FamilyTag::ovp_m(2)));
    CHECK(is_member(seq({P(2), O(2), P(1)}), FamilyTag::ovp_m(2)));
}

TEST_CASE("the two F-bar characterizations agree") {
    // i~ in lambda for all i~ <= lambda_1 iff every step is
    // chi(over-lined); checked exhaustively at small weight.
    enum_family_by_weight(FamilyTag::ovp(), 12, [&](const OverPartition& l) {
        bool flat = true;
        for (long long i = 1; i <= l.support(); ++i)
            if (diff(l.at(i), l.at(i + 1)) != (l.at(i).overlined() ? 1 : 0)) flat = false;
        CHECK(flat == is_member(l, FamilyTag::ovf()));
    });
}

TEST_CASE("rho statistics") {
    auto st = rho_stats(op({}), 3);
    for (auto v : st.rho) CHECK(v == 0);
    for (auto v : st.rho_bar) CHECK(v == 0);
    st = rho_stats(op({P(2), P(1)}), 2);
    CHECK(st.rho == std::vector<long long>{1, 1});
    CHECK(st.rho_bar == std::vector<long long>{0, 0});
    st = rho_stats(op({O(2), P(1)}), 2);
    CHECK(st.rho == std::vector<long long>{0, 1});
    CHECK(st.rho_bar == std::vector<long long>{1, 0});
}

TEST_CASE("theta statistics") {
    auto st = theta_stats(op({}), 3, 2);
    CHECK((st.theta1 == 0 && st.theta2 == 0 && st.theta3 == 0 && st.theta4 == 0));
    st = theta_stats(op({P(3), P(2), P(1)}), 3, 2);
    CHECK(st.theta1 == 1);
    CHECK(st.theta2 == 1);
    CHECK(st.theta3 == 1);
    CHECK(st.theta4 == 0);
    st = theta_stats(op({O(1)}), 1, 1);
    CHECK(st.theta4 == 1);
}

TEST_CASE("conjugation is a weight-preserving involution (small exhaustive)") {
    long long count = 0;
    enum_family_by_weight(FamilyTag::ovp(), 12, [&](const OverPartition& l) {
        ++count;
        OverPartition c = conjugate(l);
        CHECK(weight(c) == weight(l));
        CHECK(conjugate(c) == l);
    });
    CHECK(count > 1000);
}

TEST_CASE("gap identities (7)/(8)") {
    enum_family_by_weight(FamilyTag::ovp(), 10, [&](const OverPartition& l) {
        OverPartition c = conjugate(l);
        for (long long i = 1; i <= weight(l) + 1; ++i) {
            long long occ = 0;
            for (const PartValue& v : c.parts())
                if (v.size() == i) ++occ;
            CHECK(occ == diff(l.at(i), l.at(i + 1)));
            CHECK(c.seq().contains_over(i) == l.at(i).overlined());
        }
    });
}

TEST_CASE("mod-m conjugate images (Lemma 3.4)") {
    for (int m : {2, 3}) {
        enum_family_by_weight(FamilyTag::ovp(), 14, [&](const OverPartition& l) {
            OverPartition c = conjugate(l);
            bool bounded_bar = true, bounded = true, nonmult_over = true;
            for (long long i = 1; i <= c.support(); ++i) {
                long long d = diff(c.at(i), c.at(i + 1));
                if (d > m - 1 + (c.at(i).overlined() ? 1 : 0)) bounded_bar = false;
                if (d > m - 1) bounded = false;
            }
            for (const PartValue& v : c.parts())
                if (v.size() % m != 0 && !v.overlined()) nonmult_over = false;
            CHECK(is_member(l, FamilyTag::ovp_m(m)) == bounded_bar);
            CHECK(is_member(l, FamilyTag::p_m(m)) ==
                  (bounded && is_member(c.seq(), FamilyTag::p())));
            CHECK(is_member(l, FamilyTag::ovf_m(m)) == (bounded_bar && nonmult_over));
        });
    }
}

TEST_CASE("text forms") {
    CHECK(to_text(seq({P(3), O(2), P(1)})) == "(3,2~,1)");
    CHECK(to_text(seq({})) == "()");
    CHECK(to_text(O(7)) == "7~");
}
