#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "schmidt/grounded.hpp"
#include "schmidt/oracle.hpp"

using namespace schmidt;

namespace {
ColorIndex c0 = ColorIndex::c0();
ColorIndex cp(long long i) { return ColorIndex::plain(i); }
ColorIndex co(long long i) { return ColorIndex::over(i); }
}  // namespace

TEST_CASE("epsilon function and matrix") {
    EpsilonContext ctx(3);
    // color order: c0 < c1~ < c1 < c2~ < c2 < c3~
    CHECK(ctx.colors().size() == 6);
    CHECK(ctx.epsilon(c0, c0) == 0);
    for (ColorIndex c : ctx.colors()) {
        if (c == c0) continue;
        CHECK(ctx.epsilon(c, c0) == 0);
        CHECK(ctx.epsilon(c0, c) == 1);
        CHECK(ctx.epsilon(c, c) == (c.overlined() ? 1 : 0));
    }
    // antisymmetry off the diagonal
    for (ColorIndex a : ctx.colors())
        for (ColorIndex b : ctx.colors())
            if (!(a == b)) CHECK(ctx.epsilon(a, b) + ctx.epsilon(b, a) == 1);
    // the displayed matrix rows for m = 3 (order c0,c1~,c1,c2~,c2,c3~)
    int expect[6][6] = {
        {0, 1, 1, 1, 1, 1},  // c0
        {0, 1, 1, 1, 1, 1},  // c1~
        {0, 0, 0, 1, 1, 1},  // c1
        {0, 0, 0, 1, 1, 1},  // c2~
        {0, 0, 0, 0, 0, 1},  // c2
        {0, 0, 0, 0, 0, 1},  // c3~
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(ctx.epsilon(ctx.colors()[static_cast<size_t>(i)],
                              ctx.colors()[static_cast<size_t>(j)]) == expect[i][j]);
    CHECK_THROWS_AS(ctx.epsilon(cp(3), c0), ParameterError);  // plain c_m not in the palette
}

TEST_CASE("the induced order chain of section 3.1") {
    // ... >> 1_{c0} >> 1_{c0} >> 0_{cm~} >> 0_{c_{m-1}} >> 0_{c_{m-1}} >> ... >> 0_{c1~} >> ground
    int m = 3;
    EpsilonContext ctx(m);
    std::vector<GroundedPart> chain;
    chain.push_back({1, c0});
    chain.push_back({1, c0});
    chain.push_back({0, co(m)});
    for (int i = m - 1; i >= 1; --i) {
        chain.push_back({0, cp(i)});
        chain.push_back({0, cp(i)});
        chain.push_back({0, co(i)});
    }
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        long long d = chain[i].size - chain[i + 1].size;
        CHECK(d >= ctx.epsilon(chain[i].color, chain[i + 1].color));
    }
    // and onto the ground
    CHECK(chain.back().size - 0 >= ctx.epsilon(chain.back().color, c0));
    // over-lined zero parts cannot repeat
    CHECK(ctx.epsilon(co(1), co(1)) == 1);
}

TEST_CASE("flat and regular predicates") {
    EpsilonContext ctx(2);
    CHECK(is_flat(GroundedPartition({}), ctx));
    CHECK(is_regular(GroundedPartition({}), ctx));
    GroundedPartition g1({{1, co(1)}, {0, co(1)}});
    CHECK(is_flat(g1, ctx));
    CHECK(is_regular(g1, ctx));
    GroundedPartition g2({{1, c0}});
    CHECK_FALSE(is_flat(g2, ctx));    // 1 - 0 != eps(c0, c0) = 0
    CHECK_FALSE(is_regular(g2, ctx)); // internal c0
    CHECK_FALSE(is_flat(GroundedPartition({{0, c0}}), ctx));  // pi_{s-1} = ground
    CHECK(is_regular(GroundedPartition({{0, co(1)}}), ctx));
    // a c0-colored internal part with positive size is fine for flat
    GroundedPartition g3({{1, c0}, {0, cp(1)}});
    CHECK(is_flat(g3, ctx));  // 1-0 = eps(c0,c1) = 1, 0-0 = eps(c1,c0) = 0
    CHECK_FALSE(is_regular(g3, ctx));
}

TEST_CASE("enumeration agrees with the predicates (m = 2, small)") {
    EpsilonContext ctx(2);
    long long flats = 0, regulars = 0;
    enumerate_grounded(GroundedKind::Flat, ctx, 4, 4, [&](const GroundedPartition& gp) {
        CHECK(is_flat(gp, ctx));
        ++flats;
    });
    enumerate_grounded(GroundedKind::Regular, ctx, 4, 4, [&](const GroundedPartition& gp) {
        CHECK(is_regular(gp, ctx));
        ++regulars;
    });
    CHECK(flats > 10);
    CHECK(regulars > 10);
}

TEST_CASE("Theorem 3.2: flat and regular counts agree per weight and content") {
    for (int m : {1, 2, 3}) {
        EpsilonContext ctx(m);
        long long W = (m == 3) ? 5 : 6, C = 5;
        std::map<std::pair<long long, std::string>, long long> flat, regular;
        enumerate_grounded(GroundedKind::Flat, ctx, W, C, [&](const GroundedPartition& gp) {
            flat[{gp.weight(), gp.content(true).text()}]++;
        });
        enumerate_grounded(GroundedKind::Regular, ctx, W, C, [&](const GroundedPartition& gp) {
            regular[{gp.weight(), gp.content(false).text()}]++;
        });
        CHECK(flat == regular);
    }
}

TEST_CASE("alpha_S on the ground and spec rows") {
    ModMShape even(2, 1, {2});  // S = {2, 4, 6, ...}
    CHECK(alpha_S(GroundedPartition({}), even) == ColoredSeq({}, IndexSet::mod_m(even)));
    // j_{c_i} with i=1 < s_1=2 maps to size jt: 1_{c_1} -> size 1
    ColoredSeq img = alpha_S(GroundedPartition({{1, cp(1)}}), even);
    CHECK(img.parts().size() == 1);
    CHECK(img.parts()[0].size == 1);
    CHECK(img.parts()[0].color == cp(3));  // underlying index 1 + 1*2 = 3
    CHECK(normalize_mod_m(img.monomial(), 2) == ColorMonomial::color(cp(1)));
    CHECK_THROWS_AS(alpha_S(GroundedPartition({{1, cp(5)}}), even), ParameterError);
}

TEST_CASE("alpha_S transports weight and colors by the substitution table") {
    // |alpha(pi)| = t*|pi| + sum of v-classes of the internal colors, and
    // the normalized monomial is the content.
    for (auto shape : {ModMShape(2, 1, {1}), ModMShape(3, 2, {1, 2}), ModMShape(2, 1, {2})}) {
        EpsilonContext ctx(shape.m);
        enumerate_grounded(GroundedKind::Regular, ctx, 4, 4, [&](const GroundedPartition& gp) {
            ColoredSeq img = alpha_S(gp, shape);
            long long expect = shape.t * gp.weight();
            for (const GroundedPart& p : gp.internal())
                expect += shape.v_class(p.color.index());
            CHECK(img.colored_weight() == expect);
            CHECK(normalize_mod_m(img.monomial(), shape.m) == gp.content(false));
            CHECK(colored_family_of(img).ovp);
        });
        // flat images land in colored over-partitions as well
        enumerate_grounded(GroundedKind::Flat, ctx, 4, 4, [&](const GroundedPartition& gp) {
            CHECK(colored_family_of(alpha_S(gp, shape)).ovp);
        });
    }
}

TEST_CASE("alpha_S at m = t = 1 collapses to the colorless case") {
    // With S = Z>=1 the only colors are c0 and c1~, regular grounded
    // partitions are the strictly decreasing chains, and alpha maps them
    // onto the over-partitions with every positive part over-lined.
    ModMShape triv(1, 1, {1});
    EpsilonContext ctx(1);
    std::map<long long, long long> by_weight;
    enumerate_grounded(GroundedKind::Regular, ctx, 6, 8, [&](const GroundedPartition& gp) {
        ColoredSeq img = alpha_S(gp, triv);
        CHECK(is_member(img.index_seq(), FamilyTag::ovd()));
        if (img.colored_weight() <= 4) ++by_weight[img.colored_weight()];
    });
    // members of D-bar by weight: 1, 1, 1, 2, 2
    std::map<long long, long long> expect;
    enum_family_by_weight(FamilyTag::ovd(), 4,
                          [&](const OverPartition& l) { ++expect[weight(l)]; });
    CHECK(by_weight == expect);
}
