#include <gtest/gtest.h>

#include <set>

#include "f1tits/catalog.hpp"
#include "f1tits/semiring.hpp"
#include "f1tits/tits.hpp"

using namespace f1tits;

namespace {

std::size_t weyl_order(const GroupModel& g) { return induced_weyl_law(g).size(); }

// order of the hyperoctahedral group B_m and its index-2 subgroup D_m
std::size_t type_b(std::size_t m) { return (std::size_t{1} << m) * detail::factorial(m); }
std::size_t type_d(std::size_t m) { return type_b(m) / 2; }

// vanishing pattern of a point as a set of matrix positions
std::set<std::pair<std::size_t, std::size_t>> zero_positions(const GroupModel& g, GenSet vars) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j) {
            int idx = g.entry_generator[i][j];
            if (idx < 0 ? i != j : has_gen(vars, idx)) out.insert({i, j});
        }
    return out;
}

std::size_t count_terms(const FormalSum& s) { return s.size(); }

}  // namespace

TEST(Sl, TwoByTwo) {
    auto g = sl(2);
    const auto& b = g.presentation;
    EXPECT_EQ(b.size(), 4u);
    ASSERT_EQ(b.relations.size(), 1u);
    const auto& r = b.relations[0];
    EXPECT_EQ(count_terms(r.lhs) + count_terms(r.rhs), 3u);
    EXPECT_EQ(g.expected.rank, 1u);
    EXPECT_EQ(g.expected.weyl_order, 2u);
}

TEST(Sl, ThreeByThreeLeibniz) {
    auto g = sl(3);
    const auto& b = g.presentation;
    EXPECT_EQ(b.size(), 9u);
    ASSERT_EQ(b.relations.size(), 1u);
    const auto& r = b.relations[0];
    // even products on one side, odd products plus 1 on the other
    std::size_t degree3_lhs = 0, degree3_rhs = 0;
    for (const auto& t : r.lhs.terms) degree3_lhs += t.degree() == 3;
    for (const auto& t : r.rhs.terms) degree3_rhs += t.degree() == 3;
    EXPECT_EQ(degree3_lhs, 3u);
    EXPECT_EQ(degree3_rhs, 3u);
    EXPECT_EQ(r.lhs.size() + r.rhs.size(), 7u);
}

TEST(Sl, DimensionLimits) {
    EXPECT_THROW(sl(0), InputError);
    try {
        sl(7);
        FAIL();
    } catch (const ComputationError& e) {
        EXPECT_EQ(e.kind, "cap_exceeded");
    }
}

TEST(Gl, OneIsTorus) {
    auto g = gl(1);
    auto rs = rank_space(g);
    ASSERT_EQ(rs.points.size(), 1u);
    EXPECT_EQ(*rs.rank(), 1u);
    EXPECT_EQ(weyl_order(g), 1u);
}

TEST(Gl, TwoByTwo) {
    auto g = gl(2);
    EXPECT_EQ(g.expected.rank, 2u);
    EXPECT_EQ(g.expected.weyl_order, 2u);
    auto rs = rank_space(g);
    EXPECT_EQ(*rs.rank(), 2u);
    for (const auto& p : rs.points) EXPECT_TRUE(detail::pattern_permutation(g, p.point.vars));
    EXPECT_EQ(weyl_order(g), 2u);
    EXPECT_EQ(tits_points(g, 2).count(), 8u);
}

TEST(Sp, TwoIsSl2) {
    auto a = sp(2), b = sl(2);
    auto pa = enumerate_primes(a.presentation), pb = enumerate_primes(b.presentation);
    ASSERT_EQ(pa.size(), 7u);
    std::set<std::set<std::pair<std::size_t, std::size_t>>> za, zb;
    for (const auto& p : pa) za.insert(zero_positions(a, p.vars));
    for (const auto& p : pb) zb.insert(zero_positions(b, p.vars));
    EXPECT_EQ(za, zb);
}

TEST(Sp, FourByFour) {
    auto g = sp(4);
    auto rs = rank_space(g);
    EXPECT_EQ(*rs.rank(), 2u);
    EXPECT_EQ(rs.points.size(), type_b(2));
    auto w = induced_weyl_law(rs, g.comult, g.counit, g.identity_point);
    EXPECT_EQ(w.size(), type_b(2));
    EXPECT_TRUE(is_group(w.table, w.identity));
}

TEST(Orthogonal, SmallWeylOrders) {
    EXPECT_EQ(weyl_order(so(3)), type_b(1));
    EXPECT_EQ(weyl_order(o_even(4)), type_b(2));
    EXPECT_EQ(weyl_order(so(4)), type_d(2));
    EXPECT_EQ(rank_space(o_even(4)).points.size(), type_b(2));
    EXPECT_EQ(rank_space(so(4)).points.size(), type_d(2));
}

TEST(Orthogonal, EvenSelectionClosesUnderLaw) {
    auto g = so(4);
    auto w = induced_weyl_law(g);
    EXPECT_TRUE(is_group(w.table, w.identity));
    for (const auto& e : w.elements) {
        auto p = detail::pattern_permutation(g, e.point.vars);
        ASSERT_TRUE(p);
        EXPECT_EQ(p->sign, 1);
    }
}

TEST(Catalog, SubgroupRankPointsAreMonomialPatterns) {
    for (const auto& g : {sp(4), so(3), so(4), o_even(4)}) {
        auto rs = rank_space(g);
        for (const auto& p : rs.points) EXPECT_TRUE(detail::pattern_permutation(g, p.point.vars)) << g.name;
    }
}

TEST(Catalog, ExpectedMetadataMatches) {
    for (const auto& g : {sl(2), sl(3), gl(2), gl(3), sp(2), sp(4), so(3), so(4), o_even(4), torus(2),
                          nonstandard_torus(), psl2_conj(), psl2_adjoint(), constant_group(cyclic_group(2)),
                          standard_parabolic(3, {2, 1}), levi(3, {2, 1}), unipotent_radical(3, {1, 1, 1})}) {
        auto rs = rank_space(g);
        auto w = induced_weyl_law(rs, g.comult, g.counit, g.identity_point);
        if (g.expected.rank) { EXPECT_EQ(rs.rank(), g.expected.rank) << g.name; }
        if (g.expected.weyl_order) { EXPECT_EQ(w.size(), *g.expected.weyl_order) << g.name; }
        EXPECT_GE(w.identity, 0) << g.name;
        if (g.counit) {
            GenSet vanishing = g.presentation.all_generators() & ~*g.counit;
            EXPECT_EQ(w.elements[w.identity].point.vars, vanishing) << g.name;
        }
    }
}

TEST(Torus, RankTwo) {
    auto g = torus(2);
    EXPECT_EQ(*rank_space(g).rank(), 2u);
    EXPECT_EQ(weyl_order(g), 1u);
    EXPECT_THROW(torus(17), ComputationError);
}

TEST(ConstantGroup, CyclicTwoIsNotTitsWeyl) {
    auto g = constant_group(cyclic_group(2));
    auto rs = rank_space(g);
    EXPECT_EQ(rs.points.size(), 2u);
    auto w = induced_weyl_law(rs, g.comult, g.counit, g.identity_point);
    ASSERT_EQ(w.size(), 2u);
    EXPECT_TRUE(is_group(w.table, w.identity));
    ASSERT_TRUE(g.tits_weyl);
    EXPECT_FALSE(*g.tits_weyl);
}

TEST(Semidirect, InversionActionIsTitsWeyl) {
    auto g = semidirect(1, cyclic_group(2), {{{1}}, {{-1}}});
    ASSERT_TRUE(g.tits_weyl);
    EXPECT_TRUE(*g.tits_weyl);
    auto w = induced_weyl_law(g);
    EXPECT_EQ(w.size(), 2u);
    EXPECT_TRUE(is_group(w.table, w.identity));
}

TEST(Semidirect, MalformedTable) {
    GroupTable t;
    t.elements = {"a", "b"};
    t.product = {{0, 0}, {0, 0}};
    EXPECT_THROW(constant_group(t), InputError);
    EXPECT_THROW(semidirect(1, cyclic_group(2), {{{1}}}), InputError);
}

TEST(NonstandardTorus, TwoPointsAndNoF1Points) {
    auto g = nonstandard_torus();
    auto pts = enumerate_primes(g.presentation);
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_EQ(pts[0].vars | pts[1].vars, gen_bit(g.presentation.index_of("S")));
    auto rs = rank_space(g);
    ASSERT_EQ(rs.points.size(), 1u);
    EXPECT_EQ(rs.points[0].point.vars, 0u);
    EXPECT_EQ(rs.points[0].field.free_rank, 1u);
    EXPECT_TRUE(f1_points(g.presentation).empty());
}

TEST(Psl2, ConjugationModel) {
    auto g = psl2_conj();
    ASSERT_TRUE(g.declared);
    auto P = poset(g.declared->points);
    auto Q = poset(enumerate_primes(sl(2).presentation));
    EXPECT_EQ(P.points.size(), 7u);
    EXPECT_EQ(P.hasse.size(), Q.hasse.size());
    auto rs = rank_space(g);
    EXPECT_EQ(rs.points.size(), 2u);
    for (const auto& p : rs.points) EXPECT_EQ(p.rank, 1u);
}

TEST(Psl2, AdjointModelLabels) {
    auto g = psl2_adjoint();
    ASSERT_TRUE(g.declared);
    std::set<std::string> labels(g.declared->labels.begin(), g.declared->labels.end());
    std::set<std::string> expected{"p^e", "p^s", "x1", "x1'", "x2", "x2'", "x3", "x3'", "x4", "x4'", "x5", "eta", "eta'"};
    EXPECT_EQ(labels, expected);
    auto rs = rank_space(g);
    EXPECT_EQ(rs.points.size(), 2u);
    for (const auto& p : rs.points) EXPECT_EQ(p.rank, 1u);
    EXPECT_EQ(weyl_order(g), 2u);
}

TEST(Psl2, RankFieldsFromParametrization) {
    // a diagonal torus lambda -> diag(lambda, lambda^-1) acting by conjugation
    // scales the off-diagonal entries by lambda^2 and lambda^-2
    auto f = field_from_parametrization({"a", "d"}, {0, 0}, {{1}, {-1}}, 1);
    EXPECT_EQ(f.free_rank, 1u);
    EXPECT_EQ(f.epsilon, 1);
    auto h = field_from_parametrization({"b", "c"}, {0, 1}, {{1}, {-1}}, 1);
    EXPECT_EQ(h.free_rank, 1u);
    EXPECT_EQ(h.epsilon, 2);
}

TEST(Parabolic, BorelOfGl2) {
    auto g = standard_parabolic(2, {1, 1});
    auto rs = rank_space(g);
    ASSERT_EQ(rs.points.size(), 1u);
    EXPECT_EQ(weyl_order(g), 1u);
}

TEST(Parabolic, FullFlagIsGl) {
    auto p = standard_parabolic(3, {3});
    auto g = gl(3);
    EXPECT_EQ(enumerate_primes(p.presentation).size(), enumerate_primes(g.presentation).size());
    EXPECT_EQ(weyl_order(p), weyl_order(g));
}

TEST(Parabolic, LeviOfTwoOne) {
    auto g = levi(3, {2, 1});
    EXPECT_EQ(weyl_order(g), 2u);
    EXPECT_EQ(*rank_space(g).rank(), 3u);
}

TEST(Parabolic, FlagParsing) {
    EXPECT_EQ(parse_flag("2,1", 3), (std::vector<std::size_t>{2, 1}));
    EXPECT_THROW(parse_flag("2,2", 3), InputError);
    EXPECT_THROW(parse_flag("a", 3), InputError);
}

TEST(Unipotent, BorelOfGl3IsAffineSpace) {
    auto g = unipotent_radical(3, {1, 1, 1});
    EXPECT_EQ(g.presentation.size(), 3u);
    EXPECT_TRUE(g.presentation.relations.empty());
    EXPECT_EQ(g.presentation.inverted, 0u);
    auto res = pseudo_hopf_points(g.presentation);
    int certified = 0;
    for (const auto& r : res) certified += r.status == HopfStatus::certified;
    EXPECT_EQ(certified, 1);
    EXPECT_EQ(enumerate_primes(g.presentation).size(), 8u);
}

TEST(Product, ModelOfTwoTori) {
    auto g = product_model(torus(1), torus(2));
    EXPECT_EQ(g.presentation.size(), torus(1).presentation.size() + torus(2).presentation.size());
    EXPECT_EQ(*rank_space(g).rank(), 3u);
    EXPECT_EQ(weyl_order(g), 1u);
}
