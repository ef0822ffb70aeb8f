#include <gtest/gtest.h>

#include <random>

#include "f1tits/blue_field.hpp"
#include "f1tits/catalog.hpp"
#include "f1tits/expr.hpp"
#include "f1tits/spectrum.hpp"

using namespace f1tits;

namespace {

const std::vector<long long> kSmallPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

UnitTerm constant(int sign = 0, std::size_t n = 0) { return {std::vector<long long>(n, 0), sign}; }

// value of a constant side in Z, with -1 for sign 1
long long side_value(const std::vector<UnitTerm>& side) {
    long long v = 0;
    for (const auto& t : side) v += t.sign ? -1 : 1;
    return v;
}

// characteristic p holds for a constant system iff every relation holds in F_p
// (p = 0: in Z; p = 1: in B1, which requires coefficients without -1)
bool constant_system_holds(const UnitSystem& u, long long p) {
    for (const auto& r : u.relations) {
        if (p == 1) {
            if (u.coeff_order == 2) return false;
            if (r.lhs.empty() != r.rhs.empty()) return false;
            continue;
        }
        long long d = side_value(r.lhs) - side_value(r.rhs);
        if (p == 0 ? d != 0 : d % p != 0) return false;
    }
    if (u.coeff_order == 2 && p == 1) return false;
    return true;
}

UnitSystem random_constant_system(std::mt19937_64& rng) {
    UnitSystem u;
    u.coeff_order = 1 + rng() % 2;
    std::size_t rels = 1 + rng() % 2;
    for (std::size_t k = 0; k < rels; ++k) {
        UnitRelation r;
        std::size_t l = rng() % 5, rr = rng() % 5;
        for (std::size_t i = 0; i < l; ++i) r.lhs.push_back(constant(u.coeff_order == 2 ? rng() % 2 : 0));
        for (std::size_t i = 0; i < rr; ++i) r.rhs.push_back(constant(u.coeff_order == 2 ? rng() % 2 : 0));
        if (r.size() == 0) r.lhs.push_back(constant());
        if (r.size() == 1) r.rhs.push_back(constant());
        u.relations.push_back(r);
    }
    return u;
}

// a unit x satisfying every relation inside GF(p^k)^*, k <= 3
bool one_unit_solvable(const UnitSystem& u, long long p) {
    for (int k = 1; k <= 3; ++k) {
        FiniteField F(p, k);
        for (long long x = 1; x < F.size(); ++x) {
            auto eval = [&](const std::vector<UnitTerm>& side) {
                long long acc = 0;
                for (const auto& t : side) {
                    long long v = 1;
                    long long e = t.exps[0];
                    long long base = e >= 0 ? x : *F.inverse(x);
                    for (long long i = 0; i < std::llabs(e); ++i) v = F.mul(v, base);
                    if (t.sign) v = F.neg(v);
                    acc = F.add(acc, v);
                }
                return acc;
            };
            bool ok = true;
            for (const auto& r : u.relations)
                if (eval(r.lhs) != eval(r.rhs)) ok = false;
            if (ok) return true;
        }
    }
    return false;
}

UnitSystem residue_at(const GroupModel& g, GenSet vars) { return residue_system(g.presentation, vars); }

}  // namespace

TEST(Classifier, ConstantSystemsMatchDirectEvaluation) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        UnitSystem u = random_constant_system(rng);
        auto c = classify(u);
        ASSERT_FALSE(c.is_unknown()) << c.diagnostics;
        EXPECT_EQ(c.contains(0), constant_system_holds(u, 0)) << trial;
        EXPECT_EQ(c.contains(1), constant_system_holds(u, 1)) << trial;
        for (long long p : kSmallPrimes) EXPECT_EQ(c.contains(p), constant_system_holds(u, p)) << trial << " p=" << p;
    }
}

TEST(Classifier, OneUnitSystemsAgreeWithFieldSearch) {
    std::mt19937_64 rng(5);
    int decided = 0;
    for (int trial = 0; trial < 200; ++trial) {
        UnitSystem u;
        u.names = {"x"};
        u.coeff_order = 1 + rng() % 2;
        UnitRelation r;
        std::size_t terms = 2 + rng() % 2;
        for (std::size_t i = 0; i < terms; ++i) {
            UnitTerm t{{static_cast<long long>(rng() % 5) - 2}, u.coeff_order == 2 ? static_cast<int>(rng() % 2) : 0};
            (rng() % 2 ? r.lhs : r.rhs).push_back(t);
        }
        u.relations.push_back(r);
        auto c = classify(u);
        if (c.is_unknown()) continue;
        ++decided;
        for (long long p : {2, 3, 5, 7}) {
            // a solution in a finite field proves characteristic p; the
            // classifier may only claim p when the algebraic closure has one
            if (one_unit_solvable(u, p)) { EXPECT_TRUE(c.contains(p)) << trial << " p=" << p; }
        }
    }
    EXPECT_GT(decided, 100);
}

TEST(Classifier, OnePlusOneIsZeroOnlyInCharacteristicTwo) {
    UnitSystem u;
    u.relations.push_back({{constant(), constant()}, {}});
    auto c = classify(u);
    EXPECT_EQ(c.kind, CharacteristicClass::Kind::finite);
    EXPECT_EQ(c.values, std::set<long long>{2});
}

TEST(Classifier, SquaredFieldExcludesOne) {
    UnitSystem u;
    u.coeff_order = 2;
    auto c = classify(u);
    EXPECT_EQ(c.kind, CharacteristicClass::Kind::cofinite);
    EXPECT_EQ(c.values, std::set<long long>{1});
}

TEST(Classifier, MonoidBlueprintIsIndefinite) {
    UnitSystem u;
    u.names = {"t"};
    EXPECT_EQ(classify(u).kind, CharacteristicClass::Kind::indefinite);
}

TEST(Classifier, ZeroBlueField) {
    UnitSystem u;
    u.relations.push_back({{constant()}, {}});
    EXPECT_TRUE(classify(u).is_empty());
}

TEST(NormalForm, EvenPermutationResidue) {
    auto g = sl(2);
    auto u = residue_at(g, gen_bit(1) | gen_bit(2));
    auto f = normal_form(u);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->epsilon, 1);
    EXPECT_EQ(f->free_rank, 1u);
    EXPECT_TRUE(f->torsion_invariants.empty());
    ASSERT_EQ(f->lattice.size(), 1u);
    EXPECT_EQ(std::llabs(f->lattice[0][0]), 1);
    EXPECT_EQ(f->lattice[0][0], f->lattice[0][1]);
}

TEST(NormalForm, OddPermutationResidue) {
    auto g = sl(2);
    auto f = normal_form(residue_at(g, gen_bit(0) | gen_bit(3)));
    ASSERT_TRUE(f);
    EXPECT_EQ(f->epsilon, 2);
    EXPECT_EQ(f->free_rank, 1u);
}

TEST(NormalForm, ParityMatchesPermutationSign) {
    for (std::size_t n = 2; n <= 3; ++n) {
        auto g = sl(n);
        for (const auto& p : permutations(n)) {
            GenSet off = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (p.image[i] != static_cast<int>(j)) off |= gen_bit(g.entry_generator[i][j]);
            auto f = normal_form(residue_at(g, off));
            ASSERT_TRUE(f);
            EXPECT_EQ(f->epsilon, p.sign == 1 ? 1 : 2);
            EXPECT_EQ(f->free_rank, n - 1);
        }
    }
}

TEST(NormalForm, TorsionFromExponentRelation) {
    UnitSystem u;
    u.names = {"x"};
    u.relations.push_back({{UnitTerm{{2}, 0}}, {constant(0, 1)}});
    auto f = normal_form(u);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->free_rank, 0u);
    EXPECT_EQ(f->torsion_invariants, std::vector<long long>{2});
}

TEST(NormalForm, RoundTripThroughUnitSystem) {
    auto g = sl(3);
    auto f = normal_form(residue_at(g, g.presentation.all_generators() & ~(gen_bit(g.entry_generator[0][0]) |
                                                                            gen_bit(g.entry_generator[1][1]) |
                                                                            gen_bit(g.entry_generator[2][2]))));
    ASSERT_TRUE(f);
    auto again = normal_form(to_unit_system(*f));
    ASSERT_TRUE(again);
    EXPECT_EQ(again->free_rank, f->free_rank);
    EXPECT_EQ(again->epsilon, f->epsilon);
    EXPECT_EQ(again->torsion_invariants, f->torsion_invariants);
}

TEST(NormalForm, ThreeTermRelationHasNoNormalForm) {
    UnitSystem u;
    u.relations.push_back({{constant(), constant()}, {constant()}});
    EXPECT_FALSE(normal_form(u));
}

TEST(ResidueField, TorusGenericPoint) {
    auto t = mk_free(1, gen_bit(0));
    auto r = residue_field(t, {0});
    ASSERT_TRUE(r.normal);
    EXPECT_EQ(r.normal->free_rank, 1u);
    EXPECT_EQ(r.raw.size(), 1u);
    EXPECT_EQ(r.characteristics.kind, CharacteristicClass::Kind::indefinite);
}

TEST(ResidueField, SumRelationPoint) {
    // S == 1 + 1 at the generic point: S = 0 in characteristic 2, but S is a unit
    auto g = nonstandard_torus();
    auto r = residue_field(g.presentation, {0});
    EXPECT_TRUE(r.characteristics.contains(1));
    EXPECT_FALSE(r.characteristics.contains(2));
    EXPECT_TRUE(r.characteristics.contains(0));
    EXPECT_TRUE(r.characteristics.contains(3));
}

TEST(Units, DetectedThroughProducts) {
    auto b = sl(2).presentation;
    auto q = quotient_by_vars(b, gen_bit(1) | gen_bit(2));
    GenSet u = detect_units(q, gen_bit(1) | gen_bit(2));
    EXPECT_EQ(u, gen_bit(0) | gen_bit(3));
}

TEST(Units, UnitFieldIsIdempotent) {
    for (auto b : {sl(2).presentation, gl(2).presentation, torus(2).presentation,
                   nonstandard_torus().presentation}) {
        auto u = unit_field(b);
        EXPECT_EQ(unit_field(u), u);
    }
}

TEST(CharacteristicClasses, IntersectAndUnite) {
    auto all = CharacteristicClass::indefinite();
    auto not1 = CharacteristicClass::all_but({1});
    auto two = CharacteristicClass::only({2});
    auto three = CharacteristicClass::only({3});
    EXPECT_EQ(intersect(not1, two).values, std::set<long long>{2});
    EXPECT_TRUE(intersect(two, three).is_empty());
    EXPECT_TRUE(intersect(all, not1).contains(5));
    EXPECT_FALSE(intersect(all, not1).contains(1));
    auto u = unite(two, three);
    EXPECT_TRUE(u.contains(2) && u.contains(3) && !u.contains(5));
    EXPECT_TRUE(unite(not1, CharacteristicClass::only({1})).contains(1));
}
