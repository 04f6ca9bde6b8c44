#include "polyquat/qgroups.hpp"

#include "polyquat/kernels.hpp"

#include <doctest.h>

#include <map>

using namespace polyquat::qgroups;
using polyquat::field::FieldElement;
using polyquat::field::Rational;

TEST_CASE("quaternion set sizes") {
    CHECK(build_T().size() == 24);
    CHECK(build_Tprime().size() == 24);
    CHECK(build_O().size() == 48);
    CHECK(build_I().size() == 120);
}

TEST_CASE("all set elements are unit") {
    for (const QuatSet& set : {build_O(), build_I()})
        for (const auto& q : set.elements()) CHECK(q.is_unit());
}

TEST_CASE("binary tetrahedral and octahedral closure") {
    const QuatSet t = build_T();
    const QuatSet tp = build_Tprime();
    CHECK(setprod(t, t) == t);
    CHECK(setprod(t, tp) == tp);
    CHECK(setprod(tp, t) == tp);
    CHECK(setprod(tp, tp) == t);
    const QuatSet o = build_O();
    CHECK(setprod(o, o) == o);
    const QuatSet i = build_I();
    CHECK(setprod(i, i) == i);
}

TEST_CASE("v subset multiplication table") {
    auto v = v_subsets();
    const QuatSet* sets[6] = {&v.v0, &v.vplus, &v.vminus, &v.v1, &v.v2, &v.v3};
    for (const auto* s : sets) CHECK(s->size() == 8);
    // Row r times column c, with index order V0, V+, V-, V1, V2, V3.
    const int table[6][6] = {
        {0, 1, 2, 3, 4, 5},
        {1, 2, 0, 5, 3, 4},
        {2, 0, 1, 4, 5, 3},
        {3, 4, 5, 0, 1, 2},
        {4, 5, 3, 2, 0, 1},
        {5, 3, 4, 1, 2, 0},
    };
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            QuatSet prod = setprod(*sets[r], *sets[c]);
            CHECK(prod.elements() == sets[table[r][c]]->elements());
        }
}

TEST_CASE("catalog group orders") {
    const std::map<GroupName, std::size_t> expected = {
        {GroupName::WD3, 24},        {GroupName::AutD3, 48},
        {GroupName::WB3, 48},        {GroupName::ChiralOct, 24},
        {GroupName::Td, 24},         {GroupName::Th, 24},
        {GroupName::WD4, 192},       {GroupName::WD4_mod_C2, 96},
        {GroupName::TT_288, 288},    {GroupName::Pyr4D_576, 576},
        {GroupName::WF4, 1152},      {GroupName::AutF4, 2304},
        {GroupName::WH3, 120},       {GroupName::WH4, 14400},
    };
    for (GroupName name : all_group_names()) {
        INFO("group ", group_name_str(name));
        CHECK(catalog(name).order() == expected.at(name));
    }
}

TEST_CASE("small groups are pairwise closed") {
    for (GroupName name : {GroupName::WD3, GroupName::WB3, GroupName::Th,
                           GroupName::WD4_mod_C2, GroupName::WH3}) {
        INFO("group ", group_name_str(name));
        CHECK(polyquat::kernels::pairwise_closed_serial(catalog(name).elements()));
    }
}

TEST_CASE("subgroup chain") {
    auto expect_subgroup = [](GroupName sub, GroupName super, std::size_t index) {
        INFO(group_name_str(sub), " <= ", group_name_str(super));
        auto [ok, idx] = is_subgroup(catalog(sub), catalog(super));
        CHECK(ok);
        CHECK(idx == index);
    };
    expect_subgroup(GroupName::Td, GroupName::WB3, 2);
    expect_subgroup(GroupName::Th, GroupName::WB3, 2);
    expect_subgroup(GroupName::ChiralOct, GroupName::WB3, 2);
    expect_subgroup(GroupName::WD3, GroupName::AutD3, 2);
    expect_subgroup(GroupName::WD4_mod_C2, GroupName::WD4, 2);
    expect_subgroup(GroupName::WD4_mod_C2, GroupName::TT_288, 3);
    expect_subgroup(GroupName::TT_288, GroupName::Pyr4D_576, 2);
    expect_subgroup(GroupName::Pyr4D_576, GroupName::WF4, 2);
    expect_subgroup(GroupName::WF4, GroupName::AutF4, 2);
    expect_subgroup(GroupName::WH3, GroupName::WH4, 120);
    // Td and WD3 coincide as transformation groups.
    CHECK(catalog(GroupName::Td) == catalog(GroupName::WD3));
    // Th is not a subgroup of Td.
    CHECK_FALSE(is_subgroup(catalog(GroupName::Th), catalog(GroupName::Td)).first);
}

TEST_CASE("closure respects the cap") {
    CHECK_THROWS_AS(closure(catalog(GroupName::WD4).generators(), 10), CapExceeded);
}

TEST_CASE("conjugation preserves group structure") {
    const FiniteGroup& g = catalog(GroupName::Th);
    // Conjugating by one of its own elements fixes the set.
    CHECK(conjugate(g, g.elements()[5], "th-conj") == g);
    // Conjugating by an outside rotation gives an isomorphic copy.
    const Rational h(1, 2);
    Quaternion p{FieldElement(h), FieldElement(h), FieldElement(h), FieldElement(-h)};
    FiniteGroup twisted = conjugate(g, OrthoMap(p, p.conj(), false), "th-twist");
    CHECK(twisted.order() == g.order());
    CHECK(polyquat::kernels::pairwise_closed_serial(twisted.elements()));
}

TEST_CASE("group name parsing") {
    for (GroupName name : all_group_names())
        CHECK(parse_group_name(group_name_str(name)) == name);
    CHECK(parse_group_name("WF4") == GroupName::WF4);
    CHECK_THROWS_AS(parse_group_name("nosuch"), std::invalid_argument);
}
