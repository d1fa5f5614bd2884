#include <doctest.h>

#include "oie/analysis.hpp"
#include "support.hpp"

using namespace support;
using oie::AddOp;
using oie::ComboSet;
using oie::DomainWindow;
using oie::IndexTuple;
using oie::Interval;
using oie::IntervalCombo;
using oie::MulOp;
using oie::OIE;
using oie::PermutationMap;
using oie::Rational;

namespace {

OIE doctors_add(const IndexTuple& idx) {
    return oie::csa({doctor_b(), doctor_a()}, idx,
                    DomainWindow(Rational(0), Rational(22)), {});
}

} // namespace

TEST_SUITE_BEGIN("analysis");

TEST_CASE("addition results under different tuples are equivalent") {
    const OIE first = doctors_add(IndexTuple({1, 2}));
    const OIE second = doctors_add(IndexTuple({2, 1}));
    const auto witness = oie::oie_perm_equivalent(first, second);
    REQUIRE(witness.has_value());
    CHECK(*witness == PermutationMap({2, 1}));
    CHECK_FALSE(first == second);
}

TEST_CASE("multiplication results under different tuples are not equivalent") {
    const OIE ab = oie::csm({doctor_a(), doctor_b()}, IndexTuple({1, 2}), {});
    const OIE ba = oie::csm({doctor_a(), doctor_b()}, IndexTuple({2, 1}), {});
    CHECK_FALSE(oie::oie_perm_equivalent(ab, ba).has_value());
}

TEST_CASE("void and atomic equivalences are identity only") {
    const auto void_witness = oie::oie_perm_equivalent(OIE(), OIE());
    REQUIRE(void_witness.has_value());
    CHECK(void_witness->size() == 0);

    const auto atom_witness = oie::oie_perm_equivalent(doctor_a(), doctor_a());
    REQUIRE(atom_witness.has_value());
    CHECK(atom_witness->size() == 0);

    CHECK_FALSE(oie::oie_perm_equivalent(doctor_a(), doctor_b()).has_value());
    CHECK_FALSE(oie::oie_perm_equivalent(OIE(), doctor_a()).has_value());
    CHECK_FALSE(
        oie::oie_perm_equivalent(doctor_a(), doctors_add(IndexTuple({1, 2}))).has_value());
}

TEST_CASE("addition orbit over the doctors pair is a single class") {
    const std::vector<OIE> events = {doctor_b(), doctor_a()};
    const auto space = oie::orbit_space(
        events, AddOp{DomainWindow(Rational(0), Rational(22))}, {});
    REQUIRE(space.classes.size() == 1);
    const auto& cls = space.classes.front();
    CHECK(cls.index_tuples ==
          std::vector<IndexTuple>{IndexTuple({1, 2}), IndexTuple({2, 1})});
    CHECK(cls.representative == doctors_add(IndexTuple({1, 2})));
}

TEST_CASE("multiplication orbit over the doctors pair has two classes") {
    const std::vector<OIE> events = {doctor_a(), doctor_b()};
    const auto space = oie::orbit_space(events, MulOp{}, {});
    REQUIRE(space.classes.size() == 2);

    CHECK(space.classes[0].index_tuples == std::vector<IndexTuple>{IndexTuple({1, 2})});
    CHECK(space.classes[0].representative.details_F() ==
          ComboSet(doctors_mul_ab_details()));
    CHECK(space.classes[0].representative.intervals_I() == doctors_mul_ab_intervals());

    CHECK(space.classes[1].index_tuples == std::vector<IndexTuple>{IndexTuple({2, 1})});
    CHECK(space.classes[1].representative.details_F() ==
          ComboSet(doctors_mul_ba_details()));
    CHECK(space.classes[1].representative.intervals_I() == doctors_mul_ba_intervals());
}

TEST_CASE("all-void orbits collapse to one class") {
    const std::vector<OIE> events = {doctor_a(), doctor_a()};
    const auto space = oie::orbit_space(events, MulOp{}, {});
    REQUIRE(space.classes.size() == 1);
    CHECK(space.classes.front().representative.is_void());
    CHECK(space.classes.front().index_tuples.size() == 2);
}

TEST_CASE("orbit enumeration refuses oversized operand lists") {
    std::vector<OIE> events;
    for (int i = 0; i < 7; ++i) {
        events.push_back(OIE::atomic("e" + std::to_string(i), {iv(i, i + 1)}));
    }
    CHECK_THROWS_AS(oie::orbit_space(events, MulOp{}, {}),
                    oie::CapacityExceededError);
    CHECK_THROWS_AS(oie::orbit_space(events, MulOp{}, {}, 6),
                    oie::CapacityExceededError);
    CHECK_NOTHROW(oie::orbit_space(events, MulOp{}, {}, 7));
}

TEST_CASE("first implementation form picks one overall interval") {
    const auto assignment = oie::implement_first(doctor_a(), iv(21, 22));
    CHECK(assignment.overall == iv(21, 22));
    CHECK(assignment.per_operand.empty());

    CHECK_THROWS_AS(oie::implement_first(doctor_a(), iv(5, 6)),
                    oie::InvalidChoiceError);
    CHECK_THROWS_AS(oie::implement_first(OIE(), iv(0, 1)), oie::InvalidInputError);
}

TEST_CASE("second implementation form names every operand") {
    const OIE composite = doctors_add(IndexTuple({1, 2}));
    const auto assignment =
        oie::implement_second(composite, {iv(13, 14), iv(21, 22)});
    CHECK(assignment.overall == iv(13, 22));
    REQUIRE(assignment.per_operand.size() == 2);
    CHECK(assignment.per_operand[0] == std::pair<std::string, Interval>("Dr_B", iv(13, 14)));
    CHECK(assignment.per_operand[1] == std::pair<std::string, Interval>("Dr_A", iv(21, 22)));

    CHECK_THROWS_AS(oie::implement_second(composite, {iv(0, 1), iv(13, 14)}),
                    oie::InvalidChoiceError);
    CHECK_THROWS_AS(oie::implement_second(OIE(), {iv(0, 1)}), oie::InvalidInputError);
}

TEST_CASE("second form exposes idle gaps the first form cannot") {
    // Sub-events at 1-2, 2-3, and 4-5: the combined plan pauses at 3-4.
    const OIE s1 = OIE::atomic("s1", {iv(1, 2)});
    const OIE s2 = OIE::atomic("s2", {iv(2, 3)});
    const OIE s3 = OIE::atomic("s3", {iv(4, 5)});
    const OIE chain = oie::csm({s1, s2, s3}, IndexTuple::ascending(3), {});
    REQUIRE(chain.is_composite());

    const IntervalCombo only = chain.details_F().combos().front();
    const auto second = oie::implement_second(chain, only);
    CHECK(second.overall == iv(1, 5));
    CHECK(second.per_operand[1].second.end() == Rational(3));
    CHECK(second.per_operand[2].second.start() == Rational(4));

    const auto first = oie::implement_first(chain, iv(1, 5));
    CHECK(first.per_operand.empty());
}

TEST_CASE("multiplication results project to exactly one ordering") {
    const OIE ab = oie::csm({doctor_a(), doctor_b()}, IndexTuple({1, 2}), {});
    const auto orderings = oie::project_end_ts(ab);
    REQUIRE(orderings.size() == 1);
    CHECK(orderings.front().ordering == std::vector<std::string>{"Dr_A", "Dr_B"});
    CHECK(orderings.front().source_combo == IntervalCombo{iv(0, 1), iv(13, 14)});
}

TEST_CASE("the doctors addition projects to both orderings") {
    const auto orderings = oie::project_end_ts(doctors_add(IndexTuple({1, 2})));
    REQUIRE(orderings.size() == 2);
    CHECK(orderings[0].ordering == std::vector<std::string>{"Dr_B", "Dr_A"});
    CHECK(orderings[0].source_combo == IntervalCombo{iv(0, 1), iv(0, 1)});
    CHECK(orderings[1].ordering == std::vector<std::string>{"Dr_A", "Dr_B"});
    CHECK(orderings[1].source_combo == IntervalCombo{iv(13, 14), iv(0, 1)});
}

TEST_CASE("projection rejects void and atomic input") {
    CHECK_THROWS_AS(oie::project_end_ts(OIE()), oie::InvalidInputError);
    CHECK_THROWS_AS(oie::project_end_ts(doctor_a()), oie::InvalidInputError);
}

TEST_CASE("fold_projection agrees across orderings") {
    const auto orderings = oie::project_end_ts(doctors_add(IndexTuple({1, 2})));
    const std::map<std::string, Rational> times = {
        {"Dr_A", Rational::parse("9.58")},
        {"Dr_B", Rational::parse("9.91")},
    };
    CHECK(oie::fold_projection(orderings, times, oie::Reducer::min) ==
          Rational(479, 50));
    CHECK(oie::fold_projection(orderings, times, oie::Reducer::max) ==
          Rational(991, 100));
    CHECK(oie::fold_projection(orderings, times, oie::Reducer::sum) ==
          Rational(1949, 100));

    const std::map<std::string, Rational> flat = {{"Dr_A", Rational(7)},
                                                  {"Dr_B", Rational(7)}};
    CHECK(oie::fold_projection(orderings, flat, oie::Reducer::max) == Rational(7));

    CHECK_THROWS_AS(
        oie::fold_projection(orderings, {{"Dr_A", Rational(1)}}, oie::Reducer::min),
        oie::InvalidInputError);
    CHECK_THROWS_AS(oie::fold_projection({}, times, oie::Reducer::min),
                    oie::InvalidInputError);
}

TEST_SUITE_END();
