// Shared fixture builders and frozen expected values. The frozen values
// were derived once by hand or by the oracles in oracles.hpp and must not
// be regenerated from library output.

#ifndef OIE_TESTS_SUPPORT_HPP
#define OIE_TESTS_SUPPORT_HPP

#include <set>
#include <vector>

#include "oie/core.hpp"

namespace support {

inline oie::Interval iv(long a, long b) {
    return oie::Interval(oie::Rational(a), oie::Rational(b));
}

inline oie::IntervalCombo combo(std::vector<oie::Interval> ivs) { return ivs; }

// The three submission events: Dr_A may use (0,1) or (21,22); Dr_B (0,1),
// (13,14) or (20,22); Dr_C (0,1) or (19,22).
inline oie::OIE doctor_a() {
    return oie::OIE::atomic("Dr_A", {iv(0, 1), iv(21, 22)});
}
inline oie::OIE doctor_b() {
    return oie::OIE::atomic("Dr_B", {iv(0, 1), iv(13, 14), iv(20, 22)});
}
inline oie::OIE doctor_c() {
    return oie::OIE::atomic("Dr_C", {iv(0, 1), iv(19, 22)});
}

// Expected composite of (Dr_B, Dr_A) over window (0, 22): all six product
// combos survive, giving five distinct bounds.
inline std::vector<oie::IntervalCombo> doctors_ba_details() {
    return {
        {iv(0, 1), iv(0, 1)},   {iv(0, 1), iv(21, 22)},
        {iv(13, 14), iv(0, 1)}, {iv(13, 14), iv(21, 22)},
        {iv(20, 22), iv(0, 1)}, {iv(20, 22), iv(21, 22)},
    };
}
inline std::set<oie::Interval> doctors_ba_intervals() {
    return {iv(0, 1), iv(0, 22), iv(0, 14), iv(13, 22), iv(20, 22)};
}

// Expected multiplication results for the (Dr_A, Dr_B) pair, derived by
// filtering the nine product combos for ascending order by hand.
inline std::vector<oie::IntervalCombo> doctors_mul_ab_details() {
    return {{iv(0, 1), iv(13, 14)}, {iv(0, 1), iv(20, 22)}};
}
inline std::set<oie::Interval> doctors_mul_ab_intervals() {
    return {iv(0, 14), iv(0, 22)};
}
inline std::vector<oie::IntervalCombo> doctors_mul_ba_details() {
    return {{iv(0, 1), iv(21, 22)}, {iv(13, 14), iv(21, 22)}};
}
inline std::set<oie::Interval> doctors_mul_ba_intervals() {
    return {iv(0, 22), iv(13, 22)};
}

// Lifespan candidates for the father and son events.
inline oie::OIE father() {
    return oie::OIE::atomic("father",
                            {iv(1830, 1900), iv(1910, 1990), iv(2050, 2140)});
}
inline oie::OIE son() {
    return oie::OIE::atomic("son",
                            {iv(1860, 1930), iv(1930, 2010), iv(2077, 2140)});
}

// The six excluded joint lifespans in (father, son) order: each father
// candidate rules out the two son candidates from other eras.
inline std::vector<oie::IntervalCombo> father_son_infeasible() {
    return {
        {iv(1830, 1900), iv(1930, 2010)}, {iv(1830, 1900), iv(2077, 2140)},
        {iv(1910, 1990), iv(1860, 1930)}, {iv(1910, 1990), iv(2077, 2140)},
        {iv(2050, 2140), iv(1860, 1930)}, {iv(2050, 2140), iv(1930, 2010)},
    };
}
// The three surviving same-era pairs.
inline std::vector<oie::IntervalCombo> father_son_feasible() {
    return {
        {iv(1830, 1900), iv(1860, 1930)},
        {iv(1910, 1990), iv(1930, 2010)},
        {iv(2050, 2140), iv(2077, 2140)},
    };
}

} // namespace support

#endif
