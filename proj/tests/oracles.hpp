// Brute-force reference implementations kept deliberately naive and
// separate from the library, plus a seeded random instance generator.
// Tests compare library results against these.

#ifndef OIE_TESTS_ORACLES_HPP
#define OIE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "oie/core.hpp"
#include "oie/feasibility.hpp"

namespace oracle {

using oie::Interval;
using oie::IntervalCombo;
using oie::Rational;

// Bound by scanning every element twice, no library helpers.
inline Interval brute_bound(const IntervalCombo& combo) {
    Rational lo = combo.front().start();
    Rational hi = combo.front().end();
    for (const auto& iv : combo) {
        if (iv.start() < lo) lo = iv.start();
        if (hi < iv.end()) hi = iv.end();
    }
    return Interval(lo, hi);
}

// Product by odometer counting rather than recursion: combo c has
// c[k] = family[idx[k]][digit_k].
inline std::vector<IntervalCombo>
brute_cartesian(const std::vector<std::vector<Interval>>& family,
                const std::vector<std::size_t>& idx_zero_based) {
    std::vector<IntervalCombo> out;
    const std::size_t n = idx_zero_based.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (family[idx_zero_based[k]].empty()) return out;
    }
    std::vector<std::size_t> digits(n, 0);
    for (;;) {
        IntervalCombo c;
        for (std::size_t k = 0; k < n; ++k) {
            c.push_back(family[idx_zero_based[k]][digits[k]]);
        }
        out.push_back(c);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++digits[k] < family[idx_zero_based[k]].size()) break;
            digits[k] = 0;
            if (k == 0) return out;
        }
    }
}

// Window filter restated from the definition: combos inside [alpha, beta],
// kept only if afterwards each position touches alpha (some start) and
// beta (some end).
inline std::vector<IntervalCombo>
brute_domain_filter(const std::vector<IntervalCombo>& combos,
                    const Rational& alpha, const Rational& beta) {
    std::vector<IntervalCombo> inside;
    for (const auto& c : combos) {
        bool ok = true;
        for (const auto& iv : c) {
            if (iv.start() < alpha || beta < iv.end()) {
                ok = false;
                break;
            }
        }
        if (ok) inside.push_back(c);
    }
    if (inside.empty()) return inside;
    const std::size_t n = inside.front().size();
    for (std::size_t k = 0; k < n; ++k) {
        bool touches_alpha = false;
        bool touches_beta = false;
        for (const auto& c : inside) {
            if (c[k].start() == alpha) touches_alpha = true;
            if (c[k].end() == beta) touches_beta = true;
        }
        if (!touches_alpha || !touches_beta) return {};
    }
    return inside;
}

inline std::vector<IntervalCombo>
brute_asc_filter(const std::vector<IntervalCombo>& combos) {
    std::vector<IntervalCombo> out;
    for (const auto& c : combos) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < c.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                if (c[j].start() < c[i].end()) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) out.push_back(c);
    }
    return out;
}

// Permutation application restated: result position images[i] holds
// element i (both zero-based here).
inline IntervalCombo brute_apply_permutation(const IntervalCombo& combo,
                                             const std::vector<std::size_t>& images_zero_based) {
    IntervalCombo out(combo.size(), combo.front());
    for (std::size_t i = 0; i < combo.size(); ++i) {
        out[images_zero_based[i]] = combo[i];
    }
    return out;
}

// Witness search by trying image vectors in std::next_permutation order,
// which is lexicographic.
inline std::optional<std::vector<std::size_t>>
brute_perm_witness(const IntervalCombo& a, const IntervalCombo& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (a.empty()) return std::vector<std::size_t>{};
    std::vector<std::size_t> images(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) images[i] = i;
    do {
        if (brute_apply_permutation(a, images) == b) return images;
    } while (std::next_permutation(images.begin(), images.end()));
    return std::nullopt;
}

// Small random instances on an integer grid. The generator is seeded by
// the caller so every failure is reproducible.
struct RandomInstance {
    std::vector<oie::OIE> events;
    oie::ConstraintSet constraints;
    Rational alpha;
    Rational beta;
};

inline RandomInstance random_instance(std::mt19937& rng, std::size_t n_events) {
    std::uniform_int_distribution<int> start_dist(0, 8);
    std::uniform_int_distribution<int> len_dist(1, 4);
    std::uniform_int_distribution<int> count_dist(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);

    RandomInstance inst;
    int lo = 100;
    int hi = -100;
    for (std::size_t e = 0; e < n_events; ++e) {
        std::set<Interval> ivs;
        const int count = count_dist(rng);
        while (static_cast<int>(ivs.size()) < count) {
            const int s = start_dist(rng);
            const int l = len_dist(rng);
            ivs.insert(Interval(Rational(s), Rational(s + l)));
        }
        for (const auto& iv : ivs) {
            int s = static_cast<int>(iv.start().raw().get_num().get_si());
            int t = static_cast<int>(iv.end().raw().get_num().get_si());
            lo = std::min(lo, s);
            hi = std::max(hi, t);
        }
        inst.events.push_back(oie::OIE::atomic("e" + std::to_string(e + 1), ivs));
    }
    inst.alpha = Rational(lo);
    inst.beta = Rational(hi);
    if (n_events >= 2 && coin(rng) == 1) {
        inst.constraints.add_no_overlap({"e1", "e2"});
    }
    if (n_events >= 2 && coin(rng) == 1) {
        inst.constraints.add_min_gap("e1", "e2", Rational(1));
    }
    return inst;
}

} // namespace oracle

#endif
