#pragma once

#include "whitney/poset.hpp"

#include <string>
#include <variant>

namespace whitney {

// Parameter records naming a family instance.
struct Fence {
    unsigned n = 0;  // n = 0 is the empty poset
};
struct Crown {
    unsigned n = 2;  // poset has 2n elements, n >= 2
};
struct AsymmetricPeak {
    unsigned mu = 1, nu = 1;  // chain lengths, both >= 1
};
struct Fap {
    unsigned w = 3, x = 1, y = 1, z = 3;  // w, z odd and >= 3; x, y >= 1
};
using FamilySpec = std::variant<Fence, Crown, AsymmetricPeak, Fap>;

std::string family_name(const FamilySpec& spec);  // "fence", "crown", "ap", "fap"
std::string describe(const FamilySpec& spec);     // e.g. "fence(5)", "fap(3,1,1,3)"

/// Zigzag poset on z1..zn with covers z_{2j-1} < z_{2j} > z_{2j+1};
/// odd-indexed elements are minimal.
Poset fence(unsigned n);

/// Crown on zeta0..zeta_{2n-1}: each even-indexed element sits below its two
/// cyclically adjacent odd-indexed neighbours.
Poset crown(unsigned n);

/// Two chains a1<...<a_mu and b1<...<b_nu joined below a common top omega.
Poset asymmetric_peak(unsigned mu, unsigned nu);

/// Adjoins a fresh element covering the minimal elements x1 of p1 and x2 of
/// p2; everything else keeps its covers. Element names are kept when the two
/// posets are disjoint, otherwise prefixed "1:" / "2:".
Poset star_compose(const Poset& p1, const std::string& x1, const Poset& p2, const std::string& x2);

/// Fence with one higher asymmetric peak: a fence a1..aw, a chain b1..bx
/// rising to omega, a chain c1..cy descending to d1, then a fence d1..dz.
Poset fap(unsigned w, unsigned x, unsigned y, unsigned z);

Poset build_poset(const FamilySpec& spec);

}  // namespace whitney
