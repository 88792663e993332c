#ifndef WILLMORE_BRANCH_HPP
#define WILLMORE_BRANCH_HPP

#include <string>
#include <vector>

#include "willmore/surface.hpp"

namespace willmore {

// Expansion coefficients of d_z phi at a branch point, with the pairing
// normalization |A0|^2 = 1/2 carried as the exact factor scale_sq = t^2
// (pairings of rescaled vectors are t^2 times raw pairings).
struct BranchExpansion {
    int theta0 = 1;
    std::vector<Coeff> A0, A1, A2, C1;
    std::vector<Coeff> gamma0;
    Coeff alpha0, alpha1;   // <conj A0, A1>, <conj A0, A2>, normalized
    Coeff scale_sq;
    Backend backend = Backend::exact;
};

struct PairingReport {
    std::vector<std::pair<std::string, Coeff>> pairings;
    bool all_required_zero = false;
};

struct EndStructure {
    int genus = 0;
    std::vector<int> end_multiplicities;
    std::vector<int> interior_branch_orders;
};

struct TopologyReport {
    int deg_gauss = 0;
    int total_curvature_over_2pi = 0;    // of the minimal surface
    int compact_curvature_over_2pi = 0;  // Gauss integral of the inverted surface
};

BranchExpansion extract_expansion(const SurfaceModel& m);

// Complex-bilinear pairing scaled by the |A0|^2 = 1/2 normalization.
Coeff normalized_pairing(const BranchExpansion& e, const std::vector<Coeff>& x, const std::vector<Coeff>& y);

std::vector<Coeff> conj(const std::vector<Coeff>& v);

PairingReport cancellation_check(const BranchExpansion& e);

// Largest alpha >= 1 with a pure z^{-alpha} slot in the mean curvature,
// 0 when H is bounded.
int second_residue(const SurfaceModel& m);

TopologyReport jorge_meeks(const EndStructure& e);

int predicted_energy_over_4pi(const EndStructure& e);

SurfaceModel rescale(const SurfaceModel& m, long num, long den);

} // namespace willmore

#endif
