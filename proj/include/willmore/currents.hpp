#ifndef WILLMORE_CURRENTS_HPP
#define WILLMORE_CURRENTS_HPP

#include <vector>

#include "willmore/surface.hpp"

namespace willmore {

enum class CurrentKind { translation, rotation, dilation, inversion };

// Coefficient F of the conserved (1,0)-form Im(F dz); one series per
// component (n for translation/inversion, n(n-1)/2 wedge slots for rotation,
// one for dilation).
struct Current {
    CurrentKind kind;
    VectorSeries form;
};

struct ResidueSet {
    std::vector<Coeff> gamma0;
    std::vector<Coeff> gamma1;
    Coeff gamma2;
    std::vector<Coeff> gamma3;
    std::vector<Coeff> flux;
    bool radius_independent = true;
    double closedness_max_defect = 0.0;
};

Current noether_current(const SurfaceModel& m, CurrentKind kind);

// The same translation integrand written with projected normal derivatives,
// g^{-1} (dbar^N - dbar^T) h0 - |h0|^2_WP dphi; needs the normal projection
// and agrees with the derivative-free form through the Codazzi identity.
VectorSeries translation_integrand_normal_form(const SurfaceModel& m);

// Re(d_zbar F) componentwise; zero below trunc iff Im(F dz) is closed.
VectorSeries closedness_defect(const Current& c);

ResidueSet residues(const SurfaceModel& m);

// The first residue in the divergence-form normalization (factor -4).
std::vector<Coeff> bernard_riviere_residue(const ResidueSet& r);

struct CorrespondenceReport {
    ResidueSet direct;
    ResidueSet inverted;
    double max_difference = 0.0;
    bool ok = false;
};

// Checks the swap gamma0 <-> gamma3, gamma1 fixed, gamma2 sign flip under
// inversion of the immersion.
CorrespondenceReport correspondence_check(const SurfaceModel& m);

VectorSeries willmore_residual(const SurfaceModel& m);

} // namespace willmore

#endif
