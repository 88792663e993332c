#ifndef WILLMORE_FORMS_HPP
#define WILLMORE_FORMS_HPP

#include <vector>

#include "willmore/geometry.hpp"

namespace willmore {

struct FormReport {
    TensorField form;
    int pole_order = 0;
    LaurentSeries dbar_defect;
    bool is_holomorphic = false;
    bool is_meromorphic = false;
    std::vector<std::pair<Monomial, Coeff>> leading_laurent;
};

FormReport make_form_report(LaurentSeries value, Bidegree bid, int dim);

// Quartic differential from the Weingarten tensor; the ambient curvature
// constant is 1 for sphere models and 0 in flat space.
FormReport bryant_quartic(const SurfaceModel& m);

// Q(alpha) = d_z d_zbar alpha . alpha - d_z alpha . d_zbar alpha; vanishes on
// products f1(z) conj(f2(z)) Lambda dz^2.
LaurentSeries null_structure_check(const TensorField& alpha);

// (H, phi H + n) into the Lorentz sphere, for surfaces in S^3.
VectorSeries pseudo_gauss_map(const SurfaceModel& m);

LaurentSeries lorentz_dot(const VectorSeries& x, const VectorSeries& y);

// Same quartic via normal derivatives of the pseudo Gauss map data.
FormReport quartic_via_gauss(const SurfaceModel& m);

// Cubic form dbar h0 . J h0 over g, for 4-dimensional ambients.
FormReport montiel_cubic(const SurfaceModel& m);

struct OcticPair {
    FormReport direct;       // normal-derivative route
    FormReport normal_free;  // flat-derivative route
    bool agree = false;
};

OcticPair montiel_octic(const SurfaceModel& m);

int pole_order(const FormReport& r);

} // namespace willmore

#endif
