#ifndef WILLMORE_GEOMETRY_HPP
#define WILLMORE_GEOMETRY_HPP

#include "willmore/surface.hpp"
#include "willmore/tensor.hpp"

namespace willmore {

TensorField conformal_factor(const SurfaceModel& m);   // e^{2 lambda}, bidegree (1,1)
VectorSeries mean_curvature(const SurfaceModel& m);    // ambient-aware mean curvature vector
TensorField weingarten(const SurfaceModel& m);         // h0, bidegree (2,0)
LaurentSeries wp_norm(const SurfaceModel& m);          // |h0|^2_WP
LaurentSeries gauss_curvature(const SurfaceModel& m);

VectorSeries tangent_x(const SurfaceModel& m);
VectorSeries tangent_y(const SurfaceModel& m);

// Unit normal: ambient 3 euclidean, or the S^3 normal of a sphere model in R^4.
VectorSeries unit_normal(const SurfaceModel& m);

// v -> e^{-2 lambda} *(d1 phi ^ d2 phi ^ v) in R^4; requires v normal.
VectorSeries normal_J(const SurfaceModel& m, const VectorSeries& v);

// Subtract the surface-tangential (and sphere-radial) components.
VectorSeries normal_project(const SurfaceModel& m, const VectorSeries& v);

// dbar h0 - g (x) dH - K_g g (x) dphi, with flat-ambient H and K.
VectorSeries codazzi_defect(const SurfaceModel& m);

// -4 d_zbar d_z lambda - e^{2 lambda} K_g.
LaurentSeries liouville_defect(const SurfaceModel& m);

VectorSeries cross3(const VectorSeries& a, const VectorSeries& b);
// w_l = det(a, b, c, e_l) componentwise in series arithmetic.
VectorSeries hodge3(const VectorSeries& a, const VectorSeries& b, const VectorSeries& c);

} // namespace willmore

#endif
