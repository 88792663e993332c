#ifndef WILLMORE_SURFACE_HPP
#define WILLMORE_SURFACE_HPP

#include <optional>
#include <string>

#include "willmore/rational_map.hpp"
#include "willmore/series.hpp"

namespace willmore {

enum class AmbientKind { euclidean, sphere };
enum class PointKind { regular, minimal_end, willmore_branch };

// Meromorphic Gauss map g and height differential f dz; the expansion point
// is z = 0, moved there by the optional chart precomposition.
struct WeierstrassData {
    RationalMap g;
    RationalMap f;
    int ambient = 3;
    std::optional<Mobius> chart;
};

// Immersion germ at the puncture z = 0 with cached first/second order data.
struct SurfaceModel {
    VectorSeries phi;
    int ambient_dim = 3;
    AmbientKind ambient_kind = AmbientKind::euclidean;
    PointKind kind = PointKind::regular;
    int theta0 = 1;

    // Cached geometry, filled by build().
    VectorSeries dphi, dbphi, ddbphi;
    LaurentSeries conf;        // e^{2 lambda}
    LaurentSeries conf_inv;    // e^{-2 lambda}
    LaurentSeries dz_lambda;   // (1/2) e^{-2 lambda} d_z e^{2 lambda}
    VectorSeries h0;           // Weingarten tensor coefficient, bidegree (2,0)
    VectorSeries mean;         // mean curvature vector in the model's ambient
    VectorSeries mean_euclid;  // flat-ambient mean curvature vector
    LaurentSeries wp;          // |h0|^2_WP
    LaurentSeries gauss;       // K_g, with the ambient curvature shift

    Backend backend() const { return phi.at(0).backend(); }

    static SurfaceModel build(VectorSeries phi, AmbientKind kind = AmbientKind::euclidean);
};

SurfaceModel weierstrass_immersion(const WeierstrassData& data, int order, Backend be = Backend::exact);

// Composition with x -> x/|x|^2.
SurfaceModel invert_immersion(const SurfaceModel& m);

// Inverse stereographic projection R^n -> S^n in R^{n+1}.
SurfaceModel stereo_to_sphere(const SurfaceModel& m);

// Branch multiplicity at the puncture (end multiplicity for minimal ends).
int detect_multiplicity(const SurfaceModel& m);

SurfaceModel translate(const SurfaceModel& m, const std::vector<Coeff>& offset);
SurfaceModel pad_to_r4(const SurfaceModel& m);
// Re-tag a sphere model as a surface of flat R^{n+1}.
SurfaceModel euclidean_view(const SurfaceModel& m);

LaurentSeries conformality_defect(const SurfaceModel& m);
LaurentSeries sphere_norm_defect(const SurfaceModel& m);

LaurentSeries convert(const LaurentSeries& s, Backend be);
VectorSeries convert(const VectorSeries& v, Backend be);
SurfaceModel convert(const SurfaceModel& m, Backend be);

} // namespace willmore

#endif
