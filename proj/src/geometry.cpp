#include "willmore/geometry.hpp"

#include "willmore/errors.hpp"

namespace willmore {

TensorField conformal_factor(const SurfaceModel& m) {
    return TensorField::scalar_form(m.conf, {1, 1}, m.ambient_dim);
}

VectorSeries mean_curvature(const SurfaceModel& m) { return m.mean; }

TensorField weingarten(const SurfaceModel& m) {
    return TensorField::vector_form(m.h0, {2, 0}, m.ambient_dim);
}

LaurentSeries wp_norm(const SurfaceModel& m) { return m.wp; }

LaurentSeries gauss_curvature(const SurfaceModel& m) { return m.gauss; }

VectorSeries tangent_x(const SurfaceModel& m) { return m.dphi + m.dbphi; }

VectorSeries tangent_y(const SurfaceModel& m) {
    VectorSeries out;
    const Coeff i = Coeff::one(m.backend()).times_i();
    for (size_t k = 0; k < m.dphi.size(); ++k) out.push_back((m.dphi[k] - m.dbphi[k]) * i);
    return out;
}

VectorSeries cross3(const VectorSeries& a, const VectorSeries& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

namespace {

LaurentSeries det3(const LaurentSeries& a0, const LaurentSeries& a1, const LaurentSeries& a2,
                   const LaurentSeries& b0, const LaurentSeries& b1, const LaurentSeries& b2,
                   const LaurentSeries& c0, const LaurentSeries& c1, const LaurentSeries& c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) + a2 * (b0 * c1 - b1 * c0);
}

} // namespace

VectorSeries hodge3(const VectorSeries& a, const VectorSeries& b, const VectorSeries& c) {
    VectorSeries w;
    // det(a,b,c,e_l): expand along the last row.
    w.push_back(-det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]));
    w.push_back(det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]));
    w.push_back(-det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]));
    w.push_back(det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]));
    return w;
}

VectorSeries unit_normal(const SurfaceModel& m) {
    if (m.ambient_dim == 3 && m.ambient_kind == AmbientKind::euclidean)
        return cross3(tangent_x(m), tangent_y(m)) * m.conf_inv;
    if (m.ambient_dim == 4 && m.ambient_kind == AmbientKind::sphere)
        return hodge3(m.phi, tangent_x(m), tangent_y(m)) * m.conf_inv;
    throw ConfigError("unit normal needs ambient R^3 or a surface in S^3");
}

VectorSeries normal_J(const SurfaceModel& m, const VectorSeries& v) {
    if (m.ambient_dim != 4) throw ConfigError("J is defined for 4-dimensional ambients");
    if (!dot(v, m.dphi).is_zero_below_trunc() || !dot(v, m.dbphi).is_zero_below_trunc())
        throw NotNormal{};
    if (m.ambient_kind == AmbientKind::sphere && !dot(v, m.phi).is_zero_below_trunc())
        throw NotNormal("vector field has a radial component");
    return hodge3(tangent_x(m), tangent_y(m), v) * m.conf_inv;
}

VectorSeries normal_project(const SurfaceModel& m, const VectorSeries& v) {
    LaurentSeries a = dot(v, m.dbphi) * m.conf_inv.scaled(2, 1);
    LaurentSeries b = dot(v, m.dphi) * m.conf_inv.scaled(2, 1);
    VectorSeries out = v - (m.dphi * a + m.dbphi * b);
    if (m.ambient_kind == AmbientKind::sphere) out = out - m.phi * dot(v, m.phi);
    return out;
}

VectorSeries codazzi_defect(const SurfaceModel& m) {
    LaurentSeries kg_flat = dot(m.mean_euclid, m.mean_euclid) - m.wp;
    return d_zbar(m.h0) - d_z(m.mean_euclid) * m.conf - m.dphi * (kg_flat * m.conf);
}

LaurentSeries liouville_defect(const SurfaceModel& m) {
    return m.dz_lambda.d_zbar().scaled(-4, 1) - m.conf * m.gauss;
}

} // namespace willmore
