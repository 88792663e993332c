#include "willmore/currents.hpp"

#include <algorithm>

#include "willmore/errors.hpp"
#include "willmore/geometry.hpp"

namespace willmore {

namespace {

// dH + |H|^2 dphi + 2 g^{-1} <H,h0> dbar phi, the normal-derivative-free
// integrand shared by all four currents.
VectorSeries base_integrand(const SurfaceModel& m) {
    LaurentSeries h_sq = dot(m.mean, m.mean);
    LaurentSeries mixed = dot(m.mean, m.h0) * m.conf_inv.scaled(2, 1);
    return d_z(m.mean) + m.dphi * h_sq + m.dbphi * mixed;
}

VectorSeries apply_inversion_generator(const VectorSeries& phi, const VectorSeries& x) {
    LaurentSeries norm2 = dot(phi, phi);
    LaurentSeries project = dot(phi, x).scaled(2, 1);
    return x * norm2 - phi * project;
}

} // namespace

VectorSeries translation_integrand_normal_form(const SurfaceModel& m) {
    VectorSeries dbar_h0 = d_zbar(m.h0);
    VectorSeries normal_part = normal_project(m, dbar_h0);
    VectorSeries tangent_part = dbar_h0 - normal_part;
    return (normal_part - tangent_part) * m.conf_inv - m.dphi * m.wp;
}

Current noether_current(const SurfaceModel& m, CurrentKind kind) {
    if (m.ambient_kind != AmbientKind::euclidean)
        throw ConfigError("Noether currents are computed in the flat ambient");
    VectorSeries e = base_integrand(m);
    switch (kind) {
    case CurrentKind::translation:
        return {kind, e};
    case CurrentKind::dilation:
        return {kind, {dot(m.phi, e)}};
    case CurrentKind::rotation: {
        VectorSeries tail = wedge(m.h0, m.dbphi);
        VectorSeries w = wedge(m.phi, e);
        for (size_t k = 0; k < w.size(); ++k) w[k] += tail[k] * m.conf_inv;
        return {kind, w};
    }
    case CurrentKind::inversion: {
        LaurentSeries norm2 = dot(m.phi, m.phi);
        VectorSeries extra = m.h0 * norm2.d_zbar() - m.dbphi * dot(m.phi, m.h0).scaled(2, 1);
        return {kind, apply_inversion_generator(m.phi, e) - extra * m.conf_inv};
    }
    }
    throw ConfigError("unknown current kind");
}

VectorSeries closedness_defect(const Current& c) {
    VectorSeries out;
    for (const auto& f : c.form) out.push_back(f.d_zbar().real_part());
    return out;
}

namespace {

// Residues are normalized so that the fourth one equals the flux
// (1/4pi) Im of the contour integral of dphi on minimal ends; against the raw
// conserved integrands this costs a global factor 1/2.
std::vector<Coeff> residue_of(const Current& c) {
    std::vector<Coeff> out;
    for (const auto& f : c.form) out.push_back(f.im_residue().scaled(1, 2));
    return out;
}

double max_defect(const Current& c) {
    double v = 0.0;
    for (const auto& s : closedness_defect(c)) v = std::max(v, s.max_abs_coeff());
    return v;
}

} // namespace

ResidueSet residues(const SurfaceModel& m) {
    Current t = noether_current(m, CurrentKind::translation);
    Current r = noether_current(m, CurrentKind::rotation);
    Current d = noether_current(m, CurrentKind::dilation);
    Current i = noether_current(m, CurrentKind::inversion);

    ResidueSet out;
    out.gamma0 = residue_of(t);
    out.gamma1 = residue_of(r);
    out.gamma2 = residue_of(d).at(0);
    out.gamma3 = residue_of(i);
    // Im(dphi dz) is closed only where the surface is minimal; the flux is
    // undefined otherwise.
    if (is_zero_below_trunc(m.mean))
        for (const auto& f : m.dphi) out.flux.push_back(f.im_residue());
    out.closedness_max_defect = std::max(std::max(max_defect(t), max_defect(r)),
                                         std::max(max_defect(d), max_defect(i)));
    out.radius_independent = out.closedness_max_defect == 0.0;
    return out;
}

std::vector<Coeff> bernard_riviere_residue(const ResidueSet& r) {
    std::vector<Coeff> out;
    for (const auto& c : r.gamma0) out.push_back(c.scaled(-4, 1));
    return out;
}

CorrespondenceReport correspondence_check(const SurfaceModel& m) {
    CorrespondenceReport rep;
    rep.direct = residues(m);
    rep.inverted = residues(invert_immersion(m));

    double worst = 0.0;
    auto track = [&worst](const Coeff& a, const Coeff& b) {
        worst = std::max(worst, std::abs((a - b).to_complex()));
    };
    for (size_t k = 0; k < rep.direct.gamma0.size(); ++k) {
        track(rep.direct.gamma0[k], rep.inverted.gamma3[k]);
        track(rep.direct.gamma3[k], rep.inverted.gamma0[k]);
    }
    for (size_t k = 0; k < rep.direct.gamma1.size(); ++k)
        track(rep.direct.gamma1[k], rep.inverted.gamma1[k]);
    track(rep.direct.gamma2, -rep.inverted.gamma2);
    rep.max_difference = worst;
    rep.ok = worst == 0.0 || worst < kChopTolerance;
    return rep;
}

VectorSeries willmore_residual(const SurfaceModel& m) {
    return closedness_defect(noether_current(m, CurrentKind::translation));
}

} // namespace willmore
