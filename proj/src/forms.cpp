#include "willmore/forms.hpp"

#include "willmore/errors.hpp"

namespace willmore {

FormReport make_form_report(LaurentSeries value, Bidegree bid, int dim) {
    FormReport r;
    r.dbar_defect = value.d_zbar();
    bool clean_singular = true;
    int worst = 0;
    int lowest = value.trunc();
    for (const auto& [m, c] : value.terms()) lowest = std::min(lowest, m.degree());
    for (const auto& [m, c] : value.terms()) {
        if (m.degree() < 0) {
            if (m.b != 0 || m.p != 0) clean_singular = false;
            worst = std::max(worst, -m.degree());
        }
        if (m.degree() == lowest) r.leading_laurent.emplace_back(m, c);
    }
    r.is_meromorphic = r.dbar_defect.is_zero_below_trunc() && clean_singular;
    r.pole_order = r.is_meromorphic ? worst : 0;
    r.is_holomorphic = r.is_meromorphic && worst == 0;
    r.form = TensorField::scalar_form(std::move(value), bid, dim);
    return r;
}

int pole_order(const FormReport& r) {
    if (!r.is_meromorphic) throw NotMeromorphic{};
    return r.pole_order;
}

namespace {

LaurentSeries curvature_shift(const SurfaceModel& m) {
    LaurentSeries kt = dot(m.mean, m.mean);
    if (m.ambient_kind == AmbientKind::sphere)
        kt += LaurentSeries::constant(Coeff::one(m.backend()), kt.trunc());
    return kt;
}

} // namespace

FormReport bryant_quartic(const SurfaceModel& m) {
    const VectorSeries& h0 = m.h0;
    VectorSeries ph = d_z(h0);
    VectorSeries bh = d_zbar(h0);
    VectorSeries pbh = d_z(bh);
    LaurentSeries hh = dot(h0, h0);
    LaurentSeries mixed = dot(m.mean, h0);
    LaurentSeries q = (dot(pbh, h0) - dot(ph, bh)) * m.conf_inv;
    q += (curvature_shift(m).scaled(1, 4) + m.wp) * hh;
    q += mixed * mixed;
    return make_form_report(std::move(q), {4, 0}, m.ambient_dim);
}

LaurentSeries null_structure_check(const TensorField& alpha) {
    VectorSeries v = alpha.is_scalar() ? VectorSeries{alpha.scalar()} : alpha.vector();
    VectorSeries pv = d_z(v);
    VectorSeries bv = d_zbar(v);
    return dot(d_z(bv), v) - dot(pv, bv);
}

VectorSeries pseudo_gauss_map(const SurfaceModel& m) {
    if (m.ambient_kind != AmbientKind::sphere || m.ambient_dim != 4)
        throw ConfigError("pseudo Gauss map needs a surface in S^3");
    VectorSeries n = unit_normal(m);
    LaurentSeries h_scalar = dot(m.mean, n);
    VectorSeries psi{h_scalar};
    for (size_t k = 0; k < 4; ++k) psi.push_back(m.phi[k] * h_scalar + n[k]);
    return psi;
}

LaurentSeries lorentz_dot(const VectorSeries& x, const VectorSeries& y) {
    LaurentSeries s = -(x.at(0) * y.at(0));
    for (size_t k = 1; k < x.size(); ++k) s += x[k] * y[k];
    return s;
}

FormReport quartic_via_gauss(const SurfaceModel& m) {
    if (m.ambient_kind != AmbientKind::sphere || m.ambient_dim != 4)
        throw ConfigError("pseudo Gauss route needs a surface in S^3");
    VectorSeries h0v = m.h0 * m.conf_inv;
    auto dN = [&m](const VectorSeries& v) { return normal_project(m, d_z(v)); };
    VectorSeries dnH = dN(m.mean);
    VectorSeries dnnH = dN(dnH);
    VectorSeries dnH0 = dN(h0v);
    LaurentSeries q = (dot(dnnH, h0v) - dot(dnH, dnH0)) * m.conf;
    q += curvature_shift(m) * dot(h0v, h0v) * (m.conf * m.conf).scaled(1, 4);
    return make_form_report(std::move(q), {4, 0}, m.ambient_dim);
}

FormReport montiel_cubic(const SurfaceModel& m) {
    if (m.ambient_dim != 4) throw ConfigError("cubic form needs a 4-dimensional ambient");
    LaurentSeries t = dot(d_zbar(m.h0), normal_J(m, m.h0)) * m.conf_inv;
    return make_form_report(std::move(t), {3, 0}, m.ambient_dim);
}

OcticPair montiel_octic(const SurfaceModel& m) {
    if (m.ambient_dim != 4) throw ConfigError("octic form needs a 4-dimensional ambient");
    const VectorSeries& h0 = m.h0;
    const LaurentSeries& gi = m.conf_inv;
    LaurentSeries gi2 = gi * gi;
    LaurentSeries hh = dot(h0, h0);
    LaurentSeries mixed = dot(m.mean, h0);
    LaurentSeries kt = curvature_shift(m);

    // normal-derivative route
    auto dN = [&m](const VectorSeries& v) { return normal_project(m, d_z(v)); };
    auto bN = [&m](const VectorSeries& v) { return normal_project(m, d_zbar(v)); };
    VectorSeries phn = dN(h0);
    VectorSeries bhn = bN(h0);
    VectorSeries pbhn = dN(bhn);
    LaurentSeries direct =
        gi2 * (dot(pbhn, pbhn) * hh.scaled(1, 4) + (dot(phn, phn) * dot(bhn, bhn)).scaled(1, 4) -
               (dot(pbhn, phn) * dot(bhn, h0)).scaled(1, 2) - (dot(pbhn, bhn) * dot(phn, h0)).scaled(1, 2) +
               (dot(pbhn, h0) * dot(phn, bhn)).scaled(1, 2));
    direct += kt.scaled(1, 4) * gi *
              (dot(pbhn, h0) * hh.scaled(1, 2) - dot(phn, h0) * dot(bhn, h0) + dot(phn, bhn) * hh.scaled(1, 2));
    direct += (kt * kt).scaled(1, 64) * (hh * hh);

    // Normal-derivative-free route: the tangential parts of d h0, dbar h0 and
    // of derivatives of normal fields have closed forms in h0, H, phi and g,
    // so the projections can be eliminated without ever building a frame.
    VectorSeries ph = d_z(h0);
    VectorSeries bh = d_zbar(h0);
    // d_z^T x = -<x,H> dphi - g^{-1}<x,h0> dbphi for any normal field x;
    // dbar^T h0 = -|h0|^2_WP g dphi - <H,h0> dbphi.
    auto strip_dz_tangential = [&](const VectorSeries& dx, const VectorSeries& x) {
        return dx + m.dphi * dot(x, m.mean) + m.dbphi * (dot(x, h0) * gi);
    };
    VectorSeries phf = strip_dz_tangential(ph, h0);
    VectorSeries bhf = bh + (m.dphi * (m.conf * m.wp) + m.dbphi * mixed);
    VectorSeries pbhf = strip_dz_tangential(d_z(bhf), bhf);
    LaurentSeries flat =
        gi2 * (dot(pbhf, pbhf) * hh.scaled(1, 4) + (dot(phf, phf) * dot(bhf, bhf)).scaled(1, 4) -
               (dot(pbhf, phf) * dot(bhf, h0)).scaled(1, 2) - (dot(pbhf, bhf) * dot(phf, h0)).scaled(1, 2) +
               (dot(pbhf, h0) * dot(phf, bhf)).scaled(1, 2));
    flat += kt.scaled(1, 4) * gi *
            (dot(pbhf, h0) * hh.scaled(1, 2) - dot(phf, h0) * dot(bhf, h0) + dot(phf, bhf) * hh.scaled(1, 2));
    flat += (kt * kt).scaled(1, 64) * (hh * hh);

    OcticPair out;
    out.direct = make_form_report(std::move(direct), {8, 0}, 4);
    out.normal_free = make_form_report(std::move(flat), {8, 0}, 4);
    const LaurentSeries& a = out.direct.form.scalar();
    const LaurentSeries& b = out.normal_free.form.scalar();
    out.agree = a.agrees_below(b, std::min(a.trunc(), b.trunc()));
    return out;
}

} // namespace willmore
