#include "willmore/surface.hpp"

#include "willmore/errors.hpp"

namespace willmore {

namespace {

// phi = Re(primitive of a pure-z series), as a Laurent-log series. A 1/z term
// needs a real coefficient, otherwise the primitive winds around the puncture.
LaurentSeries real_primitive_z(const LaurentSeries& s) {
    LaurentSeries out(s.backend(), s.trunc() + 1);
    for (const auto& [m, c] : s.terms()) {
        if (m.b != 0 || m.p != 0)
            throw ExpansionFailure("height differential expansion is not a pure power series in z");
        if (m.a == -1) {
            Coeff re = (c + c.conj()).scaled(1, 2);
            if ((c - re).is_zero() == false)
                throw ExpansionFailure("imaginary period at the puncture: immersion would be multivalued");
            out += LaurentSeries::monomial(re, 0, 0, 1, s.trunc() + 1);
            continue;
        }
        Coeff half = c.scaled(1, 2 * (m.a + 1));
        out += LaurentSeries::monomial(half, m.a + 1, 0, 0, s.trunc() + 1);
        out += LaurentSeries::monomial(half.conj(), 0, m.a + 1, 0, s.trunc() + 1);
    }
    return out;
}

} // namespace

SurfaceModel SurfaceModel::build(VectorSeries phi, AmbientKind kind) {
    SurfaceModel m;
    m.ambient_dim = int(phi.size());
    m.ambient_kind = kind;
    m.phi = std::move(phi);
    m.dphi = d_z(m.phi);
    m.dbphi = d_zbar(m.phi);
    m.ddbphi = d_zbar(m.dphi);
    m.conf = dot(m.dphi, m.dbphi).scaled(2, 1);
    m.conf_inv = m.conf.invert();
    m.dz_lambda = (m.conf_inv * m.conf.d_z()).scaled(1, 2);
    m.mean_euclid = m.ddbphi * m.conf_inv.scaled(2, 1);
    m.mean = m.mean_euclid;
    if (kind == AmbientKind::sphere) m.mean = m.mean + m.phi;
    const Coeff two = Coeff::one(m.backend()).scaled(2, 1);
    m.h0 = (d_z(m.dphi) - m.dphi * (m.dz_lambda * two)) * two;
    m.wp = dot(m.h0, conj(m.h0)) * (m.conf_inv * m.conf_inv);
    m.gauss = dot(m.mean, m.mean) - m.wp;
    if (kind == AmbientKind::sphere)
        m.gauss += LaurentSeries::constant(Coeff::one(m.backend()), m.gauss.trunc());

    int o = m.dphi.at(0).trunc();
    for (const auto& s : m.dphi) o = std::min(o, s.ord());
    if (is_zero_below_trunc(m.dphi)) o = 0;
    if (o < 0) {
        m.kind = PointKind::minimal_end;
        m.theta0 = -o - 1;
    } else if (o > 0) {
        m.kind = PointKind::willmore_branch;
        m.theta0 = o + 1;
    } else {
        m.kind = PointKind::regular;
        m.theta0 = 1;
    }
    return m;
}

SurfaceModel weierstrass_immersion(const WeierstrassData& data, int order, Backend be) {
    if (order < 4) throw ConfigError("expansion order must be at least 4");
    RationalMap g = data.g, f = data.f;
    if (data.chart) {
        g = g.precompose(*data.chart);
        f = pullback_form(f, *data.chart);
    }
    const RationalMap one = RationalMap::constant(GaussRational(1));
    const GaussRational half(mpq_class(1, 2), mpq_class(0));
    const GaussRational ihalf(mpq_class(0), mpq_class(1, 2));
    RationalMap g2 = g * g;
    RationalMap c1 = f * (one - g2) * half;
    RationalMap c2 = f * (one + g2) * ihalf;
    RationalMap c3 = f * g;

    VectorSeries phi;
    for (const RationalMap* comp : {&c1, &c2, &c3})
        phi.push_back(real_primitive_z(comp->expand(order)));
    if (data.ambient == 4) phi.push_back(LaurentSeries::zero(Backend::exact, phi[0].trunc()));
    if (be == Backend::approx)
        for (auto& s : phi) s = convert(s, be);
    return SurfaceModel::build(std::move(phi));
}

SurfaceModel invert_immersion(const SurfaceModel& m) {
    LaurentSeries norm2_inv = dot(m.phi, m.phi).invert();
    SurfaceModel out = SurfaceModel::build(m.phi * norm2_inv, m.ambient_kind);
    if (m.kind == PointKind::minimal_end) {
        out.kind = PointKind::willmore_branch;
        out.theta0 = m.theta0;
    }
    return out;
}

SurfaceModel stereo_to_sphere(const SurfaceModel& m) {
    if (m.ambient_kind != AmbientKind::euclidean)
        throw ConfigError("stereographic lift expects a euclidean model");
    LaurentSeries norm2 = dot(m.phi, m.phi);
    const Coeff one = Coeff::one(m.backend());
    LaurentSeries scale = (norm2 + LaurentSeries::constant(one, norm2.trunc())).invert();
    VectorSeries lifted;
    for (const auto& s : m.phi) lifted.push_back(s.scaled(2, 1) * scale);
    lifted.push_back((norm2 - LaurentSeries::constant(one, norm2.trunc())) * scale);
    SurfaceModel out = SurfaceModel::build(std::move(lifted), AmbientKind::sphere);
    out.kind = m.kind;
    out.theta0 = m.theta0;
    return out;
}

int detect_multiplicity(const SurfaceModel& m) {
    if (is_zero_below_trunc(m.dphi)) throw InsufficientOrder("d_z phi has no stored term");
    return m.theta0;
}

SurfaceModel translate(const SurfaceModel& m, const std::vector<Coeff>& offset) {
    VectorSeries moved = m.phi;
    for (size_t k = 0; k < moved.size() && k < offset.size(); ++k)
        moved[k] += LaurentSeries::constant(offset[k], moved[k].trunc());
    return SurfaceModel::build(std::move(moved), m.ambient_kind);
}

SurfaceModel pad_to_r4(const SurfaceModel& m) {
    if (m.ambient_dim != 3) throw ConfigError("padding expects a 3-dimensional ambient");
    VectorSeries padded = m.phi;
    padded.push_back(LaurentSeries::zero(m.backend(), padded[0].trunc()));
    SurfaceModel out = SurfaceModel::build(std::move(padded), m.ambient_kind);
    out.kind = m.kind;
    out.theta0 = m.theta0;
    return out;
}

SurfaceModel euclidean_view(const SurfaceModel& m) {
    SurfaceModel out = SurfaceModel::build(m.phi, AmbientKind::euclidean);
    out.kind = m.kind;
    out.theta0 = m.theta0;
    return out;
}

LaurentSeries conformality_defect(const SurfaceModel& m) { return dot(m.dphi, m.dphi); }

LaurentSeries sphere_norm_defect(const SurfaceModel& m) {
    LaurentSeries n = dot(m.phi, m.phi);
    return n - LaurentSeries::constant(Coeff::one(m.backend()), n.trunc());
}

LaurentSeries convert(const LaurentSeries& s, Backend be) {
    if (s.backend() == be) return s;
    if (be == Backend::exact) throw ConfigError("cannot promote approx coefficients to exact");
    LaurentSeries out(be, s.trunc());
    for (const auto& [m, c] : s.terms())
        out += LaurentSeries::monomial(Coeff(c.to_complex()), m.a, m.b, m.p, s.trunc());
    return out;
}

VectorSeries convert(const VectorSeries& v, Backend be) {
    VectorSeries out;
    for (const auto& s : v) out.push_back(convert(s, be));
    return out;
}

SurfaceModel convert(const SurfaceModel& m, Backend be) {
    SurfaceModel out = SurfaceModel::build(convert(m.phi, be), m.ambient_kind);
    out.kind = m.kind;
    out.theta0 = m.theta0;
    return out;
}

} // namespace willmore
