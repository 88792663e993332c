#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "willmore/errors.hpp"
#include "willmore/geometry.hpp"

using namespace willmore;
using willmore::testing::corpus_surface;

TEST_CASE("catenoid immersion slots") {
    SurfaceModel m = corpus_surface("catenoid");
    CHECK(m.kind == PointKind::minimal_end);
    CHECK(m.theta0 == 1);
    // phi = Re(-1/(2z) - z/2, i(-1/(2z) + z/2), .), third component log|z|
    CHECK(m.phi[0].coeff(-1, 0, 0) == Coeff::exact_frac(-1, 4));
    CHECK(m.phi[0].coeff(0, -1, 0) == Coeff::exact_frac(-1, 4));
    CHECK(m.phi[0].coeff(1, 0, 0) == Coeff::exact_frac(-1, 4));
    CHECK(m.phi[1].coeff(-1, 0, 0) == Coeff::exact_frac(0, 1, -1, 4));
    CHECK(m.phi[1].coeff(0, -1, 0) == Coeff::exact_frac(0, 1, 1, 4));
    CHECK(m.phi[2].coeff(0, 0, 1) == Coeff::exact(1));
    CHECK(m.phi[2].terms().size() == 1);
    for (const auto& s : m.phi) CHECK(s.is_real());
    CHECK(conformality_defect(m).is_zero_below_trunc());
    CHECK(is_zero_below_trunc(m.mean));
}

TEST_CASE("enneper immersion slots") {
    SurfaceModel m = corpus_surface("enneper");
    // phi = Re(z/2 - z^3/6, i(z/2 + z^3/6), z^2/2)
    CHECK(m.phi[0].coeff(1, 0, 0) == Coeff::exact_frac(1, 4));
    CHECK(m.phi[0].coeff(3, 0, 0) == Coeff::exact_frac(-1, 12));
    CHECK(m.phi[1].coeff(1, 0, 0) == Coeff::exact_frac(0, 1, 1, 4));
    CHECK(m.phi[1].coeff(3, 0, 0) == Coeff::exact_frac(0, 1, 1, 12));
    CHECK(m.phi[2].coeff(2, 0, 0) == Coeff::exact_frac(1, 4));
    CHECK(m.kind == PointKind::regular);
    CHECK(conformality_defect(m).is_zero_below_trunc());
}

TEST_CASE("plane immersion") {
    SurfaceModel m = corpus_surface("plane");
    CHECK(m.phi[0].coeff(1, 0, 0) == Coeff::exact_frac(1, 4));
    CHECK(m.phi[2].is_zero_below_trunc());
    CHECK(conformality_defect(m).is_zero_below_trunc());
    // constant conformal factor
    CHECK(m.conf.terms().size() == 1);
    CHECK(m.conf.coeff(0, 0, 0) == Coeff::exact_frac(1, 4));
}

TEST_CASE("expansion failures") {
    WeierstrassData zero_den;
    zero_den.g = RationalMap::constant(GaussRational(0));
    zero_den.f = {Polynomial{{GaussRational(1)}}, Polynomial::zero()};
    CHECK_THROWS_AS(weierstrass_immersion(zero_den, 8), ExpansionFailure);

    // imaginary residue of the height differential: multivalued immersion
    WeierstrassData winding;
    winding.g = RationalMap::constant(GaussRational(0));
    winding.f = {Polynomial{{GaussRational(0, 1)}}, Polynomial{{GaussRational(0), GaussRational(1)}}};
    CHECK_THROWS_AS(weierstrass_immersion(winding, 8), ExpansionFailure);

    CHECK_THROWS_AS(weierstrass_immersion(WeierstrassData{}, 2), ConfigError);
}

TEST_CASE("inversion multiplicities") {
    SurfaceModel invcat = testing::inverted_catenoid();
    CHECK(invcat.kind == PointKind::willmore_branch);
    CHECK(detect_multiplicity(invcat) == 1);

    SurfaceModel inve = testing::inverted_enneper();
    CHECK(inve.kind == PointKind::willmore_branch);
    CHECK(detect_multiplicity(inve) == 3);
    CHECK(conformality_defect(inve).is_zero_below_trunc());
}

TEST_CASE("ends of the corpus") {
    CHECK(detect_multiplicity(corpus_surface("catenoid")) == 1);
    CHECK(detect_multiplicity(corpus_surface("enneper_end")) == 3);
    CHECK(detect_multiplicity(corpus_surface("trinoid")) == 1);
    CHECK(detect_multiplicity(corpus_surface("henneberg_cover")) == 3);
    CHECK(detect_multiplicity(testing::round_sphere_r3()) == 1);
}

TEST_CASE("double inversion is the identity below trunc") {
    for (const char* name : {"catenoid", "enneper_end", "plane"}) {
        SurfaceModel m = corpus_surface(name);
        SurfaceModel twice = invert_immersion(invert_immersion(m));
        for (size_t k = 0; k < m.phi.size(); ++k) {
            int window = std::min(m.phi[k].trunc(), twice.phi[k].trunc());
            CHECK(m.phi[k].agrees_below(twice.phi[k], window));
        }
    }
}

TEST_CASE("stereographic lift") {
    SurfaceModel plane = corpus_surface("plane");
    SurfaceModel lifted = stereo_to_sphere(plane);
    CHECK(lifted.ambient_dim == 4);
    CHECK(lifted.ambient_kind == AmbientKind::sphere);
    CHECK(sphere_norm_defect(lifted).is_zero_below_trunc());
    // plane through the origin passes through the south pole
    CHECK(lifted.phi[3].coeff(0, 0, 0) == Coeff::exact(-1));
    for (int k = 0; k < 3; ++k) CHECK(lifted.phi[k].coeff(0, 0, 0).is_zero());

    SurfaceModel enneper = corpus_surface("enneper");
    SurfaceModel up = stereo_to_sphere(enneper);
    CHECK(sphere_norm_defect(up).is_zero_below_trunc());
    // conformal factor transforms with 4 / (|phi|^2 + 1)^2
    LaurentSeries n2 = dot(enneper.phi, enneper.phi);
    LaurentSeries denom = n2 + LaurentSeries::constant(Coeff::exact(1), n2.trunc());
    LaurentSeries predicted = enneper.conf * (denom * denom).invert().scaled(4, 1);
    CHECK(up.conf.agrees_below(predicted, std::min(up.conf.trunc(), predicted.trunc())));

    CHECK_THROWS_AS(stereo_to_sphere(up), ConfigError);
}

TEST_CASE("weingarten tensor is invariant under the inversion generator") {
    // H0(phi) = I_Psi(H0(Psi)) pointwise, for the trace-free curvature vectors
    SurfaceModel cat = corpus_surface("catenoid");
    SurfaceModel inv = invert_immersion(cat);
    VectorSeries h0_cat = cat.h0 * cat.conf_inv;
    VectorSeries h0_inv = inv.h0 * inv.conf_inv;
    LaurentSeries n2 = dot(inv.phi, inv.phi);
    VectorSeries mapped = h0_inv * n2 - inv.phi * dot(inv.phi, h0_inv).scaled(2, 1);
    for (size_t k = 0; k < mapped.size(); ++k) {
        int window = std::min(mapped[k].trunc(), h0_cat[k].trunc());
        CHECK(window >= 6);
        CHECK(mapped[k].agrees_below(h0_cat[k], window));
    }
}

TEST_CASE("backend conversion") {
    SurfaceModel cat = corpus_surface("catenoid", 8);
    SurfaceModel approx = convert(cat, Backend::approx);
    CHECK(approx.backend() == Backend::approx);
    CHECK(conformality_defect(approx).is_zero_below_trunc());
    CHECK_THROWS_AS(convert(approx, Backend::exact), ConfigError);
}

TEST_CASE("ambient four pads a zero component") {
    SurfaceSpec spec = load_surface_file(resolve_surface_path("enneper"));
    spec.data.ambient = 4;
    SurfaceModel m = weierstrass_immersion(spec.data, 8);
    REQUIRE(m.phi.size() == 4);
    CHECK(m.phi[3].is_zero_below_trunc());
    CHECK(conformality_defect(m).is_zero_below_trunc());
}
