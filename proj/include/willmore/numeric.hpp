#ifndef WILLMORE_NUMERIC_HPP
#define WILLMORE_NUMERIC_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "willmore/currents.hpp"
#include "willmore/surface.hpp"

namespace willmore {

std::complex<double> eval(const LaurentSeries& s, std::complex<double> z);
std::vector<std::complex<double>> eval(const VectorSeries& v, std::complex<double> z);
// Heuristic size of the first untracked term.
double eval_error_bound(const LaurentSeries& s, double r);

// Polar samples of a component list on circles around the puncture.
struct SampledField {
    std::vector<double> radii;
    int samples_per_circle = 0;
    // values[i][j * components + k]: radius i, angle j, component k
    std::vector<std::vector<std::complex<double>>> values;
    std::string source;
};

SampledField sample_circles(const VectorSeries& v, const std::vector<double>& radii, int samples,
                            std::string source);

// Trapezoidal contour integral of Im(F dz) on |z| = r, in the same
// normalization as the symbolic residue set.
std::vector<double> quad_residue(const Current& c, double r, int samples = 256);

// First residue through the codimension-1 divergence form
// -(1/pi) int div(grad H n - H grad n - H^2 grad phi), for R^3 models,
// reported in the residue-set normalization.
std::vector<double> quad_divergence_gamma0(const SurfaceModel& m, double r, int samples = 256);

// Closed-form sample of an immersion: position, d_z, d_z d_zbar.
struct SurfaceSample {
    std::array<double, 3> position{};
    std::array<std::complex<double>, 3> d1{};
    std::array<double, 3> laplace_quarter{};  // d_z d_zbar phi, real for real phi
};

SurfaceSample catenoid_sample(std::complex<double> z);
SurfaceSample enneper_sample(std::complex<double> z);
SurfaceSample round_sphere_sample(std::complex<double> z);
SurfaceSample invert_sample(const SurfaceSample& base, const std::array<double, 3>& centre);

// |H|^2 e^{2 lambda} at a sample point.
double willmore_density(const SurfaceSample& s);

struct EnergyResult {
    double value = 0.0;
    bool converged = false;
    std::vector<double> levels;
};

// Exponential-coordinate tensor-product quadrature with extrapolation in the
// logarithmic radius window; surface is one of inverted_catenoid,
// inverted_enneper, round_sphere.
EnergyResult willmore_energy(const std::string& surface, int ntheta = 256, double ds = 0.03125,
                             double tolerance = 1e-7);

} // namespace willmore

#endif
