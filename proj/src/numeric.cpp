#include "willmore/numeric.hpp"

#include <cmath>

#include "willmore/errors.hpp"
#include "willmore/geometry.hpp"

namespace willmore {

std::complex<double> eval(const LaurentSeries& s, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    const double lg = std::log(std::abs(z));
    for (const auto& [m, c] : s.terms())
        acc += c.to_complex() * std::pow(z, m.a) * std::pow(std::conj(z), m.b) * std::pow(lg, m.p);
    return acc;
}

std::vector<std::complex<double>> eval(const VectorSeries& v, std::complex<double> z) {
    std::vector<std::complex<double>> out;
    for (const auto& s : v) out.push_back(eval(s, z));
    return out;
}

double eval_error_bound(const LaurentSeries& s, double r) { return std::pow(r, s.trunc()); }

SampledField sample_circles(const VectorSeries& v, const std::vector<double>& radii, int samples,
                            std::string source) {
    if (samples < 8) throw ConfigError("need at least eight samples per period");
    SampledField out;
    out.radii = radii;
    out.samples_per_circle = samples;
    out.source = std::move(source);
    for (double r : radii) {
        if (r <= 0.0) throw ConfigError("sampling radius must be positive");
        std::vector<std::complex<double>> ring;
        ring.reserve(size_t(samples) * v.size());
        for (int j = 0; j < samples; ++j) {
            std::complex<double> z = std::polar(r, 2.0 * M_PI * j / samples);
            for (const auto& s : v) ring.push_back(eval(s, z));
        }
        out.values.push_back(std::move(ring));
    }
    return out;
}

std::vector<double> quad_residue(const Current& c, double r, int samples) {
    if (samples < 8) throw ConfigError("need at least eight samples per period");
    std::vector<double> out(c.form.size(), 0.0);
    const double dtheta = 2.0 * M_PI / samples;
    for (int j = 0; j < samples; ++j) {
        std::complex<double> z = std::polar(r, dtheta * j);
        std::complex<double> dz = std::complex<double>(0.0, 1.0) * z * dtheta;
        for (size_t k = 0; k < out.size(); ++k) out[k] += std::imag(eval(c.form[k], z) * dz);
    }
    for (auto& v : out) v /= 8.0 * M_PI;
    return out;
}

std::vector<double> quad_divergence_gamma0(const SurfaceModel& m, double r, int samples) {
    if (m.ambient_dim != 3 || m.ambient_kind != AmbientKind::euclidean)
        throw ConfigError("divergence-form residue needs an R^3 model");
    VectorSeries n = unit_normal(m);
    LaurentSeries h_scalar = dot(m.mean, n);
    VectorSeries dz_n = d_z(n);
    LaurentSeries dz_h = h_scalar.d_z();

    // d_r X = 2 Re((z/|z|) d_z X) for real X
    auto radial = [](const LaurentSeries& s_dz, std::complex<double> z) {
        return 2.0 * std::real(eval(s_dz, z) * z / std::abs(z));
    };

    std::vector<double> acc(3, 0.0);
    const double dtheta = 2.0 * M_PI / samples;
    for (int j = 0; j < samples; ++j) {
        std::complex<double> z = std::polar(r, dtheta * j);
        double H = std::real(eval(h_scalar, z));
        double dr_h = radial(dz_h, z);
        for (int k = 0; k < 3; ++k) {
            double nk = std::real(eval(n[k], z));
            double dr_nk = radial(dz_n[k], z);
            double dr_pk = radial(m.dphi[k], z);
            acc[k] += (dr_h * nk - H * dr_nk - H * H * dr_pk) * r * dtheta;
        }
    }
    // -(1/pi) gives the divergence-form residue, a factor -8 times ours.
    for (auto& v : acc) v *= -1.0 / M_PI / -8.0;
    return acc;
}

namespace {

std::array<double, 3> real_parts(const std::array<std::complex<double>, 3>& v) {
    return {v[0].real(), v[1].real(), v[2].real()};
}

} // namespace

SurfaceSample catenoid_sample(std::complex<double> z) {
    SurfaceSample s;
    std::complex<double> a0 = -0.5 / z - 0.5 * z;
    std::complex<double> a1 = std::complex<double>(0, -0.5) / z + std::complex<double>(0, 0.5) * z;
    s.position = {a0.real(), a1.real(), std::log(std::abs(z))};
    s.d1 = {0.25 / (z * z) - 0.25, std::complex<double>(0, 0.25) / (z * z) + std::complex<double>(0, 0.25),
            0.5 / z};
    s.laplace_quarter = {0.0, 0.0, 0.0};
    return s;
}

SurfaceSample enneper_sample(std::complex<double> z) {
    SurfaceSample s;
    std::complex<double> a0 = 0.5 * z - z * z * z / 6.0;
    std::complex<double> a1 = std::complex<double>(0, 1) * (0.5 * z + z * z * z / 6.0);
    std::complex<double> a2 = 0.5 * z * z;
    s.position = {a0.real(), a1.real(), a2.real()};
    s.d1 = {0.25 * (1.0 - z * z), std::complex<double>(0, 0.25) * (1.0 + z * z), 0.5 * z};
    s.laplace_quarter = {0.0, 0.0, 0.0};
    return s;
}

SurfaceSample round_sphere_sample(std::complex<double> z) {
    SurfaceSample s;
    const double n2 = std::norm(z);
    const double D = 1.0 + n2;
    s.position = {2.0 * z.real() / D, 2.0 * z.imag() / D, (n2 - 1.0) / D};
    std::complex<double> zb = std::conj(z);
    s.d1 = {(1.0 - zb * zb) / (D * D), std::complex<double>(0, -1) * (1.0 + zb * zb) / (D * D),
            2.0 * zb / (D * D)};
    double D3 = D * D * D;
    s.laplace_quarter = {-2.0 * 2.0 * z.real() / D3, -2.0 * 2.0 * z.imag() / D3, 2.0 * (1.0 - n2) / D3};
    return s;
}

SurfaceSample invert_sample(const SurfaceSample& base, const std::array<double, 3>& centre) {
    std::array<double, 3> p;
    for (int k = 0; k < 3; ++k) p[k] = base.position[k] - centre[k];
    double n2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];

    std::complex<double> dn2 = 0.0;
    double ddbn2 = 0.0;
    for (int k = 0; k < 3; ++k) {
        dn2 += 2.0 * p[k] * base.d1[k];
        ddbn2 += 2.0 * (std::norm(base.d1[k]) + p[k] * base.laplace_quarter[k]);
    }
    SurfaceSample out;
    for (int k = 0; k < 3; ++k) out.position[k] = p[k] / n2;
    for (int k = 0; k < 3; ++k) out.d1[k] = base.d1[k] / n2 - p[k] * dn2 / (n2 * n2);
    for (int k = 0; k < 3; ++k) {
        std::complex<double> t = base.laplace_quarter[k] / n2;
        t -= (base.d1[k] * std::conj(dn2) + std::conj(base.d1[k]) * dn2) / (n2 * n2);
        t -= p[k] * ddbn2 / (n2 * n2);
        t += 2.0 * p[k] * std::norm(dn2) / (n2 * n2 * n2);
        out.laplace_quarter[k] = t.real();
    }
    return out;
}

double willmore_density(const SurfaceSample& s) {
    double conf = 0.0;
    for (int k = 0; k < 3; ++k) conf += 2.0 * std::norm(s.d1[k]);
    double h2 = 0.0;
    for (int k = 0; k < 3; ++k) {
        double hk = 2.0 * s.laplace_quarter[k] / conf;
        h2 += hk * hk;
    }
    return h2 * conf;
}

EnergyResult willmore_energy(const std::string& surface, int ntheta, double ds, double tolerance) {
    SurfaceSample (*base)(std::complex<double>) = nullptr;
    std::array<double, 3> centre{0.0, 0.0, 0.0};
    bool invert = true;
    if (surface == "inverted_catenoid") {
        base = catenoid_sample;
    } else if (surface == "inverted_enneper") {
        base = enneper_sample;
        centre = {0.0, 0.0, 1.0};
    } else if (surface == "round_sphere") {
        base = round_sphere_sample;
        invert = false;
    } else {
        throw ConfigError("no closed-form parametrization for surface '" + surface + "'");
    }

    auto density = [&](double s, double theta) {
        std::complex<double> z = std::polar(std::exp(s), theta);
        SurfaceSample sample = base(z);
        if (invert) sample = invert_sample(sample, centre);
        return willmore_density(sample) * std::exp(2.0 * s);
    };

    auto window_value = [&](double S) {
        const int ns = int(2.0 * S / ds) + 1;
        const double hs = 2.0 * S / (ns - 1);
        const double dtheta = 2.0 * M_PI / ntheta;
        double acc = 0.0;
        for (int i = 0; i < ns; ++i) {
            double s = -S + i * hs;
            double w = (i == 0 || i == ns - 1) ? 0.5 : 1.0;
            double ring = 0.0;
            for (int j = 0; j < ntheta; ++j) ring += density(s, j * dtheta);
            acc += w * ring * dtheta * hs;
        }
        return acc;
    };

    EnergyResult out;
    double prev = 0.0, prev_diff = 0.0;
    for (double S = 4.0; S <= 24.0; S += 2.0) {
        double value = window_value(S);
        out.levels.push_back(value);
        if (out.levels.size() >= 2) {
            double diff = std::abs(value - prev);
            if (diff < tolerance * std::max(1.0, std::abs(value))) {
                // geometric tail extrapolation
                double rho = prev_diff > 0.0 ? diff / prev_diff : 0.0;
                out.value = rho > 0.0 && rho < 0.9 ? value + (value - prev) * rho / (1.0 - rho) : value;
                out.converged = true;
                return out;
            }
            if (out.levels.size() >= 3 && diff > prev_diff)
                throw NonConvergent("window increments are not decreasing");
            prev_diff = diff;
        }
        prev = value;
    }
    out.value = prev;
    throw NonConvergent("no convergence within the largest window");
}

} // namespace willmore
