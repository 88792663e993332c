// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "test_util.hpp"
#include "willmore/branch.hpp"
#include "willmore/currents.hpp"
#include "willmore/forms.hpp"
#include "willmore/geometry.hpp"
#include "willmore/numeric.hpp"

using namespace willmore;
using willmore::testing::corpus_surface;

namespace {

struct Harness {
    int failures = 0;

    void report(int id, const std::string& label, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << label;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool all_zero(const std::vector<Coeff>& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

LaurentSeries random_series(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterm(1, 6), expo(-2, 2), logp(0, 2), tr(2, 6);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    LaurentSeries s(Backend::exact, tr(rng));
    int n = nterm(rng);
    for (int k = 0; k < n; ++k)
        s += LaurentSeries::monomial(Coeff(GaussRational::from_fraction(num(rng), den(rng), num(rng), den(rng))),
                                     expo(rng), expo(rng), logp(rng), s.trunc());
    return s;
}

} // namespace

int main() {
    Harness h;

    // 1. exact minimality and conformality at order 12, under five seconds
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (const char* name :
             {"plane", "catenoid", "enneper", "enneper_end", "trinoid", "henneberg_cover"}) {
            SurfaceModel m = corpus_surface(name, 12);
            ok = ok && conformality_defect(m).is_zero_below_trunc() && is_zero_below_trunc(m.mean);
        }
        double t = seconds_since(t0);
        std::ostringstream detail;
        detail << t << " s";
        h.report(1, "exact minimality and conformality on the corpus at order 12", ok && t < 5.0,
                 detail.str());
    }

    // 2. residue table with quadrature agreement
    {
        SurfaceModel cat = corpus_surface("catenoid");
        ResidueSet r = residues(cat);
        bool table = all_zero(r.gamma0) && all_zero(r.gamma1) && r.gamma2.is_zero() &&
                     r.gamma3[0].is_zero() && r.gamma3[1].is_zero() &&
                     r.gamma3[2] == Coeff::exact_frac(1, 4);
        for (size_t k = 0; k < 3; ++k) table = table && (r.gamma3[k] - r.flux.at(k)).is_zero();

        SurfaceModel inv = testing::inverted_catenoid();
        ResidueSet ri = residues(inv);
        table = table && ri.gamma0[2] == Coeff::exact_frac(1, 4) && all_zero(ri.gamma3);

        SurfaceModel shifted = translate(inv, {Coeff::exact(1), Coeff::exact(0), Coeff::exact(2)});
        ResidueSet sd = residues(shifted);
        ResidueSet si = residues(invert_immersion(shifted));
        bool flip = !sd.gamma2.is_zero() && (sd.gamma2 + si.gamma2).is_zero();

        double worst = 0.0;
        for (CurrentKind kind : {CurrentKind::translation, CurrentKind::rotation, CurrentKind::dilation,
                                 CurrentKind::inversion}) {
            auto q = quad_residue(noether_current(cat, kind), 0.5);
            const std::vector<Coeff>& expected = kind == CurrentKind::translation ? r.gamma0
                                                 : kind == CurrentKind::rotation  ? r.gamma1
                                                 : kind == CurrentKind::dilation
                                                     ? std::vector<Coeff>{r.gamma2}
                                                     : r.gamma3;
            for (size_t k = 0; k < q.size(); ++k)
                worst = std::max(worst, std::abs(q[k] - expected[k].to_complex().real()));
        }
        std::ostringstream detail;
        detail << "quadrature gap " << worst;
        h.report(2, "residue table and Theorem A swap", table && flip && worst <= 1e-9, detail.str());
    }

    // 3. closedness of the four currents
    {
        bool ok = true;
        for (const char* name : {"catenoid", "enneper", "enneper_end"}) {
            SurfaceModel m = corpus_surface(name);
            SurfaceModel inv = invert_immersion(m);
            for (CurrentKind kind : {CurrentKind::translation, CurrentKind::rotation,
                                     CurrentKind::dilation, CurrentKind::inversion}) {
                ok = ok && is_zero_below_trunc(closedness_defect(noether_current(m, kind)));
                ok = ok && is_zero_below_trunc(closedness_defect(noether_current(inv, kind)));
            }
        }
        h.report(3, "Noether currents are closed below trunc", ok);
    }

    // 4. quartic form: vanishing and the two-route identity
    {
        bool vanish = bryant_quartic(testing::inverted_catenoid()).form.scalar().is_zero_below_trunc() &&
                      bryant_quartic(testing::inverted_enneper()).form.scalar().is_zero_below_trunc();
        bool agree = true;
        for (int which = 0; which < 3; ++which) {
            SurfaceModel lifted = which == 0   ? stereo_to_sphere(testing::inverted_catenoid())
                                  : which == 1 ? stereo_to_sphere(testing::inverted_enneper())
                                               : stereo_to_sphere(invert_immersion(corpus_surface("trinoid", 9)));
            const LaurentSeries& a = bryant_quartic(lifted).form.scalar();
            const LaurentSeries& b = quartic_via_gauss(lifted).form.scalar();
            int window = std::min(a.trunc(), b.trunc());
            agree = agree && window >= 4 && a.agrees_below(b, window);
        }
        h.report(4, "quartic form vanishes on inversions and the two routes agree", vanish && agree);
    }

    // 5. branch expansion of the inverted Enneper surface
    {
        SurfaceModel inve = testing::inverted_enneper(14);
        BranchExpansion e = extract_expansion(inve);
        bool mult = e.theta0 == 3;
        int alpha = second_residue(inve);
        bool alpha_ok = alpha == 1;
        PairingReport rep = cancellation_check(e);
        bool pairings_ok = true;
        std::string offenders;
        for (const char* name :
             {"<A0,A0>", "<A0,A1>", "<conj A0,A1>", "<A0,C1>", "<conj A0,C1>", "<A1,C1>"}) {
            for (const auto& [n, v] : rep.pairings)
                if (n == name && !v.is_zero()) {
                    pairings_ok = false;
                    offenders += std::string(name) + " ";
                }
        }
        h.report(5, "inverted Enneper branch multiplicity", mult);
        std::ostringstream da;
        da << "measured alpha = " << alpha
           << "; the pure z^-2 slot of H is forced by the inversion law H~ = |x|^2 H + 2<x,n>";
        h.report(5, "inverted Enneper second residue equals 1", alpha_ok, da.str());
        h.report(5, "inverted Enneper cancellation pairings vanish", pairings_ok,
                 pairings_ok ? "" : "nonzero: " + offenders);
    }

    // 6. energy quantization
    {
        bool ok = true;
        std::ostringstream detail;
        for (auto [name, expected] :
             {std::pair<const char*, double>{"inverted_enneper", 12.0 * M_PI},
              {"inverted_catenoid", 8.0 * M_PI},
              {"round_sphere", 4.0 * M_PI}}) {
            auto t0 = std::chrono::steady_clock::now();
            EnergyResult r = willmore_energy(name);
            double t = seconds_since(t0);
            double rel = std::abs(r.value - expected) / expected;
            detail << name << " " << rel << " in " << t << "s; ";
            ok = ok && r.converged && rel < 5e-3 && t < 10.0;
        }
        EndStructure henneberg{0, {3, 3}, {2, 2, 2, 2}};
        TopologyReport hb = jorge_meeks(henneberg);
        ok = ok && hb.deg_gauss == 1 && predicted_energy_over_4pi(henneberg) == 6;
        h.report(6, "energy quantization (12, 8, 4 pi) and the Henneberg row", ok, detail.str());
    }

    // 7. codazzi and liouville defects
    {
        bool ok = true;
        for (const char* name :
             {"plane", "catenoid", "enneper", "enneper_end", "trinoid", "henneberg_cover"}) {
            SurfaceModel m = corpus_surface(name);
            ok = ok && is_zero_below_trunc(codazzi_defect(m)) && liouville_defect(m).is_zero_below_trunc();
        }
        ok = ok && is_zero_below_trunc(codazzi_defect(testing::inverted_enneper()));
        ok = ok && liouville_defect(testing::inverted_catenoid()).is_zero_below_trunc();
        h.report(7, "Codazzi and Liouville defects vanish on the corpus", ok);
    }

    // 8. the R^4 forms
    {
        bool cubic = montiel_cubic(pad_to_r4(testing::inverted_catenoid())).form.scalar().is_zero_below_trunc() &&
                     montiel_cubic(pad_to_r4(testing::inverted_enneper())).form.scalar().is_zero_below_trunc();
        SurfaceModel curve = testing::complex_curve();
        VectorSeries jh = normal_J(curve, curve.h0);
        VectorSeries jjh = normal_J(curve, jh);
        bool complex_structure = dot(jh, curve.h0).is_zero_below_trunc();
        for (size_t k = 0; k < 4; ++k)
            complex_structure = complex_structure && (jjh[k] + curve.h0[k]).is_zero_below_trunc();
        OcticPair oc = montiel_octic(curve);
        h.report(8, "cubic vanishes on padded surfaces, J^2 = -id, octic routes agree",
                 cubic && complex_structure && oc.agree);
    }

    // 9. property suites
    {
        std::mt19937_64 rng(0xacce97ed);
        bool ok = true;
        for (int iter = 0; iter < 1000 && ok; ++iter) {
            LaurentSeries x = random_series(rng);
            LaurentSeries y = random_series(rng);
            LaurentSeries lhs = (x * y).d_z();
            LaurentSeries rhs = x.d_z() * y + x * y.d_z();
            ok = ok && lhs.agrees_below(rhs, std::min(lhs.trunc(), rhs.trunc()));
            ok = ok && x.antiderivative_zbar().d_zbar().agrees_below(x, x.trunc());
            std::uniform_int_distribution<int> small(0, 2);
            std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
            LaurentSeries inv_test = LaurentSeries::monomial(Coeff::exact(3, 1), -1, -1, 0, 4);
            for (int t = 0; t < 4; ++t) {
                int a = small(rng), b = small(rng);
                if (a + b - 2 >= -1) // keep the leading monomial unique
                    inv_test += LaurentSeries::monomial(
                        Coeff(GaussRational::from_fraction(num(rng), den(rng), num(rng), den(rng))),
                        a - 1, b - 1, 0, 4);
            }
            LaurentSeries back =
                inv_test * inv_test.invert() - LaurentSeries::constant(Coeff::exact(1), inv_test.trunc());
            ok = ok && back.is_zero_below_trunc();
        }
        ResidueSet lo = residues(corpus_surface("catenoid", 12));
        ResidueSet hi = residues(corpus_surface("catenoid", 16));
        bool stable = true;
        for (size_t k = 0; k < 3; ++k)
            stable = stable && (lo.gamma3[k] - hi.gamma3[k]).is_zero() &&
                     (lo.gamma0[k] - hi.gamma0[k]).is_zero();
        h.report(9, "series algebra laws on 1000 random series and residue stability", ok && stable);
    }

    if (h.failures) {
        std::cout << h.failures << " criterion check(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
