#include "willmore/branch.hpp"

#include <numeric>

#include "willmore/currents.hpp"
#include "willmore/errors.hpp"

namespace willmore {

namespace {

std::vector<Coeff> slot_vector(const VectorSeries& v, int a, int b, int p) {
    std::vector<Coeff> out;
    for (const auto& s : v) out.push_back(s.coeff(a, b, p));
    return out;
}

Coeff raw_pairing(const std::vector<Coeff>& x, const std::vector<Coeff>& y) {
    Coeff s = Coeff::zero(x.at(0).backend());
    for (size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
    return s;
}

// Branch germs admit no logarithm below degree theta0+2 (except the
// gamma0-slots at multiplicities one and two) and nothing below the leading
// degree; angular monomials of admissible degree are fine.
void check_shape(const VectorSeries& dphi, int theta0) {
    for (const auto& s : dphi) {
        for (const auto& [m, c] : s.terms()) {
            if (m.degree() > theta0 + 1) continue;
            if (m.degree() < theta0 - 1)
                throw ShapeMismatch("term below the leading branch degree");
            if (m.p == 0) continue;
            if (theta0 == 1 && m.p <= 2) continue;
            if (theta0 == 2 && m.p == 1 && m.a == 1 && m.b == 2) continue;
            throw ShapeMismatch("unexpected logarithm in the branch window");
        }
    }
}

} // namespace

std::vector<Coeff> conj(const std::vector<Coeff>& v) {
    std::vector<Coeff> out;
    for (const auto& c : v) out.push_back(c.conj());
    return out;
}

BranchExpansion extract_expansion(const SurfaceModel& m) {
    const int th = m.theta0;
    if (min_trunc(m.dphi) < th + 2)
        throw InsufficientOrder("branch extraction needs trunc >= theta0 + 2");
    check_shape(m.dphi, th);

    BranchExpansion e;
    e.backend = m.backend();
    e.theta0 = th;
    e.A0 = slot_vector(m.dphi, th - 1, 0, 0);
    e.A1 = slot_vector(m.dphi, th, 0, 0);
    e.A2 = slot_vector(m.dphi, th + 1, 0, 0);
    e.gamma0 = residues(m).gamma0;

    Coeff norm_a0 = raw_pairing(e.A0, conj(e.A0));
    if (norm_a0.is_zero()) throw ShapeMismatch("leading coefficient A0 vanishes");
    e.scale_sq = norm_a0.scaled(2, 1).inverse();

    if (th >= 3) {
        e.C1 = slot_vector(m.dphi, 1, th, 0);
        for (auto& c : e.C1) c = c.scaled(4 * th, 1);
        // the conjugate slot carries conj(C1)/8
        std::vector<Coeff> mirror = slot_vector(m.dphi, th - 1, 2, 0);
        for (size_t k = 0; k < mirror.size(); ++k)
            if (mirror[k].scaled(8, 1) != e.C1[k].conj())
                throw ShapeMismatch("conjugate C-slot is inconsistent with the C-slot");
    } else if (th == 2) {
        // gamma0 slot factors are in the divergence-form normalization,
        // which is -8 times ours; scale_sq moves slots to the |A0|^2 = 1/2 chart
        std::vector<Coeff> log_slot = slot_vector(m.dphi, 1, 2, 1);
        for (size_t k = 0; k < log_slot.size(); ++k)
            if (log_slot[k] * e.scale_sq != e.gamma0[k].scaled(2, 1))
                throw ShapeMismatch("gamma0 log-slot disagrees with the residue");
        Coeff inv_scale = e.scale_sq.inverse();
        e.C1 = slot_vector(m.dphi, 1, 2, 0);
        for (size_t k = 0; k < e.C1.size(); ++k)
            e.C1[k] = e.C1[k].scaled(4, 1) + e.gamma0[k].scaled(2, 1) * inv_scale;
    } else {
        std::vector<Coeff> log_slot = slot_vector(m.dphi, 0, 1, 1);
        for (size_t k = 0; k < log_slot.size(); ++k)
            if (log_slot[k] * e.scale_sq != e.gamma0[k].scaled(4, 1))
                throw ShapeMismatch("gamma0 log-slot disagrees with the residue");
    }

    e.alpha0 = normalized_pairing(e, conj(e.A0), e.A1);
    e.alpha1 = normalized_pairing(e, conj(e.A0), e.A2);
    return e;
}

Coeff normalized_pairing(const BranchExpansion& e, const std::vector<Coeff>& x, const std::vector<Coeff>& y) {
    return raw_pairing(x, y) * e.scale_sq;
}

PairingReport cancellation_check(const BranchExpansion& e) {
    PairingReport rep;
    auto add = [&](const std::string& name, const std::vector<Coeff>& x, const std::vector<Coeff>& y) {
        rep.pairings.emplace_back(name, normalized_pairing(e, x, y));
    };
    add("<A0,A0>", e.A0, e.A0);
    add("<A0,A1>", e.A0, e.A1);
    add("<conj A0,A1>", conj(e.A0), e.A1);
    if (!e.C1.empty()) {
        add("<A0,C1>", e.A0, e.C1);
        add("<conj A0,C1>", conj(e.A0), e.C1);
        add("<A1,C1>", e.A1, e.C1);
        Coeff residual = normalized_pairing(e, e.C1, conj(e.C1)) * normalized_pairing(e, e.A1, e.A1);
        rep.pairings.emplace_back("|C1|^2 <A1,A1>", residual);
    }
    add("<A0,gamma0>", e.A0, e.gamma0);
    rep.all_required_zero = true;
    for (const auto& [name, value] : rep.pairings)
        if (name != "<A0,gamma0>" && name != "|C1|^2 <A1,A1>" && !value.is_zero())
            rep.all_required_zero = false;
    return rep;
}

int second_residue(const SurfaceModel& m) {
    if (is_zero_below_trunc(m.mean) && min_trunc(m.mean) < 1)
        throw InsufficientOrder("mean curvature window too small");
    int alpha = 0;
    for (const auto& s : m.mean)
        for (const auto& [mono, c] : s.terms()) {
            if (mono.p != 0) continue;
            if (mono.b == 0 && mono.a < 0) alpha = std::max(alpha, -mono.a);
            if (mono.a == 0 && mono.b < 0) alpha = std::max(alpha, -mono.b);
        }
    return alpha;
}

TopologyReport jorge_meeks(const EndStructure& e) {
    const int chi = 2 - 2 * e.genus;
    int ends = 0, branches = 0;
    for (int mj : e.end_multiplicities) ends += mj + 1;
    for (int th : e.interior_branch_orders) branches += th - 1;
    const int numerator = -chi + ends - branches;
    if (numerator % 2 != 0) throw ParityViolation{};
    TopologyReport rep;
    rep.deg_gauss = numerator / 2;
    rep.total_curvature_over_2pi = -2 * rep.deg_gauss;
    rep.compact_curvature_over_2pi = chi;
    for (int mj : e.end_multiplicities) rep.compact_curvature_over_2pi += mj - 1;
    for (int th : e.interior_branch_orders) rep.compact_curvature_over_2pi += th - 1;
    return rep;
}

int predicted_energy_over_4pi(const EndStructure& e) {
    return std::accumulate(e.end_multiplicities.begin(), e.end_multiplicities.end(), 0);
}

SurfaceModel rescale(const SurfaceModel& m, long num, long den) {
    VectorSeries scaled;
    for (const auto& s : m.phi) scaled.push_back(s.scaled(num, den));
    SurfaceModel out = SurfaceModel::build(std::move(scaled), m.ambient_kind);
    out.kind = m.kind;
    out.theta0 = m.theta0;
    return out;
}

} // namespace willmore
