#include "willmore/series.hpp"

#include <algorithm>
#include <sstream>

namespace willmore {

LaurentSeries LaurentSeries::monomial(Coeff c, int a, int b, int p, int trunc) {
    LaurentSeries s(c.backend(), trunc);
    s.insert({a, b, p}, c);
    return s;
}

LaurentSeries LaurentSeries::constant(Coeff c, int trunc) { return monomial(std::move(c), 0, 0, 0, trunc); }

int LaurentSeries::ord() const {
    if (terms_.empty()) return trunc_;
    return terms_.begin()->first.degree();
}

Coeff LaurentSeries::coeff(int a, int b, int p) const {
    auto it = terms_.find({a, b, p});
    if (it == terms_.end()) return Coeff::zero(backend_);
    return it->second;
}

void LaurentSeries::set(int a, int b, int p, Coeff c) {
    terms_.erase({a, b, p});
    insert({a, b, p}, std::move(c));
}

void LaurentSeries::insert(const Monomial& m, const Coeff& c) {
    if (m.degree() >= trunc_) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void LaurentSeries::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero() || it->first.degree() >= trunc_)
            it = terms_.erase(it);
        else
            ++it;
    }
}

bool LaurentSeries::is_real() const {
    for (const auto& [m, c] : terms_) {
        if (coeff(m.b, m.a, m.p).conj() != c) return false;
    }
    return true;
}

bool LaurentSeries::agrees_below(const LaurentSeries& o, int upto) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() < upto && o.coeff(m.a, m.b, m.p) != c) return false;
    for (const auto& [m, c] : o.terms_)
        if (m.degree() < upto && coeff(m.a, m.b, m.p) != c) return false;
    return true;
}

double LaurentSeries::max_abs_coeff() const {
    double r = 0.0;
    for (const auto& [m, c] : terms_) r = std::max(r, std::abs(c.to_complex()));
    return r;
}

LaurentSeries LaurentSeries::with_trunc(int t) const {
    LaurentSeries s(backend_, t);
    for (const auto& [m, c] : terms_) s.insert(m, c);
    return s;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s(backend_, trunc_);
    for (const auto& [m, c] : terms_) s.terms_.emplace(m, -c);
    return s;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (backend_ != o.backend_) throw BackendMismatch{};
    LaurentSeries s(backend_, std::min(trunc_, o.trunc_));
    s.terms_ = terms_;
    s.prune();
    for (const auto& [m, c] : o.terms_) s.insert(m, c);
    return s;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (backend_ != o.backend_) throw BackendMismatch{};
    LaurentSeries s(backend_, std::min(trunc_ + o.ord(), o.trunc_ + ord()));
    for (const auto& [mx, cx] : terms_)
        for (const auto& [my, cy] : o.terms_)
            s.insert({mx.a + my.a, mx.b + my.b, mx.p + my.p}, cx * cy);
    return s;
}

LaurentSeries LaurentSeries::operator*(const Coeff& c) const {
    LaurentSeries s(backend_, trunc_);
    if (c.is_zero()) return s;
    for (const auto& [m, cc] : terms_) s.insert(m, cc * c);
    return s;
}

LaurentSeries LaurentSeries::conj() const {
    LaurentSeries s(backend_, trunc_);
    for (const auto& [m, c] : terms_) s.insert({m.b, m.a, m.p}, c.conj());
    return s;
}

LaurentSeries LaurentSeries::real_part() const {
    return (*this + conj()).scaled(1, 2);
}

LaurentSeries LaurentSeries::d_z() const {
    LaurentSeries s(backend_, trunc_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m.a != 0) s.insert({m.a - 1, m.b, m.p}, c.scaled(m.a, 1));
        if (m.p > 0) s.insert({m.a - 1, m.b, m.p - 1}, c.scaled(m.p, 2));
    }
    return s;
}

LaurentSeries LaurentSeries::d_zbar() const {
    LaurentSeries s(backend_, trunc_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m.b != 0) s.insert({m.a, m.b - 1, m.p}, c.scaled(m.b, 1));
        if (m.p > 0) s.insert({m.a, m.b - 1, m.p - 1}, c.scaled(m.p, 2));
    }
    return s;
}

LaurentSeries LaurentSeries::antiderivative_zbar() const {
    LaurentSeries s(backend_, trunc_ + 1);
    for (const auto& [m, c] : terms_) {
        if (m.b == -1) {
            // d_zbar(z^a log^{p+1}) = ((p+1)/2) z^a zbar^{-1} log^p
            s.insert({m.a, 0, m.p + 1}, c.scaled(2, m.p + 1));
            continue;
        }
        // Solve the lower-triangular system for z^a zbar^{b+1} log^j, j <= p.
        Coeff cj = c.scaled(1, m.b + 1);
        s.insert({m.a, m.b + 1, m.p}, cj);
        for (int j = m.p - 1; j >= 0; --j) {
            cj = (-cj).scaled(j + 1, 2 * (m.b + 1));
            s.insert({m.a, m.b + 1, j}, cj);
        }
    }
    return s;
}

LaurentSeries LaurentSeries::antiderivative_z() const {
    return conj().antiderivative_zbar().conj();
}

LaurentSeries LaurentSeries::invert() const {
    if (terms_.empty()) throw LeadingPartNotInvertible("series is zero below its truncation order");
    auto lead = terms_.begin();
    const Monomial m0 = lead->first;
    if (m0.p != 0) throw LeadingPartNotInvertible("leading part carries a logarithm");
    auto second = std::next(lead);
    if (second != terms_.end() && second->first.degree() == m0.degree())
        throw LeadingPartNotInvertible("several monomials at minimal total degree");

    const int window = trunc_ - m0.degree();
    // s = c m (1 + u), ord(u) >= 1 on the reliable window.
    LaurentSeries lead_inv = monomial(lead->second.inverse(), -m0.a, -m0.b, 0, window - m0.degree());
    LaurentSeries u = *this * lead_inv - constant(Coeff::one(backend_), window);
    LaurentSeries acc = constant(Coeff::one(backend_), window);
    LaurentSeries pw = constant(Coeff::one(backend_), window);
    for (int k = 1; k < window && !u.empty(); ++k) {
        pw = (pw * u).with_trunc(window);
        if (pw.empty()) break;
        acc += (k % 2 == 1) ? -pw : pw;
    }
    return (lead_inv * acc).with_trunc(trunc_ - 2 * m0.degree());
}

std::vector<CirclePairing> LaurentSeries::circle_pairing() const {
    std::vector<CirclePairing> out;
    for (const auto& [m, c] : terms_) {
        if (m.b != m.a + 1) continue;
        out.push_back({m.a + m.b + 1, m.p, c});
    }
    return out;
}

Coeff LaurentSeries::im_residue() const {
    if (trunc_ < 0) throw InsufficientOrder("residue slot lies outside the reliable window");
    for (const auto& contrib : circle_pairing()) {
        if (contrib.r_exponent == 0 && contrib.log_power == 0) continue;
        if (!contrib.coeff.real_part_zero()) throw RIndependenceViolated{};
    }
    // (1/4pi) Im(2 pi i c) = Re(c)/2.
    Coeff c = coeff(-1, 0, 0);
    return (c + c.conj()).scaled(1, 4);
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.re_string() << (c.im_string()[0] == '-' ? "" : "+") << c.im_string() << "i)";
        if (m.a) os << " z^" << m.a;
        if (m.b) os << " zb^" << m.b;
        if (m.p) os << " log^" << m.p;
    }
    if (first) os << "0";
    os << " + O(" << trunc_ << ")";
    return os.str();
}

LaurentSeries dot(const VectorSeries& x, const VectorSeries& y) {
    LaurentSeries s = x.at(0) * y.at(0);
    for (size_t k = 1; k < x.size(); ++k) s += x[k] * y[k];
    return s;
}

VectorSeries operator+(const VectorSeries& x, const VectorSeries& y) {
    VectorSeries out;
    for (size_t k = 0; k < x.size(); ++k) out.push_back(x[k] + y[k]);
    return out;
}

VectorSeries operator-(const VectorSeries& x, const VectorSeries& y) {
    VectorSeries out;
    for (size_t k = 0; k < x.size(); ++k) out.push_back(x[k] - y[k]);
    return out;
}

VectorSeries operator*(const VectorSeries& x, const LaurentSeries& s) {
    VectorSeries out;
    for (const auto& c : x) out.push_back(c * s);
    return out;
}

VectorSeries operator*(const VectorSeries& x, const Coeff& c) {
    VectorSeries out;
    for (const auto& s : x) out.push_back(s * c);
    return out;
}

VectorSeries conj(const VectorSeries& x) {
    VectorSeries out;
    for (const auto& s : x) out.push_back(s.conj());
    return out;
}

VectorSeries d_z(const VectorSeries& x) {
    VectorSeries out;
    for (const auto& s : x) out.push_back(s.d_z());
    return out;
}

VectorSeries d_zbar(const VectorSeries& x) {
    VectorSeries out;
    for (const auto& s : x) out.push_back(s.d_zbar());
    return out;
}

VectorSeries real_part(const VectorSeries& x) {
    VectorSeries out;
    for (const auto& s : x) out.push_back(s.real_part());
    return out;
}

bool is_real(const VectorSeries& x) {
    for (const auto& s : x)
        if (!s.is_real()) return false;
    return true;
}

bool is_zero_below_trunc(const VectorSeries& x) {
    for (const auto& s : x)
        if (!s.is_zero_below_trunc()) return false;
    return true;
}

int min_trunc(const VectorSeries& x) {
    int t = x.at(0).trunc();
    for (const auto& s : x) t = std::min(t, s.trunc());
    return t;
}

VectorSeries wedge(const VectorSeries& x, const VectorSeries& y) {
    VectorSeries out;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j) out.push_back(x[i] * y[j] - x[j] * y[i]);
    return out;
}

} // namespace willmore
