#include "willmore/rational_map.hpp"

#include <algorithm>

#include "willmore/errors.hpp"

namespace willmore {

bool Polynomial::is_zero() const {
    for (const auto& v : c)
        if (!v.is_zero()) return false;
    return true;
}

int Polynomial::degree() const {
    for (int k = int(c.size()) - 1; k >= 0; --k)
        if (!c[k].is_zero()) return k;
    return -1;
}

int Polynomial::valuation() const {
    for (int k = 0; k < int(c.size()); ++k)
        if (!c[k].is_zero()) return k;
    return -1;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t k = 0; k < r.c.size(); ++k) {
        if (k < c.size()) r.c[k] = r.c[k] + c[k];
        if (k < o.c.size()) r.c[k] = r.c[k] + o.c[k];
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * GaussRational(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (c.empty() || o.c.empty()) return {};
    Polynomial r;
    r.c.resize(c.size() + o.c.size() - 1);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    return r;
}

Polynomial Polynomial::operator*(const GaussRational& s) const {
    Polynomial r = *this;
    for (auto& v : r.c) v = v * s;
    return r;
}

Polynomial Polynomial::pow(int k) const {
    Polynomial r = Polynomial::constant(GaussRational(1));
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

LaurentSeries Polynomial::expand(int trunc) const {
    LaurentSeries s(Backend::exact, trunc);
    for (int k = 0; k < int(c.size()); ++k)
        if (!c[k].is_zero()) s += LaurentSeries::monomial(Coeff(c[k]), k, 0, 0, trunc);
    return s;
}

RationalMap RationalMap::operator+(const RationalMap& o) const {
    return {num * o.den + o.num * den, den * o.den};
}

RationalMap RationalMap::operator-(const RationalMap& o) const { return *this + o * GaussRational(-1); }

RationalMap RationalMap::operator*(const RationalMap& o) const { return {num * o.num, den * o.den}; }

RationalMap RationalMap::operator*(const GaussRational& s) const { return {num * s, den}; }

namespace {

// p((az+b)/(cz+d)) (cz+d)^deg, with deg the allocated degree of p.
Polynomial mobius_numerator(const Polynomial& p, const Mobius& m, int deg) {
    Polynomial up{{m.b, m.a}};
    Polynomial lo{{m.d, m.c}};
    Polynomial acc = Polynomial::zero();
    for (int k = 0; k <= deg; ++k) {
        GaussRational ck = k < int(p.c.size()) ? p.c[k] : GaussRational(0);
        if (ck.is_zero()) continue;
        acc = acc + up.pow(k) * lo.pow(deg - k) * ck;
    }
    return acc;
}

} // namespace

RationalMap RationalMap::precompose(const Mobius& m) const {
    const int dn = std::max(num.degree(), 0);
    const int dd = std::max(den.degree(), 0);
    const int deg = std::max(dn, dd);
    return {mobius_numerator(num, m, deg), mobius_numerator(den, m, deg)};
}

LaurentSeries RationalMap::expand(int trunc) const {
    if (den.is_zero()) throw ExpansionFailure("rational map has zero denominator");
    if (num.is_zero()) return LaurentSeries::zero(Backend::exact, trunc);
    const int v = den.valuation();
    const int working = trunc + 2 * v + 2;
    LaurentSeries d = den.expand(working);
    LaurentSeries n = num.expand(working);
    return (n * d.invert()).with_trunc(trunc);
}

RationalMap pullback_form(const RationalMap& f, const Mobius& m) {
    RationalMap comp = f.precompose(m);
    Polynomial lo{{m.d, m.c}};
    RationalMap dm{Polynomial::constant(m.jacobian_det()), lo * lo};
    return comp * dm;
}

} // namespace willmore
