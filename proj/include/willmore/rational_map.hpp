#ifndef WILLMORE_RATIONAL_MAP_HPP
#define WILLMORE_RATIONAL_MAP_HPP

#include <vector>

#include "willmore/series.hpp"

namespace willmore {

// Polynomial in z with Gaussian rational coefficients, ascending powers.
struct Polynomial {
    std::vector<GaussRational> c;

    static Polynomial constant(GaussRational v) { return {{std::move(v)}}; }
    static Polynomial zero() { return {}; }

    bool is_zero() const;
    int degree() const;
    int valuation() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const GaussRational& s) const;
    Polynomial pow(int k) const;

    LaurentSeries expand(int trunc) const;
};

// z -> (a z + b) / (c z + d), ad - bc != 0.
struct Mobius {
    GaussRational a, b, c, d;

    GaussRational jacobian_det() const { return a * d - b * c; }
};

// Quotient of two polynomials.
struct RationalMap {
    Polynomial num;
    Polynomial den = Polynomial::constant(GaussRational(1));

    static RationalMap constant(GaussRational v) { return {Polynomial::constant(std::move(v))}; }

    bool is_zero() const { return num.is_zero(); }

    RationalMap operator+(const RationalMap& o) const;
    RationalMap operator-(const RationalMap& o) const;
    RationalMap operator*(const RationalMap& o) const;
    RationalMap operator*(const GaussRational& s) const;

    // Substitute the Mobius map for z.
    RationalMap precompose(const Mobius& m) const;

    // Laurent expansion at z = 0 with all total degrees < trunc exact.
    LaurentSeries expand(int trunc) const;
};

// Pullback of the 1-form f dz under a Mobius map: (f o m) m'.
RationalMap pullback_form(const RationalMap& f, const Mobius& m);

} // namespace willmore

#endif
