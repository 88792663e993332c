#ifndef WILLMORE_SERIES_HPP
#define WILLMORE_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "willmore/coeff.hpp"

namespace willmore {

// One monomial z^a zbar^b log^p|z|.
struct Monomial {
    int a = 0;
    int b = 0;
    int p = 0;

    int degree() const { return a + b; }

    friend bool operator<(const Monomial& l, const Monomial& r) {
        if (l.degree() != r.degree()) return l.degree() < r.degree();
        if (l.a != r.a) return l.a < r.a;
        return l.p < r.p;
    }
    friend bool operator==(const Monomial& l, const Monomial& r) {
        return l.a == r.a && l.b == r.b && l.p == r.p;
    }
};

// Contribution of one monomial family to a circle integral of f dz:
// value 2*pi*i * coeff * r^r_exponent * log^log_power(r).
struct CirclePairing {
    int r_exponent = 0;
    int log_power = 0;
    Coeff coeff;
};

// Finite sum of c * z^a zbar^b log^p|z| known to be exact for all total
// degrees a+b < trunc.
class LaurentSeries {
public:
    explicit LaurentSeries(Backend be = Backend::exact, int trunc = 0) : backend_(be), trunc_(trunc) {}

    static LaurentSeries zero(Backend be, int trunc) { return LaurentSeries(be, trunc); }
    static LaurentSeries monomial(Coeff c, int a, int b, int p, int trunc);
    static LaurentSeries constant(Coeff c, int trunc);

    Backend backend() const { return backend_; }
    int trunc() const { return trunc_; }
    const std::map<Monomial, Coeff>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    // Minimal stored total degree; trunc for the zero series (nothing can be
    // seen below it).
    int ord() const;

    Coeff coeff(int a, int b, int p) const;
    void set(int a, int b, int p, Coeff c);

    bool is_zero_below_trunc() const { return terms_.empty(); }
    bool is_real() const;
    // Identical stored terms on degrees < upto.
    bool agrees_below(const LaurentSeries& o, int upto) const;

    double max_abs_coeff() const;

    LaurentSeries with_trunc(int t) const;
    LaurentSeries truncated(int t) const { return with_trunc(std::min(t, trunc_)); }

    LaurentSeries operator-() const;
    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator*(const Coeff& c) const;
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }

    LaurentSeries scaled(long num, long den) const { return *this * Coeff::one(backend_).scaled(num, den); }

    LaurentSeries conj() const;
    LaurentSeries real_part() const;

    LaurentSeries d_z() const;
    LaurentSeries d_zbar() const;

    // u with d_zbar(u) = *this termwise; z-holomorphic constant fixed to 0.
    LaurentSeries antiderivative_zbar() const;
    // Conjugate-symmetric rule: d_z(result) = *this.
    LaurentSeries antiderivative_z() const;

    // Reciprocal; requires a unique minimal-degree monomial with p = 0.
    LaurentSeries invert() const;

    // All contributions to the contour integral of (*this) dz over |z|=r.
    std::vector<CirclePairing> circle_pairing() const;

    // (1/4pi) Im of the circle integral, well-defined when every r- or
    // log-dependent contribution has zero real coefficient.
    Coeff im_residue() const;

    std::string str() const;

private:
    void insert(const Monomial& m, const Coeff& c);
    void prune();

    Backend backend_;
    int trunc_;
    std::map<Monomial, Coeff> terms_;
};

// Complex-bilinear pairing sum_k x_k * y_k of component lists.
using VectorSeries = std::vector<LaurentSeries>;

LaurentSeries dot(const VectorSeries& x, const VectorSeries& y);
VectorSeries operator+(const VectorSeries& x, const VectorSeries& y);
VectorSeries operator-(const VectorSeries& x, const VectorSeries& y);
VectorSeries operator*(const VectorSeries& x, const LaurentSeries& s);
VectorSeries operator*(const VectorSeries& x, const Coeff& c);
VectorSeries conj(const VectorSeries& x);
VectorSeries d_z(const VectorSeries& x);
VectorSeries d_zbar(const VectorSeries& x);
VectorSeries real_part(const VectorSeries& x);
bool is_real(const VectorSeries& x);
bool is_zero_below_trunc(const VectorSeries& x);
int min_trunc(const VectorSeries& x);
// Independent wedge components (i<j): x_i y_j - x_j y_i.
VectorSeries wedge(const VectorSeries& x, const VectorSeries& y);

} // namespace willmore

#endif
