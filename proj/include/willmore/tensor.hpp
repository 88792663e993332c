#ifndef WILLMORE_TENSOR_HPP
#define WILLMORE_TENSOR_HPP

#include <variant>

#include "willmore/series.hpp"

namespace willmore {

// (p,q) means dz^p (x) dzbar^q.
struct Bidegree {
    int p = 0;
    int q = 0;

    Bidegree operator+(const Bidegree& o) const { return {p + o.p, q + o.q}; }
    Bidegree operator-(const Bidegree& o) const { return {p - o.p, q - o.q}; }
    bool operator==(const Bidegree& o) const { return p == o.p && q == o.q; }
};

// Scalar- or vector-valued coefficient of dz^p (x) dzbar^q.
struct TensorField {
    std::variant<LaurentSeries, VectorSeries> value;
    Bidegree bidegree;
    int ambient_dim = 3;

    bool is_scalar() const { return std::holds_alternative<LaurentSeries>(value); }
    const LaurentSeries& scalar() const { return std::get<LaurentSeries>(value); }
    const VectorSeries& vector() const { return std::get<VectorSeries>(value); }

    static TensorField scalar_form(LaurentSeries s, Bidegree b, int dim = 3) {
        return {std::move(s), b, dim};
    }
    static TensorField vector_form(VectorSeries v, Bidegree b, int dim) {
        return {std::move(v), b, dim};
    }
};

// Bilinear pairing of tensor coefficients; bidegrees add.
inline TensorField wp_dot(const TensorField& x, const TensorField& y) {
    LaurentSeries s = x.is_scalar() ? (y.is_scalar() ? x.scalar() * y.scalar() : dot({x.scalar()}, {y.scalar()}))
                                    : dot(x.vector(), y.vector());
    return TensorField::scalar_form(std::move(s), x.bidegree + y.bidegree, x.ambient_dim);
}

inline TensorField tensor_d_z(const TensorField& x) {
    if (x.is_scalar()) return TensorField::scalar_form(x.scalar().d_z(), {x.bidegree.p + 1, x.bidegree.q}, x.ambient_dim);
    return TensorField::vector_form(d_z(x.vector()), {x.bidegree.p + 1, x.bidegree.q}, x.ambient_dim);
}

inline TensorField tensor_d_zbar(const TensorField& x) {
    if (x.is_scalar()) return TensorField::scalar_form(x.scalar().d_zbar(), {x.bidegree.p, x.bidegree.q + 1}, x.ambient_dim);
    return TensorField::vector_form(d_zbar(x.vector()), {x.bidegree.p, x.bidegree.q + 1}, x.ambient_dim);
}

// g^{-1} (x) xi = e^{-2 lambda} f dz^{p-1} dzbar^{q-1}; metric_inv is e^{-2 lambda}.
inline TensorField g_inverse(const TensorField& x, const LaurentSeries& metric_inv, int times = 1) {
    LaurentSeries w = metric_inv;
    for (int k = 1; k < times; ++k) w = w * metric_inv;
    if (x.is_scalar())
        return TensorField::scalar_form(x.scalar() * w, {x.bidegree.p - times, x.bidegree.q - times}, x.ambient_dim);
    return TensorField::vector_form(x.vector() * w, {x.bidegree.p - times, x.bidegree.q - times}, x.ambient_dim);
}

inline TensorField tensor_conj(const TensorField& x) {
    if (x.is_scalar()) return TensorField::scalar_form(x.scalar().conj(), {x.bidegree.q, x.bidegree.p}, x.ambient_dim);
    return TensorField::vector_form(conj(x.vector()), {x.bidegree.q, x.bidegree.p}, x.ambient_dim);
}

} // namespace willmore

#endif
