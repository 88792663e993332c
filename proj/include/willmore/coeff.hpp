#ifndef WILLMORE_COEFF_HPP
#define WILLMORE_COEFF_HPP

#include <complex>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "willmore/errors.hpp"

namespace willmore {

// Complex number with exact rational real and imaginary parts.
struct GaussRational {
    mpq_class re, im;

    GaussRational() : re(0), im(0) {}
    GaussRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussRational(long r, long i = 0) : re(r), im(i) {}

    static GaussRational from_fraction(long rnum, long rden, long inum = 0, long iden = 1) {
        mpq_class r(rnum, rden), i(inum, iden);
        r.canonicalize();
        i.canonicalize();
        return {r, i};
    }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRational conj() const { return {re, -im}; }

    GaussRational operator-() const { return {-re, -im}; }
    GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
    GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
    GaussRational operator*(const GaussRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRational inverse() const {
        mpq_class n = re * re + im * im;
        if (n == 0) throw Error("division by zero GaussRational");
        return {re / n, -im / n};
    }
    GaussRational operator/(const GaussRational& o) const { return *this * o.inverse(); }

    bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRational& o) const { return !(*this == o); }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

enum class Backend { exact, approx };

// Chop tolerance for the approx backend: anything smaller is zero to predicates.
inline constexpr double kChopTolerance = 1e-10;

// Series coefficient: exact Gaussian rational or complex double with chop.
class Coeff {
public:
    Coeff() : v_(GaussRational{}) {}
    Coeff(GaussRational g) : v_(std::move(g)) {}
    Coeff(std::complex<double> z) : v_(z) {}

    static Coeff exact(long re, long im = 0) { return Coeff(GaussRational(re, im)); }
    static Coeff exact_frac(long rnum, long rden, long inum = 0, long iden = 1) {
        return Coeff(GaussRational::from_fraction(rnum, rden, inum, iden));
    }
    static Coeff zero(Backend b) {
        return b == Backend::exact ? Coeff(GaussRational{}) : Coeff(std::complex<double>{0.0, 0.0});
    }
    static Coeff one(Backend b) {
        return b == Backend::exact ? Coeff(GaussRational(1, 0)) : Coeff(std::complex<double>{1.0, 0.0});
    }

    Backend backend() const { return std::holds_alternative<GaussRational>(v_) ? Backend::exact : Backend::approx; }

    const GaussRational& rational() const { return std::get<GaussRational>(v_); }

    bool is_zero() const {
        if (backend() == Backend::exact) return rational().is_zero();
        return std::abs(std::get<std::complex<double>>(v_)) < kChopTolerance;
    }

    bool real_part_zero() const {
        if (backend() == Backend::exact) return rational().re == 0;
        return std::abs(std::get<std::complex<double>>(v_).real()) < kChopTolerance;
    }

    std::complex<double> to_complex() const {
        if (backend() == Backend::exact) return rational().to_complex();
        return std::get<std::complex<double>>(v_);
    }

    Coeff conj() const {
        if (backend() == Backend::exact) return Coeff(rational().conj());
        return Coeff(std::conj(std::get<std::complex<double>>(v_)));
    }

    Coeff operator-() const {
        if (backend() == Backend::exact) return Coeff(-rational());
        return Coeff(-std::get<std::complex<double>>(v_));
    }

    Coeff operator+(const Coeff& o) const {
        check(o);
        if (backend() == Backend::exact) return Coeff(rational() + o.rational());
        return Coeff(std::get<std::complex<double>>(v_) + std::get<std::complex<double>>(o.v_));
    }
    Coeff operator-(const Coeff& o) const { return *this + (-o); }
    Coeff operator*(const Coeff& o) const {
        check(o);
        if (backend() == Backend::exact) return Coeff(rational() * o.rational());
        return Coeff(std::get<std::complex<double>>(v_) * std::get<std::complex<double>>(o.v_));
    }
    Coeff operator/(const Coeff& o) const {
        check(o);
        if (backend() == Backend::exact) return Coeff(rational() / o.rational());
        return Coeff(std::get<std::complex<double>>(v_) / std::get<std::complex<double>>(o.v_));
    }
    Coeff inverse() const {
        if (backend() == Backend::exact) return Coeff(rational().inverse());
        return Coeff(1.0 / std::get<std::complex<double>>(v_));
    }

    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

    // Exact structural equality; approx compares within chop tolerance.
    bool operator==(const Coeff& o) const {
        check(o);
        if (backend() == Backend::exact) return rational() == o.rational();
        return (*this - o).is_zero();
    }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // Multiply by exact small rational regardless of backend.
    Coeff scaled(long num, long den) const {
        if (backend() == Backend::exact) return *this * exact_frac(num, den);
        return Coeff(std::get<std::complex<double>>(v_) * (double(num) / double(den)));
    }
    Coeff times_i() const {
        if (backend() == Backend::exact) return *this * exact(0, 1);
        auto z = std::get<std::complex<double>>(v_);
        return Coeff(std::complex<double>(-z.imag(), z.real()));
    }

    std::string re_string() const;
    std::string im_string() const;

private:
    void check(const Coeff& o) const {
        if (backend() != o.backend()) throw BackendMismatch{};
    }
    std::variant<GaussRational, std::complex<double>> v_;
};

inline std::string Coeff::re_string() const {
    if (backend() == Backend::exact) return rational().re.get_str();
    return std::to_string(to_complex().real());
}

inline std::string Coeff::im_string() const {
    if (backend() == Backend::exact) return rational().im.get_str();
    return std::to_string(to_complex().imag());
}

} // namespace willmore

#endif
