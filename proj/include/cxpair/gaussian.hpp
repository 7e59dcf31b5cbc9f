#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cxpair {

/// Exact Gaussian rational a + b*i with mpq components.
///
/// All arithmetic is exact; the zero test has no tolerance. This is the
/// scalar field for every matrix in the library. A square root of -1 is
/// needed by the spin(7) construction and by the isometries that relate
/// split bilinear forms, which is why plain rationals are not enough.
struct Gaussian {
    mpq_class re;
    mpq_class im;

    Gaussian() : re(0), im(0) {}
    Gaussian(long v) : re(v), im(0) {}
    Gaussian(const mpq_class& r) : re(r), im(0) {}
    Gaussian(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long num, long den) : re(mpq_class(num, den)), im(0) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        re.canonicalize();
    }

    static Gaussian i() { return Gaussian(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gaussian conj() const { return Gaussian(re, -im); }

    /// re^2 + im^2, as an exact rational.
    mpq_class norm() const { return re * re + im * im; }

    Gaussian operator-() const { return Gaussian(-re, -im); }

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        mpq_class r = re * o.re - im * o.im;
        mpq_class i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) {
        if (o.is_zero()) throw std::domain_error("division by zero Gaussian rational");
        mpq_class n = o.norm();
        mpq_class r = (re * o.re + im * o.im) / n;
        mpq_class i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    std::string str() const {
        if (im == 0) return re.get_str();
        if (re == 0) return im.get_str() + "i";
        std::string s = re.get_str();
        if (im > 0) s += "+";
        return s + im.get_str() + "i";
    }
};

/// Gaussian integer, the working type of the fraction-free elimination.
struct GaussianInt {
    mpz_class re;
    mpz_class im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(long v) : re(v), im(0) {}
    GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const {
        // +-1, +-i
        return (re == 0 && (im == 1 || im == -1)) || (im == 0 && (re == 1 || re == -1));
    }

    GaussianInt conj() const { return GaussianInt(re, -im); }
    mpz_class norm() const { return re * re + im * im; }

    GaussianInt operator-() const { return GaussianInt(-re, -im); }

    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return GaussianInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return GaussianInt(a.re - b.re, a.im - b.im);
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }

    /// Exact division in Z[i]; the caller guarantees divisibility
    /// (the Bareiss recurrence does). Throws if it does not divide.
    static GaussianInt exact_div(const GaussianInt& a, const GaussianInt& b) {
        mpz_class n = b.norm();
        if (n == 0) throw std::domain_error("division by zero Gaussian integer");
        mpz_class nr = a.re * b.re + a.im * b.im;
        mpz_class ni = a.im * b.re - a.re * b.im;
        mpz_class qr, rr, qi, ri;
        mpz_fdiv_qr(qr.get_mpz_t(), rr.get_mpz_t(), nr.get_mpz_t(), n.get_mpz_t());
        mpz_fdiv_qr(qi.get_mpz_t(), ri.get_mpz_t(), ni.get_mpz_t(), n.get_mpz_t());
        if (rr != 0 || ri != 0) throw std::logic_error("inexact Gaussian integer division");
        return GaussianInt(std::move(qr), std::move(qi));
    }

    /// Rough size measure used by the pivot heuristic.
    size_t bits() const {
        return mpz_sizeinbase(re.get_mpz_t(), 2) + mpz_sizeinbase(im.get_mpz_t(), 2);
    }
};

}  // namespace cxpair
