#ifndef POLYGRAPH_SCALAR_HPP
#define POLYGRAPH_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include "polygraph/error.hpp"

namespace polygraph {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Exact complex number with rational real and imaginary parts.
struct GaussRat
{
    Rational re{0};
    Rational im{0};

    GaussRat() = default;
    GaussRat(long v) : re(v), im(0) {}
    GaussRat(Rational r) : re(std::move(r)), im(0) { re.canonicalize(); }
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i))
    {
        re.canonicalize();
        im.canonicalize();
    }

    static GaussRat i() { return {Rational(0), Rational(1)}; }

    /// Parses "p", "p/q" for the real part only.
    static Rational parse_rational(std::string_view text);

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussRat conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    Complex to_complex() const { return {re.get_d(), im.get_d()}; }

    GaussRat& operator+=(const GaussRat& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o)
    {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussRat& a, const GaussRat& b)
    {
        return a.re == b.re && a.im == b.im;
    }

    /// "3/2", "-1+2i", "1/2i" style rendering.
    std::string to_string() const;
};

/// Field-specific helpers so polynomial templates work over both backends.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<GaussRat>
{
    static constexpr bool exact = true;
    static constexpr const char* mode = "exact";
    static bool is_zero(const GaussRat& v) { return v.is_zero(); }
    static Complex to_complex(const GaussRat& v) { return v.to_complex(); }
    static double magnitude(const GaussRat& v) { return std::abs(v.to_complex()); }
    static std::string to_string(const GaussRat& v) { return v.to_string(); }
};

template <>
struct FieldTraits<Complex>
{
    static constexpr bool exact = false;
    static constexpr const char* mode = "float";
    static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
    static Complex to_complex(const Complex& v) { return v; }
    static double magnitude(const Complex& v) { return std::abs(v); }
    static std::string to_string(const Complex& v);
};

template <class F>
concept ExactField = FieldTraits<F>::exact;

std::string format_complex(Complex v, int significant = 17);

/// Throws NumericalError if either component of v is NaN or infinite.
void require_finite(Complex v, const char* what);

/// Runtime-tagged scalar: exact Gaussian rational or complex double.
/// Mixed arithmetic promotes to float; float never promotes to exact.
class Scalar
{
  public:
    Scalar() : value_(GaussRat{}) {}
    Scalar(GaussRat v) : value_(std::move(v)) {}
    Scalar(Complex v) : value_(v) {}
    Scalar(long v) : value_(GaussRat(v)) {}
    Scalar(double v) : value_(Complex(v, 0.0)) {}

    bool is_exact() const { return std::holds_alternative<GaussRat>(value_); }
    const GaussRat& exact() const;
    Complex to_complex() const;

    /// Exact zero test in exact mode; |v| <= tol otherwise.
    bool is_zero(double tol = 0.0) const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    std::string to_string() const;

  private:
    std::variant<GaussRat, Complex> value_;
};

} // namespace polygraph

#endif
