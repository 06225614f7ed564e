#include "polygraph/scalar.hpp"

#include <iomanip>
#include <sstream>

namespace polygraph {

GaussRat& GaussRat::operator/=(const GaussRat& o)
{
    Rational den = o.norm();
    if (sgn(den) == 0)
        throw DomainError("division by zero");
    GaussRat num = *this * o.conj();
    re = num.re / den;
    im = num.im / den;
    return *this;
}

Rational GaussRat::parse_rational(std::string_view text)
{
    Rational r;
    std::string s(text);
    if (s.empty() || r.set_str(s, 10) != 0)
        throw DomainError("not a rational literal: '" + s + "'");
    if (sgn(r.get_den()) == 0)
        throw DomainError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string GaussRat::to_string() const
{
    if (sgn(im) == 0)
        return re.get_str();
    std::string imag;
    if (im == 1)
        imag = "i";
    else if (im == -1)
        imag = "-i";
    else
        imag = im.get_str() + "i";
    if (sgn(re) == 0)
        return imag;
    if (sgn(im) > 0)
        return re.get_str() + "+" + imag;
    return re.get_str() + imag;
}

std::string format_complex(Complex v, int significant)
{
    std::ostringstream os;
    os << std::setprecision(significant);
    if (v.imag() == 0.0) {
        os << v.real();
        return os.str();
    }
    if (v.real() == 0.0) {
        os << v.imag() << "i";
        return os.str();
    }
    os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
    return os.str();
}

std::string FieldTraits<Complex>::to_string(const Complex& v)
{
    return format_complex(v);
}

void require_finite(Complex v, const char* what)
{
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NumericalError(std::string("non-finite value in ") + what);
}

const GaussRat& Scalar::exact() const
{
    if (const auto* g = std::get_if<GaussRat>(&value_))
        return *g;
    throw ModeError("scalar is not exact");
}

Complex Scalar::to_complex() const
{
    if (const auto* g = std::get_if<GaussRat>(&value_))
        return g->to_complex();
    return std::get<Complex>(value_);
}

bool Scalar::is_zero(double tol) const
{
    if (const auto* g = std::get_if<GaussRat>(&value_))
        return g->is_zero();
    return std::abs(std::get<Complex>(value_)) <= tol;
}

Scalar Scalar::operator-() const
{
    if (is_exact())
        return Scalar(-exact());
    return Scalar(-to_complex());
}

namespace {

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op)
{
    if (a.is_exact() && b.is_exact())
        return Scalar(op(a.exact(), b.exact()));
    Complex r = op(a.to_complex(), b.to_complex());
    require_finite(r, "scalar arithmetic");
    return Scalar(r);
}

} // namespace

Scalar operator+(const Scalar& a, const Scalar& b)
{
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b)
{
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b)
{
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b)
{
    if (b.is_zero())
        throw DomainError("division by zero");
    return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

std::string Scalar::to_string() const
{
    if (is_exact())
        return exact().to_string();
    return format_complex(to_complex());
}

} // namespace polygraph
