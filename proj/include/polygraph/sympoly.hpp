#ifndef POLYGRAPH_SYMPOLY_HPP
#define POLYGRAPH_SYMPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "polygraph/scalar.hpp"

namespace polygraph {

/// Integer polynomial in the matrix entries a, b, c, d.
class SymPoly
{
  public:
    using Exponent = std::array<int, 4>; // powers of a, b, c, d

    SymPoly() = default;
    static SymPoly constant(long v);
    static SymPoly constant(const mpz_class& v);
    static SymPoly var(int index); // 0..3 for a..d
    static SymPoly a() { return var(0); }
    static SymPoly b() { return var(1); }
    static SymPoly c() { return var(2); }
    static SymPoly d() { return var(3); }
    /// Sums of products like "3*b*c + a^2 - a*d"; juxtaposed factors need '*'.
    static SymPoly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, mpz_class>& terms() const { return terms_; }
    int total_degree() const;

    SymPoly operator-() const;
    friend SymPoly operator+(const SymPoly& p, const SymPoly& q);
    friend SymPoly operator-(const SymPoly& p, const SymPoly& q);
    friend SymPoly operator*(const SymPoly& p, const SymPoly& q);
    friend bool operator==(const SymPoly& p, const SymPoly& q) { return p.terms_ == q.terms_; }
    SymPoly pow(int k) const;

    /// Quotient if q divides p exactly over the integers.
    std::optional<SymPoly> divide(const SymPoly& q) const;

    Scalar evaluate(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const;

    /// Graded lex with a > b > c > d, e.g. "a^2 + 2*b*c + d^2".
    std::string to_string() const;

  private:
    void add_term(const Exponent& e, const mpz_class& c);
    std::map<Exponent, mpz_class> terms_;
};

} // namespace polygraph

#endif
