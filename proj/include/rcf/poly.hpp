#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rcf/arith.hpp"

namespace rcf {

/// Dense univariate polynomial over Z, constant term first. The zero
/// polynomial has no coefficients and degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly monomial(const Int & c, unsigned degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int> & coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int & leading() const;

    Int eval(const Int & x) const;
    IntPoly derivative() const;

    friend IntPoly operator+(const IntPoly & a, const IntPoly & b);
    friend IntPoly operator-(const IntPoly & a, const IntPoly & b);
    friend IntPoly operator*(const IntPoly & a, const IntPoly & b);
    friend bool operator==(const IntPoly & a, const IntPoly & b) = default;

    std::string to_string(const std::string & var = "x") const;

  private:
    void trim();
    std::vector<Int> c_;
};

/// Resultant of two nonzero polynomials, computed by the Euclidean
/// remainder sequence over Q.
Int resultant(const IntPoly & f, const IntPoly & g);

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f). Throws for deg f < 1.
Int poly_discriminant(const IntPoly & f);

/// Polynomial over Z/pZ, coefficients kept in [0, p).
class FpPoly {
  public:
    FpPoly(Int p, std::vector<Int> coeffs = {});
    FpPoly(const IntPoly & f, const Int & p);

    static FpPoly x(const Int & p);
    static FpPoly constant(const Int & c, const Int & p);

    const Int & modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int> & coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    Int eval(const Int & x) const;

    FpPoly monic() const;
    FpPoly derivative() const;

    friend FpPoly operator+(const FpPoly & a, const FpPoly & b);
    friend FpPoly operator-(const FpPoly & a, const FpPoly & b);
    friend FpPoly operator*(const FpPoly & a, const FpPoly & b);
    friend bool operator==(const FpPoly & a, const FpPoly & b) = default;

    /// Quotient and remainder; b must be nonzero.
    static std::pair<FpPoly, FpPoly> divmod(const FpPoly & a, const FpPoly & b);
    friend FpPoly operator%(const FpPoly & a, const FpPoly & b) { return divmod(a, b).second; }
    friend FpPoly operator/(const FpPoly & a, const FpPoly & b) { return divmod(a, b).first; }

    std::string to_string() const;

  private:
    void trim();
    Int p_;
    std::vector<Int> c_;
};

FpPoly gcd(const FpPoly & a, const FpPoly & b);
/// base^e mod m.
FpPoly powmod(const FpPoly & base, const Int & e, const FpPoly & m);

enum class RootMethod { Auto, Scan, PowerGcd };

/// Sorted roots in [0, p) of f mod p. Auto scans exhaustively below 10^6
/// and otherwise splits gcd(f, x^p - x). Throws if f vanishes mod p.
std::vector<Int> poly_roots_mod(const IntPoly & f, const Int & p, RootMethod method = RootMethod::Auto);

/// Factorization of f mod p into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). Throws if f vanishes mod p.
std::vector<std::pair<FpPoly, unsigned>> factor_mod(const IntPoly & f, const Int & p);

} // namespace rcf
