#pragma once

#include <optional>
#include <vector>

#include "rcf/quadratic.hpp"

namespace rcf {

/// Polynomial with coefficients in a quadratic field, constant term first.
using QuadPoly = std::vector<QuadElem>;

/// O_F / P for a prime ideal P of a quadratic O_F. Elements are vectors of
/// length degree() over F_q: residues of integers for degree 1, and
/// coordinates on {1, t} with t the image of omega for degree 2.
class ResidueField {
  public:
    using Value = std::vector<Int>;

    ResidueField(QuadField F, const IntModule & P);
    /// Residue field of p O_F for a prime element p.
    static ResidueField of_element(const QuadElem & p);

    const QuadField & field() const { return F_; }
    const Int & characteristic() const { return q_; }
    unsigned degree() const { return f_; }
    Int size() const;

    Value reduce(const QuadElem & x) const;
    /// An element of O_F mapping to v.
    QuadElem lift(const Value & v) const;

    Value zero() const { return Value(f_, Int(0)); }
    Value one() const;
    Value add(const Value & a, const Value & b) const;
    Value mul(const Value & a, const Value & b) const;
    Value pow(Value a, Int e) const;
    bool is_zero(const Value & a) const;
    bool is_square(const Value & a) const;
    /// Some square root by scanning the field; throws unsupported above 10^6 elements.
    std::optional<Value> sqrt(const Value & a) const;
    /// All elements, in a fixed order (size capped at 10^6).
    std::vector<Value> elements() const;

    Value eval(const QuadPoly & g, const Value & x) const;
    bool has_root(const QuadPoly & g) const;

  private:
    QuadField F_;
    IntModule P_;
    Int q_;
    unsigned f_ = 1;
    Int root_;  // omega = root_ mod P when f_ = 1
    Int m0_, m1_; // omega^2 = m1_ omega + m0_ mod q when f_ = 2
};

/// p O_F is a prime ideal.
bool is_prime_element(const QuadElem & p);

} // namespace rcf
