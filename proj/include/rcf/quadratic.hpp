#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcf/lattice.hpp"

namespace rcf {

class QuadElem;

/// Q(sqrt D), D squarefree, with integral basis {1, omega}.
class QuadField {
  public:
    QuadField() = default;
    explicit QuadField(const Int & D);
    explicit QuadField(FieldPtr F);

    const Int & D() const { return F_->D(); }
    Int disc() const { return F_->disc(); }
    const FieldPtr & field() const { return F_; }
    QuadElem omega() const;
    /// Minimal polynomial of omega.
    IntPoly omega_minpoly() const;

    friend bool operator==(const QuadField & a, const QuadField & b) { return *a.F_ == *b.F_; }

  private:
    FieldPtr F_;
};

/// a + b sqrt(D).
class QuadElem {
  public:
    QuadElem() = default;
    QuadElem(QuadField F, Rat a, Rat b = 0);
    static QuadElem from_elem(const Elem & e);
    /// x + y * omega with integer-basis coordinates.
    static QuadElem from_coords(const QuadField & F, const Rat & x, const Rat & y);

    const QuadField & field() const { return F_; }
    const Rat & a() const { return a_; }
    const Rat & b() const { return b_; }
    Elem to_elem() const;
    /// Coordinates in {1, omega}.
    RatVec coords() const;

    Rat norm() const;
    Rat trace() const;
    QuadElem conj() const;
    bool is_integral() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    QuadElem inverse() const;

    friend QuadElem operator+(const QuadElem & x, const QuadElem & y);
    friend QuadElem operator-(const QuadElem & x, const QuadElem & y);
    friend QuadElem operator-(const QuadElem & x);
    friend QuadElem operator*(const QuadElem & x, const QuadElem & y);
    friend QuadElem operator/(const QuadElem & x, const QuadElem & y) { return x * y.inverse(); }
    friend bool operator==(const QuadElem & x, const QuadElem & y);
    friend bool operator!=(const QuadElem & x, const QuadElem & y) { return !(x == y); }

    /// x / y lies in O_F.
    bool divides(const QuadElem & y) const;

    std::string to_string() const;

  private:
    QuadField F_;
    Rat a_, b_;
};

enum class SplitType { Split, Inert, Ramified };
std::string to_string(SplitType t);

struct PrimeSplitting {
    SplitType type = SplitType::Inert;
    /// Prime ideals of O_F above q as modules: two (split), one (inert, ramified).
    std::vector<IntModule> ideals;
    /// Generators of `ideals` when principal; for split primes pi[1] = conj(pi[0]).
    std::vector<std::optional<QuadElem>> generators;
    /// Roots of the minimal polynomial of omega mod q, matching `ideals`.
    std::vector<Int> roots;
};

/// Kummer-Dedekind on the minimal polynomial of omega; prime elements via
/// generator search for imaginary fields.
PrimeSplitting split_prime(const QuadField & F, const Int & q);

/// Positive definite binary quadratic form a x^2 + b xy + c y^2.
struct BinaryForm {
    Int a, b, c;
    Int disc() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    bool is_primitive() const;
    friend bool operator==(const BinaryForm & x, const BinaryForm & y) = default;
    friend bool operator<(const BinaryForm & x, const BinaryForm & y);
    std::string to_string() const;
};

BinaryForm reduce(BinaryForm f);
BinaryForm compose(const BinaryForm & f, const BinaryForm & g);
BinaryForm principal_form(const Int & disc);
BinaryForm inverse(const BinaryForm & f);
BinaryForm form_power(const BinaryForm & f, Int e);

struct ClassGroupResult {
    Int order = 0;
    /// Invariant factors d1 | d2 | ... (empty for the trivial group).
    std::vector<Int> invariants;
    std::vector<BinaryForm> forms;
    std::vector<IntModule> ideals;
};

/// All reduced primitive forms of discriminant disc < 0; structure from
/// element orders under composition.
ClassGroupResult form_class_group(const Int & disc);

/// Invariant factors of a finite abelian group from the multiset of its element orders.
std::vector<Int> invariants_from_orders(const std::vector<Int> & orders);

} // namespace rcf
