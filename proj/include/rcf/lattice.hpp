#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcf/field.hpp"

namespace rcf {

/// Full-rank Z-module (1/den) * rowspan(H) inside a field, coordinates in
/// the field's integral basis. H is in the row HNF of hnf_rows and
/// (H, den) is normalized so that gcd(den, entries of H) = 1.
class IntModule {
  public:
    IntModule() = default;
    IntModule(FieldPtr F, IntMat rows, Int den = 1);
    static IntModule from_rows(FieldPtr F, const RatMat & rows);
    static IntModule from_elems(FieldPtr F, const std::vector<Elem> & gens);
    /// The ring of integers of F.
    static IntModule maximal(FieldPtr F);

    const FieldPtr & field() const { return F_; }
    const IntMat & hnf() const { return H_; }
    const Int & den() const { return den_; }
    int rank() const { return F_->degree(); }

    RatMat rational_basis() const;
    std::vector<Elem> basis_elems() const;
    /// [O_K : M] generalized to fractional modules: |det H| / den^r.
    Rat covolume() const;

    bool contains(const RatVec & coords) const;
    bool contains(const Elem & x) const { return contains(x.coords()); }
    bool contains(const IntModule & m) const;
    bool is_integral() const { return den_ == 1; }

    IntModule scaled(const Rat & s) const;
    std::string to_string() const;

    friend bool operator==(const IntModule & a, const IntModule & b);
    friend bool operator!=(const IntModule & a, const IntModule & b) { return !(a == b); }

  private:
    FieldPtr F_;
    IntMat H_;
    Int den_ = 1;
};

/// Canonical module spanned by integer rows (coordinates in the integral basis).
IntModule hnf(FieldPtr F, const std::vector<IntVec> & rows);

IntModule module_sum(const IntModule & a, const IntModule & b);
IntModule module_product(const IntModule & a, const IntModule & b);
IntModule module_times(const IntModule & a, const Elem & x);
IntModule module_intersect(const IntModule & a, const IntModule & b);
/// (a : b) = { x in K : x b subset a }.
IntModule module_colon(const IntModule & a, const IntModule & b);

/// Positive definite rational quadratic form on integral-basis coordinates.
struct GramForm {
    RatMat g;
    Rat eval(const RatVec & v) const;
};

GramForm t2_form(const FieldPtr & F);
bool is_positive_definite(const RatMat & g);

/// LLL-reduced basis (rows, integral-basis coordinates) of m under g, delta = 3/4.
RatMat lll_reduce(const IntModule & m, const GramForm & g);
/// Same on an explicit basis.
RatMat lll_basis(RatMat basis, const RatMat & gram);

/// All nonzero v in m with g(v) <= bound, one of each pair +-v (last nonzero
/// coordinate positive), sorted by (g(v), coordinates).
std::vector<RatVec> enumerate_by_t2(const IntModule & m, const GramForm & g, const Rat & bound);

/// Numbers a + b sqrt(D) with D a positive nonsquare integer.
struct QSqrt {
    Rat a, b;
    Int D;
    int sign() const;
    friend QSqrt operator+(const QSqrt & x, const QSqrt & y);
    friend QSqrt operator-(const QSqrt & x, const QSqrt & y);
    friend QSqrt operator*(const QSqrt & x, const QSqrt & y);
    friend QSqrt operator/(const QSqrt & x, const QSqrt & y);
    friend bool operator<(const QSqrt & x, const QSqrt & y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QSqrt & x, const QSqrt & y) { return (x - y).sign() <= 0; }
    double approx() const;
};

/// Weighted forms c*|s1|^2 + |s2|^2/c used for generator search in the
/// CM biquadratic case; s1, s2 are non-conjugate complex embeddings.
struct UnitGrid {
    Elem unit;                   // unit of the order from the real quadratic subfield
    QSqrt lambda;                // |s1(unit)| > 1
    std::vector<QSqrt> weights;  // c values, sorted
    std::vector<RatMat> forms;   // Gram matrices in integral-basis coordinates
};

UnitGrid unit_grid(const FieldPtr & F, const IntModule & order);
/// Quadratic part |s1(x)|^2 as a + b sqrt(dn), x given in power coordinates.
QSqrt embedding_abs2(const Field & F, const RatVec & power, int which);

struct GeneratorSearch {
    std::optional<Elem> generator;
    Int norm = 0;              // [order : ideal]
    std::size_t forms = 0;     // forms searched
    std::size_t candidates = 0;
    std::string ball;          // description of the search region
};

/// Searches alpha in `ideal` with alpha * order = ideal. Among all
/// generators found the one with smallest (T2, coordinates) is returned.
/// Imaginary quadratic: ball T2 <= 2N. CM biquadratic: weighted forms of
/// unit_grid with bound (5/2) ceil(sqrt N). Real quadratic fields throw
/// unsupported. `ideal` must be an integral order-ideal.
GeneratorSearch find_generator(const IntModule & ideal, const IntModule & order);

/// All elements of `m` with |N(x)| = target found by the same search
/// region used by find_generator (one of each +-x).
std::vector<Elem> elements_of_norm(const IntModule & m, const IntModule & order, const Int & target);

} // namespace rcf
