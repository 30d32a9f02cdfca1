#pragma once

#include <optional>
#include <vector>

#include "rcf/order.hpp"

namespace rcf {

/// Q(sqrt -d, sqrt -n) with its ring of integers. Uses the basis
/// {1, (1+sqrt -d)/2, sqrt -n, (1+sqrt -d)/2 sqrt -n} when d = 3 mod 4,
/// n = 1, 2 mod 4 and gcd(d, n) = 1; a supplied basis is checked for ring
/// closure and discriminant; otherwise the basis is computed.
FieldPtr integral_basis(const Int & d, const Int & n, const std::optional<RatMat> & basis = std::nullopt);

/// d, n satisfy the congruence conditions for the basis above.
bool marcus_case(const Int & d, const Int & n);

/// F = Q(sqrt -d) as the base of E.
QuadField base_field(const FieldPtr & E);
/// F -> E.
Elem embed_base(const FieldPtr & E, const QuadElem & x);
/// sqrt(-n) in E.
Elem sqrt_minus_n(const FieldPtr & E);
/// x + y sqrt(-n) with x, y in F.
Elem relative_elem(const FieldPtr & E, const QuadElem & x, const QuadElem & y);
/// Inverse of relative_elem.
std::pair<QuadElem, QuadElem> relative_coords(const Elem & e);

/// The automorphism of E/F negating sqrt(-n).
Elem bar(const Elem & e);
/// e * bar(e), as an element of F.
QuadElem rel_norm_EF(const Elem & e);

enum class FactorMethod { Auto, KummerDedekind, Subfields };

struct PrimeFactor {
    OrderIdeal prime;
    unsigned e = 1;
    unsigned f = 1;
};

/// Primes of O_E above q with ramification and residue degree, sorted by
/// HNF. KummerDedekind throws unsupported when q divides the index of
/// every primitive element tried; Auto falls back to intersecting
/// extensions of primes of the three quadratic subfields.
std::vector<PrimeFactor> factor_rational_prime(const FieldPtr & E, const Int & q,
                                               FactorMethod method = FactorMethod::Auto);

/// Upper estimate of (4/pi)^2 * 4!/4^4 * sqrt|disc E|.
Rat minkowski_bound(const FieldPtr & E);

struct BiquadClassGroup {
    Int order = 0;
    std::vector<Int> invariants;
    Rat bound;
    std::vector<OrderIdeal> generators;      // nonprincipal primes below the bound
    std::vector<OrderIdeal> representatives; // one ideal per class
};

/// Class group of O_E from prime ideals below the Minkowski bound.
/// Throws unsupported when the bound exceeds `cap`.
BiquadClassGroup class_group(const FieldPtr & E, const Int & cap = 5000);

struct NormMapCondition {
    Int h_F, h_E;
    bool E_in_HF = false; // disc(E) = disc(F)^2, i.e. E/F unramified
    bool inj_iso = false; // h_F = h_E and E, H_F linearly disjoint over F
    bool odd_equal = false;
};

NormMapCondition norm_map_condition(const Int & d, const Int & n);

} // namespace rcf
