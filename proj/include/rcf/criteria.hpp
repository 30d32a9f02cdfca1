#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcf/biquadratic.hpp"
#include "rcf/residue_field.hpp"

namespace rcf {

enum class Verdict { Solvable, Unsolvable, Unknown };
std::string to_string(Verdict v);

struct Hypothesis {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionReport {
    std::string theorem_id;
    std::vector<Hypothesis> hypotheses;
    bool applicable = false;
    Verdict verdict = Verdict::Unknown;
    std::optional<std::pair<QuadElem, QuadElem>> representation;
    std::optional<bool> cross_check;
    std::string note;
};

/// -1 = alpha^2 + n beta^2 in O_F, F = Q(sqrt -d).
struct UnitWitness {
    QuadElem alpha, beta;
    std::string method;
};

/// x^2 + n y^2 = p with x > 0, y >= 0. Throws std::invalid_argument for p = 2 or p | n.
std::optional<std::pair<Int, Int>> cornacchia(const Int & p, const Int & n);

/// p = x^2 + n y^2 iff (-n/p) = 1 and f_n has a root mod p.
CriterionReport cox_criterion(const Int & p, const Int & n, const IntPoly & f_n, bool cross_check = true);

/// Pell-based construction followed by a small box search; the result is verified.
std::optional<UnitWitness> unit_witness(const Int & d, const Int & n, const Int & y_max = 100000);

/// The ring-class-field criterion: p = x^2 + n y^2 over O_F iff g_n has a
/// root in O_F / p. Without g_n the verdict is unknown.
CriterionReport criterion_quadr(const QuadElem & p, const Int & d, const Int & n,
                                const std::optional<QuadPoly> & g_n);

/// The Hilbert-class-field criterion: p = x^2 + n y^2 over O_F iff -n is a
/// square in O_F / p. f defines H_F over F; the built-in x^3 + 2x - 1 is
/// used for d = 59 when none is supplied.
CriterionReport criterion_hilbert(const QuadElem & p, const Int & d, const Int & n,
                                  const std::optional<IntPoly> & f = std::nullopt);

/// x^3 + 2x - 1, defining the Hilbert class field of Q(sqrt -59).
IntPoly hilbert_poly_59();

struct Representation {
    Verdict result = Verdict::Unknown;
    std::optional<std::pair<QuadElem, QuadElem>> xy;
    std::string note;
};

/// Solves p = x^2 + n y^2 over O_F by generating a prime of O_E above p.
Representation represent(const QuadElem & p, const Int & d, const Int & n);

/// Exhaustive search over y with coordinates in [-box, box]; x is the exact
/// square root of p - n y^2 when it lies in O_F and in the same box.
std::optional<std::pair<QuadElem, QuadElem>> brute_force_represent(const QuadElem & p, const Int & n, long box);

/// p = x^2 + n y^2 exactly.
bool verify_identity(const QuadElem & p, const QuadElem & x, const QuadElem & y, const Int & n);

/// A square root of t in O_F, if any.
std::optional<QuadElem> sqrt_in_field(const QuadElem & t);

/// Prime elements of O_F = Z[(1+sqrt -d)/2] or Z[sqrt -d] with norm <= bound,
/// one per associate class, both conjugates for split primes.
std::vector<QuadElem> prime_elements_up_to(const QuadField & F, const Int & bound);

} // namespace rcf
