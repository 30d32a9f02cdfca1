#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcf/lattice.hpp"
#include "rcf/quadratic.hpp"

namespace rcf {

/// A subring of O_K of full rank, stored as a module in integral-basis coordinates.
class Order {
  public:
    Order() = default;
    static Order maximal(FieldPtr F);
    /// Verifies 1 in M, M*M subset M and M subset O_K.
    static Order from_module(IntModule M, std::string label = "");
    /// Z[sqrt(-N)] in Q(sqrt(-N)), N > 0 (need not be squarefree).
    static Order zsqrt(const Int & N);
    /// Z + c O_K in Q(sqrt D).
    static Order quadratic_conductor(const Int & D, const Int & c);
    /// O_F + O_F sqrt(-n) in Q(sqrt -d, sqrt -n), F = Q(sqrt -d).
    static Order relative(const Int & d, const Int & n);
    static Order relative(const FieldPtr & E);

    const FieldPtr & field() const { return M_.field(); }
    const IntModule & module() const { return M_; }
    IntModule maximal_module() const { return IntModule::maximal(field()); }
    bool is_maximal() const { return maximal_; }
    const std::string & label() const { return label_; }
    /// [O_K : O].
    Int index() const;
    /// disc(O) = disc(O_K) [O_K : O]^2.
    Int disc() const;

    friend bool operator==(const Order & a, const Order & b) { return a.M_ == b.M_; }

  private:
    IntModule M_;
    bool maximal_ = false;
    std::string label_;
};

/// Fractional ideal of an order: an order-stable full-rank module.
class OrderIdeal {
  public:
    OrderIdeal() = default;
    /// Throws std::invalid_argument unless M is stable under the order.
    OrderIdeal(Order O, IntModule M);
    static OrderIdeal principal(const Order & O, const Elem & x);
    static OrderIdeal whole(const Order & O);

    const Order & order() const { return O_; }
    const IntModule & module() const { return M_; }
    /// [O : a] for integral a, generalized multiplicatively.
    Rat norm() const;
    bool is_integral() const { return O_.module().contains(M_); }
    bool is_whole() const { return M_ == O_.module(); }
    std::string to_string() const { return M_.to_string(); }

    friend bool operator==(const OrderIdeal & a, const OrderIdeal & b) { return a.O_ == b.O_ && a.M_ == b.M_; }
    friend bool operator!=(const OrderIdeal & a, const OrderIdeal & b) { return !(a == b); }

  private:
    Order O_;
    IntModule M_;
};

struct IdealFactorization {
    std::vector<std::pair<OrderIdeal, unsigned>> factors;
};

/// The largest O_K-ideal contained in O, returned as an ideal of O_K.
OrderIdeal conductor(const Order & O);
/// The conductor viewed as an ideal of O itself.
OrderIdeal conductor_in_order(const Order & O);

OrderIdeal ideal_add(const OrderIdeal & a, const OrderIdeal & b);
OrderIdeal ideal_mul(const OrderIdeal & a, const OrderIdeal & b);
/// (a : b) = { x : x b subset a }.
IntModule ideal_quot(const OrderIdeal & a, const OrderIdeal & b);
/// (O : a) as an ideal of O.
OrderIdeal ideal_inverse_candidate(const OrderIdeal & a);

bool is_invertible(const OrderIdeal & a);
bool is_regular_prime(const OrderIdeal & p);
bool is_coprime_to_conductor(const OrderIdeal & a);

/// Prime ideals of O_K above q (quadratic: Kummer-Dedekind on omega;
/// biquadratic: factor_rational_prime).
std::vector<OrderIdeal> maximal_primes_above(const FieldPtr & F, const Int & q);
/// Prime ideals of O above q: distinct contractions of primes of O_K.
std::vector<OrderIdeal> primes_above(const Order & O, const Int & q);

/// Factorization of an integral ideal coprime to the conductor into regular primes.
IdealFactorization factor_ideal(const OrderIdeal & a);
OrderIdeal multiply_out(const Order & O, const IdealFactorization & f);

OrderIdeal extend_ideal(const OrderIdeal & a);
OrderIdeal contract_ideal(const OrderIdeal & A, const Order & O);

/// #(O/f)^x for an integral ideal f of O (full enumeration, N(f) <= 10^6).
Int residue_unit_count(const Order & O, const OrderIdeal & f);

/// Roots of unity of F (totally imaginary fields).
std::vector<Elem> roots_of_unity(const FieldPtr & F);
/// Fundamental unit of O_E modulo torsion for a CM biquadratic field: the
/// unit with smallest |s1(u)|^2 > 1.
Elem fundamental_unit(const FieldPtr & E);

struct UnitIndex {
    std::optional<Int> index;   // empty when unresolved
    Int torsion_index = 1;      // [W : W cap O]
    Int unit_exponent = 1;      // least j > 0 with some zeta eps^j in O
    std::string note;
};

UnitIndex unit_index(const Order & O, long exponent_bound = 64);

/// Representatives of O_K^x / O^x (roots of unity times powers of the
/// fundamental unit). Throws unresolved if the unit index is unresolved.
std::vector<Elem> unit_coset_reps(const Order & O);

/// Integral O_K-ideal A has a generator lying in O.
bool has_generator_in(const IntModule & A, const Order & O);

struct PicardFormula {
    Int h_K;
    Int unit_index;
    Int units_OK_mod_f;
    Int units_O_mod_f;
    Int picard;
    OrderIdeal conductor;
};

/// #Pic(O) = h_K / [O_K^x : O^x] * #(O_K/f)^x / #(O/f)^x. Throws unresolved
/// when the unit index is not established and audit_failure on a non-integer.
PicardFormula picard_formula(const Order & O);
Int picard_number(const Order & O);

struct PicBruteForce {
    Int classes;
    Int bound;            // norm bound actually used
    Int complete_bound;   // floor(sqrt(|disc(O)|/3)); classes is exact when bound >= this
    bool complete = false;
    std::size_t ideals = 0;
    std::vector<OrderIdeal> representatives;
};

/// Class count of invertible ideals of norm <= bound (imaginary quadratic orders).
PicBruteForce pic_brute_force(const Order & O, std::optional<Int> norm_bound = std::nullopt);

/// Integral O-ideal I is principal with a generator in O.
std::optional<Elem> principal_generator(const OrderIdeal & I);
/// a ~ b in Pic(O) for invertible a, b.
bool ideals_equivalent(const OrderIdeal & a, const OrderIdeal & b);

/// alpha in O_K, alpha coprime to f and alpha = 1 mod f.
bool in_PK1f(const Elem & alpha, const Order & O);
/// alpha / beta with alpha, beta in O_K coprime to f and alpha = beta mod f.
bool in_PK1f(const Elem & alpha, const Elem & beta, const Order & O);
/// alpha in O with alpha O + f = O.
bool in_PKOf(const Elem & alpha, const Order & O);
/// O_K-ideal A coprime to f with A = alpha O_K for some alpha in O.
bool in_PKOf(const OrderIdeal & A, const Order & O);

struct AuditReport {
    Int h_K, unit_index, units_OK_mod_f, units_O_mod_f;
    Int picard_formula, picard_brute_force, pic_O_f, cl_K_O_f;
    bool unit_intersection = false;
    std::size_t pk1f_samples = 0;
    Int enumeration_bound;
    std::vector<std::string> checks;
};

/// Counting identities for an imaginary quadratic order; throws audit_failure on mismatch.
AuditReport counting_audit(const Order & O);

/// Integral ideals of O (O-stable sublattices) of norm <= bound, sorted by norm.
std::vector<OrderIdeal> ideals_up_to(const Order & O, const Int & bound);

} // namespace rcf
