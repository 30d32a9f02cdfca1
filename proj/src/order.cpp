#include "rcf/order.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rcf/biquadratic.hpp"

namespace rcf {

namespace {

Int squarefree_part(const Int & m)
{
    Int s = 1;
    for (const auto & [p, e] : factor_integer(m))
        if (e % 2 == 1)
            s *= p;
    return s;
}

bool stable_under(const IntModule & order, const IntModule & M)
{
    for (const Elem & w : order.basis_elems())
        for (const Elem & b : M.basis_elems())
            if (!M.contains(w * b))
                return false;
    return true;
}

void same_order(const OrderIdeal & a, const OrderIdeal & b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("ideals of different orders");
}

Int as_int(const Rat & r, const char * what)
{
    if (r.get_den() != 1)
        throw std::logic_error(std::string(what) + " is not an integer");
    return r.get_num();
}

} // namespace

// ------------------------------------------------------------------ Order

Order Order::maximal(FieldPtr F)
{
    Order O;
    O.M_ = IntModule::maximal(F);
    O.maximal_ = true;
    O.label_ = "O_K";
    return O;
}

Order Order::from_module(IntModule M, std::string label)
{
    const FieldPtr F = M.field();
    if (!M.contains(Elem::one(F)))
        throw std::invalid_argument("order module does not contain 1");
    if (!M.is_integral())
        throw std::invalid_argument("order module is not contained in the maximal order");
    for (const Elem & a : M.basis_elems())
        for (const Elem & b : M.basis_elems())
            if (!M.contains(a * b))
                throw std::invalid_argument("order module is not closed under multiplication");
    Order O;
    O.maximal_ = M == IntModule::maximal(F);
    O.M_ = std::move(M);
    O.label_ = std::move(label);
    return O;
}

Order Order::zsqrt(const Int & N)
{
    if (N <= 0)
        throw std::invalid_argument("Z[sqrt(-N)] needs N > 0");
    Int m = squarefree_part(N);
    Int k;
    is_square(Int(N / m), &k);
    FieldPtr F = Field::quadratic(-m);
    std::vector<Elem> gens = {Elem::one(F), Elem::from_power(F, {Rat(0), Rat(k)})};
    return from_module(IntModule::from_elems(F, gens), "Z[sqrt(-" + N.get_str() + ")]");
}

Order Order::quadratic_conductor(const Int & D, const Int & c)
{
    if (c <= 0)
        throw std::invalid_argument("conductor must be positive");
    FieldPtr F = Field::quadratic(D);
    std::vector<Elem> gens = {Elem::one(F), Rat(c) * Elem::basis(F, 1)};
    return from_module(IntModule::from_elems(F, gens), "Z + " + c.get_str() + "*O_K in " + F->name());
}

Order Order::relative(const FieldPtr & E)
{
    if (E->kind() != FieldKind::Biquadratic)
        throw std::invalid_argument("relative order needs a biquadratic field");
    Rat half(1, 2);
    Elem om = mod(Int(-E->d()), 4) == 1 ? Elem::from_power(E, {half, half, Rat(0), Rat(0)})
                                        : Elem::from_power(E, {Rat(0), Rat(1), Rat(0), Rat(0)});
    Elem v = Elem::from_power(E, {Rat(0), Rat(0), Rat(1), Rat(0)});
    std::vector<Elem> gens = {Elem::one(E), om, v, om * v};
    return from_module(IntModule::from_elems(E, gens),
                       "O_F + O_F*sqrt(-" + E->n().get_str() + ") in " + E->name());
}

Order Order::relative(const Int & d, const Int & n) { return relative(integral_basis(d, n)); }

Int Order::index() const { return as_int(M_.covolume(), "order index"); }

Int Order::disc() const
{
    Int i = index();
    return field()->disc() * i * i;
}

// ------------------------------------------------------------- OrderIdeal

OrderIdeal::OrderIdeal(Order O, IntModule M) : O_(std::move(O)), M_(std::move(M))
{
    if (!(*M_.field() == *O_.field()))
        throw std::invalid_argument("ideal and order live in different fields");
    if (!stable_under(O_.module(), M_))
        throw std::invalid_argument("module is not stable under the order");
}

OrderIdeal OrderIdeal::principal(const Order & O, const Elem & x)
{
    if (x.is_zero())
        throw std::invalid_argument("zero ideal");
    return OrderIdeal(O, module_times(O.module(), x));
}

OrderIdeal OrderIdeal::whole(const Order & O) { return OrderIdeal(O, O.module()); }

Rat OrderIdeal::norm() const { return M_.covolume() / O_.module().covolume(); }

OrderIdeal conductor(const Order & O)
{
    Order OK = Order::maximal(O.field());
    return OrderIdeal(OK, module_colon(O.module(), OK.module()));
}

OrderIdeal conductor_in_order(const Order & O) { return OrderIdeal(O, conductor(O).module()); }

OrderIdeal ideal_add(const OrderIdeal & a, const OrderIdeal & b)
{
    same_order(a, b);
    return OrderIdeal(a.order(), module_sum(a.module(), b.module()));
}

OrderIdeal ideal_mul(const OrderIdeal & a, const OrderIdeal & b)
{
    same_order(a, b);
    return OrderIdeal(a.order(), module_product(a.module(), b.module()));
}

IntModule ideal_quot(const OrderIdeal & a, const OrderIdeal & b)
{
    same_order(a, b);
    return module_colon(a.module(), b.module());
}

OrderIdeal ideal_inverse_candidate(const OrderIdeal & a)
{
    return OrderIdeal(a.order(), module_colon(a.order().module(), a.module()));
}

bool is_invertible(const OrderIdeal & a)
{
    return module_product(a.module(), ideal_inverse_candidate(a).module()) == a.order().module();
}

bool is_coprime_to_conductor(const OrderIdeal & a)
{
    OrderIdeal f(a.order(), conductor(a.order()).module());
    return ideal_add(a, f).is_whole();
}

bool is_regular_prime(const OrderIdeal & p) { return is_coprime_to_conductor(p); }

std::vector<OrderIdeal> maximal_primes_above(const FieldPtr & F, const Int & q)
{
    Order OK = Order::maximal(F);
    std::vector<OrderIdeal> out;
    if (F->kind() == FieldKind::Quadratic) {
        for (const IntModule & P : split_prime(QuadField(F), q).ideals)
            out.emplace_back(OK, P);
    } else {
        for (const PrimeFactor & pf : factor_rational_prime(F, q))
            out.push_back(pf.prime);
    }
    return out;
}

std::vector<OrderIdeal> primes_above(const Order & O, const Int & q)
{
    std::vector<OrderIdeal> out;
    for (const OrderIdeal & P : maximal_primes_above(O.field(), q)) {
        OrderIdeal p(O, module_intersect(P.module(), O.module()));
        if (std::find(out.begin(), out.end(), p) == out.end())
            out.push_back(std::move(p));
    }
    return out;
}

IdealFactorization factor_ideal(const OrderIdeal & a)
{
    if (!a.is_integral())
        throw precondition_violation("factor_ideal: ideal is not integral");
    if (!is_coprime_to_conductor(a))
        throw precondition_violation("factor_ideal: ideal is not coprime to the conductor");
    const Order & O = a.order();
    IdealFactorization out;
    Int N = as_int(a.norm(), "ideal norm");
    OrderIdeal cur = a;
    if (N != 1)
        for (const auto & [q, e] : factor_integer(N)) {
            (void)e;
            for (const OrderIdeal & p : primes_above(O, q)) {
                if (!is_regular_prime(p))
                    continue;
                OrderIdeal pinv = ideal_inverse_candidate(p);
                unsigned k = 0;
                while (p.module().contains(cur.module())) {
                    cur = ideal_mul(cur, pinv);
                    ++k;
                }
                if (k)
                    out.factors.emplace_back(p, k);
            }
        }
    if (!cur.is_whole())
        throw std::logic_error("factor_ideal: cofactor is not the unit ideal");
    if (multiply_out(O, out) != a)
        throw std::logic_error("factor_ideal: product does not reproduce the ideal");
    return out;
}

OrderIdeal multiply_out(const Order & O, const IdealFactorization & f)
{
    OrderIdeal r = OrderIdeal::whole(O);
    for (const auto & [p, e] : f.factors)
        for (unsigned i = 0; i < e; ++i)
            r = ideal_mul(r, p);
    return r;
}

OrderIdeal extend_ideal(const OrderIdeal & a)
{
    if (!is_coprime_to_conductor(a))
        throw precondition_violation("extend_ideal: ideal is not coprime to the conductor");
    Order OK = Order::maximal(a.order().field());
    return OrderIdeal(OK, module_product(a.module(), OK.module()));
}

OrderIdeal contract_ideal(const OrderIdeal & A, const Order & O)
{
    if (!A.order().is_maximal())
        throw std::invalid_argument("contract_ideal: input must be an ideal of the maximal order");
    if (!ideal_add(A, conductor(O)).is_whole())
        throw precondition_violation("contract_ideal: ideal is not coprime to the conductor");
    return OrderIdeal(O, module_intersect(A.module(), O.module()));
}

namespace {

// Coset representatives of O / f for an integral ideal f of O.
std::vector<Elem> coset_reps(const Order & O, const OrderIdeal & f, const Int & cap)
{
    Int N = as_int(f.norm(), "ideal norm");
    if (N > cap)
        throw unsupported("quotient ring of size " + N.get_str() + " exceeds the enumeration cap");
    RatMat T = mat_mul(f.module().rational_basis(), inverse(O.module().rational_basis()));
    IntMat Ti;
    for (const RatVec & v : T) {
        IntVec iv;
        for (const Rat & x : v)
            iv.push_back(as_int(x, "relative coordinates"));
        Ti.push_back(std::move(iv));
    }
    IntMat H = hnf_rows(std::move(Ti));
    const int r = O.field()->degree();
    std::vector<Elem> basis = O.module().basis_elems();
    std::vector<Elem> out;
    IntVec c(r, Int(0));
    for (;;) {
        Elem x = Elem::zero(O.field());
        for (int i = 0; i < r; ++i)
            if (c[i] != 0)
                x = x + Rat(c[i]) * basis[i];
        out.push_back(std::move(x));
        int i = 0;
        while (i < r) {
            c[i] += 1;
            if (c[i] < H[i][i])
                break;
            c[i] = 0;
            ++i;
        }
        if (i == r)
            break;
    }
    return out;
}

bool unit_mod(const Order & O, const OrderIdeal & f, const Elem & x)
{
    if (x.is_zero())
        return f.module() == O.module();
    return module_sum(module_times(O.module(), x), f.module()) == O.module();
}

IntModule conj_module(const IntModule & M)
{
    std::vector<Elem> gens;
    for (const Elem & e : M.basis_elems())
        gens.push_back(QuadElem::from_elem(e).conj().to_elem());
    return IntModule::from_elems(M.field(), gens);
}

} // namespace

Int residue_unit_count(const Order & O, const OrderIdeal & f)
{
    if (f.order() != O || !f.is_integral())
        throw std::invalid_argument("residue_unit_count: f must be an integral ideal of the order");
    Int count = 0;
    for (const Elem & x : coset_reps(O, f, Int(1000000)))
        if (unit_mod(O, f, x))
            ++count;
    return count;
}

// ------------------------------------------------------------ Picard groups

PicardFormula picard_formula(const Order & O)
{
    const FieldPtr & F = O.field();
    PicardFormula pf;
    if (F->kind() == FieldKind::Quadratic) {
        if (F->D() > 0)
            throw unsupported("picard_formula: real quadratic orders are not handled");
        pf.h_K = form_class_group(F->disc()).order;
    } else {
        pf.h_K = class_group(F).order;
    }
    UnitIndex ui = unit_index(O);
    if (!ui.index)
        throw unresolved("unit index not established: " + ui.note);
    pf.unit_index = *ui.index;
    pf.conductor = conductor(O);
    pf.units_OK_mod_f = residue_unit_count(Order::maximal(F), pf.conductor);
    pf.units_O_mod_f = residue_unit_count(O, conductor_in_order(O));
    Int num = pf.h_K * pf.units_OK_mod_f, den = pf.unit_index * pf.units_O_mod_f;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw audit_failure("picard_number", num.get_str() + "/" + den.get_str() + " is not an integer");
    pf.picard = num / den;
    return pf;
}

Int picard_number(const Order & O) { return picard_formula(O).picard; }

std::vector<OrderIdeal> ideals_up_to(const Order & O, const Int & bound)
{
    if (O.field()->degree() != 2)
        throw unsupported("ideal enumeration is implemented for quadratic orders");
    std::vector<OrderIdeal> out;
    std::vector<Elem> basis = O.module().basis_elems();
    for (Int m = 1; m <= bound; ++m)
        for (Int a = 1; a <= m; ++a) {
            if (!mpz_divisible_p(m.get_mpz_t(), a.get_mpz_t()))
                continue;
            Int c = m / a;
            for (Int b = 0; b < a; ++b) {
                std::vector<Elem> gens = {Rat(a) * basis[0], Rat(b) * basis[0] + Rat(c) * basis[1]};
                IntModule M = IntModule::from_elems(O.field(), gens);
                if (stable_under(O.module(), M))
                    out.emplace_back(O, M);
            }
        }
    return out;
}

std::optional<Elem> principal_generator(const OrderIdeal & I)
{
    if (!I.is_integral())
        throw std::invalid_argument("principal_generator: ideal must be integral");
    return find_generator(I.module(), I.order().module()).generator;
}

bool ideals_equivalent(const OrderIdeal & a, const OrderIdeal & b)
{
    same_order(a, b);
    const Order & O = a.order();
    IntModule J = module_product(a.module(), module_colon(O.module(), b.module()));
    J = J.scaled(Rat(J.den() * O.index()));
    return principal_generator(OrderIdeal(O, J)).has_value();
}

PicBruteForce pic_brute_force(const Order & O, std::optional<Int> norm_bound)
{
    const FieldPtr & F = O.field();
    if (F->kind() != FieldKind::Quadratic || F->D() > 0)
        throw unsupported("pic_brute_force handles imaginary quadratic orders");
    PicBruteForce r;
    r.complete_bound = isqrt(Int(abs(O.disc()) / 3));
    if (r.complete_bound < 1)
        r.complete_bound = 1;
    r.bound = norm_bound ? *norm_bound : r.complete_bound;
    r.complete = r.bound >= r.complete_bound;
    for (const OrderIdeal & I : ideals_up_to(O, r.bound)) {
        if (!is_invertible(I))
            continue;
        ++r.ideals;
        bool seen = false;
        for (const OrderIdeal & rep : r.representatives)
            if (ideals_equivalent(I, rep)) {
                seen = true;
                break;
            }
        if (!seen)
            r.representatives.push_back(I);
    }
    r.classes = static_cast<unsigned long>(r.representatives.size());
    return r;
}

// ------------------------------------------------- congruence subgroups

namespace {

void require_coprime_elem(const Elem & x, const Order & O)
{
    if (!x.is_integral())
        throw precondition_violation("element is not integral");
    Order OK = Order::maximal(O.field());
    if (x.is_zero() || !unit_mod(OK, conductor(O), x))
        throw precondition_violation("element is not coprime to the conductor");
}

} // namespace

bool in_PK1f(const Elem & alpha, const Order & O)
{
    require_coprime_elem(alpha, O);
    return conductor(O).module().contains(alpha - Elem::one(O.field()));
}

bool in_PK1f(const Elem & alpha, const Elem & beta, const Order & O)
{
    require_coprime_elem(alpha, O);
    require_coprime_elem(beta, O);
    return conductor(O).module().contains(alpha - beta);
}

bool in_PKOf(const Elem & alpha, const Order & O)
{
    require_coprime_elem(alpha, O);
    if (!O.module().contains(alpha))
        return false;
    return unit_mod(O, conductor_in_order(O), alpha);
}

bool has_generator_in(const IntModule & A, const Order & O)
{
    auto g = find_generator(A, IntModule::maximal(A.field())).generator;
    if (!g)
        return false;
    for (const Elem & u : unit_coset_reps(O))
        if (O.module().contains(u * *g))
            return true;
    return false;
}

bool in_PKOf(const OrderIdeal & A, const Order & O)
{
    if (!A.order().is_maximal() || !A.is_integral())
        throw std::invalid_argument("in_PKOf: expected an integral ideal of the maximal order");
    if (!ideal_add(A, conductor(O)).is_whole())
        throw precondition_violation("in_PKOf: ideal is not coprime to the conductor");
    return has_generator_in(A.module(), O);
}

// ------------------------------------------------------------------ audit

AuditReport counting_audit(const Order & O)
{
    const FieldPtr & F = O.field();
    if (F->kind() != FieldKind::Quadratic || F->D() > 0)
        throw unsupported("counting_audit handles imaginary quadratic orders");
    AuditReport rep;
    Order OK = Order::maximal(F);
    PicardFormula pf = picard_formula(O);
    rep.h_K = pf.h_K;
    rep.unit_index = pf.unit_index;
    rep.units_OK_mod_f = pf.units_OK_mod_f;
    rep.units_O_mod_f = pf.units_O_mod_f;
    rep.picard_formula = pf.picard;
    PicBruteForce pb = pic_brute_force(O);
    rep.picard_brute_force = pb.classes;
    if (pb.classes != pf.picard)
        throw audit_failure("picard", "formula " + pf.picard.get_str() + " vs enumeration " + pb.classes.get_str());
    rep.checks.push_back("picard formula = class enumeration = " + pf.picard.get_str());

    const OrderIdeal fO = conductor_in_order(O);
    const OrderIdeal fK = pf.conductor;

    // Pic(O, f) and Cl_{K,O}^f by enumeration of ideals coprime to f.
    Int B = std::max<Int>(pb.complete_bound, Int(2));
    for (;; B *= 2) {
        if (B > 512)
            throw audit_failure("Pic(O,f)", "class count did not reach " + pf.picard.get_str() + " below norm 512");
        std::vector<OrderIdeal> reps_O;
        for (const OrderIdeal & I : ideals_up_to(O, B)) {
            if (!ideal_add(I, fO).is_whole())
                continue;
            bool seen = false;
            for (const OrderIdeal & r : reps_O)
                if (ideals_equivalent(I, r)) {
                    seen = true;
                    break;
                }
            if (!seen)
                reps_O.push_back(I);
        }
        std::vector<OrderIdeal> reps_K;
        for (const OrderIdeal & A : ideals_up_to(OK, B)) {
            if (!ideal_add(A, fK).is_whole())
                continue;
            bool seen = false;
            for (const OrderIdeal & r : reps_K) {
                IntModule prod = module_product(A.module(), conj_module(r.module()));
                if (has_generator_in(prod, O)) {
                    seen = true;
                    break;
                }
            }
            if (!seen)
                reps_K.push_back(A);
        }
        rep.pic_O_f = static_cast<unsigned long>(reps_O.size());
        rep.cl_K_O_f = static_cast<unsigned long>(reps_K.size());
        rep.enumeration_bound = B;
        if (rep.pic_O_f > pf.picard || rep.cl_K_O_f > pf.picard)
            throw audit_failure("Pic(O,f)", "more classes than #Pic(O)");
        if (rep.pic_O_f == pf.picard && rep.cl_K_O_f == pf.picard)
            break;
    }
    rep.checks.push_back("#Pic(O,f) = #Cl_{K,O}^f = #Pic(O) = " + pf.picard.get_str());

    // O_K^x cap K_{f,O} = O^x: u in K_{f,O} iff u*beta in O for some beta in O coprime to f.
    std::vector<Elem> reps = coset_reps(O, fO, Int(1000000));
    std::vector<Elem> coprime;
    for (const Elem & b : reps)
        if (unit_mod(O, fO, b))
            coprime.push_back(b);
    rep.unit_intersection = true;
    for (const Elem & u : roots_of_unity(F)) {
        bool in_kfo = false;
        for (const Elem & b : coprime)
            if (O.module().contains(u * b)) {
                in_kfo = true;
                break;
            }
        if (in_kfo != O.module().contains(u))
            rep.unit_intersection = false;
    }
    if (!rep.unit_intersection)
        throw audit_failure("O_K^x cap K_{f,O}", "differs from O^x");
    rep.checks.push_back("O_K^x cap K_{f,O} = O^x");

    // P_{K,1}^f subset P_{K,O}^f on generators 1 + c, c in f.
    std::vector<Elem> fb = fK.module().basis_elems();
    for (int k0 = -2; k0 <= 2; ++k0)
        for (int k1 = -2; k1 <= 2; ++k1) {
            Elem a = Elem::one(F) + Rat(k0) * fb[0] + Rat(k1) * fb[1];
            if (a.is_zero() || !unit_mod(OK, fK, a))
                continue;
            if (!in_PK1f(a, O))
                throw audit_failure("P_{K,1}^f", "generator 1 + c not congruent to 1");
            if (!in_PKOf(a, O))
                throw audit_failure("P_{K,1}^f subset P_{K,O}^f", "fails at " + a.to_string());
            ++rep.pk1f_samples;
        }
    rep.checks.push_back("P_{K,1}^f subset P_{K,O}^f on " + std::to_string(rep.pk1f_samples) + " generators");
    return rep;
}

} // namespace rcf
