#include <algorithm>

#include "rcf/order.hpp"

namespace rcf {

std::vector<Elem> roots_of_unity(const FieldPtr & F)
{
    if (!F->totally_imaginary())
        return {Elem::one(F), -Elem::one(F)};
    IntModule OK = IntModule::maximal(F);
    std::vector<Elem> out;
    for (const RatVec & v : enumerate_by_t2(OK, t2_form(F), Rat(F->degree()))) {
        Elem x(F, v);
        if (x.t2() != F->degree() || abs(x.norm()) != 1)
            continue;
        out.push_back(x);
        out.push_back(-x);
    }
    std::sort(out.begin(), out.end(), [](const Elem & a, const Elem & b) { return a.coords() < b.coords(); });
    return out;
}

Elem fundamental_unit(const FieldPtr & E)
{
    if (E->kind() != FieldKind::Biquadratic)
        throw std::invalid_argument("fundamental_unit expects a CM biquadratic field");
    IntModule OK = IntModule::maximal(E);
    std::vector<Elem> cands = elements_of_norm(OK, OK, Int(1));
    cands.push_back(unit_grid(E, OK).unit);
    std::optional<Elem> best;
    QSqrt best_a;
    const QSqrt one{Rat(1), Rat(0), E->D()};
    for (const Elem & u : cands) {
        for (const Elem & x : {u, u.inverse()}) {
            QSqrt a = embedding_abs2(*E, x.power(), 1);
            if (!(one < a))
                continue;
            if (!best || a < best_a) {
                best = x;
                best_a = a;
            }
        }
    }
    if (!best)
        throw unresolved("no unit of infinite order located");
    return *best;
}

namespace {

std::vector<Elem> torsion_in(const std::vector<Elem> & W, const Order & O)
{
    std::vector<Elem> out;
    for (const Elem & z : W)
        if (O.module().contains(z))
            out.push_back(z);
    return out;
}

} // namespace

UnitIndex unit_index(const Order & O, long exponent_bound)
{
    UnitIndex r;
    if (O.is_maximal()) {
        r.index = Int(1);
        return r;
    }
    const FieldPtr & F = O.field();
    if (!F->totally_imaginary()) {
        r.note = "unit index of real quadratic orders is not computed";
        return r;
    }
    std::vector<Elem> W = roots_of_unity(F);
    r.torsion_index = Int(W.size()) / Int(torsion_in(W, O).size());
    if (F->kind() == FieldKind::Quadratic) {
        r.index = r.torsion_index;
        return r;
    }
    Elem eps = fundamental_unit(F);
    Elem p = eps;
    for (long j = 1; j <= exponent_bound; ++j, p = p * eps) {
        for (const Elem & z : W)
            if (O.module().contains(z * p)) {
                r.unit_exponent = j;
                r.index = r.torsion_index * j;
                return r;
            }
    }
    r.note = "no power eps^j with j <= " + std::to_string(exponent_bound) + " lies in the order up to torsion";
    return r;
}

std::vector<Elem> unit_coset_reps(const Order & O)
{
    const FieldPtr & F = O.field();
    if (O.is_maximal())
        return {Elem::one(F)};
    UnitIndex ui = unit_index(O);
    if (!ui.index)
        throw unresolved(ui.note);
    std::vector<Elem> W = roots_of_unity(F);
    std::vector<Elem> WO = torsion_in(W, O);
    // W / (W cap O): keep one zeta per coset.
    std::vector<Elem> wreps;
    for (const Elem & z : W) {
        bool dup = false;
        for (const Elem & y : wreps)
            for (const Elem & t : WO)
                if (z == y * t)
                    dup = true;
        if (!dup)
            wreps.push_back(z);
    }
    if (F->kind() == FieldKind::Quadratic)
        return wreps;
    Elem eps = fundamental_unit(F);
    std::vector<Elem> out;
    Elem p = Elem::one(F);
    for (Int j = 0; j < ui.unit_exponent; ++j, p = p * eps)
        for (const Elem & z : wreps)
            out.push_back(z * p);
    return out;
}

} // namespace rcf
