#include "rcf/residue_field.hpp"

#include <stdexcept>

namespace rcf {

namespace {

const Int kScanCap = 1000000;

Int int_of(const Rat & r)
{
    if (r.get_den() != 1)
        throw precondition_violation("element is not integral");
    return r.get_num();
}

} // namespace

ResidueField::ResidueField(QuadField F, const IntModule & P) : F_(std::move(F)), P_(P)
{
    if (!P_.is_integral())
        throw std::invalid_argument("residue field needs an integral ideal");
    // Lower-triangular HNF: row 0 is (q, 0).
    q_ = P_.hnf()[0][0];
    Int N = (P_.covolume()).get_num();
    if (!rcf::is_prime(q_))
        throw precondition_violation("ideal is not prime");
    if (N == q_) {
        f_ = 1;
        // Row 1 is (b, 1): omega + b in P.
        const IntVec & r1 = P_.hnf()[1];
        if (r1[1] != 1)
            throw precondition_violation("ideal is not prime");
        root_ = mod(Int(-r1[0]), q_);
    } else if (N == q_ * q_ && P_.hnf()[1][1] == q_ && P_.hnf()[1][0] == 0) {
        f_ = 2;
        IntPoly mp = F_.omega_minpoly();
        m0_ = mod(Int(-mp.coeff(0)), q_);
        m1_ = mod(Int(-mp.coeff(1)), q_);
        if (!poly_roots_mod(mp, q_).empty())
            throw precondition_violation("ideal is not prime");
    } else {
        throw precondition_violation("ideal is not prime");
    }
}

ResidueField ResidueField::of_element(const QuadElem & p)
{
    if (!is_prime_element(p))
        throw precondition_violation(p.to_string() + " is not a prime element");
    const QuadField & F = p.field();
    return ResidueField(F, module_times(IntModule::maximal(F.field()), p.to_elem()));
}

Int ResidueField::size() const { return f_ == 1 ? q_ : q_ * q_; }

ResidueField::Value ResidueField::reduce(const QuadElem & x) const
{
    RatVec c = x.coords();
    Int a = int_of(c[0]), b = int_of(c[1]);
    if (f_ == 1)
        return {mod(Int(a + b * root_), q_)};
    return {mod(a, q_), mod(b, q_)};
}

QuadElem ResidueField::lift(const Value & v) const
{
    if (f_ == 1)
        return QuadElem(F_, Rat(v[0]));
    return QuadElem::from_coords(F_, Rat(v[0]), Rat(v[1]));
}

ResidueField::Value ResidueField::one() const
{
    Value v = zero();
    v[0] = 1 % q_;
    return v;
}

ResidueField::Value ResidueField::add(const Value & a, const Value & b) const
{
    Value r(f_);
    for (unsigned i = 0; i < f_; ++i)
        r[i] = mod(Int(a[i] + b[i]), q_);
    return r;
}

ResidueField::Value ResidueField::mul(const Value & a, const Value & b) const
{
    if (f_ == 1)
        return {mod(Int(a[0] * b[0]), q_)};
    // (a0 + a1 t)(b0 + b1 t), t^2 = m1 t + m0.
    Int t2 = a[1] * b[1];
    return {mod(Int(a[0] * b[0] + t2 * m0_), q_), mod(Int(a[0] * b[1] + a[1] * b[0] + t2 * m1_), q_)};
}

ResidueField::Value ResidueField::pow(Value a, Int e) const
{
    Value r = one();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool ResidueField::is_zero(const Value & a) const
{
    for (const Int & x : a)
        if (x != 0)
            return false;
    return true;
}

bool ResidueField::is_square(const Value & a) const
{
    if (is_zero(a) || q_ == 2)
        return true;
    return pow(a, Int((size() - 1) / 2)) == one();
}

std::vector<ResidueField::Value> ResidueField::elements() const
{
    if (size() > kScanCap)
        throw unsupported("residue field of size " + size().get_str() + " is too large to scan");
    std::vector<Value> out;
    if (f_ == 1) {
        for (Int a = 0; a < q_; ++a)
            out.push_back({a});
    } else {
        for (Int b = 0; b < q_; ++b)
            for (Int a = 0; a < q_; ++a)
                out.push_back({a, b});
    }
    return out;
}

std::optional<ResidueField::Value> ResidueField::sqrt(const Value & a) const
{
    if (!is_square(a))
        return std::nullopt;
    for (const Value & x : elements())
        if (mul(x, x) == a)
            return x;
    throw std::logic_error("square without a square root");
}

ResidueField::Value ResidueField::eval(const QuadPoly & g, const Value & x) const
{
    Value r = zero();
    for (std::size_t i = g.size(); i-- > 0;)
        r = add(mul(r, x), reduce(g[i]));
    return r;
}

bool ResidueField::has_root(const QuadPoly & g) const
{
    for (const Value & x : elements())
        if (is_zero(eval(g, x)))
            return true;
    return false;
}

bool is_prime_element(const QuadElem & p)
{
    if (!p.is_integral() || p.is_zero())
        return false;
    Int N = Rat(abs(p.norm())).get_num();
    if (rcf::is_prime(N))
        return true;
    Int q;
    if (!rcf::is_square(N, &q) || !rcf::is_prime(q))
        return false;
    if (split_prime(p.field(), q).type != SplitType::Inert)
        return false;
    // p O_F = q O_F.
    QuadElem qe(p.field(), Rat(q));
    return p.divides(qe) && qe.divides(p);
}

} // namespace rcf
