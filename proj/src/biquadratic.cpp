#include "rcf/biquadratic.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace rcf {

namespace {

void require_biquadratic(const FieldPtr & E)
{
    if (E->kind() != FieldKind::Biquadratic)
        throw std::invalid_argument("expected a biquadratic field");
}

Int quad_disc(const Int & D) { return mod(D, 4) == 1 ? D : 4 * D; }

bool hnf_less(const OrderIdeal & a, const OrderIdeal & b) { return a.module().hnf() < b.module().hnf(); }

Elem power_elem(const FieldPtr & E, int i)
{
    RatVec p(4, Rat(0));
    p[i] = 1;
    return Elem::from_power(E, p);
}

// Ideal of O_E generated by the given elements together with q.
IntModule ideal_generated(const FieldPtr & E, const Int & q, const std::vector<Elem> & gens)
{
    IntModule OE = IntModule::maximal(E);
    IntModule I = module_times(OE, Elem::integer(E, Rat(q)));
    for (const Elem & g : gens)
        if (!g.is_zero())
            I = module_sum(I, module_times(OE, g));
    return I;
}

Elem reduce_mod(const Elem & x, const Int & q)
{
    RatVec c = x.coords();
    for (Rat & v : c)
        v = Rat(mod(v.get_num(), q));
    return Elem(x.field(), c);
}

Elem pow_mod(Elem x, Int e, const Int & q)
{
    Elem r = Elem::one(x.field());
    x = reduce_mod(x, q);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = reduce_mod(r * x, q);
        x = reduce_mod(x * x, q);
        e >>= 1;
    }
    return r;
}

// Radical of q O_E: x with x^(q^k) in q O_E, q^k >= 4.
IntModule radical(const FieldPtr & E, const Int & q)
{
    Int Q = q;
    while (Q < 4)
        Q *= q;
    std::vector<Elem> basis = IntModule::maximal(E).basis_elems();
    IntMat M;
    for (const Elem & b : basis) {
        Elem y = pow_mod(b, Q, q);
        IntVec row;
        for (const Rat & c : y.coords())
            row.push_back(c.get_num());
        M.push_back(std::move(row));
    }
    std::vector<Elem> gens;
    for (const IntVec & k : kernel_mod_p(M, q)) {
        Elem x = Elem::zero(E);
        for (std::size_t i = 0; i < k.size(); ++i)
            x = x + Rat(k[i]) * basis[i];
        gens.push_back(x);
    }
    return ideal_generated(E, q, gens);
}

unsigned log_q(Int N, const Int & q)
{
    unsigned f = 0;
    while (N > 1) {
        if (!mpz_divisible_p(N.get_mpz_t(), q.get_mpz_t()))
            throw std::logic_error("prime ideal norm is not a power of q");
        N /= q;
        ++f;
    }
    return f;
}

std::vector<PrimeFactor> finish(const FieldPtr & E, const Int & q, std::vector<OrderIdeal> primes,
                                const std::vector<unsigned> * es)
{
    Order OE = Order::maximal(E);
    std::vector<PrimeFactor> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        PrimeFactor pf{primes[i], 1, 1};
        Rat N = primes[i].norm();
        pf.f = log_q(N.get_num(), q);
        out.push_back(pf);
    }
    const unsigned g = static_cast<unsigned>(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (es)
            out[i].e = (*es)[i];
        else {
            if (4 % (g * out[i].f) != 0)
                throw std::logic_error("inconsistent splitting data");
            out[i].e = 4 / (g * out[i].f);
        }
    }
    unsigned total = 0;
    OrderIdeal prod = OrderIdeal::whole(OE);
    for (const PrimeFactor & pf : out) {
        total += pf.e * pf.f;
        for (unsigned k = 0; k < pf.e; ++k)
            prod = ideal_mul(prod, pf.prime);
    }
    if (total != 4 || prod != OrderIdeal::principal(OE, Elem::integer(E, Rat(q))))
        throw std::logic_error("prime factorization of " + q.get_str() + " does not multiply back");
    std::sort(out.begin(), out.end(), [](const PrimeFactor & a, const PrimeFactor & b) {
        return hnf_less(a.prime, b.prime);
    });
    return out;
}

std::vector<PrimeFactor> factor_kd(const FieldPtr & E, const Int & q)
{
    std::vector<Elem> basis = IntModule::maximal(E).basis_elems();
    std::vector<std::array<int, 3>> combos;
    for (int r = 1; r <= 3; ++r)
        for (int a = -r; a <= r; ++a)
            for (int b = -r; b <= r; ++b)
                for (int c = -r; c <= r; ++c)
                    if (std::max({std::abs(a), std::abs(b), std::abs(c)}) == r)
                        combos.push_back({a, b, c});
    for (const auto & [a, b, c] : combos) {
        Elem theta = Rat(a) * basis[1] + Rat(b) * basis[2] + Rat(c) * basis[3];
        std::vector<Int> cp;
        for (const Rat & x : theta.charpoly())
            cp.push_back(x.get_num());
        IntPoly f(cp);
        Int disc = poly_discriminant(f);
        if (disc == 0)
            continue;
        Int idx2 = disc / E->disc();
        if (mpz_divisible_p(idx2.get_mpz_t(), q.get_mpz_t()))
            continue;
        Order OE = Order::maximal(E);
        std::vector<OrderIdeal> primes;
        std::vector<unsigned> es;
        for (const auto & [g, e] : factor_mod(f, q)) {
            Elem gt = Elem::zero(E);
            const auto & gc = g.coeffs();
            for (std::size_t i = gc.size(); i-- > 0;)
                gt = gt * theta + Elem::integer(E, Rat(gc[i]));
            primes.emplace_back(OE, ideal_generated(E, q, {gt}));
            es.push_back(e);
        }
        return finish(E, q, std::move(primes), &es);
    }
    throw unsupported("prime " + q.get_str() + " divides the index of every primitive element tried");
}

std::vector<PrimeFactor> factor_subfields(const FieldPtr & E, const Int & q)
{
    const Int & d = E->d();
    const Int & n = E->n();
    Int g = gcd(d, n);
    Int m = (d / g) * (n / g);
    // (radicand D of the subfield, image of sqrt D in E)
    std::vector<std::pair<Int, Elem>> subs = {
        {-d, power_elem(E, 1)},
        {-n, power_elem(E, 2)},
        {m, Rat(1, g) * power_elem(E, 3)},
    };
    std::vector<std::vector<IntModule>> ext;
    for (const auto & [D, root] : subs) {
        QuadField K(D);
        std::vector<IntModule> here;
        for (const IntModule & P : split_prime(K, q).ideals) {
            std::vector<Elem> gens;
            for (const Elem & b : P.basis_elems()) {
                QuadElem x = QuadElem::from_elem(b);
                gens.push_back(Elem::integer(E, x.a()) + x.b() * root);
            }
            here.push_back(ideal_generated(E, q, gens));
        }
        ext.push_back(std::move(here));
    }
    IntModule rad = radical(E, q);
    Order OE = Order::maximal(E);
    std::vector<OrderIdeal> primes;
    for (const IntModule & a : ext[0])
        for (const IntModule & b : ext[1])
            for (const IntModule & c : ext[2]) {
                IntModule I = module_sum(module_sum(module_sum(a, b), c), rad);
                if (I == OE.module())
                    continue;
                OrderIdeal P(OE, I);
                if (std::find(primes.begin(), primes.end(), P) == primes.end())
                    primes.push_back(P);
            }
    return finish(E, q, std::move(primes), nullptr);
}

} // namespace

bool marcus_case(const Int & d, const Int & n)
{
    return mod(d, 4) == 3 && (mod(n, 4) == 1 || mod(n, 4) == 2) && gcd(d, n) == 1;
}

FieldPtr integral_basis(const Int & d, const Int & n, const std::optional<RatMat> & basis)
{
    return Field::biquadratic(d, n, basis);
}

QuadField base_field(const FieldPtr & E)
{
    require_biquadratic(E);
    return QuadField(-E->d());
}

Elem embed_base(const FieldPtr & E, const QuadElem & x)
{
    if (x.field().D() != -E->d())
        throw std::invalid_argument("element is not in the base field");
    return Elem::from_power(E, {x.a(), x.b(), Rat(0), Rat(0)});
}

Elem sqrt_minus_n(const FieldPtr & E) { return power_elem(E, 2); }

Elem relative_elem(const FieldPtr & E, const QuadElem & x, const QuadElem & y)
{
    return embed_base(E, x) + embed_base(E, y) * sqrt_minus_n(E);
}

std::pair<QuadElem, QuadElem> relative_coords(const Elem & e)
{
    require_biquadratic(e.field());
    QuadField F = base_field(e.field());
    RatVec p = e.power();
    return {QuadElem(F, p[0], p[1]), QuadElem(F, p[2], p[3])};
}

Elem bar(const Elem & e)
{
    require_biquadratic(e.field());
    RatVec p = e.power();
    p[2] = -p[2];
    p[3] = -p[3];
    return Elem::from_power(e.field(), p);
}

QuadElem rel_norm_EF(const Elem & e)
{
    RatVec p = (e * bar(e)).power();
    if (p[2] != 0 || p[3] != 0)
        throw std::logic_error("relative norm left the base field");
    return QuadElem(base_field(e.field()), p[0], p[1]);
}

std::vector<PrimeFactor> factor_rational_prime(const FieldPtr & E, const Int & q, FactorMethod method)
{
    require_biquadratic(E);
    if (!is_prime(q))
        throw std::invalid_argument(q.get_str() + " is not prime");
    switch (method) {
    case FactorMethod::KummerDedekind:
        return factor_kd(E, q);
    case FactorMethod::Subfields:
        return factor_subfields(E, q);
    default:
        try {
            return factor_kd(E, q);
        } catch (const unsupported &) {
            return factor_subfields(E, q);
        }
    }
}

Rat minkowski_bound(const FieldPtr & E)
{
    require_biquadratic(E);
    // 3 / (2 pi^2) sqrt|disc| with pi > 3.14159 and sqrt rounded up.
    const Int scale = 1000000;
    Int s = isqrt(Int(abs(E->disc()) * scale * scale));
    if (s * s != abs(E->disc()) * scale * scale)
        s += 1;
    Rat sq(s, scale);
    Rat pi_lo(314159, 100000);
    Rat m = Rat(3) * sq / (Rat(2) * pi_lo * pi_lo);
    Int c = rat_ceil(m * 1000);
    return Rat(c, 1000);
}

BiquadClassGroup class_group(const FieldPtr & E, const Int & cap)
{
    require_biquadratic(E);
    BiquadClassGroup res;
    res.bound = minkowski_bound(E);
    if (res.bound > cap)
        throw unsupported("Minkowski bound " + to_string(res.bound) + " exceeds the cap " + cap.get_str());
    Order OE = Order::maximal(E);
    Int B = rat_floor(res.bound);
    for (const auto & q : primes_up_to(B.get_si())) {
        for (const PrimeFactor & pf : factor_rational_prime(E, Int(q))) {
            if (pf.prime.norm() > res.bound)
                continue;
            if (!principal_generator(pf.prime))
                res.generators.push_back(pf.prime);
        }
    }
    const std::size_t k = res.generators.size();
    res.representatives = {OrderIdeal::whole(OE)};
    if (k == 0) {
        res.order = 1;
        return res;
    }
    std::vector<IntVec> words = {IntVec(k, Int(0))};
    IntMat relations;
    for (std::size_t r = 0; r < res.representatives.size(); ++r) {
        for (std::size_t g = 0; g < k; ++g) {
            OrderIdeal prod = ideal_mul(res.representatives[r], res.generators[g]);
            IntVec w = words[r];
            w[g] += 1;
            std::size_t t = 0;
            while (t < res.representatives.size() && !ideals_equivalent(prod, res.representatives[t]))
                ++t;
            if (t == res.representatives.size()) {
                res.representatives.push_back(prod);
                words.push_back(w);
                if (res.representatives.size() > 10000)
                    throw unsupported("class group exceeds 10000 classes");
            } else {
                for (std::size_t i = 0; i < k; ++i)
                    w[i] -= words[t][i];
                if (content(w) != 0)
                    relations.push_back(w);
            }
        }
    }
    Int h = 1;
    for (const Int & s : smith_invariants(relations)) {
        if (s == 0)
            throw std::logic_error("class group relations are not of full rank");
        if (s != 1)
            res.invariants.push_back(s);
        h *= s;
    }
    res.order = Int(res.representatives.size());
    if (h != res.order)
        throw std::logic_error("class group structure disagrees with the class count");
    return res;
}

NormMapCondition norm_map_condition(const Int & d, const Int & n)
{
    FieldPtr E = integral_basis(d, n);
    NormMapCondition c;
    Int dF = quad_disc(-d);
    c.h_F = form_class_group(dF).order;
    c.h_E = class_group(E).order;
    c.E_in_HF = E->disc() == dF * dF;
    c.inj_iso = c.h_F == c.h_E && !c.E_in_HF;
    c.odd_equal = c.h_F == c.h_E && mpz_odd_p(c.h_F.get_mpz_t());
    return c;
}

} // namespace rcf
