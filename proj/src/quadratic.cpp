#include "rcf/quadratic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rcf {

// -------------------------------------------------------------- QuadField

QuadField::QuadField(const Int & D) : F_(Field::quadratic(D)) {}

QuadField::QuadField(FieldPtr F) : F_(std::move(F))
{
    if (F_->kind() != FieldKind::Quadratic)
        throw std::invalid_argument("QuadField needs a quadratic field");
}

QuadElem QuadField::omega() const
{
    if (mod(D(), 4) == 1)
        return QuadElem(*this, Rat(1, 2), Rat(1, 2));
    return QuadElem(*this, 0, 1);
}

IntPoly QuadField::omega_minpoly() const
{
    if (mod(D(), 4) == 1)
        return IntPoly(std::vector<Int>{Int((1 - D()) / 4), Int(-1), Int(1)});
    return IntPoly(std::vector<Int>{Int(-D()), Int(0), Int(1)});
}

// --------------------------------------------------------------- QuadElem

QuadElem::QuadElem(QuadField F, Rat a, Rat b) : F_(std::move(F)), a_(std::move(a)), b_(std::move(b))
{
    a_.canonicalize();
    b_.canonicalize();
}

QuadElem QuadElem::from_elem(const Elem & e)
{
    RatVec p = e.power();
    return QuadElem(QuadField(e.field()), p[0], p[1]);
}

QuadElem QuadElem::from_coords(const QuadField & F, const Rat & x, const Rat & y)
{
    return from_elem(Elem(F.field(), {x, y}));
}

Elem QuadElem::to_elem() const { return Elem::from_power(F_.field(), {a_, b_}); }

RatVec QuadElem::coords() const { return to_elem().coords(); }

Rat QuadElem::norm() const { return a_ * a_ - F_.D() * b_ * b_; }
Rat QuadElem::trace() const { return 2 * a_; }
QuadElem QuadElem::conj() const { return QuadElem(F_, a_, -b_); }
bool QuadElem::is_integral() const { return to_elem().is_integral(); }

QuadElem QuadElem::inverse() const
{
    Rat n = norm();
    if (n == 0)
        throw std::invalid_argument("inverse of zero");
    return QuadElem(F_, a_ / n, -b_ / n);
}

namespace {
void same(const QuadElem & x, const QuadElem & y)
{
    if (!(x.field() == y.field()))
        throw std::invalid_argument("quadratic elements of different fields");
}
} // namespace

QuadElem operator+(const QuadElem & x, const QuadElem & y)
{
    same(x, y);
    return QuadElem(x.F_, x.a_ + y.a_, x.b_ + y.b_);
}

QuadElem operator-(const QuadElem & x, const QuadElem & y)
{
    same(x, y);
    return QuadElem(x.F_, x.a_ - y.a_, x.b_ - y.b_);
}

QuadElem operator-(const QuadElem & x) { return QuadElem(x.F_, -x.a_, -x.b_); }

QuadElem operator*(const QuadElem & x, const QuadElem & y)
{
    same(x, y);
    return QuadElem(x.F_, x.a_ * y.a_ + x.F_.D() * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
}

bool operator==(const QuadElem & x, const QuadElem & y)
{
    same(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

bool QuadElem::divides(const QuadElem & y) const { return (y / *this).is_integral(); }

std::string QuadElem::to_string() const { return to_elem().to_string(); }

// ------------------------------------------------------------ split_prime

std::string to_string(SplitType t)
{
    switch (t) {
    case SplitType::Split:
        return "split";
    case SplitType::Inert:
        return "inert";
    default:
        return "ramified";
    }
}

PrimeSplitting split_prime(const QuadField & F, const Int & q)
{
    if (!is_prime(q))
        throw std::invalid_argument("split_prime: " + q.get_str() + " is not prime");
    const FieldPtr & K = F.field();
    IntModule OK = IntModule::maximal(K);
    PrimeSplitting s;
    std::vector<Int> roots = poly_roots_mod(F.omega_minpoly(), q);
    Elem qe = Elem::integer(K, Rat(q));
    Elem om = F.omega().to_elem();
    auto ideal_of = [&](const Int & r) {
        return module_sum(module_times(OK, qe), module_times(OK, om - Elem::integer(K, Rat(r))));
    };
    if (mpz_divisible_p(F.disc().get_mpz_t(), q.get_mpz_t())) {
        s.type = SplitType::Ramified;
        s.roots = {roots.at(0)};
        s.ideals = {ideal_of(roots[0])};
    } else if (roots.size() == 2) {
        s.type = SplitType::Split;
        s.roots = roots;
        s.ideals = {ideal_of(roots[0]), ideal_of(roots[1])};
    } else {
        s.type = SplitType::Inert;
        s.ideals = {module_times(OK, qe)};
    }
    for (const IntModule & P : s.ideals) {
        (void)P;
        s.generators.emplace_back(std::nullopt);
    }
    if (!K->totally_imaginary())
        return s;
    auto g = find_generator(s.ideals[0], OK);
    if (g.generator) {
        s.generators[0] = QuadElem::from_elem(*g.generator);
        if (s.type == SplitType::Split)
            s.generators[1] = s.generators[0]->conj();
    }
    return s;
}

// ------------------------------------------------------------ binary forms

bool BinaryForm::is_reduced() const
{
    if (!(abs(b) <= a && a <= c))
        return false;
    if ((a == c || abs(b) == a) && b < 0)
        return false;
    return true;
}

bool BinaryForm::is_primitive() const { return gcd(gcd(a, b), c) == 1; }

bool operator<(const BinaryForm & x, const BinaryForm & y)
{
    if (x.a != y.a)
        return x.a < y.a;
    if (x.b != y.b)
        return x.b < y.b;
    return x.c < y.c;
}

std::string BinaryForm::to_string() const { return "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ")"; }

BinaryForm reduce(BinaryForm f)
{
    if (f.disc() >= 0 || f.a <= 0)
        throw std::invalid_argument("reduce: form " + f.to_string() + " is not positive definite");
    for (;;) {
        if (!(-f.a < f.b && f.b <= f.a)) {
            Int two_a = 2 * f.a, q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), f.b.get_mpz_t(), two_a.get_mpz_t());
            if (r > f.a) {
                r -= two_a;
                q += 1;
            }
            f.c -= (f.b + r) * q / 2;
            f.b = r;
        }
        if (f.a > f.c) {
            f.b = -f.b;
            std::swap(f.a, f.c);
            continue;
        }
        if (f.a == f.c && f.b < 0)
            f.b = -f.b;
        return f;
    }
}

BinaryForm compose(const BinaryForm & f1_in, const BinaryForm & f2_in)
{
    const Int D = f1_in.disc();
    if (f2_in.disc() != D)
        throw std::invalid_argument("compose: discriminants differ");
    BinaryForm f1 = f1_in, f2 = f2_in;
    if (f1.a > f2.a)
        std::swap(f1, f2);
    Int s = (f1.b + f2.b) / 2;
    Int n = f2.b - s;
    Int y1, d;
    if (mpz_divisible_p(f2.a.get_mpz_t(), f1.a.get_mpz_t())) {
        y1 = 0;
        d = f1.a;
    } else {
        Int u, v;
        d = xgcd(u, v, f2.a, f1.a);
        y1 = u;
    }
    Int x2, y2, d1;
    if (mpz_divisible_p(s.get_mpz_t(), d.get_mpz_t())) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        d1 = xgcd(x2, y2, s, d);
        y2 = -y2;
    }
    Int v1 = f1.a / d1, v2 = f2.a / d1;
    Int r = mod(y1 * y2 * n - x2 * f2.c, v1);
    BinaryForm g;
    g.b = f2.b + 2 * v2 * r;
    g.a = v1 * v2;
    Int num = g.b * g.b - D;
    if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * g.a).get_mpz_t()))
        throw std::logic_error("compose: non-integral third coefficient");
    g.c = num / (4 * g.a);
    return reduce(g);
}

BinaryForm principal_form(const Int & disc)
{
    if (disc >= 0 || !(mod(disc, 4) == 0 || mod(disc, 4) == 1))
        throw std::invalid_argument("principal_form: bad discriminant " + disc.get_str());
    Int b = mod(disc, 2);
    return reduce(BinaryForm{1, b, (b * b - disc) / 4});
}

BinaryForm inverse(const BinaryForm & f) { return reduce(BinaryForm{f.a, -f.b, f.c}); }

BinaryForm form_power(const BinaryForm & f, Int e)
{
    BinaryForm base = e < 0 ? inverse(f) : reduce(f);
    if (e < 0)
        e = -e;
    BinaryForm r = principal_form(f.disc());
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            r = compose(r, base);
        base = compose(base, base);
        e >>= 1;
    }
    return r;
}

std::vector<Int> invariants_from_orders(const std::vector<Int> & orders)
{
    const Int n = static_cast<unsigned long>(orders.size());
    if (n <= 1)
        return {};
    std::vector<std::vector<Int>> per_prime; // descending prime-power cyclic orders
    for (const auto & [p, e] : factor_integer(n)) {
        std::vector<unsigned> logs;
        for (unsigned j = 0; j <= e + 1; ++j) {
            Int pj;
            mpz_pow_ui(pj.get_mpz_t(), p.get_mpz_t(), j);
            long cnt = 0;
            for (const Int & o : orders)
                if (mpz_divisible_p(pj.get_mpz_t(), o.get_mpz_t()))
                    ++cnt;
            unsigned l = 0;
            Int c = cnt;
            while (c > 1) {
                if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t()))
                    throw std::logic_error("element orders do not come from an abelian group");
                c /= p;
                ++l;
            }
            logs.push_back(l);
        }
        // m_j = number of cyclic factors of order >= p^j
        std::vector<Int> cyc;
        for (unsigned j = 1; j <= e; ++j) {
            unsigned mj = logs[j] - logs[j - 1];
            unsigned mj1 = logs[j + 1] - logs[j];
            Int pj;
            mpz_pow_ui(pj.get_mpz_t(), p.get_mpz_t(), j);
            for (unsigned k = 0; k < mj - mj1; ++k)
                cyc.push_back(pj);
        }
        std::sort(cyc.rbegin(), cyc.rend());
        per_prime.push_back(cyc);
    }
    std::size_t len = 0;
    for (const auto & v : per_prime)
        len = std::max(len, v.size());
    std::vector<Int> inv(len, Int(1));
    for (const auto & v : per_prime)
        for (std::size_t i = 0; i < v.size(); ++i)
            inv[i] *= v[i];
    std::reverse(inv.begin(), inv.end());
    return inv;
}

ClassGroupResult form_class_group(const Int & disc)
{
    if (disc >= 0 || !(mod(disc, 4) == 0 || mod(disc, 4) == 1))
        throw std::invalid_argument("form_class_group: discriminant must be negative and 0 or 1 mod 4, got " +
                                    disc.get_str());
    ClassGroupResult res;
    const Int amax = isqrt(Int(-disc / 3));
    for (Int a = 1; a <= amax; ++a)
        for (Int b = -a + 1; b <= a; ++b) {
            if (mod(b - disc, 2) != 0)
                continue;
            Int num = b * b - disc;
            if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * a).get_mpz_t()))
                continue;
            BinaryForm f{a, b, num / (4 * a)};
            if (f.is_reduced() && f.is_primitive())
                res.forms.push_back(f);
        }
    std::sort(res.forms.begin(), res.forms.end());
    res.order = static_cast<unsigned long>(res.forms.size());

    std::map<BinaryForm, std::size_t> index;
    for (std::size_t i = 0; i < res.forms.size(); ++i)
        index[res.forms[i]] = i;
    const BinaryForm e = principal_form(disc);
    std::vector<Int> orders;
    for (const BinaryForm & f : res.forms) {
        BinaryForm x = f;
        long k = 1;
        while (!(x == e)) {
            x = compose(x, f);
            if (!index.count(x))
                throw std::logic_error("composition left the set of reduced forms");
            ++k;
        }
        orders.emplace_back(k);
    }
    res.invariants = invariants_from_orders(orders);
    return res;
}

} // namespace rcf
