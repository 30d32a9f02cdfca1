#include "rcf/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rcf {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        c_.emplace_back(c);
    trim();
}

IntPoly IntPoly::monomial(const Int & c, unsigned degree)
{
    std::vector<Int> v(degree + 1, Int(0));
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

const Int & IntPoly::leading() const
{
    if (c_.empty())
        throw std::invalid_argument("leading coefficient of the zero polynomial");
    return c_.back();
}

Int IntPoly::eval(const Int & x) const
{
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

IntPoly IntPoly::derivative() const
{
    std::vector<Int> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * static_cast<unsigned long>(i));
    return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly & a, const IntPoly & b)
{
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly & a, const IntPoly & b)
{
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly & a, const IntPoly & b)
{
    if (a.is_zero() || b.is_zero())
        return IntPoly();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string(const std::string & var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int & c = c_[i];
        if (c == 0)
            continue;
        Int a = abs(c);
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        if (a != 1 || i == 0)
            os << a.get_str() << (i > 0 ? "*" : "");
        if (i >= 1)
            os << var;
        if (i > 1)
            os << "^" << i;
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------------- resultant

namespace {

using RatVec = std::vector<Rat>;

void trim(RatVec & v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

RatVec rat_rem(RatVec a, const RatVec & b)
{
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int da = static_cast<int>(a.size()) - 1;
        Rat q = a.back() / b.back();
        for (int i = 0; i <= db; ++i)
            a[da - db + i] -= q * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

Rat rat_resultant(const RatVec & a, const RatVec & b)
{
    if (a.empty() || b.empty())
        return 0;
    const long m = static_cast<long>(a.size()) - 1;
    const long n = static_cast<long>(b.size()) - 1;
    if (n == 0) {
        Rat r = 1;
        for (long i = 0; i < m; ++i)
            r *= b.back();
        return r;
    }
    RatVec r = rat_rem(a, b);
    if (r.empty())
        return 0;
    const long dr = static_cast<long>(r.size()) - 1;
    Rat factor = 1;
    for (long i = 0; i < m - dr; ++i)
        factor *= b.back();
    if ((m * n) % 2 == 1)
        factor = -factor;
    return factor * rat_resultant(b, r);
}

RatVec to_rat(const IntPoly & f)
{
    RatVec v;
    for (const Int & c : f.coeffs())
        v.emplace_back(c);
    return v;
}

} // namespace

Int resultant(const IntPoly & f, const IntPoly & g)
{
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant of the zero polynomial");
    Rat r = rat_resultant(to_rat(f), to_rat(g));
    if (r.get_den() != 1)
        throw std::logic_error("resultant of integer polynomials is not an integer");
    return r.get_num();
}

Int poly_discriminant(const IntPoly & f)
{
    const int d = f.degree();
    if (d < 1)
        throw std::invalid_argument("discriminant of a constant polynomial");
    Int r = resultant(f, f.derivative());
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1)
        r = -r;
    Int q;
    if (!mpz_divisible_p(r.get_mpz_t(), f.leading().get_mpz_t()))
        throw std::logic_error("discriminant not divisible by the leading coefficient");
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    return q;
}

// ----------------------------------------------------------------- FpPoly

FpPoly::FpPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs))
{
    for (Int & c : c_)
        c = mod(c, p_);
    trim();
}

FpPoly::FpPoly(const IntPoly & f, const Int & p) : FpPoly(p, f.coeffs()) {}

FpPoly FpPoly::x(const Int & p) { return FpPoly(p, {Int(0), Int(1)}); }

FpPoly FpPoly::constant(const Int & c, const Int & p) { return FpPoly(p, {c}); }

void FpPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Int FpPoly::eval(const Int & x) const
{
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = mod(r * x + *it, p_);
    return r;
}

FpPoly FpPoly::monic() const
{
    if (c_.empty())
        return *this;
    Int inv = invmod(c_.back(), p_);
    std::vector<Int> r = c_;
    for (Int & c : r)
        c *= inv;
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::derivative() const
{
    std::vector<Int> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * static_cast<unsigned long>(i));
    return FpPoly(p_, std::move(d));
}

FpPoly operator+(const FpPoly & a, const FpPoly & b)
{
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(i) + b.coeff(i);
    return FpPoly(a.p_, std::move(r));
}

FpPoly operator-(const FpPoly & a, const FpPoly & b)
{
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(i) - b.coeff(i);
    return FpPoly(a.p_, std::move(r));
}

FpPoly operator*(const FpPoly & a, const FpPoly & b)
{
    if (a.is_zero() || b.is_zero())
        return FpPoly(a.p_);
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return FpPoly(a.p_, std::move(r));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly & a, const FpPoly & b)
{
    if (b.is_zero())
        throw std::invalid_argument("FpPoly division by zero");
    const Int & p = a.p_;
    std::vector<Int> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db)
        return {FpPoly(p), a};
    std::vector<Int> quo(a.degree() - db + 1, Int(0));
    Int inv = invmod(b.c_.back(), p);
    for (int i = a.degree(); i >= db; --i) {
        Int q = mod(rem[i] * inv, p);
        quo[i - db] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = mod(rem[i - db + j] - q * b.c_[j], p);
    }
    rem.resize(db);
    return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(rem))};
}

std::string FpPoly::to_string() const { return IntPoly(c_).to_string() + " mod " + p_.get_str(); }

FpPoly gcd(const FpPoly & a_in, const FpPoly & b_in)
{
    FpPoly a = a_in, b = b_in;
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly powmod(const FpPoly & base, const Int & e, const FpPoly & m)
{
    FpPoly result = FpPoly::constant(1, base.modulus()) % m;
    FpPoly b = base % m;
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = (result * b) % m;
    }
    return result;
}

// ------------------------------------------------------ factoring mod p

namespace {

bool is_one(const FpPoly & f) { return f.degree() == 0 && f.coeff(0) == 1; }

// Monic f with f' = 0 is a p-th power; p-th roots of F_p scalars are trivial.
FpPoly pth_root(const FpPoly & f)
{
    const unsigned long p = f.modulus().get_ui();
    std::vector<Int> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
        r.push_back(f.coeffs()[i]);
    return FpPoly(f.modulus(), std::move(r));
}

void squarefree_parts(const FpPoly & f, unsigned mult, std::vector<std::pair<FpPoly, unsigned>> & out)
{
    if (f.degree() < 1)
        return;
    FpPoly g = f.derivative();
    if (g.is_zero()) {
        squarefree_parts(pth_root(f), mult * f.modulus().get_ui(), out);
        return;
    }
    FpPoly c = gcd(f, g);
    FpPoly w = f / c;
    unsigned i = 1;
    while (!is_one(w)) {
        FpPoly y = gcd(w, c);
        FpPoly z = w / y;
        if (z.degree() > 0)
            out.emplace_back(z.monic(), i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0)
        squarefree_parts(pth_root(c.monic()), mult * f.modulus().get_ui(), out);
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<FpPoly, int>> distinct_degree(FpPoly f)
{
    std::vector<std::pair<FpPoly, int>> out;
    const Int & p = f.modulus();
    FpPoly x = FpPoly::x(p);
    FpPoly h = x;
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = powmod(h, p, f);
        FpPoly g = gcd(h - x, f);
        if (!is_one(g)) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0)
        out.emplace_back(f.monic(), f.degree());
    return out;
}

// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
void equal_degree(const FpPoly & f, int d, gmp_randclass & rng, std::vector<FpPoly> & out)
{
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Int & p = f.modulus();
    Int pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    for (;;) {
        std::vector<Int> coeffs;
        for (int i = 0; i < f.degree(); ++i)
            coeffs.push_back(rng.get_z_range(p));
        FpPoly a(p, coeffs);
        if (a.degree() < 1)
            continue;
        FpPoly b(p);
        if (p == 2) {
            FpPoly t = a % f;
            b = t;
            for (int i = 1; i < d; ++i) {
                t = (t * t) % f;
                b = b + t;
            }
        } else {
            b = powmod(a, (pd - 1) / 2, f) - FpPoly::constant(1, p);
        }
        FpPoly g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

bool poly_less(const FpPoly & a, const FpPoly & b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeffs()[i] != b.coeffs()[i])
            return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

std::vector<Int> roots_by_scan(const IntPoly & f, const Int & p)
{
    const unsigned long pp = p.get_ui();
    std::vector<unsigned long> c;
    for (const Int & a : f.coeffs())
        c.push_back(mpz_fdiv_ui(a.get_mpz_t(), pp));
    std::vector<Int> roots;
    for (unsigned long x = 0; x < pp; ++x) {
        unsigned __int128 acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = (acc * x + *it) % pp;
        if (acc == 0)
            roots.emplace_back(x);
    }
    return roots;
}

std::vector<Int> roots_by_gcd(const IntPoly & f, const Int & p)
{
    FpPoly fp = FpPoly(f, p).monic();
    FpPoly x = FpPoly::x(p);
    FpPoly g = gcd(powmod(x, p, fp) - x, fp);
    std::vector<Int> roots;
    if (g.degree() < 1)
        return roots;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eedUL);
    std::vector<FpPoly> linear;
    if (g.coeff(0) == 0) {
        roots.emplace_back(0);
        g = g / x;
    }
    if (g.degree() >= 1)
        equal_degree(g, 1, rng, linear);
    for (const FpPoly & l : linear)
        roots.push_back(mod(-l.coeff(0), p));
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

std::vector<Int> poly_roots_mod(const IntPoly & f, const Int & p, RootMethod method)
{
    if (!is_prime(p))
        throw std::invalid_argument("poly_roots_mod: modulus " + p.get_str() + " is not prime");
    if (FpPoly(f, p).is_zero())
        throw std::invalid_argument("poly_roots_mod: polynomial vanishes mod " + p.get_str());
    if (method == RootMethod::Auto)
        method = p < 1000000 ? RootMethod::Scan : RootMethod::PowerGcd;
    if (method == RootMethod::Scan) {
        if (!p.fits_ulong_p() || p >= Int(1) << 40)
            throw std::invalid_argument("poly_roots_mod: modulus too large for exhaustive scan");
        return roots_by_scan(f, p);
    }
    return roots_by_gcd(f, p);
}

std::vector<std::pair<FpPoly, unsigned>> factor_mod(const IntPoly & f, const Int & p)
{
    if (!is_prime(p))
        throw std::invalid_argument("factor_mod: modulus " + p.get_str() + " is not prime");
    FpPoly fp(f, p);
    if (fp.is_zero())
        throw std::invalid_argument("factor_mod: polynomial vanishes mod " + p.get_str());
    std::vector<std::pair<FpPoly, unsigned>> sqf;
    squarefree_parts(fp.monic(), 1, sqf);

    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eedUL);
    std::vector<std::pair<FpPoly, unsigned>> out;
    for (const auto & [part, mult] : sqf) {
        for (const auto & [block, d] : distinct_degree(part)) {
            std::vector<FpPoly> irr;
            equal_degree(block, d, rng, irr);
            for (FpPoly & g : irr)
                out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto & a, const auto & b) {
        if (poly_less(a.first, b.first))
            return true;
        if (poly_less(b.first, a.first))
            return false;
        return a.second < b.second;
    });
    return out;
}

} // namespace rcf
