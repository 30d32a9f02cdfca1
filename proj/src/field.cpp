#include "rcf/field.hpp"

#include <sstream>
#include <stdexcept>

namespace rcf {

namespace {

struct Term {
    int index;
    long sign; // coefficient is sign * scale
    int scale; // 0: 1, 1: d, 2: n, 3: dn
};

// Power-basis structure constants of the biquadratic field.
Term biquad_term(int i, int j)
{
    if (i > j)
        std::swap(i, j);
    if (i == 0)
        return {j, 1, 0};
    if (i == 1 && j == 1)
        return {0, -1, 1};
    if (i == 2 && j == 2)
        return {0, -1, 2};
    if (i == 3 && j == 3)
        return {0, 1, 3};
    if (i == 1 && j == 2)
        return {3, 1, 0};
    if (i == 1 && j == 3)
        return {2, -1, 1};
    return {1, -1, 2}; // (2, 3)
}

RatMat rational_hnf(const RatMat & rows)
{
    Int den = 1;
    for (const RatVec & v : rows)
        for (const Rat & x : v)
            den = lcm(den, x.get_den());
    IntMat m;
    for (const RatVec & v : rows) {
        IntVec iv;
        for (const Rat & x : v) {
            Rat y = x * den;
            iv.push_back(y.get_num());
        }
        m.push_back(std::move(iv));
    }
    IntMat h = hnf_rows(std::move(m));
    RatMat out;
    for (const IntVec & v : h) {
        RatVec rv;
        for (const Int & x : v)
            rv.push_back(Rat(x, den));
        for (Rat & x : rv)
            x.canonicalize();
        out.push_back(std::move(rv));
    }
    return out;
}

RatMat power_mult_matrix(const Field & F, const RatVec & x)
{
    RatMat m;
    for (int i = 0; i < F.degree(); ++i) {
        RatVec e(F.degree(), Rat(0));
        e[i] = 1;
        m.push_back(F.mul_power(x, e));
    }
    return m;
}

bool power_integral(const Field & F, const RatVec & x)
{
    for (const Rat & c : charpoly(power_mult_matrix(F, x)))
        if (c.get_den() != 1)
            return false;
    return true;
}

Int quad_disc(const Int & D) { return mod(D, 4) == 1 ? D : 4 * D; }

Int squarefree_part(const Int & m)
{
    Int s = 1;
    for (const auto & [p, e] : factor_integer(m))
        if (e % 2 == 1)
            s *= p;
    return m < 0 ? Int(-s) : s;
}

} // namespace

RatVec Field::mul_power(const RatVec & a, const RatVec & b) const
{
    RatVec r(r_, Rat(0));
    if (kind_ == FieldKind::Quadratic) {
        r[0] = a[0] * b[0] + D_ * a[1] * b[1];
        r[1] = a[0] * b[1] + a[1] * b[0];
        return r;
    }
    const Int scales[4] = {Int(1), d_, n_, d_ * n_};
    for (int i = 0; i < 4; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < 4; ++j) {
            if (b[j] == 0)
                continue;
            Term t = biquad_term(i, j);
            Rat c = a[i] * b[j] * scales[t.scale];
            if (t.sign < 0)
                r[t.index] -= c;
            else
                r[t.index] += c;
        }
    }
    return r;
}

void Field::finish()
{
    if (static_cast<int>(basis_.size()) != r_)
        throw std::invalid_argument("integral basis has the wrong number of rows");
    basis_inv_ = inverse(basis_);
    table_.assign(r_, std::vector<IntVec>(r_));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) {
            RatVec c = from_power(mul_power(basis_[i], basis_[j]));
            IntVec iv;
            for (const Rat & x : c) {
                if (x.get_den() != 1)
                    throw std::invalid_argument("basis is not closed under multiplication");
                iv.push_back(x.get_num());
            }
            table_[i][j] = std::move(iv);
        }
    RatVec one(r_, Rat(0));
    one[0] = 1;
    for (const Rat & x : from_power(one))
        if (x.get_den() != 1)
            throw std::invalid_argument("basis does not contain 1");

    // trace form Gram determinant
    RatMat tr(r_, RatVec(r_));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j)
            tr[i][j] = r_ * mul_power(basis_[i], basis_[j])[0];
    Rat dd = det(tr);
    if (dd.get_den() != 1)
        throw std::invalid_argument("basis is not integral");
    disc_ = dd.get_num();

    t2_power_ = RatMat(r_, RatVec(r_, Rat(0)));
    if (kind_ == FieldKind::Quadratic) {
        t2_power_[0][0] = 2;
        t2_power_[1][1] = 2 * abs(D_);
    } else {
        t2_power_[0][0] = 4;
        t2_power_[1][1] = 4 * d_;
        t2_power_[2][2] = 4 * n_;
        t2_power_[3][3] = 4 * d_ * n_;
    }
    t2_ = mat_mul(mat_mul(basis_, t2_power_), transpose(basis_));
}

FieldPtr Field::quadratic(const Int & D)
{
    if (D == 0 || D == 1 || !is_squarefree(D))
        throw std::invalid_argument("quadratic field needs squarefree D != 0, 1; got " + D.get_str());
    auto F = std::shared_ptr<Field>(new Field());
    F->kind_ = FieldKind::Quadratic;
    F->r_ = 2;
    F->D_ = D;
    if (mod(D, 4) == 1)
        F->basis_ = {{Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}};
    else
        F->basis_ = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    F->finish();
    return F;
}

FieldPtr Field::biquadratic(const Int & d, const Int & n, const std::optional<RatMat> & basis)
{
    if (d <= 0 || n <= 0 || d == n || !is_squarefree(d) || !is_squarefree(n))
        throw std::invalid_argument("biquadratic field needs distinct positive squarefree d, n");
    auto F = std::shared_ptr<Field>(new Field());
    F->kind_ = FieldKind::Biquadratic;
    F->r_ = 4;
    F->d_ = d;
    F->n_ = n;
    F->D_ = d * n;

    const Int g = gcd(d, n);
    const Int m = d * n / (g * g);
    const Int target = quad_disc(-d) * quad_disc(-n) * quad_disc(squarefree_part(m));

    const bool marcus = mod(d, 4) == 3 && (mod(n, 4) == 1 || mod(n, 4) == 2) && g == 1;
    if (basis) {
        F->basis_ = *basis;
    } else if (marcus) {
        F->basis_ = {{Rat(1), Rat(0), Rat(0), Rat(0)},
                     {Rat(1, 2), Rat(1, 2), Rat(0), Rat(0)},
                     {Rat(0), Rat(0), Rat(1), Rat(0)},
                     {Rat(0), Rat(0), Rat(1, 2), Rat(1, 2)}};
        F->native_basis_ = true;
    } else {
        // Start from the compositum of the three quadratic rings of integers
        // and saturate at primes dividing the index.
        auto gen = [&](const Int & D, int slot, const Rat & scale) {
            RatVec v(4, Rat(0));
            if (mod(D, 4) == 1) {
                v[0] = Rat(1, 2);
                v[slot] = scale / 2;
            } else {
                v[slot] = scale;
            }
            return v;
        };
        Int msf = squarefree_part(m);
        Int k;
        mpz_sqrt(k.get_mpz_t(), Int(m / msf).get_mpz_t());
        std::vector<RatVec> gens = {gen(-d, 1, Rat(1)), gen(-n, 2, Rat(1)), gen(msf, 3, Rat(1) / (g * k))};
        RatMat span;
        for (int mask = 0; mask < 8; ++mask) {
            RatVec x(4, Rat(0));
            x[0] = 1;
            for (int b = 0; b < 3; ++b)
                if (mask & (1 << b))
                    x = F->mul_power(x, gens[b]);
            span.push_back(x);
        }
        RatMat R = rational_hnf(span);
        for (;;) {
            RatMat tr(4, RatVec(4));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    tr[i][j] = 4 * F->mul_power(R[i], R[j])[0];
            Rat ratio = det(tr) / target;
            Int idx;
            if (ratio.get_den() != 1 || !is_square(ratio.get_num(), &idx))
                throw std::logic_error("integral basis saturation: non-square index");
            if (idx == 1)
                break;
            bool grew = false;
            for (const auto & [q, e] : factor_integer(idx)) {
                (void)e;
                const long qq = q.get_si();
                long total = 1;
                for (int i = 0; i < 4; ++i)
                    total *= qq;
                for (long code = 1; code < total && !grew; ++code) {
                    RatVec x(4, Rat(0));
                    long c = code;
                    for (int i = 0; i < 4; ++i) {
                        long ci = c % qq;
                        c /= qq;
                        for (int j = 0; j < 4; ++j)
                            x[j] += Rat(ci, qq) * R[i][j];
                    }
                    for (Rat & t : x)
                        t.canonicalize();
                    if (!power_integral(*F, x))
                        continue;
                    RatMat rows = R;
                    RatVec xp = x;
                    for (int p = 1; p < 4; ++p) {
                        for (const RatVec & b : R)
                            rows.push_back(F->mul_power(xp, b));
                        xp = F->mul_power(xp, x);
                    }
                    R = rational_hnf(rows);
                    grew = true;
                }
                if (grew)
                    break;
            }
            if (!grew)
                throw std::logic_error("integral basis saturation stalled");
        }
        F->basis_ = R;
    }
    F->finish();
    if (F->disc_ != target)
        throw std::invalid_argument("supplied basis is not the full ring of integers (disc " + F->disc_.get_str() +
                                    " != " + target.get_str() + ")");
    return F;
}

std::string Field::power_name(int i) const
{
    if (i == 0)
        return "1";
    if (kind_ == FieldKind::Quadratic)
        return "sqrt(" + D_.get_str() + ")";
    const std::string u = "sqrt(-" + d_.get_str() + ")", v = "sqrt(-" + n_.get_str() + ")";
    if (i == 1)
        return u;
    if (i == 2)
        return v;
    return u + "*" + v;
}

std::string Field::name() const
{
    if (kind_ == FieldKind::Quadratic)
        return "Q(sqrt(" + D_.get_str() + "))";
    return "Q(sqrt(-" + d_.get_str() + "), sqrt(-" + n_.get_str() + "))";
}

bool Field::operator==(const Field & o) const
{
    return kind_ == o.kind_ && D_ == o.D_ && d_ == o.d_ && n_ == o.n_ && basis_ == o.basis_;
}

// ------------------------------------------------------------------ Elem

namespace {
void same_field(const Elem & a, const Elem & b)
{
    if (!a.field() || !b.field() || !(a.field() == b.field() || *a.field() == *b.field()))
        throw std::invalid_argument("elements of different fields");
}
} // namespace

Elem::Elem(FieldPtr F, RatVec coords) : F_(std::move(F)), c_(std::move(coords))
{
    if (static_cast<int>(c_.size()) != F_->degree())
        throw std::invalid_argument("coordinate vector of the wrong length");
}

Elem Elem::zero(FieldPtr F)
{
    int r = F->degree();
    return Elem(std::move(F), RatVec(r, Rat(0)));
}

Elem Elem::one(FieldPtr F) { return integer(std::move(F), 1); }

Elem Elem::integer(FieldPtr F, const Rat & a)
{
    RatVec p(F->degree(), Rat(0));
    p[0] = a;
    return from_power(std::move(F), p);
}

Elem Elem::from_power(FieldPtr F, const RatVec & p)
{
    RatVec c = F->from_power(p);
    return Elem(std::move(F), std::move(c));
}

Elem Elem::basis(FieldPtr F, int i)
{
    RatVec c(F->degree(), Rat(0));
    c[i] = 1;
    return Elem(std::move(F), std::move(c));
}

bool Elem::is_zero() const
{
    for (const Rat & x : c_)
        if (x != 0)
            return false;
    return true;
}

bool Elem::is_integral() const
{
    for (const Rat & x : c_)
        if (x.get_den() != 1)
            return false;
    return true;
}

Elem operator+(const Elem & a, const Elem & b)
{
    same_field(a, b);
    RatVec r = a.c_;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b.c_[i];
    return Elem(a.F_, std::move(r));
}

Elem operator-(const Elem & a, const Elem & b)
{
    same_field(a, b);
    RatVec r = a.c_;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b.c_[i];
    return Elem(a.F_, std::move(r));
}

Elem operator-(const Elem & a)
{
    RatVec r = a.c_;
    for (Rat & x : r)
        x = -x;
    return Elem(a.F_, std::move(r));
}

RatVec mul_coords(const Field & F, const RatVec & a, const RatVec & b)
{
    const int r = F.degree();
    RatVec out(r, Rat(0));
    for (int i = 0; i < r; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < r; ++j) {
            if (b[j] == 0)
                continue;
            Rat s = a[i] * b[j];
            const IntVec & t = F.table(i, j);
            for (int k = 0; k < r; ++k)
                if (t[k] != 0)
                    out[k] += s * t[k];
        }
    }
    return out;
}

Elem operator*(const Elem & a, const Elem & b)
{
    same_field(a, b);
    return Elem(a.F_, mul_coords(*a.F_, a.c_, b.c_));
}

Elem operator*(const Rat & s, const Elem & a)
{
    RatVec r = a.c_;
    for (Rat & x : r)
        x *= s;
    return Elem(a.F_, std::move(r));
}

bool operator==(const Elem & a, const Elem & b)
{
    same_field(a, b);
    return a.c_ == b.c_;
}

RatMat Elem::mult_matrix() const
{
    const int r = F_->degree();
    RatMat m(r, RatVec(r, Rat(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (c_[j] == 0)
                continue;
            const IntVec & t = F_->table(j, i);
            for (int k = 0; k < r; ++k)
                if (t[k] != 0)
                    m[i][k] += c_[j] * t[k];
        }
    return m;
}

Elem Elem::inverse() const
{
    if (is_zero())
        throw std::invalid_argument("inverse of zero");
    // x * y = 1  <=>  y * M_x = coords(1)
    RatMat inv = rcf::inverse(mult_matrix());
    RatVec one = F_->from_power([&] {
        RatVec p(F_->degree(), Rat(0));
        p[0] = 1;
        return p;
    }());
    return Elem(F_, vec_mat(one, inv));
}

Elem operator/(const Elem & a, const Elem & b) { return a * b.inverse(); }

Elem Elem::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Elem r = one(F_), b = *this;
    while (e) {
        if (e & 1)
            r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Rat Elem::norm() const { return det(mult_matrix()); }

Rat Elem::trace() const
{
    RatMat m = mult_matrix();
    Rat t = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        t += m[i][i];
    return t;
}

RatVec Elem::charpoly() const { return rcf::charpoly(mult_matrix()); }

Rat Elem::t2() const
{
    const RatMat & g = F_->t2();
    Rat s = 0;
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_.size(); ++j)
            s += c_[i] * g[i][j] * c_[j];
    return s;
}

std::string Elem::to_string() const
{
    RatVec p = power();
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < F_->degree(); ++i) {
        if (p[i] == 0)
            continue;
        Rat a = p[i];
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        Rat mag = a < 0 ? Rat(-a) : a;
        if (i == 0)
            os << mag.get_str();
        else if (mag == 1)
            os << F_->power_name(i);
        else
            os << mag.get_str() << "*" << F_->power_name(i);
        first = false;
    }
    return first ? "0" : os.str();
}

RatVec charpoly(const RatMat & a)
{
    const std::size_t n = a.size();
    RatVec c(n + 1, Rat(0));
    c[n] = 1;
    RatMat m(n, RatVec(n, Rat(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        RatMat am = mat_mul(a, m);
        for (std::size_t i = 0; i < n; ++i)
            am[i][i] += c[n - k + 1];
        m = std::move(am);
        RatMat t = mat_mul(a, m);
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += t[i][i];
        c[n - k] = -tr / Rat(static_cast<long>(k));
    }
    return c;
}

} // namespace rcf
