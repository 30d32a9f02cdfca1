#include "rcf/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rcf/pell.hpp"

namespace rcf {

// --------------------------------------------------------------- IntModule

IntModule::IntModule(FieldPtr F, IntMat rows, Int den) : F_(std::move(F)), den_(std::move(den))
{
    if (den_ == 0)
        throw std::invalid_argument("module denominator is zero");
    if (den_ < 0) {
        den_ = -den_;
        for (IntVec & v : rows)
            for (Int & x : v)
                x = -x;
    }
    for (const IntVec & v : rows)
        if (static_cast<int>(v.size()) != F_->degree())
            throw std::invalid_argument("module row of the wrong length");
    H_ = hnf_rows(std::move(rows));
    Int g = den_;
    for (const IntVec & v : H_)
        for (const Int & x : v)
            g = gcd(g, x);
    if (g > 1) {
        den_ /= g;
        for (IntVec & v : H_)
            for (Int & x : v)
                x /= g;
    }
}

IntModule IntModule::from_rows(FieldPtr F, const RatMat & rows)
{
    Int den = 1;
    for (const RatVec & v : rows)
        for (const Rat & x : v)
            den = lcm(den, x.get_den());
    IntMat m;
    m.reserve(rows.size());
    for (const RatVec & v : rows) {
        IntVec iv;
        iv.reserve(v.size());
        for (const Rat & x : v) {
            Rat y = x * den;
            iv.push_back(y.get_num());
        }
        m.push_back(std::move(iv));
    }
    return IntModule(std::move(F), std::move(m), den);
}

IntModule IntModule::from_elems(FieldPtr F, const std::vector<Elem> & gens)
{
    RatMat rows;
    for (const Elem & e : gens)
        rows.push_back(e.coords());
    return from_rows(std::move(F), rows);
}

IntModule IntModule::maximal(FieldPtr F)
{
    const int r = F->degree();
    return IntModule(std::move(F), identity_int(r), 1);
}

RatMat IntModule::rational_basis() const
{
    RatMat out;
    for (const IntVec & v : H_) {
        RatVec rv;
        for (const Int & x : v) {
            Rat q(x, den_);
            q.canonicalize();
            rv.push_back(q);
        }
        out.push_back(std::move(rv));
    }
    return out;
}

std::vector<Elem> IntModule::basis_elems() const
{
    std::vector<Elem> out;
    for (RatVec & v : rational_basis())
        out.emplace_back(F_, std::move(v));
    return out;
}

Rat IntModule::covolume() const
{
    Int d = 1;
    for (std::size_t i = 0; i < H_.size(); ++i)
        d *= H_[i][i];
    Int dr = 1;
    for (int i = 0; i < rank(); ++i)
        dr *= den_;
    Rat q(d, dr);
    q.canonicalize();
    return q;
}

bool IntModule::contains(const RatVec & coords) const
{
    const int r = rank();
    RatVec y = coords;
    for (Rat & x : y)
        x *= den_;
    for (int i = r - 1; i >= 0; --i) {
        Rat t = y[i] / H_[i][i];
        if (t.get_den() != 1)
            return false;
        if (t == 0)
            continue;
        for (int j = 0; j <= i; ++j)
            y[j] -= t * H_[i][j];
    }
    return true;
}

bool IntModule::contains(const IntModule & m) const
{
    for (const RatVec & v : m.rational_basis())
        if (!contains(v))
            return false;
    return true;
}

IntModule IntModule::scaled(const Rat & s) const
{
    RatMat rows = rational_basis();
    for (RatVec & v : rows)
        for (Rat & x : v)
            x *= s;
    return from_rows(F_, rows);
}

std::string IntModule::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < H_.size(); ++i) {
        os << (i ? ", " : "") << "[";
        for (std::size_t j = 0; j < H_[i].size(); ++j)
            os << (j ? ", " : "") << H_[i][j].get_str();
        os << "]";
    }
    os << "]";
    if (den_ != 1)
        os << "/" << den_.get_str();
    return os.str();
}

bool operator==(const IntModule & a, const IntModule & b)
{
    return a.den_ == b.den_ && a.H_ == b.H_ && *a.F_ == *b.F_;
}

IntModule hnf(FieldPtr F, const std::vector<IntVec> & rows) { return IntModule(std::move(F), rows, 1); }

IntModule module_sum(const IntModule & a, const IntModule & b)
{
    RatMat rows = a.rational_basis();
    for (RatVec & v : b.rational_basis())
        rows.push_back(std::move(v));
    return IntModule::from_rows(a.field(), rows);
}

IntModule module_product(const IntModule & a, const IntModule & b)
{
    const Field & F = *a.field();
    IntMat rows;
    for (const IntVec & u : a.hnf())
        for (const IntVec & v : b.hnf()) {
            RatVec p = mul_coords(F, to_rat(u), to_rat(v));
            IntVec iv;
            for (const Rat & x : p)
                iv.push_back(x.get_num());
            rows.push_back(std::move(iv));
        }
    return IntModule(a.field(), std::move(rows), a.den() * b.den());
}

IntModule module_times(const IntModule & a, const Elem & x)
{
    RatMat rows;
    for (const RatVec & v : a.rational_basis())
        rows.push_back(mul_coords(*a.field(), v, x.coords()));
    return IntModule::from_rows(a.field(), rows);
}

namespace {
IntModule dual(const IntModule & m) { return IntModule::from_rows(m.field(), transpose(inverse(m.rational_basis()))); }
} // namespace

IntModule module_intersect(const IntModule & a, const IntModule & b) { return dual(module_sum(dual(a), dual(b))); }

IntModule module_colon(const IntModule & a, const IntModule & b)
{
    std::optional<IntModule> acc;
    for (const Elem & bj : b.basis_elems()) {
        IntModule t = module_times(a, bj.inverse());
        acc = acc ? module_intersect(*acc, t) : t;
    }
    return *acc;
}

// ------------------------------------------------------------------ forms

Rat GramForm::eval(const RatVec & v) const
{
    Rat s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0)
                s += v[i] * g[i][j] * v[j];
    }
    return s;
}

GramForm t2_form(const FieldPtr & F) { return GramForm{F->t2()}; }

bool is_positive_definite(const RatMat & g)
{
    for (std::size_t k = 1; k <= g.size(); ++k) {
        RatMat m(k, RatVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m[i][j] = g[i][j];
        if (det(m) <= 0)
            return false;
    }
    return true;
}

namespace {

RatMat gram_of(const RatMat & b, const RatMat & G)
{
    RatMat bg = mat_mul(b, G);
    return mat_mul(bg, transpose(b));
}

Int round_rat(const Rat & x) { return rat_floor(x + Rat(1, 2)); }

} // namespace

RatMat lll_basis(RatMat b, const RatMat & G)
{
    if (!is_positive_definite(G))
        throw std::invalid_argument("lll: form is not positive definite");
    const std::size_t n = b.size();
    if (n <= 1)
        return b;
    RatMat mu(n, RatVec(n, Rat(0)));
    RatVec B(n);
    auto gso = [&] {
        RatMat A = gram_of(b, G);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                Rat s = A[i][j];
                for (std::size_t k = 0; k < j; ++k)
                    s -= mu[j][k] * mu[i][k] * B[k];
                mu[i][j] = s / B[j];
            }
            Rat s = A[i][i];
            for (std::size_t k = 0; k < i; ++k)
                s -= mu[i][k] * mu[i][k] * B[k];
            B[i] = s;
        }
    };
    gso();
    const Rat delta(3, 4);
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t j = k; j-- > 0;) {
            Int q = round_rat(mu[k][j]);
            if (q == 0)
                continue;
            for (std::size_t c = 0; c < b[k].size(); ++c)
                b[k][c] -= q * b[j][c];
            for (std::size_t l = 0; l < j; ++l)
                mu[k][l] -= q * mu[j][l];
            mu[k][j] -= q;
        }
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gso();
            k = std::max<std::size_t>(1, k - 1);
        }
    }
    return b;
}

RatMat lll_reduce(const IntModule & m, const GramForm & g) { return lll_basis(m.rational_basis(), g.g); }

namespace {

// Fincke-Pohst on a reduced basis; emits integer coefficient vectors.
void fincke_pohst(const RatMat & A, const Rat & bound, const std::function<void(const IntVec &)> & emit)
{
    const std::size_t n = A.size();
    RatMat q(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        Rat s = A[i][i];
        for (std::size_t k = 0; k < i; ++k)
            s -= q[k][k] * q[k][i] * q[k][i];
        q[i][i] = s;
        for (std::size_t j = i + 1; j < n; ++j) {
            Rat t = A[i][j];
            for (std::size_t k = 0; k < i; ++k)
                t -= q[k][k] * q[k][i] * q[k][j];
            q[i][j] = t / q[i][i];
        }
    }
    IntVec x(n, Int(0));
    std::function<void(std::size_t, const Rat &)> rec = [&](std::size_t i, const Rat & rem) {
        Rat c = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            c -= q[i][j] * x[j];
        auto attempt = [&](const Int & v) {
            Rat t = v - c;
            Rat used = q[i][i] * t * t;
            if (used > rem)
                return false;
            x[i] = v;
            if (i == 0)
                emit(x);
            else
                rec(i - 1, rem - used);
            return true;
        };
        Int m0 = round_rat(c);
        if (!attempt(m0))
            return;
        for (Int v = m0 + 1; attempt(v); ++v) {
        }
        for (Int v = m0 - 1; attempt(v); --v) {
        }
    };
    rec(n - 1, bound);
}

void normalize_sign(RatVec & v)
{
    for (std::size_t i = v.size(); i-- > 0;) {
        if (v[i] == 0)
            continue;
        if (v[i] < 0)
            for (Rat & x : v)
                x = -x;
        return;
    }
}

std::vector<RatVec> enumerate_basis(const RatMat & basis, const RatMat & G, const Rat & bound)
{
    std::vector<RatVec> out;
    if (bound <= 0)
        return out;
    RatMat red = lll_basis(basis, G);
    RatMat A = gram_of(red, G);
    std::set<RatVec> seen;
    fincke_pohst(A, bound, [&](const IntVec & x) {
        bool zero = true;
        for (const Int & c : x)
            if (c != 0)
                zero = false;
        if (zero)
            return;
        RatVec v(red[0].size(), Rat(0));
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0)
                for (std::size_t j = 0; j < v.size(); ++j)
                    v[j] += x[i] * red[i][j];
        normalize_sign(v);
        seen.insert(std::move(v));
    });
    out.assign(seen.begin(), seen.end());
    return out;
}

} // namespace

std::vector<RatVec> enumerate_by_t2(const IntModule & m, const GramForm & g, const Rat & bound)
{
    std::vector<RatVec> v = enumerate_basis(m.rational_basis(), g.g, bound);
    std::vector<std::pair<Rat, RatVec>> keyed;
    for (RatVec & x : v) {
        Rat val = g.eval(x);
        keyed.emplace_back(val, std::move(x));
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<RatVec> out;
    for (auto & [val, x] : keyed)
        out.push_back(std::move(x));
    return out;
}

// ------------------------------------------------------------------ QSqrt

int QSqrt::sign() const
{
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sb;
    Rat a2 = a * a, b2 = b * b * D;
    return a2 > b2 ? sa : sb;
}

QSqrt operator+(const QSqrt & x, const QSqrt & y) { return {x.a + y.a, x.b + y.b, x.D}; }
QSqrt operator-(const QSqrt & x, const QSqrt & y) { return {x.a - y.a, x.b - y.b, x.D}; }
QSqrt operator*(const QSqrt & x, const QSqrt & y)
{
    return {x.a * y.a + x.b * y.b * x.D, x.a * y.b + x.b * y.a, x.D};
}
QSqrt operator/(const QSqrt & x, const QSqrt & y)
{
    Rat nrm = y.a * y.a - y.b * y.b * y.D;
    if (nrm == 0)
        throw std::invalid_argument("QSqrt division by zero");
    QSqrt c{y.a, -y.b, y.D};
    QSqrt p = x * c;
    return {p.a / nrm, p.b / nrm, x.D};
}
double QSqrt::approx() const { return a.get_d() + b.get_d() * std::sqrt(D.get_d()); }

QSqrt embedding_abs2(const Field & F, const RatVec & p, int which)
{
    if (F.kind() != FieldKind::Biquadratic)
        throw std::invalid_argument("embedding_abs2 needs a biquadratic field");
    const Int dn = F.d() * F.n();
    Rat base = p[0] * p[0] + F.d() * p[1] * p[1] + F.n() * p[2] * p[2] + dn * p[3] * p[3];
    Rat cross = 2 * (p[1] * p[2] - p[0] * p[3]);
    return {base, which == 1 ? cross : Rat(-cross), dn};
}

// --------------------------------------------------------- generator search

UnitGrid unit_grid(const FieldPtr & F, const IntModule & order)
{
    if (F->kind() != FieldKind::Biquadratic)
        throw unsupported("unit grid requires a CM biquadratic field");
    const Int dn = F->d() * F->n();
    PellSolution pu = pell_unit(dn);
    UnitGrid g;
    g.unit = Elem::from_power(F, {Rat(pu.x), Rat(0), Rat(0), Rat(pu.y)});
    g.lambda = {Rat(pu.x), Rat(pu.y), dn};
    for (int i = 0; !order.contains(g.unit); ++i) {
        if (i > 64)
            throw unresolved("no power of the real unit lies in the order");
        g.unit = g.unit * g.unit;
        g.lambda = g.lambda * g.lambda;
    }
    // Number of doublings needed so that the weights reach lambda / 2.
    const long K = static_cast<long>(mpz_sizeinbase(rat_ceil(g.lambda.a).get_mpz_t(), 2)) + 2;
    const unsigned long prec = static_cast<unsigned long>(K + 40);
    Int s_scaled = isqrt(Int(dn << (2 * prec)));
    Rat s_approx(s_scaled, Int(1) << prec);
    s_approx.canonicalize();

    std::vector<std::pair<QSqrt, Rat>> ws; // (c, r); r == 0 encodes c == 1
    ws.push_back({QSqrt{Rat(1), Rat(0), dn}, Rat(0)});
    for (long k = 1; k <= K; ++k) {
        Int T = Int(1) << k;
        Rat r = s_approx * Rat(T + 1) / Rat(T - 1);
        while (r * r <= dn)
            r += Rat(1, Int(1) << prec);
        QSqrt c = QSqrt{r, Rat(1), dn} / QSqrt{r, Rat(-1), dn};
        ws.push_back({c, r});
        QSqrt ci = QSqrt{Rat(1), Rat(0), dn} / c;
        ws.push_back({ci, Rat(-r)});
    }
    std::sort(ws.begin(), ws.end(), [](const auto & x, const auto & y) { return x.first < y.first; });

    const QSqrt two{Rat(2), Rat(0), dn}, four{Rat(4), Rat(0), dn};
    for (std::size_t i = 1; i < ws.size(); ++i)
        if (!(ws[i].first <= ws[i - 1].first * four))
            throw std::logic_error("unit grid: weight ratio exceeds 4");
    if (!(g.lambda <= ws.back().first * two) || !(ws.front().first * g.lambda <= two))
        throw std::logic_error("unit grid: weights do not cover the unit range");

    const Rat scale[4] = {Rat(1), Rat(F->d()), Rat(F->n()), Rat(dn)};
    for (const auto & [c, r] : ws) {
        Rat alpha = 2, beta = 0;
        if (r != 0) {
            Rat den = r * r - dn;
            alpha = 2 * (r * r + dn) / den;
            beta = 4 * r * dn / den;
        }
        RatMat G(4, RatVec(4, Rat(0)));
        for (int i = 0; i < 4; ++i)
            G[i][i] = alpha * scale[i];
        G[1][2] = G[2][1] = beta;
        G[0][3] = G[3][0] = -beta;
        g.weights.push_back(c);
        g.forms.push_back(mat_mul(mat_mul(F->basis(), G), transpose(F->basis())));
    }
    return g;
}

namespace {

struct Search {
    std::vector<Elem> found;
    std::size_t forms = 0;
    std::string ball;
};

Search search_norm(const IntModule & m, const IntModule & order, const Int & N)
{
    const FieldPtr & F = m.field();
    Search s;
    std::set<RatVec> seen;
    auto consider = [&](const RatVec & v) {
        if (seen.count(v))
            return;
        Elem x(F, v);
        Rat nv = x.norm();
        if (nv < 0)
            nv = -nv;
        if (nv == N) {
            seen.insert(v);
            s.found.push_back(std::move(x));
        }
    };
    if (F->kind() == FieldKind::Quadratic) {
        if (F->D() > 0)
            throw unsupported("generator search in a real quadratic field (infinite unit group)");
        Rat bound = 2 * Rat(N);
        s.forms = 1;
        s.ball = "T2 <= " + bound.get_str();
        for (const RatVec & v : enumerate_basis(m.rational_basis(), F->t2(), bound))
            consider(v);
        return s;
    }
    UnitGrid g = unit_grid(F, order);
    Int root = isqrt(N);
    if (root * root < N)
        root += 1;
    Rat bound = Rat(5, 2) * root;
    s.forms = g.forms.size();
    s.ball = std::to_string(g.forms.size()) + " weighted forms, bound " + bound.get_str();
    for (const RatMat & G : g.forms)
        for (const RatVec & v : enumerate_basis(m.rational_basis(), G, bound))
            consider(v);
    return s;
}

bool t2_less(const Elem & a, const Elem & b)
{
    Rat ta = a.t2(), tb = b.t2();
    if (ta != tb)
        return ta < tb;
    return a.coords() < b.coords();
}

} // namespace

GeneratorSearch find_generator(const IntModule & ideal, const IntModule & order)
{
    Rat idx = ideal.covolume() / order.covolume();
    if (idx.get_den() != 1)
        throw std::invalid_argument("find_generator: ideal is not integral in the order");
    GeneratorSearch out;
    out.norm = idx.get_num();
    Search s = search_norm(ideal, order, out.norm);
    out.forms = s.forms;
    out.ball = s.ball;
    out.candidates = s.found.size();
    if (s.found.empty())
        return out;
    Elem best = *std::min_element(s.found.begin(), s.found.end(), t2_less);
    if (module_times(order, best) != ideal)
        throw std::logic_error("find_generator: candidate does not generate the ideal");
    out.generator = best;
    return out;
}

std::vector<Elem> elements_of_norm(const IntModule & m, const IntModule & order, const Int & target)
{
    Search s = search_norm(m, order, target);
    std::sort(s.found.begin(), s.found.end(), t2_less);
    return s.found;
}

} // namespace rcf
