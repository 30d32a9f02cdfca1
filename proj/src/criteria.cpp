#include "rcf/criteria.hpp"

#include "rcf/pell.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace rcf {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Solvable:
        return "solvable";
    case Verdict::Unsolvable:
        return "unsolvable";
    default:
        return "unknown";
    }
}

namespace {

bool rat_square(const Rat & r, Rat * root)
{
    if (r < 0)
        return false;
    Int a, b;
    if (!is_square(r.get_num(), &a) || !is_square(r.get_den(), &b))
        return false;
    *root = Rat(a, b);
    return true;
}

// O_F element p divides the rational integer m.
bool divides_int(const QuadElem & p, const Int & m) { return p.divides(QuadElem(p.field(), Rat(m))); }

QuadElem qe(const QuadField & F, long a) { return QuadElem(F, Rat(a)); }

// Determinant over F by Gaussian elimination.
QuadElem det(std::vector<std::vector<QuadElem>> m, const QuadField & F)
{
    const std::size_t n = m.size();
    QuadElem r = qe(F, 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero())
            ++piv;
        if (piv == n)
            return qe(F, 0);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            r = -r;
        }
        r = r * m[c][c];
        QuadElem inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero())
                continue;
            QuadElem f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j)
                m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return r;
}

QuadElem quadpoly_disc(const QuadPoly & g, const QuadField & F)
{
    const std::size_t m = g.size() - 1;
    if (m < 1)
        throw std::invalid_argument("discriminant of a constant polynomial");
    if (m == 1)
        return qe(F, 1);
    QuadPoly dg;
    for (std::size_t i = 1; i <= m; ++i)
        dg.push_back(QuadElem(F, Rat(long(i))) * g[i]);
    // Sylvester matrix of g (degree m) and g' (degree m - 1), size 2m - 1.
    const std::size_t N = 2 * m - 1;
    std::vector<std::vector<QuadElem>> S(N, std::vector<QuadElem>(N, qe(F, 0)));
    for (std::size_t r = 0; r < m - 1; ++r)
        for (std::size_t k = 0; k <= m; ++k)
            S[r][r + k] = g[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k < m; ++k)
            S[m - 1 + r][r + k] = dg[m - 1 - k];
    QuadElem res = det(S, F);
    QuadElem d = res / g[m];
    if ((m * (m - 1) / 2) % 2 == 1)
        d = -d;
    return d;
}

QuadElem normalize_sign(const QuadElem & x)
{
    RatVec c = x.coords();
    if (c[0] < 0 || (c[0] == 0 && c[1] < 0))
        return -x;
    return x;
}

NormMapCondition cached_norm_map(const Int & d, const Int & n)
{
    static std::mutex mu;
    static std::map<std::pair<Int, Int>, NormMapCondition> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({d, n});
        if (it != cache.end())
            return it->second;
    }
    NormMapCondition c = norm_map_condition(d, n);
    std::lock_guard<std::mutex> lock(mu);
    cache[{d, n}] = c;
    return c;
}

std::optional<UnitWitness> cached_witness(const Int & d, const Int & n)
{
    static std::mutex mu;
    static std::map<std::pair<Int, Int>, std::optional<UnitWitness>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({d, n});
        if (it != cache.end())
            return it->second;
    }
    auto w = unit_witness(d, n);
    std::lock_guard<std::mutex> lock(mu);
    cache[{d, n}] = w;
    return w;
}

Int cached_relative_picard(const Int & d, const Int & n)
{
    static std::mutex mu;
    static std::map<std::pair<Int, Int>, Int> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({d, n});
        if (it != cache.end())
            return it->second;
    }
    Int h = picard_number(Order::relative(d, n));
    std::lock_guard<std::mutex> lock(mu);
    cache[{d, n}] = h;
    return h;
}

struct RelativeSetup {
    FieldPtr E;
    Order O, OE;
    std::vector<Elem> coset_reps;
};

const RelativeSetup & relative_setup(const Int & d, const Int & n)
{
    static std::mutex mu;
    static std::map<std::pair<Int, Int>, RelativeSetup> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({d, n});
    if (it != cache.end())
        return it->second;
    RelativeSetup s;
    s.E = integral_basis(d, n);
    s.O = Order::relative(s.E);
    s.OE = Order::maximal(s.E);
    s.coset_reps = unit_coset_reps(s.O);
    return cache.emplace(std::make_pair(d, n), std::move(s)).first->second;
}

void check_dn(const Int & d, const Int & n)
{
    if (d <= 0 || n <= 0 || !is_squarefree(d) || !is_squarefree(n) || d == n)
        throw std::invalid_argument("d and n must be distinct positive squarefree integers");
}

Hypothesis hyp(std::string name, bool pass, std::string detail = "")
{
    return Hypothesis{std::move(name), pass, std::move(detail)};
}

void finalize(CriterionReport & r)
{
    r.applicable = true;
    for (const Hypothesis & h : r.hypotheses)
        if (!h.pass)
            r.applicable = false;
}

} // namespace

// ------------------------------------------------------------- Z level

std::optional<std::pair<Int, Int>> cornacchia(const Int & p, const Int & n)
{
    if (n <= 0)
        throw std::invalid_argument("cornacchia: n must be positive");
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("cornacchia: p must be an odd prime");
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()))
        throw std::invalid_argument("cornacchia: p divides n");
    auto r = sqrt_mod(mod(Int(-n), p), p);
    if (!r)
        return std::nullopt;
    for (Int r0 : {*r, Int(p - *r)}) {
        Int a = p, b = r0;
        while (b * b >= p) {
            Int t = a % b;
            a = b;
            b = t;
        }
        Int rem = p - b * b;
        if (!mpz_divisible_p(rem.get_mpz_t(), n.get_mpz_t()))
            continue;
        Int y;
        if (is_square(Int(rem / n), &y) && b > 0)
            return std::make_pair(b, y);
    }
    return std::nullopt;
}

CriterionReport cox_criterion(const Int & p, const Int & n, const IntPoly & f_n, bool cross_check)
{
    CriterionReport r;
    r.theorem_id = "cox";
    bool odd_prime = p != 2 && p > 0 && is_prime(p);
    r.hypotheses.push_back(hyp("p odd prime", odd_prime, p.get_str()));
    bool coprime = odd_prime && !mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t());
    r.hypotheses.push_back(hyp("p does not divide n", coprime));
    Int disc = f_n.degree() >= 1 ? poly_discriminant(f_n) : Int(0);
    bool disc_ok = odd_prime && !mpz_divisible_p(disc.get_mpz_t(), p.get_mpz_t());
    r.hypotheses.push_back(hyp("p does not divide disc(f_n)", disc_ok, "disc = " + disc.get_str()));
    finalize(r);
    if (!r.applicable)
        return r;
    bool residue = jacobi(mod(Int(-n), p), p) == 1;
    bool root = !poly_roots_mod(f_n, p).empty();
    r.verdict = residue && root ? Verdict::Solvable : Verdict::Unsolvable;
    if (cross_check) {
        auto xy = cornacchia(p, n);
        r.cross_check = xy.has_value() == (r.verdict == Verdict::Solvable);
        if (xy) {
            QuadField Q(Int(-1));
            r.representation = std::make_pair(QuadElem(Q, Rat(xy->first)), QuadElem(Q, Rat(xy->second)));
        }
    }
    return r;
}

// ------------------------------------------------------------- O_F level

std::optional<QuadElem> sqrt_in_field(const QuadElem & t)
{
    const QuadField & F = t.field();
    const Int & D = F.D();
    if (t.is_zero())
        return t;
    Rat a = t.a(), b = t.b();
    Rat N = a * a - Rat(D) * b * b;
    Rat s;
    if (!rat_square(abs(N), &s) || N < 0)
        return std::nullopt;
    for (const Rat & nx : {s, Rat(-s)}) {
        Rat u2 = (a + nx) / 2, v2 = (a - nx) / (2 * Rat(D));
        Rat u, v;
        if (!rat_square(u2, &u) || !rat_square(v2, &v))
            continue;
        for (int su : {1, -1})
            for (int sv : {1, -1}) {
                QuadElem x(F, Rat(su) * u, Rat(sv) * v);
                if (x * x == t && x.is_integral())
                    return normalize_sign(x);
            }
    }
    return std::nullopt;
}

bool verify_identity(const QuadElem & p, const QuadElem & x, const QuadElem & y, const Int & n)
{
    return p == x * x + QuadElem(p.field(), Rat(n)) * y * y;
}

std::optional<UnitWitness> unit_witness(const Int & d, const Int & n, const Int & y_max)
{
    check_dn(d, n);
    if (d <= 3)
        throw precondition_violation("unit_witness needs d > 3");
    QuadField F(Int(-d));
    const QuadElem minus_one = qe(F, -1);
    auto accept = [&](QuadElem a, QuadElem b, const char * how) -> std::optional<UnitWitness> {
        if (a.is_integral() && b.is_integral() && verify_identity(minus_one, a, b, n))
            return UnitWitness{a, b, how};
        return std::nullopt;
    };
    const Int D = d * n;
    // x^2 - dn y^2 = -1: alpha = x, beta = y sqrt(-d).
    PellSolution neg = pell_solve(D, Int(-1), y_max);
    if (neg.found())
        if (auto w = accept(QuadElem(F, Rat(neg.x)), QuadElem(F, Rat(0), Rat(neg.y)), "pell -1"))
            return w;
    // x^2 - dn y^2 = 1 with x + 1 = 2 d u^2: d u^2 - n v^2 = 1.
    PellSolution pos = pell_solve(D, Int(1), y_max);
    if (pos.found()) {
        for (const Int & xs : {Int(pos.x + 1), Int(pos.x - 1)}) {
            if (!mpz_divisible_p(xs.get_mpz_t(), Int(2 * d).get_mpz_t()))
                continue;
            Int u;
            if (!is_square(Int(xs / (2 * d)), &u) || u == 0)
                continue;
            Rat v = Rat(pos.y) / Rat(2 * u);
            if (auto w = accept(QuadElem(F, Rat(0), Rat(u)), QuadElem(F, v), "pell +1 halving"))
                return w;
        }
    }
    // x^2 - dn y^2 = d, d | x: d u^2 - n y^2 = 1.
    PellSolution dd = pell_solve(D, d, y_max);
    if (dd.found() && mpz_divisible_p(dd.x.get_mpz_t(), d.get_mpz_t()))
        if (auto w = accept(QuadElem(F, Rat(0), Rat(Int(dd.x / d))), QuadElem(F, Rat(dd.y)), "pell d"))
            return w;
    // Box search on beta.
    const long box = 12;
    for (long y0 = -box; y0 <= box; ++y0)
        for (long y1 = -box; y1 <= box; ++y1) {
            QuadElem beta = QuadElem::from_coords(F, Rat(y0), Rat(y1));
            auto alpha = sqrt_in_field(minus_one - QuadElem(F, Rat(n)) * beta * beta);
            if (alpha)
                if (auto w = accept(*alpha, beta, "box search"))
                    return w;
        }
    return std::nullopt;
}

IntPoly hilbert_poly_59() { return IntPoly{-1, 2, 0, 1}; }

CriterionReport criterion_quadr(const QuadElem & p, const Int & d, const Int & n, const std::optional<QuadPoly> & g_n)
{
    check_dn(d, n);
    CriterionReport r;
    r.theorem_id = "quadr";
    const QuadField & F = p.field();
    if (F.D() != -d)
        throw std::invalid_argument("p does not lie in Q(sqrt(-d))");
    if (!is_prime_element(p))
        throw precondition_violation(p.to_string() + " is not a prime element");
    r.hypotheses.push_back(hyp("d > 3", d > 3));
    if (d > 3) {
        auto w = cached_witness(d, n);
        r.hypotheses.push_back(hyp("-1 = alpha^2 + n beta^2", w.has_value(),
                                   w ? "alpha = " + w->alpha.to_string() + ", beta = " + w->beta.to_string() +
                                           " (" + w->method + ")"
                                     : "no witness within search bounds (non-exhaustive)"));
    }
    r.hypotheses.push_back(hyp("p does not divide 2n", !divides_int(p, 2 * n)));
    if (!g_n || g_n->size() < 2) {
        r.hypotheses.push_back(hyp("g_n supplied", false, "defining polynomial is an input"));
        finalize(r);
        r.note = "no defining polynomial supplied";
        return r;
    }
    QuadElem disc = quadpoly_disc(*g_n, F);
    r.hypotheses.push_back(hyp("p does not divide disc(g_n)", !disc.is_zero() && !p.divides(disc),
                               "disc = " + disc.to_string()));
    try {
        Int h = cached_relative_picard(d, n);
        bool ok = Int(long(g_n->size() - 1)) == 2 * h;
        r.hypotheses.push_back(hyp("deg g_n = 2 #Pic(O)", ok, "#Pic(O) = " + h.get_str()));
    } catch (const std::exception & e) {
        r.hypotheses.push_back(hyp("deg g_n = 2 #Pic(O)", false, e.what()));
    }
    finalize(r);
    if (!r.applicable)
        return r;
    ResidueField R = ResidueField::of_element(p);
    r.verdict = R.has_root(*g_n) ? Verdict::Solvable : Verdict::Unsolvable;
    return r;
}

CriterionReport criterion_hilbert(const QuadElem & p, const Int & d, const Int & n, const std::optional<IntPoly> & f)
{
    check_dn(d, n);
    CriterionReport r;
    r.theorem_id = "hilbert";
    const QuadField & F = p.field();
    if (F.D() != -d)
        throw std::invalid_argument("p does not lie in Q(sqrt(-d))");
    if (!is_prime_element(p))
        throw precondition_violation(p.to_string() + " is not a prime element");
    r.hypotheses.push_back(hyp("d > 3", d > 3));
    r.hypotheses.push_back(hyp("gcd(d, n) = 1", gcd(d, n) == 1));
    r.hypotheses.push_back(hyp("d = 3 mod 4", mod(d, 4) == 3));
    r.hypotheses.push_back(hyp("n = 1 or 2 mod 4", mod(n, 4) == 1 || mod(n, 4) == 2));
    PellSolution pd = pell_solve(d * n, d);
    if (pd.found() && mpz_divisible_p(pd.x.get_mpz_t(), d.get_mpz_t()))
        r.hypotheses.push_back(hyp("d u^2 - n v^2 = 1 solvable", true,
                                   "u = " + Int(pd.x / d).get_str() + ", v = " + pd.y.get_str()));
    else
        r.hypotheses.push_back(hyp("d u^2 - n v^2 = 1 solvable", false,
                                   pd.status == PellStatus::ProvenNone ? "no solution" : "not found within bound (non-exhaustive)"));
    try {
        NormMapCondition c = cached_norm_map(d, n);
        std::string detail = "h_F = " + c.h_F.get_str() + ", h_E = " + c.h_E.get_str();
        r.hypotheses.push_back(hyp("norm map Cl(E) -> Cl(F) is an isomorphism", c.inj_iso || c.odd_equal,
                                   detail + (c.odd_equal ? ", equal and odd" : "")));
    } catch (const std::exception & e) {
        r.hypotheses.push_back(hyp("norm map Cl(E) -> Cl(F) is an isomorphism", false, e.what()));
    }
    r.hypotheses.push_back(hyp("p does not divide 2n", !divides_int(p, 2 * n)));
    std::optional<IntPoly> fh = f;
    if (!fh && d == 59)
        fh = hilbert_poly_59();
    if (fh && fh->degree() >= 1) {
        Int disc = poly_discriminant(*fh);
        r.hypotheses.push_back(hyp("p does not divide disc(f)", disc != 0 && !divides_int(p, disc),
                                   "disc = " + disc.get_str()));
    } else {
        r.hypotheses.push_back(hyp("p does not divide disc(f)", false, "no defining polynomial of H_F supplied"));
    }
    finalize(r);
    if (!r.applicable)
        return r;
    ResidueField R = ResidueField::of_element(p);
    bool sq = R.is_square(R.reduce(QuadElem(F, Rat(-n))));
    r.verdict = sq ? Verdict::Solvable : Verdict::Unsolvable;
    r.note = "-n is " + std::string(sq ? "" : "not ") + "a square in O_F/p (residue field of size " +
             R.size().get_str() + ")";
    return r;
}

// ------------------------------------------------------------ solvers

Representation represent(const QuadElem & p, const Int & d, const Int & n)
{
    check_dn(d, n);
    const QuadField & F = p.field();
    if (F.D() != -d)
        throw std::invalid_argument("p does not lie in Q(sqrt(-d))");
    if (!is_prime_element(p))
        throw precondition_violation(p.to_string() + " is not a prime element");
    if (divides_int(p, 2 * n))
        throw precondition_violation("p divides 2n");
    Representation out;
    ResidueField R = ResidueField::of_element(p);
    auto root = R.sqrt(R.reduce(QuadElem(F, Rat(-n))));
    if (!root) {
        out.result = Verdict::Unsolvable;
        out.note = "-n is not a square mod p";
        return out;
    }
    const RelativeSetup & S = relative_setup(d, n);
    const FieldPtr & E = S.E;
    const IntModule & OE = S.OE.module();
    Elem rt = embed_base(E, R.lift(*root));
    IntModule P = module_sum(module_times(OE, embed_base(E, p)), module_times(OE, rt - sqrt_minus_n(E)));
    GeneratorSearch gs = find_generator(P, OE);
    if (!gs.generator) {
        out.result = Verdict::Unsolvable;
        out.note = "the prime of O_E above p is not principal";
        return out;
    }
    const QuadElem np(F, Rat(n));
    bool saw_negative = false;
    for (const Elem & u : S.coset_reps) {
        Elem alpha = *gs.generator * u;
        if (!S.O.module().contains(alpha))
            continue;
        auto [X, Y] = relative_coords(alpha);
        QuadElem N = X * X + np * Y * Y;
        if (N == p) {
            out.xy = std::make_pair(X, Y);
        } else if (N == -p) {
            saw_negative = true;
            auto w = cached_witness(d, n);
            if (!w)
                continue;
            // (a^2 + n b^2)(X^2 + n Y^2) = (aX - n bY)^2 + n(aY + bX)^2.
            out.xy = std::make_pair(w->alpha * X - np * w->beta * Y, w->alpha * Y + w->beta * X);
        } else {
            throw std::logic_error("generator has relative norm " + N.to_string());
        }
        if (!verify_identity(p, out.xy->first, out.xy->second, n))
            throw std::logic_error("representation failed verification");
        out.result = Verdict::Solvable;
        return out;
    }
    out.result = Verdict::Unknown;
    out.note = saw_negative ? "generator has relative norm -p and no unit witness was found"
                            : "no generator of the prime lies in the order";
    return out;
}

std::optional<std::pair<QuadElem, QuadElem>> brute_force_represent(const QuadElem & p, const Int & n, long box)
{
    const QuadField & F = p.field();
    const QuadElem np(F, Rat(n));
    for (long y0 = -box; y0 <= box; ++y0)
        for (long y1 = -box; y1 <= box; ++y1) {
            QuadElem y = QuadElem::from_coords(F, Rat(y0), Rat(y1));
            auto x = sqrt_in_field(p - np * y * y);
            if (!x)
                continue;
            RatVec c = x->coords();
            if (abs(c[0]) > box || abs(c[1]) > box)
                continue;
            if (verify_identity(p, *x, y, n))
                return std::make_pair(*x, y);
        }
    return std::nullopt;
}

std::vector<QuadElem> prime_elements_up_to(const QuadField & F, const Int & bound)
{
    std::vector<QuadElem> out;
    for (const Int & q : primes_up_to(bound.get_si())) {
        PrimeSplitting s = split_prime(F, q);
        if (s.type == SplitType::Inert) {
            if (q * q <= bound)
                out.push_back(QuadElem(F, Rat(q)));
            continue;
        }
        for (const auto & g : s.generators)
            if (g)
                out.push_back(normalize_sign(*g));
    }
    return out;
}

} // namespace rcf
