#include "rcf/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rcf {

namespace {

std::vector<std::string> split(const std::string & s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Int parse_int(const std::string & s)
{
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.empty() || t == "-" || t == "+")
        throw std::invalid_argument("expected an integer, got '" + s + "'");
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])) && !(i == 0 && (t[i] == '-' || t[i] == '+')))
            throw std::invalid_argument("expected an integer, got '" + s + "'");
    if (t[0] == '+')
        t.erase(0, 1);
    return Int(t);
}

class ElemParser {
  public:
    ElemParser(FieldPtr F, std::string s) : F_(std::move(F)), s_(std::move(s)) {}

    Elem run()
    {
        Elem e = expr();
        skip();
        if (i_ != s_.size())
            fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string & what) const
    {
        throw std::invalid_argument("element '" + s_ + "': " + what);
    }
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    Elem expr()
    {
        Elem e = term();
        for (;;) {
            if (eat('+'))
                e = e + term();
            else if (eat('-'))
                e = e - term();
            else
                return e;
        }
    }
    Elem term()
    {
        Elem e = unary();
        for (;;) {
            if (eat('*'))
                e = e * unary();
            else if (eat('/')) {
                Elem d = unary();
                if (d.is_zero())
                    fail("division by zero");
                e = e / d;
            } else
                return e;
        }
    }
    Elem unary()
    {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return primary();
    }
    Int integer()
    {
        skip();
        std::size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (st == i_)
            fail("expected a number");
        return Int(s_.substr(st, i_ - st));
    }
    Elem primary()
    {
        skip();
        if (i_ >= s_.size())
            fail("unexpected end");
        if (eat('('))
            return paren_rest();
        if (std::isdigit(static_cast<unsigned char>(s_[i_])))
            return Elem::integer(F_, Rat(integer()));
        if (s_.compare(i_, 4, "sqrt") == 0) {
            i_ += 4;
            if (!eat('('))
                fail("expected '(' after sqrt");
            bool neg = eat('-');
            Int k = integer();
            if (!eat(')'))
                fail("expected ')'");
            return sqrt_of(neg ? Int(-k) : k);
        }
        if (s_[i_] == 'w') {
            ++i_;
            return Elem::basis(F_, 1);
        }
        fail("unexpected '" + std::string(1, s_[i_]) + "'");
    }
    Elem paren_rest()
    {
        Elem e = expr();
        if (!eat(')'))
            fail("expected ')'");
        return e;
    }
    Elem sqrt_of(const Int & k)
    {
        const int r = F_->degree();
        if (k >= 0) {
            Int s;
            if (is_square(k, &s))
                return Elem::integer(F_, Rat(s));
        }
        // (radicand, power-basis index)
        std::vector<std::pair<Int, int>> rads;
        if (F_->kind() == FieldKind::Quadratic)
            rads = {{F_->D(), 1}};
        else
            rads = {{-F_->d(), 1}, {-F_->n(), 2}, {F_->d() * F_->n(), 3}};
        for (const auto & [D, idx] : rads) {
            if (k == 0 || sgn(k) != sgn(D))
                continue;
            Rat q = Rat(k) / Rat(D);
            Int a, b;
            if (is_square(q.get_num(), &a) && is_square(q.get_den(), &b)) {
                RatVec p(r, Rat(0));
                p[idx] = Rat(a, b);
                return Elem::from_power(F_, p);
            }
        }
        fail("sqrt(" + k.get_str() + ") is not in " + F_->name());
    }

    FieldPtr F_;
    std::string s_;
    std::size_t i_ = 0;
};

} // namespace

Order parse_order(const std::string & spec)
{
    std::vector<std::string> parts = split(spec, ':');
    const std::string & kind = parts[0];
    auto need = [&](std::size_t k) {
        if (parts.size() != k + 1)
            throw std::invalid_argument("order spec '" + spec + "' expects " + std::to_string(k) + " parameters");
    };
    auto sqfree = [](const Int & x, const char * what) {
        if (x == 0 || !is_squarefree(abs(x)))
            throw std::invalid_argument(std::string(what) + " must be a nonzero squarefree integer");
    };
    if (kind == "zsqrt") {
        need(1);
        Int N = parse_int(parts[1]);
        if (N <= 0)
            throw std::invalid_argument("zsqrt:N needs N > 0");
        return Order::zsqrt(N);
    }
    if (kind == "quad") {
        need(2);
        Int D = parse_int(parts[1]), c = parse_int(parts[2]);
        sqfree(D, "D");
        if (D == 1 || c <= 0)
            throw std::invalid_argument("quad:D:c needs D != 1 and c > 0");
        return Order::quadratic_conductor(D, c);
    }
    if (kind == "max") {
        need(1);
        Int D = parse_int(parts[1]);
        sqfree(D, "D");
        if (D == 1)
            throw std::invalid_argument("max:D needs D != 1");
        return Order::maximal(Field::quadratic(D));
    }
    if (kind == "rel" || kind == "maxbiquad") {
        need(2);
        Int d = parse_int(parts[1]), n = parse_int(parts[2]);
        if (d <= 0 || n <= 0 || d == n)
            throw std::invalid_argument("d and n must be distinct positive integers");
        sqfree(d, "d");
        sqfree(n, "n");
        FieldPtr E = Field::biquadratic(d, n);
        return kind == "rel" ? Order::relative(E) : Order::maximal(E);
    }
    throw std::invalid_argument("unknown order spec '" + spec + "'");
}

Elem parse_elem(const FieldPtr & F, const std::string & expr) { return ElemParser(F, expr).run(); }

QuadElem parse_quad(const QuadField & F, const std::string & expr)
{
    return QuadElem::from_elem(parse_elem(F.field(), expr));
}

OrderIdeal parse_ideal(const Order & O, const std::string & gens)
{
    std::vector<IntModule> parts;
    for (const std::string & g : split(gens, ',')) {
        Elem x = parse_elem(O.field(), g);
        if (x.is_zero())
            continue;
        parts.push_back(module_times(O.module(), x));
    }
    if (parts.empty())
        throw std::invalid_argument("ideal '" + gens + "' is zero");
    IntModule M = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        M = module_sum(M, parts[i]);
    return OrderIdeal(O, M);
}

IntPoly parse_poly(std::istream & in)
{
    std::vector<Int> c;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos || line[a] == '#')
            continue;
        c.push_back(parse_int(line));
    }
    IntPoly f(c);
    if (f.degree() < 1)
        throw std::invalid_argument("polynomial must have degree at least 1");
    return f;
}

IntPoly read_poly_file(const std::string & path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read polynomial file " + path);
    return parse_poly(in);
}

} // namespace rcf
