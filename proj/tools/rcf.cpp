// rcf: command-line front end. Every command prints one JSON document.
// Exit codes: 0 ok, 1 check failed, 2 invalid input, 3 unresolved/unsupported.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcf/criteria.hpp"
#include "rcf/parse.hpp"

using json = nlohmann::ordered_json;
using namespace rcf;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInvalid = 2, kUnresolved = 3 };

struct Options {
    bool pretty = false;
    bool csv = false;
    std::optional<long> bound;
    std::string poly_file;
    unsigned long seed = 0;
};

json hnf_json(const IntModule & M)
{
    json rows = json::array();
    for (const IntVec & r : M.hnf()) {
        json row = json::array();
        for (const Int & x : r)
            row.push_back(x.get_str());
        rows.push_back(row);
    }
    return json{{"hnf", rows}, {"den", M.den().get_str()}};
}

std::optional<IntPoly> poly_option(const Options & o)
{
    if (o.poly_file.empty())
        return std::nullopt;
    return read_poly_file(o.poly_file);
}

json hypotheses_json(const CriterionReport & r)
{
    json hs = json::array();
    for (const Hypothesis & h : r.hypotheses)
        hs.push_back({{"name", h.name}, {"pass", h.pass}, {"detail", h.detail}});
    return hs;
}

json report_json(const CriterionReport & r)
{
    json j;
    j["theorem"] = r.theorem_id;
    j["hypotheses"] = hypotheses_json(r);
    j["applicable"] = r.applicable;
    j["verdict"] = to_string(r.verdict);
    if (r.representation)
        j["representation"] = {{"x", r.representation->first.to_string()},
                               {"y", r.representation->second.to_string()}};
    else
        j["representation"] = nullptr;
    if (r.cross_check)
        j["cross_check"] = *r.cross_check;
    j["note"] = r.note;
    return j;
}

Int positive_int(const std::string & s, const char * what)
{
    Int v;
    if (v.set_str(s, 10) != 0 || v <= 0)
        throw std::invalid_argument(std::string(what) + " must be a positive integer");
    return v;
}

// ---------------------------------------------------------------- commands

int cmd_conductor(const std::string & spec, json & out)
{
    Order O = parse_order(spec);
    OrderIdeal f = conductor(O);
    out["order"] = O.label();
    out["field"] = O.field()->name();
    out["index"] = O.index().get_str();
    out["is_maximal"] = O.is_maximal();
    out["conductor_hnf"] = hnf_json(f.module());
    out["norm"] = to_string(f.norm());
    if (O.field()->kind() == FieldKind::Biquadratic) {
        Int four_n = 4 * O.field()->n();
        out["contains_4n"] = f.module().contains(Elem::integer(O.field(), Rat(four_n)));
    } else {
        out["contains_4n"] = nullptr;
    }
    return kOk;
}

int cmd_picard(const std::string & spec, const Options & o, json & out)
{
    Order O = parse_order(spec);
    PicardFormula pf = picard_formula(O);
    out["order"] = O.label();
    out["h_K"] = pf.h_K.get_str();
    out["unit_index"] = pf.unit_index.get_str();
    out["unit_counts"] = {{"OK_mod_f", pf.units_OK_mod_f.get_str()}, {"O_mod_f", pf.units_O_mod_f.get_str()}};
    out["picard"] = pf.picard.get_str();
    bool agree = true;
    if (O.field()->kind() == FieldKind::Quadratic) {
        std::optional<Int> b;
        if (o.bound)
            b = Int(*o.bound);
        PicBruteForce bf = pic_brute_force(O, b);
        out["brute_force"] = {{"classes", bf.classes.get_str()},
                              {"bound", bf.bound.get_str()},
                              {"complete", bf.complete}};
        agree = bf.complete ? bf.classes == pf.picard : bf.classes <= pf.picard;
    } else {
        out["brute_force"] = nullptr;
    }
    out["agree"] = agree;
    return agree ? kOk : kCheckFailed;
}

int cmd_factor(const std::string & spec, const std::string & ideal, json & out)
{
    Order O = parse_order(spec);
    OrderIdeal a = parse_ideal(O, ideal);
    IdealFactorization fac = factor_ideal(a);
    out["order"] = O.label();
    out["ideal"] = hnf_json(a.module());
    out["norm"] = to_string(a.norm());
    json fs = json::array();
    for (const auto & [p, e] : fac.factors)
        fs.push_back({{"prime", hnf_json(p.module())}, {"norm", to_string(p.norm())}, {"exponent", e}});
    out["factors"] = fs;
    out["verified"] = multiply_out(O, fac) == a;
    return kOk;
}

int cmd_criterion(const std::string & theorem, const std::string & p_spec, const std::string & d_s,
                  const std::string & n_s, const Options & o, json & out)
{
    Int n = positive_int(n_s, "n");
    if (theorem == "cox") {
        Int p = positive_int(p_spec, "p");
        std::optional<IntPoly> f = poly_option(o);
        if (!f) {
            if (n != 1)
                throw std::invalid_argument("cox needs --poly for n != 1");
            f = IntPoly{0, 1};
        }
        out = report_json(cox_criterion(p, n, *f));
        return kOk;
    }
    Int d = positive_int(d_s, "d");
    QuadField F(Int(-d));
    QuadElem p = parse_quad(F, p_spec);
    if (theorem == "hilbert") {
        out = report_json(criterion_hilbert(p, d, n, poly_option(o)));
        return kOk;
    }
    if (theorem == "quadr") {
        std::optional<QuadPoly> g;
        if (auto f = poly_option(o)) {
            g = QuadPoly{};
            for (const Int & c : f->coeffs())
                g->push_back(QuadElem(F, Rat(c)));
        }
        out = report_json(criterion_quadr(p, d, n, g));
        return kOk;
    }
    throw std::invalid_argument("unknown theorem '" + theorem + "' (cox, quadr, hilbert)");
}

int cmd_represent(const std::string & p_spec, const std::string & d_s, const std::string & n_s, json & out)
{
    Int d = positive_int(d_s, "d"), n = positive_int(n_s, "n");
    QuadField F(Int(-d));
    QuadElem p = parse_quad(F, p_spec);
    Representation r = represent(p, d, n);
    out["p"] = p.to_string();
    out["d"] = d.get_str();
    out["n"] = n.get_str();
    if (r.xy) {
        out["x"] = r.xy->first.to_string();
        out["y"] = r.xy->second.to_string();
        out["verified"] = verify_identity(p, r.xy->first, r.xy->second, n);
    } else {
        out["result"] = r.result == Verdict::Unsolvable ? "none" : "unknown";
        out["note"] = r.note;
    }
    return r.result == Verdict::Unknown ? kUnresolved : kOk;
}

int cmd_verify_example(bool pair_only, long n_long, json & out)
{
    const Int d = 59, n = n_long;
    QuadField F(Int(-59));
    const QuadElem p = parse_quad(F, "(3+sqrt(-59))/2");
    const QuadElem x = parse_quad(F, "(5779+1115*sqrt(-59))/2");
    const QuadElem y = parse_quad(F, "-3028+266*sqrt(-59)");
    json checks = json::array();
    bool all = true;
    auto check = [&](const std::string & name, bool ok, const std::string & detail) {
        checks.push_back({{"check", name}, {"pass", ok}, {"detail", detail}});
        all = all && ok;
    };
    if (!pair_only) {
        Int hF = form_class_group(Int(-59)).order;
        check("h(F) = 3", hF == 3, "h(F) = " + hF.get_str());
        if (n > 0 && n != d && is_squarefree(n)) {
            Int hE = class_group(integral_basis(d, n)).order;
            check("h(E) = 3", hE == 3, "h(E) = " + hE.get_str());
        } else {
            check("h(E) = 3", false, "invalid n");
        }
        Int disc = poly_discriminant(hilbert_poly_59());
        check("disc(x^3+2x-1) = -59", disc == -59, "disc = " + disc.get_str());
        PrimeSplitting s = split_prime(F, Int(17));
        bool assoc = s.type == SplitType::Split && s.generators[0] &&
                     (p.divides(*s.generators[0]) && s.generators[0]->divides(p) ||
                      p.divides(*s.generators[1]) && s.generators[1]->divides(p));
        check("17 = p * conj(p)", p * p.conj() == QuadElem(F, Rat(17)) && assoc,
              "p = " + p.to_string() + ", N(p) = " + to_string(p.norm()));
        int j = jacobi(mod(Int(-n), 17), Int(17));
        check("(-n/17) = 1", j == 1, "jacobi = " + std::to_string(j));
        if (n > 0 && n != d && is_squarefree(n) && j == 1) {
            Representation r = represent(p, d, n);
            bool ok = r.xy && verify_identity(p, r.xy->first, r.xy->second, n);
            check("representation found and verified", ok,
                  ok ? "x = " + r.xy->first.to_string() + ", y = " + r.xy->second.to_string() : r.note);
        } else {
            check("representation found and verified", false, "-n is not a square mod 17");
        }
    }
    check("displayed identity", verify_identity(p, x, y, n),
          "(3+sqrt(-59))/2 = x^2 + " + n.get_str() + " y^2, x = " + x.to_string() + ", y = " + y.to_string());
    out["d"] = 59;
    out["n"] = n_long;
    out["checks"] = checks;
    out["all_pass"] = all;
    return all ? kOk : kCheckFailed;
}

int cmd_sweep(const std::string & d_s, const std::string & n_s, const Options & o, json & out, std::string & csv)
{
    Int d = positive_int(d_s, "d"), n = positive_int(n_s, "n");
    Int bound = o.bound ? Int(*o.bound) : Int(2000);
    QuadField F(Int(-d));
    std::optional<IntPoly> f = poly_option(o);
    json rows = json::array();
    std::ostringstream cs;
    cs << "p,norm,applicable,criterion,represent,x,y,agree\n";
    long divergences = 0, considered = 0;
    for (const QuadElem & p : prime_elements_up_to(F, bound)) {
        if (p.divides(QuadElem(F, Rat(2 * d * n))))
            continue;
        CriterionReport c = criterion_hilbert(p, d, n, f);
        Representation r = represent(p, d, n);
        bool agree = (c.verdict == Verdict::Solvable) == (r.result == Verdict::Solvable) &&
                     r.result != Verdict::Unknown;
        ++considered;
        if (c.applicable && !agree)
            ++divergences;
        std::string xs = r.xy ? r.xy->first.to_string() : "", ys = r.xy ? r.xy->second.to_string() : "";
        rows.push_back({{"p", p.to_string()},
                        {"norm", to_string(p.norm())},
                        {"applicable", c.applicable},
                        {"criterion", to_string(c.verdict)},
                        {"represent", to_string(r.result)},
                        {"x", xs},
                        {"y", ys},
                        {"agree", agree}});
        cs << '"' << p.to_string() << "\"," << to_string(p.norm()) << ',' << c.applicable << ','
           << to_string(c.verdict) << ',' << to_string(r.result) << ",\"" << xs << "\",\"" << ys << "\"," << agree
           << '\n';
    }
    out["d"] = d.get_str();
    out["n"] = n.get_str();
    out["norm_bound"] = bound.get_str();
    out["seed"] = o.seed;
    out["primes"] = considered;
    out["divergences"] = divergences;
    out["rows"] = rows;
    csv = cs.str();
    return divergences == 0 ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Orders, Picard groups and x^2 + n y^2 criteria over quadratic and biquadratic fields"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--pretty", o.pretty, "Indented JSON output");
    app.add_flag("--json", "JSON output (default)");
    app.add_option("--seed", o.seed, "Seed recorded in sweep output");

    std::string order_spec, ideal, theorem, p_spec, d_s, n_s;
    bool pair_only = false, csv = false;
    long example_n = 2;

    auto * c_cond = app.add_subcommand("conductor", "Conductor of an order");
    c_cond->add_option("order", order_spec, "zsqrt:N | quad:D:c | max:D | rel:d:n | maxbiquad:d:n")->required();

    auto * c_pic = app.add_subcommand("picard", "Picard number by the class number formula and by enumeration");
    c_pic->add_option("order", order_spec)->required();
    c_pic->add_option("--bound", o.bound, "Norm bound for enumeration");

    auto * c_fac = app.add_subcommand("factor", "Factor an ideal coprime to the conductor");
    c_fac->add_option("order", order_spec)->required();
    c_fac->add_option("ideal", ideal, "Comma-separated generators")->required();

    auto * c_crit = app.add_subcommand("criterion", "Evaluate a criterion (cox, quadr, hilbert)");
    c_crit->add_option("theorem", theorem)->required();
    c_crit->add_option("p", p_spec, "Prime (cox) or prime element of O_F")->required();
    c_crit->add_option("d", d_s, "F = Q(sqrt(-d)); ignored for cox")->required();
    c_crit->add_option("n", n_s)->required();
    c_crit->add_option("--poly", o.poly_file, "Polynomial file");

    auto * c_rep = app.add_subcommand("represent", "Solve p = x^2 + n y^2 over O_F");
    c_rep->add_option("p", p_spec)->required();
    c_rep->add_option("d", d_s)->required();
    c_rep->add_option("n", n_s)->required();

    auto * c_example = app.add_subcommand("verify-paper-example", "Reproduce the d = 59, n = 2 example");
    c_example->add_flag("--paper-pair-only", pair_only, "Only check the displayed identity");
    c_example->add_option("--n", example_n, "Value of n (default 2)");

    auto * c_sweep = app.add_subcommand("sweep", "Criterion against solver over prime elements");
    c_sweep->add_option("d", d_s)->required();
    c_sweep->add_option("n", n_s)->required();
    c_sweep->add_option("--bound", o.bound, "Norm bound (default 2000)");
    c_sweep->add_option("--poly", o.poly_file, "Defining polynomial of H_F");
    c_sweep->add_flag("--csv", csv, "CSV instead of JSON");

    app.fallthrough();
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return kInvalid;
    }

    json out;
    std::string csv_text;
    int code = kOk;
    try {
        if (*c_cond)
            code = cmd_conductor(order_spec, out);
        else if (*c_pic)
            code = cmd_picard(order_spec, o, out);
        else if (*c_fac)
            code = cmd_factor(order_spec, ideal, out);
        else if (*c_crit)
            code = cmd_criterion(theorem, p_spec, d_s, n_s, o, out);
        else if (*c_rep)
            code = cmd_represent(p_spec, d_s, n_s, out);
        else if (*c_example)
            code = cmd_verify_example(pair_only, example_n, out);
        else if (*c_sweep)
            code = cmd_sweep(d_s, n_s, o, out, csv_text);
    } catch (const audit_failure & e) {
        out = {{"error", "audit_failure"}, {"quantity", e.quantity()}, {"message", e.what()}};
        code = kCheckFailed;
    } catch (const unresolved & e) {
        out = {{"error", "unresolved"}, {"message", e.what()}};
        code = kUnresolved;
    } catch (const unsupported & e) {
        out = {{"error", "unsupported"}, {"message", e.what()}};
        code = kUnresolved;
    } catch (const precondition_violation & e) {
        out = {{"error", "precondition_violation"}, {"message", e.what()}};
        code = kInvalid;
    } catch (const std::invalid_argument & e) {
        out = {{"error", "invalid_argument"}, {"message", e.what()}};
        code = kInvalid;
    }
    if (csv && *c_sweep && !out.contains("error"))
        std::cout << csv_text;
    else
        std::cout << out.dump(o.pretty ? 2 : -1) << '\n';
    return code;
}
