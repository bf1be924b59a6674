#include "igusa/format.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace igusa::format {

using exactalg::Rat;
using exactalg::VarId;
using json = nlohmann::ordered_json;

namespace {

// Name-based graded-lex order: the canonical term order for output.
struct NamedTerm {
    std::vector<std::pair<std::string, std::int64_t>> exps;
    Rat coef;
};

NamedTerm named(const Monomial& m, const Rat& c) {
    NamedTerm t;
    t.coef = c;
    for (auto& [v, e] : m.exponents()) t.exps.emplace_back(exactalg::var_name(v), e);
    std::sort(t.exps.begin(), t.exps.end());
    return t;
}

bool term_before(const NamedTerm& a, const NamedTerm& b) {
    std::int64_t da = 0, db = 0;
    for (auto& [n, e] : a.exps) da += e;
    for (auto& [n, e] : b.exps) db += e;
    if (da != db) return da > db;
    return a.exps < b.exps;
}

std::vector<NamedTerm> sorted_terms(const Polynomial& p) {
    std::vector<NamedTerm> ts;
    for (auto& [m, c] : p.terms()) ts.push_back(named(m, c));
    std::sort(ts.begin(), ts.end(), term_before);
    return ts;
}

std::string render_monomial(const std::vector<std::pair<std::string, std::int64_t>>& exps,
                            bool latex) {
    if (exps.empty()) return "1";
    std::string s;
    for (auto& [name, e] : exps) {
        if (!s.empty() && !latex) s += "*";
        s += name;
        if (e != 1) {
            if (latex)
                s += "^{" + std::to_string(e) + "}";
            else
                s += "^" + std::to_string(e);
        }
    }
    return s;
}

std::string render_poly(const Polynomial& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string s;
    for (auto& t : sorted_terms(p)) {
        Rat c = t.coef;
        bool neg = c < 0;
        if (neg) c = -c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string mono = render_monomial(t.exps, latex);
        if (mono == "1") {
            s += c.get_str();
        } else {
            if (c != 1) s += c.get_str() + (latex ? " " : "*");
            s += mono;
        }
    }
    return s;
}

std::vector<std::pair<Monomial, int>> sorted_factors(const RationalFunction& f) {
    std::vector<std::pair<Monomial, int>> fs(f.denominator().begin(), f.denominator().end());
    std::sort(fs.begin(), fs.end(), [](auto& a, auto& b) {
        return term_before(named(b.first, Rat(1)), named(a.first, Rat(1)));  // ascending degree
    });
    return fs;
}

std::string render_rf(const RationalFunction& f, bool latex) {
    // Clear negative powers out of the numerator into an explicit monomial
    // prefix so the displayed polynomial has nonnegative exponents.
    Polynomial num = f.numerator();
    Monomial prefix = Monomial::one();
    for (VarId v : num.variables()) {
        std::int64_t mn = num.min_exponent(v);
        if (mn < 0) prefix = prefix * Monomial::of(v, mn);
    }
    std::string pre;
    if (!prefix.is_one()) {
        num = num * prefix.inverse();
        pre = render_monomial(named(prefix, Rat(1)).exps, latex);
    }

    std::string nums = render_poly(num, latex);
    bool num_atomic = num.term_count() <= 1;
    std::string dens;
    for (auto& [m, mult] : sorted_factors(f)) {
        std::string fac = "(1-" + render_monomial(named(m, Rat(1)).exps, latex) + ")";
        if (mult != 1) fac += latex ? "^{" + std::to_string(mult) + "}" : "^" + std::to_string(mult);
        dens += fac;
    }

    std::string body;
    if (dens.empty())
        body = nums;
    else if (latex)
        body = "\\frac{" + nums + "}{" + dens + "}";
    else
        body = (num_atomic ? nums : "(" + nums + ")") + "/(" + dens + ")";
    if (pre.empty()) return body;
    return latex ? pre + " " + body : pre + "*" + body;
}

json poly_to_json_obj(const Polynomial& p) {
    json terms = json::array();
    for (auto& t : sorted_terms(p)) {
        json exps = json::object();
        for (auto& [name, e] : t.exps) exps[name] = e;
        terms.push_back(json{{"exps", exps},
                             {"num", t.coef.get_num().get_str()},
                             {"den", t.coef.get_den().get_str()}});
    }
    return json{{"terms", terms}};
}

Polynomial poly_from_json_obj(const json& j) {
    Polynomial p;
    for (auto& t : j.at("terms")) {
        Monomial::Exponents exps;
        for (auto& [name, e] : t.at("exps").items())
            exps.emplace_back(exactalg::var(name), e.get<std::int64_t>());
        Rat c(Rat(t.at("num").get<std::string>()) / Rat(t.at("den").get<std::string>()));
        c.canonicalize();
        p.add_term(Monomial::from_pairs(std::move(exps)), c);
    }
    return p;
}

}  // namespace

std::string monomial_plain(const Monomial& m) { return render_monomial(named(m, Rat(1)).exps, false); }
std::string monomial_latex(const Monomial& m) { return render_monomial(named(m, Rat(1)).exps, true); }
std::string poly_plain(const Polynomial& p) { return render_poly(p, false); }
std::string poly_latex(const Polynomial& p) { return render_poly(p, true); }
std::string rf_plain(const RationalFunction& f) { return render_rf(f, false); }
std::string rf_latex(const RationalFunction& f) { return render_rf(f, true); }

std::string poly_json(const Polynomial& p) { return poly_to_json_obj(p).dump(); }

Polynomial poly_from_json(const std::string& text) {
    return poly_from_json_obj(json::parse(text));
}

std::string rf_json(const RationalFunction& f) {
    json den = json::array();
    for (auto& [m, mult] : sorted_factors(f)) {
        json exps = json::object();
        for (auto& [name, e] : named(m, Rat(1)).exps) exps[name] = e;
        den.push_back(json{{"exps", exps}, {"mult", mult}});
    }
    return json{{"numerator", poly_to_json_obj(f.numerator())}, {"denominator", den}}.dump();
}

RationalFunction rf_from_json(const std::string& text) {
    json j = json::parse(text);
    Polynomial num = poly_from_json_obj(j.at("numerator"));
    RationalFunction::Denominator den;
    for (auto& fac : j.at("denominator")) {
        Monomial::Exponents exps;
        for (auto& [name, e] : fac.at("exps").items())
            exps.emplace_back(exactalg::var(name), e.get<std::int64_t>());
        den[Monomial::from_pairs(std::move(exps))] += fac.at("mult").get<int>();
    }
    return RationalFunction(std::move(num), std::move(den));
}

std::string series_plain(const exactalg::TruncatedSeries& s) {
    std::ostringstream os;
    for (std::int64_t k = 0; k <= s.cutoff(); ++k) {
        os << "[" << exactalg::var_name(s.variable()) << "^" << k << "] "
           << render_poly(s.coefficient(k), false) << "\n";
    }
    return os.str();
}

std::string series_json(const exactalg::TruncatedSeries& s) {
    json coeffs = json::array();
    for (std::int64_t k = 0; k <= s.cutoff(); ++k) coeffs.push_back(poly_to_json_obj(s.coefficient(k)));
    return json{{"variable", exactalg::var_name(s.variable())},
                {"cutoff", s.cutoff()},
                {"coefficients", coeffs}}
        .dump();
}

}  // namespace igusa::format
