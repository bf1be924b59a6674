// Plain-text, LaTeX, and JSON rendering of polynomials and rational
// functions, with a canonical term order so that serialized output is
// byte-stable under re-parsing.

#pragma once

#include <string>

#include "igusa/rational_function.hpp"
#include "igusa/series.hpp"

namespace igusa::format {

using exactalg::Monomial;
using exactalg::Polynomial;
using exactalg::RationalFunction;

std::string monomial_plain(const Monomial& m);
std::string monomial_latex(const Monomial& m);

std::string poly_plain(const Polynomial& p);
std::string poly_latex(const Polynomial& p);

// "num/((1-m1)(1-m2)...)" with factors sorted by total degree then name;
// a Laurent numerator is displayed as monomial * (cleared polynomial).
std::string rf_plain(const RationalFunction& f);
std::string rf_latex(const RationalFunction& f);

// {"terms":[{"exps":{"q":3,"t":2},"num":"1","den":"1"}]}
std::string poly_json(const Polynomial& p);
Polynomial poly_from_json(const std::string& text);

// {"numerator": <poly>, "denominator": [{"exps":{...},"mult":1}, ...]}
std::string rf_json(const RationalFunction& f);
RationalFunction rf_from_json(const std::string& text);

std::string series_plain(const exactalg::TruncatedSeries& s);
std::string series_json(const exactalg::TruncatedSeries& s);

}  // namespace igusa::format
