#include "igusa/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "igusa/format.hpp"
#include "igusa/igusa_fn.hpp"
#include "igusa/oracle.hpp"
#include "igusa/zeta.hpp"

namespace igusa::cli {

using json = nlohmann::ordered_json;
using combinat::Composition;
using exactalg::Int;
using exactalg::Monomial;
using exactalg::Rat;
using exactalg::RationalFunction;
using exactalg::TruncatedSeries;
using zeta::LieRingSpec;

std::uint64_t default_budget() {
    if (const char* env = std::getenv("IGUSA_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return oracle::Budget{}.max_hnf;
}

std::string spec_to_json(const LieRingSpec& spec) {
    json factors = json::array();
    for (auto& f : spec.factors) {
        json jf;
        switch (f.family) {
            case zeta::Family::FreeNilpotent: jf["family"] = "f2"; break;
            case zeta::Family::FreeProduct: jf["family"] = "g"; break;
            case zeta::Family::HigherHeisenberg: jf["family"] = "h"; break;
            case zeta::Family::Abelian: jf["family"] = "Z"; break;
        }
        jf["d"] = f.d;
        if (f.family == zeta::Family::FreeProduct) jf["d2"] = f.d2;
        jf["f"] = f.inertia;
        if (f.ram != 1) jf["e"] = f.ram;
        factors.push_back(jf);
    }
    json out{{"factors", factors}};
    if (spec.custom_descriptor) {
        auto& d = *spec.custom_descriptor;
        json pairs = json::array();
        for (auto& p : d.pairs()) {
            std::vector<int> comps;
            for (int s : p.components) comps.push_back(s + 1);
            pairs.push_back(json{{"components", comps}, {"sigma", p.sigma}});
        }
        std::vector<int> inertia;
        for (int i = 0; i < d.m(); ++i) inertia.push_back(d.f_i(i));
        out["descriptor"] = json{{"nbar", d.nbar()},
                                 {"f", inertia},
                                 {"pairs", pairs},
                                 {"abelian_rank", d.eps()}};
        out.erase("factors");
    }
    if (spec.custom_table) {
        json brackets = json::array();
        for (auto& e : spec.custom_table->entries) {
            json coeffs = json::object();
            coeffs[std::to_string(e.k + 1)] = e.c;
            brackets.push_back(json{{"i", e.i + 1}, {"j", e.j + 1}, {"coeffs", coeffs}});
        }
        out["custom"] = json{{"rank", spec.custom_table->rank}, {"brackets", brackets}};
    }
    return out.dump();
}

namespace {

zeta::BracketTable bracket_table_from_json(const json& j) {
    zeta::BracketTable t;
    t.rank = j.at("rank").get<int>();
    for (auto& e : j.at("brackets")) {
        int i = e.at("i").get<int>() - 1;
        int jj = e.at("j").get<int>() - 1;
        for (auto& [k, c] : e.at("coeffs").items())
            t.entries.push_back({i, jj, std::stoi(k) - 1, c.get<std::int64_t>()});
    }
    t.validate();
    return t;
}

}  // namespace

LieRingSpec spec_from_json(const std::string& text) {
    json j = json::parse(text);
    LieRingSpec spec;
    if (j.contains("rank") && j.contains("brackets")) {
        spec.custom_table = bracket_table_from_json(j);
        return spec;
    }
    if (j.contains("descriptor")) {
        // Caller-supplied pair system: the engine trusts that the minima
        // hypothesis holds for it and marks the result as uncertified.
        auto& jd = j.at("descriptor");
        combinat::Composition nbar = jd.at("nbar").get<combinat::Composition>();
        std::vector<int> inertia =
            jd.value("f", std::vector<int>(nbar.size(), 1));
        std::vector<combinat::DescriptorPair> pairs;
        for (auto& jp : jd.at("pairs")) {
            combinat::DescriptorPair p;
            for (int s : jp.at("components").get<std::vector<int>>()) p.components.push_back(s - 1);
            p.sigma = jp.at("sigma").get<std::vector<int>>();
            pairs.push_back(std::move(p));
        }
        spec.custom_descriptor = combinat::StructuralDescriptor(
            std::move(nbar), std::move(inertia), std::move(pairs), jd.value("abelian_rank", 0),
            /*hypothesis_certified=*/false);
        if (j.contains("custom")) spec.custom_table = bracket_table_from_json(j.at("custom"));
        return spec;
    }
    for (auto& jf : j.value("factors", json::array())) {
        zeta::LieRingFactor f;
        std::string fam = jf.at("family").get<std::string>();
        if (fam == "f2")
            f.family = zeta::Family::FreeNilpotent;
        else if (fam == "g")
            f.family = zeta::Family::FreeProduct;
        else if (fam == "h")
            f.family = zeta::Family::HigherHeisenberg;
        else if (fam == "Z")
            f.family = zeta::Family::Abelian;
        else
            throw std::invalid_argument("unknown family in JSON spec: " + fam);
        f.d = jf.at("d").get<int>();
        f.d2 = jf.value("d2", 0);
        f.inertia = jf.value("f", 1);
        f.ram = jf.value("e", 1);
        spec.factors.push_back(f);
    }
    if (j.contains("custom")) spec.custom_table = bracket_table_from_json(j.at("custom"));
    return spec;
}

LieRingSpec resolve_spec(const std::string& arg) {
    std::string trimmed = arg;
    while (!trimmed.empty() && isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.erase(trimmed.begin());
    if (!trimmed.empty() && trimmed.front() == '{') return spec_from_json(trimmed);
    if (trimmed.size() > 5 && trimmed.compare(trimmed.size() - 5, 5, ".json") == 0) {
        std::ifstream in(trimmed);
        if (!in) throw std::invalid_argument("cannot open spec file " + trimmed);
        std::stringstream ss;
        ss << in.rdbuf();
        return spec_from_json(ss.str());
    }
    return zeta::parse_spec(trimmed);
}

namespace {

Composition parse_composition(const std::string& text) {
    Composition n;
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty() && t.front() == '(') t = t.substr(1, t.size() >= 2 && t.back() == ')' ? t.size() - 2 : std::string::npos);
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        n.push_back(std::stoi(item));
    }
    if (n.empty()) throw std::invalid_argument("empty composition");
    return n;
}

std::string render_formula(const RationalFunction& z, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Plain: return format::rf_plain(z);
        case OutputFormat::Latex: return format::rf_latex(z);
        case OutputFormat::Json: return format::rf_json(z);
    }
    return {};
}

CommandResult cmd_compute(const JobConfig& cfg) {
    CommandResult res;
    LieRingSpec spec = resolve_spec(cfg.spec);
    if (spec.is_custom()) {
        res.exit_code = 2;
        res.error = "compute: custom bracket tables have no catalog descriptor; use the oracle command";
        return res;
    }
    zeta::ZetaOptions opt;
    opt.override_guard = cfg.budget > oracle::Budget{}.max_hnf;
    opt.threads = cfg.threads;
    RationalFunction z = zeta::zeta_ideal(spec, opt);
    if (cfg.format == OutputFormat::Json) {
        json out = json::parse(format::rf_json(z));
        out["hypothesis_certified"] = !spec.custom_descriptor.has_value();
        res.output = out.dump() + "\n";
    } else {
        res.output = render_formula(z, cfg.format) + "\n";
    }
    if (spec.custom_descriptor)
        res.error = "warning: custom descriptor; the minima hypothesis is trusted, not certified";
    return res;
}

CommandResult cmd_series(const JobConfig& cfg) {
    CommandResult res;
    if (cfg.degree < 0 || cfg.degree > 64) {
        res.exit_code = 2;
        res.error = "series: degree must lie in [0, 64]";
        return res;
    }
    LieRingSpec spec = resolve_spec(cfg.spec);
    zeta::ZetaOptions opt;
    opt.threads = cfg.threads;
    RationalFunction z = zeta::zeta_ideal(spec, opt);
    if (spec.custom_descriptor)
        res.error = "warning: custom descriptor; the minima hypothesis is trusted, not certified";
    TruncatedSeries s = z.series_expand(zeta::t_var(), cfg.degree);
    std::ostringstream os;
    if (cfg.format == OutputFormat::Json) {
        os << format::series_json(s) << "\n";
    } else {
        os << format::series_plain(s);
        for (auto p : cfg.primes) {
            os << "p=" << p << ":";
            for (std::int64_t k = 0; k <= s.cutoff(); ++k) {
                Rat v = s.coefficient(k).evaluate({{zeta::q_var(), Rat(p)}});
                os << " " << v.get_str();
            }
            os << "\n";
        }
    }
    res.output = os.str();
    return res;
}

CommandResult cmd_check(const JobConfig& cfg) {
    CommandResult res;
    std::ostringstream os;
    json report = json::array();
    bool all = true;
    if (cfg.check_kind == "funeq") {
        LieRingSpec spec = resolve_spec(cfg.spec);
        auto rep = zeta::check_local_funeq(spec);
        os << "funeq " << spec.display() << ": " << (rep.holds ? "pass" : "FAIL")
           << " N0=" << rep.N0 << " N1=" << rep.N1 << "\n";
        report.push_back(json{{"check", "funeq"},
                              {"spec", spec.display()},
                              {"pass", rep.holds},
                              {"symmetry", {{"sign", rep.N0 % 2 ? -1 : 1},
                                            {"q_exponent", rep.N0 * (rep.N0 - 1) / 2},
                                            {"t_exponent", rep.N0 + rep.N1}}},
                              {"N0", rep.N0},
                              {"N1", rep.N1}});
        all = rep.holds;
    } else if (cfg.check_kind == "genigusa") {
        Composition n = parse_composition(cfg.spec);
        bool ok = igusafn::check_genigusa_funeq(n);
        int N = combinat::composition_sum(n);
        os << "genigusa (";
        for (size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
        os << "): " << (ok ? "pass" : "FAIL") << "\n";
        report.push_back(json{{"check", "genigusa"},
                              {"composition", n},
                              {"pass", ok},
                              {"symmetry", {{"sign", N % 2 ? -1 : 1}}}});
        all = ok;
    } else if (cfg.check_kind == "dwrho") {
        LieRingSpec spec = resolve_spec(cfg.spec);
        auto d = zeta::descriptor_for(spec);
        int terms = 0;
        for (auto& w : combinat::enum_dyck(d.c())) {
            for (auto& rho : combinat::admissible_compositions(d, w)) {
                RationalFunction block = zeta::D_w_rho(d, w, rho);
                bool ok = zeta::check_dwrho_funeq(d, block);
                os << "dwrho " << w.to_string() << " term " << ++terms << ": "
                   << (ok ? "pass" : "FAIL") << "\n";
                report.push_back(json{{"check", "dwrho"}, {"word", w.to_string()}, {"pass", ok}});
                all = all && ok;
            }
        }
        os << terms << " terms checked\n";
    } else if (cfg.check_kind == "match") {
        int g = std::stoi(cfg.spec);
        // Numerical data of the full block of h_g: they satisfy the radical
        // hypothesis of the weak order identity.
        LieRingSpec spec;
        spec.factors.push_back({zeta::Family::HigherHeisenberg, g, 0, 1, 1});
        auto d = zeta::descriptor_for(spec);
        auto words = combinat::enum_dyck(d.c());
        bool ok = true;
        for (auto& w : words) {
            for (auto& rho : combinat::admissible_compositions(d, w)) {
                auto data = zeta::numerical_data(d, w, rho);
                if (rho.column(1) != Composition(static_cast<size_t>(2 * g), 1)) continue;
                std::map<combinat::Subword, Monomial> y(data.y[0].begin(), data.y[0].end());
                ok = ok && igusafn::igusas_match_check(g, y);
            }
        }
        os << "match g=" << g << ": " << (ok ? "pass" : "FAIL") << "\n";
        report.push_back(json{{"check", "match"}, {"g", g}, {"pass", ok}});
        all = ok;
    } else {
        res.exit_code = 2;
        res.error = "unknown check kind: " + cfg.check_kind;
        return res;
    }
    if (cfg.format == OutputFormat::Json)
        res.output = json{{"results", report}, {"all_pass", all}}.dump() + "\n";
    else
        res.output = os.str();
    res.exit_code = all ? 0 : 1;
    return res;
}

CommandResult cmd_oracle(const JobConfig& cfg) {
    CommandResult res;
    LieRingSpec spec = resolve_spec(cfg.spec);
    std::vector<std::int64_t> primes = cfg.primes.empty() ? std::vector<std::int64_t>{2} : cfg.primes;
    oracle::Budget budget;
    budget.max_hnf = cfg.budget ? cfg.budget : default_budget();
    budget.threads = cfg.threads;

    bool engine_available = !spec.is_custom() && spec.unramified();
    std::optional<TruncatedSeries> series;
    if (engine_available) {
        RationalFunction z = zeta::zeta_ideal(spec);
        series = z.series_expand(zeta::t_var(), cfg.degree);
    }

    std::ostringstream os;
    bool all_match = true, partial = false;
    for (auto p : primes) {
        zeta::BracketTable table =
            spec.is_custom() ? *spec.custom_table : zeta::bracket_table_at(spec, p);
        std::vector<int> A = table.center_indices();
        for (int k = 0; k <= cfg.degree; ++k) {
            os << "p=" << p << " k=" << k << " ";
            Int count;
            try {
                count = oracle::structural_ideal_count(table, A, p, k, budget);
            } catch (const oracle::BudgetExceeded& e) {
                os << "oracle=budget-exceeded(" << e.estimate << ")\n";
                partial = true;
                continue;
            }
            os << "oracle=" << count.get_str();
            if (series) {
                Rat v = series->coefficient(k).evaluate({{zeta::q_var(), Rat(p)}});
                bool match = (v == Rat(count));
                os << " engine=" << v.get_str() << " " << (match ? "match" : "MISMATCH");
                all_match = all_match && match;
            } else {
                os << " engine=oracle-only";
            }
            os << "\n";
        }
    }
    res.output = os.str();
    res.exit_code = partial ? 5 : (all_match ? 0 : 1);
    return res;
}

}  // namespace

CommandResult run_command(const JobConfig& cfg) {
    CommandResult res;
    try {
        if (cfg.command == "compute") return cmd_compute(cfg);
        if (cfg.command == "series") return cmd_series(cfg);
        if (cfg.command == "check") return cmd_check(cfg);
        if (cfg.command == "oracle") return cmd_oracle(cfg);
        res.exit_code = 2;
        res.error = "unknown command: " + cfg.command;
    } catch (const zeta::ResourceGuardError& e) {
        res.exit_code = 3;
        res.error = e.what();
    } catch (const oracle::BudgetExceeded& e) {
        res.exit_code = 5;
        res.error = e.what();
    } catch (const std::invalid_argument& e) {
        res.exit_code = 2;
        res.error = e.what();
    } catch (const std::domain_error& e) {
        std::string what = e.what();
        res.exit_code = what.find("ramified") != std::string::npos ? 4 : 2;
        res.error = what;
    } catch (const std::exception& e) {
        res.exit_code = 1;
        res.error = e.what();
    }
    return res;
}

}  // namespace igusa::cli
