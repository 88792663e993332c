#include "willmore/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "willmore/errors.hpp"

namespace willmore {

using nlohmann::json;

nlohmann::json to_json(const Coeff& c) {
    if (c.backend() == Backend::exact)
        return json{{"re", c.rational().re.get_str()}, {"im", c.rational().im.get_str()}};
    auto z = c.to_complex();
    return json{{"re", z.real()}, {"im", z.imag()}};
}

nlohmann::json to_json(const LaurentSeries& s) {
    json terms = json::array();
    for (const auto& [m, c] : s.terms()) {
        json t = to_json(c);
        t["a"] = m.a;
        t["b"] = m.b;
        t["p"] = m.p;
        terms.push_back(std::move(t));
    }
    return json{{"trunc", s.trunc()}, {"terms", std::move(terms)}};
}

nlohmann::json to_json(const TensorField& t) {
    json j;
    j["bidegree"] = {t.bidegree.p, t.bidegree.q};
    if (t.is_scalar()) {
        j["terms"] = to_json(t.scalar())["terms"];
        j["trunc"] = t.scalar().trunc();
    } else {
        json comps = json::array();
        for (const auto& s : t.vector()) comps.push_back(to_json(s));
        j["components"] = std::move(comps);
    }
    return j;
}

namespace {

json coeff_value(const Coeff& c) {
    if (c.backend() == Backend::exact) {
        const auto& g = c.rational();
        if (g.im == 0) return g.re.get_str();
        return json{g.re.get_str(), g.im.get_str()};
    }
    auto z = c.to_complex();
    if (std::abs(z.imag()) < kChopTolerance) return z.real();
    return json{z.real(), z.imag()};
}

json coeff_list(const std::vector<Coeff>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(coeff_value(c));
    return out;
}

} // namespace

nlohmann::json residue_report(const ResidueSet& r) {
    json j;
    j["gamma0"] = coeff_list(r.gamma0);
    json g1 = json::array();
    // wedge components indexed (i,j), i<j, over the ambient dimension
    size_t idx = 0;
    size_t n = r.gamma0.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t k = i + 1; k < n; ++k, ++idx)
            if (idx < r.gamma1.size()) g1.push_back(json{i, k, coeff_value(r.gamma1[idx])});
    j["gamma1"] = std::move(g1);
    j["gamma2"] = json::array({coeff_value(r.gamma2)});
    j["gamma3"] = coeff_list(r.gamma3);
    j["flux"] = coeff_list(r.flux);
    j["closedness_max_defect"] = r.closedness_max_defect;
    j["radius_independent"] = r.radius_independent;
    return j;
}

nlohmann::json form_report_json(const FormReport& r) {
    json j = to_json(r.form);
    j["pole_order"] = r.pole_order;
    j["dbar_defect_max"] = r.dbar_defect.max_abs_coeff();
    j["holomorphic"] = r.is_holomorphic;
    j["meromorphic"] = r.is_meromorphic;
    json lead = json::array();
    for (const auto& [m, c] : r.leading_laurent)
        lead.push_back(json{{"a", m.a}, {"b", m.b}, {"p", m.p}, {"coeff", coeff_value(c)}});
    j["leading_laurent"] = std::move(lead);
    return j;
}

nlohmann::json expansion_report(const BranchExpansion& e, const PairingReport& p) {
    json j;
    j["theta0"] = e.theta0;
    j["A0"] = coeff_list(e.A0);
    j["A1"] = coeff_list(e.A1);
    j["A2"] = coeff_list(e.A2);
    j["C1"] = coeff_list(e.C1);
    j["gamma0"] = coeff_list(e.gamma0);
    j["alpha0"] = coeff_value(e.alpha0);
    j["alpha1"] = coeff_value(e.alpha1);
    j["scale_sq"] = coeff_value(e.scale_sq);
    json pairings = json::object();
    for (const auto& [name, value] : p.pairings) pairings[name] = coeff_value(value);
    j["pairings"] = std::move(pairings);
    j["cancellations_hold"] = p.all_required_zero;
    return j;
}

namespace {

mpq_class parse_rational(const json& v) {
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    if (v.is_string()) {
        mpq_class q(v.get<std::string>());
        q.canonicalize();
        return q;
    }
    throw ConfigError("rational entries must be integers or \"num/den\" strings");
}

Polynomial parse_polynomial(const json& v) {
    Polynomial p;
    for (const auto& entry : v) p.c.emplace_back(parse_rational(entry), mpq_class(0));
    return p;
}

// Minimal TOML subset: key = value with integers, strings and flat arrays,
// plus [section] tables. Enough for surface definition files.
json toml_subset_to_json(std::istream& in) {
    json root = json::object();
    json* scope = &root;
    std::string line;
    auto parse_scalar = [](std::string tok) -> json {
        if (!tok.empty() && tok.front() == '"') {
            if (tok.size() < 2 || tok.back() != '"') throw ConfigError("unterminated string in surface file");
            return tok.substr(1, tok.size() - 2);
        }
        try {
            size_t used = 0;
            long v = std::stol(tok, &used);
            if (used == tok.size()) return v;
        } catch (...) {
        }
        throw ConfigError("unsupported TOML value: " + tok);
    };
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto strip = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string{};
            size_t e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("malformed table header: " + line);
            std::string name = strip(line.substr(1, line.size() - 2));
            root[name] = json::object();
            scope = &root[name];
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value: " + line);
        std::string key = strip(line.substr(0, eq));
        std::string val = strip(line.substr(eq + 1));
        if (!val.empty() && val.front() == '[') {
            if (val.back() != ']') throw ConfigError("unterminated array: " + line);
            json arr = json::array();
            std::stringstream items(val.substr(1, val.size() - 2));
            std::string item;
            while (std::getline(items, item, ',')) {
                item = strip(item);
                if (!item.empty()) arr.push_back(parse_scalar(item));
            }
            (*scope)[key] = std::move(arr);
        } else {
            (*scope)[key] = parse_scalar(val);
        }
    }
    return root;
}

} // namespace

LaurentSeries series_from_json(const nlohmann::json& j, Backend be) {
    LaurentSeries s(be, j.at("trunc").get<int>());
    for (const auto& t : j.at("terms")) {
        int a = t.at("a").get<int>(), b = t.at("b").get<int>(), p = t.at("p").get<int>();
        if (be == Backend::exact) {
            GaussRational g(parse_rational(t.at("re")), parse_rational(t.at("im")));
            s += LaurentSeries::monomial(Coeff(std::move(g)), a, b, p, s.trunc());
        } else {
            std::complex<double> z(t.at("re").get<double>(), t.at("im").get<double>());
            s += LaurentSeries::monomial(Coeff(z), a, b, p, s.trunc());
        }
    }
    return s;
}

SurfaceSpec parse_surface_json(const nlohmann::json& j) {
    SurfaceSpec spec;
    spec.name = j.value("name", "surface");
    spec.order = j.value("order", 12);
    spec.data.ambient = j.value("ambient", 3);
    const json& w = j.at("weierstrass");
    spec.data.g = {parse_polynomial(w.at("g_num")), parse_polynomial(w.at("g_den"))};
    spec.data.f = {parse_polynomial(w.at("f_num")), parse_polynomial(w.at("f_den"))};
    if (j.contains("chart")) {
        const json& c = j.at("chart");
        if (c.size() != 4) throw ConfigError("chart needs four entries a, b, c, d");
        spec.data.chart = Mobius{GaussRational(parse_rational(c[0]), 0), GaussRational(parse_rational(c[1]), 0),
                                 GaussRational(parse_rational(c[2]), 0), GaussRational(parse_rational(c[3]), 0)};
        if (spec.data.chart->jacobian_det().is_zero()) throw ConfigError("chart is not invertible");
    }
    return spec;
}

SurfaceSpec load_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open surface file: " + path);
    char first = 0;
    in >> first;
    in.seekg(0);
    json j;
    if (first == '{') {
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw ConfigError(std::string("malformed JSON surface file: ") + e.what());
        }
    } else {
        j = toml_subset_to_json(in);
        if (j.contains("weierstrass") && !j["weierstrass"].is_object())
            throw ConfigError("weierstrass section missing in TOML surface file");
    }
    try {
        return parse_surface_json(j);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid surface file: ") + e.what());
    }
}

std::string resolve_surface_path(const std::string& arg) {
    namespace fs = std::filesystem;
    if (fs::exists(arg)) return arg;
    const char* corpus = std::getenv("WILLMORE_CORPUS");
    std::string base = corpus ? corpus : "corpus";
    for (const char* ext : {"", ".json", ".toml"}) {
        fs::path candidate = fs::path(base) / (arg + ext);
        if (fs::exists(candidate)) return candidate.string();
    }
    throw ConfigError("cannot resolve surface '" + arg + "'");
}

} // namespace willmore
