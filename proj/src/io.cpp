#include "polystab/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace polystab {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Polytope parse_polytope(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    std::size_t k = 0;
    std::vector<RatVec> pts;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (n < 0) {
            if (tok.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": expected header 'n k'");
            try {
                n = std::stoi(tok[0]);
                k = static_cast<std::size_t>(std::stoul(tok[1]));
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad header");
            }
            if (n < 1) throw ParseError("line " + std::to_string(lineno) + ": dimension must be >= 1");
            continue;
        }
        if (static_cast<int>(tok.size()) != n)
            throw DimensionMismatch("line " + std::to_string(lineno) + ": expected " +
                                    std::to_string(n) + " coordinates, got " +
                                    std::to_string(tok.size()));
        RatVec v;
        v.reserve(tok.size());
        for (const auto& s : tok) {
            try {
                v.push_back(parse_rational(s));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        pts.push_back(std::move(v));
    }
    if (n < 0) throw ParseError("missing header");
    if (pts.size() != k)
        throw ParseError("header says " + std::to_string(k) + " points, file has " +
                         std::to_string(pts.size()));
    if (pts.size() < static_cast<std::size_t>(n) + 1)
        throw ParseError("need at least n+1 points");
    return enumerate_facets(pts);
}

Polytope load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polytope(buf.str());
}

std::string serialize_polytope(const Polytope& p) {
    std::ostringstream out;
    out << p.dim << " " << p.vertices.size() << "\n";
    for (const auto& v : p.vertices) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << " ";
            out << to_string(v[i]);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rat_json(const Rational& q) { return to_string(q); }

ordered_json vec_json(const RatVec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

}  // namespace

std::string certificate_to_json(const StabilityCertificate& cert, int digits) {
    ordered_json j;
    j["schema_version"] = 1;
    j["input"] = {{"kind", cert.input_kind}, {"source", cert.source}};
    if (cert.has_fano_block) {
        j["fano_polytope"] = {{"dim", cert.dim},
                              {"vertices", cert.fano_vertices},
                              {"facets", cert.fano_facets},
                              {"reflexive", cert.fano_reflexive},
                              {"smooth", cert.fano_smooth}};
    }
    j["polytope"] = {{"dim", cert.dim},
                     {"vertices", cert.moment_vertices},
                     {"facets", cert.moment_facets},
                     {"reflexive", cert.moment_reflexive},
                     {"smooth", cert.moment_smooth}};
    ordered_json C = ordered_json::array();
    for (std::size_t i = 0; i < cert.moments.first.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t k = 0; k < cert.moments.first.size(); ++k)
            row.push_back(to_string(cert.moments.second.at(i, k)));
        C.push_back(row);
    }
    j["moments"] = {{"vol", rat_json(cert.moments.vol)},
                    {"vol_approx", to_decimal_string(cert.moments.vol, digits)},
                    {"b", vec_json(cert.moments.first)},
                    {"C", C}};
    j["potential"] = {{"a", vec_json(cert.potential.a)}, {"c", rat_json(cert.potential.c)}};
    j["sbar"] = rat_json(cert.sbar);
    j["mabuchi"] = {{"value", rat_json(cert.mabuchi)},
                    {"approx", to_decimal_string(cert.mabuchi, digits)},
                    {"argmax", vec_json(cert.mabuchi_argmax)}};
    ordered_json crit;
    crit["applicable"] = cert.criterion.applicable;
    crit["pminus_vertices"] = cert.criterion.pminus_vertex_count;
    crit["vol_pminus"] = rat_json(cert.criterion.vol_pminus);
    crit["vol_pminus_approx"] = to_decimal_string(cert.criterion.vol_pminus, digits);
    crit["integral"] = rat_json(cert.criterion.integral);
    crit["integral_approx"] = to_decimal_string(cert.criterion.integral, digits);
    crit["lhs"] = rat_json(cert.criterion.lhs);
    if (cert.criterion.applicable) {
        crit["rhs"] = rat_json(cert.criterion.rhs);
        crit["lhs_minus_rhs"] = rat_json(cert.criterion.lhs - cert.criterion.rhs);
        crit["lhs_minus_rhs_approx"] =
            to_decimal_string(cert.criterion.lhs - cert.criterion.rhs, digits);
    }
    crit["satisfied"] = cert.criterion.satisfied;
    j["verdicts"] = {{"sufficient_polystable", cert.sufficient_polystable},
                     {"ding_unstable", cert.ding_unstable},
                     {"criterion", crit}};
    j["destabilizer"] = {{"candidate", cert.destabilizer_desc},
                         {"value", rat_json(cert.destabilizer_value)},
                         {"value_approx", to_decimal_string(cert.destabilizer_value, digits)}};
    if (!cert.warning.empty()) j["warning"] = cert.warning;
    j["timing"] = {{"seconds", cert.elapsed_seconds}};
    return j.dump(2) + "\n";
}

std::string certificate_csv_header() {
    return "name,dim,vertices,mabuchi_exact,mabuchi_approx,sufficient_polystable,ding_unstable,"
           "criterion_applicable,criterion_satisfied,error\n";
}

std::string certificate_csv_row(const std::string& name, const StabilityCertificate& cert,
                                int digits) {
    std::ostringstream out;
    out << name << "," << cert.dim << "," << cert.moment_vertices << ","
        << to_string(cert.mabuchi) << "," << to_decimal_string(cert.mabuchi, digits) << ","
        << (cert.sufficient_polystable ? "true" : "false") << ","
        << (cert.ding_unstable ? "true" : "false") << ","
        << (cert.criterion.applicable ? "true" : "false") << ","
        << (cert.criterion.satisfied ? "true" : "false") << ",\n";
    return out.str();
}

std::string certificate_csv_error_row(const std::string& name, const std::string& error) {
    std::string sanitized = error;
    for (auto& ch : sanitized)
        if (ch == ',' || ch == '\n') ch = ';';
    return name + ",,,,,,,,," + sanitized + "\n";
}

}  // namespace polystab
