#include "crystal/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "crystal/error.hpp"

namespace crystal {

namespace {

using nlohmann::json;

json int_json(const Int& n) {
    if (fits_long(n)) return static_cast<long long>(n.get_si());
    return int_to_string(n);
}

Int int_from_json(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return int_from_string(v.get<std::string>());
    fail("ParseError", what + " must be an integer");
}

std::string str_field(const json& v, const std::string& what) {
    require(v.is_string(), "ParseError", what + " must be a string");
    return v.get<std::string>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        require(allowed.count(it.key()) != 0, "ParseError",
                "unknown key '" + it.key() + "' in " + where);
}

json chain_json(const Graph& g, const OneChain& x) {
    json o = json::object();
    for (int e = 0; e < g.edge_count(); ++e)
        if (sign(x.c[e]) != 0) o[g.edge(e).id] = int_json(x.c[e]);
    return o;
}

json quad_json(const QuadFieldElem& v) {
    json o;
    o["a"] = rational_to_string(v.a);
    o["b"] = rational_to_string(v.b);
    return o;
}

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// "z1 + 2z6 = z3 + z4" from a signed coefficient vector; one side may be
// empty, which prints as "... = 0"
std::string linear_equation(const std::vector<Int>& coef, const std::string& var) {
    auto side = [&](int want) {
        std::string s;
        for (std::size_t i = 0; i < coef.size(); ++i) {
            if (sign(coef[i]) != want) continue;
            if (!s.empty()) s += " + ";
            Int mag = abs_int(coef[i]);
            if (mag != 1) s += int_to_string(mag);
            s += var + std::to_string(i + 1);
        }
        return s;
    };
    std::string lhs = side(1), rhs = side(-1);
    if (lhs.empty()) return rhs + " = 0";
    if (rhs.empty()) return lhs + " = 0";
    return lhs + " = " + rhs;
}

// deduped vertex relations, sign-normalized so the first nonzero entry of
// each coefficient vector is positive
std::vector<std::vector<Int>> vertex_relations(const Graph& g) {
    std::vector<std::vector<Int>> rels;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<Int> coef(g.edge_count(), Int(0));
        for (int e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).terminus == v) coef[e] += 1;
            if (g.edge(e).origin == v) coef[e] -= 1;
        }
        int lead = 0;
        for (const Int& c : coef)
            if ((lead = sign(c)) != 0) break;
        if (lead == 0) continue;
        if (lead < 0)
            for (Int& c : coef) c = -c;
        if (std::find(rels.begin(), rels.end(), coef) == rels.end()) rels.push_back(coef);
    }
    return rels;
}

std::string reduced_polynomial(const IntMatrix& f) {
    std::string s;
    auto term = [&](const Int& c, const std::string& mono) {
        if (sign(c) == 0) return;
        std::string mag = abs_int(c) == 1 ? "" : int_to_string(abs_int(c));
        if (s.empty())
            s += (sign(c) < 0 ? "-" : "") + mag + mono;
        else
            s += std::string(sign(c) < 0 ? " - " : " + ") + mag + mono;
    };
    for (int i = 0; i < f.rows(); ++i) term(f.at(i, i), "w" + std::to_string(i + 1) + "^2");
    for (int i = 0; i < f.rows(); ++i)
        for (int j = i + 1; j < f.cols(); ++j)
            term(Int(2) * f.at(i, j), "w" + std::to_string(i + 1) + "w" + std::to_string(j + 1));
    return s + " = 0";
}

std::pair<double, double> real_xy(const QuadFieldElem& v, double sqrt_d) {
    return {v.a.get_d(), v.b.get_d() * sqrt_d};
}

json census_row_json(const Graph& g, const CensusReport& rep, const CensusRow& row) {
    json r;
    json hnf = json::array();
    for (int i = 0; i < row.hnf.rows(); ++i) {
        json line = json::array();
        for (int j = 0; j < row.hnf.cols(); ++j) line.push_back(int_json(row.hnf.at(i, j)));
        hnf.push_back(line);
    }
    r["hnf"] = hnf;
    json gens = json::array();
    for (const auto& c : row.generators) gens.push_back(chain_json(g, c));
    r["generators"] = gens;
    r["height"] = int_json(row.height_report.height);
    r["height_exact"] = row.height_report.exact;
    r["kappa"] = int_json(rep.kappa);
    r["I"] = int_json(row.i_h);
    r["D"] = int_json(row.d);
    r["is_tiling"] = row.tiling;
    if (!row.reason.empty()) r["reason"] = row.reason;
    r["face_sizes"] = row.face_sizes;
    return r;
}

} // namespace

GraphFile parse_graph_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail("ParseError", e.what());
    }
    require(j.is_object(), "ParseError", "graph file must be a JSON object");
    reject_unknown(j, {"vertices", "edges", "vanishing_group", "name", "notes"}, "graph file");
    require(j.contains("vertices") && j["vertices"].is_array(), "ParseError",
            "graph file needs a \"vertices\" array");
    require(j.contains("edges") && j["edges"].is_array(), "ParseError",
            "graph file needs an \"edges\" array");

    std::vector<std::string> vids;
    for (const auto& v : j["vertices"]) vids.push_back(str_field(v, "vertex id"));
    std::vector<std::tuple<std::string, std::string, std::string>> etuples;
    for (const auto& e : j["edges"]) {
        require(e.is_object(), "ParseError", "each edge must be an object");
        reject_unknown(e, {"id", "from", "to"}, "edge");
        require(e.contains("id") && e.contains("from") && e.contains("to"), "ParseError",
                "each edge needs id, from, to");
        etuples.emplace_back(str_field(e["id"], "edge id"), str_field(e["from"], "edge from"),
                             str_field(e["to"], "edge to"));
    }
    Graph graph(std::move(vids), std::move(etuples));

    bool has_vg = j.contains("vanishing_group");
    std::vector<OneChain> chains;
    if (has_vg) {
        require(j["vanishing_group"].is_array(), "ParseError",
                "\"vanishing_group\" must be an array of chains");
        for (const auto& entry : j["vanishing_group"]) {
            require(entry.is_object(), "ParseError", "each chain must be an object");
            OneChain x = zero_chain(graph);
            for (auto it = entry.begin(); it != entry.end(); ++it)
                x.c[graph.edge_index(it.key())] = int_from_json(it.value(), "chain coefficient");
            chains.push_back(std::move(x));
        }
    }

    std::string name = j.contains("name") ? str_field(j["name"], "name") : "";
    std::string notes = j.contains("notes") ? str_field(j["notes"], "notes") : "";
    return GraphFile{std::move(name), std::move(notes), std::move(graph), has_vg,
                     std::move(chains)};
}

std::string write_graph_file(const GraphFile& gf) {
    json j;
    if (!gf.name.empty()) j["name"] = gf.name;
    if (!gf.notes.empty()) j["notes"] = gf.notes;
    json vs = json::array();
    for (int v = 0; v < gf.graph.vertex_count(); ++v) vs.push_back(gf.graph.vertex_id(v));
    j["vertices"] = vs;
    json es = json::array();
    for (int e = 0; e < gf.graph.edge_count(); ++e) {
        const auto& edge = gf.graph.edge(e);
        json o;
        o["id"] = edge.id;
        o["from"] = gf.graph.vertex_id(edge.origin);
        o["to"] = gf.graph.vertex_id(edge.terminus);
        es.push_back(o);
    }
    j["edges"] = es;
    if (gf.has_vanishing_group) {
        json vg = json::array();
        for (const auto& c : gf.vanishing_group) vg.push_back(chain_json(gf.graph, c));
        j["vanishing_group"] = vg;
    }
    return j.dump(2) + "\n";
}

PointFile parse_point_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail("ParseError", e.what());
    }
    require(j.is_object(), "ParseError", "point file must be a JSON object");
    reject_unknown(j, {"D", "coords", "name", "notes"}, "point file");
    require(j.contains("D"), "ParseError", "point file needs \"D\"");
    require(j.contains("coords") && j["coords"].is_array(), "ParseError",
            "point file needs a \"coords\" array");

    PointFile pf;
    pf.d = int_from_json(j["D"], "D");
    require(sign(pf.d) > 0, "ParseError", "D must be positive");
    require(squarefree_part(pf.d) == pf.d, "ParseError", "D must be squarefree");
    bool any = false;
    for (const auto& c : j["coords"]) {
        require(c.is_object(), "ParseError", "each coordinate must be an object");
        reject_unknown(c, {"a", "b"}, "coordinate");
        require(c.contains("a") && c.contains("b"), "ParseError", "coordinate needs a and b");
        Rational a = rational_from_string(str_field(c["a"], "coordinate a"));
        Rational b = rational_from_string(str_field(c["b"], "coordinate b"));
        if (sgn(a) != 0 || sgn(b) != 0) any = true;
        pf.coords.push_back(make_quad(a, b, pf.d));
    }
    require(any, "ParseError", "point must have a nonzero coordinate");
    if (j.contains("name")) pf.name = str_field(j["name"], "name");
    if (j.contains("notes")) pf.notes = str_field(j["notes"], "notes");
    return pf;
}

std::string write_point_file(const PointFile& pf) {
    json j;
    j["D"] = int_json(pf.d);
    json cs = json::array();
    for (const auto& c : pf.coords) cs.push_back(quad_json(c));
    j["coords"] = cs;
    if (!pf.name.empty()) j["name"] = pf.name;
    if (!pf.notes.empty()) j["notes"] = pf.notes;
    return j.dump(2) + "\n";
}

std::string invariant_report_json(const InvariantReport& rep) {
    json j;
    j["kappa"] = int_json(rep.kappa);
    j["I"] = int_json(rep.i_h);
    j["D"] = int_json(rep.d);
    j["vol_albanese_sq"] = rational_to_string(rep.vol_albanese_sq);
    j["vol_generalized_albanese_sq"] = rational_to_string(rep.vol_generalized_albanese_sq);
    j["min_energy_sq"] = rational_to_string(rep.min_energy_sq);
    return j.dump(2) + "\n";
}

std::string placed_crystal_json(const Graph& g, const PlacedCrystal& pc) {
    json j;
    j["D"] = int_json(pc.d);
    json lat;
    lat["w1"] = quad_json(pc.lattice.w1);
    lat["w2"] = quad_json(pc.lattice.w2);
    j["lattice"] = lat;
    json vs = json::array();
    for (const auto& v : pc.vertices) {
        json o;
        o["vertex"] = g.vertex_id(v.vertex);
        o["m"] = v.m;
        o["n"] = v.n;
        o["pos"] = quad_json(v.pos);
        vs.push_back(o);
    }
    j["vertices"] = vs;
    json ss = json::array();
    for (const auto& s : pc.segments) {
        json o;
        o["edge"] = g.edge(s.edge).id;
        o["m"] = s.m;
        o["n"] = s.n;
        o["from"] = quad_json(s.from);
        o["to"] = quad_json(s.to);
        ss.push_back(o);
    }
    j["segments"] = ss;
    return j.dump(2) + "\n";
}

std::string placed_crystal_svg(const Graph& g, const PlacedCrystal& pc, bool show_lattice) {
    (void)g;
    double sd = std::sqrt(pc.d.get_d());
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    auto grow = [&](std::pair<double, double> p) {
        if (first) {
            minx = maxx = p.first;
            miny = maxy = p.second;
            first = false;
            return;
        }
        minx = std::min(minx, p.first);
        maxx = std::max(maxx, p.first);
        miny = std::min(miny, p.second);
        maxy = std::max(maxy, p.second);
    };
    for (const auto& s : pc.segments) {
        grow(real_xy(s.from, sd));
        grow(real_xy(s.to, sd));
    }
    for (const auto& v : pc.vertices) grow(real_xy(v.pos, sd));
    std::pair<double, double> a1 = real_xy(pc.lattice.w1, sd), a2 = real_xy(pc.lattice.w2, sd);
    if (show_lattice) {
        grow({0, 0});
        grow(a1);
        grow(a2);
    }
    if (first) grow({0, 0});
    double span = std::max(std::max(maxx - minx, maxy - miny), 1e-9);
    double margin = 0.05 * span;
    double sw = 0.015 * span, vr = 0.025 * span;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt12(minx - margin) << " "
        << fmt12(-(maxy + margin)) << " " << fmt12(maxx - minx + 2 * margin) << " "
        << fmt12(maxy - miny + 2 * margin) << "\">\n";
    out << "<g transform=\"scale(1,-1)\">\n";
    for (const auto& s : pc.segments) {
        auto p = real_xy(s.from, sd), q = real_xy(s.to, sd);
        out << "<line x1=\"" << fmt12(p.first) << "\" y1=\"" << fmt12(p.second) << "\" x2=\""
            << fmt12(q.first) << "\" y2=\"" << fmt12(q.second)
            << "\" stroke=\"#2b4a6f\" stroke-width=\"" << fmt6(sw)
            << "\" stroke-linecap=\"round\"/>\n";
    }
    for (const auto& v : pc.vertices) {
        auto p = real_xy(v.pos, sd);
        out << "<circle cx=\"" << fmt12(p.first) << "\" cy=\"" << fmt12(p.second) << "\" r=\""
            << fmt6(vr) << "\" fill=\"#b3393b\"/>\n";
    }
    if (show_lattice) {
        for (auto tip : {a1, a2}) {
            double len = std::hypot(tip.first, tip.second);
            out << "<line x1=\"0\" y1=\"0\" x2=\"" << fmt12(tip.first) << "\" y2=\""
                << fmt12(tip.second) << "\" stroke=\"#3a7d44\" stroke-width=\"" << fmt6(sw)
                << "\"/>\n";
            if (len > 0) {
                double th = std::atan2(tip.second, tip.first);
                for (double dth : {0.45, -0.45}) {
                    double bx = tip.first - 0.12 * len * std::cos(th + dth);
                    double by = tip.second - 0.12 * len * std::sin(th + dth);
                    out << "<line x1=\"" << fmt12(tip.first) << "\" y1=\"" << fmt12(tip.second)
                        << "\" x2=\"" << fmt12(bx) << "\" y2=\"" << fmt12(by)
                        << "\" stroke=\"#3a7d44\" stroke-width=\"" << fmt6(sw) << "\"/>\n";
                }
            }
        }
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string verify_point_json(const Graph& g, const ProjectivePoint& p) {
    json j;
    FieldInfo fi = detect_field(p);
    require(fi.kind != FieldKind::Mixed, "MixedFields",
            "coordinates do not lie in one imaginary quadratic field");
    QuadricPresentation q = quadric_presentation(g);
    bool onq = on_quadric(q, p.coords);
    j["on_quadric"] = onq;
    if (fi.kind == FieldKind::Rational) {
        j["degenerate"] = "rank-one";
        return j.dump(2) + "\n";
    }
    j["D"] = int_json(fi.d);
    if (!onq) return j.dump(2) + "\n";
    try {
        RecoveredRealization rr = point_to_realization(g, p);
        json gens = json::array();
        for (const auto& c : rr.subgroup.generators) gens.push_back(chain_json(g, c));
        j["recovered_H"] = gens;
    } catch (const Error& e) {
        if (std::string(e.code()) != "DegenerateRankOne") throw;
        j["degenerate"] = "rank-one";
    }
    return j.dump(2) + "\n";
}

std::string quadric_text(const Graph& g, const QuadricPresentation& q, bool reduced) {
    std::ostringstream out;
    for (const auto& rel : vertex_relations(g)) out << linear_equation(rel, "z") << "\n";
    for (int i = 0; i < q.subgroup_rows.rows(); ++i) {
        std::vector<Int> coef(q.n);
        for (int j = 0; j < q.n; ++j) coef[j] = q.subgroup_rows.at(i, j);
        out << linear_equation(coef, "z") << "\n";
    }
    for (int i = 0; i < q.n; ++i) out << (i ? " + " : "") << "z" << i + 1 << "^2";
    out << " = 0\n";
    if (reduced) {
        out << "\nreduced form\n" << reduced_polynomial(q.reduced_form) << "\n";
        out << "\nsubstitution\n";
        for (int e = 0; e < q.n; ++e) {
            std::string rhs;
            for (int j = 0; j < q.substitution.cols(); ++j) {
                const Int& c = q.substitution.at(e, j);
                if (sign(c) == 0) continue;
                std::string mag = abs_int(c) == 1 ? "" : int_to_string(abs_int(c));
                if (rhs.empty())
                    rhs += (sign(c) < 0 ? "-" : "") + mag + "w" + std::to_string(j + 1);
                else
                    rhs += std::string(sign(c) < 0 ? " - " : " + ") + mag + "w" +
                           std::to_string(j + 1);
            }
            out << "z" << e + 1 << " = " << (rhs.empty() ? "0" : rhs) << "\n";
        }
    }
    return out.str();
}

std::string quadric_json(const Graph& g, const QuadricPresentation& q, bool reduced) {
    json j;
    j["coordinates"] = q.n;
    json rels = json::array();
    for (const auto& rel : vertex_relations(g)) {
        json line = json::array();
        for (const Int& c : rel) line.push_back(int_json(c));
        rels.push_back(line);
    }
    j["vertex_relations"] = rels;
    if (q.subgroup_rows.rows() > 0) {
        json srs = json::array();
        for (int i = 0; i < q.subgroup_rows.rows(); ++i) {
            json line = json::array();
            for (int c = 0; c < q.subgroup_rows.cols(); ++c)
                line.push_back(int_json(q.subgroup_rows.at(i, c)));
            srs.push_back(line);
        }
        j["subgroup_relations"] = srs;
    }
    j["quadratic"] = "sum_of_squares";
    if (reduced) {
        json form = json::array();
        for (int i = 0; i < q.reduced_form.rows(); ++i) {
            json line = json::array();
            for (int c = 0; c < q.reduced_form.cols(); ++c)
                line.push_back(int_json(q.reduced_form.at(i, c)));
            form.push_back(line);
        }
        json sub = json::array();
        for (int i = 0; i < q.substitution.rows(); ++i) {
            json line = json::array();
            for (int c = 0; c < q.substitution.cols(); ++c)
                line.push_back(int_json(q.substitution.at(i, c)));
            sub.push_back(line);
        }
        json red;
        red["form"] = form;
        red["substitution"] = sub;
        j["reduced"] = red;
    }
    return j.dump(2) + "\n";
}

std::string census_json(const Graph& g, const CensusReport& rep, bool tilings_only) {
    json j;
    j["b1"] = rep.b1;
    j["hmax"] = rep.hmax;
    j["kappa"] = int_json(rep.kappa);
    j["total_subgroups"] = rep.total_subgroups;
    j["tiling_count"] = rep.tiling_count;
    j["rows_truncated"] = rep.rows_truncated;
    json rows = json::array();
    for (const auto& row : rep.rows) {
        if (tilings_only && !row.tiling) continue;
        rows.push_back(census_row_json(g, rep, row));
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string census_table(const Graph& g, const CensusReport& rep, bool tilings_only) {
    std::vector<std::vector<std::string>> lines;
    lines.push_back({"height", "I", "D", "tiling", "faces", "generators"});
    for (const auto& row : rep.rows) {
        if (tilings_only && !row.tiling) continue;
        std::string hs = int_to_string(row.height_report.height);
        if (!row.height_report.exact) hs += "?";
        std::string faces;
        for (std::size_t i = 0; i < row.face_sizes.size(); ++i)
            faces += (i ? "," : "") + std::to_string(row.face_sizes[i]);
        std::string gens;
        for (std::size_t i = 0; i < row.generators.size(); ++i)
            gens += (i ? "; " : "") + chain_to_string(g, row.generators[i]);
        if (gens.empty()) gens = "0";
        lines.push_back({hs, int_to_string(row.i_h), int_to_string(row.d),
                         row.tiling ? "yes" : "no (" + row.reason + ")", faces, gens});
    }
    std::vector<std::size_t> width(lines[0].size(), 0);
    for (const auto& line : lines)
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    std::ostringstream out;
    out << "kappa " << int_to_string(rep.kappa) << ", hmax " << rep.hmax << ", "
        << rep.total_subgroups << " subgroups, " << rep.tiling_count << " tilings";
    if (rep.rows_truncated) out << " (non-tiling rows dropped)";
    out << "\n";
    for (const auto& line : lines) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            out << line[c];
            if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
        }
        out << "\n";
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "FileError", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "FileError", "cannot open '" + path + "' for writing");
    out << text;
    require(out.good(), "FileError", "write to '" + path + "' failed");
}

} // namespace crystal
