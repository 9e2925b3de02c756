#pragma once

#include <string>
#include <vector>

#include "crystal/graph.hpp"
#include "crystal/invariants.hpp"
#include "crystal/quadric.hpp"
#include "crystal/realization.hpp"
#include "crystal/tiling.hpp"

namespace crystal {

/* Graph document: {"vertices": [...], "edges": [{"id","from","to"}],
   "vanishing_group": [{edge id: coefficient}, ...]?, "name"?, "notes"?}.
   Unknown keys are rejected. The vanishing group, when present, is a list
   of chains given by their nonzero edge coefficients. */
struct GraphFile {
    std::string name;
    std::string notes;
    Graph graph;
    bool has_vanishing_group = false;
    std::vector<OneChain> vanishing_group;
};

GraphFile parse_graph_file(const std::string& text); // ParseError
std::string write_graph_file(const GraphFile& gf);

/* Point document: {"D": n, "coords": [{"a": "p/q", "b": "r/s"}, ...],
   "name"?, "notes"?}. D is the squarefree radicand of sqrt(-D). */
struct PointFile {
    std::string name;
    std::string notes;
    Int d;
    std::vector<QuadFieldElem> coords;
};

PointFile parse_point_file(const std::string& text); // ParseError
std::string write_point_file(const PointFile& pf);

// All JSON writers emit sorted keys and canonical "p/q" rationals, so the
// bytes are stable across runs for identical inputs.
std::string invariant_report_json(const InvariantReport& rep);
std::string placed_crystal_json(const Graph& g, const PlacedCrystal& pc);
std::string placed_crystal_svg(const Graph& g, const PlacedCrystal& pc, bool show_lattice);
std::string verify_point_json(const Graph& g, const ProjectivePoint& p);

std::string quadric_text(const Graph& g, const QuadricPresentation& q, bool reduced);
std::string quadric_json(const Graph& g, const QuadricPresentation& q, bool reduced);

std::string census_json(const Graph& g, const CensusReport& rep, bool tilings_only);
std::string census_table(const Graph& g, const CensusReport& rep, bool tilings_only);

std::string read_text_file(const std::string& path);                   // FileError
void write_text_file(const std::string& path, const std::string& text); // FileError

} // namespace crystal
