#pragma once

#include <utility>
#include <vector>

#include "crystal/graph.hpp"
#include "crystal/invariants.hpp"
#include "crystal/linalg.hpp"
#include "crystal/quadfield.hpp"

namespace crystal {

using RatVec = std::vector<Rational>;

// Kirchhoff constraint matrix: one row per vertex, +1 per incoming edge,
// -1 per outgoing; loops cancel to 0. Rank is |V| - 1 on a connected graph.
RatMatrix kirchhoff_matrix(const Graph& g);

// Harmonic cochains, i.e. the solution space of the Kirchhoff system, as an
// exact rational basis (rows). Dimension is b1.
struct HarmonicBasis {
    RatMatrix vectors; // b1 x |E|
};

HarmonicBasis harmonic_basis(const Graph& g);

// Rational basis (u, w) of the plane W_H: harmonic cochains annihilating
// every generator of H. Errors DimensionNotTwo when the solution space is
// not 2-dimensional.
std::pair<RatVec, RatVec> wh_basis(const Graph& g, const std::vector<OneChain>& generators);
std::pair<RatVec, RatVec> wh_basis(const Graph& g, const VanishingSubgroup& h);

/* Standard realization as a projective point: coordinates in Q(sqrt(-d)),
   d squarefree, first nonzero coordinate normalized to 1. The canonical
   representative picks the quadratic root with positive imaginary part
   before normalizing; the conjugate point is the mirror crystal. */
struct StandardPoint {
    Int d;
    std::vector<QuadFieldElem> coords;
};

StandardPoint standard_point(const Graph& g, const VanishingSubgroup& h);

// Intersects the projective line spanned by real cochains u, w with the
// tight-frame quadric sum z_i^2 = 0. Shared by both construction routes.
// Errors: DegenerateQuadratic, RealDiscriminant.
StandardPoint standard_point_from_plane(const Graph& g, const RatVec& u, const RatVec& w);

StandardPoint conjugate_point(const StandardPoint& z);

// Exact verdicts on explicit coordinates.
bool verify_harmonic(const Graph& g, const std::vector<QuadFieldElem>& z);
bool verify_tight_frame(const std::vector<QuadFieldElem>& z);

// [z](a): the period of the cochain along a cycle.
QuadFieldElem chain_period(const StandardPoint& z, const OneChain& a);

bool annihilates(const StandardPoint& z, const OneChain& a);

/* Period lattice: the rank-2 Z-module of periods over the homology basis,
   reduced to a canonical pair w1, w2 by integer HNF on the (a, b)
   coordinates after clearing denominators. covol_sq_times_4 is the exact
   rational |w1 conj(w2) - w2 conj(w1)|^2 = 4 * vol(C/T)^2. */
struct PeriodLattice {
    QuadFieldElem w1;
    QuadFieldElem w2;
    Rational covol_sq_times_4;
};

PeriodLattice period_lattice(const Graph& g, const HomologyBasis& hb, const StandardPoint& z); // RankNotTwo

// Exact rational coordinates (s, t) of a field element with respect to the
// lattice basis: p = s*w1 + t*w2.
std::pair<Rational, Rational> lattice_coordinates(const PeriodLattice& lat, const QuadFieldElem& p);

// Energy of the realization; returns the exact square E^2, which equals
// 16 * I(H) / kappa at the standard point.
Rational energy(const Graph& g, const StandardPoint& z, const PeriodLattice& lat);

/* Finite patch of the crystal: base vertex at the origin, positions along
   the spanning tree, lattice translates with |m|, |n| <= window. Degenerate
   images (coincident vertices, zero-length edges) are flagged, not
   rejected. */
struct PlacedCrystal {
    Int d;
    std::vector<QuadFieldElem> base_positions; // indexed by vertex
    PeriodLattice lattice;

    struct PlacedVertex {
        int vertex;
        long m, n;
        QuadFieldElem pos;
    };
    struct PlacedSegment {
        int edge;
        long m, n;
        QuadFieldElem from, to;
    };
    std::vector<PlacedVertex> vertices;
    std::vector<PlacedSegment> segments;

    std::vector<int> zero_length_edges;
    bool has_vertex_collision = false;
};

PlacedCrystal place(const Graph& g, const HomologyBasis& hb, const StandardPoint& z,
                    const PeriodLattice& lat, int window);

// Orthogonal projection of the chain space onto the cycle space, with
// respect to the chain inner product. Exact rational |E| x |E| matrix.
RatMatrix abelian_projection(const Graph& g);

// Alternative construction of the standard point: project the edge vectors
// through the abelian projection and then onto the orthogonal complement of
// H, and intersect the resulting real plane with the quadric. Must agree
// with standard_point up to conjugation.
StandardPoint standard_point_via_projection(const Graph& g, const VanishingSubgroup& h);

} // namespace crystal
