#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/graph.hpp"
#include "crystal/invariants.hpp"
#include "crystal/realization.hpp"

namespace crystal {

// Darts: directed copies of the edges. Edge i gives dart 2i (stored
// orientation) and dart 2i+1 (reversal).
inline int dart_edge(int dart) { return dart / 2; }
inline bool dart_forward(int dart) { return (dart & 1) == 0; }
inline int dart_reverse(int dart) { return dart ^ 1; }

/* The crystal drawn on the torus R^2/L: base vertices reduced into a
   fundamental domain of the period lattice, the counterclockwise rotation
   system obtained by exact angle comparison, and the faces traced from it
   by the next-clockwise-from-reversal rule. */
struct TorusEmbedding {
    PlacedCrystal placed;
    std::vector<std::vector<int>> rotation_system; // outgoing darts per vertex
    std::vector<std::vector<int>> faces;           // dart sequences
};

// Draws the standard point on its torus and checks injectivity exactly:
// distinct vertices stay distinct and segments meet only at shared
// endpoints. Errors: EdgeDegenerate, VertexCollision, EdgeCrossing.
TorusEmbedding torus_embedding(const Graph& g, const StandardPoint& z);

// Side counts of the faces, ascending.
std::vector<int> face_sizes(const TorusEmbedding& te);

struct TilingVerdict {
    bool tiling = false;
    std::string reason; // failure code when not a tiling, empty otherwise
    std::optional<TorusEmbedding> embedding;
};

/* Tiling criterion: the torus embedding exists, the Euler relation
   v - e + f = 0 holds (equivalently f = b1 - 1), and every face has at
   least 3 sides. Never throws on a geometric failure; the verdict carries
   the reason instead. */
TilingVerdict is_tiling(const Graph& g, const VanishingSubgroup& h);

/* Boundary chains of the faces, counterclockwise. Checks that the chains
   sum to zero and that the first b1 - 2 of them are a basis of H; a
   violation errors BasisCheckFailed (an embedding bug, not a math fact). */
std::vector<OneChain> fundamental_tiles(const Graph& g, const TorusEmbedding& te,
                                        const VanishingSubgroup& h);

struct HeightReport {
    Int height;
    std::vector<OneChain> witness_basis;
    bool exact = true; // false when the search degraded to the input bound
};

/* h(H): the minimum over Z-bases of H of the largest l1 norm of a basis
   member. Exhaustive for rank <= 4 within the candidate budget; beyond
   that the report carries the bound of the (reduced) input basis with
   exact = false. */
HeightReport height(const VanishingSubgroup& h, long budget = 1000000);

/* All vanishing subgroups of height <= hmax, one representative per
   subgroup, deduplicated by the HNF of the homology coordinates and sorted
   by that key. Errors BudgetExceeded when the bounded search would visit
   more candidates than the budget allows. */
std::vector<VanishingSubgroup> enumerate_vanishing_subgroups(const Graph& g, long hmax,
                                                             long budget = 100000000);

struct CensusRow {
    IntMatrix hnf;                    // canonical basis, homology coordinates
    std::vector<OneChain> generators; // the same basis as edge chains
    Int i_h;
    Int d;
    HeightReport height_report;
    bool tiling = false;
    std::string reason;          // failure code when not a tiling
    std::vector<int> face_sizes; // filled whenever an embedding was traced
};

struct CensusReport {
    Int kappa;
    long hmax = 0;
    int b1 = 0;
    long total_subgroups = 0;
    long tiling_count = 0;
    bool rows_truncated = false; // only tiling rows kept past row_cap
    std::vector<CensusRow> rows;
};

/* Census at hmax = 6 (b1 - 1) unless overridden: every vanishing subgroup
   up to that height, classified by the tiling criterion. Detailed rows are
   kept for every subgroup while the total stays within row_cap; past the
   cap only tiling rows are kept and rows_truncated is set. */
CensusReport tiling_census(const Graph& g, std::optional<long> hmax = std::nullopt,
                           int threads = 1, long budget = 100000000,
                           long row_cap = 20000);

} // namespace crystal
