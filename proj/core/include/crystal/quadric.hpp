#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/invariants.hpp"
#include "crystal/realization.hpp"

namespace crystal {

/* Projective quadric cut out by the tight-frame equation sum z_i^2 = 0,
   the Kirchhoff rows, and (optionally) the annihilator rows of a vanishing
   subgroup. substitution is an integer nullspace parameterization of the
   Kirchhoff system (the fundamental-cycle matrix), and reduced_form is the
   resulting positive definite form F = substitution^T * substitution, the
   Gram matrix of the homology basis (det = kappa). */
struct QuadricPresentation {
    int n = 0;
    RatMatrix kirchhoff_rows; // |V| x n
    IntMatrix subgroup_rows;  // one row per generator of H, possibly none
    IntMatrix substitution;   // n x b1
    IntMatrix reduced_form;   // b1 x b1
};

QuadricPresentation quadric_presentation(const Graph& g,
                                         const std::optional<VanishingSubgroup>& h = std::nullopt);

// Exact membership test: every defining equation vanishes.
bool on_quadric(const QuadricPresentation& q, const std::vector<QuadFieldElem>& coords);

// Homogeneous coordinates; entries may mix fields only in the degenerate
// inputs detect_field classifies as "mixed".
struct ProjectivePoint {
    std::vector<QuadFieldElem> coords;
};

enum class FieldKind { Rational, Imaginary, Mixed };

struct FieldInfo {
    FieldKind kind;
    Int d; // meaningful for Imaginary only
};

/* Classifies the field generated by the coordinate ratios: normalizes by
   the first nonzero coordinate, then inspects the surviving radicands
   (already squarefree-canonical by construction of QuadFieldElem). */
FieldInfo detect_field(const ProjectivePoint& p);

struct RecoveredRealization {
    StandardPoint point;
    VanishingSubgroup subgroup;
};

/* Reads a crystal back off a quadric point: checks membership
   (NotOnQuadric), rejects real and rank-1 points (DegenerateRankOne), and
   recovers H as the kernel of the period map on the homology lattice. */
RecoveredRealization point_to_realization(const Graph& g, const ProjectivePoint& p);

struct SecantResult {
    std::vector<QuadFieldElem> coords;
    bool tangent = false; // double root: coords is the base point itself
};

/* Second intersection of the line through base (on the quadric) with
   rational direction dir (satisfying all linear rows). Rational points are
   dense on the quadric over Q(sqrt(-d)); this is the generator.
   Errors: NotOnQuadric, NotALine, LineInQuadric. A tangent line returns
   the base point flagged rather than erroring. */
SecantResult secant_point(const QuadricPresentation& q, const std::vector<QuadFieldElem>& base,
                          const RatVec& dir);

/* Searches for U with U^T F U = G over Z (both positive definite); returns
   nullopt when no isometry exists within the exact coordinate bounds.
   Backtracks over candidate images of basis vectors, matching norms and
   inner products. */
std::optional<IntMatrix> quadratic_form_isometry(const IntMatrix& f, const IntMatrix& g);

} // namespace crystal
