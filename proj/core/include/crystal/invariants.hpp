#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/graph.hpp"
#include "crystal/linalg.hpp"

namespace crystal {

/* Vanishing subgroup H of the first homology lattice: a direct summand of
   corank exactly 2, given by a basis of cycles. hom holds the generators in
   fundamental-cycle coordinates (one row per generator). */
struct VanishingSubgroup {
    std::vector<OneChain> generators;
    IntMatrix hom;

    int rank() const { return static_cast<int>(generators.size()); }
};

// Inner product of chains: matching edges contribute +1, reversed edges -1,
// distinct edges 0, extended bilinearly.
Int chain_inner_product(const OneChain& x, const OneChain& y);

// Number of spanning trees via the matrix-tree theorem: any cofactor of the
// Laplacian, computed fraction-free. Loops are ignored; parallel edges
// count with multiplicity.
Int tree_number(const Graph& g);

// det(<a_i, a_j>) of a generator family; 1 for the empty family.
Int intersection_determinant(const std::vector<OneChain>& generators);

/* Validates a generator list and packages it. Checks, in order:
   every generator is a cycle (NotACycle), the count is b1 - 2
   (WrongCorank), the generators are independent over Q (NotIndependent),
   and the subgroup is a direct summand, i.e. all Smith invariant factors
   are 1 (NotDirectSummand). */
VanishingSubgroup make_vanishing_subgroup(const Graph& g, const HomologyBasis& hb,
                                          std::vector<OneChain> generators);

// Non-throwing variant; fills error_code with the first failed check.
bool is_vanishing_subgroup(const Graph& g, const HomologyBasis& hb,
                           const std::vector<OneChain>& generators,
                           std::string* error_code = nullptr);

struct InvariantReport {
    Int kappa;                          // tree number
    Int i_h;                            // intersection determinant of H
    Int d;                              // squarefree part of kappa * i_h
    Rational vol_albanese_sq;           // kappa
    Rational vol_generalized_albanese_sq; // kappa / i_h
    Rational min_energy_sq;             // 16 * i_h / kappa
};

InvariantReport invariant_report(const Graph& g, const VanishingSubgroup& h);

} // namespace crystal
