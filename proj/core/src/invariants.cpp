#include "crystal/invariants.hpp"

#include "crystal/error.hpp"

namespace crystal {

Int chain_inner_product(const OneChain& x, const OneChain& y) {
    check_internal(x.c.size() == y.c.size(), "chain_inner_product size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < x.c.size(); ++i) s += x.c[i] * y.c[i];
    return s;
}

Int tree_number(const Graph& g) {
    const int v = g.vertex_count();
    if (v == 1) return Int(1);
    IntMatrix lap(v, v);
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        if (e.origin == e.terminus) continue;
        lap.at(e.origin, e.origin) += 1;
        lap.at(e.terminus, e.terminus) += 1;
        lap.at(e.origin, e.terminus) -= 1;
        lap.at(e.terminus, e.origin) -= 1;
    }
    IntMatrix minor(v - 1, v - 1);
    for (int i = 1; i < v; ++i)
        for (int j = 1; j < v; ++j) minor.at(i - 1, j - 1) = lap.at(i, j);
    Int kappa = bareiss_determinant(minor);
    check_internal(sgn(kappa) > 0, "tree number must be positive on a connected graph");
    return kappa;
}

Int intersection_determinant(const std::vector<OneChain>& generators) {
    const int k = static_cast<int>(generators.size());
    if (k == 0) return Int(1);
    IntMatrix gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) gram.at(i, j) = chain_inner_product(generators[i], generators[j]);
    return bareiss_determinant(gram);
}

namespace {

std::optional<std::string> subgroup_problem(const Graph& g, const HomologyBasis& hb,
                                            const std::vector<OneChain>& generators,
                                            IntMatrix* hom_out) {
    const int b = g.betti();
    const int k = static_cast<int>(generators.size());
    for (const OneChain& a : generators)
        if (!is_cycle(g, a)) return "NotACycle";

    if (k != b - 2) return "WrongCorank";

    IntMatrix hom(k, b);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < b; ++j) hom.at(i, j) = generators[i].c[hb.nontree_edges[j]];
    }
    if (rank_int(hom) != k) return "NotIndependent";

    SmithResult snf = smith_normal_form(hom);
    for (int t = 0; t < k; ++t)
        if (snf.s.at(t, t) != 1) return "NotDirectSummand";

    if (hom_out) *hom_out = std::move(hom);
    return std::nullopt;
}

} // namespace

VanishingSubgroup make_vanishing_subgroup(const Graph& g, const HomologyBasis& hb,
                                          std::vector<OneChain> generators) {
    IntMatrix hom;
    if (auto code = subgroup_problem(g, hb, generators, &hom))
        fail(code->c_str(), "invalid vanishing subgroup");
    return VanishingSubgroup{std::move(generators), std::move(hom)};
}

bool is_vanishing_subgroup(const Graph& g, const HomologyBasis& hb,
                           const std::vector<OneChain>& generators, std::string* error_code) {
    auto code = subgroup_problem(g, hb, generators, nullptr);
    if (code && error_code) *error_code = *code;
    return !code.has_value();
}

InvariantReport invariant_report(const Graph& g, const VanishingSubgroup& h) {
    InvariantReport r;
    r.kappa = tree_number(g);
    r.i_h = intersection_determinant(h.generators);
    check_internal(sgn(r.i_h) > 0, "intersection determinant of an independent family must be positive");
    r.d = squarefree_part(r.kappa * r.i_h);
    r.vol_albanese_sq = Rational(r.kappa);
    r.vol_generalized_albanese_sq = make_rational(r.kappa, r.i_h);
    r.min_energy_sq = make_rational(16 * r.i_h, r.kappa);
    return r;
}

} // namespace crystal
