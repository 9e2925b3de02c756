#include "crystal/realization.hpp"

#include <deque>

#include "crystal/error.hpp"

namespace crystal {

RatMatrix kirchhoff_matrix(const Graph& g) {
    RatMatrix k(g.vertex_count(), g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        k.at(e.terminus, i) += 1;
        k.at(e.origin, i) -= 1;
    }
    return k;
}

HarmonicBasis harmonic_basis(const Graph& g) {
    auto null_vecs = kirchhoff_matrix(g).nullspace();
    check_internal(static_cast<int>(null_vecs.size()) == g.betti(),
                   "harmonic space dimension differs from b1");
    RatMatrix basis(static_cast<int>(null_vecs.size()), g.edge_count());
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < basis.cols(); ++j) basis.at(i, j) = null_vecs[i][j];
    return HarmonicBasis{std::move(basis)};
}

std::pair<RatVec, RatVec> wh_basis(const Graph& g, const std::vector<OneChain>& generators) {
    const int n = g.edge_count();
    RatMatrix sys(g.vertex_count() + static_cast<int>(generators.size()), n);
    RatMatrix kir = kirchhoff_matrix(g);
    for (int i = 0; i < kir.rows(); ++i)
        for (int j = 0; j < n; ++j) sys.at(i, j) = kir.at(i, j);
    for (std::size_t a = 0; a < generators.size(); ++a)
        for (int j = 0; j < n; ++j)
            sys.at(kir.rows() + static_cast<int>(a), j) = Rational(generators[a].c[j]);

    auto null_vecs = sys.nullspace();
    require(null_vecs.size() == 2, "DimensionNotTwo",
            "W_H has dimension " + std::to_string(null_vecs.size()) + ", not 2");
    return {null_vecs[0], null_vecs[1]};
}

std::pair<RatVec, RatVec> wh_basis(const Graph& g, const VanishingSubgroup& h) {
    return wh_basis(g, h.generators);
}

StandardPoint standard_point_from_plane(const Graph& g, const RatVec& u, const RatVec& w) {
    const int n = g.edge_count();
    check_internal(static_cast<int>(u.size()) == n && static_cast<int>(w.size()) == n,
                   "plane basis length mismatch");
    // substitute z = u + tau*w into sum z^2 = 0
    Rational qa, qb, qc;
    for (int i = 0; i < n; ++i) {
        qa += w[i] * w[i];
        qb += u[i] * w[i];
        qc += u[i] * u[i];
    }
    qb *= 2;
    require(sgn(qa) != 0 || sgn(qb) != 0, "DegenerateQuadratic",
            "the quadratic for tau vanishes identically");
    require(sgn(qa) != 0, "DegenerateQuadratic", "leading coefficient vanishes");

    Rational minus_disc = 4 * qa * qc - qb * qb;
    require(sgn(minus_disc) > 0, "RealDiscriminant",
            "discriminant is not negative; the line misses the complex quadric");

    // sqrt(minus_disc) = (s/den) * sqrt(d) with d squarefree
    const Int& p = minus_disc.get_num();
    const Int& den = minus_disc.get_den();
    Int pq = p * den;
    Int d = squarefree_part(pq);
    Int s = isqrt(pq / d); // pq/d is a perfect square by construction
    check_internal(s * s * d == pq, "square extraction failed");

    // tau = (-qb + sqrt(-minus_disc)) / (2 qa), imaginary part positive
    Rational two_a = 2 * qa;
    Rational tau_a = -qb / two_a;
    Rational tau_b = make_rational(s, den) / two_a;
    if (sgn(tau_b) < 0) tau_b = -tau_b; // qa > 0 keeps it positive already

    StandardPoint z;
    z.d = d;
    z.coords.reserve(n);
    for (int i = 0; i < n; ++i)
        z.coords.push_back(make_quad(u[i] + tau_a * w[i], tau_b * w[i], d));

    int first = -1;
    for (int i = 0; i < n; ++i)
        if (!z.coords[i].is_zero()) { first = i; break; }
    check_internal(first >= 0, "standard point is identically zero");
    QuadFieldElem lead = z.coords[first];
    for (auto& c : z.coords) c = quad_div(c, lead);

    bool has_irrational = false;
    for (const auto& c : z.coords)
        if (!c.is_rational()) { has_irrational = true; break; }
    check_internal(has_irrational, "standard point collapsed to a real point");
    return z;
}

StandardPoint standard_point(const Graph& g, const VanishingSubgroup& h) {
    auto [u, w] = wh_basis(g, h);
    StandardPoint z = standard_point_from_plane(g, u, w);
    check_internal(verify_harmonic(g, z.coords), "standard point violates the Kirchhoff laws");
    check_internal(verify_tight_frame(z.coords), "standard point violates the tight-frame identity");
    for (const OneChain& a : h.generators)
        check_internal(annihilates(z, a), "standard point does not annihilate H");
    return z;
}

StandardPoint conjugate_point(const StandardPoint& z) {
    StandardPoint c = z;
    for (auto& x : c.coords) x = quad_conj(x);
    return c;
}

bool verify_harmonic(const Graph& g, const std::vector<QuadFieldElem>& z) {
    if (static_cast<int>(z.size()) != g.edge_count()) return false;
    std::vector<QuadFieldElem> sums(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        sums[e.terminus] = quad_add(sums[e.terminus], z[i]);
        sums[e.origin] = quad_sub(sums[e.origin], z[i]);
    }
    for (const auto& s : sums)
        if (!s.is_zero()) return false;
    return true;
}

bool verify_tight_frame(const std::vector<QuadFieldElem>& z) {
    QuadFieldElem sum;
    for (const auto& c : z) sum = quad_add(sum, quad_mul(c, c));
    return sum.is_zero();
}

QuadFieldElem chain_period(const StandardPoint& z, const OneChain& a) {
    check_internal(a.c.size() == z.coords.size(), "chain_period size mismatch");
    QuadFieldElem s;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (sgn(a.c[i]) == 0) continue;
        s = quad_add(s, quad_mul(quad_rational(Rational(a.c[i])), z.coords[i]));
    }
    return s;
}

bool annihilates(const StandardPoint& z, const OneChain& a) { return chain_period(z, a).is_zero(); }

PeriodLattice period_lattice(const Graph& g, const HomologyBasis& hb, const StandardPoint& z) {
    const int b = static_cast<int>(hb.cycles.size());
    std::vector<QuadFieldElem> periods;
    periods.reserve(b);
    Int den(1);
    for (const OneChain& cyc : hb.cycles) {
        QuadFieldElem p = chain_period(z, cyc);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.a.get_den().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.b.get_den().get_mpz_t());
        periods.push_back(std::move(p));
    }
    IntMatrix coords(b, 2);
    Rational scale(den);
    for (int k = 0; k < b; ++k) {
        Rational a = periods[k].a * scale;
        Rational bq = periods[k].b * scale;
        coords.at(k, 0) = a.get_num();
        coords.at(k, 1) = bq.get_num();
    }
    IntMatrix h = hnf_canonical(coords);
    require(h.rows() == 2, "RankNotTwo",
            "period lattice has rank " + std::to_string(h.rows()) + ", not 2");

    auto elem = [&](int row) {
        return make_quad(make_rational(h.at(row, 0), den), make_rational(h.at(row, 1), den), z.d);
    };
    PeriodLattice lat{elem(0), elem(1), Rational(0)};
    Rational det = lat.w1.a * lat.w2.b - lat.w2.a * lat.w1.b;
    lat.covol_sq_times_4 = 4 * det * det * Rational(z.d);
    check_internal(sgn(lat.covol_sq_times_4) > 0, "period lattice is degenerate");
    return lat;
}

std::pair<Rational, Rational> lattice_coordinates(const PeriodLattice& lat, const QuadFieldElem& p) {
    Rational det = lat.w1.a * lat.w2.b - lat.w2.a * lat.w1.b;
    check_internal(sgn(det) != 0, "lattice basis is singular");
    Rational s = (p.a * lat.w2.b - lat.w2.a * p.b) / det;
    Rational t = (lat.w1.a * p.b - p.a * lat.w1.b) / det;
    return {s, t};
}

Rational energy(const Graph& g, const StandardPoint& z, const PeriodLattice& lat) {
    check_internal(static_cast<int>(z.coords.size()) == g.edge_count(), "energy size mismatch");
    Rational sum;
    for (const auto& c : z.coords) sum += quad_norm_sq(c);
    return 16 * sum * sum / lat.covol_sq_times_4;
}

namespace {

std::vector<QuadFieldElem> tree_positions(const Graph& g, const HomologyBasis& hb,
                                          const StandardPoint& z) {
    int root = 0;
    for (int i = 1; i < g.vertex_count(); ++i)
        if (g.vertex_id(i) < g.vertex_id(root)) root = i;
    std::vector<QuadFieldElem> pos(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    seen[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int i : hb.tree_edges) {
            const auto& e = g.edge(i);
            if (e.origin == x && !seen[e.terminus]) {
                pos[e.terminus] = quad_add(pos[x], z.coords[i]);
                seen[e.terminus] = true;
                queue.push_back(e.terminus);
            } else if (e.terminus == x && !seen[e.origin]) {
                pos[e.origin] = quad_sub(pos[x], z.coords[i]);
                seen[e.origin] = true;
                queue.push_back(e.origin);
            }
        }
    }
    return pos;
}

} // namespace

PlacedCrystal place(const Graph& g, const HomologyBasis& hb, const StandardPoint& z,
                    const PeriodLattice& lat, int window) {
    require(window >= 0, "ParseError", "window radius must be nonnegative");
    PlacedCrystal out;
    out.d = z.d;
    out.lattice = lat;
    out.base_positions = tree_positions(g, hb, z);

    for (int i = 0; i < g.edge_count(); ++i)
        if (z.coords[i].is_zero()) out.zero_length_edges.push_back(i);

    // coincidences on the torus, exact in lattice coordinates
    std::vector<std::pair<Rational, Rational>> frac;
    for (const auto& p : out.base_positions) {
        auto [s, t] = lattice_coordinates(lat, p);
        s -= Rational(floor_div(s.get_num(), s.get_den()));
        t -= Rational(floor_div(t.get_num(), t.get_den()));
        frac.emplace_back(s, t);
    }
    for (std::size_t i = 0; i < frac.size() && !out.has_vertex_collision; ++i)
        for (std::size_t j = i + 1; j < frac.size(); ++j)
            if (frac[i] == frac[j]) { out.has_vertex_collision = true; break; }

    for (long m = -window; m <= window; ++m)
        for (long n = -window; n <= window; ++n) {
            QuadFieldElem shift = quad_add(quad_mul(quad_rational(make_rational(m)), lat.w1),
                                           quad_mul(quad_rational(make_rational(n)), lat.w2));
            for (int x = 0; x < g.vertex_count(); ++x)
                out.vertices.push_back({x, m, n, quad_add(out.base_positions[x], shift)});
            for (int i = 0; i < g.edge_count(); ++i) {
                const auto& e = g.edge(i);
                QuadFieldElem from = quad_add(out.base_positions[e.origin], shift);
                QuadFieldElem to = quad_add(from, z.coords[i]);
                out.segments.push_back({i, m, n, std::move(from), std::move(to)});
            }
        }
    return out;
}

RatMatrix abelian_projection(const Graph& g) {
    HomologyBasis hb = homology_basis(g);
    const int n = g.edge_count();
    const int b = static_cast<int>(hb.cycles.size());
    RatMatrix c(n, b);
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < n; ++i) c.at(i, j) = Rational(hb.cycles[j].c[i]);
    RatMatrix ct = c.transposed();
    RatMatrix gram_inv = ct.mul(c).inverse();
    return c.mul(gram_inv).mul(ct);
}

StandardPoint standard_point_via_projection(const Graph& g, const VanishingSubgroup& h) {
    HomologyBasis hb = homology_basis(g);
    const int n = g.edge_count();
    const int b = static_cast<int>(hb.cycles.size());

    RatMatrix c(n, b);
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < n; ++i) c.at(i, j) = Rational(hb.cycles[j].c[i]);

    // basis of the orthogonal complement of H inside the cycle space
    RatMatrix constraints(h.rank(), b);
    for (int a = 0; a < h.rank(); ++a) {
        for (int j = 0; j < b; ++j) {
            Rational dot;
            for (int i = 0; i < n; ++i) dot += Rational(h.generators[a].c[i]) * c.at(i, j);
            constraints.at(a, j) = dot;
        }
    }
    auto comp = constraints.nullspace();
    require(comp.size() == 2, "DimensionNotTwo",
            "orthogonal complement of H has dimension " + std::to_string(comp.size()) + ", not 2");

    RatMatrix f(n, 2);
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < n; ++i) {
            Rational v;
            for (int j = 0; j < b; ++j) v += c.at(i, j) * comp[k][j];
            f.at(i, k) = v;
        }

    // coordinates of P(P_ab e_i) with respect to (f1, f2)
    RatMatrix p_ab = abelian_projection(g);
    RatMatrix ft = f.transposed();
    RatMatrix coords = ft.mul(f).inverse().mul(ft).mul(p_ab); // 2 x n

    RatVec x(n), y(n);
    for (int i = 0; i < n; ++i) {
        x[i] = coords.at(0, i);
        y[i] = coords.at(1, i);
    }
    return standard_point_from_plane(g, x, y);
}

} // namespace crystal
