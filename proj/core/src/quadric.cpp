#include "crystal/quadric.hpp"

#include <algorithm>
#include <map>

#include "crystal/error.hpp"

namespace crystal {

QuadricPresentation quadric_presentation(const Graph& g,
                                         const std::optional<VanishingSubgroup>& h) {
    QuadricPresentation q;
    q.n = g.edge_count();
    q.kirchhoff_rows = kirchhoff_matrix(g);
    check_internal(q.kirchhoff_rows.rank() == g.vertex_count() - 1,
                   "Kirchhoff system must have rank |V| - 1");

    int k = h ? h->rank() : 0;
    q.subgroup_rows = IntMatrix(k, q.n);
    for (int a = 0; a < k; ++a)
        for (int j = 0; j < q.n; ++j) q.subgroup_rows.at(a, j) = h->generators[a].c[j];

    HomologyBasis hb = homology_basis(g);
    const int b = static_cast<int>(hb.cycles.size());
    q.substitution = IntMatrix(q.n, b);
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < q.n; ++i) q.substitution.at(i, j) = hb.cycles[j].c[i];
    q.reduced_form = q.substitution.transposed().mul(q.substitution);

    // positive definiteness: all leading principal minors positive
    for (int t = 1; t <= b; ++t) {
        IntMatrix lead(t, t);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) lead.at(i, j) = q.reduced_form.at(i, j);
        check_internal(sgn(bareiss_determinant(lead)) > 0, "reduced form is not positive definite");
    }
    return q;
}

bool on_quadric(const QuadricPresentation& q, const std::vector<QuadFieldElem>& coords) {
    if (static_cast<int>(coords.size()) != q.n) return false;
    QuadFieldElem sq;
    for (const auto& c : coords) sq = quad_add(sq, quad_mul(c, c));
    if (!sq.is_zero()) return false;

    for (int i = 0; i < q.kirchhoff_rows.rows(); ++i) {
        QuadFieldElem s;
        for (int j = 0; j < q.n; ++j) {
            if (sgn(q.kirchhoff_rows.at(i, j)) == 0) continue;
            s = quad_add(s, quad_mul(quad_rational(q.kirchhoff_rows.at(i, j)), coords[j]));
        }
        if (!s.is_zero()) return false;
    }
    for (int i = 0; i < q.subgroup_rows.rows(); ++i) {
        QuadFieldElem s;
        for (int j = 0; j < q.n; ++j) {
            if (sgn(q.subgroup_rows.at(i, j)) == 0) continue;
            s = quad_add(s, quad_mul(quad_rational(Rational(q.subgroup_rows.at(i, j))), coords[j]));
        }
        if (!s.is_zero()) return false;
    }
    return true;
}

FieldInfo detect_field(const ProjectivePoint& p) {
    int first = -1;
    for (std::size_t i = 0; i < p.coords.size(); ++i)
        if (!p.coords[i].is_zero()) { first = static_cast<int>(i); break; }
    require(first >= 0, "ParseError", "projective point has no nonzero coordinate");

    std::vector<QuadFieldElem> ratios;
    ratios.reserve(p.coords.size());
    try {
        for (const auto& c : p.coords) ratios.push_back(quad_div(c, p.coords[first]));
    } catch (const Error& e) {
        if (e.code() == "MixedFields") return FieldInfo{FieldKind::Mixed, Int(0)};
        throw;
    }

    Int d(0);
    for (const auto& r : ratios) {
        if (r.is_rational()) continue;
        if (sgn(d) == 0) d = r.d;
        else if (d != r.d) return FieldInfo{FieldKind::Mixed, Int(0)};
    }
    if (sgn(d) == 0) return FieldInfo{FieldKind::Rational, Int(0)};
    return FieldInfo{FieldKind::Imaginary, d};
}

RecoveredRealization point_to_realization(const Graph& g, const ProjectivePoint& p) {
    QuadricPresentation q = quadric_presentation(g);
    FieldInfo field = detect_field(p); // also rejects empty points
    require(field.kind != FieldKind::Mixed, "MixedFields",
            "coordinates do not lie in a single imaginary quadratic field");
    require(on_quadric(q, p.coords), "NotOnQuadric", "point fails the quadric equations");
    require(field.kind == FieldKind::Imaginary, "DegenerateRankOne",
            "real projective point cannot carry a 2-dimensional crystal");

    int first = -1;
    for (std::size_t i = 0; i < p.coords.size(); ++i)
        if (!p.coords[i].is_zero()) { first = static_cast<int>(i); break; }
    StandardPoint z;
    z.d = field.d;
    z.coords.reserve(p.coords.size());
    for (const auto& c : p.coords) z.coords.push_back(quad_div(c, p.coords[first]));

    HomologyBasis hb = homology_basis(g);
    const int b = static_cast<int>(hb.cycles.size());

    Int den(1);
    std::vector<QuadFieldElem> periods;
    for (const OneChain& cyc : hb.cycles) {
        QuadFieldElem v = chain_period(z, cyc);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.a.get_den().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.b.get_den().get_mpz_t());
        periods.push_back(std::move(v));
    }
    IntMatrix m(2, b);
    Rational scale{den};
    for (int j = 0; j < b; ++j) {
        m.at(0, j) = Rational(periods[j].a * scale).get_num();
        m.at(1, j) = Rational(periods[j].b * scale).get_num();
    }
    require(rank_int(m) == 2, "DegenerateRankOne", "periods span a lattice of rank below 2");

    IntMatrix kernel = integer_kernel(m); // b x (b - 2), saturated
    check_internal(kernel.cols() == b - 2, "period kernel has unexpected rank");

    std::vector<OneChain> gens;
    for (int col = 0; col < kernel.cols(); ++col) {
        OneChain a = zero_chain(g);
        for (int j = 0; j < b; ++j)
            if (sgn(kernel.at(j, col)) != 0)
                a = chain_add(a, chain_scale(kernel.at(j, col), hb.cycles[j]));
        gens.push_back(std::move(a));
    }
    VanishingSubgroup h = make_vanishing_subgroup(g, hb, std::move(gens));
    for (const OneChain& a : h.generators)
        check_internal(annihilates(z, a), "recovered subgroup is not annihilated");
    return RecoveredRealization{std::move(z), std::move(h)};
}

SecantResult secant_point(const QuadricPresentation& q, const std::vector<QuadFieldElem>& base,
                          const RatVec& dir) {
    require(static_cast<int>(dir.size()) == q.n, "NotALine", "direction has wrong length");
    require(on_quadric(q, base), "NotOnQuadric", "secant base point fails the quadric equations");

    bool dir_zero = std::all_of(dir.begin(), dir.end(), [](const Rational& v) { return sgn(v) == 0; });
    require(!dir_zero, "NotALine", "zero direction");

    // the direction must satisfy every linear row
    for (int i = 0; i < q.kirchhoff_rows.rows(); ++i) {
        Rational s;
        for (int j = 0; j < q.n; ++j) s += q.kirchhoff_rows.at(i, j) * dir[j];
        require(sgn(s) == 0, "NotALine", "direction violates a Kirchhoff row");
    }
    for (int i = 0; i < q.subgroup_rows.rows(); ++i) {
        Rational s;
        for (int j = 0; j < q.n; ++j) s += Rational(q.subgroup_rows.at(i, j)) * dir[j];
        require(sgn(s) == 0, "NotALine", "direction violates a subgroup row");
    }

    // base proportional to dir is a point, not a line
    {
        int piv = -1;
        for (int j = 0; j < q.n; ++j)
            if (sgn(dir[j]) != 0) { piv = j; break; }
        QuadFieldElem ratio = quad_div(base[piv], quad_rational(dir[piv]));
        bool proportional = true;
        for (int j = 0; j < q.n && proportional; ++j)
            if (!(quad_mul(ratio, quad_rational(dir[j])) == base[j])) proportional = false;
        require(!proportional, "NotALine", "direction is projectively equal to the base point");
    }

    // substitute z + t*dir into the quadric: t * (sum dir^2 * t + 2 sum z.dir) = 0
    Rational dir_sq;
    for (const Rational& v : dir) dir_sq += v * v;
    require(sgn(dir_sq) != 0, "LineInQuadric", "the quadratic in t vanishes identically");

    QuadFieldElem cross;
    for (int j = 0; j < q.n; ++j)
        cross = quad_add(cross, quad_mul(base[j], quad_rational(dir[j])));

    SecantResult res;
    if (cross.is_zero()) {
        res.coords = base;
        res.tangent = true;
        return res;
    }
    QuadFieldElem t = quad_div(quad_mul(quad_rational(Rational(-2)), cross), quad_rational(dir_sq));
    res.coords.reserve(q.n);
    for (int j = 0; j < q.n; ++j)
        res.coords.push_back(quad_add(base[j], quad_mul(t, quad_rational(dir[j]))));

    int first = -1;
    for (int j = 0; j < q.n; ++j)
        if (!res.coords[j].is_zero()) { first = j; break; }
    check_internal(first >= 0, "secant point is identically zero");
    QuadFieldElem lead = res.coords[first];
    for (auto& c : res.coords) c = quad_div(c, lead);
    check_internal(on_quadric(q, res.coords), "secant point escaped the quadric");
    return res;
}

namespace {

// all x with x^T f x == target, |x_i| bounded by the exact Cholesky-free
// bound x_i^2 <= target * (f^-1)_ii
std::vector<std::vector<Int>> vectors_of_norm(const IntMatrix& f, const Int& target) {
    const int n = f.rows();
    RatMatrix finv = RatMatrix::from_int(f).inverse();
    std::vector<Int> bound(n);
    for (int i = 0; i < n; ++i) {
        Rational bb = Rational(target) * finv.at(i, i);
        check_internal(sgn(bb) >= 0, "negative diagonal in inverse form");
        bound[i] = isqrt(bb.get_num() / bb.get_den()) + 1;
    }
    std::vector<std::vector<Int>> out;
    std::vector<Int> x(n);
    // depth-first box scan; desk-scale forms only
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            Int norm(0);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) norm += x[a] * f.at(a, b) * x[b];
            if (norm == target) out.push_back(x);
            return;
        }
        for (Int v = -bound[i]; v <= bound[i]; ++v) {
            x[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

std::optional<IntMatrix> quadratic_form_isometry(const IntMatrix& f, const IntMatrix& g) {
    if (f.rows() != f.cols() || g.rows() != g.cols() || f.rows() != g.rows()) return std::nullopt;
    const int n = f.rows();
    if (bareiss_determinant(f) != bareiss_determinant(g)) return std::nullopt;

    std::map<Int, std::vector<std::vector<Int>>> by_norm;
    for (int j = 0; j < n; ++j) {
        Int t = g.at(j, j);
        if (!by_norm.count(t)) by_norm[t] = vectors_of_norm(f, t);
    }

    std::vector<std::vector<Int>> cols(n);
    auto inner = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        Int s(0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) s += x[a] * f.at(a, b) * y[b];
        return s;
    };

    auto rec = [&](auto&& self, int j) -> bool {
        if (j == n) {
            IntMatrix u(n, n);
            for (int c = 0; c < n; ++c)
                for (int r = 0; r < n; ++r) u.at(r, c) = cols[c][r];
            return is_unimodular(u);
        }
        for (const auto& cand : by_norm[g.at(j, j)]) {
            bool ok = true;
            for (int k = 0; k < j && ok; ++k)
                if (inner(cols[k], cand) != g.at(k, j)) ok = false;
            if (!ok) continue;
            cols[j] = cand;
            if (self(self, j + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;

    IntMatrix u(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) u.at(r, c) = cols[c][r];
    return u;
}

} // namespace crystal
