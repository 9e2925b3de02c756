#include "crystal/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <thread>
#include <utility>

#include "crystal/error.hpp"

namespace crystal {

namespace {

using std::int64_t;
using i128 = __int128;

int sign128(i128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 floordiv128(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 ceildiv128(i128 a, i128 b) { return -floordiv128(-a, b); }

/* Two exact geometry kernels drive the same predicates. The quadratic one
   works on coordinates p + q sqrt(dd) straight off the standard point; the
   integer one works in the rational (u, w) chart of the same plane, where
   every orientation sign agrees because the change of basis preserves
   orientation up to a global flip that no predicate here depends on. */

struct QR {
    Rational p, q;
};

QR qr_sub(const QR& x, const QR& y) { return {x.p - y.p, x.q - y.q}; }

struct QPoint {
    QR x, y;
};

QPoint qp_sub(const QPoint& a, const QPoint& b) { return {qr_sub(a.x, b.x), qr_sub(a.y, b.y)}; }

QPoint qp_add(const QPoint& a, const QPoint& b) {
    return {{a.x.p + b.x.p, a.x.q + b.x.q}, {a.y.p + b.y.p, a.y.q + b.y.q}};
}

QPoint qp_neg(const QPoint& a) { return {{-a.x.p, -a.x.q}, {-a.y.p, -a.y.q}}; }

QPoint qp_scale(const QPoint& a, long k) {
    Rational s = make_rational(k);
    return {{a.x.p * s, a.x.q * s}, {a.y.p * s, a.y.q * s}};
}

struct QuadKernel {
    Int dd;

    int coord_sign(const QR& v) const { return quad_sign_real(v.p, v.q, dd); }

    int orient(const QPoint& a, const QPoint& b, const QPoint& c) const {
        QR ux = qr_sub(b.x, a.x), uy = qr_sub(b.y, a.y);
        QR vx = qr_sub(c.x, a.x), vy = qr_sub(c.y, a.y);
        Rational d(dd);
        // (ux*vy - uy*vx) with factors p + q sqrt(dd)
        Rational p = ux.p * vy.p + d * ux.q * vy.q - uy.p * vx.p - d * uy.q * vx.q;
        Rational q = ux.p * vy.q + ux.q * vy.p - uy.p * vx.q - uy.q * vx.p;
        return quad_sign_real(p, q, dd);
    }

    int lex_cmp(const QPoint& a, const QPoint& b) const {
        int s = coord_sign(qr_sub(a.x, b.x));
        if (s != 0) return s;
        return coord_sign(qr_sub(a.y, b.y));
    }
};

struct IPoint {
    int64_t x = 0, y = 0;
};

IPoint ip_add(const IPoint& a, const IPoint& b) { return {a.x + b.x, a.y + b.y}; }

struct IntKernel {
    int coord_sign(int64_t v) const { return v > 0 ? 1 : v < 0 ? -1 : 0; }

    int orient(const IPoint& a, const IPoint& b, const IPoint& c) const {
        i128 cross = i128(b.x - a.x) * (c.y - a.y) - i128(b.y - a.y) * (c.x - a.x);
        return sign128(cross);
    }

    int lex_cmp(const IPoint& a, const IPoint& b) const {
        if (a.x != b.x) return a.x < b.x ? -1 : 1;
        if (a.y != b.y) return a.y < b.y ? -1 : 1;
        return 0;
    }
};

// p lies on the line through a, b; true when it falls inside the closed
// segment. Lexicographic order doubles as the order along a fixed line.
template <class K, class P>
bool on_span(const K& k, const P& a, const P& b, const P& p) {
    const P& lo = k.lex_cmp(a, b) <= 0 ? a : b;
    const P& hi = k.lex_cmp(a, b) <= 0 ? b : a;
    return k.lex_cmp(lo, p) <= 0 && k.lex_cmp(p, hi) <= 0;
}

/* Violation test for two closed segments of positive length: any shared
   point that is not an endpoint of both, or any overlap of positive
   length. */
template <class K, class P>
bool segments_conflict(const K& k, const P& a, const P& b, const P& c, const P& d) {
    int o1 = k.orient(a, b, c);
    int o2 = k.orient(a, b, d);
    int o3 = k.orient(c, d, a);
    int o4 = k.orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && o2 == 0) {
        // collinear; with zero-length segments excluded, a single-point
        // contact can only be endpoint against endpoint
        const P& lo1 = k.lex_cmp(a, b) <= 0 ? a : b;
        const P& hi1 = k.lex_cmp(a, b) <= 0 ? b : a;
        const P& lo2 = k.lex_cmp(c, d) <= 0 ? c : d;
        const P& hi2 = k.lex_cmp(c, d) <= 0 ? d : c;
        const P& lo = k.lex_cmp(lo1, lo2) >= 0 ? lo1 : lo2;
        const P& hi = k.lex_cmp(hi1, hi2) <= 0 ? hi1 : hi2;
        return k.lex_cmp(lo, hi) < 0;
    }
    if (o1 == 0 && on_span(k, a, b, c) && k.lex_cmp(a, c) != 0 && k.lex_cmp(b, c) != 0) return true;
    if (o2 == 0 && on_span(k, a, b, d) && k.lex_cmp(a, d) != 0 && k.lex_cmp(b, d) != 0) return true;
    if (o3 == 0 && on_span(k, c, d, a) && k.lex_cmp(c, a) != 0 && k.lex_cmp(d, a) != 0) return true;
    if (o4 == 0 && on_span(k, c, d, b) && k.lex_cmp(c, b) != 0 && k.lex_cmp(d, b) != 0) return true;
    return false;
}

/* Counterclockwise order of nonzero direction vectors: split at the
   positive x-axis, then compare by cross product inside each half turn.
   Tied directions cannot survive the overlap check. */
template <class K, class P>
bool ccw_less(const K& k, const P& u, const P& v) {
    auto half = [&k](const P& p) {
        int sy = k.coord_sign(p.y);
        if (sy != 0) return sy > 0 ? 0 : 1;
        return k.coord_sign(p.x) > 0 ? 0 : 1;
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    P zero{};
    int s = k.orient(zero, u, v);
    check_internal(s != 0, "tied dart directions at a vertex");
    return s > 0;
}

template <class K, class P>
std::vector<std::vector<int>> rotation_systems(const K& k, const Graph& g, const std::vector<P>& dirs) {
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        rot[g.edge(i).origin].push_back(2 * i);
        rot[g.edge(i).terminus].push_back(2 * i + 1);
    }
    for (auto& ring : rot)
        std::sort(ring.begin(), ring.end(),
                  [&](int a, int b) { return ccw_less(k, dirs[a], dirs[b]); });
    return rot;
}

/* Face tracing: after running along dart d, continue with the clockwise
   neighbour of the reversal of d in the rotation at its head. Orbits are
   the counterclockwise face boundaries. */
std::vector<std::vector<int>> trace_faces(const Graph& g, const std::vector<std::vector<int>>& rot) {
    int n = 2 * g.edge_count();
    std::vector<int> pos(n, -1), tail(n, -1);
    for (int v = 0; v < static_cast<int>(rot.size()); ++v)
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
            pos[rot[v][i]] = i;
            tail[rot[v][i]] = v;
        }
    std::vector<std::vector<int>> faces;
    std::vector<char> seen(n, 0);
    for (int d0 = 0; d0 < n; ++d0) {
        if (seen[d0]) continue;
        std::vector<int> face;
        int d = d0;
        do {
            seen[d] = 1;
            face.push_back(d);
            int r = dart_reverse(d);
            const auto& ring = rot[tail[r]];
            int at = pos[r];
            d = ring[(at + static_cast<int>(ring.size()) - 1) % ring.size()];
        } while (d != d0);
        faces.push_back(std::move(face));
    }
    return faces;
}

QPoint qpoint(const QuadFieldElem& v) {
    return {{v.a, Rational(0)}, {Rational(0), v.b}};
}

QuadFieldElem quad_scale_rat(const Rational& s, const QuadFieldElem& v) {
    return quad_mul(QuadFieldElem{s, Rational(0), Int(1)}, v);
}

Rational rat_floor(const Rational& x) { return Rational(floor_div(x.get_num(), x.get_den())); }

long floor_long(const Rational& x) {
    Int f = floor_div(x.get_num(), x.get_den());
    check_internal(fits_long(f), "translate range out of long range");
    return f.get_si();
}

long ceil_long(const Rational& x) { return -floor_long(-x); }

TilingVerdict tiling_verdict(const Graph& g, const StandardPoint& z) {
    TilingVerdict v;
    TorusEmbedding te;
    try {
        te = torus_embedding(g, z);
    } catch (const Error& e) {
        std::string code = e.code();
        if (code == "EdgeDegenerate" || code == "VertexCollision" || code == "EdgeCrossing") {
            v.reason = code;
            return v;
        }
        throw;
    }
    if (static_cast<int>(te.faces.size()) != g.betti() - 1) {
        v.reason = "EulerFailed";
        v.embedding = std::move(te);
        return v;
    }
    for (const auto& f : te.faces)
        if (f.size() < 3) {
            v.reason = "ShortFace";
            v.embedding = std::move(te);
            return v;
        }
    v.tiling = true;
    v.embedding = std::move(te);
    return v;
}

} // namespace

TorusEmbedding torus_embedding(const Graph& g, const StandardPoint& z) {
    g.validate();
    HomologyBasis hb = homology_basis(g);
    PeriodLattice lat = period_lattice(g, hb, z);
    PlacedCrystal pc = place(g, hb, z, lat, 0);
    if (!pc.zero_length_edges.empty())
        fail("EdgeDegenerate",
             "edge " + g.edge(pc.zero_length_edges.front()).id + " has a zero vector");
    if (pc.has_vertex_collision) fail("VertexCollision", "two vertices meet on the torus");

    // pull every base vertex into the fundamental domain
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto st = lattice_coordinates(lat, pc.base_positions[v]);
        QuadFieldElem shift = quad_add(quad_scale_rat(rat_floor(st.first), lat.w1),
                                       quad_scale_rat(rat_floor(st.second), lat.w2));
        pc.base_positions[v] = quad_sub(pc.base_positions[v], shift);
    }
    pc.vertices.clear();
    pc.segments.clear();
    for (int v = 0; v < g.vertex_count(); ++v)
        pc.vertices.push_back({v, 0, 0, pc.base_positions[v]});
    for (int i = 0; i < g.edge_count(); ++i) {
        const QuadFieldElem& from = pc.base_positions[g.edge(i).origin];
        pc.segments.push_back({i, 0, 0, from, quad_add(from, z.coords[i])});
    }

    QuadKernel k{z.d};
    int ne = g.edge_count();

    struct Seg {
        QPoint a, b;
        Rational slo, shi, tlo, thi; // lattice-coordinate bounding box
    };
    std::vector<Seg> segs;
    segs.reserve(ne);
    for (int i = 0; i < ne; ++i) {
        const QuadFieldElem& from = pc.segments[i].from;
        const QuadFieldElem& to = pc.segments[i].to;
        auto c0 = lattice_coordinates(lat, from);
        auto c1 = lattice_coordinates(lat, to);
        segs.push_back({qpoint(from), qpoint(to), std::min(c0.first, c1.first),
                        std::max(c0.first, c1.first), std::min(c0.second, c1.second),
                        std::max(c0.second, c1.second)});
    }

    /* Pairwise crossing scan. Testing edge i against every lattice
       translate of edge j whose bounding box can reach it covers all
       contacts between translates of the two, because contact is
       translation invariant. The range is exact, never a fixed shell. */
    QPoint pw1 = qpoint(lat.w1), pw2 = qpoint(lat.w2);
    for (int i = 0; i < ne; ++i)
        for (int j = i; j < ne; ++j) {
            long mlo = ceil_long(segs[i].slo - segs[j].shi);
            long mhi = floor_long(segs[i].shi - segs[j].slo);
            long nlo = ceil_long(segs[i].tlo - segs[j].thi);
            long nhi = floor_long(segs[i].thi - segs[j].tlo);
            for (long m = mlo; m <= mhi; ++m)
                for (long n = nlo; n <= nhi; ++n) {
                    if (i == j && m == 0 && n == 0) continue;
                    QPoint off = qp_add(qp_scale(pw1, m), qp_scale(pw2, n));
                    QPoint c = qp_add(segs[j].a, off);
                    QPoint d = qp_add(segs[j].b, off);
                    if (segments_conflict(k, segs[i].a, segs[i].b, c, d))
                        fail("EdgeCrossing", "edges " + g.edge(i).id + " and " + g.edge(j).id +
                                                 " collide on the torus");
                }
        }

    std::vector<QPoint> dirs(2 * ne);
    for (int i = 0; i < ne; ++i) {
        dirs[2 * i] = qpoint(z.coords[i]);
        dirs[2 * i + 1] = qp_neg(dirs[2 * i]);
    }

    TorusEmbedding te;
    te.placed = std::move(pc);
    te.rotation_system = rotation_systems(k, g, dirs);
    te.faces = trace_faces(g, te.rotation_system);
    return te;
}

std::vector<int> face_sizes(const TorusEmbedding& te) {
    std::vector<int> ks;
    ks.reserve(te.faces.size());
    for (const auto& f : te.faces) ks.push_back(static_cast<int>(f.size()));
    std::sort(ks.begin(), ks.end());
    return ks;
}

TilingVerdict is_tiling(const Graph& g, const VanishingSubgroup& h) {
    return tiling_verdict(g, standard_point(g, h));
}

std::vector<OneChain> fundamental_tiles(const Graph& g, const TorusEmbedding& te,
                                        const VanishingSubgroup& h) {
    int b1 = g.betti();
    require(static_cast<int>(te.faces.size()) == b1 - 1, "BasisCheckFailed",
            "face count differs from b1 - 1");
    std::vector<OneChain> tiles;
    OneChain sum = zero_chain(g);
    for (const auto& f : te.faces) {
        OneChain w = zero_chain(g);
        for (int d : f) {
            if (dart_forward(d))
                w.c[dart_edge(d)] += 1;
            else
                w.c[dart_edge(d)] -= 1;
        }
        sum = chain_add(sum, w);
        tiles.push_back(std::move(w));
    }
    require(sum.is_zero(), "BasisCheckFailed", "face boundaries do not cancel");
    HomologyBasis hb = homology_basis(g);
    IntMatrix fm(b1 - 2, b1);
    for (int i = 0; i < b1 - 2; ++i) {
        require(is_cycle(g, tiles[i]), "BasisCheckFailed", "face boundary is not a cycle");
        auto coords = homology_coordinates(g, hb, tiles[i]);
        for (int j = 0; j < b1; ++j) fm.at(i, j) = coords[j];
    }
    require(hnf_canonical(fm) == hnf_canonical(h.hom), "BasisCheckFailed",
            "face boundaries do not span the vanishing subgroup");
    return tiles;
}

HeightReport height(const VanishingSubgroup& h, long budget) {
    HeightReport rep;
    rep.height = 0;
    int r = h.rank();
    if (r == 0) return rep;
    int b = h.hom.cols();

    std::vector<OneChain> gen = h.generators;
    IntMatrix hom = h.hom;

    // unit-step pairwise reduction; only sharpens the starting bound
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                if (i == j) continue;
                while (true) {
                    Int ni = chain_norm_l1(gen[i]);
                    OneChain minus = chain_sub(gen[i], gen[j]);
                    OneChain plus = chain_add(gen[i], gen[j]);
                    int dir = 0;
                    if (chain_norm_l1(minus) < ni)
                        dir = -1;
                    else if (chain_norm_l1(plus) < ni)
                        dir = 1;
                    if (dir == 0) break;
                    gen[i] = dir < 0 ? minus : plus;
                    for (int c = 0; c < b; ++c) hom.at(i, c) += Int(dir) * hom.at(j, c);
                    improved = true;
                }
            }
    }

    Int bound = 0;
    for (const auto& c : gen) {
        Int n = chain_norm_l1(c);
        if (n > bound) bound = n;
    }
    rep.height = bound;
    rep.witness_basis = gen;
    rep.exact = false;
    if (r > 4) return rep;

    // independent columns T of the generator matrix; every element
    // x = m . hom of norm <= B keeps its T-coordinates below B in l1, so
    // |m_i| <= B * max_j |T^{-1}[j][i]|
    std::vector<int> cols;
    for (int j = 0; j < b && static_cast<int>(cols.size()) < r; ++j) {
        RatMatrix tm(r, static_cast<int>(cols.size()) + 1);
        for (int i = 0; i < r; ++i) {
            for (int t = 0; t < static_cast<int>(cols.size()); ++t)
                tm.at(i, t) = Rational(hom.at(i, cols[t]));
            tm.at(i, static_cast<int>(cols.size())) = Rational(hom.at(i, j));
        }
        if (tm.rank() == static_cast<int>(cols.size()) + 1) cols.push_back(j);
    }
    check_internal(static_cast<int>(cols.size()) == r, "dependent generator rows");
    RatMatrix tmat(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) tmat.at(i, j) = Rational(hom.at(i, cols[j]));
    RatMatrix tinv = tmat.inverse();

    std::vector<long> bnd(r);
    double box = 1;
    for (int i = 0; i < r; ++i) {
        Rational mx(0);
        for (int j = 0; j < r; ++j) {
            Rational a = abs(tinv.at(j, i));
            if (a > mx) mx = a;
        }
        Rational bi = Rational(bound) * mx;
        Int fl = floor_div(bi.get_num(), bi.get_den());
        if (!fits_long(fl) || fl.get_si() > budget) return rep;
        bnd[i] = fl.get_si();
        box *= 2.0 * static_cast<double>(bnd[i]) + 1.0;
        if (box > static_cast<double>(budget)) return rep;
    }

    struct Cand {
        Int norm;
        std::vector<long> m;
        OneChain chain;
    };
    std::vector<Cand> cands;
    int ne = static_cast<int>(gen[0].c.size());
    std::vector<long> m(r);
    for (int i = 0; i < r; ++i) m[i] = -bnd[i];
    while (true) {
        int lead = 0;
        while (lead < r && m[lead] == 0) ++lead;
        if (lead < r && m[lead] > 0) {
            OneChain x{std::vector<Int>(ne, Int(0))};
            for (int i = 0; i < r; ++i) {
                if (m[i] == 0) continue;
                Int s(m[i]);
                for (int e = 0; e < ne; ++e) x.c[e] += s * gen[i].c[e];
            }
            Int n = chain_norm_l1(x);
            if (n <= bound) cands.push_back({n, m, std::move(x)});
        }
        int k = r - 1;
        while (k >= 0 && m[k] == bnd[k]) {
            m[k] = -bnd[k];
            --k;
        }
        if (k < 0) break;
        ++m[k];
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.m < b.m;
    });

    // smallest prefix whose top element completes a determinant +-1 subset;
    // the reduced basis itself is in range, so the search always lands
    long checks = 0;
    bool over = false;
    std::vector<int> pick;

    std::function<i128(i128*, int, int)> minor_det = [&](i128* a, int n, int stride) -> i128 {
        if (n == 1) return a[0];
        i128 det = 0, s = 1;
        i128 sub[9];
        for (int p = 0; p < n; ++p) {
            for (int i = 1; i < n; ++i) {
                int t = 0;
                for (int j = 0; j < n; ++j)
                    if (j != p) sub[(i - 1) * (n - 1) + t++] = a[i * stride + j];
            }
            // recurse with a compact copy so the stride stays consistent
            i128 m = minor_det(sub, n - 1, n - 1);
            det += s * a[p] * m;
            s = -s;
        }
        return det;
    };

    auto det_of_pick = [&](const std::vector<int>& idx) -> i128 {
        int n = static_cast<int>(idx.size());
        i128 a[16];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i * n + j] = cands[idx[i]].m[j];
        return minor_det(a, n, n);
    };

    for (int kk = 0; kk < static_cast<int>(cands.size()) && !over; ++kk) {
        pick.clear();
        bool found = false;
        std::function<bool(int, int)> choose = [&](int need, int from) -> bool {
            if (over) return false;
            if (need == 0) {
                if (++checks > budget) {
                    over = true;
                    return false;
                }
                std::vector<int> idx = pick;
                idx.push_back(kk);
                return abs128(det_of_pick(idx)) == 1;
            }
            for (int t = from; t <= kk - need; ++t) {
                pick.push_back(t);
                if (choose(need - 1, t + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        found = choose(r - 1, 0);
        if (found) {
            rep.height = cands[kk].norm;
            rep.witness_basis.clear();
            for (int t : pick) rep.witness_basis.push_back(cands[t].chain);
            rep.witness_basis.push_back(cands[kk].chain);
            rep.exact = true;
            return rep;
        }
    }
    return rep;
}

namespace {

/* Census internals. Both enumeration paths produce, per subgroup, the
   canonical HNF basis in homology coordinates; the keys sort in row-major
   lexicographic order. The fast path packs a key into 128 bits and runs
   the whole classification in machine integers; the generic path uses the
   exact matrices end to end. Bounds for the fast path are chosen so every
   intermediate fits the widths used (see the caps in fast_eligible). */

constexpr int FB = 4;  // max Betti number on the fast path
constexpr int FE = 8;  // max edge count
constexpr int FV = 6;  // max vertex count
constexpr long FH = 32; // max height bound

struct FastCtx {
    const Graph* g = nullptr;
    int nv = 0, ne = 0, b = 0, r = 0;
    long hmax = 0;
    long cyc[FB][FE] = {};  // fundamental cycles, edge coordinates
    long F[FB][FB] = {};    // homology Gram matrix C^T C
    long path[FV][FE] = {}; // signed tree path from the root, per vertex
};

bool fast_eligible(const Graph& g, const HomologyBasis& hb, long hmax, FastCtx* cx) {
    int b = g.betti();
    int r = b - 2;
    if (r < 1 || r > 2 || b > FB || g.edge_count() > FE || g.vertex_count() > FV || hmax > FH)
        return false;
    cx->g = &g;
    cx->nv = g.vertex_count();
    cx->ne = g.edge_count();
    cx->b = b;
    cx->r = r;
    cx->hmax = hmax;
    for (int j = 0; j < b; ++j)
        for (int e = 0; e < cx->ne; ++e) {
            const Int& v = hb.cycles[j].c[e];
            if (!fits_long(v) || std::labs(v.get_si()) > 1) return false;
            cx->cyc[j][e] = v.get_si();
        }
    long fmax = 0;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            long s = 0;
            for (int e = 0; e < cx->ne; ++e) s += cx->cyc[i][e] * cx->cyc[j][e];
            cx->F[i][j] = s;
            fmax = std::max(fmax, std::labs(s));
        }
    if (fmax > 8) return false;
    // signed tree paths from vertex 0 via the spanning tree
    std::vector<int> order{0};
    std::vector<char> done(cx->nv, 0);
    done[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int t : hb.tree_edges) {
            const auto& e = g.edge(t);
            int o = -1, sgn = 0;
            if (e.origin == v && !done[e.terminus]) {
                o = e.terminus;
                sgn = 1;
            } else if (e.terminus == v && !done[e.origin]) {
                o = e.origin;
                sgn = -1;
            }
            if (o < 0) continue;
            for (int q = 0; q < cx->ne; ++q) cx->path[o][q] = cx->path[v][q];
            cx->path[o][t] += sgn;
            done[o] = 1;
            order.push_back(o);
        }
    }
    for (char f : done)
        if (!f) return false; // disconnected tree: cannot happen
    return true;
}

struct FastCand {
    int16_t m[FB];
    int16_t chain[FE];
    int norm;
};

std::vector<FastCand> fast_candidates(const FastCtx& cx, long budget) {
    double boxd = 1;
    for (int i = 0; i < cx.b; ++i) boxd *= 2.0 * static_cast<double>(cx.hmax) + 1.0;
    require(boxd <= static_cast<double>(budget), "BudgetExceeded",
            "cycle candidate box exceeds the budget");
    std::vector<FastCand> out;
    long m[FB] = {};
    for (int i = 0; i < cx.b; ++i) m[i] = -cx.hmax;
    while (true) {
        int lead = 0;
        while (lead < cx.b && m[lead] == 0) ++lead;
        if (lead < cx.b && m[lead] > 0) {
            long g = 0;
            for (int i = 0; i < cx.b; ++i) g = std::gcd(g, std::labs(m[i]));
            if (g == 1) {
                long chain[FE] = {};
                long norm = 0;
                for (int e = 0; e < cx.ne; ++e) {
                    long s = 0;
                    for (int j = 0; j < cx.b; ++j) s += m[j] * cx.cyc[j][e];
                    chain[e] = s;
                    norm += std::labs(s);
                }
                if (norm <= cx.hmax) {
                    FastCand c;
                    for (int i = 0; i < FB; ++i) c.m[i] = static_cast<int16_t>(i < cx.b ? m[i] : 0);
                    for (int e = 0; e < FE; ++e)
                        c.chain[e] = static_cast<int16_t>(e < cx.ne ? chain[e] : 0);
                    c.norm = static_cast<int>(norm);
                    out.push_back(c);
                }
            }
        }
        int k = cx.b - 1;
        while (k >= 0 && m[k] == cx.hmax) {
            m[k] = -cx.hmax;
            --k;
        }
        if (k < 0) break;
        ++m[k];
    }
    return out;
}

long lfloordiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// row HNF of a rank-2 integer 2 x b matrix, in place
void hnf2(long* r1, long* r2, int b) {
    int p = 0;
    while (p < b && r1[p] == 0 && r2[p] == 0) ++p;
    check_internal(p < b, "zero pair in hnf2");
    while (r2[p] != 0) {
        long q = lfloordiv(r1[p], r2[p]);
        for (int j = p; j < b; ++j) r1[j] -= q * r2[j];
        for (int j = p; j < b; ++j) std::swap(r1[j], r2[j]);
    }
    if (r1[p] < 0)
        for (int j = p; j < b; ++j) r1[j] = -r1[j];
    int p2 = p + 1;
    while (p2 < b && r2[p2] == 0) ++p2;
    check_internal(p2 < b, "rank-deficient pair in hnf2");
    if (r2[p2] < 0)
        for (int j = p2; j < b; ++j) r2[j] = -r2[j];
    long q = lfloordiv(r1[p2], r2[p2]);
    if (q != 0)
        for (int j = p2; j < b; ++j) r1[j] -= q * r2[j];
}

using Key = unsigned __int128;

Key pack_entry(Key k, long v) {
    check_internal(v >= -32768 && v < 32768, "census key entry out of range");
    return (k << 16) | static_cast<Key>(static_cast<std::uint16_t>(v + 32768));
}

std::vector<Key> fast_keys(const FastCtx& cx, const std::vector<FastCand>& cands, long budget) {
    std::vector<Key> keys;
    if (cx.r == 1) {
        keys.reserve(cands.size());
        for (const auto& c : cands) {
            Key k = 0;
            for (int j = 0; j < cx.b; ++j) k = pack_entry(k, c.m[j]);
            keys.push_back(k);
        }
    } else {
        std::size_t K = cands.size();
        require(static_cast<double>(K) * static_cast<double>(K) / 2.0 <= static_cast<double>(budget),
                "BudgetExceeded", "candidate pair scan exceeds the budget");
        for (std::size_t i = 0; i < K; ++i) {
            const auto& mi = cands[i].m;
            for (std::size_t j = i + 1; j < K; ++j) {
                const auto& mj = cands[j].m;
                long g = 0;
                for (int a = 0; a < cx.b && g != 1; ++a)
                    for (int b2 = a + 1; b2 < cx.b; ++b2) {
                        long mm = static_cast<long>(mi[a]) * mj[b2] -
                                  static_cast<long>(mi[b2]) * mj[a];
                        g = std::gcd(g, std::labs(mm));
                        if (g == 1) break;
                    }
                if (g != 1) continue; // not saturated (or dependent)
                long r1[FB], r2[FB];
                for (int t = 0; t < cx.b; ++t) {
                    r1[t] = mi[t];
                    r2[t] = mj[t];
                }
                hnf2(r1, r2, cx.b);
                Key k = 0;
                for (int t = 0; t < cx.b; ++t) k = pack_entry(k, r1[t]);
                for (int t = 0; t < cx.b; ++t) k = pack_entry(k, r2[t]);
                keys.push_back(k);
            }
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

void unpack_key(const FastCtx& cx, Key k, long hom[2][FB]) {
    int total = cx.r * cx.b;
    for (int i = total - 1; i >= 0; --i) {
        long v = static_cast<long>(k & 0xffff) - 32768;
        hom[i / cx.b][i % cx.b] = v;
        k >>= 16;
    }
}

struct FastVerdict {
    bool tiling = false;
    const char* reason = nullptr; // null when tiling
    bool traced = false;
    int nsizes = 0;
    int sizes[2 * FE] = {};
};

/* Classification in the rational chart: u, w span the plane annihilating
   H, positions and periods are integer vectors there, and every predicate
   is a determinant sign, which the chart preserves. */
FastVerdict fast_classify(const FastCtx& cx, long hom[2][FB]) {
    FastVerdict out;
    const Graph& g = *cx.g;

    long A[2][FB];
    for (int i = 0; i < cx.r; ++i)
        for (int j = 0; j < cx.b; ++j) {
            long s = 0;
            for (int t = 0; t < cx.b; ++t) s += hom[i][t] * cx.F[t][j];
            A[i][j] = s;
        }

    // integer kernel of A by unimodular column elimination
    long M[2][FB], Vm[FB][FB] = {};
    for (int i = 0; i < cx.r; ++i)
        for (int j = 0; j < cx.b; ++j) M[i][j] = A[i][j];
    for (int j = 0; j < cx.b; ++j) Vm[j][j] = 1;
    int act = 0;
    for (int row = 0; row < cx.r; ++row) {
        while (true) {
            int best = -1;
            for (int j = act; j < cx.b; ++j)
                if (M[row][j] != 0 && (best < 0 || std::labs(M[row][j]) < std::labs(M[row][best])))
                    best = j;
            check_internal(best >= 0, "dependent subgroup rows in fast_classify");
            bool clean = true;
            for (int j = act; j < cx.b; ++j) {
                if (j == best || M[row][j] == 0) continue;
                long q = M[row][j] / M[row][best];
                if (q != 0) {
                    for (int i = row; i < cx.r; ++i) M[i][j] -= q * M[i][best];
                    for (int i = 0; i < cx.b; ++i) Vm[i][j] -= q * Vm[i][best];
                }
                if (M[row][j] != 0) clean = false;
            }
            if (clean) {
                for (int i = 0; i < cx.r; ++i) std::swap(M[i][best], M[i][act]);
                for (int i = 0; i < cx.b; ++i) std::swap(Vm[i][best], Vm[i][act]);
                ++act;
                break;
            }
        }
    }
    check_internal(cx.b - act == 2, "kernel dimension is not 2");
    long um[FB], wm[FB];
    for (int i = 0; i < cx.b; ++i) {
        um[i] = Vm[i][act];
        wm[i] = Vm[i][act + 1];
    }
    long gu = 0, gw = 0;
    for (int i = 0; i < cx.b; ++i) {
        gu = std::gcd(gu, std::labs(um[i]));
        gw = std::gcd(gw, std::labs(wm[i]));
    }
    for (int i = 0; i < cx.b; ++i) {
        um[i] /= gu;
        wm[i] /= gw;
    }

    long u[FE], w[FE];
    for (int e = 0; e < cx.ne; ++e) {
        long su = 0, sw = 0;
        for (int j = 0; j < cx.b; ++j) {
            su += um[j] * cx.cyc[j][e];
            sw += wm[j] * cx.cyc[j][e];
        }
        u[e] = su;
        w[e] = sw;
        if (su == 0 && sw == 0) {
            out.reason = "EdgeDegenerate";
            return out;
        }
    }

    // period lattice rows F.um, F.wm folded into an HNF pair (a ab; 0 c)
    i128 a = 0, ab = 0, c = 0;
    for (int j = 0; j < cx.b; ++j) {
        i128 x = 0, y = 0;
        for (int t = 0; t < cx.b; ++t) {
            x += i128(cx.F[j][t]) * um[t];
            y += i128(cx.F[j][t]) * wm[t];
        }
        while (x != 0) {
            i128 q = (a == 0) ? 0 : floordiv128(a, x);
            i128 t1 = a - q * x, t2 = ab - q * y;
            a = x;
            ab = y;
            x = t1;
            y = t2;
        }
        c = gcd128(c, y);
    }
    check_internal(a != 0 && c != 0, "degenerate period lattice in fast_classify");
    if (a < 0) {
        a = -a;
        ab = -ab;
    }
    if (c < 0) c = -c;
    ab -= floordiv128(ab, c) * c;

    // reduced vertex positions in the chart
    IPoint pos[FV];
    for (int v = 0; v < cx.nv; ++v) {
        i128 px = 0, py = 0;
        for (int e = 0; e < cx.ne; ++e) {
            px += i128(cx.path[v][e]) * u[e];
            py += i128(cx.path[v][e]) * w[e];
        }
        i128 k1 = floordiv128(px, a);
        px -= k1 * a;
        py -= k1 * ab;
        i128 k2 = floordiv128(py, c);
        py -= k2 * c;
        pos[v] = {static_cast<int64_t>(px), static_cast<int64_t>(py)};
    }

    // vertex collisions: position differences landing in the lattice
    for (int p = 0; p < cx.nv; ++p)
        for (int q = p + 1; q < cx.nv; ++q) {
            i128 dx = i128(pos[p].x) - pos[q].x;
            i128 dy = i128(pos[p].y) - pos[q].y;
            if (dx % a != 0) continue;
            i128 k1 = dx / a;
            i128 rem = dy - k1 * ab;
            if (rem % c == 0) {
                out.reason = "VertexCollision";
                return out;
            }
        }

    IPoint sa[FE], sb[FE];
    int64_t xlo[FE], xhi[FE], ylo[FE], yhi[FE];
    for (int e = 0; e < cx.ne; ++e) {
        sa[e] = pos[g.edge(e).origin];
        sb[e] = {sa[e].x + u[e], sa[e].y + w[e]};
        xlo[e] = std::min(sa[e].x, sb[e].x);
        xhi[e] = std::max(sa[e].x, sb[e].x);
        ylo[e] = std::min(sa[e].y, sb[e].y);
        yhi[e] = std::max(sa[e].y, sb[e].y);
    }

    IntKernel k;
    long steps = 0;
    for (int i = 0; i < cx.ne; ++i)
        for (int j = i; j < cx.ne; ++j) {
            i128 mlo = ceildiv128(i128(xlo[i]) - xhi[j], a);
            i128 mhi = floordiv128(i128(xhi[i]) - xlo[j], a);
            check_internal(mhi - mlo < (1 << 26), "translate scan blew up");
            for (i128 m = mlo; m <= mhi; ++m) {
                check_internal(++steps < (1L << 28), "translate scan blew up");
                i128 ox = m * a;
                i128 ybase = m * ab;
                i128 nlo = ceildiv128(i128(ylo[i]) - yhi[j] - ybase, c);
                i128 nhi = floordiv128(i128(yhi[i]) - ylo[j] - ybase, c);
                for (i128 n = nlo; n <= nhi; ++n) {
                    if (i == j && m == 0 && n == 0) continue;
                    i128 oy = ybase + n * c; // narrow: within the bbox gap
                    IPoint off{static_cast<int64_t>(ox), static_cast<int64_t>(oy)};
                    IPoint ca = ip_add(sa[j], off), cb = ip_add(sb[j], off);
                    if (segments_conflict(k, sa[i], sb[i], ca, cb)) {
                        out.reason = "EdgeCrossing";
                        return out;
                    }
                }
            }
        }

    std::vector<IPoint> dirs(2 * cx.ne);
    for (int e = 0; e < cx.ne; ++e) {
        dirs[2 * e] = {u[e], w[e]};
        dirs[2 * e + 1] = {-u[e], -w[e]};
    }
    auto rot = rotation_systems(k, g, dirs);
    auto faces = trace_faces(g, rot);
    out.traced = true;
    out.nsizes = static_cast<int>(faces.size());
    for (int i = 0; i < out.nsizes; ++i) out.sizes[i] = static_cast<int>(faces[i].size());
    std::sort(out.sizes, out.sizes + out.nsizes);
    if (static_cast<int>(faces.size()) != cx.b - 1) {
        out.reason = "EulerFailed";
        return out;
    }
    for (const auto& f : faces)
        if (f.size() < 3) {
            out.reason = "ShortFace";
            return out;
        }
    out.tiling = true;
    return out;
}

std::vector<OneChain> chains_from_hom(const HomologyBasis& hb, const IntMatrix& hom) {
    std::vector<OneChain> gens;
    int ne = static_cast<int>(hb.cycles.empty() ? 0 : hb.cycles[0].c.size());
    for (int i = 0; i < hom.rows(); ++i) {
        OneChain x{std::vector<Int>(ne, Int(0))};
        for (int j = 0; j < hom.cols(); ++j) {
            if (sign(hom.at(i, j)) == 0) continue;
            for (int e = 0; e < ne; ++e) x.c[e] += hom.at(i, j) * hb.cycles[j].c[e];
        }
        gens.push_back(std::move(x));
    }
    return gens;
}

// generic enumeration: every saturated corank-2 subgroup with a generating
// set of cycles of norm <= hmax, as sorted canonical HNF matrices
std::vector<IntMatrix> general_keys(const Graph& g, const HomologyBasis& hb, long hmax,
                                    long budget) {
    int b = g.betti();
    int r = b - 2;
    double boxd = 1;
    for (int i = 0; i < b; ++i) boxd *= 2.0 * static_cast<double>(hmax) + 1.0;
    require(boxd <= static_cast<double>(budget), "BudgetExceeded",
            "cycle candidate box exceeds the budget");

    struct Cand {
        std::vector<long> m;
    };
    std::vector<Cand> cands;
    std::vector<long> m(b, -hmax);
    Int bound(hmax);
    while (true) {
        int lead = 0;
        while (lead < b && m[lead] == 0) ++lead;
        if (lead < b && m[lead] > 0) {
            long gg = 0;
            for (long v : m) gg = std::gcd(gg, std::labs(v));
            if (gg == 1) {
                Int norm = 0;
                int ne = g.edge_count();
                for (int e = 0; e < ne; ++e) {
                    Int s(0);
                    for (int j = 0; j < b; ++j)
                        if (m[j] != 0) s += Int(m[j]) * hb.cycles[j].c[e];
                    norm += abs_int(s);
                }
                if (norm <= bound) cands.push_back({m});
            }
        }
        int k = b - 1;
        while (k >= 0 && m[k] == hmax) {
            m[k] = -hmax;
            --k;
        }
        if (k < 0) break;
        ++m[k];
    }

    std::set<std::vector<long>> seen;
    long used = 0;
    int K = static_cast<int>(cands.size());
    std::vector<int> idx(r);
    std::function<void(int, int)> scan = [&](int slot, int from) {
        if (slot == r) {
            require(++used <= budget, "BudgetExceeded", "subset scan exceeds the budget");
            // saturated iff the r x r minors are coprime
            i128 gg = 0;
            std::vector<int> colpick(r);
            std::function<void(int, int)> minors = [&](int cslot, int cfrom) {
                if (gg == 1) return;
                if (cslot == r) {
                    i128 av[4][4];
                    for (int i = 0; i < r; ++i)
                        for (int j = 0; j < r; ++j) av[i][j] = cands[idx[i]].m[colpick[j]];
                    // small determinant by elimination
                    i128 det = 1;
                    for (int cc = 0; cc < r; ++cc) {
                        int p = -1;
                        for (int i = cc; i < r; ++i)
                            if (av[i][cc] != 0) {
                                p = i;
                                break;
                            }
                        if (p < 0) {
                            det = 0;
                            break;
                        }
                        if (p != cc) {
                            for (int j = 0; j < r; ++j) std::swap(av[p][j], av[cc][j]);
                            det = -det;
                        }
                        for (int i = cc + 1; i < r; ++i)
                            while (av[i][cc] != 0) {
                                i128 q = av[i][cc] / av[cc][cc];
                                for (int j = cc; j < r; ++j) av[i][j] -= q * av[cc][j];
                                if (av[i][cc] != 0)
                                    for (int j = cc; j < r; ++j) std::swap(av[i][j], av[cc][j]);
                            }
                        det *= av[cc][cc];
                    }
                    gg = gcd128(gg, det);
                    return;
                }
                for (int t = cfrom; t <= b - (r - cslot); ++t) {
                    colpick[cslot] = t;
                    minors(cslot + 1, t + 1);
                }
            };
            minors(0, 0);
            if (gg != 1) return;
            IntMatrix hom(r, b);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < b; ++j) hom.at(i, j) = Int(cands[idx[i]].m[j]);
            IntMatrix key = hnf_canonical(hom);
            std::vector<long> flat;
            flat.reserve(static_cast<std::size_t>(r) * b);
            for (int i = 0; i < key.rows(); ++i)
                for (int j = 0; j < b; ++j) {
                    check_internal(fits_long(key.at(i, j)), "census key entry out of range");
                    flat.push_back(key.at(i, j).get_si());
                }
            seen.insert(std::move(flat));
            return;
        }
        for (int t = from; t <= K - (r - slot); ++t) {
            idx[slot] = t;
            scan(slot + 1, t + 1);
        }
    };
    if (r >= 1 && K >= r) scan(0, 0);

    std::vector<IntMatrix> keys;
    keys.reserve(seen.size());
    for (const auto& flat : seen) {
        IntMatrix hom(r, b);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < b; ++j) hom.at(i, j) = Int(flat[static_cast<std::size_t>(i) * b + j]);
        keys.push_back(std::move(hom));
    }
    return keys; // set order is already the row-major lexicographic order
}

CensusRow slow_row(const Graph& g, const HomologyBasis& hb, const IntMatrix& hom,
                   long height_budget) {
    CensusRow row;
    row.hnf = hom;
    VanishingSubgroup h = make_vanishing_subgroup(g, hb, chains_from_hom(hb, hom));
    row.generators = h.generators;
    row.i_h = intersection_determinant(h.generators);
    StandardPoint z = standard_point(g, h);
    row.d = z.d;
    row.height_report = height(h, height_budget);
    TilingVerdict v = tiling_verdict(g, z);
    row.tiling = v.tiling;
    row.reason = v.reason;
    if (v.embedding) row.face_sizes = face_sizes(*v.embedding);
    return row;
}

CensusRow fast_row(const FastCtx& cx, const HomologyBasis& hb, long hom[2][FB],
                   const FastVerdict& fv, const Int& kappa, long height_budget) {
    CensusRow row;
    IntMatrix hm(cx.r, cx.b);
    for (int i = 0; i < cx.r; ++i)
        for (int j = 0; j < cx.b; ++j) hm.at(i, j) = Int(hom[i][j]);
    row.hnf = hm;
    row.generators = chains_from_hom(hb, hm);
    // the rows come out of a saturation test, so skip the full validation
    VanishingSubgroup h{row.generators, hm};
    row.i_h = intersection_determinant(row.generators);
    row.d = squarefree_part(kappa * row.i_h);
    row.height_report = height(h, height_budget);
    row.tiling = fv.tiling;
    row.reason = fv.reason == nullptr ? "" : fv.reason;
    if (fv.traced) row.face_sizes.assign(fv.sizes, fv.sizes + fv.nsizes);
    return row;
}

} // namespace

std::vector<VanishingSubgroup> enumerate_vanishing_subgroups(const Graph& g, long hmax,
                                                             long budget) {
    g.validate();
    require(hmax >= 1, "BadBound", "hmax must be at least 1");
    HomologyBasis hb = homology_basis(g);
    int b = g.betti();
    std::vector<VanishingSubgroup> out;
    if (b == 2) {
        out.push_back(make_vanishing_subgroup(g, hb, std::vector<OneChain>{}));
        return out;
    }
    FastCtx cx;
    if (fast_eligible(g, hb, hmax, &cx)) {
        auto cands = fast_candidates(cx, budget);
        auto keys = fast_keys(cx, cands, budget);
        out.reserve(keys.size());
        for (Key k : keys) {
            long hom[2][FB];
            unpack_key(cx, k, hom);
            IntMatrix hm(cx.r, cx.b);
            for (int i = 0; i < cx.r; ++i)
                for (int j = 0; j < cx.b; ++j) hm.at(i, j) = Int(hom[i][j]);
            out.push_back(make_vanishing_subgroup(g, hb, chains_from_hom(hb, hm)));
        }
        return out;
    }
    for (const IntMatrix& hom : general_keys(g, hb, hmax, budget))
        out.push_back(make_vanishing_subgroup(g, hb, chains_from_hom(hb, hom)));
    return out;
}

CensusReport tiling_census(const Graph& g, std::optional<long> hmax_opt, int threads, long budget,
                           long row_cap) {
    g.validate();
    HomologyBasis hb = homology_basis(g);
    int b1 = g.betti();
    long hmax = hmax_opt ? *hmax_opt : 6L * (b1 - 1);
    require(hmax >= 1, "BadBound", "hmax must be at least 1");

    CensusReport rep;
    rep.kappa = tree_number(g);
    rep.hmax = hmax;
    rep.b1 = b1;

    const long height_budget = 1000000;

    if (b1 == 2) {
        IntMatrix empty(0, b1);
        rep.rows.push_back(slow_row(g, hb, empty, height_budget));
        rep.total_subgroups = 1;
        rep.tiling_count = rep.rows.back().tiling ? 1 : 0;
        return rep;
    }

    FastCtx cx;
    if (fast_eligible(g, hb, hmax, &cx)) {
        auto cands = fast_candidates(cx, budget);
        auto keys = fast_keys(cx, cands, budget);
        cands.clear();
        cands.shrink_to_fit();
        rep.total_subgroups = static_cast<long>(keys.size());
        bool store_all = rep.total_subgroups <= row_cap;
        rep.rows_truncated = !store_all;

        int nthreads = std::max(1, threads);
        if (nthreads == 1) {
            for (Key k : keys) {
                long hom[2][FB];
                unpack_key(cx, k, hom);
                FastVerdict fv = fast_classify(cx, hom);
                if (fv.tiling) ++rep.tiling_count;
                if (store_all || fv.tiling)
                    rep.rows.push_back(fast_row(cx, hb, hom, fv, rep.kappa, height_budget));
            }
        } else {
            struct Part {
                long tilings = 0;
                std::vector<CensusRow> rows;
            };
            std::vector<Part> parts(nthreads);
            std::vector<std::thread> pool;
            std::size_t chunk = (keys.size() + nthreads - 1) / nthreads;
            for (int t = 0; t < nthreads; ++t) {
                std::size_t lo = std::min(keys.size(), t * chunk);
                std::size_t hi = std::min(keys.size(), lo + chunk);
                pool.emplace_back([&, lo, hi, t]() {
                    for (std::size_t i = lo; i < hi; ++i) {
                        long hom[2][FB];
                        unpack_key(cx, keys[i], hom);
                        FastVerdict fv = fast_classify(cx, hom);
                        if (fv.tiling) ++parts[t].tilings;
                        if (store_all || fv.tiling)
                            parts[t].rows.push_back(
                                fast_row(cx, hb, hom, fv, rep.kappa, height_budget));
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (auto& p : parts) {
                rep.tiling_count += p.tilings;
                for (auto& r : p.rows) rep.rows.push_back(std::move(r));
            }
        }
        return rep;
    }

    auto keys = general_keys(g, hb, hmax, budget);
    rep.total_subgroups = static_cast<long>(keys.size());
    bool store_all = rep.total_subgroups <= row_cap;
    rep.rows_truncated = !store_all;
    for (const IntMatrix& hom : keys) {
        CensusRow row = slow_row(g, hb, hom, height_budget);
        if (row.tiling) ++rep.tiling_count;
        if (store_all || row.tiling) rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace crystal
