#pragma once

/* Brute-force reference implementations. Everything here is deliberately
   naive and shares no shortcuts with the library: subset exhaustion,
   cofactor expansion, odometer boxes. Slow is fine, wrong is not. */

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "crystal/graph.hpp"
#include "crystal/invariants.hpp"
#include "crystal/linalg.hpp"
#include "crystal/rational.hpp"

namespace crystal::testing {

// Spanning trees by exhaustion: every (|V|-1)-subset of the non-loop edges,
// accepted when union-find merges all vertices. Edge count capped so the
// bitmask stays cheap.
inline long brute_tree_count(const Graph& g) {
    int nv = g.vertex_count();
    if (nv == 1) return 1;
    std::vector<std::pair<int, int>> ends;
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        if (e.origin != e.terminus) ends.emplace_back(e.origin, e.terminus);
    }
    int ne = static_cast<int>(ends.size());
    if (ne > 20 || ne < nv - 1) return ne < nv - 1 ? 0 : -1;
    long count = 0;
    for (unsigned mask = 0; mask < (1u << ne); ++mask) {
        if (__builtin_popcount(mask) != nv - 1) continue;
        std::vector<int> parent(nv);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool ok = true;
        for (int i = 0; i < ne && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            int a = find(ends[i].first), b = find(ends[i].second);
            if (a == b) ok = false;
            else parent[a] = b;
        }
        if (!ok) continue;
        int roots = 0;
        for (int v = 0; v < nv; ++v) roots += find(v) == v;
        if (roots == 1) ++count;
    }
    return count;
}

// Plain cofactor expansion along the first row.
inline Int cofactor_determinant(const IntMatrix& m) {
    int n = m.rows();
    if (n == 0) return Int(1);
    if (n == 1) return m.at(0, 0);
    Int det(0);
    for (int j = 0; j < n; ++j) {
        if (sign(m.at(0, j)) == 0) continue;
        IntMatrix sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c)
                if (c != j) sub.at(r - 1, cc++) = m.at(r, c);
        }
        Int term = m.at(0, j) * cofactor_determinant(sub);
        if (j % 2) det -= term;
        else det += term;
    }
    return det;
}

// Gram determinant of a chain family under the plain coefficient dot
// product; this is I(H) computed without the library inner product.
inline Int brute_intersection_determinant(const std::vector<OneChain>& gens) {
    int r = static_cast<int>(gens.size());
    IntMatrix gram(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Int s(0);
            for (size_t k = 0; k < gens[i].c.size(); ++k) s += gens[i].c[k] * gens[j].c[k];
            gram.at(i, j) = s;
        }
    return cofactor_determinant(gram);
}

// gcd over all r x r minors, r = row count; 1 means the row lattice is a
// direct summand.
inline Int brute_minor_gcd(const IntMatrix& m) {
    int r = m.rows(), n = m.cols();
    std::vector<int> pick(r);
    std::iota(pick.begin(), pick.end(), 0);
    Int g(0);
    for (;;) {
        IntMatrix sub(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sub.at(i, j) = m.at(i, pick[j]);
        g = gcd_int(g, cofactor_determinant(sub));
        int i = r - 1;
        while (i >= 0 && pick[i] == n - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return g;
}

// Coefficients of m with respect to the rows of a canonical HNF basis;
// false when m is outside the lattice.
inline bool hnf_coefficients(const IntMatrix& hnf, const std::vector<Int>& m,
                             std::vector<Int>* coeff) {
    std::vector<Int> res = m;
    coeff->clear();
    for (int i = 0; i < hnf.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < hnf.cols(); ++j)
            if (sign(hnf.at(i, j)) != 0) { p = j; break; }
        if (p < 0) return false;
        if (sign(Int(res[p] % hnf.at(i, p))) != 0) return false;
        Int q = res[p] / hnf.at(i, p);
        for (int j = 0; j < hnf.cols(); ++j) res[j] -= q * hnf.at(i, j);
        coeff->push_back(q);
    }
    for (const Int& x : res)
        if (sign(x) != 0) return false;
    return true;
}

struct BruteHeightResult {
    long height = 0;
    bool found = false;
};

/* Exhaustive height of H. Every chain in H of l1 norm <= cap has homology
   coordinates inside the [-cap, cap] box (the coordinates are the non-tree
   coefficients), so the box scan sees all of them; a basis is an r-subset
   whose HNF-coefficient determinant is a unit. Intended for b1 <= 5,
   rank <= 3. */
inline BruteHeightResult brute_height(const Graph& g, const HomologyBasis& hb,
                                      const VanishingSubgroup& h, long cap) {
    int r = h.rank();
    if (r == 0) return {0, true};
    int b1 = g.betti();
    IntMatrix hnf = hnf_canonical(h.hom);

    struct Cand {
        long norm;
        std::vector<Int> coeff;
    };
    std::vector<Cand> cands;
    std::vector<long> m(b1, -cap);
    for (;;) {
        bool zero = true, flip = false;
        for (long x : m)
            if (x != 0) { flip = x < 0; zero = false; break; }
        if (!zero && !flip) {
            std::vector<Int> mi(b1);
            for (int k = 0; k < b1; ++k) mi[k] = Int(m[k]);
            std::vector<Int> coeff;
            if (hnf_coefficients(hnf, mi, &coeff)) {
                OneChain x = zero_chain(g);
                for (int k = 0; k < b1; ++k)
                    x = chain_add(x, chain_scale(Int(m[k]), hb.cycles[k]));
                Int norm = chain_norm_l1(x);
                if (norm <= cap) cands.push_back({norm.get_si(), coeff});
            }
        }
        int i = 0;
        while (i < b1 && m[i] == cap) m[i++] = -cap;
        if (i == b1) break;
        ++m[i];
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.norm < b.norm; });

    // grow the prefix one candidate at a time; the first unit r-subset that
    // appears fixes the height at the norm of its largest member
    std::vector<int> pick(r);
    for (size_t last = r - 1; last < cands.size(); ++last) {
        std::iota(pick.begin(), pick.end(), 0);
        pick[r - 1] = static_cast<int>(last);
        for (;;) {
            IntMatrix a(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) a.at(i, j) = cands[pick[i]].coeff[j];
            if (abs_int(cofactor_determinant(a)) == 1) return {cands[last].norm, true};
            int i = r - 2;
            while (i >= 0 && pick[i] == static_cast<int>(last) - (r - 1) + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < r - 1; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {cap, false};
}

// Primitive vectors of Z^n with l1 norm <= hmax, up to sign: the rank-1
// subgroup census of a bouquet, counted by loops alone.
inline long brute_bouquet_rank1_count(int n, long hmax) {
    std::vector<long> m(n, -hmax);
    long count = 0;
    for (;;) {
        long norm = 0;
        for (long x : m) norm += std::abs(x);
        if (norm > 0 && norm <= hmax) {
            bool lead_pos = false;
            for (long x : m)
                if (x != 0) { lead_pos = x > 0; break; }
            if (lead_pos) {
                long gg = 0;
                for (long x : m) gg = std::gcd(gg, std::abs(x));
                if (gg == 1) ++count;
            }
        }
        int i = 0;
        while (i < n && m[i] == hmax) m[i++] = -hmax;
        if (i == n) break;
        ++m[i];
    }
    return count;
}

inline std::string matrix_key(const IntMatrix& m) {
    std::string s = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += int_to_string(m.at(i, j)) + ",";
    return s;
}

/* Rank-2 subgroup census keys by pair exhaustion: all member chains of norm
   <= hmax (box scan as in brute_height), all pairs, keep the saturated
   rank-2 ones, dedupe by canonical HNF. Height <= hmax holds exactly when
   some basis pair survives the norm cut, so this is the whole census. */
inline std::set<std::string> brute_rank2_census_keys(const Graph& g, const HomologyBasis& hb,
                                                     long hmax) {
    int b1 = g.betti();
    std::vector<std::vector<long>> members;
    std::vector<long> m(b1, -hmax);
    for (;;) {
        bool zero = true, flip = false;
        for (long x : m)
            if (x != 0) { flip = x < 0; zero = false; break; }
        if (!zero && !flip) {
            OneChain x = zero_chain(g);
            for (int k = 0; k < b1; ++k)
                x = chain_add(x, chain_scale(Int(m[k]), hb.cycles[k]));
            if (chain_norm_l1(x) <= hmax) members.push_back(m);
        }
        int i = 0;
        while (i < b1 && m[i] == hmax) m[i++] = -hmax;
        if (i == b1) break;
        ++m[i];
    }
    std::set<std::string> keys;
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            IntMatrix rows(2, b1);
            for (int k = 0; k < b1; ++k) {
                rows.at(0, k) = Int(members[i][k]);
                rows.at(1, k) = Int(members[j][k]);
            }
            Int gg(0);
            for (int a = 0; a < b1 && gg != 1; ++a)
                for (int b = a + 1; b < b1; ++b) {
                    Int det = rows.at(0, a) * rows.at(1, b) - rows.at(0, b) * rows.at(1, a);
                    gg = gcd_int(gg, det);
                    if (gg == 1) break;
                }
            if (gg != 1) continue;
            keys.insert(matrix_key(hnf_canonical(rows)));
        }
    return keys;
}

} // namespace crystal::testing
