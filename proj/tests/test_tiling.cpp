#include <functional>
#include <random>
#include <set>

#include "doctest.h"

#include "crystal/error.hpp"
#include "crystal/tiling.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace crystal;
using namespace crystal::testing;

namespace {

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

std::vector<int> faces_of(const Graph& g, const VanishingSubgroup& h) {
    TilingVerdict v = is_tiling(g, h);
    REQUIRE(v.tiling);
    REQUIRE(v.reason.empty());
    REQUIRE(v.embedding.has_value());
    return face_sizes(*v.embedding);
}

IntMatrix hom_of(const Graph& g, const HomologyBasis& hb, const std::vector<OneChain>& gens) {
    IntMatrix m(static_cast<int>(gens.size()), g.betti());
    for (size_t i = 0; i < gens.size(); ++i) {
        std::vector<Int> row = homology_coordinates(g, hb, gens[i]);
        for (int j = 0; j < g.betti(); ++j) m.at(static_cast<int>(i), j) = row[j];
    }
    return m;
}

// three parallel edges plus a loop; small playground for failure modes
Graph loop_theta() {
    return Graph({"x", "y"},
                 {{"e1", "x", "y"}, {"e2", "x", "y"}, {"e3", "x", "y"}, {"l1", "x", "x"}});
}

} // namespace

TEST_CASE("face multisets of the classical tilings") {
    Graph sq = square_graph(), th = theta_graph(), b3 = b3_graph(), kag = kagome_graph(),
          dice = dice_graph(), e84 = e84_graph(), cairo = cairo_graph();
    CHECK(faces_of(sq, subgroup(sq, {})) == std::vector<int>{4});
    CHECK(faces_of(th, subgroup(th, {})) == std::vector<int>{6});
    CHECK(faces_of(b3, triangular_h(b3)) == std::vector<int>{3, 3});
    CHECK(faces_of(kag, kagome_h(kag)) == std::vector<int>{3, 3, 6});
    CHECK(faces_of(dice, dice_h(dice)) == std::vector<int>{4, 4, 4});
    CHECK(faces_of(e84, e84_h(e84)) == std::vector<int>{4, 8});
    CHECK(faces_of(cairo, cairo_h(cairo)) == std::vector<int>{5, 5, 5, 5});
}

TEST_CASE("face counts satisfy the torus relations") {
    Graph kag = kagome_graph();
    TilingVerdict v = is_tiling(kag, kagome_h(kag));
    REQUIRE(v.embedding.has_value());
    const TorusEmbedding& te = *v.embedding;
    CHECK(static_cast<int>(te.faces.size()) == kag.betti() - 1);
    int darts = 0;
    for (const auto& f : te.faces) darts += static_cast<int>(f.size());
    CHECK(darts == 2 * kag.edge_count());
    for (int vx = 0; vx < kag.vertex_count(); ++vx)
        CHECK(static_cast<int>(te.rotation_system[vx].size()) == kag.degree(vx));
}

TEST_CASE("geometric failures carry their reasons") {
    // a bridge never receives a harmonic value, so its edge collapses
    Graph bridge({"x", "y"}, {{"l1", "x", "x"}, {"e", "x", "y"}, {"l2", "y", "y"}});
    TilingVerdict v1 = is_tiling(bridge, subgroup(bridge, {}));
    CHECK(!v1.tiling);
    CHECK(v1.reason == "EdgeDegenerate");

    // a loop inside H collapses the same way
    Graph lt = loop_theta();
    TilingVerdict v2 = is_tiling(lt, subgroup(lt, {{{"l1", 1}}}));
    CHECK(!v2.tiling);
    CHECK(v2.reason == "EdgeDegenerate");

    // e1 and e2 get equal values when e2 - e1 vanishes: the two segments
    // overlap end to end
    TilingVerdict v3 = is_tiling(lt, subgroup(lt, {{{"e1", -1}, {"e2", 1}}}));
    CHECK(!v3.tiling);
    CHECK(v3.reason == "EdgeCrossing");

    // the sqrt(-6) realization of the three-loop bouquet is a crossing net
    Graph b3 = b3_graph();
    TilingVerdict v4 = is_tiling(b3, b3_sqrt6_h(b3));
    CHECK(!v4.tiling);
    CHECK(v4.reason == "EdgeCrossing");
    CHECK(!v4.embedding.has_value());

    /* On this subgroup the solved plane forces z = (1,-i,-1,i,2,-2i,i,-1,-1,i)
       with period lattice 4Z[i]; vertices c and f then both sit at -1. */
    Graph cairo = cairo_graph();
    VanishingSubgroup collide =
        subgroup(cairo, {{{"e1", -1}, {"e3", 1}, {"e8", -1}, {"e9", -1}},
                         {{"e1", 1}, {"e4", -1}, {"e7", 1}, {"e9", 1}},
                         {{"e1", -1}, {"e2", 1}, {"e9", -1}, {"e10", 1}}});
    TilingVerdict v5 = is_tiling(cairo, collide);
    CHECK(!v5.tiling);
    CHECK(v5.reason == "VertexCollision");
}

TEST_CASE("fundamental tiles close up and span the subgroup") {
    struct Case {
        Graph g;
        VanishingSubgroup h;
    };
    Graph th = theta_graph(), kag = kagome_graph(), dice = dice_graph();
    std::vector<Case> cases;
    cases.push_back({th, subgroup(th, {})});
    cases.push_back({kag, kagome_h(kag)});
    cases.push_back({dice, dice_h(dice)});
    for (const auto& c : cases) {
        TilingVerdict v = is_tiling(c.g, c.h);
        REQUIRE(v.embedding.has_value());
        std::vector<OneChain> tiles = fundamental_tiles(c.g, *v.embedding, c.h);
        CHECK(static_cast<int>(tiles.size()) == c.g.betti() - 1);
        OneChain sum = zero_chain(c.g);
        for (const OneChain& t : tiles) {
            CHECK(is_cycle(c.g, t));
            sum = chain_add(sum, t);
        }
        CHECK(sum.is_zero());
    }
}

TEST_CASE("height of the named subgroups") {
    Graph b3 = b3_graph();
    HeightReport trivial = height(subgroup(theta_graph(), {}));
    CHECK(trivial.height == 0);
    CHECK(trivial.exact);
    CHECK(trivial.witness_basis.empty());

    HeightReport tri = height(triangular_h(b3));
    CHECK(tri.height == 3);
    CHECK(tri.exact);

    HeightReport h6 = height(b3_sqrt6_h(b3));
    CHECK(h6.height == 4);
    CHECK(h6.exact);

    Graph kag = kagome_graph();
    HeightReport hk = height(kagome_h(kag));
    CHECK(hk.height == 3);
    CHECK(hk.exact);

    Graph dice = dice_graph();
    HeightReport hd = height(dice_h(dice));
    CHECK(hd.height == 4);
    CHECK(hd.exact);

    // rank-3 case checked against exhaustion
    Graph cairo = cairo_graph();
    VanishingSubgroup hc = cairo_h(cairo);
    HeightReport hr = height(hc);
    CHECK(hr.exact);
    BruteHeightResult brute = brute_height(cairo, homology_basis(cairo), hc, 6);
    REQUIRE(brute.found);
    CHECK(hr.height == brute.height);
}

TEST_CASE("height reports carry a genuine witness basis") {
    std::mt19937_64 rng(81);
    int done = 0;
    while (done < 25) {
        Graph g = random_graph(rng);
        if (g.betti() > 4) continue;
        HomologyBasis hb = homology_basis(g);
        auto h = random_subgroup(g, hb, rng);
        if (!h || h->rank() == 0) continue;
        HeightReport hr = height(*h);
        REQUIRE(hr.exact);
        CHECK(static_cast<int>(hr.witness_basis.size()) == h->rank());
        Int maxn(0);
        for (const OneChain& w : hr.witness_basis) {
            Int n = chain_norm_l1(w);
            if (n > maxn) maxn = n;
        }
        CHECK(maxn == hr.height);
        CHECK(hnf_canonical(hom_of(g, hb, hr.witness_basis)) == hnf_canonical(h->hom));

        long cap = 0;
        for (const OneChain& gen : h->generators) {
            long n = chain_norm_l1(gen).get_si();
            if (n > cap) cap = n;
        }
        BruteHeightResult brute = brute_height(g, hb, *h, cap);
        REQUIRE(brute.found);
        CHECK(hr.height == brute.height);
        ++done;
    }
}

TEST_CASE("height degrades politely above rank four") {
    std::vector<EdgeSpec> es;
    for (int i = 1; i <= 8; ++i) es.push_back({"e" + std::to_string(i), "x", "y"});
    Graph t8({"x", "y"}, es);
    std::vector<std::map<std::string, long>> gens;
    for (int i = 1; i <= 5; ++i)
        gens.push_back({{"e" + std::to_string(i), 1}, {"e" + std::to_string(i + 1), -1}});
    VanishingSubgroup h = subgroup(t8, gens);
    HeightReport hr = height(h);
    CHECK(!hr.exact);
    CHECK(hr.height >= 2);
    CHECK(static_cast<int>(hr.witness_basis.size()) == 5);
}

TEST_CASE("enumeration matches exhaustion on the bouquet") {
    Graph b3 = b3_graph();
    for (long hmax = 1; hmax <= 4; ++hmax) {
        auto subs = enumerate_vanishing_subgroups(b3, hmax);
        CHECK(static_cast<long>(subs.size()) == brute_bouquet_rank1_count(3, hmax));
        std::set<std::string> keys;
        for (const auto& s : subs) {
            CHECK(brute_minor_gcd(s.hom) == 1);
            keys.insert(matrix_key(hnf_canonical(s.hom)));
        }
        CHECK(keys.size() == subs.size()); // no duplicates
    }
    CHECK(static_cast<long>(enumerate_vanishing_subgroups(b3, 4).size()) == 49);

    Graph th = theta_graph();
    auto only = enumerate_vanishing_subgroups(th, 5);
    CHECK(only.size() == 1);
    CHECK(only[0].rank() == 0);

    CHECK(code_of([&] { enumerate_vanishing_subgroups(b3, 0); }) == "BadBound");
    CHECK(code_of([&] { enumerate_vanishing_subgroups(kagome_graph(), 6, 10); }) ==
          "BudgetExceeded");
}

TEST_CASE("census of the bouquet pins the known rows") {
    Graph b3 = b3_graph();
    CensusReport rep = tiling_census(b3, 4);
    CHECK(rep.kappa == 1);
    CHECK(rep.b1 == 3);
    CHECK(rep.hmax == 4);
    CHECK(rep.total_subgroups == 49);
    CHECK(rep.tiling_count == 4);
    CHECK(!rep.rows_truncated);
    CHECK(static_cast<long>(rep.rows.size()) == rep.total_subgroups);
    bool found_sqrt6 = false;
    for (const CensusRow& row : rep.rows) {
        if (row.tiling) {
            // the triangular realizations: e1 +- e2 +- e3
            CHECK(row.i_h == 3);
            CHECK(row.d == 3);
            CHECK(row.face_sizes == std::vector<int>{3, 3});
            CHECK(row.height_report.height == 3);
        }
        if (row.hnf.rows() == 1 && row.hnf.at(0, 0) == 1 && row.hnf.at(0, 1) == 1 &&
            row.hnf.at(0, 2) == 2) {
            found_sqrt6 = true;
            CHECK(row.i_h == 6);
            CHECK(row.d == 6);
            CHECK(row.height_report.height == 4);
            CHECK(!row.tiling);
            CHECK(row.reason == "EdgeCrossing");
        }
    }
    CHECK(found_sqrt6);
}

TEST_CASE("theta census is a single hexagonal row") {
    CensusReport rep = tiling_census(theta_graph(), std::nullopt);
    CHECK(rep.hmax == 6); // 6 * (b1 - 1)
    CHECK(rep.total_subgroups == 1);
    CHECK(rep.tiling_count == 1);
    CHECK(rep.rows[0].hnf.rows() == 0);
    CHECK(rep.rows[0].tiling);
    CHECK(rep.rows[0].face_sizes == std::vector<int>{6});
    CHECK(rep.rows[0].d == 3);
}

TEST_CASE("census rows agree with the public tiling verdict") {
    struct Case {
        Graph g;
        long hmax;
    };
    std::vector<Case> cases{{kagome_graph(), 4}, {dice_graph(), 4}, {b3_graph(), 4}};
    for (const auto& c : cases) {
        HomologyBasis hb = homology_basis(c.g);
        CensusReport rep = tiling_census(c.g, c.hmax);
        CHECK(!rep.rows_truncated);
        for (const CensusRow& row : rep.rows) {
            VanishingSubgroup h = make_vanishing_subgroup(c.g, hb, row.generators);
            CHECK(hnf_canonical(h.hom) == row.hnf);
            TilingVerdict v = is_tiling(c.g, h);
            CHECK(v.tiling == row.tiling);
            CHECK(v.reason == row.reason);
            if (v.embedding.has_value()) CHECK(face_sizes(*v.embedding) == row.face_sizes);
            else CHECK(row.face_sizes.empty());
            InvariantReport inv = invariant_report(c.g, h);
            CHECK(inv.i_h == row.i_h);
            CHECK(inv.d == row.d);
        }
    }
}

TEST_CASE("kagome census matches pair exhaustion") {
    Graph kag = kagome_graph();
    HomologyBasis hb = homology_basis(kag);
    CensusReport rep = tiling_census(kag, 6);
    CHECK(rep.kappa == 12);
    CHECK(!rep.rows_truncated);
    std::set<std::string> got;
    for (const CensusRow& row : rep.rows) got.insert(matrix_key(row.hnf));
    CHECK(static_cast<long>(got.size()) == rep.total_subgroups);
    std::set<std::string> want = brute_rank2_census_keys(kag, hb, 6);
    CHECK(got == want);
    CHECK(rep.tiling_count == 20);

    // the kagome subgroup itself is one of the tiling rows
    std::string kag_key = matrix_key(hnf_canonical(kagome_h(kag).hom));
    bool seen = false;
    for (const CensusRow& row : rep.rows)
        if (matrix_key(row.hnf) == kag_key) {
            seen = true;
            CHECK(row.tiling);
            CHECK(row.face_sizes == std::vector<int>{3, 3, 6});
            CHECK(row.i_h == 9);
            CHECK(row.d == 3);
            CHECK(row.height_report.height == 3);
        }
    CHECK(seen);
}

TEST_CASE("row cap keeps tilings and flags truncation") {
    Graph kag = kagome_graph();
    CensusReport rep = tiling_census(kag, 6, 1, 100000000, 10);
    CHECK(rep.rows_truncated);
    CHECK(rep.total_subgroups == 1286);
    CHECK(rep.tiling_count == 20);
    CHECK(static_cast<long>(rep.rows.size()) == rep.tiling_count);
    for (const CensusRow& row : rep.rows) CHECK(row.tiling);
}

TEST_CASE("threaded census equals the serial one") {
    Graph kag = kagome_graph();
    CensusReport a = tiling_census(kag, 5, 1);
    CensusReport b = tiling_census(kag, 5, 3);
    CHECK(a.total_subgroups == b.total_subgroups);
    CHECK(a.tiling_count == b.tiling_count);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].hnf == b.rows[i].hnf);
        CHECK(a.rows[i].tiling == b.rows[i].tiling);
        CHECK(a.rows[i].reason == b.rows[i].reason);
        CHECK(a.rows[i].face_sizes == b.rows[i].face_sizes);
        CHECK(a.rows[i].d == b.rows[i].d);
    }
}

TEST_CASE("census rejects a bad bound") {
    CHECK(code_of([&] { tiling_census(b3_graph(), -1); }) == "BadBound");
    CHECK(code_of([&] { tiling_census(b3_graph(), 0); }) == "BadBound");
}
