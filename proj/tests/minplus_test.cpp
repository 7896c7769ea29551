#include <gtest/gtest.h>

#include "fewapsp/core/error.hpp"
#include "fewapsp/core/random.hpp"
#include "fewapsp/minplus/bool_matrix.hpp"
#include "fewapsp/minplus/hop_product.hpp"
#include "fewapsp/minplus/products.hpp"
#include "support/oracles.hpp"

using namespace fewapsp;

namespace {

BoolMatrix random_bool(std::size_t r, std::size_t c, double p, Rng& rng) {
    BoolMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (uniform01(rng) < p) m.set(i, j);
    return m;
}

WeightMatrix bool_min_definition(const WeightMatrix& a, const BoolMatrix& b) {
    WeightMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (b.get(k, j)) r(i, j) = std::min(r(i, j), a(i, k));
    return r;
}

// Random n-by-m matrix whose columns each draw from a palette of d values.
WeightMatrix column_palette_matrix(std::size_t n, std::size_t m, std::size_t d, Rng& rng) {
    WeightMatrix b(n, m);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<std::int64_t> pal(d);
        for (auto& x : pal) x = uniform_int(rng, -20, 20);
        for (std::size_t k = 0; k < n; ++k) {
            if (uniform01(rng) < 0.25) continue;
            b(k, j) = Weight(pal[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(d) - 1))]);
        }
    }
    return b;
}

// Re-evaluates a right hop-product path against A and the graph.
std::int64_t path_value(const WeightMatrix& a, std::size_t row, const std::vector<std::size_t>& p,
                        const NodeWeightedGraph& g) {
    std::int64_t v = a(row, p.front()).value();
    for (std::size_t t = 1; t < p.size(); ++t) {
        EXPECT_TRUE(g.has_edge(p[t - 1], p[t]));
        v += g.weight(p[t]);
    }
    return v;
}

}  // namespace

TEST(MinPlusNaive, IdentityIsNeutral) {
    auto id = WeightMatrix::min_plus_identity(5);
    EXPECT_EQ(min_plus_naive(id, id), id);
}

TEST(MinPlusNaive, HandComputed) {
    auto a = WeightMatrix::from_rows({{Weight(1), Weight(2)}});
    auto b = WeightMatrix::from_rows({{Weight(3)}, {Weight(0)}});
    EXPECT_EQ(min_plus_naive(a, b), WeightMatrix::from_rows({{Weight(2)}}));
}

TEST(MinPlusNaive, MatchesIndependentLoop) {
    Rng rng(41);
    for (int rep = 0; rep < 20; ++rep) {
        auto a = random_matrix(12, 9, -30, 30, rng, 0.2);
        auto b = random_matrix(9, 7, -30, 30, rng, 0.2);
        auto r = min_plus_naive_witness(a, b);
        EXPECT_EQ(r.value, oracle::min_plus(a, b));
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 7; ++j)
                if (r.value(i, j).is_finite()) {
                    auto k = static_cast<std::size_t>(r.witness(i, j));
                    EXPECT_EQ(a(i, k) + b(k, j), r.value(i, j));
                }
    }
    EXPECT_THROW(min_plus_naive(WeightMatrix(2, 3), WeightMatrix(2, 3)), ShapeError);
}

TEST(BooleanProduct, IdentityAndZeroRow) {
    Rng rng(43);
    auto p = random_bool(20, 70, 0.3, rng);
    EXPECT_EQ(boolean_matrix_multiply(p, BoolMatrix::identity(70)), p);
    for (std::size_t k = 0; k < 70; ++k) p.set(3, k, false);
    auto r = boolean_matrix_multiply(p, random_bool(70, 33, 0.5, rng));
    for (std::size_t j = 0; j < 33; ++j) EXPECT_FALSE(r.get(3, j));
}

TEST(BooleanProduct, PackedEqualsNaive) {
    Rng rng(47);
    for (std::size_t n : {1, 63, 64, 65, 130}) {
        auto p = random_bool(n, n, 0.05, rng);
        auto q = random_bool(n, n, 0.05, rng);
        EXPECT_EQ(boolean_matrix_multiply(p, q), boolean_matrix_multiply_naive(p, q));
    }
}

TEST(BooleanMinPlus, IdentityReturnsA) {
    Rng rng(53);
    auto a = random_matrix(6, 10, -9, 9, rng, 0.2);
    EXPECT_EQ(boolean_min_plus(a, BoolMatrix::identity(10), 3).value, a);
}

TEST(BooleanMinPlus, AllOnesGivesRowMinimum) {
    Rng rng(59);
    auto a = random_matrix(6, 10, -9, 9, rng);
    BoolMatrix ones(10, 10);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) ones.set(i, j);
    auto r = boolean_min_plus(a, ones, 4).value;
    for (std::size_t i = 0; i < 6; ++i) {
        Weight lo = Weight::pos_inf();
        for (std::size_t k = 0; k < 10; ++k) lo = std::min(lo, a(i, k));
        for (std::size_t j = 0; j < 10; ++j) EXPECT_EQ(r(i, j), lo);
    }
}

TEST(BooleanMinPlus, IndependentOfDeltaWithSoundWitnesses) {
    Rng rng(61);
    for (int rep = 0; rep < 30; ++rep) {
        auto a = random_matrix(8, 16, -50, 50, rng, 0.3);
        auto b = random_bool(16, 16, 0.2, rng);
        auto expected = bool_min_definition(a, b);
        for (std::size_t delta : {1, 4, 16, 40}) {
            auto r = boolean_min_plus(a, b, delta);
            EXPECT_EQ(r.value, expected);
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t j = 0; j < 16; ++j) {
                    if (!r.value(i, j).is_finite()) {
                        EXPECT_EQ(r.witness(i, j), -1);
                        continue;
                    }
                    auto k = static_cast<std::size_t>(r.witness(i, j));
                    EXPECT_TRUE(b.get(k, j));
                    EXPECT_EQ(a(i, k), r.value(i, j));
                }
        }
    }
}

TEST(BooleanMinPlus, RejectsBadInput) {
    EXPECT_THROW(boolean_min_plus(WeightMatrix(2, 3), BoolMatrix(4, 4), 1), ShapeError);
    WeightMatrix a(1, 2);
    a(0, 0) = Weight::bot();
    EXPECT_THROW(boolean_min_plus(a, BoolMatrix(2, 2), 1), ParameterError);
    WeightMatrix huge(1, 2, Weight(Weight::kFiniteLimit - 1));
    EXPECT_THROW(boolean_min_plus(huge, BoolMatrix(2, 2), 1), OverflowError);
}

TEST(DWeightsMinPlus, SingleWeightMatchesBooleanPlusColumnWeight) {
    Rng rng(67);
    for (int rep = 0; rep < 10; ++rep) {
        auto g = random_nw_graph(12, {.edge_prob = 0.3, .w_min = -5, .w_max = 9}, rng);
        auto a = random_matrix(5, 12, -20, 20, rng, 0.2);
        BoolMatrix adj(12, 12);
        for (auto [u, v] : g.edges()) adj.set(u, v);
        auto b = boolean_min_plus(a, adj, 2).value;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t v = 0; v < 12; ++v)
                if (b(i, v).is_finite()) b(i, v) += Weight(g.weight(v));
        EXPECT_EQ(d_weights_min_plus(a, edge_matrix(g), 1, 3).value, b);
    }
}

TEST(DWeightsMinPlus, AllInfinite) {
    Rng rng(71);
    auto a = random_matrix(3, 4, 0, 9, rng);
    auto r = d_weights_min_plus(a, WeightMatrix(4, 4), 2, 2);
    EXPECT_EQ(r.value, WeightMatrix(3, 4));
}

TEST(DWeightsMinPlus, MatchesNaiveForAllDelta) {
    Rng rng(73);
    for (int rep = 0; rep < 30; ++rep) {
        auto a = random_matrix(8, 12, -40, 40, rng, 0.2);
        auto b = column_palette_matrix(12, 12, 3, rng);
        auto expected = oracle::min_plus(a, b);
        for (std::size_t delta : {1, 4, 16}) {
            auto r = d_weights_min_plus(a, b, 3, delta);
            EXPECT_EQ(r.value, expected);
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t j = 0; j < 12; ++j)
                    if (r.value(i, j).is_finite()) {
                        auto k = static_cast<std::size_t>(r.witness(i, j));
                        EXPECT_EQ(a(i, k) + b(k, j), r.value(i, j));
                    }
        }
    }
}

TEST(DWeightsMinPlus, AuditFailure) {
    auto b = WeightMatrix::from_rows({{Weight(1)}, {Weight(2)}, {Weight(3)}});
    EXPECT_THROW(d_weights_min_plus(WeightMatrix(1, 3, Weight(0)), b, 2, 1), AuditError);
    EXPECT_EQ(max_column_distinct(b), 3u);
}

TEST(HopProduct, ZeroHopsIsIdentity) {
    Rng rng(79);
    auto g = random_nw_graph(8, {.edge_prob = 0.3}, rng);
    auto a = random_matrix(3, 8, 0, 9, rng, 0.3);
    EXPECT_EQ(hop_bounded_product(a, g, 0).value, a);
    EXPECT_EQ(hop_bounded_product_left(g, a.transposed(), 0).value, a.transposed());
    EXPECT_EQ(hop_bounded_product_edge(a, to_edge_weighted(g), 1, 0).value, a);
}

TEST(HopProduct, PathGraphPrefixSums) {
    NodeWeightedGraph g(3, {0, 2, 3}, {{0, 1}, {1, 2}});
    WeightMatrix a(1, 3);
    a(0, 0) = Weight(0);
    auto r = hop_bounded_product(a, g, 2, {.delta = 1, .witnesses = true});
    EXPECT_EQ(r.value, WeightMatrix::from_rows({{Weight(0), Weight(2), Weight(5)}}));
    EXPECT_EQ(r.path(0, 2), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(r.path(0, 0), (std::vector<std::size_t>{0}));
}

TEST(HopProduct, FullHopsEqualShortestPaths) {
    Rng rng(83);
    for (int rep = 0; rep < 15; ++rep) {
        auto g = random_nw_graph(14, {.edge_prob = 0.2, .w_min = 0, .w_max = 20}, rng);
        std::vector<std::size_t> sources{0, 5, 9};
        auto a = WeightMatrix::min_plus_identity(14).restrict(sources, std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13});
        auto r = hop_bounded_product(a, g, 14, {.delta = 3, .witnesses = true});
        auto fw = oracle::floyd_warshall(g);
        for (std::size_t i = 0; i < sources.size(); ++i)
            for (std::size_t v = 0; v < 14; ++v) {
                EXPECT_EQ(r.value(i, v), fw(sources[i], v));
                if (r.value(i, v).is_finite()) {
                    auto p = r.path(i, v);
                    EXPECT_EQ(p.front(), sources[i]);
                    EXPECT_EQ(p.back(), v);
                    EXPECT_EQ(path_value(a, i, p, g), r.value(i, v).value());
                }
            }
    }
}

TEST(HopProduct, MonotoneInHopsAndWitnessesSound) {
    Rng rng(89);
    for (int rep = 0; rep < 10; ++rep) {
        auto g = random_nw_graph(12, {.edge_prob = 0.25, .w_min = -3, .w_max = 10}, rng);
        auto a = random_matrix(4, 12, -5, 15, rng, 0.5);
        WeightMatrix prev = a;
        for (std::size_t h = 1; h <= 5; ++h) {
            auto r = hop_bounded_product(a, g, h, {.delta = 2, .witnesses = true});
            EXPECT_EQ(r.value, oracle::min_plus(a, oracle::hop_bounded(build_one_hop_matrix(g), h)));
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t v = 0; v < 12; ++v) {
                    EXPECT_LE(r.value(i, v), prev(i, v));
                    if (r.value(i, v).is_finite()) {
                        auto p = r.path(i, v);
                        EXPECT_LE(p.size(), h + 1);
                        EXPECT_EQ(path_value(a, i, p, g), r.value(i, v).value());
                    }
                }
            prev = r.value;
        }
    }
}

TEST(HopProductLeft, MatchesNaiveOracle) {
    Rng rng(97);
    for (int rep = 0; rep < 15; ++rep) {
        auto g = random_nw_graph(10, {.edge_prob = 0.25, .w_min = -4, .w_max = 12}, rng);
        auto a = random_matrix(10, 4, -10, 10, rng, 0.4);
        auto r = hop_bounded_product_left(g, a, 3, {.delta = 2, .witnesses = true});
        auto d3 = oracle::hop_bounded(build_one_hop_matrix(g), 3);
        EXPECT_EQ(r.value, oracle::min_plus(d3, a));
        for (std::size_t v = 0; v < 10; ++v)
            for (std::size_t s = 0; s < 4; ++s) {
                if (!r.value(v, s).is_finite()) continue;
                auto p = r.path(v, s);
                EXPECT_EQ(p.front(), v);
                std::int64_t w = a(p.back(), s).value();
                for (std::size_t t = 1; t < p.size(); ++t) {
                    EXPECT_TRUE(g.has_edge(p[t - 1], p[t]));
                    w += g.weight(p[t]);
                }
                EXPECT_EQ(w, r.value(v, s).value());
            }
    }
}

TEST(HopProductLeft, TrivialMatrixMatchesRightVariantOnReverse) {
    Rng rng(101);
    auto g = random_nw_graph(10, {.edge_prob = 0.3, .w_min = 0, .w_max = 9}, rng);
    std::vector<std::size_t> all(10), sinks{2, 7};
    for (std::size_t i = 0; i < 10; ++i) all[i] = i;
    auto trivial = WeightMatrix::min_plus_identity(10).restrict(all, sinks);
    auto left = hop_bounded_product_left(g, trivial, 4).value;
    auto d4 = oracle::hop_bounded(build_one_hop_matrix(g), 4);
    EXPECT_EQ(left, d4.restrict(all, sinks));
}

TEST(HopProductEdge, NodeWeightedEncodingMatches) {
    Rng rng(103);
    for (int rep = 0; rep < 10; ++rep) {
        auto g = random_nw_graph(12, {.edge_prob = 0.25, .w_min = -2, .w_max = 9}, rng);
        auto a = random_matrix(3, 12, 0, 9, rng, 0.4);
        EXPECT_EQ(hop_bounded_product_edge(a, to_edge_weighted(g), 1, 4, {.delta = 2}).value,
                  hop_bounded_product(a, g, 4, {.delta = 3}).value);
    }
}

TEST(HopProductEdge, MatchesNaiveOracleWithWitnesses) {
    Rng rng(107);
    for (int rep = 0; rep < 15; ++rep) {
        auto g = random_in_dweights_graph(12, 3, {.edge_prob = 0.25, .w_min = -3, .w_max = 15}, rng);
        auto a = random_matrix(4, 12, -5, 5, rng, 0.5);
        auto r = hop_bounded_product_edge(a, g, 3, 4, {.delta = 4, .witnesses = true});
        auto e = edge_matrix(g);
        EXPECT_EQ(r.value, oracle::min_plus(a, oracle::hop_bounded(build_one_hop_matrix(g), 4)));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t v = 0; v < 12; ++v) {
                if (!r.value(i, v).is_finite()) continue;
                auto p = r.path(i, v);
                Weight w = a(i, p.front());
                for (std::size_t t = 1; t < p.size(); ++t) w += e(p[t - 1], p[t]);
                EXPECT_EQ(w, r.value(i, v));
            }
        auto left = hop_bounded_product_edge_left(g, a.transposed(), 4).value;
        EXPECT_EQ(left, oracle::min_plus(oracle::hop_bounded(build_one_hop_matrix(g), 4), a.transposed()));
    }
}

TEST(HopProductEdge, AuditFailure) {
    EdgeWeightedGraph g(3, {{0, 2, 1}, {1, 2, 2}});
    EXPECT_THROW(hop_bounded_product_edge(WeightMatrix(1, 3), g, 1, 2), AuditError);
}
