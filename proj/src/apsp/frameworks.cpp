#include "fewapsp/apsp/frameworks.hpp"

#include <algorithm>
#include <numeric>

#include "fewapsp/apsp/hitting_set.hpp"
#include "fewapsp/core/error.hpp"
#include "fewapsp/minplus/products.hpp"

namespace fewapsp {

namespace {

using Set = std::vector<std::size_t>;

WeightMatrix trivial_right(const Set& s, std::size_t n) {
    WeightMatrix a(s.size(), n);
    for (std::size_t i = 0; i < s.size(); ++i) a(i, s[i]) = Weight(0);
    return a;
}

WeightMatrix trivial_left(const Set& s, std::size_t n) {
    WeightMatrix a(n, s.size());
    for (std::size_t i = 0; i < s.size(); ++i) a(s[i], i) = Weight(0);
    return a;
}

Set all_nodes(std::size_t n) {
    Set v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::size_t pow2(std::size_t l) { return std::size_t{1} << l; }

// D[S_l, S_l] from D[S_{l+1}, S_{l+1}]:
// min(D^{<=direct_hops}[S, S], D^{<=2^l}[S, T] * D[T, T] * D^{<=2^l}[T, S]).
WeightMatrix bridge_level(const HopEngine& eng, const Set& s, const Set& t, const WeightMatrix& d_t,
                          std::size_t hops, std::size_t direct_hops) {
    const std::size_t n = eng.n();
    const WeightMatrix m1 = eng.right(trivial_right(s, n), direct_hops, false).value;
    WeightMatrix a2(t.size(), n);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) a2(i, t[j]) = d_t(i, j);
    const WeightMatrix m2 = eng.right(a2, hops, false).value;
    WeightMatrix a3(n, s.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) a3(t[i], j) = m2(i, s[j]);
    const WeightMatrix m3 = eng.left(a3, hops, false).value;
    WeightMatrix out(s.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) out(i, j) = std::min(m1(i, s[j]), m3(s[i], j));
    return out;
}

WeightMatrix base_level(const HopEngine& eng, const Set& s, std::size_t hops) {
    const WeightMatrix r = eng.right(trivial_right(s, eng.n()), hops, false).value;
    const Set rows = all_nodes(s.size());
    return repeated_squaring(r.restrict(rows, s), eng.n());
}

WeightMatrix sub_by_positions(const WeightMatrix& m, const Set& outer, const Set& inner) {
    // inner must be a subset of outer, both sorted.
    Set pos;
    for (auto v : inner) pos.push_back(static_cast<std::size_t>(std::lower_bound(outer.begin(), outer.end(), v) - outer.begin()));
    return m.restrict(pos, pos);
}

std::vector<std::size_t> join(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    if (!a.empty() && !b.empty() && a.back() != b.front()) throw SolverError("path pieces do not meet");
    a.insert(a.end(), b.begin() + (b.empty() ? 0 : 1), b.end());
    return a;
}

}  // namespace

WeightMatrix repeated_squaring(WeightMatrix m, std::size_t n) {
    const std::size_t rounds = ceil_log2(std::max<std::size_t>(n, 1));
    for (std::size_t r = 0; r < rounds; ++r) {
        WeightMatrix next = min_plus_naive(m, m);
        if (next == m) break;
        m = std::move(next);
    }
    return m;
}

WeightMatrix randomized_framework(const HopEngine& eng, const PivotHierarchy& pivots, LevelTrace* trace) {
    const std::size_t L = pivots.top();
    std::vector<WeightMatrix> dist(L + 1);
    dist[L] = base_level(eng, pivots.levels[L], pow2(L));
    for (std::size_t l = L; l-- > 0;) {
        dist[l] = bridge_level(eng, pivots.levels[l], pivots.levels[l + 1], dist[l + 1], pow2(l), pow2(l));
    }
    WeightMatrix out = dist[0];
    if (trace) trace->level_distances = std::move(dist);
    return out;
}

BridgingState build_bridging_state(const HopEngine& eng, std::size_t h) {
    if (h == 0) throw ParameterError("h must be at least 1");
    const std::size_t n = eng.n();
    BridgingState st;
    st.n = n;
    st.L = ceil_log2(h);
    st.levels.assign(st.L + 1, {});
    st.hit_paths.assign(st.L, {});
    st.levels[0] = all_nodes(n);

    // Step 1: S_{l+1} hits every exact-length-2^l witness path from or to S_l.
    for (std::size_t l = 0; l < st.L; ++l) {
        const Set& s = st.levels[l];
        const std::size_t hops = pow2(l);
        const HopResult r = eng.right(trivial_right(s, n), hops, true);
        const HopResult lf = eng.left(trivial_left(s, n), hops, true);
        auto& paths = st.hit_paths[l];
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t v = 0; v < n; ++v) {
                if (r.value(i, v).is_finite()) {
                    auto p = r.path(i, v);
                    if (p.size() == hops + 1) paths.push_back(std::move(p));
                }
                if (lf.value(v, i).is_finite()) {
                    auto p = lf.path(v, i);
                    if (p.size() == hops + 1) paths.push_back(std::move(p));
                }
            }
        st.levels[l + 1] = greedy_hitting_set(paths, n);
    }

    // Step 2: paths Q_uv of hop-length <= 3*2^L and weight <= D^{<=2^L}[u,v].
    st.q_paths.assign(n * n, {});
    st.q_weights.assign(n * n, 0);
    const std::size_t top_hops = pow2(st.L);
    {
        const Set& s = st.levels[st.L];
        const HopResult r = eng.right(trivial_right(s, n), top_hops, true);
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) {
                const Weight w = r.value(i, s[j]);
                if (!w.is_finite()) continue;
                st.q_paths[s[i] * n + s[j]] = r.path(i, s[j]);
                st.q_weights[s[i] * n + s[j]] = w.value();
            }
    }
    for (std::size_t l = st.L; l-- > 0;) {
        const Set& s = st.levels[l];
        const Set& t = st.levels[l + 1];
        const std::size_t hops = pow2(l);
        const HopResult r1 = eng.right(trivial_right(s, n), 2 * hops, true);
        WeightMatrix a2(t.size(), n);
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j)
                if (!st.q(t[i], t[j]).empty()) a2(i, t[j]) = Weight(st.q_weights[t[i] * n + t[j]]);
        const HopResult m2 = eng.right(a2, hops, true);
        WeightMatrix a3(n, s.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) a3(t[i], j) = m2.value(i, s[j]);
        const HopResult m3 = eng.left(a3, hops, true);

        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> updates;
        std::vector<std::int64_t> update_w;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) {
                const std::size_t u = s[i], v = s[j];
                const Weight c1 = r1.value(i, v);
                const Weight c2 = m3.value(u, j);
                std::vector<std::size_t> q;
                if (c1.is_finite() && c1 <= c2) {
                    q = r1.path(i, v);
                } else if (c2.is_finite()) {
                    // u ..(<=2^l).. x, then Q_xy, then y ..(<=2^l).. v.
                    const auto head = m3.path(u, j);
                    const std::size_t x = head.back();
                    const auto ix = static_cast<std::size_t>(std::lower_bound(t.begin(), t.end(), x) - t.begin());
                    const auto tail = m2.path(ix, v);
                    q = join(join(head, st.q(x, tail.front())), tail);
                } else {
                    continue;
                }
                update_w.push_back(std::min(c1, c2).value());
                updates.emplace_back(u * n + v, std::move(q));
            }
        for (std::size_t k = 0; k < updates.size(); ++k) {
            st.q_paths[updates[k].first] = std::move(updates[k].second);
            st.q_weights[updates[k].first] = update_w[k];
        }
    }

    // Step 3: S* = S_L plus a hitting set of every Q path with >= 2^L hops.
    std::vector<std::vector<std::size_t>> long_q;
    for (const auto& q : st.q_paths)
        if (!q.empty() && q.size() >= top_hops + 1) long_q.push_back(q);
    Set star = greedy_hitting_set(long_q, n);
    star.insert(star.end(), st.levels[st.L].begin(), st.levels[st.L].end());
    std::sort(star.begin(), star.end());
    star.erase(std::unique(star.begin(), star.end()), star.end());
    st.s_star = std::move(star);
    return st;
}

WeightMatrix deterministic_framework(const HopEngine& eng, std::size_t h, std::size_t base_hop_factor,
                                     BridgingState* state, LevelTrace* trace) {
    if (base_hop_factor == 0) throw ParameterError("base hop factor must be positive");
    BridgingState st = build_bridging_state(eng, h);
    const std::size_t L = st.L;
    std::vector<WeightMatrix> dist(L + 1);
    const WeightMatrix d_star = base_level(eng, st.s_star, base_hop_factor * pow2(L));
    dist[L] = sub_by_positions(d_star, st.s_star, st.levels[L]);
    for (std::size_t l = L; l-- > 0;) {
        dist[l] = bridge_level(eng, st.levels[l], st.levels[l + 1], dist[l + 1], pow2(l), 2 * pow2(l));
    }
    WeightMatrix out = dist[0];
    if (trace) trace->level_distances = std::move(dist);
    if (state) *state = std::move(st);
    return out;
}

}  // namespace fewapsp
