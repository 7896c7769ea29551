#include "fewapsp/minplus/products.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

namespace {

void check_product_input(const WeightMatrix& a) {
    for (auto w : a.entries()) {
        if (w.is_bot() || w.is_neg_inf()) throw ParameterError("product input must be finite or +inf");
    }
}

}  // namespace

ProductResult min_plus_naive_witness(const WeightMatrix& a, const WeightMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("min-plus shape mismatch");
    ProductResult r{WeightMatrix(a.rows(), b.cols()), WitnessMatrix(a.rows(), b.cols())};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Weight x = a(i, k);
            if (x.is_pos_inf() || x.is_bot()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Weight y = b(k, j);
                if (y.is_pos_inf() || y.is_bot()) continue;
                const Weight s = x + y;
                if (s < r.value(i, j)) {
                    r.value(i, j) = s;
                    r.witness(i, j) = static_cast<std::int64_t>(k);
                }
            }
        }
    }
    kernel_stats().ops += static_cast<std::uint64_t>(a.rows()) * a.cols() * b.cols();
    return r;
}

WeightMatrix min_plus_naive(const WeightMatrix& a, const WeightMatrix& b) {
    return min_plus_naive_witness(a, b).value;
}

ProductResult boolean_min_plus(const WeightMatrix& a, const BoolMatrix& b, std::size_t delta) {
    if (a.cols() != b.rows()) throw ShapeError("boolean min-plus shape mismatch");
    check_product_input(a);
    const std::size_t s = a.rows();
    const std::size_t n = a.cols();
    const std::size_t m = b.cols();
    ProductResult r{WeightMatrix(s, m), WitnessMatrix(s, m)};
    if (s == 0 || n == 0 || m == 0) return r;
    delta = std::clamp<std::size_t>(delta, 1, n);
    const std::size_t bucket = (n + delta - 1) / delta;
    const auto nn = static_cast<std::int64_t>(n);

    // Sorted keys n*A[i,k]+k per row; distinct keys make the order total.
    std::vector<std::vector<std::int64_t>> keys(s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Weight x = a(i, k);
            if (!x.is_finite()) continue;
            keys[i].push_back(checked_add(checked_mul(nn, x.value()), static_cast<std::int64_t>(k)));
        }
        std::sort(keys[i].begin(), keys[i].end());
    }
    auto decode = [nn](std::int64_t key, std::int64_t& value, std::size_t& k) {
        std::int64_t q = key / nn;
        std::int64_t rem = key % nn;
        if (rem < 0) {
            rem += nn;
            --q;
        }
        value = q;
        k = static_cast<std::size_t>(rem);
    };

    // A'[(i,b), k] = 1 iff k lies in bucket b of row i.
    BoolMatrix ap(s * delta, n);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t p = 0; p < keys[i].size(); ++p) {
            std::int64_t v = 0;
            std::size_t k = 0;
            decode(keys[i][p], v, k);
            ap.set(i * delta + p / bucket, k);
        }
    }
    const BoolMatrix apb = boolean_matrix_multiply(ap, b);

    std::uint64_t ops = 0;
    for (std::size_t i = 0; i < s; ++i) {
        const std::size_t nb = (keys[i].size() + bucket - 1) / bucket;
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t bsel = nb;
            for (std::size_t bb = 0; bb < nb; ++bb) {
                if (apb.get(i * delta + bb, j)) {
                    bsel = bb;
                    break;
                }
            }
            ops += bsel == nb ? nb : bsel + 1;
            if (bsel == nb) continue;
            const std::size_t lo = bsel * bucket;
            const std::size_t hi = std::min(keys[i].size(), lo + bucket);
            for (std::size_t p = lo; p < hi; ++p) {
                std::int64_t v = 0;
                std::size_t k = 0;
                decode(keys[i][p], v, k);
                ++ops;
                if (b.get(k, j)) {
                    r.value(i, j) = Weight(v);
                    r.witness(i, j) = static_cast<std::int64_t>(k);
                    break;
                }
            }
        }
    }
    kernel_stats().ops += ops;
    return r;
}

std::size_t max_column_distinct(const WeightMatrix& b) {
    std::size_t best = 0;
    std::vector<std::int64_t> vals;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        vals.clear();
        for (std::size_t k = 0; k < b.rows(); ++k)
            if (b(k, j).is_finite()) vals.push_back(b(k, j).value());
        std::sort(vals.begin(), vals.end());
        best = std::max(best, static_cast<std::size_t>(std::unique(vals.begin(), vals.end()) - vals.begin()));
    }
    return best;
}

ProductResult d_weights_min_plus(const WeightMatrix& a, const WeightMatrix& b, std::size_t d, std::size_t delta) {
    if (a.cols() != b.rows()) throw ShapeError("d-weights min-plus shape mismatch");
    if (d == 0) throw ParameterError("d must be positive");
    const std::size_t n = b.rows();
    const std::size_t m = b.cols();

    // w[j][l]: l-th distinct finite entry of column j in first-occurrence order.
    std::vector<std::vector<std::int64_t>> w(m);
    BoolMatrix bp(n, m * d);
    for (std::size_t j = 0; j < m; ++j) {
        std::unordered_map<std::int64_t, std::size_t> slot;
        for (std::size_t k = 0; k < n; ++k) {
            const Weight y = b(k, j);
            if (y.is_pos_inf()) continue;
            if (!y.is_finite()) throw ParameterError("d-weights product input must be finite or +inf");
            auto [it, fresh] = slot.try_emplace(y.value(), w[j].size());
            if (fresh) {
                if (w[j].size() == d) {
                    throw AuditError("column " + std::to_string(j) + " has more than " + std::to_string(d) +
                                     " distinct entries");
                }
                w[j].push_back(y.value());
            }
            bp.set(k, j * d + it->second);
        }
    }

    const ProductResult inner = boolean_min_plus(a, bp, delta);
    ProductResult r{WeightMatrix(a.rows(), m), WitnessMatrix(a.rows(), m)};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t l = 0; l < w[j].size(); ++l) {
                const Weight base = inner.value(i, j * d + l);
                if (base.is_pos_inf()) continue;
                const Weight cand = base + Weight(w[j][l]);
                const std::int64_t k = inner.witness(i, j * d + l);
                if (cand < r.value(i, j) || (cand == r.value(i, j) && k < r.witness(i, j))) {
                    r.value(i, j) = cand;
                    r.witness(i, j) = k;
                }
            }
        }
    }
    return r;
}

}  // namespace fewapsp
