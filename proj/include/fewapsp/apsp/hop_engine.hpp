#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "fewapsp/core/graph.hpp"
#include "fewapsp/minplus/hop_product.hpp"

namespace fewapsp {

// The hop-bounded product primitive the APSP frameworks are written against.
class HopEngine {
public:
    virtual ~HopEngine() = default;
    virtual std::size_t n() const = 0;
    // A * D^{<=h}, A is S x V.
    virtual HopResult right(const WeightMatrix& a, std::size_t h, bool witnesses) const = 0;
    // D^{<=h} * A, A is V x S.
    virtual HopResult left(const WeightMatrix& a, std::size_t h, bool witnesses) const = 0;
    // Weight of a walk v_0..v_l, excluding the start.
    virtual std::int64_t path_weight(const std::vector<std::size_t>& path) const = 0;
};

class NodeWeightedEngine final : public HopEngine {
public:
    NodeWeightedEngine(const NodeWeightedGraph& g, std::size_t delta) : g_(g), delta_(delta) {}
    std::size_t n() const override { return g_.n(); }
    HopResult right(const WeightMatrix& a, std::size_t h, bool witnesses) const override;
    HopResult left(const WeightMatrix& a, std::size_t h, bool witnesses) const override;
    std::int64_t path_weight(const std::vector<std::size_t>& path) const override;

private:
    const NodeWeightedGraph& g_;
    std::size_t delta_;
};

class EdgeWeightedEngine final : public HopEngine {
public:
    // d bounds the distinct incoming weights per node (checked).
    EdgeWeightedEngine(const EdgeWeightedGraph& g, std::size_t d, std::size_t delta);
    std::size_t n() const override { return g_.n(); }
    HopResult right(const WeightMatrix& a, std::size_t h, bool witnesses) const override;
    HopResult left(const WeightMatrix& a, std::size_t h, bool witnesses) const override;
    std::int64_t path_weight(const std::vector<std::size_t>& path) const override;

private:
    const EdgeWeightedGraph& g_;
    std::size_t d_;
    std::size_t delta_;
    WeightMatrix e_;
};

using MinPlusFn = std::function<WeightMatrix(const WeightMatrix&, const WeightMatrix&)>;

// Edge-weighted engine whose every one-hop step is delegated to an arbitrary
// min-plus product routine; witnesses are recovered by scanning.
class CustomProductEngine final : public HopEngine {
public:
    CustomProductEngine(const EdgeWeightedGraph& g, MinPlusFn product);
    std::size_t n() const override { return e_.rows(); }
    HopResult right(const WeightMatrix& a, std::size_t h, bool witnesses) const override;
    HopResult left(const WeightMatrix& a, std::size_t h, bool witnesses) const override;
    std::int64_t path_weight(const std::vector<std::size_t>& path) const override;

private:
    HopResult sweep(const WeightMatrix& a, const WeightMatrix& e, std::size_t h, bool witnesses) const;

    MinPlusFn product_;
    WeightMatrix e_;
    WeightMatrix et_;
};

}  // namespace fewapsp
