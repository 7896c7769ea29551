#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

// Signed 64-bit weight with three reserved sentinels.
//
// Ordering on the raw encoding is -inf < finite < +inf, so min/max work
// directly. bot (absent entry) sits just above -inf in the encoding but is
// never meaningfully compared; every operation that may see it says so.
class Weight {
public:
    static constexpr std::int64_t kPosInfRaw = std::numeric_limits<std::int64_t>::max();
    static constexpr std::int64_t kNegInfRaw = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kBotRaw = kNegInfRaw + 1;
    // Largest magnitude a finite intermediate value may reach.
    static constexpr std::int64_t kFiniteLimit = (std::int64_t{1} << 62) - 1;
    // Default bound on input magnitudes (files, generators).
    static constexpr std::int64_t kInputBound = std::int64_t{1} << 40;

    enum class Kind { finite, pos_inf, neg_inf, bot };

    constexpr Weight() : raw_(kPosInfRaw) {}
    constexpr Weight(std::int64_t v) : raw_(v) { check_finite(v); }  // NOLINT implicit

    static constexpr Weight pos_inf() { return from_raw(kPosInfRaw); }
    static constexpr Weight neg_inf() { return from_raw(kNegInfRaw); }
    static constexpr Weight bot() { return from_raw(kBotRaw); }

    constexpr Kind kind() const {
        if (raw_ == kPosInfRaw) return Kind::pos_inf;
        if (raw_ == kNegInfRaw) return Kind::neg_inf;
        if (raw_ == kBotRaw) return Kind::bot;
        return Kind::finite;
    }
    constexpr bool is_finite() const { return kind() == Kind::finite; }
    constexpr bool is_pos_inf() const { return raw_ == kPosInfRaw; }
    constexpr bool is_neg_inf() const { return raw_ == kNegInfRaw; }
    constexpr bool is_bot() const { return raw_ == kBotRaw; }

    // Precondition: is_finite().
    std::int64_t value() const;
    constexpr std::int64_t raw() const { return raw_; }

    friend constexpr bool operator==(Weight a, Weight b) { return a.raw_ == b.raw_; }
    friend constexpr bool operator<(Weight a, Weight b) { return a.raw_ < b.raw_; }
    friend constexpr bool operator<=(Weight a, Weight b) { return a.raw_ <= b.raw_; }
    friend constexpr bool operator>(Weight a, Weight b) { return a.raw_ > b.raw_; }
    friend constexpr bool operator>=(Weight a, Weight b) { return a.raw_ >= b.raw_; }

    friend Weight operator+(Weight a, Weight b);
    friend Weight operator-(Weight a);
    Weight& operator+=(Weight b) { return *this = *this + b; }

    std::string to_string() const;
    static std::optional<Weight> parse(const std::string& token);

private:
    static constexpr Weight from_raw(std::int64_t r) {
        Weight w;
        w.raw_ = r;
        return w;
    }
    static constexpr void check_finite(std::int64_t v);

    std::int64_t raw_;
};

constexpr void Weight::check_finite(std::int64_t v) {
    if (v > kFiniteLimit || v < -kFiniteLimit) {
        throw OverflowError("weight magnitude exceeds finite limit");
    }
}

// min over weights where bot counts as absent.
Weight weight_min(Weight a, Weight b);

// Exact sum of finite weights; throws OverflowError outside the finite range.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace fewapsp
