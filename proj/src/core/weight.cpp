#include "fewapsp/core/weight.hpp"

#include <charconv>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

std::int64_t Weight::value() const {
    if (!is_finite()) throw Error("value() on non-finite weight " + to_string());
    return raw_;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t s = 0;
    if (__builtin_add_overflow(a, b, &s) || s > Weight::kFiniteLimit || s < -Weight::kFiniteLimit) {
        throw OverflowError("weight sum out of range");
    }
    return s;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t s = 0;
    if (__builtin_mul_overflow(a, b, &s) || s > Weight::kFiniteLimit || s < -Weight::kFiniteLimit) {
        throw OverflowError("weight product out of range");
    }
    return s;
}

Weight operator+(Weight a, Weight b) {
    if (a.is_bot() || b.is_bot()) return Weight::bot();
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
        throw Error("undefined sum +inf + -inf");
    }
    if (a.is_pos_inf() || b.is_pos_inf()) return Weight::pos_inf();
    if (a.is_neg_inf() || b.is_neg_inf()) return Weight::neg_inf();
    return Weight(checked_add(a.raw_, b.raw_));
}

Weight operator-(Weight a) {
    switch (a.kind()) {
        case Weight::Kind::bot: return a;
        case Weight::Kind::pos_inf: return Weight::neg_inf();
        case Weight::Kind::neg_inf: return Weight::pos_inf();
        case Weight::Kind::finite: break;
    }
    return Weight(-a.raw_);
}

Weight weight_min(Weight a, Weight b) {
    if (a.is_bot()) return b.is_bot() ? Weight::pos_inf() : b;
    if (b.is_bot()) return a;
    return a < b ? a : b;
}

std::string Weight::to_string() const {
    switch (kind()) {
        case Kind::pos_inf: return "inf";
        case Kind::neg_inf: return "-inf";
        case Kind::bot: return "bot";
        case Kind::finite: break;
    }
    return std::to_string(raw_);
}

std::optional<Weight> Weight::parse(const std::string& token) {
    if (token == "inf" || token == "+inf") return pos_inf();
    if (token == "-inf") return neg_inf();
    if (token == "bot") return bot();
    std::int64_t v = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) return std::nullopt;
    if (v > kFiniteLimit || v < -kFiniteLimit) return std::nullopt;
    return Weight(v);
}

}  // namespace fewapsp
