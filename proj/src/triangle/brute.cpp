#include "fewapsp/triangle/brute.hpp"

namespace fewapsp {

TriangleReport aete_brute(const TriangleInstance& inst) {
    const std::size_t n = inst.n();
    TriangleReport r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!inst.c(i, j).is_finite()) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (inst.is_triangle(i, k, j)) {
                    r.mark(i, j, static_cast<std::int64_t>(k));
                    break;
                }
        }
    return r;
}

std::vector<Triple> list_triangles(const TriangleInstance& inst) {
    const std::size_t n = inst.n();
    std::vector<Triple> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (!inst.a(i, k).is_finite()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (inst.is_triangle(i, k, j)) out.push_back({i, k, j});
        }
    return out;
}

void attach_witnesses(const TriangleInstance& inst, TriangleReport& report) {
    const std::size_t n = inst.n();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!report.at(i, j)) continue;
            auto& w = report.witness[i * n + j];
            if (w >= 0 && inst.is_triangle(i, static_cast<std::size_t>(w), j)) continue;
            w = -1;
            for (std::size_t k = 0; k < n && w < 0; ++k)
                if (inst.is_triangle(i, k, j)) w = static_cast<std::int64_t>(k);
        }
}

}  // namespace fewapsp
