#include "fewapsp/apsp/hitting_set.hpp"

#include <algorithm>

#include "fewapsp/core/error.hpp"

namespace fewapsp {

std::vector<std::size_t> greedy_hitting_set(const std::vector<std::vector<std::size_t>>& paths, std::size_t n) {
    std::vector<std::vector<std::size_t>> members(paths.size());
    std::vector<std::vector<std::size_t>> on(n);
    std::vector<std::size_t> count(n, 0);
    for (std::size_t p = 0; p < paths.size(); ++p) {
        if (paths[p].empty()) throw ParameterError("hitting set: empty path");
        members[p] = paths[p];
        std::sort(members[p].begin(), members[p].end());
        members[p].erase(std::unique(members[p].begin(), members[p].end()), members[p].end());
        for (auto v : members[p]) {
            if (v >= n) throw ParameterError("hitting set: vertex out of range");
            on[v].push_back(p);
            ++count[v];
        }
    }
    std::vector<bool> hit(paths.size(), false);
    std::size_t remaining = paths.size();
    std::vector<std::size_t> h;
    while (remaining > 0) {
        const auto best = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
        h.push_back(best);
        for (auto p : on[best]) {
            if (hit[p]) continue;
            hit[p] = true;
            --remaining;
            for (auto v : members[p]) --count[v];
        }
    }
    std::sort(h.begin(), h.end());
    return h;
}

}  // namespace fewapsp
