#include "fewapsp/triangle/uniform_regular.hpp"

#include <map>
#include <string>

#include "fewapsp/core/error.hpp"
#include "fewapsp/triangle/small_doubling.hpp"

namespace fewapsp {

std::size_t regularity_bound(std::size_t n, std::size_t d) { return std::max<std::size_t>(1, d == 0 ? n : n / d); }

TriangleReport aete_uniform_regular(const TriangleInstance& inst, std::size_t d, std::size_t k, Rng& rng,
                                    const CoverConfig& cfg, UniformRegularStats* stats) {
    inst.validate();
    const std::size_t n = inst.n();
    const RegularityAudit audit = audit_instance(inst);
    if (!audit.uniform(d)) throw AuditError("instance is not " + std::to_string(d) + "-uniform");
    const std::size_t r = regularity_bound(n, d);
    if (!audit.regular(r)) {
        throw AuditError("instance is not " + std::to_string(r) + "-regular (max occurrence " +
                         std::to_string(audit.max_occurrence()) + ")");
    }
    UniformRegularStats local;
    UniformRegularStats& st = stats ? *stats : local;
    st = {};

    const IntSet x = distinct_entries(inst.a), y = distinct_entries(inst.b), z = distinct_entries(inst.c);
    const CoverOutput cover = bsg_cover(x, y, z, k, rng, cfg);
    st.cover = cover.audit;
    TriangleReport report(n);

    for (const auto& part : cover.parts) {
        if (part.x.empty() || part.y.empty()) continue;
        TriangleInstance sub{restrict_entries(inst.a, part.x), restrict_entries(inst.b, part.y), inst.c,
                             inst.orientation};
        report.merge(aete_small_doubling(sub));
        ++st.structured_calls;
    }

    if (!cover.remainder.empty()) {
        // rows_of[k][a]: rows i with A[i,k] = a; cols_of[k][b]: columns j with B[k,j] = b.
        std::vector<std::map<std::int64_t, std::vector<std::size_t>>> rows_of(n), cols_of(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t kk = 0; kk < n; ++kk) {
                if (inst.a(i, kk).is_finite()) rows_of[kk][inst.a(i, kk).value()].push_back(i);
                if (inst.b(i, kk).is_finite()) cols_of[i][inst.b(i, kk).value()].push_back(kk);
            }
        for (const auto& [av, bv] : cover.remainder) {
            for (std::size_t kk = 0; kk < n; ++kk) {
                auto ia = rows_of[kk].find(av);
                auto jb = cols_of[kk].find(bv);
                if (ia == rows_of[kk].end() || jb == cols_of[kk].end()) continue;
                for (auto i : ia->second)
                    for (auto j : jb->second) {
                        ++st.remainder_triples;
                        const Weight c = inst.c(i, j);
                        if (c.is_finite() && c.value() == av + bv) report.mark(i, j, static_cast<std::int64_t>(kk));
                    }
            }
        }
    }
    return report;
}

}  // namespace fewapsp
