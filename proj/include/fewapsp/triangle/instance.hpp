#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fewapsp/additive/sumset.hpp"
#include "fewapsp/core/matrix.hpp"

namespace fewapsp {

// (i, k, j) with A[i,k] + B[k,j] = C[i,j].
struct Triple {
    std::size_t i = 0, k = 0, j = 0;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// The six rotations of an instance. Each one maps triangles bijectively:
//   identity (A, B, C)        (i,k,j)
//   a_cols   (Aᵀ, -C, -B)     (k,i,j)
//   b_rows   (B, -Cᵀ, -Aᵀ)    (k,j,i)
//   b_cols   (Bᵀ, Aᵀ, Cᵀ)     (j,k,i)
//   c_rows   (-C, Bᵀ, -A)     (i,j,k)
//   c_cols   (-Cᵀ, A, -Bᵀ)    (j,i,k)
enum class Orientation { identity, a_cols, b_rows, b_cols, c_rows, c_cols };

// Which side of the instance carries at most d distinct entries per line.
enum class PromiseSide { a_rows, a_cols, b_rows, b_cols, c_rows, c_cols };

std::string to_string(Orientation o);
std::string to_string(PromiseSide s);
PromiseSide parse_promise_side(const std::string& s);

// new_triple[t] = old_triple[perm[t]], indexing a triple as (i, k, j).
std::array<int, 3> orientation_perm(Orientation o);
Orientation orientation_from_perm(const std::array<int, 3>& perm);
// Applying `first` then `second` equals applying compose(first, second).
Orientation compose(Orientation first, Orientation second);
Orientation inverse(Orientation o);

// n x n matrices whose entries are finite weights or bot.
struct TriangleInstance {
    WeightMatrix a, b, c;
    // Rotation relative to the instance the caller started from.
    Orientation orientation = Orientation::identity;

    std::size_t n() const { return a.rows(); }
    bool is_triangle(std::size_t i, std::size_t k, std::size_t j) const;
    // Triple in this instance's coordinates -> triple in the starting coordinates.
    Triple to_original(const Triple& t) const;
    // Throws ShapeError / ParameterError on non-square shapes or infinite entries.
    void validate() const;
};

TriangleInstance make_instance(WeightMatrix a, WeightMatrix b, WeightMatrix c);
WeightMatrix bot_matrix(std::size_t n);

struct TriangleReport {
    std::size_t n = 0;
    std::vector<std::uint8_t> yes;
    std::vector<std::int64_t> witness;  // -1 when unknown or absent

    explicit TriangleReport(std::size_t size = 0) : n(size), yes(size * size, 0), witness(size * size, -1) {}
    bool at(std::size_t i, std::size_t j) const { return yes[i * n + j] != 0; }
    void mark(std::size_t i, std::size_t j, std::int64_t k = -1);
    void merge(const TriangleReport& other);
    std::size_t count() const;
    bool same_answers(const TriangleReport& other) const { return n == other.n && yes == other.yes; }
};

struct MatrixAudit {
    std::size_t distinct = 0;
    std::size_t max_row_distinct = 0;
    std::size_t max_col_distinct = 0;
    std::size_t max_row_occurrence = 0;
    std::size_t max_col_occurrence = 0;
};

struct RegularityAudit {
    MatrixAudit a, b, c;

    bool uniform(std::size_t d) const { return a.distinct <= d && b.distinct <= d && c.distinct <= d; }
    bool regular(std::size_t r) const;
    std::size_t max_occurrence() const;
};

MatrixAudit audit_matrix(const WeightMatrix& m);
RegularityAudit audit_instance(const TriangleInstance& inst);
// Largest per-line distinct count on the promised side.
std::size_t promise_distinct(const TriangleInstance& inst, PromiseSide side);

IntSet distinct_entries(const WeightMatrix& m);
// Keeps entries in `keep`, bot elsewhere.
WeightMatrix restrict_entries(const WeightMatrix& m, const IntSet& keep);

}  // namespace fewapsp
