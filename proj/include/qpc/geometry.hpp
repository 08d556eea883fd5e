#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qpc/linalg.hpp"

namespace qpc {

// A line of AG(m,q): q points {base + t*direction : t in F_q}, listed in
// t-order. Canonical form: base is the minimal point index on the line and
// the direction is scaled so its last nonzero coordinate is 1, which picks
// one representative per parallel class. Two lines are equal iff their point
// sets are equal, i.e. iff base and direction agree.
struct Line {
    std::size_t base = 0;
    std::vector<Elem> direction;
    std::vector<std::size_t> points;

    bool operator==(const Line& other) const {
        return base == other.base && direction == other.direction;
    }
    bool operator<(const Line& other) const {
        if (base != other.base) return base < other.base;
        return direction < other.direction;
    }
};

// The point set of AG(m,q) in the canonical order: point index i, written
// base q with x_1 as the least significant digit, gives the coordinate
// vector (x_1..x_m). This fixed order determines the column layout of every
// parity-check matrix built downstream.
class AffineSpace {
  public:
    AffineSpace(FieldPtr field, unsigned m);

    const FieldPtr& field() const { return field_; }
    unsigned m() const { return m_; }
    std::size_t n() const { return n_; }

    // (q^m - 1)/(q - 1), the number of lines through each point.
    std::uint64_t q_analogue() const { return q_analogue_; }

    std::span<const Elem> point(std::size_t i) const { return {coords_.data() + i * m_, m_}; }
    std::size_t point_index(std::span<const Elem> coords) const;

    // The unique canonical line through two distinct points.
    Line line_through(std::size_t a, std::size_t b) const;

    // All q_analogue() lines through a, pairwise meeting only in a, sorted
    // canonically.
    std::vector<Line> lines_through_point(std::size_t a) const;

    // True iff the three points lie on a common line; true whenever two of
    // the indices coincide.
    bool collinear(std::size_t a, std::size_t b, std::size_t c) const;

    // Every line of the space, sorted canonically. Materialized eagerly for
    // m <= 3, on first request above that.
    const std::vector<Line>& all_lines() const;

  private:
    Line line_from(std::size_t a, std::span<const Elem> direction) const;
    std::vector<Line> enumerate_lines() const;

    FieldPtr field_;
    unsigned m_;
    std::size_t n_;
    std::uint64_t q_analogue_;
    std::vector<Elem> coords_;  // n_ x m_, row-major

    mutable std::once_flag lines_once_;
    mutable std::optional<std::vector<Line>> lines_;
};

}  // namespace qpc
