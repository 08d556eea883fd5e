#include "qpc/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpc {

AffineSpace::AffineSpace(FieldPtr field, unsigned m) : field_(std::move(field)), m_(m) {
    if (m < 1) throw std::invalid_argument("affine space dimension must be >= 1");
    const unsigned q = field_->q();
    std::uint64_t n = ipow_checked(q, m);
    if (n > (1u << 24)) throw std::invalid_argument("affine space too large to materialize");
    n_ = std::size_t(n);
    q_analogue_ = (n - 1) / (q - 1);
    coords_.resize(n_ * m_);
    for (std::size_t i = 0; i < n_; ++i) {
        std::size_t v = i;
        for (unsigned j = 0; j < m_; ++j) {
            coords_[i * m_ + j] = Elem(v % q);
            v /= q;
        }
    }
    if (m_ <= 3) {
        lines_ = enumerate_lines();
        std::call_once(lines_once_, [] {});
    }
}

std::size_t AffineSpace::point_index(std::span<const Elem> coords) const {
    if (coords.size() != m_) throw std::invalid_argument("coordinate count mismatch");
    std::size_t idx = 0, pw = 1;
    for (unsigned j = 0; j < m_; ++j) {
        idx += pw * coords[j];
        pw *= field_->q();
    }
    return idx;
}

Line AffineSpace::line_from(std::size_t a, std::span<const Elem> direction) const {
    const Field& f = *field_;
    const unsigned q = f.q();
    // walk the line once to find the minimal point index, then list the
    // points in t-order from there
    std::vector<Elem> pt(m_);
    std::size_t best = n_;
    for (unsigned t = 0; t < q; ++t) {
        auto base_pt = point(a);
        for (unsigned j = 0; j < m_; ++j) pt[j] = f.add(base_pt[j], f.mul(Elem(t), direction[j]));
        best = std::min(best, point_index(pt));
    }
    Line line;
    line.base = best;
    line.direction.assign(direction.begin(), direction.end());
    line.points.resize(q);
    for (unsigned t = 0; t < q; ++t) {
        auto base_pt = point(best);
        for (unsigned j = 0; j < m_; ++j) pt[j] = f.add(base_pt[j], f.mul(Elem(t), direction[j]));
        line.points[t] = point_index(pt);
    }
    return line;
}

Line AffineSpace::line_through(std::size_t a, std::size_t b) const {
    if (a == b) throw std::invalid_argument("two distinct points are needed to span a line");
    if (a >= n_ || b >= n_) throw std::invalid_argument("point index out of range");
    const Field& f = *field_;
    std::vector<Elem> dir(m_);
    auto pa = point(a), pb = point(b);
    for (unsigned j = 0; j < m_; ++j) dir[j] = f.sub(pb[j], pa[j]);
    // normalize: last nonzero coordinate becomes 1
    unsigned last = m_;
    for (unsigned j = m_; j-- > 0;)
        if (dir[j] != 0) {
            last = j;
            break;
        }
    Elem scale = f.inv(dir[last]);
    for (unsigned j = 0; j < m_; ++j) dir[j] = f.mul(scale, dir[j]);
    return line_from(a, dir);
}

std::vector<Line> AffineSpace::lines_through_point(std::size_t a) const {
    if (a >= n_) throw std::invalid_argument("point index out of range");
    const Field& f = *field_;
    const unsigned q = f.q();
    std::vector<Line> out;
    out.reserve(q_analogue_);
    // enumerate one direction per parallel class: all nonzero vectors whose
    // last nonzero coordinate is 1
    std::vector<Elem> dir(m_);
    for (unsigned last = 0; last < m_; ++last) {
        std::uint64_t combos = ipow_checked(q, last);
        for (std::uint64_t e = 0; e < combos; ++e) {
            std::uint64_t v = e;
            for (unsigned j = 0; j < m_; ++j) dir[j] = 0;
            for (unsigned j = 0; j < last; ++j) {
                dir[j] = Elem(v % q);
                v /= q;
            }
            dir[last] = 1;
            out.push_back(line_from(a, dir));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool AffineSpace::collinear(std::size_t a, std::size_t b, std::size_t c) const {
    if (a >= n_ || b >= n_ || c >= n_) throw std::invalid_argument("point index out of range");
    if (a == b || a == c || b == c) return true;
    const Field& f = *field_;
    auto pa = point(a), pb = point(b), pc = point(c);
    // c is on the line through a and b iff (pc - pa) is a scalar multiple of
    // (pb - pa)
    std::vector<Elem> u(m_), v(m_);
    for (unsigned j = 0; j < m_; ++j) {
        u[j] = f.sub(pb[j], pa[j]);
        v[j] = f.sub(pc[j], pa[j]);
    }
    unsigned piv = m_;
    for (unsigned j = 0; j < m_; ++j)
        if (u[j] != 0) {
            piv = j;
            break;
        }
    Elem s = f.mul(v[piv], f.inv(u[piv]));
    for (unsigned j = 0; j < m_; ++j)
        if (v[j] != f.mul(s, u[j])) return false;
    return true;
}

std::vector<Line> AffineSpace::enumerate_lines() const {
    const unsigned q = field_->q();
    std::vector<Line> out;
    std::vector<bool> seen(n_);
    std::vector<Elem> dir(m_);
    for (unsigned last = 0; last < m_; ++last) {
        std::uint64_t combos = ipow_checked(q, last);
        for (std::uint64_t e = 0; e < combos; ++e) {
            std::uint64_t v = e;
            for (unsigned j = 0; j < m_; ++j) dir[j] = 0;
            for (unsigned j = 0; j < last; ++j) {
                dir[j] = Elem(v % q);
                v /= q;
            }
            dir[last] = 1;
            // one line of this parallel class through every unvisited point
            std::fill(seen.begin(), seen.end(), false);
            for (std::size_t p = 0; p < n_; ++p) {
                if (seen[p]) continue;
                Line line = line_from(p, dir);
                for (std::size_t pt : line.points) seen[pt] = true;
                out.push_back(std::move(line));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Line>& AffineSpace::all_lines() const {
    std::call_once(lines_once_, [this] { lines_ = enumerate_lines(); });
    return *lines_;
}

}  // namespace qpc
