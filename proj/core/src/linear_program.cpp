#include "simplexity/linear_program.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "simplexity/detail/checked_int.hpp"

namespace simplexity {

namespace {

using detail::CheckedInt;

template <class T>
bool is_negative(const T& v)
{
    return detail::sign_of(v) < 0;
}

template <class T>
bool phase_one_feasible(const CoordinateMatrix& a, std::span<const Coordinate> b)
{
    const std::size_t m = a.rows;
    const std::size_t n = a.cols;
    const std::size_t width = n + m + 1; // structural, artificial, rhs
    const std::size_t rhs = n + m;

    // Row m is the objective: reduced costs of the sum of artificials.
    std::vector<T> t((m + 1) * width, T(0));
    auto at = [&](std::size_t r, std::size_t c) -> T& { return t[r * width + c]; };
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) at(i, j) = T(flip ? -a(i, j) : a(i, j));
        at(i, n + i) = T(1);
        at(i, rhs) = T(flip ? -b[i] : b[i]);
        basis[i] = n + i;
        for (std::size_t j = 0; j < n; ++j) at(m, j) -= at(i, j);
        at(m, rhs) -= at(i, rhs);
    }
    T denom(1);

    while (true) {
        if (detail::sign_of(at(m, rhs)) == 0) return true;
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j) {
            if (is_negative(at(m, j))) {
                enter = j;
                break;
            }
        }
        if (enter == width) return false;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (detail::sign_of(at(i, enter)) <= 0) continue;
            if (leave == m) {
                leave = i;
                continue;
            }
            // Compare rhs_i / a_i against rhs_leave / a_leave.
            const T lhs = at(i, rhs) * at(leave, enter);
            const T cur = at(leave, rhs) * at(i, enter);
            if (lhs < cur || (lhs == cur && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) return false; // unbounded direction; cannot happen in phase one

        const T pivot = at(leave, enter);
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const T factor = at(i, enter);
            for (std::size_t c = 0; c < width; ++c) {
                at(i, c) = (pivot * at(i, c) - factor * at(leave, c)) / denom;
            }
        }
        denom = pivot;
        basis[leave] = enter;
    }
}

} // namespace

bool nonnegative_solution_exists(const CoordinateMatrix& a, std::span<const Coordinate> b)
{
    if (b.size() != a.rows) throw std::invalid_argument("nonnegative_solution_exists: size mismatch");
    try {
        return phase_one_feasible<CheckedInt>(a, b);
    } catch (const detail::Overflow&) {
        return phase_one_feasible<Integer>(a, b);
    }
}

bool simplex_interiors_intersect(const PointConfiguration& config, std::span<const Index> s1,
                                 std::span<const Index> s2)
{
    // lambda_i = (1 + x_i) / s and mu_j = (1 + y_j) / s turn the strict
    // positivity of both barycentric vectors into x, y >= 0 with sum x = sum y.
    const std::size_t d = config.dim();
    CoordinateMatrix a(d + 1, s1.size() + s2.size());
    std::vector<Coordinate> b(d + 1, 0);
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t i = 0; i < s1.size(); ++i) {
            a(c, i) = config.point(s1[i])[c];
            b[c] -= config.point(s1[i])[c];
        }
        for (std::size_t j = 0; j < s2.size(); ++j) {
            a(c, s1.size() + j) = -config.point(s2[j])[c];
            b[c] += config.point(s2[j])[c];
        }
    }
    for (std::size_t i = 0; i < s1.size(); ++i) a(d, i) = 1;
    for (std::size_t j = 0; j < s2.size(); ++j) a(d, s1.size() + j) = -1;
    b[d] = static_cast<Coordinate>(s2.size()) - static_cast<Coordinate>(s1.size());
    return nonnegative_solution_exists(a, b);
}

bool simplices_meet_properly(const PointConfiguration& config, std::span<const Index> s1,
                             std::span<const Index> s2)
{
    // Look for alpha >= 0 on s1 \ C with sum 1, beta >= 0 on s2 \ C and free
    // gamma on C = s1 cap s2 with sum alpha a - sum beta b + sum gamma c = 0 and
    // matching weight sums. A solution is a common point outside conv(C).
    std::vector<Index> only1, only2, common;
    for (Index v : s1) {
        if (std::find(s2.begin(), s2.end(), v) != s2.end()) {
            common.push_back(v);
        } else {
            only1.push_back(v);
        }
    }
    for (Index v : s2) {
        if (std::find(s1.begin(), s1.end(), v) == s1.end()) only2.push_back(v);
    }
    if (only1.empty()) return true;

    const std::size_t d = config.dim();
    const std::size_t cols = only1.size() + only2.size() + 2 * common.size();
    CoordinateMatrix a(d + 2, cols);
    std::vector<Coordinate> b(d + 2, 0);
    std::size_t col = 0;
    for (Index v : only1) {
        for (std::size_t c = 0; c < d; ++c) a(c, col) = config.point(v)[c];
        a(d, col) = 1;
        a(d + 1, col) = 1;
        ++col;
    }
    for (Index v : only2) {
        for (std::size_t c = 0; c < d; ++c) a(c, col) = -config.point(v)[c];
        a(d, col) = -1;
        ++col;
    }
    for (Index v : common) {
        for (std::size_t c = 0; c < d; ++c) {
            a(c, col) = config.point(v)[c];
            a(c, col + 1) = -config.point(v)[c];
        }
        a(d, col) = 1;
        a(d, col + 1) = -1;
        col += 2;
    }
    b[d + 1] = 1;
    return !nonnegative_solution_exists(a, b);
}

} // namespace simplexity
