#pragma once

#include <cstdint>
#include <stdexcept>

#include "simplexity/exact_geometry.hpp"

namespace simplexity::detail {

struct Overflow : std::overflow_error
{
    Overflow()
        : std::overflow_error("64-bit overflow")
    {}
};

/// int64 that throws Overflow instead of wrapping. Used as the fast path of
/// fraction-free algorithms, which are re-run with Integer on overflow.
class CheckedInt
{
  public:
    constexpr CheckedInt() = default;
    constexpr CheckedInt(std::int64_t v)
        : m_v(v)
    {}

    constexpr std::int64_t value() const { return m_v; }

    friend CheckedInt operator+(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a.m_v, b.m_v, &r)) throw Overflow();
        return r;
    }
    friend CheckedInt operator-(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_sub_overflow(a.m_v, b.m_v, &r)) throw Overflow();
        return r;
    }
    friend CheckedInt operator*(CheckedInt a, CheckedInt b)
    {
        std::int64_t r;
        if (__builtin_mul_overflow(a.m_v, b.m_v, &r)) throw Overflow();
        return r;
    }
    friend CheckedInt operator/(CheckedInt a, CheckedInt b)
    {
        if (b.m_v == -1 && a.m_v == INT64_MIN) throw Overflow();
        return a.m_v / b.m_v;
    }
    CheckedInt operator-() const
    {
        if (m_v == INT64_MIN) throw Overflow();
        return -m_v;
    }
    CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
    CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
    CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

    friend constexpr bool operator==(CheckedInt a, CheckedInt b) { return a.m_v == b.m_v; }
    friend constexpr auto operator<=>(CheckedInt a, CheckedInt b) { return a.m_v <=> b.m_v; }

  private:
    std::int64_t m_v = 0;
};

inline Integer to_integer(CheckedInt v) { return Integer(v.value()); }
inline Integer to_integer(const Integer& v) { return v; }

inline int sign_of(CheckedInt v) { return (v.value() > 0) - (v.value() < 0); }
inline int sign_of(const Integer& v) { return v.sign(); }

template <class T>
DenseMatrix<T> convert_matrix(const CoordinateMatrix& m)
{
    DenseMatrix<T> out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = T(m.data[i]);
    return out;
}

/// Fraction-free (Bareiss) determinant; the matrix is consumed.
template <class T>
T bareiss_determinant(DenseMatrix<T> m)
{
    const std::size_t n = m.rows;
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    return negate ? T(0) - m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Fraction-free echelon elimination; returns the rank.
template <class T>
std::size_t bareiss_rank(DenseMatrix<T> m)
{
    std::size_t rank = 0;
    T prev(1);
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t p = rank;
        while (p < m.rows && m(p, col) == T(0)) ++p;
        if (p == m.rows) continue;
        if (p != rank) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(rank, j), m(p, j));
        }
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            for (std::size_t j = col + 1; j < m.cols; ++j) {
                m(i, j) = (m(i, j) * m(rank, col) - m(i, col) * m(rank, j)) / prev;
            }
            m(i, col) = T(0);
        }
        prev = m(rank, col);
        ++rank;
    }
    return rank;
}

} // namespace simplexity::detail
