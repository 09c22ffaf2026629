#include "amtk/linalg.hpp"

#include <stdexcept>

namespace amtk {

Rat determinant(QMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix not square");
    size_t n = m.rows;
    Rat det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && m.at(sel, c) == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(sel, j));
            det = -det;
        }
        det *= m.at(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) / m.at(c, c);
            for (size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

std::optional<std::vector<Rat>> solve_square(QMatrix m, std::vector<Rat> rhs) {
    if (m.rows != m.cols || rhs.size() != m.rows)
        throw std::invalid_argument("solve_square: shape mismatch");
    size_t n = m.rows;
    for (size_t c = 0; c < n; ++c) {
        size_t sel = c;
        while (sel < n && m.at(sel, c) == 0) ++sel;
        if (sel == n) return std::nullopt;
        if (sel != c) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(c, j), m.at(sel, j));
            std::swap(rhs[c], rhs[sel]);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) / m.at(c, c);
            for (size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
            rhs[i] -= f * rhs[c];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = 0; i < n; ++i) {
        x[i] = rhs[i] / m.at(i, i);
        x[i].canonicalize();
    }
    return x;
}

std::vector<size_t> rref(QMatrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t sel = r;
        while (sel < m.rows && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
        Rat inv = m.at(r, c);
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) /= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rat>> nullspace(const QMatrix& m) {
    QMatrix r = m;
    std::vector<size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace amtk
