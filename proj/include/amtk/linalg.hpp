#ifndef AMTK_LINALG_HPP
#define AMTK_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "amtk/exact.hpp"

namespace amtk {

// Dense rational matrix for the small exact systems in this project
// (leading Krawtchouk subsystems, inclusion-matrix kernels in tests).
struct QMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Rat> a;

    QMatrix() = default;
    QMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rat& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// Determinant by fraction-free style Gaussian elimination over Q.
Rat determinant(QMatrix m);

/// Solves the square system m x = rhs. Returns nullopt when m is singular.
std::optional<std::vector<Rat>> solve_square(QMatrix m, std::vector<Rat> rhs);

/// In-place reduced row echelon form; returns pivot column indices.
/// Pivot selection scans columns left to right, so the result is
/// deterministic for a fixed row order.
std::vector<size_t> rref(QMatrix& m);

/// Basis of the right nullspace of m, one vector per free column,
/// in ascending free-column order.
std::vector<std::vector<Rat>> nullspace(const QMatrix& m);

}  // namespace amtk

#endif
