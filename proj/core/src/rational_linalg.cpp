#include "heisengram/rational_linalg.hpp"

#include <stdexcept>

namespace heisengram {

int rational_rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rational factor = m[r][col] / m[rank][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

RationalSolveResult rational_solve(const RationalMatrix& m, const std::vector<Rational>& rhs) {
    const size_t n = m.size();
    if (n == 0 || m[0].size() != n || rhs.size() != n)
        throw std::invalid_argument("rational_solve: need a square system");
    // Gauss-Jordan on the augmented matrix.
    RationalMatrix a(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n] = rhs[i];
    }
    std::vector<int> pivot_col_of_row(n, -1);
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < n; ++col) {
        size_t pivot = rank;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(a[rank], a[pivot]);
        const Rational inv = a[rank][col];
        for (size_t c = col; c <= n; ++c) a[rank][c] /= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (size_t c = col; c <= n; ++c) a[r][c] -= factor * a[rank][c];
        }
        pivot_col_of_row[rank] = static_cast<int>(col);
        ++rank;
    }

    RationalSolveResult result;
    result.rank = static_cast<int>(rank);
    std::vector<bool> is_pivot_col(n, false);
    for (size_t r = 0; r < rank; ++r) is_pivot_col[pivot_col_of_row[r]] = true;

    if (rank < n) {
        // Kernel vector from the first free column.
        size_t free_col = 0;
        while (free_col < n && is_pivot_col[free_col]) ++free_col;
        result.kernel_vector.assign(n, Rational(0));
        result.kernel_vector[free_col] = 1;
        for (size_t r = 0; r < rank; ++r)
            result.kernel_vector[pivot_col_of_row[r]] = -a[r][free_col];
        // Consistency: a zero row must carry a zero right-hand side.
        for (size_t r = rank; r < n; ++r)
            if (a[r][n] != 0) return result;  // solvable stays false
    }
    result.solvable = true;
    result.solution.assign(n, Rational(0));
    for (size_t r = 0; r < rank; ++r) result.solution[pivot_col_of_row[r]] = a[r][n];
    return result;
}

}  // namespace heisengram
