#include "wqap/recognize.hpp"

#include <cstdlib>
#include <string>

#include "wqap/arith.hpp"
#include "wqap/errors.hpp"

namespace wqap {

namespace {

std::string cell_name(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void require_square_nonnegative(const IntMatrix& m, ErrorCode reject) {
    if (m.n <= 0 || m.cells.size() != static_cast<std::size_t>(m.n) * m.n)
        throw Error(ErrorCode::NotSquare, "matrix is not square");
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j) < 0)
                throw Error(reject, "negative entry at " + cell_name(i, j));
}

}  // namespace

std::vector<std::int64_t> factor_product_matrix(const IntMatrix& a) {
    require_square_nonnegative(a, ErrorCode::NotProductMatrix);
    int n = a.n;

    int pivot = -1;
    for (int i = 0; i < n && pivot < 0; ++i)
        if (a.at(i, i) > 0) pivot = i;

    std::vector<std::int64_t> alphas(n, 0);
    if (pivot < 0) {
        // Zero diagonal everywhere: only the all-zero matrix factors.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (a.at(i, j) != 0)
                    throw Error(ErrorCode::NotProductMatrix,
                                "zero diagonal with nonzero cell " +
                                    cell_name(i, j));
        return alphas;
    }

    std::int64_t root = isqrt64(a.at(pivot, pivot));
    if (root * root != a.at(pivot, pivot))
        throw Error(ErrorCode::NotProductMatrix,
                    "diagonal cell " + cell_name(pivot, pivot) +
                        " is not a perfect square");
    alphas[pivot] = root;
    for (int j = 0; j < n; ++j) {
        if (j == pivot) continue;
        if (a.at(pivot, j) % root != 0)
            throw Error(ErrorCode::NotProductMatrix,
                        "cell " + cell_name(pivot, j) +
                            " is not divisible by the pivot weight");
        alphas[j] = a.at(pivot, j) / root;
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Wide expect = checked_mul(Wide(alphas[i]), Wide(alphas[j]));
            if (expect != Wide(a.at(i, j)))
                throw Error(ErrorCode::NotProductMatrix,
                            "cell " + cell_name(i, j) +
                                " violates the product structure");
        }
    return alphas;
}

std::vector<std::int64_t> recover_point_set(const IntMatrix& b) {
    require_square_nonnegative(b, ErrorCode::Not1DDistanceMatrix);
    int n = b.n;

    std::vector<std::int64_t> betas(n, 0);
    for (int j = 1; j < n; ++j) {
        betas[j] = b.at(0, j);
        if (betas[j] < betas[j - 1])
            throw Error(ErrorCode::Not1DDistanceMatrix,
                        "first row is not non-decreasing at " + cell_name(0, j));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(betas[i] - betas[j]) != b.at(i, j))
                throw Error(ErrorCode::Not1DDistanceMatrix,
                            "cell " + cell_name(i, j) +
                                " is inconsistent with the recovered points");
    return betas;
}

}  // namespace wqap
