#include "qrma/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qrma/errors.hpp"

namespace qrma {

namespace {

void check_block(const TridiagonalBlock& block) {
    if (block.diag.empty()) throw InvalidParameter("empty tridiagonal block");
    if (block.offdiag.size() + 1 != block.diag.size()) {
        throw InvalidParameter("tridiagonal block: offdiag must have size n - 1");
    }
}

// Implicit QL with Wilkinson-type shifts (tql2 lineage). On exit d holds the
// unsorted eigenvalues; when z is non-null its columns hold the eigenvectors.
void implicit_ql(std::vector<double>& d, std::vector<double> e, Eigen::MatrixXd* z) {
    const int n = static_cast<int>(d.size());
    e.push_back(0.0);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m = l;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (++iter > kQlIterationCap) {
                throw ConvergenceError("tridiagonal QL did not converge for eigenvalue " +
                                       std::to_string(l));
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            int i = m - 1;
            for (; i >= l; --i) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if (z != nullptr) {
                    auto left = z->col(i);
                    auto right = z->col(i + 1);
                    for (Eigen::Index k = 0; k < z->rows(); ++k) {
                        const double zr = right(k);
                        right(k) = s * left(k) + c * zr;
                        left(k) = c * left(k) - s * zr;
                    }
                }
            }
            if (r == 0.0 && i >= l) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
}

Eigen::Index leading_index(const Eigen::MatrixXd& z, Eigen::Index col) {
    for (Eigen::Index k = 0; k < z.rows(); ++k) {
        if (std::abs(z(k, col)) > kSignThreshold) return k;
    }
    return z.rows();
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(const TridiagonalBlock& block) {
    check_block(block);
    std::vector<double> d = block.diag;
    implicit_ql(d, block.offdiag, nullptr);
    std::sort(d.begin(), d.end());
    return d;
}

TridiagonalEigen tridiagonal_eigensystem(const TridiagonalBlock& block) {
    check_block(block);
    const auto n = static_cast<Eigen::Index>(block.size());
    std::vector<double> d = block.diag;
    Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);
    implicit_ql(d, block.offdiag, &z);

    std::vector<Eigen::Index> lead(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        lead[static_cast<std::size_t>(j)] = leading_index(z, j);
        if (lead[static_cast<std::size_t>(j)] < n && z(lead[static_cast<std::size_t>(j)], j) < 0.0) {
            z.col(j) *= -1.0;
        }
    }

    std::vector<std::size_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
    // Near-degenerate runs are reordered by leading component for reproducible output.
    for (std::size_t start = 0; start < order.size();) {
        std::size_t stop = start + 1;
        while (stop < order.size() && d[order[stop]] - d[order[start]] < kTieTolerance) ++stop;
        std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                         order.begin() + static_cast<std::ptrdiff_t>(stop),
                         [&](std::size_t a, std::size_t b) { return lead[a] < lead[b]; });
        start = stop;
    }

    TridiagonalEigen out;
    out.values.resize(order.size());
    out.vectors.resize(n, n);
    for (std::size_t j = 0; j < order.size(); ++j) {
        out.values[j] = d[order[j]];
        out.vectors.col(static_cast<Eigen::Index>(j)) = z.col(static_cast<Eigen::Index>(order[j]));
    }
    return out;
}

}  // namespace qrma
