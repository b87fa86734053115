#include "loadcast/lstsq.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace loadcast {

// Householder QR with implicit Q application to the right-hand side, then
// back substitution on R. Rank deficiency is detected from the R diagonal.
Vec least_squares(const Matrix& x, const Vec& y) {
    const std::size_t m = x.rows();
    const std::size_t n = x.cols();
    if (y.size() != m) throw std::invalid_argument("least_squares: row count mismatch");
    if (m < n) throw std::invalid_argument("least_squares: fewer rows than unknowns");

    Matrix r = x;
    Vec rhs = y;

    double max_diag = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        // Householder vector for column k below the diagonal.
        double norm = 0.0;
        for (std::size_t i = k; i < m; ++i) norm += r(i, k) * r(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            std::ostringstream os;
            os << "least_squares: design matrix is singular at column " << k
               << "; try a smaller model order";
            throw std::runtime_error(os.str());
        }
        const double alpha = r(k, k) >= 0.0 ? -norm : norm;
        Vec v(m - k, 0.0);
        v[0] = r(k, k) - alpha;
        for (std::size_t i = k + 1; i < m; ++i) v[i - k] = r(i, k);
        double vnorm2 = 0.0;
        for (double vi : v) vnorm2 += vi * vi;

        if (vnorm2 > 0.0) {
            for (std::size_t j = k; j < n; ++j) {
                double proj = 0.0;
                for (std::size_t i = k; i < m; ++i) proj += v[i - k] * r(i, j);
                const double beta = 2.0 * proj / vnorm2;
                for (std::size_t i = k; i < m; ++i) r(i, j) -= beta * v[i - k];
            }
            double proj = 0.0;
            for (std::size_t i = k; i < m; ++i) proj += v[i - k] * rhs[i];
            const double beta = 2.0 * proj / vnorm2;
            for (std::size_t i = k; i < m; ++i) rhs[i] -= beta * v[i - k];
        }
        r(k, k) = alpha;
        max_diag = std::max(max_diag, std::abs(alpha));
    }

    const double tol = max_diag * 1e-12;
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(r(k, k)) <= tol) {
            std::ostringstream os;
            os << "least_squares: design matrix is singular at column " << k
               << "; try a smaller model order";
            throw std::runtime_error(os.str());
        }
    }

    Vec beta(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        double acc = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= r(k, j) * beta[j];
        beta[k] = acc / r(k, k);
    }
    ensure_finite(beta, "least_squares");
    return beta;
}

}  // namespace loadcast
