#include "ftt/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "ftt/error.hpp"
#include "ftt/trig.hpp"

namespace ftt {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double max_abs_entry(const SymTridiagonal& t) noexcept {
    double m = 0.0;
    for (double d : t.diag()) m = std::max(m, std::abs(d));
    for (double e : t.offdiag()) m = std::max(m, std::abs(e));
    return m;
}

// Solves (T - shift I) x = rhs by Gaussian elimination with partial pivoting.
// Exact zero pivots are replaced by a tiny value, which is what inverse iteration wants.
std::vector<double> solve_shifted(const SymTridiagonal& t, double shift, std::vector<double> rhs) {
    const std::size_t n = t.size();
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = t.diag()[i] - shift;
    std::vector<double> sup(t.offdiag());
    std::vector<double> sub(t.offdiag());
    std::vector<double> sup2(n > 2 ? n - 2 : 0, 0.0);
    const double tiny = kEps * std::max(1.0, max_abs_entry(t));

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(diag[i]) >= std::abs(sub[i])) {
            if (diag[i] == 0.0) diag[i] = tiny;
            const double m = sub[i] / diag[i];
            diag[i + 1] -= m * sup[i];
            rhs[i + 1] -= m * rhs[i];
        } else {
            const double m = diag[i] / sub[i];
            diag[i] = sub[i];
            const double d_next = diag[i + 1];
            diag[i + 1] = sup[i] - m * d_next;
            if (i + 2 < n) {
                sup2[i] = sup[i + 1];
                sup[i + 1] = -m * sup[i + 1];
            }
            sup[i] = d_next;
            const double r = rhs[i];
            rhs[i] = rhs[i + 1];
            rhs[i + 1] = r - m * rhs[i + 1];
        }
    }
    if (diag[n - 1] == 0.0) diag[n - 1] = tiny;

    std::vector<double> x(n);
    for (std::size_t k = n; k-- > 0;) {
        double s = rhs[k];
        if (k + 1 < n) s -= sup[k] * x[k + 1];
        if (k + 2 < n) s -= sup2[k] * x[k + 2];
        x[k] = s / diag[k];
    }
    return x;
}

double residual_norm(const SymTridiagonal& t, const std::vector<double>& v, double lambda) {
    const std::size_t n = t.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = (t.diag()[i] - lambda) * v[i];
        if (i > 0) r += t.offdiag()[i - 1] * v[i - 1];
        if (i + 1 < n) r += t.offdiag()[i] * v[i + 1];
        acc += r * r;
    }
    return std::sqrt(acc);
}

bool normalize(std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);
    if (!std::isfinite(s) || s == 0.0) return false;
    for (double& x : v) x /= s;
    return true;
}

}  // namespace

UpperBidiagonal::UpperBidiagonal(std::size_t n, double alpha, JordanVariant variant)
    : n_(n), alpha_(alpha), variant_(variant) {
    if (n == 0) throw DomainError("UpperBidiagonal: n must be at least 1");
    if (!std::isfinite(alpha)) throw DomainError("UpperBidiagonal: alpha must be finite");
}

SymTridiagonal::SymTridiagonal(std::vector<double> diag, std::vector<double> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
    if (diag_.empty()) throw DomainError("SymTridiagonal: empty matrix");
    if (offdiag_.size() + 1 != diag_.size())
        throw DomainError("SymTridiagonal: off-diagonal must have n-1 entries");
}

SymTridiagonal symmetrize(const UpperBidiagonal& j) {
    const std::size_t n = j.size();
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = 2.0 * j.diagonal(i);
    return SymTridiagonal(std::move(diag), std::vector<double>(n - 1, 1.0));
}

double det_recurrence(const SymTridiagonal& t) noexcept {
    double prev = 0.0;  // b_{-1}
    double curr = 1.0;  // b_0
    for (std::size_t k = 0; k < t.size(); ++k) {
        const double e2 = k == 0 ? 0.0 : t.offdiag()[k - 1] * t.offdiag()[k - 1];
        const double next = t.diag()[k] * curr - e2 * prev;
        prev = curr;
        curr = next;
    }
    return curr;
}

std::size_t sturm_count(const SymTridiagonal& t, double lambda) noexcept {
    double emax2 = 0.0;
    for (double e : t.offdiag()) emax2 = std::max(emax2, e * e);
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, emax2);

    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double e2 = i == 0 ? 0.0 : t.offdiag()[i - 1] * t.offdiag()[i - 1];
        q = (t.diag()[i] - lambda) - e2 / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> eig_sturm(const SymTridiagonal& t, double tol) {
    if (!(tol > 0.0)) throw DomainError("eig_sturm: tol must be positive");
    const std::size_t n = t.size();

    // Gershgorin interval, widened so that every eigenvalue lies strictly inside.
    double glo = std::numeric_limits<double>::infinity();
    double ghi = -glo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.offdiag()[i - 1]);
        if (i + 1 < n) r += std::abs(t.offdiag()[i]);
        glo = std::min(glo, t.diag()[i] - r);
        ghi = std::max(ghi, t.diag()[i] + r);
    }
    const double pad = tol + 4.0 * kEps * std::max({1.0, std::abs(glo), std::abs(ghi)});
    glo -= pad;
    ghi += pad;

    constexpr int kBudget = 2200;
    std::vector<double> eigs(n);
    double lo_floor = glo;
    for (std::size_t k = 0; k < n; ++k) {
        // Invariant: sturm_count(lo) <= k < sturm_count(hi).
        double lo = lo_floor;
        double hi = ghi;
        int it = 0;
        while (hi - lo > tol) {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid <= lo || mid >= hi || ++it > kBudget)
                throw ConvergenceError("eig_sturm: bracket cannot shrink to tol", lo, hi);
            if (sturm_count(t, mid) <= k) lo = mid;
            else hi = mid;
        }
        eigs[k] = lo + 0.5 * (hi - lo);
        lo_floor = lo;
    }
    return eigs;
}

RealVector eigvec_inverse_iteration(const SymTridiagonal& t, double lambda, double tol) {
    if (!(tol > 0.0)) throw DomainError("eigvec_inverse_iteration: tol must be positive");
    const std::size_t n = t.size();
    if (n == 1) return RealVector{1.0};

    // Fixed, asymmetric start vector so that no eigenvector is missed by symmetry.
    std::mt19937_64 gen(0x9E3779B97F4A7C15ULL);
    std::vector<double> v(n);
    for (double& x : v) x = 0.5 + static_cast<double>(gen() >> 11) * 0x1.0p-53;
    normalize(v);

    constexpr int kBudget = 12;
    double shift = lambda;
    double res = std::numeric_limits<double>::infinity();
    for (int it = 0; it < kBudget; ++it) {
        std::vector<double> y = solve_shifted(t, shift, v);
        if (!normalize(y)) {
            shift += tol;  // singular shift: jitter and retry
            continue;
        }
        v = std::move(y);
        res = residual_norm(t, v, lambda);
        if (res <= 10.0 * tol) {
            const auto big = std::max_element(v.begin(), v.end(),
                                              [](double a, double b) { return std::abs(a) < std::abs(b); });
            if (*big < 0.0) {
                for (double& x : v) x = -x;
            }
            return RealVector(std::move(v));
        }
    }
    throw ConvergenceError("eigvec_inverse_iteration: residual " + std::to_string(res) +
                               " above 10*tol",
                           lambda - tol, lambda + tol);
}

double quad_form(const UpperBidiagonal& j, const RealVector& a) {
    const std::size_t n = j.size();
    if (a.size() != n) throw DomainError("quad_form: dimension mismatch");
    double sq = 0.0;
    double cross = 0.0;
    for (std::size_t k = 0; k < n; ++k) sq += a[k] * a[k];
    for (std::size_t k = 1; k < n; ++k) cross += a[k] * a[k - 1];
    double value = j.alpha() * sq + cross;
    if (j.variant() == JordanVariant::Modified) value -= 0.5 * a[n - 1] * a[n - 1];
    return value;
}

double dissipativity_threshold(std::size_t n, JordanVariant variant, Direction direction) {
    if (n == 0) throw DomainError("dissipativity_threshold: n must be at least 1");
    const auto m = static_cast<std::int64_t>(n);
    if (variant == JordanVariant::Standard) {
        const double c = cos_pi(1, m + 1);
        return direction == Direction::PlusJ ? -c : c;
    }
    // Extremes of the zeros of U_n - U_{n-1}.
    return direction == Direction::PlusJ ? -cos_pi(2, 2 * m + 1) : cos_pi(1, 2 * m + 1);
}

DissipativityReport check_dissipative(const UpperBidiagonal& j, double tol) {
    if (!(tol > 0.0)) throw DomainError("check_dissipative: tol must be positive");
    const SymTridiagonal b = symmetrize(j);
    const std::vector<double> eigs = eig_sturm(b, 1e-13);
    const double top = eigs.back();
    RealVector witness = eigvec_inverse_iteration(b, top, 1e-12);
    return DissipativityReport{dissipativity_threshold(j.size(), j.variant(), Direction::PlusJ),
                               top <= tol, top, std::move(witness)};
}

}  // namespace ftt
