#include "ftt/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ftt/random.hpp"
#include "ftt/trig.hpp"

namespace ftt {

namespace {

void require_square(const DenseSquareMatrix& m, const char* op) {
    if (m.rows() == 0 || m.rows() != m.cols())
        throw DomainError(std::string(op) + ": matrix must be square and non-empty");
    if (!m.allFinite()) throw DomainError(std::string(op) + ": matrix entries must be finite");
}

constexpr int kMaxTerms = 400;

double norm1(const DenseSquareMatrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

// x^k / k! for k = 0..n-1.
std::vector<double> taylor_weights(std::size_t n, double x) {
    std::vector<double> w(n);
    double term = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) term *= x / static_cast<double>(k);
        w[k] = term;
    }
    return w;
}

struct PowerResult {
    double rayleigh;  // of G itself
    Eigen::VectorXd v;
    bool converged;
};

enum class StageEnd { Converged, RoundingLevel, Budget };

// Power iteration on P from v. Converged when the estimated remaining error in
// the Rayleigh quotient (last change times 1 + r/(1-r), r the observed
// contraction of the changes) is below tol * rho. Changes at rounding level
// carry no rate information and end the stage without a verdict.
StageEnd power_stage(const Eigen::MatrixXd& p, Eigen::VectorXd& v, double tol, int budget, int& used) {
    double prev = 0.0;
    double prev_change = std::numeric_limits<double>::infinity();
    for (int it = 0; it < budget; ++it, ++used) {
        const Eigen::VectorXd w = p * v;
        const double rho = v.dot(w);
        const double nw = w.norm();
        if (nw == 0.0) return StageEnd::Converged;
        v = w / nw;
        if (it > 0) {
            const double change = std::abs(rho - prev);
            if (change <= 16.0 * std::numeric_limits<double>::epsilon() * std::abs(rho)) return StageEnd::RoundingLevel;
            if (std::isfinite(prev_change)) {
                const double ratio = std::min(change / prev_change, 0.999999);
                if (change * (1.0 + ratio / (1.0 - ratio)) <= tol * std::abs(rho)) return StageEnd::Converged;
            }
            prev_change = change;
        }
        prev = rho;
    }
    return StageEnd::Budget;
}

// Largest eigenvalue of the symmetric PSD matrix G. The ratio test cannot see
// a slow component behind a faster one, so after each stage the normalised
// operator is squared (squaring every eigenvalue ratio) and iteration resumes
// from the current vector, until squaring leaves it unchanged. The result is
// the Rayleigh quotient of G at the final vector.
PowerResult power_iteration(const Eigen::MatrixXd& g, Eigen::VectorXd v, double tol) {
    constexpr int kBudget = 200000;
    constexpr int kStage = 2000;
    constexpr int kMaxSquarings = 64;
    v.normalize();
    const double gnorm = g.norm();
    if (gnorm == 0.0) return {0.0, v, true};
    Eigen::MatrixXd p = g / gnorm;
    int used = 0;
    for (int squarings = 0; used < kBudget; ++squarings) {
        const StageEnd end = power_stage(p, v, tol, std::min(kStage, kBudget - used), used);
        const bool settled = end != StageEnd::Budget;
        if (squarings == kMaxSquarings) return {v.dot(g * v), v, settled};
        Eigen::MatrixXd next = p * p;
        next = 0.5 * (next + next.transpose());
        const double scale = next.norm();
        if (scale == 0.0) return {v.dot(g * v), v, settled};
        next /= scale;
        if (settled && (next - p).norm() <= 64.0 * std::numeric_limits<double>::epsilon())
            return {v.dot(g * v), v, true};
        p = std::move(next);
    }
    return {v.dot(g * v), v, false};
}

}  // namespace

DenseSquareMatrix to_dense(const UpperBidiagonal& j) {
    const auto n = static_cast<Eigen::Index>(j.size());
    DenseSquareMatrix m = DenseSquareMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        m(i, i) = j.diagonal(static_cast<std::size_t>(i));
        if (i + 1 < n) m(i, i + 1) = 1.0;
    }
    return m;
}

DenseSquareMatrix expm_oracle(const DenseSquareMatrix& q, double x, double tol) {
    require_square(q, "expm_oracle");
    if (!(tol > 0.0)) throw DomainError("expm_oracle: tol must be positive");
    if (!std::isfinite(x)) throw DomainError("expm_oracle: x must be finite");

    const Eigen::Index n = q.rows();
    DenseSquareMatrix a = q * x;
    const double anorm = norm1(a);
    if (!std::isfinite(anorm)) throw OverflowError("expm_oracle: ||Qx|| is not finite");

    int s = 0;
    double scaled = anorm;
    while (scaled > 0.5) {
        scaled *= 0.5;
        ++s;
    }
    a *= std::ldexp(1.0, -s);

    // Entrywise stop: small entries (high powers of a nilpotent part) keep
    // their relative accuracy.
    const double stop = std::min(tol, 1e-18);
    DenseSquareMatrix result = DenseSquareMatrix::Identity(n, n);
    DenseSquareMatrix term = DenseSquareMatrix::Identity(n, n);
    for (int k = 1; k <= kMaxTerms; ++k) {
        term = (term * a) / static_cast<double>(k);
        result += term;
        if ((term.array().abs() <= stop * result.array().abs()).all()) break;
    }
    for (int i = 0; i < s; ++i) result = result * result;

    if (!result.allFinite())
        throw OverflowError("expm_oracle: exp(Qx) overflows (||Qx||_1 = " + std::to_string(anorm) + ")");
    return result;
}

DenseSquareMatrix exp_jordan_closed(std::size_t n, double alpha, double x) {
    if (n == 0) throw DomainError("exp_jordan_closed: n must be at least 1");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("exp_jordan_closed: x must be >= 0");
    const double scale = std::exp(alpha * x);
    const std::vector<double> w = taylor_weights(n, x);
    const auto m = static_cast<Eigen::Index>(n);
    DenseSquareMatrix e = DenseSquareMatrix::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index k = 0; i + k < m; ++k) e(i, i + k) = scale * w[static_cast<std::size_t>(k)];
    }
    return e;
}

double operator_norm(const DenseSquareMatrix& m, double tol) {
    require_square(m, "operator_norm");
    if (!(tol > 0.0)) throw DomainError("operator_norm: tol must be positive");
    const Eigen::Index n = m.rows();
    const Eigen::MatrixXd g = m.transpose() * m;

    const PowerResult from_ones = power_iteration(g, Eigen::VectorXd::Ones(n), tol);
    UniformSource rng(0x5DEECE66DULL);
    Eigen::VectorXd start(n);
    for (Eigen::Index i = 0; i < n; ++i) start(i) = rng.uniform(-1.0, 1.0);
    const PowerResult from_random = power_iteration(g, start, tol);

    if (!from_ones.converged && !from_random.converged) {
        const double lo = std::sqrt(std::max(0.0, std::max(from_ones.rayleigh, from_random.rayleigh)));
        throw ConvergenceError("operator_norm: power iteration did not converge", lo, m.norm());
    }
    double best = 0.0;
    if (from_ones.converged) best = std::max(best, from_ones.rayleigh);
    if (from_random.converged) best = std::max(best, from_random.rayleigh);
    return std::sqrt(std::max(0.0, best));
}

double max_symmetric_eigenvalue(const DenseSquareMatrix& q) {
    require_square(q, "max_symmetric_eigenvalue");
    const Eigen::MatrixXd sym = q + q.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

std::vector<double> default_contraction_grid() {
    constexpr int kPoints = 64;
    const double lo = std::log(1e-3);
    const double hi = std::log(10.0);
    std::vector<double> xs{0.0};
    for (int i = 0; i < kPoints; ++i) xs.push_back(std::exp(lo + (hi - lo) * i / (kPoints - 1)));
    xs.back() = 10.0;
    return xs;
}

NormCurve contraction_check(const DenseSquareMatrix& q, std::span<const double> xs, double tol) {
    require_square(q, "contraction_check");
    NormCurve curve;
    double last = -std::numeric_limits<double>::infinity();
    for (double x : xs) {
        if (!(x >= 0.0) || x > 50.0) throw DomainError("contraction_check: x must lie in [0, 50]");
        if (x < last) throw DomainError("contraction_check: xs must be sorted");
        last = x;
        curve.xs.push_back(x);
        curve.norms.push_back(operator_norm(expm_oracle(q, x), std::min(tol, 1e-13)));
    }
    return curve;
}

double gftt_lhs(const RealVector& a, double x) {
    if (!(x >= 0.0)) throw DomainError("gftt_lhs: x must be >= 0");
    const std::size_t n = a.size();
    const std::vector<double> w = taylor_weights(n, x);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double inner = 0.0;
        // a_{n-j+k} with 1-based a is a[n-j+k-1].
        for (std::size_t k = 0; k <= j; ++k) inner += w[k] * a[n - j + k - 1];
        total += inner * inner;
    }
    return total;
}

CheckReport gftt_check(const RealVector& a, double x, double tol) {
    if (!(tol > 0.0)) throw DomainError("gftt_check: tol must be positive");
    const double lhs = gftt_lhs(a, x);
    const double c = cos_pi(1, static_cast<std::int64_t>(a.size()) + 1);
    const double rhs = std::exp(2.0 * x * c) * a.squared_norm();
    const double margin = rhs - lhs;
    return CheckReport{lhs, rhs, margin, margin >= -tol};
}

double gftt2_stated_lhs(const RealVector& a, double x) {
    if (!(x >= 0.0)) throw DomainError("gftt2_stated_lhs: x must be >= 0");
    const std::size_t n = a.size();
    const std::vector<double> w = taylor_weights(n, x);
    double total = std::exp(-x) * (a[n - 1] * a[n - 1]);
    for (std::size_t j = 1; j < n; ++j) {
        double inner = 0.0;
        for (std::size_t k = 0; k <= j; ++k) inner += w[k] * a[n - j + k - 1];
        total += inner * inner;
    }
    return total;
}

double gftt2_rhs(const RealVector& a, double x) {
    const auto n = static_cast<std::int64_t>(a.size());
    return std::exp(2.0 * x * cos_pi(2, 2 * n + 1)) * a.squared_norm();
}

double gftt2_exact_lhs(const RealVector& a, double alpha, double x, double tol) {
    if (!(x >= 0.0)) throw DomainError("gftt2_exact_lhs: x must be >= 0");
    const UpperBidiagonal j(a.size(), alpha, JordanVariant::Modified);
    const DenseSquareMatrix e = expm_oracle(to_dense(j), x, tol);
    const Eigen::Map<const Eigen::VectorXd> v(a.entries().data(), static_cast<Eigen::Index>(a.size()));
    return (e * v).squaredNorm();
}

Gftt2ProbeReport gftt2_discrepancy_probe(std::size_t n, std::size_t samples, std::uint64_t seed,
                                         double x_max) {
    if (n == 0) throw DomainError("gftt2_discrepancy_probe: n must be at least 1");
    if (samples == 0) throw DomainError("gftt2_discrepancy_probe: samples must be at least 1");
    if (!(x_max >= 0.0)) throw DomainError("gftt2_discrepancy_probe: x_max must be >= 0");

    const double alpha = dissipativity_threshold(n, JordanVariant::Modified, Direction::PlusJ);
    UniformSource rng(seed);
    Gftt2ProbeReport r{n, samples, seed, alpha, x_max,
                       -std::numeric_limits<double>::infinity(), RealVector::unit(n, 0), 0.0,
                       -1.0, RealVector::unit(n, 0), 0.0};
    for (std::size_t s = 0; s < samples; ++s) {
        RealVector a = rng.vector(n);
        const double x = rng.uniform(0.0, x_max);
        const double stated = gftt2_stated_lhs(a, x);
        const double violation = stated - gftt2_rhs(a, x);
        const double exact = std::exp(-2.0 * alpha * x) * gftt2_exact_lhs(a, alpha, x);
        const double discrepancy = std::abs(stated - exact);
        if (violation > r.max_violation) {
            r.max_violation = violation;
            r.violation_a = a;
            r.violation_x = x;
        }
        if (discrepancy > r.max_discrepancy) {
            r.max_discrepancy = discrepancy;
            r.discrepancy_a = std::move(a);
            r.discrepancy_x = x;
        }
    }
    return r;
}

SubspaceBasis norm_preserving_subspace(const DenseSquareMatrix& q, double x, double tol) {
    require_square(q, "norm_preserving_subspace");
    if (!(x > 0.0)) throw DomainError("norm_preserving_subspace: x must be positive");
    if (!(tol > 0.0)) throw DomainError("norm_preserving_subspace: tol must be positive");
    if (max_symmetric_eigenvalue(q) > tol)
        throw DomainError("norm_preserving_subspace: Q is not dissipative");

    const Eigen::Index n = q.rows();
    auto kernel = [&](double at) {
        const DenseSquareMatrix e = expm_oracle(q, at);
        const Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n) - e.transpose() * e;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (s + s.transpose()));
        std::vector<RealVector> basis;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (std::abs(solver.eigenvalues()(i)) <= tol) {
                const Eigen::VectorXd v = solver.eigenvectors().col(i);
                basis.emplace_back(std::vector<double>(v.data(), v.data() + n));
            }
        }
        return basis;
    };

    std::vector<RealVector> basis = kernel(x);
    const std::size_t check = kernel(2.0 * x).size();
    if (check != basis.size()) {
        throw InvariantViolation("norm_preserving_subspace: kernel dimension " +
                                 std::to_string(basis.size()) + " at x=" + std::to_string(x) +
                                 " but " + std::to_string(check) + " at x=" + std::to_string(2.0 * x));
    }
    const std::size_t dim = basis.size();
    return SubspaceBasis{std::move(basis), dim};
}

StrictnessDisagreement::StrictnessDisagreement(StrictContractionReport report)
    : InvariantViolation("strict_contraction_check: form says " +
                         std::string(report.strict_by_form ? "strict" : "not strict") +
                         " but max ||exp(Qx)|| = " + std::to_string(report.max_norm) + " says " +
                         std::string(report.strict_by_norm ? "strict" : "not strict")),
      report_(std::move(report)) {}

StrictContractionReport strict_contraction_check(const DenseSquareMatrix& q,
                                                 std::span<const double> xs, double tol) {
    require_square(q, "strict_contraction_check");
    if (!(tol > 0.0)) throw DomainError("strict_contraction_check: tol must be positive");
    if (xs.empty()) throw DomainError("strict_contraction_check: empty grid");
    for (double x : xs) {
        if (!(x > 0.0) || x > 50.0)
            throw DomainError("strict_contraction_check: x must lie in (0, 50]");
    }

    StrictContractionReport r{};
    r.max_symmetric_eigenvalue = max_symmetric_eigenvalue(q);
    r.strict_by_form = r.max_symmetric_eigenvalue < -tol;
    r.curve = contraction_check(q, xs, tol);
    r.max_norm = *std::max_element(r.curve.norms.begin(), r.curve.norms.end());
    r.strict_by_norm = r.max_norm <= 1.0 - tol;
    r.agree = r.strict_by_form == r.strict_by_norm;
    if (!r.agree) throw StrictnessDisagreement(r);
    return r;
}

}  // namespace ftt
