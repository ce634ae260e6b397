#pragma once

#include <functional>
#include <string>
#include <vector>

#include "quboc/polynomial.hpp"

namespace quboc {

struct DataPoint {
    double x = 0.0;
    double y = 0.0;
};

/// Interpolating polynomial through the given points (degree <= n-1).
/// Throws std::invalid_argument on duplicate x values or an empty list.
Polynomial lagrange_interpolate(const std::vector<DataPoint>& points, const Var& var);

/// One spline piece: the support points of its interval and the polynomial
/// approximating the objective there (a polynomial in the target variable).
struct SplinePiece {
    std::vector<double> points;
    Polynomial polynomial;
};

/// Piecewise selector specification. One binary slack variable is generated
/// per support point; the pieces' point sets must be pairwise disjoint.
class SplineSpec {
  public:
    SplineSpec(std::vector<SplinePiece> pieces, Var target_var);

    const std::vector<SplinePiece>& pieces() const { return pieces_; }
    const Var& target_var() const { return target_var_; }

    /// All support points (union of the pieces), ascending.
    const std::vector<double>& all_points() const { return all_points_; }
    /// Slack variable for all_points()[i].
    const std::vector<Var>& slack_vars() const { return slack_vars_; }

  private:
    std::vector<SplinePiece> pieces_;
    Var target_var_;
    std::vector<double> all_points_;
    std::vector<Var> slack_vars_;
};

/// Selector objective: sum_i P_i(x) * (sum_{j in I_i} y_j)
///                   + sum_{j in I} y_j (j - x)^2 + (sum_{j in I} y_j - 1)^2.
/// The point-match and exactly-one terms carry unit weight.
Polynomial spline_objective(const SplineSpec& spec);

/// Closed catalog of Maclaurin expansions.
enum class TaylorFn { Ln1p, Exp, Sin, Cos, LogSoftplus };

/// Maps "ln1p", "exp", "sin", "cos", "log_softplus" to the catalog; throws
/// std::invalid_argument for anything else.
TaylorFn taylor_fn_from_name(const std::string& name);

/// Maclaurin truncation of the named function up to x^degree.
/// Ln1p is ln(1+x); LogSoftplus is ln(1+e^-x).
Polynomial taylor_series(TaylorFn fn, int degree, const Var& var);

/// Shift/scale parameters of the two-term log approximation.
struct LogShiftParams {
    double C = 1.0;
    double D = 1.0;
};

/// ln(x) ~ (x/C - D)/D - (x/C - D)^2 / (2 D^2), additive constants dropped.
Polynomial shifted_log_approx(const LogShiftParams& params, const Var& var);

/// Truncated Fourier series: a0 + sum_n (a_n cos(2 pi n x / T) + b_n sin(...)).
struct FourierSeries {
    double period = 1.0;
    double a0 = 0.0;
    std::vector<std::pair<double, double>> terms;  // (a_n, b_n), n = 1..N
};

/// Samples f at the midpoints (k + 1/2) * period / n, k = 0..n-1.
std::vector<double> sample_period_midpoints(const std::function<double(double)>& f,
                                            double period, int n_samples);

/// Fits Fourier coefficients from uniform midpoint samples of one period
/// (composite quadrature with uniform weights). Requires >= 4 * n_terms
/// samples; throws std::invalid_argument otherwise.
FourierSeries fourier_fit(const std::vector<double>& samples, double period, int n_terms);

/// Replaces each sin/cos term by its Maclaurin truncation with argument
/// (2 pi n / period) * x.
Polynomial fourier_to_polynomial(const FourierSeries& series, int taylor_degree, const Var& var);

/// (prod vars)^2: zero iff at least one variable is zero.
Polynomial penalty_at_least_one_zero(const std::vector<Var>& vars);

/// (sum vars - 1)^2: zero iff exactly one binary variable is set.
Polynomial penalty_exactly_one(const std::vector<Var>& vars);

}  // namespace quboc
