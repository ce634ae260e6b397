#include "quboc/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "quboc/num_format.hpp"

namespace quboc {

Polynomial lagrange_interpolate(const std::vector<DataPoint>& points, const Var& var) {
    if (points.empty()) throw std::invalid_argument("lagrange_interpolate: no data points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].x == points[j].x) {
                throw std::invalid_argument("lagrange_interpolate: duplicate x value " +
                                            shortest_repr(points[i].x));
            }
        }
    }

    Polynomial x = Polynomial::variable(var);
    PolynomialBuilder acc;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial basis = Polynomial::constant(points[i].y);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * (x - Polynomial::constant(points[j].x)) *
                    Polynomial::constant(1.0 / (points[i].x - points[j].x));
        }
        acc.add(basis);
    }
    return acc.build();
}

SplineSpec::SplineSpec(std::vector<SplinePiece> pieces, Var target_var)
    : pieces_(std::move(pieces)), target_var_(std::move(target_var)) {
    if (pieces_.empty()) throw std::invalid_argument("SplineSpec: no pieces");
    std::set<double> seen;
    for (const auto& piece : pieces_) {
        for (double j : piece.points) {
            if (!seen.insert(j).second) {
                throw std::invalid_argument("SplineSpec: point " + shortest_repr(j) +
                                            " appears in more than one piece");
            }
        }
    }
    all_points_.assign(seen.begin(), seen.end());
    slack_vars_.reserve(all_points_.size());
    for (double j : all_points_) {
        slack_vars_.push_back(binary_var("y_" + shortest_repr(j)));
    }
}

Polynomial spline_objective(const SplineSpec& spec) {
    const Var& xv = spec.target_var();
    Polynomial x = Polynomial::variable(xv);

    auto slack_for = [&](double j) {
        const auto& pts = spec.all_points();
        auto it = std::lower_bound(pts.begin(), pts.end(), j);
        return spec.slack_vars()[static_cast<std::size_t>(it - pts.begin())];
    };

    PolynomialBuilder acc;
    // sum_i P_i(x) * (sum_{j in I_i} y_j)
    for (const auto& piece : spec.pieces()) {
        Polynomial selector;
        for (double j : piece.points) {
            selector += Polynomial::variable(slack_for(j));
        }
        acc.add(piece.polynomial * selector);
    }
    // sum_{j in I} y_j (j - x)^2
    for (double j : spec.all_points()) {
        Polynomial diff = Polynomial::constant(j) - x;
        acc.add(Polynomial::variable(slack_for(j)) * diff * diff);
    }
    // (sum_{j in I} y_j - 1)^2
    acc.add(penalty_exactly_one(spec.slack_vars()));
    return acc.build();
}

TaylorFn taylor_fn_from_name(const std::string& name) {
    if (name == "ln1p") return TaylorFn::Ln1p;
    if (name == "exp") return TaylorFn::Exp;
    if (name == "sin") return TaylorFn::Sin;
    if (name == "cos") return TaylorFn::Cos;
    if (name == "log_softplus") return TaylorFn::LogSoftplus;
    throw std::invalid_argument("unknown taylor catalog id '" + name + "'");
}

namespace {

// Maclaurin coefficients of ln(1+e^-x) up to x^degree, computed by composing
// ln(1+t) with t = (e^-x - 1)/2 as truncated power series.
std::vector<double> log_softplus_coeffs(int degree) {
    std::size_t n = static_cast<std::size_t>(degree) + 1;
    // h(x) = (e^-x - 1)/2 = sum_{k>=1} (-1)^k x^k / (2 k!)
    std::vector<double> h(n, 0.0);
    double factorial = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        factorial *= static_cast<double>(k);
        h[k] = ((k % 2 == 0) ? 1.0 : -1.0) / (2.0 * factorial);
    }
    auto mul_trunc = [&](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> out(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0.0) continue;
            for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    };
    // ln(2) + ln(1+h) = ln(2) + sum_m (-1)^{m+1} h^m / m
    std::vector<double> out(n, 0.0);
    out[0] = std::numbers::ln2;
    std::vector<double> h_pow = h;
    for (std::size_t m = 1; m < n; ++m) {
        double c = ((m % 2 == 1) ? 1.0 : -1.0) / static_cast<double>(m);
        for (std::size_t i = 0; i < n; ++i) out[i] += c * h_pow[i];
        h_pow = mul_trunc(h_pow, h);
    }
    return out;
}

}  // namespace

Polynomial taylor_series(TaylorFn fn, int degree, const Var& var) {
    if (degree < 1) throw std::invalid_argument("taylor_series: degree must be >= 1");
    PolynomialBuilder acc;
    auto term = [&](double c, int k) {
        if (k == 0) {
            acc.add_term(c, {});
        } else {
            acc.add_term(c, PowerMap{{var, k}});
        }
    };
    switch (fn) {
        case TaylorFn::Ln1p:
            for (int k = 1; k <= degree; ++k) {
                term(((k % 2 == 1) ? 1.0 : -1.0) / k, k);
            }
            break;
        case TaylorFn::Exp: {
            double factorial = 1.0;
            term(1.0, 0);
            for (int k = 1; k <= degree; ++k) {
                factorial *= k;
                term(1.0 / factorial, k);
            }
            break;
        }
        case TaylorFn::Sin: {
            double factorial = 1.0;
            for (int k = 1; k <= degree; ++k) {
                factorial *= k;
                if (k % 2 == 1) term((((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0) / factorial, k);
            }
            break;
        }
        case TaylorFn::Cos: {
            double factorial = 1.0;
            term(1.0, 0);
            for (int k = 1; k <= degree; ++k) {
                factorial *= k;
                if (k % 2 == 0) term(((k / 2) % 2 == 0 ? 1.0 : -1.0) / factorial, k);
            }
            break;
        }
        case TaylorFn::LogSoftplus: {
            auto coeffs = log_softplus_coeffs(degree);
            for (int k = 0; k <= degree; ++k) {
                term(coeffs[static_cast<std::size_t>(k)], k);
            }
            break;
        }
    }
    return acc.build();
}

Polynomial shifted_log_approx(const LogShiftParams& params, const Var& var) {
    if (params.C == 0.0 || params.D == 0.0) {
        throw std::invalid_argument("shifted_log_approx: C and D must be nonzero");
    }
    Polynomial shifted = Polynomial::variable(var) * (1.0 / params.C) -
                         Polynomial::constant(params.D);
    return shifted * (1.0 / params.D) -
           shifted * shifted * (1.0 / (2.0 * params.D * params.D));
}

std::vector<double> sample_period_midpoints(const std::function<double(double)>& f,
                                            double period, int n_samples) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_samples));
    for (int k = 0; k < n_samples; ++k) {
        out.push_back(f((k + 0.5) * period / n_samples));
    }
    return out;
}

FourierSeries fourier_fit(const std::vector<double>& samples, double period, int n_terms) {
    if (period <= 0.0) throw std::invalid_argument("fourier_fit: period must be positive");
    if (n_terms < 1) throw std::invalid_argument("fourier_fit: n_terms must be >= 1");
    if (samples.size() < static_cast<std::size_t>(4 * n_terms)) {
        throw std::invalid_argument("fourier_fit: need at least 4*n_terms samples, got " +
                                    std::to_string(samples.size()));
    }
    const std::size_t n = samples.size();
    const double two_pi = 2.0 * std::numbers::pi;

    FourierSeries series;
    series.period = period;
    double mean = 0.0;
    for (double v : samples) mean += v;
    series.a0 = mean / static_cast<double>(n);

    for (int m = 1; m <= n_terms; ++m) {
        double a = 0.0;
        double b = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            double x = (static_cast<double>(k) + 0.5) * period / static_cast<double>(n);
            double phase = two_pi * m * x / period;
            a += samples[k] * std::cos(phase);
            b += samples[k] * std::sin(phase);
        }
        series.terms.emplace_back(2.0 * a / static_cast<double>(n),
                                  2.0 * b / static_cast<double>(n));
    }
    return series;
}

Polynomial fourier_to_polynomial(const FourierSeries& series, int taylor_degree, const Var& var) {
    PolynomialBuilder acc;
    acc.add_term(series.a0, {});
    if (series.terms.empty()) return acc.build();

    Var t = continuous_var("__fourier_arg");
    Polynomial sin_t = taylor_series(TaylorFn::Sin, taylor_degree, t);
    Polynomial cos_t = taylor_series(TaylorFn::Cos, taylor_degree, t);
    for (std::size_t i = 0; i < series.terms.size(); ++i) {
        double omega = 2.0 * std::numbers::pi * static_cast<double>(i + 1) / series.period;
        Polynomial arg = Polynomial::variable(var) * omega;
        auto [a_n, b_n] = series.terms[i];
        if (a_n != 0.0) acc.add_scaled(cos_t.substitute(t, arg), a_n);
        if (b_n != 0.0) acc.add_scaled(sin_t.substitute(t, arg), b_n);
    }
    return acc.build();
}

Polynomial penalty_at_least_one_zero(const std::vector<Var>& vars) {
    if (vars.empty()) throw std::invalid_argument("penalty_at_least_one_zero: no variables");
    Polynomial product = Polynomial::constant(1.0);
    for (const Var& v : vars) product = product * Polynomial::variable(v);
    return product * product;
}

Polynomial penalty_exactly_one(const std::vector<Var>& vars) {
    if (vars.empty()) throw std::invalid_argument("penalty_exactly_one: no variables");
    Polynomial sum;
    for (const Var& v : vars) sum += Polynomial::variable(v);
    sum -= Polynomial::constant(1.0);
    return sum * sum;
}

}  // namespace quboc
