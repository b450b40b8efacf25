#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace monospline {

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool operator==(const Interval&) const = default;
};

/// Polynomial in the monomial basis, coefficients in ascending degree.
///
/// The stored length fixes the degree bound m = size - 1; trailing zeros are
/// kept, so a cubic with vanishing leading coefficient is still an element of
/// the degree-3 space.
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial zero(int degree_bound);
    static Polynomial constant(double c, int degree_bound = 0);
    /// x with the given degree bound (>= 1).
    static Polynomial identity(int degree_bound = 1);

    int degree_bound() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const double> coeffs() const { return coeffs_; }
    double operator[](int k) const { return k <= degree_bound() ? coeffs_[k] : 0.0; }

    double operator()(double x) const;

    /// Same function with a larger degree bound.
    Polynomial padded(int degree_bound) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(double s);

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<double> coeffs_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator*(double s, Polynomial p);

/// Horner evaluation.
double eval(const Polynomial& p, double x);

/// Exact coefficient differentiation; the degree bound drops by one (floor 0).
Polynomial derivative(const Polynomial& p);

/// j-th derivative.
Polynomial derivative(const Polynomial& p, int order);

/// Antiderivative vanishing at 0, plus `c0`.
Polynomial antiderivative(const Polynomial& p, double c0 = 0.0);

/// Returns q(x) = p(scale * x + shift).
Polynomial compose_affine(const Polynomial& p, double scale, double shift);

/// Largest |coefficient|.
double max_abs_coeff(const Polynomial& p);

/// Bernstein representation of a polynomial on [u, v].
struct BernsteinView {
    Interval interval;
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    /// de Casteljau evaluation.
    double operator()(double x) const;
};

/// Bernstein coefficients of degree p.degree_bound() on `interval`.
/// Throws DegenerateInterval if interval.lo >= interval.hi.
BernsteinView to_bernstein(const Polynomial& p, Interval interval);
Polynomial from_bernstein(const BernsteinView& b);
BernsteinView degree_elevate(const BernsteinView& b, int r);

/// Outcome of a nondecreasingness test on an interval.
struct MonotoneCertificate {
    enum class Status { CertifiedExact, CertifiedSufficient, Refuted, Unknown };

    Status status = Status::Unknown;
    int elevation = 0;      // meaningful for CertifiedSufficient
    double witness = 0.0;   // meaningful for Refuted
    double tolerance = 1e-9;

    bool certified() const {
        return status == Status::CertifiedExact || status == Status::CertifiedSufficient;
    }
    bool refuted() const { return status == Status::Refuted; }
};

const char* to_string(MonotoneCertificate::Status status);

inline constexpr int kDefaultElevationBudget = 6;
inline constexpr double kMonotoneTolerance = 1e-9;
inline constexpr int kProbePoints = 1001;
inline constexpr int kExtremumGrid = 10001;

/// Decides whether p' >= -tolerance on `interval`.
///
/// Derivatives of degree <= 2 are settled exactly (endpoints plus vertex).
/// Higher degrees try Bernstein nonnegativity of p' under degree elevation
/// 0..elevation_budget, then fall back to a probe of kProbePoints points that
/// can only refute.
MonotoneCertificate certify_nondecreasing(const Polynomial& p, Interval interval,
                                          int elevation_budget = kDefaultElevationBudget,
                                          double tolerance = kMonotoneTolerance);

struct MarkovLemmaCheck {
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack() const { return rhs - lhs; }
};

/// P(a + (b-a)/(2m^2+1)) <= P(a) + 2m^2/(2m^2+1) (P(b) - P(a)) for a
/// nondecreasing P of degree at most m = p.degree_bound() >= 1.
/// Throws NotMonotone if P is refuted as nondecreasing on [a, b].
MarkovLemmaCheck check_markov_lemma(const Polynomial& p, Interval interval);

struct MarkovInequalityCheck {
    bool holds = false;
    double ratio = 0.0;            // max|Q'| / (m^2 max|Q|), 0 when Q == 0
    double max_abs_derivative = 0.0;
    double max_abs_value = 0.0;
};

/// max|Q'| <= m^2 max|Q| on [-1, 1], m = q.degree_bound() >= 1, with maxima
/// taken on a `grid`-point grid and polished by golden-section search.
MarkovInequalityCheck check_markov_inequality(const Polynomial& q, int grid = kExtremumGrid);

/// Maximum of |p| on `interval` from a uniform grid plus golden-section polish.
double max_abs_on(const Polynomial& p, Interval interval, int grid = kExtremumGrid);

}  // namespace monospline
