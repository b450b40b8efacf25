#include "monospline/poly.hpp"

#include <algorithm>
#include <cmath>

#include "monospline/errors.hpp"
#include "numeric_util.hpp"

namespace monospline {

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

void require_nondegenerate(Interval interval) {
    if (!(interval.lo < interval.hi)) {
        throw DegenerateInterval("interval must satisfy lo < hi");
    }
}

std::vector<long double> compose_affine_wide(std::vector<long double> c, long double scale, long double shift) {
    const int m = static_cast<int>(c.size()) - 1;
    std::vector<long double> acc(c.size(), 0.0L);
    acc[0] = c[static_cast<size_t>(m)];
    for (int k = m - 1, len = 0; k >= 0; --k, ++len) {
        for (int i = len + 1; i >= 1; --i) acc[i] = acc[i] * shift + acc[i - 1] * scale;
        acc[0] = acc[0] * shift + c[static_cast<size_t>(k)];
    }
    return acc;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial Polynomial::zero(int degree_bound) {
    return Polynomial(std::vector<double>(static_cast<size_t>(std::max(degree_bound, 0)) + 1, 0.0));
}

Polynomial Polynomial::constant(double c, int degree_bound) {
    Polynomial p = zero(degree_bound);
    p.coeffs_[0] = c;
    return p;
}

Polynomial Polynomial::identity(int degree_bound) {
    Polynomial p = zero(std::max(degree_bound, 1));
    p.coeffs_[1] = 1.0;
    return p;
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::padded(int degree_bound) const {
    Polynomial p = *this;
    if (degree_bound > this->degree_bound()) p.coeffs_.resize(static_cast<size_t>(degree_bound) + 1, 0.0);
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (double& c : p.coeffs_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
    for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
    for (size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

Polynomial& Polynomial::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
Polynomial operator*(double s, Polynomial p) { return p *= s; }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    std::vector<double> out(static_cast<size_t>(lhs.degree_bound() + rhs.degree_bound()) + 1, 0.0);
    for (int i = 0; i <= lhs.degree_bound(); ++i)
        for (int j = 0; j <= rhs.degree_bound(); ++j) out[i + j] += lhs[i] * rhs[j];
    return Polynomial(std::move(out));
}

double eval(const Polynomial& p, double x) { return p(x); }

Polynomial derivative(const Polynomial& p) {
    const int m = p.degree_bound();
    if (m == 0) return Polynomial::zero(0);
    std::vector<double> out(static_cast<size_t>(m));
    for (int k = 1; k <= m; ++k) out[k - 1] = k * p[k];
    return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p, int order) {
    Polynomial q = p;
    for (int j = 0; j < order; ++j) q = derivative(q);
    return q;
}

Polynomial antiderivative(const Polynomial& p, double c0) {
    std::vector<double> out(static_cast<size_t>(p.degree_bound()) + 2, 0.0);
    out[0] = c0;
    for (int k = 0; k <= p.degree_bound(); ++k) out[k + 1] = p[k] / (k + 1);
    return Polynomial(std::move(out));
}

Polynomial compose_affine(const Polynomial& p, double scale, double shift) {
    // Horner in polynomial arithmetic: q = (...(c_m * L + c_{m-1}) * L + ...), L = scale x + shift.
    const int m = p.degree_bound();
    std::vector<double> acc(static_cast<size_t>(m) + 1, 0.0);
    int len = 0;  // current degree of acc
    acc[0] = p[m];
    for (int k = m - 1; k >= 0; --k) {
        // acc <- acc * (scale x + shift) + c_k
        for (int i = len + 1; i >= 1; --i) acc[i] = acc[i] * shift + acc[i - 1] * scale;
        acc[0] = acc[0] * shift + p[k];
        ++len;
    }
    return Polynomial(std::move(acc));
}

double max_abs_coeff(const Polynomial& p) {
    double r = 0.0;
    for (double c : p.coeffs()) r = std::max(r, std::abs(c));
    return r;
}

double BernsteinView::operator()(double x) const {
    const double t = (x - interval.lo) / (interval.hi - interval.lo);
    std::vector<double> work = coeffs;
    for (int r = 1; r < static_cast<int>(work.size()); ++r)
        for (int i = 0; i + r < static_cast<int>(work.size()); ++i)
            work[i] = (1.0 - t) * work[i] + t * work[i + 1];
    return work.front();
}

BernsteinView to_bernstein(const Polynomial& p, Interval interval) {
    require_nondegenerate(interval);
    const std::vector<long double> q = compose_affine_wide(
        {p.coeffs().begin(), p.coeffs().end()}, static_cast<long double>(interval.hi) - interval.lo, interval.lo);
    const int n = p.degree_bound();
    BernsteinView b{interval, std::vector<double>(static_cast<size_t>(n) + 1, 0.0)};
    for (int k = 0; k <= n; ++k) {
        long double s = 0.0L;
        for (int j = 0; j <= k; ++j) s += static_cast<long double>(binomial(k, j)) / binomial(n, j) * q[static_cast<size_t>(j)];
        b.coeffs[static_cast<size_t>(k)] = static_cast<double>(s);
    }
    return b;
}

Polynomial from_bernstein(const BernsteinView& b) {
    require_nondegenerate(b.interval);
    const int n = b.degree();
    std::vector<long double> q(static_cast<size_t>(n) + 1, 0.0L);
    for (int j = 0; j <= n; ++j) {
        long double s = 0.0L;
        for (int k = 0; k <= j; ++k) {
            s += ((j - k) % 2 == 0 ? 1.0L : -1.0L) * binomial(j, k) * b.coeffs[static_cast<size_t>(k)];
        }
        q[static_cast<size_t>(j)] = binomial(n, j) * s;
    }
    const long double width = static_cast<long double>(b.interval.hi) - b.interval.lo;
    const std::vector<long double> r = compose_affine_wide(std::move(q), 1.0L / width, -b.interval.lo / width);
    return Polynomial(std::vector<double>(r.begin(), r.end()));
}

BernsteinView degree_elevate(const BernsteinView& b, int r) {
    BernsteinView out = b;
    for (int step = 0; step < r; ++step) {
        const int n = out.degree();
        std::vector<double> next(static_cast<size_t>(n) + 2);
        next[0] = out.coeffs[0];
        next[n + 1] = out.coeffs[n];
        for (int k = 1; k <= n; ++k) {
            const double w = static_cast<double>(k) / (n + 1);
            next[k] = w * out.coeffs[k - 1] + (1.0 - w) * out.coeffs[k];
        }
        out.coeffs = std::move(next);
    }
    return out;
}

const char* to_string(MonotoneCertificate::Status status) {
    switch (status) {
        case MonotoneCertificate::Status::CertifiedExact: return "certified_exact";
        case MonotoneCertificate::Status::CertifiedSufficient: return "certified_sufficient";
        case MonotoneCertificate::Status::Refuted: return "refuted";
        case MonotoneCertificate::Status::Unknown: return "unknown";
    }
    return "unknown";
}

MonotoneCertificate certify_nondecreasing(const Polynomial& p, Interval interval, int elevation_budget,
                                          double tolerance) {
    require_nondegenerate(interval);
    MonotoneCertificate cert;
    cert.tolerance = tolerance;
    const Polynomial d = derivative(p);

    // Effective degree of the derivative; trailing zeros do not count.
    int deg = d.degree_bound();
    while (deg > 0 && d[deg] == 0.0) --deg;

    if (deg <= 2) {
        double arg = interval.lo;
        double lo_val = d(interval.lo);
        if (double v = d(interval.hi); v < lo_val) {
            lo_val = v;
            arg = interval.hi;
        }
        if (deg == 2) {
            const double vertex = -d[1] / (2.0 * d[2]);
            if (vertex > interval.lo && vertex < interval.hi) {
                if (double v = d(vertex); v < lo_val) {
                    lo_val = v;
                    arg = vertex;
                }
            }
        }
        if (lo_val >= -tolerance) {
            cert.status = MonotoneCertificate::Status::CertifiedExact;
        } else {
            cert.status = MonotoneCertificate::Status::Refuted;
            cert.witness = arg;
        }
        return cert;
    }

    BernsteinView b = to_bernstein(d, interval);
    for (int r = 0; r <= elevation_budget; ++r) {
        if (r > 0) b = degree_elevate(b, 1);
        if (*std::min_element(b.coeffs.begin(), b.coeffs.end()) >= -tolerance) {
            cert.status = MonotoneCertificate::Status::CertifiedSufficient;
            cert.elevation = r;
            return cert;
        }
    }

    double worst = 0.0;
    double worst_x = interval.lo;
    for (int i = 0; i < kProbePoints; ++i) {
        const double x = i == kProbePoints - 1
                             ? interval.hi
                             : interval.lo + interval.length() * i / (kProbePoints - 1);
        if (double v = d(x); v < worst) {
            worst = v;
            worst_x = x;
        }
    }
    if (worst < -tolerance) {
        cert.status = MonotoneCertificate::Status::Refuted;
        cert.witness = worst_x;
    } else {
        cert.status = MonotoneCertificate::Status::Unknown;
    }
    return cert;
}

MarkovLemmaCheck check_markov_lemma(const Polynomial& p, Interval interval) {
    require_nondegenerate(interval);
    const int m = p.degree_bound();
    if (m < 1) throw ConfigInvalid("Markov-type lemma needs degree bound m >= 1");
    if (certify_nondecreasing(p, interval).refuted()) {
        throw NotMonotone("polynomial is not nondecreasing on the interval");
    }
    const double denom = 2.0 * m * m + 1.0;
    MarkovLemmaCheck out;
    out.lhs = p(interval.lo + interval.length() / denom);
    out.rhs = p(interval.lo) + (2.0 * m * m / denom) * (p(interval.hi) - p(interval.lo));
    out.holds = out.lhs <= out.rhs + 1e-9;
    return out;
}

double max_abs_on(const Polynomial& p, Interval interval, int grid) {
    auto f = [&](double x) { return std::abs(p(x)); };
    return detail::grid_max(f, interval.lo, interval.hi, grid).second;
}

MarkovInequalityCheck check_markov_inequality(const Polynomial& q, int grid) {
    const int m = q.degree_bound();
    if (m < 1) throw ConfigInvalid("Markov inequality needs degree bound m >= 1");
    const Interval unit{-1.0, 1.0};
    MarkovInequalityCheck out;
    out.max_abs_value = max_abs_on(q, unit, grid);
    out.max_abs_derivative = max_abs_on(derivative(q), unit, grid);
    const double bound = static_cast<double>(m) * m * out.max_abs_value;
    out.ratio = bound > 0.0 ? out.max_abs_derivative / bound : (out.max_abs_derivative > 0.0 ? INFINITY : 0.0);
    out.holds = out.max_abs_derivative <= bound * (1.0 + 1e-6);
    return out;
}

}  // namespace monospline
