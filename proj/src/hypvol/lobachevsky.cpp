#include <cmath>
#include <numbers>
#include <vector>

#include <gmpxx.h>

#include "divlink/error.hpp"
#include "divlink/hypvol.hpp"

namespace divlink {
namespace {

constexpr int kTerms = 40;

// zeta(2n) / (n (2n + 1)) for n = 1..kTerms, from exact Bernoulli numbers.
std::vector<double> series_coefficients() {
    // Akiyama-Tanigawa produces B_m with B_1 = +1/2; only even m are used.
    const int m_max = 2 * kTerms;
    std::vector<mpq_class> a(m_max + 1);
    std::vector<mpq_class> bern(m_max + 1);
    for (int m = 0; m <= m_max; ++m) {
        a[m] = mpq_class(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[j - 1] = j * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
        bern[m] = a[0];
    }
    std::vector<double> c(kTerms + 1, 0.0);
    mpz_class fact = 1;
    for (int k = 1; k <= m_max; ++k) {
        fact *= k;
        if (k % 2) continue;
        const int n = k / 2;
        mpq_class ratio = bern[k] / mpq_class(fact);
        double zeta = std::abs(ratio.get_d()) * std::pow(2 * std::numbers::pi, k) / 2;
        c[n] = zeta / (n * (2.0 * n + 1));
    }
    return c;
}

const std::vector<double>& coefficients() {
    static const std::vector<double> c = series_coefficients();
    return c;
}

} // namespace

double lobachevsky(double theta) {
    if (!std::isfinite(theta)) throw Error("domain", "lobachevsky needs a finite angle");
    const double pi = std::numbers::pi;
    double t = std::remainder(theta, pi); // in [-pi/2, pi/2]
    if (t == 0) return 0;
    const double sign = t < 0 ? -1 : 1;
    t = std::abs(t);
    const double x = (t / pi) * (t / pi); // at most 1/4
    const auto& c = coefficients();
    double sum = 0, power = 1;
    for (int n = 1; n <= kTerms; ++n) {
        power *= x;
        sum += c[n] * power;
        // zeta(2n) <= zeta(2) < 1.65 bounds the remaining terms geometrically.
        double tail = 1.65 * power * x / ((n + 1) * (2.0 * n + 3) * (1 - x));
        if (t * tail < 1e-14) break;
    }
    return sign * t * (1 - std::log(2 * t) + sum);
}

} // namespace divlink
