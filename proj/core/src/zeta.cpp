#include "ldist/zeta.hpp"
#include "ldist/primes.hpp"

#include <cmath>

namespace ldist {

namespace {
// B_2, B_4, ..., B_16
constexpr double bern[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
                           5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};

constexpr int mobius_small[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1,
                                0, -1, 0, -1, 0, 1, 1, -1, 0, 0, 1, 0, 0, -1, -1, -1,
                                0, 1, 1, 1, 0, -1, 1, 1, 0, -1, -1, -1, 0, 0, 1, -1,
                                0, 0, 0, 1, 0, -1, 0, 1, 0, 1, 1, -1, 0, -1, 1, 0, 0};
} // namespace

double hurwitz_zeta(double s, double a) {
    if (!(s > 0.0) || s == 1.0) throw validation_error("hurwitz_zeta: need s > 0, s != 1");
    if (!(a > 0.0) || a > 1.0) throw validation_error("hurwitz_zeta: need 0 < a <= 1");
    const int K = 18;
    double sum = 0.0;
    for (int k = K - 1; k >= 0; --k) sum += std::pow(k + a, -s);
    const double N = K + a;
    const double Ns = std::pow(N, -s);
    sum += N * Ns / (s - 1.0); // N^{1-s}/(s-1)
    sum += 0.5 * Ns;
    // sum_j B_{2j}/(2j)! * (s)_{2j-1} * N^{-s-2j+1}
    static const double fact2j[] = {2.0, 24.0, 720.0, 40320.0, 3628800.0,
                                    479001600.0, 87178291200.0, 20922789888000.0};
    const double n2 = 1.0 / (N * N);
    double pochhammer = s;  // (s)_1
    double npow = Ns / N;   // N^{-s-1}
    for (int j = 1; j <= 8; ++j) {
        double term = bern[j - 1] / fact2j[j - 1] * pochhammer * npow;
        sum += term;
        pochhammer *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        npow *= n2;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

double zeta_em(double s) {
    if (!(s > 1.0)) throw validation_error("zeta_em: need s > 1");
    return hurwitz_zeta(s, 1.0);
}

double prime_zeta(double s) {
    if (!(s > 1.0)) throw validation_error("prime_zeta: need s > 1");
    double sum = 0.0;
    for (int k = 1; k <= 64; ++k) {
        int mu = mobius_small[k];
        if (mu == 0) continue;
        double lz = std::log(zeta_em(k * s));
        sum += mu * lz / k;
        if (std::abs(lz) < 1e-18) break;
    }
    return sum;
}

double prime_zeta_tail(double s, double bound) {
    auto pl = shared_primes(static_cast<std::uint64_t>(bound) + 1);
    double head = 0.0;
    std::vector<double> terms;
    for (std::uint32_t p : pl->primes) {
        if (p > bound) break;
        terms.push_back(std::pow(static_cast<double>(p), -s));
    }
    head = pairwise_sum(terms);
    return prime_zeta(s) - head;
}

} // namespace ldist
