#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldist {

#define LDIST_VERSION_STRING "0.1.0"

using complex = std::complex<double>;

/// Raised on invalid input (bad modulus, out-of-range parameters, ...).
/// The CLI maps this to exit code 2.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when q is required to be prime but is not.
class not_prime_error : public validation_error {
public:
    explicit not_prime_error(std::uint64_t q)
        : validation_error("NotPrime: q = " + std::to_string(q) + " is not prime") {}
};

/// Raised when an iterative solver or quadrature fails to converge.
/// The CLI maps this to exit code 3.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;
/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

/// e(x) = exp(2*pi*i*x)
inline complex unit_e(double x) {
    return std::polar(1.0, two_pi * x);
}

/// Sum in a fixed pairwise order, independent of how the caller chunks work.
double pairwise_sum(const double* v, std::size_t n);
inline double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(v.data(), v.size());
}

} // namespace ldist
