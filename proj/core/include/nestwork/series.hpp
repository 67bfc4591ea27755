#pragma once

#include <vector>

#include "nestwork/bigint.hpp"

namespace nestwork {

// Bivariate power series in x and y, truncated at x-degree `order`,
// with exact integer coefficients. Every series produced here has
// y-degree <= x-degree in each term (each arc or block consumes at
// least one vertex), so coefficients are stored as the triangle
// c[n][k], 0 <= k <= n <= order. Terms beyond the truncation order are
// dropped by every operation. Mixing truncation orders is an error.
class BivariatePoly {
public:
    explicit BivariatePoly(int order);
    static BivariatePoly constant(int order, const BigInt& value);
    static BivariatePoly monomial(int order, int n, int k, const BigInt& value);

    int order() const { return order_; }
    // 0 <= n <= order and k >= 0 required; k > n reads as zero.
    const BigInt& coeff(int n, int k) const;
    void set_coeff(int n, int k, const BigInt& value);

    BivariatePoly& operator+=(const BivariatePoly& rhs);
    friend BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs);
    friend BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs);

    BivariatePoly derivative_y() const;

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    int order_;
    std::vector<std::vector<BigInt>> c_;  // c_[n][k], k <= n
};

// 1/(1-q) = sum_m q^m, truncated at q.order(); q must have zero
// constant term.
BivariatePoly geometric_inverse(const BivariatePoly& q);

// sum_{n>=1} x^n prod_{k=1}^{n} (1 + k x y): coefficient of x^n y^k is
// the number of n-vertex partial matchings with k arcs and no neighbor
// alignment.
BivariatePoly gf_p(int order);

// sum_{n>=1} x^n / prod_{k=1}^{n} (1 - k x^2 y): coefficient of x^n y^k
// is the count for (n-1)-vertex matchings with k arcs avoiding neighbor
// alignments and left nestings.
BivariatePoly gf_q(int order);

// sum_{n>=1} x^n / (1-xy)^binom(n+1,2), expanded term by term with
// negative-binomial coefficients (no series division). Coefficient of
// x^n y^k counts both the T(n,k) partitions and the R(n+k-1,k) matchings.
BivariatePoly gf_rt(int order);

// Stirling numbers of the second kind; 0 <= k <= n required.
BigInt stirling2(int n, int k);

// Polynomial in y with exact integer coefficients; trailing zeros trimmed.
class UnivariatePoly {
public:
    UnivariatePoly() = default;  // zero polynomial
    explicit UnivariatePoly(std::vector<BigInt> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const BigInt& coeff(int k) const;  // zero beyond the degree
    const std::vector<BigInt>& coeffs() const { return c_; }

    UnivariatePoly operator+(const UnivariatePoly& rhs) const;
    UnivariatePoly operator-(const UnivariatePoly& rhs) const;
    // this * (value * y^shift)
    UnivariatePoly scaled_shift(const BigInt& value, int shift) const;
    UnivariatePoly derivative() const;
    BigInt operator()(const BigInt& y) const;

    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

private:
    std::vector<BigInt> c_;
    void trim();
};

// f_n(y) = sum_k P(n,k) y^k via the recurrence
// f_n = f_{n-1} + (n-1) y f_{n-2} - y^2 f'_{n-2}, f_1 = 1, f_2 = 1 + y.
UnivariatePoly fn_poly(int n);

// g_n(y) = sum_k Q(n-1,k) y^k via
// g_n = g_{n-1} + (n-2) y g_{n-2} - 2 y^2 g'_{n-2}, g_1 = g_2 = 1.
UnivariatePoly gn_poly(int n);

}  // namespace nestwork
