#include "nestwork/series.hpp"

#include <stdexcept>
#include <string>

namespace nestwork {

namespace {
const BigInt kZero = 0;

void check_same_order(const BivariatePoly& a, const BivariatePoly& b, const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": truncation orders differ (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
}
}  // namespace

BivariatePoly::BivariatePoly(int order) : order_(order) {
    if (order < 0) throw std::domain_error("BivariatePoly: order must be nonnegative");
    c_.resize(order_ + 1);
    for (int n = 0; n <= order_; ++n) c_[n].assign(n + 1, 0);
}

BivariatePoly BivariatePoly::constant(int order, const BigInt& value) {
    BivariatePoly p(order);
    p.c_[0][0] = value;
    return p;
}

BivariatePoly BivariatePoly::monomial(int order, int n, int k, const BigInt& value) {
    BivariatePoly p(order);
    p.set_coeff(n, k, value);
    return p;
}

const BigInt& BivariatePoly::coeff(int n, int k) const {
    if (n < 0 || n > order_ || k < 0)
        throw std::out_of_range("BivariatePoly::coeff: (" + std::to_string(n) + "," +
                                std::to_string(k) + ") outside truncation order " +
                                std::to_string(order_));
    if (k > n) return kZero;
    return c_[n][k];
}

void BivariatePoly::set_coeff(int n, int k, const BigInt& value) {
    if (n < 0 || n > order_ || k < 0 || k > n)
        throw std::out_of_range("BivariatePoly::set_coeff: bad exponent pair (" +
                                std::to_string(n) + "," + std::to_string(k) + ")");
    c_[n][k] = value;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
    check_same_order(*this, rhs, "add");
    for (int n = 0; n <= order_; ++n)
        for (int k = 0; k <= n; ++k) c_[n][k] += rhs.c_[n][k];
    return *this;
}

BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs) {
    lhs += rhs;
    return lhs;
}

BivariatePoly operator*(const BivariatePoly& lhs, const BivariatePoly& rhs) {
    check_same_order(lhs, rhs, "mul");
    BivariatePoly out(lhs.order_);
    for (int n1 = 0; n1 <= lhs.order_; ++n1)
        for (int k1 = 0; k1 <= n1; ++k1) {
            const BigInt& a = lhs.c_[n1][k1];
            if (a == 0) continue;
            for (int n2 = 0; n1 + n2 <= lhs.order_; ++n2)
                for (int k2 = 0; k2 <= n2; ++k2) {
                    const BigInt& b = rhs.c_[n2][k2];
                    if (b == 0) continue;
                    out.c_[n1 + n2][k1 + k2] += a * b;
                }
        }
    return out;
}

BivariatePoly BivariatePoly::derivative_y() const {
    BivariatePoly out(order_);
    for (int n = 0; n <= order_; ++n)
        for (int k = 1; k <= n; ++k) out.c_[n][k - 1] = BigInt(k) * c_[n][k];
    return out;
}

BivariatePoly geometric_inverse(const BivariatePoly& q) {
    if (q.coeff(0, 0) != 0)
        throw std::invalid_argument("geometric_inverse: q must have zero constant term");
    const int order = q.order();
    BivariatePoly sum = BivariatePoly::constant(order, 1);
    BivariatePoly power = BivariatePoly::constant(order, 1);
    for (int m = 1; m <= order; ++m) {
        power = power * q;  // x-order of q^m is at least m
        sum += power;
    }
    return sum;
}

BivariatePoly gf_p(int order) {
    if (order < 1) throw std::domain_error("gf_p: order must be >= 1");
    BivariatePoly sum(order);
    BivariatePoly product = BivariatePoly::constant(order, 1);
    for (int n = 1; n <= order; ++n) {
        product = product * (BivariatePoly::constant(order, 1) +
                             BivariatePoly::monomial(order, 1, 1, n));
        sum += product * BivariatePoly::monomial(order, n, 0, 1);
    }
    return sum;
}

BivariatePoly gf_q(int order) {
    if (order < 1) throw std::domain_error("gf_q: order must be >= 1");
    BivariatePoly sum(order);
    BivariatePoly denom = BivariatePoly::constant(order, 1);
    for (int n = 1; n <= order; ++n) {
        denom = denom * geometric_inverse(BivariatePoly::monomial(order, 2, 1, n));
        sum += denom * BivariatePoly::monomial(order, n, 0, 1);
    }
    return sum;
}

BivariatePoly gf_rt(int order) {
    if (order < 1) throw std::domain_error("gf_rt: order must be >= 1");
    BivariatePoly sum(order);
    for (int n = 1; n <= order; ++n) {
        // x^n / (1-xy)^m with m = binom(n+1,2): the y^k coefficient is
        // binom(m+k-1, k) x^k.
        const long long m = static_cast<long long>(n) * (n + 1) / 2;
        for (int k = 0; n + k <= order; ++k)
            sum.set_coeff(n + k, k, sum.coeff(n + k, k) + binomial(m + k - 1, k));
    }
    return sum;
}

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n)
        throw std::domain_error("stirling2: need 0 <= k <= n");
    std::vector<BigInt> row(k + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j)
            row[j] = BigInt(j) * row[j] + row[j - 1];
        row[0] = 0;  // S(m,0) = 0 for m >= 1
    }
    return row[k];
}

UnivariatePoly::UnivariatePoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void UnivariatePoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& UnivariatePoly::coeff(int k) const {
    static const BigInt zero = 0;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& rhs) const {
    std::vector<BigInt> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& rhs) const {
    std::vector<BigInt> out(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = coeff(static_cast<int>(i)) - rhs.coeff(static_cast<int>(i));
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::scaled_shift(const BigInt& value, int shift) const {
    std::vector<BigInt> out(c_.size() + shift, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + shift] = value * c_[i];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (c_.size() <= 1) return UnivariatePoly();
    std::vector<BigInt> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = BigInt(i) * c_[i];
    return UnivariatePoly(std::move(out));
}

BigInt UnivariatePoly::operator()(const BigInt& y) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
    return acc;
}

UnivariatePoly fn_poly(int n) {
    if (n < 1) throw std::domain_error("fn_poly: n must be >= 1");
    UnivariatePoly prev(std::vector<BigInt>{1});         // f_1
    if (n == 1) return prev;
    UnivariatePoly cur(std::vector<BigInt>{1, 1});       // f_2
    for (int m = 3; m <= n; ++m) {
        UnivariatePoly next = cur + prev.scaled_shift(m - 1, 1) -
                              prev.derivative().scaled_shift(1, 2);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

UnivariatePoly gn_poly(int n) {
    if (n < 1) throw std::domain_error("gn_poly: n must be >= 1");
    UnivariatePoly prev(std::vector<BigInt>{1});         // g_1
    if (n == 1) return prev;
    UnivariatePoly cur(std::vector<BigInt>{1});          // g_2
    for (int m = 3; m <= n; ++m) {
        UnivariatePoly next = cur + prev.scaled_shift(m - 2, 1) -
                              prev.derivative().scaled_shift(2, 2);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace nestwork
