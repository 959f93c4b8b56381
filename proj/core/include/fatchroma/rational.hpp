#pragma once

#include <compare>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fatchroma {

/// Exact nonnegative fraction in lowest terms. Holds the coloring parameters
/// alpha and beta, which always lie in [0, 1]; all comparisons are done in
/// integer arithmetic, never floating point.
class Rational {
  public:
    Rational() = default;

    Rational(long long num, long long den) {
        if (den == 0)
            throw std::invalid_argument("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num < 0)
            throw std::invalid_argument("rational: negative value");
        const long long g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    /// this * factor when that product is an integer, nullopt otherwise.
    std::optional<long long> times_exact(long long factor) const {
        const long long p = num_ * factor;
        if (p % den_ != 0)
            return std::nullopt;
        return p / den_;
    }

    /// Exact test of value == num/den without normalizing the right side.
    bool equals_ratio(long long num, long long den) const {
        return num_ * den == num * den_;
    }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p/q" or a bare integer "p"; surrounding whitespace allowed.
    static Rational parse(std::string_view text);

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    Rational operator+(const Rational& o) const {
        return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
    }

    /// Throws if the difference would be negative.
    Rational operator-(const Rational& o) const {
        return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
    }

    friend Rational operator*(long long k, const Rational& r) {
        return {k * r.num_, r.den_};
    }

  private:
    long long num_ = 0;
    long long den_ = 1;
};

/// beta + (k-1) * alpha == 1, evaluated in exact rationals.
inline bool parameter_identity_holds(int k, const Rational& alpha, const Rational& beta) {
    return beta + (static_cast<long long>(k) - 1) * alpha == Rational(1, 1);
}

} // namespace fatchroma
