#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace bredon {

/// Arbitrary-precision signed integer usable as an Eigen scalar.
///
/// A thin value wrapper around `boost::multiprecision::cpp_int`. Division and
/// remainder truncate toward zero, exactly like the built-in integer types, so
/// the templated algorithms in linalg.hpp behave identically for `Integer` and
/// `long long`.
class Integer {
public:
    using Rep = boost::multiprecision::cpp_int;

    Integer() = default;
    Integer(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Integer(int v) : v_(v) {}        // NOLINT(google-explicit-constructor)
    explicit Integer(Rep v) : v_(std::move(v)) {}
    explicit Integer(const std::string& decimal) : v_(decimal) {}

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
    Integer& operator/=(const Integer& o) { v_ /= o.v_; return *this; }
    Integer& operator%=(const Integer& o) { v_ %= o.v_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
    friend Integer operator%(Integer a, const Integer& b) { return a %= b; }
    friend Integer operator-(const Integer& a) { return Integer(Rep(-a.v_)); }

    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        const int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c == 0 ? std::strong_ordering::equal : std::strong_ordering::greater);
    }

    [[nodiscard]] bool is_zero() const { return v_.is_zero(); }
    [[nodiscard]] int sign() const { return v_.sign(); }
    [[nodiscard]] const Rep& rep() const { return v_; }
    [[nodiscard]] std::string str() const { return v_.str(); }

    [[nodiscard]] bool fits_int64() const {
        return v_ >= Rep(std::numeric_limits<std::int64_t>::min()) &&
               v_ <= Rep(std::numeric_limits<std::int64_t>::max());
    }
    [[nodiscard]] std::int64_t to_int64() const { return v_.convert_to<std::int64_t>(); }

    friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

private:
    Rep v_;
};

}  // namespace bredon

namespace Eigen {
template <>
struct NumTraits<bredon::Integer> : GenericNumTraits<bredon::Integer> {
    using Real = bredon::Integer;
    using NonInteger = bredon::Integer;
    using Nested = bredon::Integer;
    using Literal = bredon::Integer;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 16
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace bredon {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Integer>;
using IntVector = VectorX<Integer>;

template <typename Scalar>
Scalar abs_of(const Scalar& x) {
    return x < Scalar(0) ? Scalar(-x) : x;
}

/// Floor division for a positive divisor.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
    Scalar q = a / b;
    if (a % b != Scalar(0) && a < Scalar(0)) q -= Scalar(1);
    return q;
}

/// Bezout coefficients: returns g >= 0 with x*a + y*b == g.
template <typename Scalar>
Scalar extended_gcd(const Scalar& a, const Scalar& b, Scalar& x, Scalar& y) {
    Scalar old_r = a, r = b;
    Scalar old_s(1), s(0);
    Scalar old_t(0), t(1);
    while (r != Scalar(0)) {
        const Scalar q = old_r / r;
        Scalar tmp = r;
        r = old_r - q * r;
        old_r = tmp;
        tmp = s;
        s = old_s - q * s;
        old_s = tmp;
        tmp = t;
        t = old_t - q * t;
        old_t = tmp;
    }
    if (old_r < Scalar(0)) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

template <typename Scalar>
Scalar gcd_of(Scalar a, Scalar b) {
    a = abs_of(a);
    b = abs_of(b);
    while (b != Scalar(0)) {
        Scalar t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Integer matrix from nested initializer data (row major).
inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    IntMatrix m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long long v : row) m(i, j++) = Integer(v);
        ++i;
    }
    return m;
}

}  // namespace bredon
