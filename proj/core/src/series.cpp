#include "hyperpi/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperpi {

Series Series::constant(const Rational& value, std::size_t order) {
    if (order == 0)
        throw std::invalid_argument("Series: order must be positive");
    Series s(order);
    s.c_[0] = value;
    return s;
}

Series Series::one_minus_z(std::size_t order) {
    Series s = constant(Rational(1), order);
    if (order > 1)
        s.c_[1] = Rational(-1);
    return s;
}

Series Series::truncated(std::size_t order) const {
    Series s(std::min(order, c_.size()));
    for (std::size_t n = 0; n < s.order(); ++n)
        s.c_[n] = c_[n];
    return s;
}

Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n < r.order(); ++n)
        r.c_[n] = a.c_[n] + b.c_[n];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n < r.order(); ++n)
        r.c_[n] = a.c_[n] - b.c_[n];
    return r;
}

Series operator-(const Series& a) {
    Series r(a.order());
    for (std::size_t n = 0; n < r.order(); ++n)
        r.c_[n] = -a.c_[n];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.order(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < r.order(); ++j) {
            if (!b.c_[j].is_zero())
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

Series operator*(const Rational& s, const Series& a) {
    Series r(a.order());
    for (std::size_t n = 0; n < r.order(); ++n)
        r.c_[n] = s * a.c_[n];
    return r;
}

Series compose(const Series& a, const Series& w) {
    if (w.order() == 0 || !w[0].is_zero())
        throw std::invalid_argument("compose: inner series must have zero constant term");
    const std::size_t order = std::min(a.order(), w.order());
    // Horner from the top coefficient down.
    Series acc = Series::constant(a[order - 1], order);
    for (std::size_t k = order - 1; k-- > 0;) {
        acc = acc * w;
        acc[0] += a[k];
    }
    return acc;
}

Series pow_rational(const Series& a, const Rational& alpha) {
    if (a.order() == 0 || a[0] != Rational(1))
        throw std::invalid_argument("pow_rational: series must have constant term 1");
    Series b(a.order());
    b[0] = Rational(1);
    for (std::size_t n = 1; n < a.order(); ++n) {
        Rational sum(0);
        for (std::size_t k = 1; k <= n; ++k) {
            Rational t = alpha * Rational(static_cast<long>(k)) * a[k] * b[n - k];
            if (k < n)
                t -= Rational(static_cast<long>(k)) * b[k] * a[n - k];
            sum += t;
        }
        b[n] = sum / Rational(static_cast<long>(n));
    }
    return b;
}

Series theta(const Series& a) {
    Series r(a.order());
    for (std::size_t n = 0; n < r.order(); ++n)
        r[n] = Rational(static_cast<long>(n)) * a[n];
    return r;
}

Series derivative(const Series& a) {
    if (a.order() < 2)
        return Series(1);
    Series r(a.order() - 1);
    for (std::size_t n = 0; n + 1 < a.order(); ++n)
        r[n] = Rational(static_cast<long>(n + 1)) * a[n + 1];
    return r;
}

Series quad_map(std::size_t order) {
    Series w(order);
    for (std::size_t n = 1; n < order; ++n)
        w[n] = Rational(-4 * static_cast<long>(n));
    return w;
}

SeriesCompare compare_series(const Series& a, const Series& b) {
    const std::size_t order = std::min(a.order(), b.order());
    for (std::size_t n = 0; n < order; ++n) {
        if (a[n] != b[n])
            return {false, n};
    }
    return {true, std::nullopt};
}

} // namespace hyperpi
