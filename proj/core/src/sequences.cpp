#include "hyperpi/sequences.hpp"

#include <stdexcept>

namespace hyperpi {

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    c_.reserve(coefficients.size());
    for (long v : coefficients)
        c_.emplace_back(v);
}

Integer IntPolynomial::eval(const Integer& n) const {
    Integer acc = 0;
    for (std::size_t j = c_.size(); j-- > 0;)
        acc = acc * n + c_[j];
    return acc;
}

bool IntPolynomial::is_zero() const {
    for (const auto& v : c_)
        if (v != 0)
            return false;
    return true;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t j = 0; j < a.c_.size(); ++j)
        c[j] += a.c_[j];
    for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[j] += b.c_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.c_.empty() || b.c_.empty())
        return IntPolynomial{};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const Integer& s, const IntPolynomial& a) {
    std::vector<Integer> c = a.c_;
    for (auto& v : c)
        v *= s;
    return IntPolynomial(std::move(c));
}

void RecurrenceSpec::validate() const {
    if (coeffs.empty() || coeffs.back().is_zero())
        throw std::invalid_argument("RecurrenceSpec: leading polynomial vanishes");
}

RecurrenceSpec u_recurrence() {
    const IntPolynomial n_plus_1{1, 1};
    const IntPolynomial two_n_plus_1{1, 2};
    const IntPolynomial inner{5, 8, 8}; // 8n^2 + 8n + 5
    const IntPolynomial n_cubed{0, 0, 0, 1};
    RecurrenceSpec rec;
    rec.coeffs = {
        Integer(8) * n_cubed,                              // u_{n-1}
        Integer(-1) * (two_n_plus_1 * inner),              // u_n
        Integer(8) * (n_plus_1 * n_plus_1 * n_plus_1),     // u_{n+1}
    };
    rec.shift = 1;
    return rec;
}

RecurrenceSpec U_recurrence() {
    const IntPolynomial n_plus_1{1, 1};
    const IntPolynomial two_n_plus_1{1, 2};
    const IntPolynomial inner{5, 8, 8};
    const IntPolynomial n_cubed{0, 0, 0, 1};
    RecurrenceSpec rec;
    rec.coeffs = {
        Integer(4096) * n_cubed,                           // U_{n-1}
        Integer(-8) * (two_n_plus_1 * inner),              // U_n
        n_plus_1 * n_plus_1 * n_plus_1,                    // U_{n+1}
    };
    rec.shift = 1;
    return rec;
}

namespace {

// (1/2)_k / k! for k = 0..nmax, computed incrementally.
std::vector<Rational> half_over_factorial(std::size_t nmax) {
    std::vector<Rational> h(nmax + 1);
    h[0] = Rational(1);
    for (std::size_t k = 1; k <= nmax; ++k)
        h[k] = h[k - 1] * Rational(2 * static_cast<long>(k) - 1, 2 * static_cast<long>(k));
    return h;
}

std::vector<Rational> u_by_convolution(std::size_t nmax) {
    const auto h = half_over_factorial(nmax);
    std::vector<Rational> cube(nmax + 1);
    for (std::size_t k = 0; k <= nmax; ++k)
        cube[k] = h[k] * h[k] * h[k];
    std::vector<Rational> u(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n) {
        Rational sum(0);
        for (std::size_t v = 0; v <= n; ++v)
            sum += cube[v] * h[n - v];
        u[n] = sum;
    }
    return u;
}

std::vector<Rational> u_by_quarters(std::size_t nmax) {
    // (1/4)_k / k! and (3/4)_k / k!
    std::vector<Rational> q1(nmax + 1), q3(nmax + 1);
    q1[0] = q3[0] = Rational(1);
    for (std::size_t k = 1; k <= nmax; ++k) {
        q1[k] = q1[k - 1] * Rational(4 * static_cast<long>(k) - 3, 4 * static_cast<long>(k));
        q3[k] = q3[k - 1] * Rational(4 * static_cast<long>(k) - 1, 4 * static_cast<long>(k));
    }
    std::vector<Rational> u(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n) {
        Rational sum(0);
        for (std::size_t v = 0; v <= n; ++v) {
            Rational t = q1[v] * q3[n - v];
            sum += t * t;
        }
        u[n] = sum;
    }
    return u;
}

std::vector<Rational> u_by_recurrence(std::size_t nmax) {
    std::vector<Rational> u(nmax + 1);
    u[0] = Rational(1);
    if (nmax >= 1)
        u[1] = Rational(5, 8);
    for (std::size_t n = 1; n < nmax; ++n) {
        const Integer nn(static_cast<long>(n));
        const Integer lead = 8 * (nn + 1) * (nn + 1) * (nn + 1);
        const Integer mid = (2 * nn + 1) * (8 * nn * nn + 8 * nn + 5);
        const Integer low = 8 * nn * nn * nn;
        u[n + 1] = (Rational(mid) * u[n] - Rational(low) * u[n - 1]) / Rational(lead);
    }
    return u;
}

} // namespace

std::vector<Rational> u_seq(std::size_t nmax, USmallMethod method) {
    switch (method) {
    case USmallMethod::convolution: return u_by_convolution(nmax);
    case USmallMethod::quarters: return u_by_quarters(nmax);
    case USmallMethod::recurrence: return u_by_recurrence(nmax);
    }
    throw std::logic_error("u_seq: bad method");
}

std::vector<Integer> U_seq(std::size_t nmax, UBigMethod method) {
    std::vector<Integer> U(nmax + 1);
    switch (method) {
    case UBigMethod::direct: {
        Integer pow16 = 1; // 2^{4k}
        std::vector<Integer> pows(nmax + 1);
        for (std::size_t k = 0; k <= nmax; ++k) {
            pows[k] = pow16;
            pow16 *= 16;
        }
        for (std::size_t n = 0; n <= nmax; ++n) {
            Integer sum = 0;
            for (std::size_t k = 0; k <= n; ++k) {
                const Integer c = binomial(2 * k, k);
                sum += c * c * c * binomial(2 * (n - k), n - k) * pows[n - k];
            }
            U[n] = sum;
        }
        break;
    }
    case UBigMethod::rescale: {
        const auto u = u_seq(nmax, USmallMethod::convolution);
        Integer scale = 1; // 2^{6n}
        for (std::size_t n = 0; n <= nmax; ++n) {
            const Rational v = Rational(scale) * u[n];
            if (!v.is_integer())
                throw std::logic_error("U_seq: 2^{6n} u_n is not an integer");
            U[n] = v.num();
            scale *= 64;
        }
        break;
    }
    case UBigMethod::recurrence: {
        U[0] = 1;
        if (nmax >= 1)
            U[1] = 40;
        for (std::size_t n = 1; n < nmax; ++n) {
            const Integer nn(static_cast<long>(n));
            const Integer lead = (nn + 1) * (nn + 1) * (nn + 1);
            const Integer num =
                8 * (2 * nn + 1) * (8 * nn * nn + 8 * nn + 5) * U[n] - 4096 * nn * nn * nn * U[n - 1];
            Integer q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), lead.get_mpz_t());
            if (r != 0)
                throw std::logic_error("U_seq: recurrence step is not integral");
            U[n + 1] = q;
        }
        break;
    }
    }
    return U;
}

std::vector<Integer> A_seq(std::size_t nmax) {
    std::vector<Integer> A(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n) {
        Integer inner = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            const Integer a = binomial(2 * k, k);
            const Integer b = binomial(2 * (n - k), n - k);
            inner += a * a * b * b;
        }
        const Integer c = binomial(2 * n, n);
        A[n] = c * c * inner;
    }
    return A;
}

std::vector<Integer> B_seq(std::size_t nmax) {
    std::vector<Integer> B(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n) {
        Integer sum = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            const Integer c = binomial(n, k);
            const Integer c2 = c * c;
            sum += c2 * c2;
        }
        B[n] = sum;
    }
    return B;
}

namespace {

template <typename T>
RecurrenceReport check_recurrence_impl(std::span<const T> seq, const RecurrenceSpec& rec,
                                       long n_lo, long n_hi) {
    rec.validate();
    const long order = static_cast<long>(rec.coeffs.size()) - 1;
    if (n_lo - rec.shift < 0 || n_hi + order - rec.shift >= static_cast<long>(seq.size()))
        throw std::out_of_range("check_recurrence: sequence does not cover the range");
    for (long n = n_lo; n <= n_hi; ++n) {
        T sum{};
        for (long i = 0; i <= order; ++i) {
            const Integer c = rec.coeffs[static_cast<std::size_t>(i)].eval(Integer(n));
            sum += T(c) * seq[static_cast<std::size_t>(n + i - rec.shift)];
        }
        if (sum != T{})
            return {false, n};
    }
    return {true, std::nullopt};
}

} // namespace

RecurrenceReport check_recurrence(std::span<const Rational> seq, const RecurrenceSpec& rec,
                                  long n_lo, long n_hi) {
    return check_recurrence_impl(seq, rec, n_lo, n_hi);
}

RecurrenceReport check_recurrence(std::span<const Integer> seq, const RecurrenceSpec& rec,
                                  long n_lo, long n_hi) {
    return check_recurrence_impl(seq, rec, n_lo, n_hi);
}

} // namespace hyperpi
