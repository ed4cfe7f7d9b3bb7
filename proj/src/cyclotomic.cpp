#include "rootnum/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "rootnum/error.hpp"
#include "rootnum/number_theory.hpp"

namespace rootnum {

namespace {

// Largest order handled with a dense scratch buffer.
constexpr std::int64_t dense_limit = std::int64_t{1} << 22;
// Largest order canonical() accepts.
constexpr std::int64_t reduce_limit = std::int64_t{1} << 26;

void check_order(std::int64_t order) {
    if (order < 1)
        throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be >= 1, got " + std::to_string(order));
}

std::vector<CyclotomicValue::Term> collect_dense(const std::vector<std::int64_t>& buf) {
    std::vector<CyclotomicValue::Term> out;
    for (std::size_t i = 0; i < buf.size(); ++i)
        if (buf[i] != 0)
            out.emplace_back(static_cast<std::int64_t>(i), buf[i]);
    return out;
}

// Sort by exponent, merge equal exponents, drop zeros.
void normalize(std::vector<CyclotomicValue::Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms.size();) {
        const std::int64_t e = terms[r].first;
        std::int64_t c = 0;
        while (r < terms.size() && terms[r].first == e)
            c += terms[r++].second;
        if (c != 0)
            terms[w++] = {e, c};
    }
    terms.resize(w);
}

} // namespace

CyclotomicValue::CyclotomicValue(std::int64_t order) : order_(order) { check_order(order); }

CyclotomicValue CyclotomicValue::integer(std::int64_t c, std::int64_t order) {
    check_order(order);
    if (c == 0)
        return CyclotomicValue(order);
    return CyclotomicValue(order, {{0, c}});
}

CyclotomicValue CyclotomicValue::root_of_unity(std::int64_t order, std::int64_t exponent, std::int64_t coeff) {
    check_order(order);
    if (coeff == 0)
        return CyclotomicValue(order);
    return CyclotomicValue(order, {{mod_floor(exponent, order), coeff}});
}

CyclotomicValue CyclotomicValue::from_terms(std::int64_t order, std::span<const Term> terms) {
    check_order(order);
    std::vector<Term> t;
    t.reserve(terms.size());
    for (const auto& [e, c] : terms)
        t.emplace_back(mod_floor(e, order), c);
    normalize(t);
    return CyclotomicValue(order, std::move(t));
}

std::int64_t CyclotomicValue::coefficient(std::int64_t exponent) const {
    const std::int64_t e = mod_floor(exponent, order_);
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                     [](const Term& t, std::int64_t v) { return t.first < v; });
    return (it != terms_.end() && it->first == e) ? it->second : 0;
}

CyclotomicValue CyclotomicValue::lift(std::int64_t new_order) const {
    check_order(new_order);
    if (new_order % order_ != 0)
        throw Error(ErrorCode::InvalidArgument,
                    "cannot lift order " + std::to_string(order_) + " to " + std::to_string(new_order));
    const std::int64_t scale = new_order / order_;
    std::vector<Term> t = terms_;
    for (auto& term : t)
        term.first *= scale;
    return CyclotomicValue(new_order, std::move(t));
}

CyclotomicValue CyclotomicValue::compressed() const {
    std::int64_t g = order_;
    for (const auto& term : terms_)
        g = std::gcd(g, term.first);
    if (terms_.empty())
        return CyclotomicValue(1);
    if (g == 1)
        return *this;
    std::vector<Term> t = terms_;
    for (auto& term : t)
        term.first /= g;
    return CyclotomicValue(order_ / g, std::move(t));
}

CyclotomicValue CyclotomicValue::conjugate() const {
    std::vector<Term> t = terms_;
    for (auto& term : t)
        term.first = mod_floor(-term.first, order_);
    normalize(t);
    return CyclotomicValue(order_, std::move(t));
}

CyclotomicValue CyclotomicValue::galois(std::int64_t j) const {
    if (std::gcd(mod_floor(j, order_), order_) != 1)
        throw Error(ErrorCode::InvalidArgument,
                    "Galois exponent " + std::to_string(j) + " is not a unit mod " + std::to_string(order_));
    std::vector<Term> t = terms_;
    for (auto& term : t)
        term.first = mul_mod(term.first, j, order_);
    normalize(t);
    return CyclotomicValue(order_, std::move(t));
}

CyclotomicValue CyclotomicValue::canonical() const {
    CyclotomicValue c = compressed();
    // A reduced form whose exponents share a factor d lives in Z[zeta_{n/d}]; descend
    // until the order is minimal, which makes the result independent of the input order.
    while (true) {
        CyclotomicValue r = c.reduced_basis().compressed();
        if (r.order_ == c.order_)
            return r;
        c = std::move(r);
    }
}

CyclotomicValue CyclotomicValue::reduced_basis() const {
    const CyclotomicValue& c = *this;
    const std::int64_t n = c.order_;
    if (n == 1)
        return c;
    if (n > reduce_limit)
        throw Error(ErrorCode::BoundExceeded, "canonical reduction of order " + std::to_string(n) + " is too large");

    std::vector<std::int64_t> buf(static_cast<std::size_t>(n), 0);
    for (const auto& [e, coeff] : c.terms_)
        buf[static_cast<std::size_t>(e)] += coeff;

    // Along each prime-power axis l^k, rewrite exponents whose l^k-component lies
    // in [phi(l^k), l^k) using Phi_{l^k}(x) = sum_{j<l} x^{j l^{k-1}}.
    for (const auto& [ell, k] : factorize(n)) {
        const std::int64_t big = checked_pow(ell, k);
        const std::int64_t block = big / ell;
        const std::int64_t phi = big - block;
        const std::int64_t rest = n / big;
        // u = 1 mod l^k, 0 mod n / l^k: moves only the l^k-component.
        const std::int64_t u = rest * *inverse_mod(rest % big, big) % n;
        for (std::int64_t i = 0; i < n; ++i) {
            const std::int64_t coeff = buf[static_cast<std::size_t>(i)];
            if (coeff == 0)
                continue;
            const std::int64_t comp = i % big;
            if (comp < phi)
                continue;
            const std::int64_t r = comp - phi;
            for (std::int64_t j = 0; j + 1 < ell; ++j) {
                const std::int64_t target = r + j * block;
                const std::int64_t dst = mod_floor(i + (target - comp) * u, n);
                buf[static_cast<std::size_t>(dst)] -= coeff;
            }
            buf[static_cast<std::size_t>(i)] = 0;
        }
    }
    return CyclotomicValue(n, collect_dense(buf));
}

std::optional<std::int64_t> CyclotomicValue::as_integer() const {
    const CyclotomicValue c = canonical();
    if (c.terms_.empty())
        return 0;
    if (c.terms_.size() == 1 && c.terms_[0].first == 0)
        return c.terms_[0].second;
    return std::nullopt;
}

std::optional<Sign> CyclotomicValue::as_sign() const {
    const auto v = as_integer();
    if (!v || (*v != 1 && *v != -1))
        return std::nullopt;
    return Sign::from_int(*v);
}

std::optional<CyclotomicValue> CyclotomicValue::divide_exact(std::int64_t d) const {
    if (d == 0)
        throw Error(ErrorCode::ZeroArgument, "division by zero");
    CyclotomicValue c = canonical();
    for (auto& term : c.terms_) {
        if (term.second % d != 0)
            return std::nullopt;
        term.second /= d;
    }
    return c;
}

bool CyclotomicValue::is_zero() const { return canonical().terms_.empty(); }

std::complex<double> CyclotomicValue::evaluate() const {
    long double re = 0, im = 0;
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (const auto& [e, c] : terms_) {
        const long double angle = two_pi * static_cast<long double>(e) / static_cast<long double>(order_);
        re += static_cast<long double>(c) * std::cos(angle);
        im += static_cast<long double>(c) * std::sin(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

CyclotomicValue CyclotomicValue::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& term : t)
        term.second = -term.second;
    return CyclotomicValue(order_, std::move(t));
}

CyclotomicValue operator+(const CyclotomicValue& a, const CyclotomicValue& b) {
    const std::int64_t n = std::lcm(a.order_, b.order_);
    const std::int64_t sa = n / a.order_, sb = n / b.order_;
    std::vector<CyclotomicValue::Term> t;
    t.reserve(a.terms_.size() + b.terms_.size());
    for (const auto& [e, c] : a.terms_)
        t.emplace_back(e * sa, c);
    for (const auto& [e, c] : b.terms_)
        t.emplace_back(e * sb, c);
    normalize(t);
    return CyclotomicValue(n, std::move(t));
}

CyclotomicValue operator-(const CyclotomicValue& a, const CyclotomicValue& b) { return a + (-b); }

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
    const std::int64_t n = std::lcm(a.order_, b.order_);
    const std::int64_t sa = n / a.order_, sb = n / b.order_;
    if (n <= dense_limit) {
        std::vector<std::int64_t> buf(static_cast<std::size_t>(n), 0);
        for (const auto& [ea, ca] : a.terms_) {
            const std::int64_t xa = ea * sa;
            for (const auto& [eb, cb] : b.terms_) {
                std::int64_t idx = xa + eb * sb;
                if (idx >= n)
                    idx -= n;
                buf[static_cast<std::size_t>(idx)] += ca * cb;
            }
        }
        return CyclotomicValue(n, collect_dense(buf));
    }
    std::vector<CyclotomicValue::Term> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            t.emplace_back((ea * sa + eb * sb) % n, ca * cb);
    normalize(t);
    return CyclotomicValue(n, std::move(t));
}

CyclotomicValue operator*(std::int64_t c, const CyclotomicValue& a) {
    if (c == 0)
        return CyclotomicValue(a.order_);
    std::vector<CyclotomicValue::Term> t = a.terms_;
    for (auto& term : t)
        term.second *= c;
    return CyclotomicValue(a.order_, std::move(t));
}

bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) { return (a - b).is_zero(); }

} // namespace rootnum
