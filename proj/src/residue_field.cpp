#include "rootnum/residue_field.hpp"

#include <string>

#include "rootnum/error.hpp"
#include "rootnum/number_theory.hpp"

namespace rootnum {

namespace detail {

struct FieldTables {
    PrimePower pp;
    Poly modulus;
    std::int64_t generator = 0;
    std::vector<std::int32_t> exp; // j -> index of g^j, j in [0, q-1)
    std::vector<std::int32_t> log; // index -> j, log[0] = -1
    std::vector<std::int32_t> trace;
    std::vector<std::int64_t> digit_weight; // p^i
};

namespace {

Poly decode(std::int64_t index, std::int64_t p, int f) {
    Poly c(static_cast<std::size_t>(f), 0);
    for (int i = 0; i < f; ++i) {
        c[static_cast<std::size_t>(i)] = index % p;
        index /= p;
    }
    return c;
}

std::int64_t encode(const Poly& c, std::int64_t p) {
    std::int64_t index = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        index = index * p + *it;
    return index;
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::int64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (lead != 0)
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = mod_floor(a[shift + i] - lead * b[i], p);
        a.pop_back();
    }
    return a;
}

Poly poly_powmod(Poly base, std::int64_t e, const Poly& modulus, std::int64_t p) {
    Poly result(modulus.size() - 1, 0);
    result[0] = 1;
    while (e > 0) {
        if (e & 1)
            result = poly_mulmod(result, base, modulus, p);
        base = poly_mulmod(base, base, modulus, p);
        e >>= 1;
    }
    return result;
}

bool is_one(const Poly& a) {
    if (a.empty() || a[0] != 1)
        return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0)
            return false;
    return true;
}

} // namespace

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::int64_t p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    Poly r = poly_mod(std::move(prod), modulus, p);
    r.resize(modulus.size() - 1, 0);
    return r;
}

bool is_irreducible(const Poly& monic, std::int64_t p) {
    const int deg = static_cast<int>(monic.size()) - 1;
    for (int k = 1; 2 * k <= deg; ++k) {
        const std::int64_t count = checked_pow(p, k);
        for (std::int64_t n = 0; n < count; ++n) {
            Poly divisor = decode(n, p, k);
            divisor.push_back(1);
            const Poly r = poly_mod(monic, divisor, p);
            bool zero = true;
            for (auto c : r)
                zero = zero && c == 0;
            if (zero)
                return false;
        }
    }
    return deg >= 1;
}

} // namespace detail

using detail::Poly;

ResidueField::ResidueField(PrimePower pp) {
    const std::int64_t p = pp.p(), q = pp.q();
    const int f = pp.f();
    if (q > max_order)
        throw Error(ErrorCode::BoundExceeded, "field order " + std::to_string(q) + " exceeds " +
                                                  std::to_string(max_order));

    auto t = std::make_shared<detail::FieldTables>(detail::FieldTables{pp, {}, 0, {}, {}, {}, {}});
    for (int i = 0; i < f; ++i)
        t->digit_weight.push_back(checked_pow(p, i));

    for (std::int64_t n = 0; n < q; ++n) {
        Poly m = detail::decode(n, p, f);
        m.push_back(1);
        if (detail::is_irreducible(m, p)) {
            t->modulus = std::move(m);
            break;
        }
    }
    if (t->modulus.empty())
        throw Error(ErrorCode::InternalError, "no irreducible polynomial found");

    const auto group_primes = factorize(q - 1);
    for (std::int64_t idx = 1; idx < q && t->generator == 0; ++idx) {
        const Poly g = detail::decode(idx, p, f);
        bool primitive = true;
        for (const auto& [ell, k] : group_primes)
            if (detail::is_one(detail::poly_powmod(g, (q - 1) / ell, t->modulus, p))) {
                primitive = false;
                break;
            }
        if (primitive)
            t->generator = idx;
    }
    if (t->generator == 0)
        throw Error(ErrorCode::InternalError, "no generator found");

    t->exp.assign(static_cast<std::size_t>(q - 1), 0);
    t->log.assign(static_cast<std::size_t>(q), -1);
    const Poly g = detail::decode(t->generator, p, f);
    Poly cur = detail::decode(1, p, f);
    for (std::int64_t j = 0; j < q - 1; ++j) {
        const std::int64_t idx = detail::encode(cur, p);
        if (t->log[static_cast<std::size_t>(idx)] != -1)
            throw Error(ErrorCode::InternalError, "generator order is smaller than q - 1");
        t->exp[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(idx);
        t->log[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(j);
        cur = detail::poly_mulmod(cur, g, t->modulus, p);
    }
    if (!detail::is_one(cur))
        throw Error(ErrorCode::InternalError, "generator power q - 1 is not 1");

    // Tr(x^i) for the power basis, then extend linearly.
    std::vector<std::int64_t> basis_trace(static_cast<std::size_t>(f), 0);
    for (int i = 0; i < f; ++i) {
        Poly xi(static_cast<std::size_t>(f), 0);
        xi[static_cast<std::size_t>(i)] = 1;
        Poly sum = xi, conj = xi;
        for (int k = 1; k < f; ++k) {
            conj = detail::poly_powmod(conj, p, t->modulus, p);
            for (int c = 0; c < f; ++c)
                sum[static_cast<std::size_t>(c)] = (sum[static_cast<std::size_t>(c)] + conj[static_cast<std::size_t>(c)]) % p;
        }
        for (int c = 1; c < f; ++c)
            if (sum[static_cast<std::size_t>(c)] != 0)
                throw Error(ErrorCode::InternalError, "trace is not in the prime field");
        basis_trace[static_cast<std::size_t>(i)] = sum[0];
    }
    t->trace.assign(static_cast<std::size_t>(q), 0);
    for (std::int64_t idx = 0; idx < q; ++idx) {
        std::int64_t rem = idx, tr = 0;
        for (int i = 0; i < f; ++i) {
            tr += (rem % p) * basis_trace[static_cast<std::size_t>(i)];
            rem /= p;
        }
        t->trace[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(tr % p);
    }

    tables_ = std::move(t);
}

const PrimePower& ResidueField::prime_power() const { return tables_->pp; }
const std::vector<std::int64_t>& ResidueField::modulus() const { return tables_->modulus; }

FieldElement ResidueField::generator() const { return FieldElement(*this, tables_->generator); }
FieldElement ResidueField::zero() const { return FieldElement(*this, 0); }
FieldElement ResidueField::one() const { return FieldElement(*this, 1); }
FieldElement ResidueField::from_integer(std::int64_t n) const { return FieldElement(*this, mod_floor(n, p())); }

FieldElement ResidueField::element(std::span<const std::int64_t> coeffs) const {
    if (coeffs.size() > static_cast<std::size_t>(degree()))
        throw Error(ErrorCode::InvalidArgument, "too many coefficients for a degree-" + std::to_string(degree()) +
                                                    " field element");
    Poly c(static_cast<std::size_t>(degree()), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[i] = mod_floor(coeffs[i], p());
    return FieldElement(*this, detail::encode(c, p()));
}

FieldElement ResidueField::from_index(std::int64_t index) const {
    if (index < 0 || index >= order())
        throw Error(ErrorCode::InvalidArgument, "element index out of range");
    return FieldElement(*this, index);
}

FieldElement ResidueField::generator_power(std::int64_t j) const { return FieldElement(*this, exp_index(j)); }

std::int64_t ResidueField::add_index(std::int64_t a, std::int64_t b) const {
    const std::int64_t p = this->p();
    if (degree() == 1)
        return (a + b) % p;
    std::int64_t out = 0;
    for (const std::int64_t w : tables_->digit_weight) {
        out += ((a % p + b % p) % p) * w;
        a /= p;
        b /= p;
    }
    return out;
}

std::int64_t ResidueField::neg_index(std::int64_t a) const {
    const std::int64_t p = this->p();
    std::int64_t out = 0;
    for (const std::int64_t w : tables_->digit_weight) {
        out += ((p - a % p) % p) * w;
        a /= p;
    }
    return out;
}

std::int64_t ResidueField::mul_index(std::int64_t a, std::int64_t b) const {
    if (a == 0 || b == 0)
        return 0;
    const std::int64_t n = order() - 1;
    std::int64_t j = tables_->log[static_cast<std::size_t>(a)] + tables_->log[static_cast<std::size_t>(b)];
    if (j >= n)
        j -= n;
    return tables_->exp[static_cast<std::size_t>(j)];
}

std::int64_t ResidueField::log_index(std::int64_t a) const {
    if (a == 0)
        throw Error(ErrorCode::ZeroArgument, "discrete log of zero");
    return tables_->log[static_cast<std::size_t>(a)];
}

std::int64_t ResidueField::exp_index(std::int64_t j) const {
    return tables_->exp[static_cast<std::size_t>(mod_floor(j, order() - 1))];
}

std::int64_t ResidueField::trace_index(std::int64_t a) const { return tables_->trace[static_cast<std::size_t>(a)]; }

std::int64_t ResidueField::minus_one_index() const { return neg_index(1); }

std::vector<std::int64_t> FieldElement::coeffs() const {
    return detail::decode(index_, owner_.p(), owner_.degree());
}

FieldElement FieldElement::pow(std::int64_t n) const {
    if (index_ == 0) {
        if (n < 0)
            throw Error(ErrorCode::ZeroArgument, "negative power of zero");
        return n == 0 ? owner_.one() : *this;
    }
    return FieldElement(owner_, owner_.exp_index(owner_.log_index(index_) * mod_floor(n, owner_.order() - 1)));
}

FieldElement FieldElement::inverse() const {
    if (index_ == 0)
        throw Error(ErrorCode::ZeroArgument, "inverse of zero");
    return pow(-1);
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.owner() == b.owner()))
        throw Error(ErrorCode::InvalidArgument, "field elements belong to different fields");
}
} // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.owner_, a.owner_.add_index(a.index_, b.index_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.owner_, a.owner_.mul_index(a.index_, b.index_));
}

FieldElement FieldElement::operator-() const { return FieldElement(owner_, owner_.neg_index(index_)); }

std::int64_t discrete_log(const FieldElement& x) { return x.owner().log_index(x.index()); }

std::int64_t trace_to_prime_field(const FieldElement& x) { return x.owner().trace_index(x.index()); }

} // namespace rootnum
