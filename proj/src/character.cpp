#include "rootnum/character.hpp"

#include <numeric>
#include <string>

#include "rootnum/error.hpp"
#include "rootnum/number_theory.hpp"

namespace rootnum {

MultiplicativeCharacter::MultiplicativeCharacter(ResidueField field, std::int64_t index)
    : field_(std::move(field)), index_(0) {
    index_ = mod_floor(index, field_.order() - 1);
}

std::int64_t MultiplicativeCharacter::order() const {
    const std::int64_t n = field_.order() - 1;
    return n / std::gcd(index_, n);
}

MultiplicativeCharacter MultiplicativeCharacter::conjugate() const { return MultiplicativeCharacter(field_, -index_); }

MultiplicativeCharacter MultiplicativeCharacter::pow(std::int64_t n) const {
    const std::int64_t m = field_.order() - 1;
    return MultiplicativeCharacter(field_, mul_mod(index_, n, m));
}

std::int64_t MultiplicativeCharacter::exponent_at(const FieldElement& x) const {
    if (!(x.owner() == field_))
        throw Error(ErrorCode::InvalidArgument, "element is not in the character's field");
    const std::int64_t m = field_.order() - 1;
    return mul_mod(index_, discrete_log(x), m);
}

bool MultiplicativeCharacter::trivial_on_subfield(std::int64_t subfield_order) const {
    const std::int64_t q = field_.order();
    if (subfield_order < 2 || (q - 1) % (subfield_order - 1) != 0)
        throw Error(ErrorCode::InvalidArgument, std::to_string(subfield_order) + " is not a subfield order of F_" +
                                                    std::to_string(q));
    // F_r^x = <g^{(q-1)/(r-1)}>; chi is trivial there iff (r-1) | index.
    return index_ % (subfield_order - 1) == 0;
}

std::vector<MultiplicativeCharacter> characters_of_exact_order(const ResidueField& field, std::int64_t e) {
    std::vector<MultiplicativeCharacter> out;
    const std::int64_t n = field.order() - 1;
    if (e < 1 || n % e != 0)
        return out;
    const std::int64_t step = n / e;
    for (std::int64_t j = 0; j < e; ++j)
        if (std::gcd(j, e) == 1 || e == 1)
            out.emplace_back(field, j * step);
    return out;
}

CyclotomicValue char_eval(const MultiplicativeCharacter& chi, const FieldElement& x) {
    if (x.is_zero())
        throw Error(ErrorCode::ZeroArgument, "multiplicative character evaluated at 0");
    return CyclotomicValue::root_of_unity(chi.field().order() - 1, chi.exponent_at(x));
}

Sign char_at_minus_one(const MultiplicativeCharacter& chi) {
    const ResidueField& k = chi.field();
    if (k.p() == 2)
        throw Error(ErrorCode::EvenCharacteristic, "chi(-1) is not a sign question in characteristic 2");
    const auto value = char_eval(chi, -k.one()).as_sign();
    if (!value)
        throw Error(ErrorCode::InternalError, "chi(-1) is not +-1");
    return *value;
}

CyclotomicValue gauss_sum(const MultiplicativeCharacter& chi) {
    const ResidueField& k = chi.field();
    const std::int64_t p = k.p(), q = k.order(), n = q - 1;
    // gcd(p, q - 1) = 1, so zeta_{q-1}^a zeta_p^t = zeta_{p(q-1)}^{p a + (q-1) t}.
    const std::int64_t order = p * n;
    std::vector<CyclotomicValue::Term> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j) {
        const std::int64_t x = k.exp_index(j);
        const std::int64_t a = mul_mod(chi.index(), j, n);
        terms.emplace_back(p * a + n * k.trace_index(x), 1);
    }
    return CyclotomicValue::from_terms(order, terms);
}

} // namespace rootnum
