#include "rootnum/epsilon_oracle.hpp"

#include <string>

#include "rootnum/error.hpp"
#include "rootnum/number_theory.hpp"

namespace rootnum::oracle {

TameCharacterDatum::TameCharacterDatum(MultiplicativeCharacter residue_char) : residue_char_(std::move(residue_char)) {}

std::string_view to_string(EtaClass eta) {
    switch (eta) {
    case EtaClass::Trivial: return "Trivial";
    case EtaClass::UnramifiedQuadratic: return "UnramifiedQuadratic";
    case EtaClass::RamifiedQuadraticTame: return "RamifiedQuadraticTame";
    }
    return "Unknown";
}

namespace {

Sign exact_sign(const CyclotomicValue& v, const char* what) {
    const auto s = v.as_sign();
    if (!s)
        throw Error(ErrorCode::NonSignValue, std::string(what) + " is not +-1");
    return *s;
}

Sign gauss_ratio(const MultiplicativeCharacter& chi, std::int64_t divisor, const char* what) {
    const auto quotient = gauss_sum(chi).divide_exact(divisor);
    if (!quotient)
        throw Error(ErrorCode::NonSignValue, std::string(what) + " is not divisible by " + std::to_string(divisor));
    return exact_sign(*quotient, what);
}

// Checks the preconditions shared by the induced-case routines; returns q.
std::int64_t induced_base_order(const TameCharacterDatum& xi) {
    const std::int64_t q = quadratic_subfield_order(xi.field());
    if (q % 2 == 0)
        throw Error(ErrorCode::EvenCharacteristic, "induced case needs odd q");
    if (xi.residue_char().is_trivial())
        throw Error(ErrorCode::TrivialCharacter, "xi must be nontrivial");
    if (!xi.residue_char().trivial_on_subfield(q))
        throw Error(ErrorCode::NotTrivialOnSubfield,
                    "xi (index " + std::to_string(xi.residue_char().index()) + ") is not trivial on F_" +
                        std::to_string(q) + "^x");
    return q;
}

} // namespace

std::int64_t quadratic_subfield_order(const ResidueField& field) {
    if (field.degree() % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "field of odd degree has no quadratic subextension");
    return checked_pow(field.p(), field.degree() / 2);
}

Sign oracle_abelian_pair(const TameCharacterDatum& chi) {
    const MultiplicativeCharacter& c = chi.residue_char();
    const std::int64_t q = chi.field().order();
    if (q % 2 == 0)
        throw Error(ErrorCode::EvenCharacteristic, "abelian pair oracle needs odd q");
    if (c.is_trivial())
        throw Error(ErrorCode::TrivialCharacter, "abelian pair oracle needs a nontrivial character");
    const CyclotomicValue product = gauss_sum(c) * gauss_sum(c.conjugate());
    const auto normalized = product.divide_exact(q);
    if (!normalized)
        throw Error(ErrorCode::NonSignValue, "tau(chi) tau(conj chi) is not divisible by q");
    return exact_sign(*normalized, "tau(chi) tau(conj chi) / q");
}

FroehlichQueyrut froehlich_queyrut_check(const TameCharacterDatum& xi) {
    const std::int64_t q = induced_base_order(xi);
    const MultiplicativeCharacter& c = xi.residue_char();
    const Sign lhs = gauss_ratio(c.conjugate(), q, "tau(conj xi) / q");
    // zeta_{2q-2} = G^{(q^2-1)/(2q-2)} = G^{(q+1)/2}.
    const FieldElement zeta = xi.field().generator_power((q + 1) / 2);
    const Sign rhs = exact_sign(char_eval(c, zeta), "xi(zeta_{2q-2})");
    return {lhs, rhs};
}

Sign oracle_induced(const TameCharacterDatum& xi) {
    const std::int64_t q = induced_base_order(xi);
    const Sign fq_value = gauss_ratio(xi.residue_char().conjugate(), q, "tau(conj xi) / q");
    const std::int64_t n = xi.psi_level();
    const std::int64_t a = xi.conductor_exponent();
    // w(chi) = (-1)^{n+a} * FQ value, times w(Ind 1) = chi_0(c) = (-1)^n.
    const Sign twist = unramified_twist_epsilon_shift(a, n, 1, Sign::minus());
    const Sign induction = Sign::from_parity(n);
    return twist * fq_value * induction;
}

Sign oracle_sp2(EtaClass eta, const ResidueField& field) {
    Sign det_part;
    int trivial_multiplicity = 0;
    switch (eta) {
    case EtaClass::Trivial: trivial_multiplicity = 1; break;
    case EtaClass::UnramifiedQuadratic: break;
    case EtaClass::RamifiedQuadraticTame:
        if (field.p() == 2)
            throw Error(ErrorCode::EvenCharacteristic, "ramified tame quadratic eta needs odd p");
        // eta(theta(-1)) = +1 iff -1 is a norm from the ramified quadratic extension,
        // i.e. iff -1 is a square in the residue field.
        det_part = minus_one_is_square(field) ? Sign::plus() : Sign::minus();
        break;
    }
    return det_part * Sign::from_parity(trivial_multiplicity);
}

Sign unramified_twist_epsilon_shift(std::int64_t a, std::int64_t n, std::int64_t dim, Sign u_at_frobenius) {
    return u_at_frobenius.pow(n * dim + a);
}

std::int64_t artin_conductor_tame(std::int64_t dim, std::int64_t inertia_invariant_dim) {
    if (dim < 0 || inertia_invariant_dim < 0 || inertia_invariant_dim > dim)
        throw Error(ErrorCode::InvalidArgument, "need 0 <= inertia invariants <= dim");
    return dim - inertia_invariant_dim;
}

bool minus_one_is_square(const ResidueField& field) {
    const std::int64_t target = field.minus_one_index();
    for (std::int64_t x = 0; x < field.order(); ++x)
        if (field.mul_index(x, x) == target)
            return true;
    return false;
}

} // namespace rootnum::oracle
