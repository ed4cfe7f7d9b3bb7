#pragma once

#include <cstdint>
#include <vector>

#include "rootnum/cyclotomic.hpp"
#include "rootnum/residue_field.hpp"
#include "rootnum/sign.hpp"

namespace rootnum {

/// chi_k on k^x: chi_k(g^j) = zeta_{q-1}^{k j} for the field's fixed generator g.
class MultiplicativeCharacter {
public:
    MultiplicativeCharacter(ResidueField field, std::int64_t index);

    const ResidueField& field() const { return field_; }
    std::int64_t index() const { return index_; }
    std::int64_t order() const;
    bool is_trivial() const { return index_ == 0; }

    MultiplicativeCharacter conjugate() const;
    MultiplicativeCharacter pow(std::int64_t n) const;

    /// k * dlog(x) mod (q - 1); requires x != 0.
    std::int64_t exponent_at(const FieldElement& x) const;

    /// True when the character is trivial on the subfield of order r (r^d = q).
    bool trivial_on_subfield(std::int64_t subfield_order) const;

    friend bool operator==(const MultiplicativeCharacter&, const MultiplicativeCharacter&) = default;

private:
    ResidueField field_;
    std::int64_t index_;
};

/// Every character of exact order e, ascending by index. Empty if e does not divide q - 1.
std::vector<MultiplicativeCharacter> characters_of_exact_order(const ResidueField& field, std::int64_t e);

/// chi(x) as an element of Z[zeta_{q-1}]. Error(ZeroArgument) when x = 0.
CyclotomicValue char_eval(const MultiplicativeCharacter& chi, const FieldElement& x);

/// chi(-1); Error(EvenCharacteristic) when p = 2.
Sign char_at_minus_one(const MultiplicativeCharacter& chi);

/// tau(chi) = sum over x in k^x of chi(x) zeta_p^{Tr x}, exact, of order p (q - 1).
CyclotomicValue gauss_sum(const MultiplicativeCharacter& chi);

} // namespace rootnum
