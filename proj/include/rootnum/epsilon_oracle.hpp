#pragma once

#include <cstdint>
#include <string_view>

#include "rootnum/character.hpp"
#include "rootnum/residue_field.hpp"
#include "rootnum/sign.hpp"

// Brute-force root numbers for tame characters, computed from Gauss sums over the
// residue field rather than from the closed-form sign formulas. Only uniformizer- and
// psi-independent combinations are ever evaluated; the additive character has level
// n(psi) = 0 throughout.

namespace rootnum::oracle {

/// A tame character seen through its restriction to the residue field.
class TameCharacterDatum {
public:
    explicit TameCharacterDatum(MultiplicativeCharacter residue_char);

    const ResidueField& field() const { return residue_char_.field(); }
    const MultiplicativeCharacter& residue_char() const { return residue_char_; }
    /// a(chi): 0 when unramified, 1 when tamely ramified.
    int conductor_exponent() const { return residue_char_.is_trivial() ? 0 : 1; }
    int psi_level() const { return 0; }

private:
    MultiplicativeCharacter residue_char_;
};

enum class EtaClass { Trivial, UnramifiedQuadratic, RamifiedQuadraticTame };

std::string_view to_string(EtaClass eta);

struct FroehlichQueyrut {
    Sign lhs; // tau(conj xi) / q
    Sign rhs; // xi(zeta_{2q-2})
};

/// w(chi) w(chi^{-1} omega^{-1}) as tau(chi) tau(conj chi) / q, exact.
Sign oracle_abelian_pair(const TameCharacterDatum& chi);

/// w(Ind chi) for xi on the quadratic residue extension, trivial on the base subfield.
Sign oracle_induced(const TameCharacterDatum& xi);

/// Both sides of the Froehlich-Queyrut identity for xi as in oracle_induced.
FroehlichQueyrut froehlich_queyrut_check(const TameCharacterDatum& xi);

/// w(eta (x) sp(2)) = eta(-1) * (-1)^{<eta|1>}, with the ramified eta(-1) found by squareness search.
Sign oracle_sp2(EtaClass eta, const ResidueField& field);

/// u(Frob)^{n dim + a} for a quadratic unramified twist.
Sign unramified_twist_epsilon_shift(std::int64_t a, std::int64_t n, std::int64_t dim, Sign u_at_frobenius);

/// Tame Artin conductor: dim minus the dimension of inertia invariants.
std::int64_t artin_conductor_tame(std::int64_t dim, std::int64_t inertia_invariant_dim);

/// Exhaustive search for x with x^2 = -1.
bool minus_one_is_square(const ResidueField& field);

/// Base-field order q for a field of order q^2; Error(InvalidArgument) for odd degree.
std::int64_t quadratic_subfield_order(const ResidueField& field);

} // namespace rootnum::oracle
