#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootnum/local_data.hpp"
#include "rootnum/root_engine.hpp"

// Grid sweeps that cross-check the closed-form signs against the Gauss-sum oracle.
//
// Every suite has two kernels. Kernel::Reference is a plain serial loop that calls
// the oracle once per instance; it is the ground truth in tests. Kernel::Parallel
// distributes grid cells over OpenMP threads and, for the abelian suite, evaluates
// one Gauss-sum product per Galois orbit of characters: tau(chi^j) is checked to be
// the image of tau(chi) under zeta_{q-1} -> zeta_{q-1}^j, which then carries the
// exact product identity over. Both kernels return identical SuiteResults, ordered
// by grid key independent of scheduling.

namespace rootnum::verify {

enum class Kernel { Reference, Parallel };

struct Limits {
    static constexpr std::int64_t abelian_qmax = 10'000;
    static constexpr std::int64_t induced_qmax = 200;
    static constexpr std::int64_t gauss_qmax = 256;
    static constexpr std::int64_t sp2_qmax = 10'000;
    static constexpr std::int64_t sweep_qmax = 1'000'000;
};

struct Mismatch {
    std::string instance;
    std::string detail;
    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct SuiteResult {
    std::string suite;
    std::int64_t checked = 0;
    std::vector<Mismatch> mismatches;
    bool passed() const { return mismatches.empty(); }
};

/// Odd primes p <= pmax, the given residue degrees, every e > 1 dividing q - 1, every
/// character of exact order e: oracle_abelian_pair == (-1)^{(q-1)/e} == chi(-1).
SuiteResult verify_abelian(std::int64_t pmax, std::span<const int> degrees, Kernel kernel = Kernel::Parallel);

/// Odd primes q <= qmax, every e > 1 dividing q + 1, every exact-order-e character of
/// F_{q^2}^x trivial on F_q^x: oracle_induced == sign_pot_good_induced(q, e, 2) and
/// the Froehlich-Queyrut sides agree.
SuiteResult verify_induced(std::int64_t qmax, Kernel kernel = Kernel::Parallel);

/// Froehlich-Queyrut lhs == rhs for every nontrivial xi trivial on F_q^x, odd primes q <= qmax.
SuiteResult verify_froehlich_queyrut(std::int64_t qmax, Kernel kernel = Kernel::Parallel);

/// Odd prime powers q <= qmax, all three eta classes: oracle_sp2 == sign_toric(..).w_iota.
SuiteResult verify_sp2(std::int64_t qmax, Kernel kernel = Kernel::Parallel);

/// Every prime power q <= qmax and nontrivial chi: |tau|^2 = q and tau(chi) tau(conj chi) = chi(-1) q.
SuiteResult verify_gauss(std::int64_t qmax, Kernel kernel = Kernel::Parallel);

/// Odd prime powers q <= qmax: -1 is a square iff (q - 1)/2 is even.
SuiteResult verify_squareness(std::int64_t qmax, Kernel kernel = Kernel::Parallel);

/// Every admissible place for g in dims and odd q <= qmax has w = +1, and `random_jobs`
/// seeded random varieties built from those places have global w = +1.
SuiteResult verify_even_dimension(std::int64_t qmax, std::span<const std::int64_t> dims, std::uint64_t seed,
                                  int random_jobs, Kernel kernel = Kernel::Parallel);

/// Every place that passes validation for this (g, q), over all reduction cases with
/// tame data e | q -+ 1, wild exponents r in [0, 3] and conductors a in {2g, 4g}.
std::vector<PlaceData> admissible_places(std::int64_t g, std::int64_t q);

enum class SweepCase { Good, Abelian, Induced, Split, NonSplit, Additive };

std::string_view to_string(SweepCase c);
std::optional<SweepCase> parse_sweep_case(std::string_view s);

struct SweepGrid {
    std::int64_t g = 1;
    std::vector<SweepCase> cases;
    std::vector<std::int64_t> qs;
    /// Explicit tame orders; when absent every divisor e > 1 of q -+ 1 is tried.
    std::optional<std::vector<std::int64_t>> es;
    std::vector<std::int64_t> rs{0};
    std::int64_t a_iota = 2;
    ValidationOptions options;
};

struct SweepRow {
    std::int64_t q = 0;
    std::optional<std::int64_t> e;
    std::optional<std::int64_t> r;
    SweepCase sweep_case = SweepCase::Good;
    Sign w_iota;
    Sign w;
    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// sign_place over the admissible part of the grid, sorted by (q, case, e, r).
/// Error(InvalidArgument) for q that are not prime powers or exceed Limits::sweep_qmax.
std::vector<SweepRow> sweep_signs(const SweepGrid& grid, Kernel kernel = Kernel::Parallel);

/// Odd primes (f = 1) or odd prime powers up to bound.
std::vector<std::int64_t> odd_primes_up_to(std::int64_t bound);
std::vector<std::int64_t> prime_powers_up_to(std::int64_t bound, bool odd_only);

} // namespace rootnum::verify
