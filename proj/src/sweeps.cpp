#include "rootnum/sweeps.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <random>
#include <string>
#include <tuple>

#include "rootnum/character.hpp"
#include "rootnum/epsilon_oracle.hpp"
#include "rootnum/error.hpp"
#include "rootnum/number_theory.hpp"

namespace rootnum::verify {

namespace {

struct CellOutcome {
    std::int64_t checked = 0;
    std::vector<Mismatch> mismatches;
};

// Runs fn(i) for every cell, serially or over OpenMP threads, and concatenates the
// outcomes in cell order. Exceptions are confined to their cell and reported.
template <class Fn>
SuiteResult run_cells(std::string suite, std::size_t cells, Kernel kernel, Fn&& fn) {
    std::vector<CellOutcome> outcomes(cells);
    auto body = [&](std::size_t i) {
        try {
            outcomes[i] = fn(i);
        } catch (const std::exception& ex) {
            outcomes[i].mismatches.push_back({"cell " + std::to_string(i), std::string("exception: ") + ex.what()});
        }
    };
    const auto n = static_cast<std::int64_t>(cells);
    if (kernel == Kernel::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::int64_t i = 0; i < n; ++i)
            body(static_cast<std::size_t>(i));
    }
    SuiteResult result{std::move(suite), 0, {}};
    for (auto& o : outcomes) {
        result.checked += o.checked;
        for (auto& m : o.mismatches)
            result.mismatches.push_back(std::move(m));
    }
    return result;
}

std::string sign_str(Sign s) { return s.is_plus() ? "+1" : "-1"; }

void require_bound(const char* what, std::int64_t value, std::int64_t limit) {
    if (value > limit)
        throw Error(ErrorCode::BoundExceeded,
                    std::string(what) + " = " + std::to_string(value) + " exceeds the limit " + std::to_string(limit));
}

// Unit J mod p(q-1) acting as zeta_{q-1} -> zeta_{q-1}^{j'} with j' = j mod e, zeta_p fixed.
std::int64_t orbit_galois_unit(std::int64_t j, std::int64_t e, std::int64_t p, std::int64_t q) {
    const std::int64_t n = q - 1;
    std::int64_t lift = j;
    while (std::gcd(lift, n) != 1)
        lift += e;
    // J = 1 mod p, J = lift mod n.
    const std::int64_t inv = *inverse_mod(n % p, p);
    const std::int64_t t = mod_floor((1 - lift) * inv, p);
    return mod_floor(lift + n * t, p * n);
}

struct AbelianCell {
    std::size_t field;
    std::int64_t e;
};

CellOutcome abelian_reference(const ResidueField& k, std::int64_t e) {
    CellOutcome out;
    const std::int64_t q = k.order();
    const Sign formula = sign_pot_good_abelian(q, e);
    for (const auto& chi : characters_of_exact_order(k, e)) {
        const Sign oracle = oracle::oracle_abelian_pair(oracle::TameCharacterDatum(chi));
        const Sign classical = char_at_minus_one(chi);
        ++out.checked;
        if (oracle != formula || classical != formula)
            out.mismatches.push_back({"q=" + std::to_string(q) + " e=" + std::to_string(e) + " chi=" +
                                          std::to_string(chi.index()),
                                      "oracle " + sign_str(oracle) + ", chi(-1) " + sign_str(classical) +
                                          ", formula " + sign_str(formula)});
    }
    return out;
}

CellOutcome abelian_orbit(const ResidueField& k, std::int64_t e) {
    CellOutcome out;
    const std::int64_t q = k.order(), p = k.p();
    const std::int64_t step = (q - 1) / e;
    const Sign formula = sign_pot_good_abelian(q, e);

    const MultiplicativeCharacter base(k, step);
    const CyclotomicValue tau = gauss_sum(base);
    const CyclotomicValue tau_bar = gauss_sum(base.conjugate());
    const auto normalized = (tau * tau_bar).divide_exact(q);
    const std::optional<Sign> orbit_sign = normalized ? normalized->as_sign() : std::nullopt;

    for (const auto& chi : characters_of_exact_order(k, e)) {
        const std::string instance =
            "q=" + std::to_string(q) + " e=" + std::to_string(e) + " chi=" + std::to_string(chi.index());
        ++out.checked;
        const std::int64_t unit = orbit_galois_unit(chi.index() / step, e, p, q);
        const bool certified = gauss_sum(chi).same_representation(tau.galois(unit)) &&
                               gauss_sum(chi.conjugate()).same_representation(tau_bar.galois(unit));
        if (!certified) {
            out.mismatches.push_back({instance, "Gauss sum is not the Galois image of the orbit representative"});
            continue;
        }
        if (!orbit_sign) {
            out.mismatches.push_back({instance, "tau(chi) tau(conj chi) / q is not +-1"});
            continue;
        }
        const Sign classical = char_at_minus_one(chi);
        if (*orbit_sign != formula || classical != formula)
            out.mismatches.push_back({instance, "oracle " + sign_str(*orbit_sign) + ", chi(-1) " +
                                                    sign_str(classical) + ", formula " + sign_str(formula)});
    }
    return out;
}

std::vector<ResidueField> build_fields(const std::vector<PrimePower>& pps) {
    std::vector<ResidueField> fields;
    fields.reserve(pps.size());
    for (const auto& pp : pps)
        fields.emplace_back(pp);
    return fields;
}

} // namespace

std::vector<std::int64_t> odd_primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 3; n <= bound; n += 2)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

std::vector<std::int64_t> prime_powers_up_to(std::int64_t bound, bool odd_only) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 2; n <= bound; ++n)
        if ((!odd_only || n % 2 == 1) && prime_power_decomposition(n))
            out.push_back(n);
    return out;
}

SuiteResult verify_abelian(std::int64_t pmax, std::span<const int> degrees, Kernel kernel) {
    std::vector<PrimePower> pps;
    for (const std::int64_t p : odd_primes_up_to(pmax))
        for (const int f : degrees) {
            const PrimePower pp(p, f);
            require_bound("abelian suite q", pp.q(), Limits::abelian_qmax);
            pps.push_back(pp);
        }
    const std::vector<ResidueField> fields = build_fields(pps);
    std::vector<AbelianCell> cells;
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (const std::int64_t e : divisors(fields[i].order() - 1))
            if (e > 1)
                cells.push_back({i, e});

    return run_cells("abelian", cells.size(), kernel, [&](std::size_t i) {
        const auto& cell = cells[i];
        return kernel == Kernel::Reference ? abelian_reference(fields[cell.field], cell.e)
                                           : abelian_orbit(fields[cell.field], cell.e);
    });
}

SuiteResult verify_induced(std::int64_t qmax, Kernel kernel) {
    require_bound("induced suite q", qmax, Limits::induced_qmax);
    const auto qs = odd_primes_up_to(qmax);
    std::vector<PrimePower> pps;
    for (const auto q : qs)
        pps.emplace_back(q, 2);
    const std::vector<ResidueField> fields = build_fields(pps);
    std::vector<std::pair<std::size_t, std::int64_t>> cells;
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (const std::int64_t e : divisors(qs[i] + 1))
            if (e > 1)
                cells.emplace_back(i, e);

    return run_cells("induced", cells.size(), kernel, [&](std::size_t i) {
        const auto [fi, e] = cells[i];
        const ResidueField& k = fields[fi];
        const std::int64_t q = qs[fi];
        const Sign formula = sign_pot_good_induced(q, e, 2);
        CellOutcome out;
        for (std::int64_t j = 1; j <= q; ++j) {
            const MultiplicativeCharacter xi(k, (q - 1) * j);
            if (xi.order() != e)
                continue;
            const oracle::TameCharacterDatum datum(xi);
            const Sign w = oracle::oracle_induced(datum);
            const auto fq = oracle::froehlich_queyrut_check(datum);
            ++out.checked;
            const std::string instance =
                "q=" + std::to_string(q) + " e=" + std::to_string(e) + " xi=" + std::to_string(xi.index());
            if (w != formula)
                out.mismatches.push_back({instance, "oracle " + sign_str(w) + ", formula " + sign_str(formula)});
            if (fq.lhs != fq.rhs)
                out.mismatches.push_back({instance, "Froehlich-Queyrut lhs " + sign_str(fq.lhs) + " != rhs " +
                                                        sign_str(fq.rhs)});
        }
        return out;
    });
}

SuiteResult verify_froehlich_queyrut(std::int64_t qmax, Kernel kernel) {
    require_bound("fq suite q", qmax, Limits::induced_qmax);
    const auto qs = odd_primes_up_to(qmax);
    return run_cells("fq", qs.size(), kernel, [&](std::size_t i) {
        const std::int64_t q = qs[i];
        const ResidueField k(PrimePower(q, 2));
        CellOutcome out;
        for (std::int64_t j = 1; j <= q; ++j) {
            const MultiplicativeCharacter xi(k, (q - 1) * j);
            const auto fq = oracle::froehlich_queyrut_check(oracle::TameCharacterDatum(xi));
            ++out.checked;
            if (fq.lhs != fq.rhs)
                out.mismatches.push_back({"q=" + std::to_string(q) + " xi=" + std::to_string(xi.index()),
                                          "lhs " + sign_str(fq.lhs) + " != rhs " + sign_str(fq.rhs)});
        }
        return out;
    });
}

SuiteResult verify_sp2(std::int64_t qmax, Kernel kernel) {
    require_bound("sp2 suite q", qmax, Limits::sp2_qmax);
    const auto qs = prime_powers_up_to(qmax, true);
    return run_cells("sp2", qs.size(), kernel, [&](std::size_t i) {
        const std::int64_t q = qs[i];
        const ResidueField k(PrimePower::from_order(q));
        CellOutcome out;
        using oracle::EtaClass;
        const std::pair<EtaClass, ToricSubtype> table[] = {
            {EtaClass::Trivial, ToricSubtype::SplitMultiplicative},
            {EtaClass::UnramifiedQuadratic, ToricSubtype::NonSplitMultiplicative},
            {EtaClass::RamifiedQuadraticTame, ToricSubtype::Additive},
        };
        for (const auto& [eta, subtype] : table) {
            const Sign oracle_w = oracle::oracle_sp2(eta, k);
            const Sign formula = sign_toric(subtype, q, 1).w_iota;
            ++out.checked;
            if (oracle_w != formula)
                out.mismatches.push_back({"q=" + std::to_string(q) + " eta=" + std::string(oracle::to_string(eta)),
                                          "oracle " + sign_str(oracle_w) + ", formula " + sign_str(formula)});
        }
        return out;
    });
}

SuiteResult verify_gauss(std::int64_t qmax, Kernel kernel) {
    require_bound("gauss suite q", qmax, Limits::gauss_qmax);
    const auto qs = prime_powers_up_to(qmax, false);
    return run_cells("gauss", qs.size(), kernel, [&](std::size_t i) {
        const std::int64_t q = qs[i];
        const ResidueField k(PrimePower::from_order(q));
        const FieldElement minus_one = -k.one();
        CellOutcome out;
        for (std::int64_t idx = 1; idx < q - 1; ++idx) {
            const MultiplicativeCharacter chi(k, idx);
            const CyclotomicValue tau = gauss_sum(chi);
            const bool norm_ok = tau * tau.conjugate() == CyclotomicValue::integer(q);
            const bool pair_ok = tau * gauss_sum(chi.conjugate()) == q * char_eval(chi, minus_one);
            ++out.checked;
            if (!norm_ok || !pair_ok)
                out.mismatches.push_back({"q=" + std::to_string(q) + " chi=" + std::to_string(idx),
                                          std::string(norm_ok ? "" : "|tau|^2 != q; ") +
                                              (pair_ok ? "" : "tau(chi) tau(conj chi) != chi(-1) q")});
        }
        return out;
    });
}

SuiteResult verify_squareness(std::int64_t qmax, Kernel kernel) {
    require_bound("squareness suite q", qmax, Limits::sp2_qmax);
    const auto qs = prime_powers_up_to(qmax, true);
    return run_cells("squares", qs.size(), kernel, [&](std::size_t i) {
        const std::int64_t q = qs[i];
        const ResidueField k(PrimePower::from_order(q));
        CellOutcome out;
        out.checked = 1;
        const bool brute = oracle::minus_one_is_square(k);
        const bool closed = Sign::from_parity((q - 1) / 2).is_plus();
        if (brute != closed)
            out.mismatches.push_back({"q=" + std::to_string(q), "squareness search disagrees with (-1)^{(q-1)/2}"});
        return out;
    });
}

std::vector<PlaceData> admissible_places(std::int64_t g, std::int64_t q) {
    const PrimePower pp = PrimePower::from_order(q);
    std::vector<PlaceData> candidates;
    const std::string prefix = "q" + std::to_string(q) + ":";
    candidates.push_back({prefix + "good", pp, GoodReduction{}});
    for (const std::int64_t e : divisors(q - 1))
        for (std::int64_t r = 0; r <= 3; ++r)
            candidates.push_back({prefix + "abelian:e" + std::to_string(e) + ":r" + std::to_string(r), pp,
                                  PotentiallyGood{e, r, true, true, 2 * g}});
    for (const std::int64_t e : divisors(q + 1))
        for (std::int64_t r = 0; r <= 3; ++r)
            for (const std::int64_t a : {2 * g, 4 * g})
                candidates.push_back({prefix + "induced:e" + std::to_string(e) + ":r" + std::to_string(r) + ":a" +
                                          std::to_string(a),
                                      pp, PotentiallyGood{e, r, false, true, a}});
    candidates.push_back({prefix + "split", pp, PotentiallyToric{ToricSubtype::SplitMultiplicative}});
    candidates.push_back({prefix + "nonsplit", pp, PotentiallyToric{ToricSubtype::NonSplitMultiplicative}});
    candidates.push_back({prefix + "additive", pp, PotentiallyToric{ToricSubtype::Additive}});

    std::vector<PlaceData> out;
    for (auto& c : candidates)
        if (validate_place(c, g).passed())
            out.push_back(std::move(c));
    return out;
}

SuiteResult verify_even_dimension(std::int64_t qmax, std::span<const std::int64_t> dims, std::uint64_t seed,
                                  int random_jobs, Kernel kernel) {
    require_bound("evendim suite q", qmax, Limits::sp2_qmax);
    for (const auto g : dims)
        if (g < 2 || g % 2 != 0)
            throw Error(ErrorCode::InvalidArgument, "even-dimension suite needs even g >= 2, got " + std::to_string(g));
    const auto qs = prime_powers_up_to(qmax, true);
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (const auto g : dims)
        for (const auto q : qs)
            cells.emplace_back(g, q);

    std::vector<std::vector<PlaceData>> pools(cells.size());
    SuiteResult result = run_cells("evendim", cells.size(), kernel, [&](std::size_t i) {
        const auto [g, q] = cells[i];
        CellOutcome out;
        pools[i] = admissible_places(g, q);
        for (const auto& place : pools[i]) {
            const PlaceSign s = sign_place(place, g);
            ++out.checked;
            if (s.w != Sign::plus())
                out.mismatches.push_back({"g=" + std::to_string(g) + " " + place.label, "local w = -1"});
        }
        return out;
    });

    // Random global jobs, drawn serially so the stream depends only on the seed.
    std::mt19937_64 rng(seed);
    for (int job = 0; job < random_jobs && !dims.empty(); ++job) {
        const std::size_t gi = std::uniform_int_distribution<std::size_t>(0, dims.size() - 1)(rng);
        const std::int64_t g = dims[gi];
        RmVarietyData data;
        data.dimension = g;
        data.infinite_places = std::uniform_int_distribution<std::int64_t>(0, 4)(rng);
        const int nplaces = std::uniform_int_distribution<int>(0, 6)(rng);
        const std::size_t first = gi * qs.size();
        for (int k = 0; k < nplaces && !qs.empty(); ++k) {
            const auto& pool = pools[first + std::uniform_int_distribution<std::size_t>(0, qs.size() - 1)(rng)];
            if (pool.empty())
                continue;
            PlaceData place = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            place.label = "v" + std::to_string(k) + ":" + place.label;
            data.places.push_back(std::move(place));
        }
        ++result.checked;
        try {
            const RootNumberReport report = sign_global(data);
            if (report.global_w != Sign::plus())
                result.mismatches.push_back({"random job " + std::to_string(job), "global w = -1"});
        } catch (const std::exception& ex) {
            result.mismatches.push_back({"random job " + std::to_string(job), std::string("exception: ") + ex.what()});
        }
    }
    return result;
}

std::string_view to_string(SweepCase c) {
    switch (c) {
    case SweepCase::Good: return "good";
    case SweepCase::Abelian: return "abelian";
    case SweepCase::Induced: return "induced";
    case SweepCase::Split: return "split";
    case SweepCase::NonSplit: return "nonsplit";
    case SweepCase::Additive: return "additive";
    }
    return "unknown";
}

std::optional<SweepCase> parse_sweep_case(std::string_view s) {
    for (const SweepCase c : {SweepCase::Good, SweepCase::Abelian, SweepCase::Induced, SweepCase::Split,
                              SweepCase::NonSplit, SweepCase::Additive})
        if (s == to_string(c))
            return c;
    return std::nullopt;
}

std::vector<SweepRow> sweep_signs(const SweepGrid& grid, Kernel kernel) {
    if (grid.g < 1)
        throw Error(ErrorCode::InvalidArgument, "g must be >= 1");
    for (const auto q : grid.qs) {
        if (!prime_power_decomposition(q))
            throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
        require_bound("sweep q", q, Limits::sweep_qmax);
    }
    for (const auto r : grid.rs)
        if (r < 0)
            throw Error(ErrorCode::InvalidArgument, "wild exponents must be >= 0");

    std::vector<std::vector<SweepRow>> per_q(grid.qs.size());
    const SuiteResult status = run_cells("sweep", grid.qs.size(), kernel, [&](std::size_t i) {
        const std::int64_t q = grid.qs[i];
        const PrimePower pp = PrimePower::from_order(q);
        auto tame_orders = [&](std::int64_t n) {
            if (grid.es)
                return *grid.es;
            std::vector<std::int64_t> ds = divisors(n);
            ds.erase(ds.begin());
            return ds;
        };
        auto emit = [&](SweepCase c, ReductionClass red, std::optional<std::int64_t> e, std::optional<std::int64_t> r) {
            const PlaceData place{"sweep", pp, std::move(red)};
            if (!validate_place(place, grid.g, grid.options).passed())
                return;
            const PlaceSign s = sign_place(place, grid.g, grid.options);
            per_q[i].push_back({q, e, r, c, s.w_iota, s.w});
        };
        for (const SweepCase c : grid.cases) {
            switch (c) {
            case SweepCase::Good: emit(c, GoodReduction{}, std::nullopt, std::nullopt); break;
            case SweepCase::Abelian:
                for (const auto e : tame_orders(q - 1))
                    for (const auto r : grid.rs)
                        if (e >= 1)
                            emit(c, PotentiallyGood{e, r, true, true, 2 * grid.g}, e, r);
                break;
            case SweepCase::Induced:
                for (const auto e : tame_orders(q + 1))
                    for (const auto r : grid.rs)
                        if (e >= 1)
                            emit(c, PotentiallyGood{e, r, false, true, grid.a_iota * grid.g}, e, r);
                break;
            case SweepCase::Split:
                emit(c, PotentiallyToric{ToricSubtype::SplitMultiplicative}, std::nullopt, std::nullopt);
                break;
            case SweepCase::NonSplit:
                emit(c, PotentiallyToric{ToricSubtype::NonSplitMultiplicative}, std::nullopt, std::nullopt);
                break;
            case SweepCase::Additive:
                emit(c, PotentiallyToric{ToricSubtype::Additive}, std::nullopt, std::nullopt);
                break;
            }
        }
        return CellOutcome{};
    });
    if (!status.passed())
        throw Error(ErrorCode::InternalError, status.mismatches.front().detail);

    std::vector<SweepRow> rows;
    for (auto& v : per_q)
        rows.insert(rows.end(), v.begin(), v.end());
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tuple(a.q, static_cast<int>(a.sweep_case), a.e.value_or(0), a.r.value_or(0)) <
               std::tuple(b.q, static_cast<int>(b.sweep_case), b.e.value_or(0), b.r.value_or(0));
    });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

} // namespace rootnum::verify
