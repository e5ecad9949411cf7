#pragma once

#include "cmlv/lvalue.hpp"
#include "cmlv/polygon.hpp"
#include "cmlv/recognize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cmlv {

// The K-rational ratio of a completed L-value against its period:
//   Gauss  L * D_T^(1/4) / omega
//   Eisen  L * 2 sqrt(3) * D_T^(1/3) / omega
// recognized by lattice reduction and, when confirm_prec > 0, re-verified
// against a recomputation at that precision. The branch of the root is the
// principal one; branches differ by a unit, so valuations are unaffected.
RecognizedNumber lvalue_period_ratio(const LValueResult& result, int confirm_prec = 0);

// v(L/omega) at the ramified prime, exact through the recognized ratio:
// v2(D_T^(1/4)) = 0, so the Gauss ratio carries the whole valuation;
// the Eisen ratio overshoots by v3(2 sqrt 3) = 1/2, subtracted back.
// Requires a completed L at the full subset. Recomputes the value at twice
// the stored precision to confirm the recognition.
Valuation v_of_lvalue(const LValueResult& result);

// Integer polynomial whose roots are exactly the conjugates of S*(D) (and
// their complex conjugates). The subset identity writes S* as a K-linear
// combination of radical monomials pi_k^(-1/4) (resp. pi_k^(-1/3) with a
// global sqrt 3), with each coefficient pinned exactly by a recognized
// L-ratio; the Galois orbit is expanded in the Kummer algebra and the
// K-polynomial is multiplied by its coefficient conjugate. sstar_out
// receives the numeric S* used for the root-membership check.
IntPoly sstar_annihilator(const FactoredD& D, int prec, BigComplex* sstar_out = nullptr);

// v2(S*(D)) over Gauss, v3(S*(D)) over Eisen, read from the annihilator's
// Newton polygon under the pure-slope gate. Memoized on (D, prec).
Valuation sstar_valuation(const FactoredD& D, int prec = 0);

// v2(wp(c omega/D) - i) over Z[i], resp. v3(wp(c omega/D) - 1) over Z[w],
// one entry per coprime class c mod D. The unit-orbit invariant (wp^2 + 1,
// resp. wp^3 - 1) yields a K-rational polynomial over the orbit transversal;
// its Newton polygon gives the invariant's valuation orbit by orbit, and the
// factor split forces the division value's own valuation whenever it sits
// below the ramified midpoint (throws when the polygon cannot force it).
std::vector<Frac> division_point_valuations(const QuadInt& D, int prec = 0);

struct DeltaRow {
    std::uint32_t mask = 0;
    int t = 0;
    QuadInt D_T;
    Valuation sstar_val;
    int eps = -1;           // 0/1; -1 when the open valuation straddles (t-1)/2
    int delta = -1;         // 0/1; -1 when some contributing term is undecided
    int bracket_weight = 0; // prod over primes outside T of [D_T/pi_k]_2
};

enum class DeltaVerdict { Decided, Undecided };

struct DeltaCertificate {
    FactoredD D;
    std::vector<DeltaRow> rows; // nonempty subsets in ascending mask order
    int delta_n = -1;
    DeltaVerdict verdict = DeltaVerdict::Undecided;
};

// eps_t(D_T) = [v2(S*(D_T)) = (t-1)/2] for every nonempty subset, then
// delta by the recursion
//   delta_1(pi)  = s1(pi) + eps_1(pi)
//   delta_t(D_T) = eps_t(D_T) + sum over proper nonempty U of T of
//                  (prod_{k in T minus U} [D_U/pi_k]_2) * delta_|U|(D_U)
// over F_2. An open S*-valuation with lower bound above (t-1)/2 still
// decides eps = 0; one that straddles the test leaves the verdict Undecided.
// Gauss square-free, every prime 1 mod 4.
DeltaCertificate epsilon_delta(const FactoredD& D, int prec = 0);

enum class CheckStatus { Holds, Violated, Undecided };

struct ClaimCheck {
    std::string claim;     // short slug naming the checked statement
    std::string statement; // the inequality with n filled in
    Valuation computed;
    Frac bound;
    CheckStatus status = CheckStatus::Undecided;
    // Gauss square-free only: [v = bound] must equal [delta_n = 1]
    std::optional<bool> equality_consistent;
};

struct VerificationReport {
    FactoredD D;
    std::vector<ClaimCheck> checks;
    std::optional<DeltaCertificate> certificate;
    bool all_hold = false; // no check Violated
};

// Every valuation bound that applies to D's family:
//   Gauss square-free: v2(L/omega) >= (n-1)/2, equality iff delta_n = 1,
//                      and v2(S*(D)) >= (n-1)/2
//   Gauss squared:     v2(L/omega) >= n/2 - 1
//   Eisen:             v3(L/omega) >= n/2 - 1 and v3(S*(D)) >= (n-1)/2
VerificationReport verify_theorems(const FactoredD& D, int prec = 0);

struct BsdReport {
    std::int64_t D = 0;
    FactoredD gaussian;
    DeltaCertificate cert;
    bool rank_zero_predicted = false;
    std::string statement;
};

// Rank-zero prediction for the quartic twist by a rational D = 1 (mod 4),
// square-free, with no prime factor 5 (mod 8): delta_n is evaluated over the
// primary Gaussian factorization of D; delta_n = 1 predicts L(1) != 0 and
// rank 0 (conditional on the analytic input).
BsdReport bsd_report(std::int64_t D, int prec = 0);

} // namespace cmlv
