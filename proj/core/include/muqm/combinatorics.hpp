#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "muqm/rational.hpp"

// Exact verification of the deformed binomial identities. Everything here is
// rational arithmetic: a check passes only on exact equality, never within a
// tolerance. The deformed binomial is
//
//   binom_mu(n, k) = gamma_mu(n) / (gamma_mu(n-k) * gamma_mu(k)),
//
// zero outside 0 <= k <= n, and p_{n,mu}(x, y) = sum_k binom_mu(n,k) x^k
// y^(n-k) is the associated two-variable polynomial, which collapses to
// (x + y)^n at mu = 0.

namespace muqm {

/// Registered identity families. The tokens double as the wire names used by
/// the CLI and the JSON reports.
enum class IdentityId {
    PASCAL_EVEN,     // binom(2n,k-1) + binom(2n,k) = binom(2n+1,k)
    PASCAL_ODD,      // binom(2n+1,k-1) + binom(2n+1,k) = (1 + 2*mu*theta(k)/(n+1)) * binom(2n+2,k)
    PRODUCT_EVEN,    // p_1 * p_2n = p_{2n+1}
    PRODUCT_ODD,     // p_1 * p_{2n+1} = p_{2n+2} + (2mu/(n+1)) * sum_k binom(2n+2,2k+1) x^{2k+1} y^{2n+1-2k}
    ODD_VANISH,      // p_{2n+1}(1,-1) = 0
    SUM_FORM_4_6,    // p_{2n}(1,-1) = (2mu/n) * sum_{k<n} binom(2n,2k+1), n >= 1
    CLOSED_2_6,      // p_{2n}(1,-1) = (4^n mu/(n+mu)) * prod_{k=1..n} (k+mu)/(k+2mu)
    CLOSED_4_8,      // p_{4n}(1,-1) = mu 4^n prod_{k=n+1..2n-1}(mu+k) / prod_{k=1..n}(mu+k-1/2), n >= 1
    CLOSED_4_9,      // p_{4n-2}(1,-1) = mu 2^{2n-1} prod_{k=n+1..2n-1}(mu+k-1) / prod_{k=1..n}(mu+k-1/2), n >= 1
    SYMMETRY,        // binom(n,k) = binom(n,n-k)
    EVEN_ONES_2_11,  // p_{2n}(1,1) = 4^n prod_{k=1..n} (k+mu)/(k+2mu)
    RATIO_2_8,       // p_{2n}(1,-1) = (mu/(n+mu)) * p_{2n}(1,1)
    DOUBLING_2_9,    // p_{2n+1}(1,1) = 2 * p_{2n}(1,1)
    RATIO_2_10,      // p_{2n}(1,1) = (2(n+mu)/(n+2mu)) * p_{2n-1}(1,1), n >= 1
};

inline constexpr int kIdentityCount = 14;

const std::array<IdentityId, kIdentityCount>& all_identities();
std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

/// Exact deformed factorial.
Rational gamma_mu_exact(const RationalMu& mu, int n);

/// Deformed binomial coefficient; 0 whenever k < 0 or k > n.
Rational binom_mu(const RationalMu& mu, int n, int k);

/// p_{n,mu}(x, y) = sum_{k=0..n} binom_mu(n,k) x^k y^(n-k).
Rational p_poly(const RationalMu& mu, int n, const Rational& x, const Rational& y);

/// Closed form for the alternating evaluation p_{2n,mu}(1,-1):
/// (4^n mu/(n+mu)) * prod_{k=1..n} (k+mu)/(k+2mu), where the n = 0 value is 1
/// (for mu = 0 this is the convention mu/(n+mu) = 1, otherwise it is the
/// empty product).
Rational p_alternating_closed(const RationalMu& mu, int n);

struct Counterexample {
    int n = 0;
    std::optional<int> k;  // set only for the k-indexed families
    Rational mu;
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    IdentityId id;
    int n_min = 0;
    int n_max = 0;
    std::vector<RationalMu> mu_set;
    bool passed = false;
    std::optional<Counterexample> counterexample;
    long long cases_checked = 0;
};

using XYGrid = std::vector<std::pair<Rational, Rational>>;

/// Nine (x, y) pairs exercised by the product identities, including
/// (1,-1), (1,1), (0,1) and (-3/2, 2/7).
XYGrid default_xy_grid();

/// Twenty rational mu values, six of them in (-1/2, 0).
std::vector<RationalMu> default_mu_grid();

/// Sweeps one identity family over n = n_min(id)..n_max, every mu in mu_set
/// and (for the product families) every (x, y) in xy_grid. Stops at the first
/// exact mismatch and records it; report.passed is true iff no counterexample
/// exists.
IdentityReport verify_identity(IdentityId id, int n_max,
                               const std::vector<RationalMu>& mu_set,
                               const XYGrid& xy_grid = default_xy_grid());

/// Both sides of a scalar (per-n) identity at a single (mu, n); nullopt for
/// the k-indexed and (x,y)-indexed families. Useful for tabulating values.
std::optional<std::pair<Rational, Rational>>
identity_sides(IdentityId id, const RationalMu& mu, int n);

/// First n covered by an identity family (0 or 1).
int identity_n_min(IdentityId id);

}  // namespace muqm
