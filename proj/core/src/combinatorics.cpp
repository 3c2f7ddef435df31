#include "muqm/combinatorics.hpp"

#include <stdexcept>

namespace muqm {

namespace {

// Per-mu table of gamma_mu values; identity sweeps reuse it across n and k.
class GammaTable {
public:
    explicit GammaTable(const RationalMu& mu) : two_mu_(2 * mu.value()) {
        values_.push_back(1);
    }

    const Rational& operator()(int n) {
        while (static_cast<int>(values_.size()) <= n) {
            int k = static_cast<int>(values_.size());
            Rational factor = (k & 1) ? Rational(k) + two_mu_ : Rational(k);
            values_.push_back(values_.back() * factor);
        }
        return values_[static_cast<size_t>(n)];
    }

    Rational binom(int n, int k) {
        if (k < 0 || k > n) return 0;
        return (*this)(n) / ((*this)(n - k) * (*this)(k));
    }

    // p_{n,mu}(x, y) against precomputed power tables.
    Rational p(int n, const std::vector<Rational>& xp, const std::vector<Rational>& yp) {
        Rational acc = 0;
        for (int k = 0; k <= n; ++k) acc += binom(n, k) * xp[k] * yp[n - k];
        return acc;
    }

private:
    Rational two_mu_;
    std::vector<Rational> values_;
};

std::vector<Rational> powers(const Rational& x, int up_to) {
    std::vector<Rational> p(static_cast<size_t>(up_to) + 1);
    p[0] = 1;
    for (int i = 1; i <= up_to; ++i) p[i] = p[i - 1] * x;
    return p;
}

int theta_abs(int k) { return (k % 2 != 0) ? 1 : 0; }

struct CheckContext {
    IdentityReport* report;
    const Rational* mu;

    // Returns false (and records the counterexample) on the first mismatch.
    bool expect(int n, std::optional<int> k, const Rational& lhs, const Rational& rhs) {
        ++report->cases_checked;
        if (lhs == rhs) return true;
        report->passed = false;
        report->counterexample = Counterexample{n, k, *mu, lhs, rhs};
        return false;
    }
};

Rational closed_even_ones(const Rational& mu, int n) {
    // 4^n prod_{k=1..n} (k+mu)/(k+2mu)
    Rational acc = 1;
    for (int k = 1; k <= n; ++k)
        acc *= Rational(4) * (Rational(k) + mu) / (Rational(k) + 2 * mu);
    return acc;
}

Rational closed_alternating(const Rational& mu, int n) {
    if (n == 0) return 1;  // covers the mu = 0, n = 0 convention mu/(n+mu) = 1
    return mu / (Rational(n) + mu) * closed_even_ones(mu, n);
}

Rational closed_4_8(const Rational& mu, int n) {
    Rational num = mu;
    for (int k = n + 1; k <= 2 * n - 1; ++k) num *= mu + k;
    Rational den = 1;
    for (int k = 1; k <= n; ++k) den *= 2 * mu + 2 * k - 1;  // (mu+k-1/2) scaled by 2
    // the scaling by 2 per denominator factor joins the 2^{2n} prefactor:
    // mu 2^{2n} / prod(mu+k-1/2) = mu 2^{2n} 2^n / prod(2mu+2k-1), n factors
    Rational pow2 = 1;
    for (int i = 0; i < 3 * n; ++i) pow2 *= 2;
    return num * pow2 / den;
}

Rational closed_4_9(const Rational& mu, int n) {
    Rational num = mu;
    for (int k = n + 1; k <= 2 * n - 1; ++k) num *= mu + k - 1;
    Rational den = 1;
    for (int k = 1; k <= n; ++k) den *= 2 * mu + 2 * k - 1;
    Rational pow2 = 1;
    for (int i = 0; i < 3 * n - 1; ++i) pow2 *= 2;  // 2^{2n-1} * 2^n
    return num * pow2 / den;
}

}  // namespace

RationalMu::RationalMu(Rational value) : value_(std::move(value)) {
    if (!(2 * value_ > -1))
        throw std::domain_error("mu must exceed -1/2");
}

const std::array<IdentityId, kIdentityCount>& all_identities() {
    static const std::array<IdentityId, kIdentityCount> ids = {
        IdentityId::PASCAL_EVEN,    IdentityId::PASCAL_ODD,
        IdentityId::PRODUCT_EVEN,   IdentityId::PRODUCT_ODD,
        IdentityId::ODD_VANISH,     IdentityId::SUM_FORM_4_6,
        IdentityId::CLOSED_2_6,     IdentityId::CLOSED_4_8,
        IdentityId::CLOSED_4_9,     IdentityId::SYMMETRY,
        IdentityId::EVEN_ONES_2_11, IdentityId::RATIO_2_8,
        IdentityId::DOUBLING_2_9,   IdentityId::RATIO_2_10,
    };
    return ids;
}

std::string_view to_string(IdentityId id) {
    switch (id) {
        case IdentityId::PASCAL_EVEN: return "PASCAL_EVEN";
        case IdentityId::PASCAL_ODD: return "PASCAL_ODD";
        case IdentityId::PRODUCT_EVEN: return "PRODUCT_EVEN";
        case IdentityId::PRODUCT_ODD: return "PRODUCT_ODD";
        case IdentityId::ODD_VANISH: return "ODD_VANISH";
        case IdentityId::SUM_FORM_4_6: return "SUM_FORM_4_6";
        case IdentityId::CLOSED_2_6: return "CLOSED_2_6";
        case IdentityId::CLOSED_4_8: return "CLOSED_4_8";
        case IdentityId::CLOSED_4_9: return "CLOSED_4_9";
        case IdentityId::SYMMETRY: return "SYMMETRY";
        case IdentityId::EVEN_ONES_2_11: return "EVEN_ONES_2_11";
        case IdentityId::RATIO_2_8: return "RATIO_2_8";
        case IdentityId::DOUBLING_2_9: return "DOUBLING_2_9";
        case IdentityId::RATIO_2_10: return "RATIO_2_10";
    }
    return "UNKNOWN";
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
    for (IdentityId id : all_identities())
        if (to_string(id) == name) return id;
    return std::nullopt;
}

int identity_n_min(IdentityId id) {
    switch (id) {
        case IdentityId::SUM_FORM_4_6:
        case IdentityId::CLOSED_4_8:
        case IdentityId::CLOSED_4_9:
        case IdentityId::RATIO_2_8:
        case IdentityId::RATIO_2_10:
            return 1;
        default:
            return 0;
    }
}

Rational gamma_mu_exact(const RationalMu& mu, int n) {
    if (n < 0) throw std::domain_error("gamma_mu_exact: n must be non-negative");
    GammaTable g(mu);
    return g(n);
}

Rational binom_mu(const RationalMu& mu, int n, int k) {
    if (n < 0) throw std::domain_error("binom_mu: n must be non-negative");
    if (k < 0 || k > n) return 0;
    GammaTable g(mu);
    return g.binom(n, k);
}

Rational p_poly(const RationalMu& mu, int n, const Rational& x, const Rational& y) {
    if (n < 0) throw std::domain_error("p_poly: n must be non-negative");
    GammaTable g(mu);
    return g.p(n, powers(x, n), powers(y, n));
}

Rational p_alternating_closed(const RationalMu& mu, int n) {
    if (n < 0) throw std::domain_error("p_alternating_closed: n must be non-negative");
    return closed_alternating(mu.value(), n);
}

std::optional<std::pair<Rational, Rational>>
identity_sides(IdentityId id, const RationalMu& mu, int n) {
    if (n < identity_n_min(id)) throw std::domain_error("identity_sides: n below family range");
    const Rational& m = mu.value();
    GammaTable g(mu);
    static const Rational one = 1, minus_one = -1;
    auto pm = [&](int deg) { return g.p(deg, powers(one, deg), powers(minus_one, deg)); };
    auto pp = [&](int deg) { return g.p(deg, powers(one, deg), powers(one, deg)); };

    switch (id) {
        case IdentityId::ODD_VANISH:
            return std::pair{pm(2 * n + 1), Rational(0)};
        case IdentityId::SUM_FORM_4_6: {
            Rational s = 0;
            for (int k = 0; k < n; ++k) s += g.binom(2 * n, 2 * k + 1);
            return std::pair{pm(2 * n), 2 * m / n * s};
        }
        case IdentityId::CLOSED_2_6:
            return std::pair{pm(2 * n), closed_alternating(m, n)};
        case IdentityId::CLOSED_4_8:
            return std::pair{pm(4 * n), closed_4_8(m, n)};
        case IdentityId::CLOSED_4_9:
            return std::pair{pm(4 * n - 2), closed_4_9(m, n)};
        case IdentityId::EVEN_ONES_2_11:
            return std::pair{pp(2 * n), closed_even_ones(m, n)};
        case IdentityId::RATIO_2_8:
            return std::pair{pm(2 * n), m / (Rational(n) + m) * pp(2 * n)};
        case IdentityId::DOUBLING_2_9:
            return std::pair{pp(2 * n + 1), 2 * pp(2 * n)};
        case IdentityId::RATIO_2_10:
            return std::pair{pp(2 * n),
                             2 * (Rational(n) + m) / (Rational(n) + 2 * m) * pp(2 * n - 1)};
        default:
            return std::nullopt;  // k- or (x,y)-indexed family
    }
}

IdentityReport verify_identity(IdentityId id, int n_max,
                               const std::vector<RationalMu>& mu_set,
                               const XYGrid& xy_grid) {
    if (n_max < 1) throw std::domain_error("verify_identity: n_max must be >= 1");
    IdentityReport report;
    report.id = id;
    report.n_min = identity_n_min(id);
    report.n_max = n_max;
    report.mu_set = mu_set;
    report.passed = true;

    const bool uses_xy = id == IdentityId::PRODUCT_EVEN || id == IdentityId::PRODUCT_ODD;

    for (const RationalMu& mu : mu_set) {
        const Rational& m = mu.value();
        CheckContext ctx{&report, &m};
        GammaTable g(mu);

        if (uses_xy) {
            for (const auto& [x, y] : xy_grid) {
                auto xp = powers(x, 2 * n_max + 2);
                auto yp = powers(y, 2 * n_max + 2);
                const Rational p1 = g.p(1, xp, yp);
                for (int n = 0; n <= n_max; ++n) {
                    if (id == IdentityId::PRODUCT_EVEN) {
                        if (!ctx.expect(n, std::nullopt, p1 * g.p(2 * n, xp, yp),
                                        g.p(2 * n + 1, xp, yp)))
                            return report;
                    } else {
                        Rational corr = 0;
                        for (int k = 0; k <= n; ++k)
                            corr += g.binom(2 * n + 2, 2 * k + 1) * xp[2 * k + 1] *
                                    yp[2 * n + 1 - 2 * k];
                        Rational rhs = g.p(2 * n + 2, xp, yp) + 2 * m / (n + 1) * corr;
                        if (!ctx.expect(n, std::nullopt, p1 * g.p(2 * n + 1, xp, yp), rhs))
                            return report;
                    }
                }
            }
            continue;
        }

        switch (id) {
            case IdentityId::PASCAL_EVEN:
                for (int n = 0; n <= n_max; ++n)
                    for (int k = -2; k <= 2 * n + 3; ++k)
                        if (!ctx.expect(n, k, g.binom(2 * n, k - 1) + g.binom(2 * n, k),
                                        g.binom(2 * n + 1, k)))
                            return report;
                break;
            case IdentityId::PASCAL_ODD:
                for (int n = 0; n <= n_max; ++n)
                    for (int k = -2; k <= 2 * n + 4; ++k) {
                        Rational factor = 1 + 2 * m * theta_abs(k) / Rational(n + 1);
                        if (!ctx.expect(n, k,
                                        g.binom(2 * n + 1, k - 1) + g.binom(2 * n + 1, k),
                                        factor * g.binom(2 * n + 2, k)))
                            return report;
                    }
                break;
            case IdentityId::SYMMETRY:
                for (int n = 0; n <= n_max; ++n)
                    for (int k = -2; k <= n + 2; ++k)
                        if (!ctx.expect(n, k, g.binom(n, k), g.binom(n, n - k)))
                            return report;
                break;
            default:
                for (int n = identity_n_min(id); n <= n_max; ++n) {
                    auto sides = identity_sides(id, mu, n);
                    if (!ctx.expect(n, std::nullopt, sides->first, sides->second))
                        return report;
                }
                break;
        }
    }
    return report;
}

XYGrid default_xy_grid() {
    auto r = [](long num, long den = 1) { return Rational(num, den); };
    return {
        {r(1), r(-1)},     {r(1), r(1)},    {r(0), r(1)},
        {r(-3, 2), r(2, 7)}, {r(2), r(3)},  {r(-1), r(-1)},
        {r(1, 2), r(-1, 3)}, {r(5), r(-2, 3)}, {r(0), r(0)},
    };
}

std::vector<RationalMu> default_mu_grid() {
    auto r = [](long num, long den = 1) { return RationalMu(Rational(num, den)); };
    return {
        r(-49, 100), r(-2, 5), r(-1, 3), r(-1, 4), r(-1, 6), r(-1, 10),
        r(0),        r(1, 10), r(1, 4),  r(1, 3),  r(1, 2),  r(2, 3),
        r(1),        r(3, 2),  r(2),     r(5, 2),  r(3),     r(7, 2),
        r(4),        r(10),
    };
}

}  // namespace muqm
