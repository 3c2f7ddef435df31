#include "muqm/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

#include "muqm/bessel.hpp"
#include "muqm/detail/gauss_legendre.hpp"

namespace muqm {

namespace {

// Hard cap on leaf panels; a run that needs more than this is reported as
// non-converged rather than allowed to spin.
constexpr int kPanelBudget = 20000;

// The series/Bessel agreement guard only applies inside the accuracy domain
// of both routes.
constexpr double kGuardArgLimit = 50.0;

void validate(const QuadratureSpec& spec) {
    if (!(spec.rel_tol > 0.0) || !(spec.rel_tol < 1.0))
        throw std::invalid_argument("QuadratureSpec.rel_tol must lie in (0, 1)");
    if (!(spec.abs_tol >= 0.0))
        throw std::invalid_argument("QuadratureSpec.abs_tol must be non-negative");
    if (spec.max_depth < 1)
        throw std::invalid_argument("QuadratureSpec.max_depth must be at least 1");
    if (spec.nodes_per_panel < 2)
        throw std::invalid_argument("QuadratureSpec.nodes_per_panel must be at least 2");
}

// One momentum-side segment, either in plain k coordinates or, when the
// weight |k|^(2mu) is singular at an endpoint touching 0 (mu < 0), in the
// substituted coordinate u = sign(k) |k|^(2mu+1) / (2mu+1), under which the
// weight becomes constant.
struct BSeg {
    double lo, hi;
    bool u_space;
};

struct Integrand {
    MuParam mu;
    double c_norm;     // 1 / (2^(mu+1/2) Gamma(mu+1/2))
    double inv_power;  // 1 / (2mu+1)

    double k_of_u(double u) const {
        if (u == 0.0) return 0.0;
        double m = mu.value();
        return std::copysign(std::pow((2.0 * m + 1.0) * std::fabs(u), inv_power), u);
    }
};

struct PanelGeom {
    double xlo, xhi;
    BSeg b;
};

double panel_value(const Integrand& f, const detail::GaussRule& rule, const PanelGeom& g) {
    const int n = static_cast<int>(rule.nodes.size());
    const double m = f.mu.value();
    const double xm = 0.5 * (g.xlo + g.xhi), xh = 0.5 * (g.xhi - g.xlo);
    const double vm = 0.5 * (g.b.lo + g.b.hi), vh = 0.5 * (g.b.hi - g.b.lo);
    std::vector<double> xs(n), wx(n), ks(n), wk(n);
    for (int p = 0; p < n; ++p) {
        double x = xm + xh * rule.nodes[p];
        xs[p] = x;
        wx[p] = rule.weights[p] * xh * f.c_norm * std::pow(std::fabs(x), 2.0 * m);
    }
    for (int q = 0; q < n; ++q) {
        double v = vm + vh * rule.nodes[q];
        if (g.b.u_space) {
            ks[q] = f.k_of_u(v);
            wk[q] = rule.weights[q] * vh * f.c_norm;
        } else {
            ks[q] = v;
            wk[q] = rule.weights[q] * vh * f.c_norm * std::pow(std::fabs(v), 2.0 * m);
        }
    }
    double acc = 0.0;
    for (int p = 0; p < n; ++p) {
        double row = 0.0;
        for (int q = 0; q < n; ++q) row += wk[q] * phi_bessel(f.mu, xs[p] * ks[q]);
        acc += wx[p] * row;
    }
    return acc;
}

struct Panel {
    PanelGeom g;
    int depth = 0;
    long id = 0;
    double direct = 0.0;   // plain tensor value on the panel
    double refined = 0.0;  // two-child value along the chosen axis
    double err = 0.0;      // worst child-refinement discrepancy over both axes
    int axis = 0;          // 0: bisect x, 1: bisect the momentum segment
    double kid_direct[2] = {0.0, 0.0};
    bool alive = true;
};

std::pair<PanelGeom, PanelGeom> children_of(const PanelGeom& g, int axis) {
    if (axis == 0) {
        double xm = 0.5 * (g.xlo + g.xhi);
        return {PanelGeom{g.xlo, xm, g.b}, PanelGeom{xm, g.xhi, g.b}};
    }
    double vm = 0.5 * (g.b.lo + g.b.hi);
    return {PanelGeom{g.xlo, g.xhi, {g.b.lo, vm, g.b.u_space}},
            PanelGeom{g.xlo, g.xhi, {vm, g.b.hi, g.b.u_space}}};
}

// Evaluates both trial refinements; the axis whose bisection moves the value
// most is the worse-converged one and becomes the split axis.
Panel make_panel(const Integrand& f, const detail::GaussRule& rule, const PanelGeom& g,
                 int depth, long id, double direct) {
    Panel p;
    p.g = g;
    p.depth = depth;
    p.id = id;
    p.direct = direct;
    auto [xl, xr] = children_of(g, 0);
    auto [bl, br] = children_of(g, 1);
    double vx0 = panel_value(f, rule, xl), vx1 = panel_value(f, rule, xr);
    double vb0 = panel_value(f, rule, bl), vb1 = panel_value(f, rule, br);
    double err_x = std::fabs(vx0 + vx1 - direct);
    double err_b = std::fabs(vb0 + vb1 - direct);
    if (err_x >= err_b) {
        p.axis = 0;
        p.refined = vx0 + vx1;
        p.kid_direct[0] = vx0;
        p.kid_direct[1] = vx1;
    } else {
        p.axis = 1;
        p.refined = vb0 + vb1;
        p.kid_direct[0] = vb0;
        p.kid_direct[1] = vb1;
    }
    p.err = std::max(err_x, err_b);
    return p;
}

double tree_sum(const std::vector<double>& v, size_t lo, size_t hi) {
    if (lo == hi) return 0.0;
    if (hi - lo == 1) return v[lo];
    size_t mid = lo + (hi - lo) / 2;
    return tree_sum(v, lo, mid) + tree_sum(v, mid, hi);
}

// Ten reproducible sample points of phi through both routes; disagreement
// means the fast path cannot be trusted for this input.
void spot_check_phi(MuParam mu, const IntervalSet& a, const IntervalSet& b) {
    if (a.empty() || b.empty()) return;
    std::mt19937_64 rng(0x51e55eedULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto pick = [&](const IntervalSet& s) {
        const auto& iv = s.intervals();
        const auto& seg = iv[rng() % iv.size()];
        return seg.lo + (seg.hi - seg.lo) * unit(rng);
    };
    int accepted = 0;
    for (int attempt = 0; attempt < 200 && accepted < 10; ++attempt) {
        double t = pick(a) * pick(b);
        if (std::fabs(t) > kGuardArgLimit) continue;
        double ps = phi(mu, t);
        double pb = phi_bessel(mu, t);
        if (std::fabs(pb - ps) > 1e-10 * std::fabs(ps))
            throw std::runtime_error(
                "phi cross-check failed: series and Bessel routes disagree");
        ++accepted;
    }
}

Verdict decide(double mu, double trace, double product, double err, bool converged) {
    if (!converged) return Verdict::INDETERMINATE;
    double diff = trace - product;
    if (diff > 10.0 * err) return Verdict::GREATER;
    if (-diff > 10.0 * err) return Verdict::LESS;
    return mu == 0.0 ? Verdict::EQUAL_WITHIN_TOL : Verdict::INDETERMINATE;
}

}  // namespace

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::GREATER: return "GREATER";
        case Verdict::EQUAL_WITHIN_TOL: return "EQUAL_WITHIN_TOL";
        case Verdict::LESS: return "LESS";
        case Verdict::INDETERMINATE: return "INDETERMINATE";
    }
    return "UNKNOWN";
}

double measure_mu(MuParam mu, const IntervalSet& set) {
    const double m = mu.value();
    const double norm =
        1.0 / ((2.0 * m + 1.0) * std::pow(2.0, m + 0.5) * gamma_fn(m + 0.5));
    auto antiderivative = [&](double x) {
        if (x == 0.0) return 0.0;
        return std::copysign(std::pow(std::fabs(x), 2.0 * m + 1.0) * norm, x);
    };
    double acc = 0.0;
    for (const auto& iv : set.intervals())
        acc += antiderivative(iv.hi) - antiderivative(iv.lo);
    return acc;
}

TraceReport trace_integral(MuParam mu, const IntervalSet& set_a,
                           const IntervalSet& set_b, const QuadratureSpec& spec) {
    validate(spec);
    if (!set_a.excludes_zero())
        throw std::domain_error(
            "set A must exclude 0: the trace formula requires 0 outside the closure of A");

    TraceReport report{mu, set_a, set_b};
    report.measure_a = measure_mu(mu, set_a);
    report.measure_b = measure_mu(mu, set_b);
    report.product = report.measure_a * report.measure_b;

    const double m = mu.value();
    const detail::GaussRule rule = detail::gauss_legendre(spec.nodes_per_panel);
    Integrand f{mu, 1.0 / (std::pow(2.0, m + 0.5) * gamma_fn(m + 0.5)),
                1.0 / (2.0 * m + 1.0)};

    // momentum-side segments: split at 0, substitute where the weight is
    // singular at 0
    auto u_of_k = [&](double k) {
        if (k == 0.0) return 0.0;
        return std::copysign(std::pow(std::fabs(k), 2.0 * m + 1.0) * f.inv_power, k);
    };
    std::vector<BSeg> segs;
    for (const auto& iv : set_b.intervals()) {
        auto add = [&](double lo, double hi) {
            bool touches = lo == 0.0 || hi == 0.0;
            if (touches && m < 0.0)
                segs.push_back({u_of_k(lo), u_of_k(hi), true});
            else
                segs.push_back({lo, hi, false});
        };
        if (iv.lo < 0.0 && iv.hi > 0.0) {
            add(iv.lo, 0.0);
            add(0.0, iv.hi);
        } else {
            add(iv.lo, iv.hi);
        }
    }

    std::vector<Panel> panels;
    long next_id = 0;
    for (const auto& iv : set_a.intervals())
        for (const auto& seg : segs) {
            PanelGeom g{iv.lo, iv.hi, seg};
            panels.push_back(
                make_panel(f, rule, g, 0, next_id++, panel_value(f, rule, g)));
        }

    struct QEntry {
        double err;
        long id;
        size_t index;
        bool operator<(const QEntry& other) const {
            return err < other.err || (err == other.err && id > other.id);
        }
    };
    std::priority_queue<QEntry> queue;
    double run_value = 0.0, run_err = 0.0;
    for (size_t i = 0; i < panels.size(); ++i) {
        queue.push({panels[i].err, panels[i].id, i});
        run_value += panels[i].refined;
        run_err += panels[i].err;
    }

    bool converged = false;
    while (true) {
        double target = std::max(spec.abs_tol, spec.rel_tol * std::fabs(run_value));
        if (run_err <= target) {
            converged = true;
            break;
        }
        if (queue.empty() || static_cast<int>(panels.size()) > kPanelBudget) break;
        QEntry top = queue.top();
        queue.pop();
        if (!panels[top.index].alive) continue;
        if (panels[top.index].depth >= spec.max_depth) continue;  // frozen leaf

        Panel& parent = panels[top.index];
        parent.alive = false;
        auto kids = children_of(parent.g, parent.axis);
        int depth = parent.depth + 1;
        double parent_refined = parent.refined, parent_err = parent.err;
        double kd0 = parent.kid_direct[0], kd1 = parent.kid_direct[1];
        // note: push_back may reallocate; do not touch `parent` afterwards
        panels.push_back(make_panel(f, rule, kids.first, depth, next_id++, kd0));
        panels.push_back(make_panel(f, rule, kids.second, depth, next_id++, kd1));
        for (size_t i = panels.size() - 2; i < panels.size(); ++i) {
            queue.push({panels[i].err, panels[i].id, i});
            run_value += panels[i].refined;
            run_err += panels[i].err;
        }
        run_value -= parent_refined;
        run_err -= parent_err;
    }

    // deterministic final reduction over the sorted leaves
    std::vector<const Panel*> leaves;
    for (const Panel& p : panels)
        if (p.alive) leaves.push_back(&p);
    std::sort(leaves.begin(), leaves.end(), [](const Panel* a, const Panel* b) {
        if (a->g.xlo != b->g.xlo) return a->g.xlo < b->g.xlo;
        if (a->g.b.lo != b->g.b.lo) return a->g.b.lo < b->g.b.lo;
        if (a->g.xhi != b->g.xhi) return a->g.xhi < b->g.xhi;
        return a->g.b.hi < b->g.b.hi;
    });
    std::vector<double> vals, errs;
    vals.reserve(leaves.size());
    errs.reserve(leaves.size());
    for (const Panel* p : leaves) {
        vals.push_back(p->refined);
        errs.push_back(p->err);
    }
    report.trace = tree_sum(vals, 0, vals.size());
    double err = tree_sum(errs, 0, errs.size());
    // floor keeps verdicts honest when the quadrature is exact to roundoff
    err = std::max(err, 10.0 * DBL_EPSILON * (std::fabs(report.trace) + report.product));
    report.err_estimate = err;
    report.converged = converged;

    spot_check_phi(mu, set_a, set_b);

    report.verdict = decide(m, report.trace, report.product, err, converged);
    return report;
}

std::vector<TraceReport> sweep_mu(const std::vector<MuParam>& mu_values,
                                  const IntervalSet& set_a, const IntervalSet& set_b,
                                  const QuadratureSpec& spec) {
    validate(spec);
    if (!set_a.excludes_zero())
        throw std::domain_error(
            "set A must exclude 0: the trace formula requires 0 outside the closure of A");
    std::vector<TraceReport> out;
    out.reserve(mu_values.size());
    for (MuParam mu : mu_values) {
        try {
            out.push_back(trace_integral(mu, set_a, set_b, spec));
        } catch (const std::exception& e) {
            TraceReport r{mu, set_a, set_b};
            r.measure_a = measure_mu(mu, set_a);
            r.measure_b = measure_mu(mu, set_b);
            r.product = r.measure_a * r.measure_b;
            r.trace = std::numeric_limits<double>::quiet_NaN();
            r.err_estimate = std::numeric_limits<double>::quiet_NaN();
            r.verdict = Verdict::INDETERMINATE;
            r.converged = false;
            r.error = e.what();
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace muqm
