#include "ldist/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace ldist {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
constexpr double gk_nodes[8] = {
    0.0,
    0.2077849550078984676006894, 0.4058451513773971669066064,
    0.5860872354676911302941448, 0.7415311855993944398638648,
    0.8648644233597690727897128, 0.9491079123427585245261897,
    0.9914553711208126392068547};
constexpr double gk_wk[8] = { // Kronrod weights for +-node
    0.2094821410847278280129992,
    0.2044329400752988924141620, 0.1903505780647854099132564,
    0.1690047266392679028265834, 0.1406532597155259187451896,
    0.1047900103222501838398763, 0.0630920926299785532907007,
    0.0229353220105292249637320};
constexpr double gk_wg[4] = { // Gauss weights for nodes 0, 2, 4, 6
    0.4179591836734693877551020,
    0.3818300505051189449503698, 0.2797053914892766679014678,
    0.1294849661688696932706114};

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double f0 = f(c);
    if (!std::isfinite(f0)) f0 = 0.0;
    double k = gk_wk[0] * f0, g = gk_wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        double fp = f(c + h * gk_nodes[i]);
        double fm = f(c - h * gk_nodes[i]);
        if (!std::isfinite(fp)) fp = 0.0;
        if (!std::isfinite(fm)) fm = 0.0;
        k += gk_wk[i] * (fp + fm);
        if (i % 2 == 0) g += gk_wg[i / 2] * (fp + fm);
    }
    double diff = std::abs(k - g) * h;
    // standard QUADPACK-style error sharpening
    double err = diff * std::min(1.0, std::pow(200.0 * diff / std::max(1e-300, std::abs(k) * h), 1.5));
    err = std::max(err, std::abs(k) * h * 1e-16);
    return {a, b, k * h, err};
}

} // namespace

QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, double rel_tol, int max_depth) {
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0};
        auto r = integrate_gk(f, b, a, abs_tol, rel_tol, max_depth);
        return {-r.value, r.error};
    }
    const std::size_t max_intervals = 4000;
    (void)max_depth;

    std::priority_queue<Interval> heap;
    heap.push(gk15(f, a, b));
    double total = heap.top().value, toterr = heap.top().error;
    while (heap.size() < max_intervals) {
        double target = std::max(abs_tol, rel_tol * std::abs(total));
        if (toterr <= target) break;
        Interval worst = heap.top();
        if (worst.error <= target / (4.0 * heap.size())) break; // stagnated
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) { heap.push(worst); break; } // exhausted doubles
        Interval l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
        total += l.value + r.value - worst.value;
        toterr += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
    }
    // recompute sums pairwise for a deterministic, low-noise result
    std::vector<Interval> items;
    items.reserve(heap.size());
    while (!heap.empty()) { items.push_back(heap.top()); heap.pop(); }
    std::sort(items.begin(), items.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
    std::vector<double> vals(items.size());
    double err = 0.0;
    for (std::size_t i = 0; i < items.size(); ++i) { vals[i] = items[i].value; err += items[i].error; }
    return {pairwise_sum(vals), err};
}

namespace {

struct TSLevel {
    std::vector<double> x;   // tanh((pi/2) sinh t) in [0,1)
    std::vector<double> xc;  // 1 - x, computed without cancellation
    std::vector<double> w;   // weight
};

// Level k holds the nodes with spacing h = 2^-k that are new relative to
// level k-1, so the running sum reuses all prior evaluations.
const std::vector<TSLevel>& ts_levels() {
    static const std::vector<TSLevel> levels = [] {
        std::vector<TSLevel> out;
        const int max_level = 14;
        const double tmax = 6.56; // beyond this 1-x underflows
        for (int k = 0; k <= max_level; ++k) {
            TSLevel lv;
            double h = std::ldexp(1.0, -k);
            double t0 = (k == 0) ? 0.0 : h;
            double step = (k == 0) ? 1.0 : 2 * h;
            for (double t = t0; t <= tmax; t += step) {
                double sh = (pi / 2) * std::sinh(t);
                double x = std::tanh(sh);
                double xc = 2.0 / (std::exp(2 * sh) + 1.0); // 1 - tanh(sh)
                double w = (pi / 2) * std::cosh(t) / (std::cosh(sh) * std::cosh(sh));
                if (xc == 0.0 || w < 1e-320) break;
                lv.x.push_back(x);
                lv.xc.push_back(xc);
                lv.w.push_back(w);
            }
            out.push_back(std::move(lv));
        }
        return out;
    }();
    return levels;
}

} // namespace

QuadResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b,
                               double tol, int max_level) {
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0};
        auto r = integrate_tanh_sinh(f, b, a, tol, max_level);
        return {-r.value, r.error};
    }
    const auto& levels = ts_levels();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    auto eval_pair = [&](double xc) {
        double up = b - half * xc; // node near b
        double um = a + half * xc; // mirrored node near a
        double s = 0.0;
        double fp = f(up), fm = f(um);
        if (std::isfinite(fp)) s += fp;
        if (std::isfinite(fm)) s += fm;
        return s;
    };

    double h = 1.0;
    double sum = 0.0;
    {
        const auto& lv = levels[0];
        for (std::size_t i = 0; i < lv.x.size(); ++i) {
            if (lv.x[i] == 0.0) {
                double f0 = f(mid);
                if (std::isfinite(f0)) sum += lv.w[i] * f0;
            } else {
                sum += lv.w[i] * eval_pair(lv.xc[i]);
            }
        }
    }
    double prev = sum * h * half;
    double value = prev, err = std::abs(prev);
    for (int k = 1; k <= max_level && k < (int)levels.size(); ++k) {
        const auto& lv = levels[k];
        for (std::size_t i = 0; i < lv.x.size(); ++i)
            sum += lv.w[i] * eval_pair(lv.xc[i]);
        h *= 0.5;
        value = sum * h * half;
        err = std::abs(value - prev);
        prev = value;
        if (err <= tol * std::max(1.0, std::abs(value)) && k >= 4) break;
    }
    return {value, err};
}

namespace {
QuadResult map_upper(const std::function<double(double)>& f, double a, bool use_ts, double tol) {
    // u = a + (1-t)/t, du = -dt/t^2; integral over t in (0,1]
    auto g = [&](double t) {
        double u = a + (1.0 - t) / t;
        return f(u) / (t * t);
    };
    if (use_ts) return integrate_tanh_sinh(g, 0.0, 1.0, tol);
    return integrate_gk(g, 0.0, 1.0, tol * 1e-3, tol);
}
} // namespace

QuadResult integrate_gk_upper(const std::function<double(double)>& f, double a,
                              double abs_tol, double rel_tol) {
    (void)abs_tol;
    return map_upper(f, a, false, rel_tol);
}

QuadResult integrate_tanh_sinh_upper(const std::function<double(double)>& f, double a,
                                     double tol) {
    return map_upper(f, a, true, tol);
}

complex periodic_mean(const std::function<complex(double)>& f, int n) {
    complex s = 0.0;
    for (int j = 0; j < n; ++j) s += f(two_pi * (j + 0.5) / n);
    return s / static_cast<double>(n);
}

double periodic_mean_real(const std::function<double(double)>& f, int n) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += f(two_pi * (j + 0.5) / n);
    return s / n;
}

namespace {
// 16-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; symmetric).
constexpr double gl16_x[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr double gl16_w[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};
} // namespace

double gl_panels(const std::function<double(double)>& f, double a, double b, double max_freq) {
    if (!(b > a)) return 0.0;
    // GL-16 resolves a few cycles per panel at full precision; stay at ~1 cycle.
    double width = 1.0 / std::max(1e-12, 4.0 * max_freq);
    int panels = std::max(1, (int)std::ceil((b - a) / width));
    double h = (b - a) / panels;
    std::vector<double> partial(panels);
    for (int p = 0; p < panels; ++p) {
        double c = a + (p + 0.5) * h;
        double s = 0.0;
        for (int i = 0; i < 8; ++i)
            s += gl16_w[i] * (f(c + 0.5 * h * gl16_x[i]) + f(c - 0.5 * h * gl16_x[i]));
        partial[p] = 0.5 * h * s;
    }
    return pairwise_sum(partial);
}

} // namespace ldist
