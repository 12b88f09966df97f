#include "oracles/rs_oracle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace rs_oracle {

namespace {

constexpr double kHalfPi = M_PI / 2.0;

double wrap2pi(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a < 0.0) a += 2.0 * M_PI;
    return a;
}

enum Bind : int { kA = 0, kB = 1, kC = 2, kQuarter = 3 };

struct Seg {
    int steer;  // +1 left, 0 straight, -1 right
    int sign;   // gear sign, +1 / -1 (eps already applied)
    int bind;   // which magnitude this segment uses
};

struct Word {
    std::array<Seg, 5> segs;
    int count;
};

std::vector<Word> build_words() {
    std::vector<Word> words;
    auto add = [&](std::initializer_list<int> steers, std::initializer_list<int> signs,
                   std::initializer_list<int> binds, int sigma, int eps) {
        Word w{};
        w.count = static_cast<int>(steers.size());
        auto st = steers.begin();
        auto sg = signs.begin();
        auto bd = binds.begin();
        for (int i = 0; i < w.count; ++i, ++st, ++sg, ++bd)
            w.segs[i] = {*st * sigma, *sg * eps, *bd};
        words.push_back(w);
    };
    for (int sigma : {1, -1}) {
        for (int eps : {1, -1}) {
            add({1, -1, 1}, {1, -1, 1}, {kA, kB, kC}, sigma, eps);        // C|C|C
            add({1, -1, 1}, {1, -1, -1}, {kA, kB, kC}, sigma, eps);       // C|CC
            add({1, -1, 1}, {1, 1, -1}, {kA, kB, kC}, sigma, eps);        // CC|C
            add({1, 0, 1}, {1, 1, 1}, {kA, kB, kC}, sigma, eps);          // CSC same
            add({1, 0, -1}, {1, 1, 1}, {kA, kB, kC}, sigma, eps);         // CSC opposite
            add({1, -1, 1, -1}, {1, 1, -1, -1}, {kA, kB, kB, kC}, sigma, eps);  // CCu|CuC
            add({1, -1, 1, -1}, {1, -1, -1, 1}, {kA, kB, kB, kC}, sigma, eps);  // C|CuCu|C
            add({1, -1, 0, -1}, {1, -1, -1, -1}, {kA, kQuarter, kB, kC}, sigma, eps);
            add({1, -1, 0, 1}, {1, -1, -1, -1}, {kA, kQuarter, kB, kC}, sigma, eps);
            add({1, 0, -1, 1}, {1, 1, 1, -1}, {kA, kB, kQuarter, kC}, sigma, eps);
            add({1, 0, 1, -1}, {1, 1, 1, -1}, {kA, kB, kQuarter, kC}, sigma, eps);
            add({1, -1, 0, 1, -1}, {1, -1, -1, -1, 1}, {kA, kQuarter, kB, kQuarter, kC},
                sigma, eps);  // C|CSC|C with quarter inner turns
        }
    }
    return words;
}

struct Eval {
    double fx, fy;    // position residual
    double c;         // solved final-turn magnitude
    bool c_valid;
    double length;
};

/// Integrates the word for magnitudes (a, b); the final turn magnitude is
/// chosen to satisfy the heading constraint exactly.
Eval evaluate(const Word& w, double a, double b, double tx, double ty, double tphi) {
    Eval ev{};
    double partial = 0.0;
    std::array<double, 5> mags{};
    for (int i = 0; i < w.count; ++i) {
        const int bind = w.segs[i].bind;
        mags[i] = (bind == kA) ? a : (bind == kB) ? b : (bind == kQuarter) ? kHalfPi : 0.0;
        if (bind != kC) partial += w.segs[i].steer * w.segs[i].sign * mags[i];
    }
    const Seg& last = w.segs[w.count - 1];
    const double c0 = wrap2pi((tphi - partial) * (last.steer * last.sign));
    // the final turn magnitude lives in [0, pi]; c0 near 2*pi means zero
    ev.c_valid = c0 <= M_PI + 1e-7 || c0 >= 2.0 * M_PI - 1e-7;
    ev.c = (c0 <= M_PI + 1e-7) ? c0 : 0.0;
    mags[w.count - 1] = ev.c;

    double x = 0.0, y = 0.0, th = 0.0;
    ev.length = 0.0;
    for (int i = 0; i < w.count; ++i) {
        const double s = w.segs[i].sign * mags[i];
        if (w.segs[i].steer == 0) {
            x += s * std::cos(th);
            y += s * std::sin(th);
        } else {
            const double nth = th + w.segs[i].steer * s;
            x += w.segs[i].steer * (std::sin(nth) - std::sin(th));
            y += w.segs[i].steer * (std::cos(th) - std::cos(nth));
            th = nth;
        }
        ev.length += std::abs(mags[i]);
    }
    ev.fx = x - tx;
    ev.fy = y - ty;
    return ev;
}

bool magnitudes_valid(const Word& w, double a, double b, double c) {
    const double lo = -1e-9;
    if (c < lo || c > M_PI + 1e-9) return false;
    for (int i = 0; i < w.count; ++i) {
        const int bind = w.segs[i].bind;
        const double m = (bind == kA) ? a : (bind == kB) ? b : 0.0;
        if (bind == kA || bind == kB) {
            if (m < lo) return false;
            if (w.segs[i].steer != 0 && m > M_PI + 1e-9) return false;
        }
    }
    return true;
}

/// Damped 2D Newton from one seed; returns a candidate length or +inf.
double newton_from(const Word& w, double a, double b, double tx, double ty, double tphi) {
    constexpr double kTol = 1e-11;
    constexpr double kFd = 1e-7;
    Eval ev = evaluate(w, a, b, tx, ty, tphi);
    double err = std::hypot(ev.fx, ev.fy);
    for (int it = 0; it < 30; ++it) {
        if (!ev.c_valid) return std::numeric_limits<double>::infinity();
        if (err < kTol) break;
        if (it > 4 && err > 8.0) return std::numeric_limits<double>::infinity();
        const Eval pa = evaluate(w, a + kFd, b, tx, ty, tphi);
        const Eval ma = evaluate(w, a - kFd, b, tx, ty, tphi);
        const Eval pb = evaluate(w, a, b + kFd, tx, ty, tphi);
        const Eval mb = evaluate(w, a, b - kFd, tx, ty, tphi);
        const double j11 = (pa.fx - ma.fx) / (2 * kFd), j12 = (pb.fx - mb.fx) / (2 * kFd);
        const double j21 = (pa.fy - ma.fy) / (2 * kFd), j22 = (pb.fy - mb.fy) / (2 * kFd);
        const double det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-14) return std::numeric_limits<double>::infinity();
        const double da = (-ev.fx * j22 + ev.fy * j12) / det;
        const double db = (-ev.fy * j11 + ev.fx * j21) / det;
        double scale = 1.0;
        for (int half = 0; half < 5; ++half) {
            const Eval trial = evaluate(w, a + scale * da, b + scale * db, tx, ty, tphi);
            const double trial_err = std::hypot(trial.fx, trial.fy);
            if (trial_err < err || half == 4) {
                a += scale * da;
                b += scale * db;
                ev = trial;
                err = trial_err;
                break;
            }
            scale *= 0.5;
        }
    }
    if (err >= kTol) return std::numeric_limits<double>::infinity();
    if (!magnitudes_valid(w, a, b, ev.c)) return std::numeric_limits<double>::infinity();
    return ev.length;
}

}  // namespace

double min_length(double x, double y, double phi) {
    static const std::vector<Word> words = build_words();
    double best = std::numeric_limits<double>::infinity();

    // dense at the low end: tiny-arc basins are nearly singular for Newton
    std::vector<double> turn_seeds = {0.004, 0.015, 0.05, 0.12, 0.22};
    for (double t = 0.37; t < M_PI; t += 0.35) turn_seeds.push_back(t);
    const double rmax = std::hypot(x, y) + 7.0;
    std::vector<double> straight_seeds = {0.01, 0.1, 0.3};
    for (double s = 0.75; s < rmax; s += 0.7) straight_seeds.push_back(s);

    for (const Word& w : words) {
        bool b_is_straight = false;
        bool has_b = false;
        for (int i = 0; i < w.count; ++i) {
            if (w.segs[i].bind == kB) {
                has_b = true;
                if (w.segs[i].steer == 0) b_is_straight = true;
            }
        }
        const std::vector<double>& b_seeds = b_is_straight ? straight_seeds : turn_seeds;
        for (double a : turn_seeds) {
            if (!has_b) {
                const double len = newton_from(w, a, 0.0, x, y, phi);
                best = std::min(best, len);
                continue;
            }
            for (double b : b_seeds) {
                const double len = newton_from(w, a, b, x, y, phi);
                if (len < best) best = len;
            }
        }
    }
    return best;
}

}  // namespace rs_oracle
