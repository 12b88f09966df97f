#include "fourwis/reeds_shepp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace fourwis {

namespace {

constexpr double kZero = 10.0 * std::numeric_limits<double>::epsilon();
constexpr double kTieTol = 1e-12;

// Inputs here stay within a few multiples of 2*pi, so iterative reduction
// beats fmod in the solver's hot path.
double mod2pi(double x) {
    constexpr double two_pi = 2.0 * M_PI;
    while (x > M_PI) x -= two_pi;
    while (x <= -M_PI) x += two_pi;
    return x;
}

void polar(double x, double y, double& r, double& theta) {
    r = std::sqrt(x * x + y * y);
    theta = std::atan2(y, x);
}

// Word solvers in the canonical unit-curvature frame. Parameter names follow
// the usual (t, u, v) convention; each returns signed segment extents.

bool LpSpLp(double x, double y, double phi, double sphi, double cphi, double& t,
            double& u, double& v) {
    polar(x - sphi, y - 1.0 + cphi, u, t);
    if (t >= -kZero) {
        v = mod2pi(phi - t);
        if (v >= -kZero) return true;
    }
    return false;
}

bool LpSpRp(double x, double y, double phi, double sphi, double cphi, double& t,
            double& u, double& v) {
    double t1, u1;
    polar(x + sphi, y - 1.0 - cphi, u1, t1);
    u1 = u1 * u1;
    if (u1 >= 4.0) {
        u = std::sqrt(u1 - 4.0);
        const double theta = std::atan2(2.0, u);
        t = mod2pi(t1 + theta);
        v = mod2pi(t - phi);
        if (t >= -kZero && v >= -kZero) return true;
    }
    return false;
}

bool LpRmL(double x, double y, double phi, double sphi, double cphi, double& t,
           double& u, double& v) {
    const double xi = x - sphi;
    const double eta = y - 1.0 + cphi;
    double u1, theta;
    polar(xi, eta, u1, theta);
    if (u1 <= 4.0) {
        u = -2.0 * std::asin(0.25 * u1);
        t = mod2pi(theta + 0.5 * u + M_PI);
        v = mod2pi(phi - t + u);
        if (t >= -kZero && u <= kZero) return true;
    }
    return false;
}

void tau_omega(double u, double v, double xi, double eta, double phi, double& tau,
               double& omega) {
    const double delta = mod2pi(u - v);
    const double A = std::sin(u) - std::sin(delta);
    const double B = std::cos(u) - std::cos(delta) - 1.0;
    const double t1 = std::atan2(eta * A - xi * B, xi * A + eta * B);
    const double t2 = 2.0 * (std::cos(delta) - std::cos(v) - std::cos(u)) + 3.0;
    tau = (t2 < 0.0) ? mod2pi(t1 + M_PI) : mod2pi(t1);
    omega = mod2pi(tau - u + v - phi);
}

bool LpRupLumRm(double x, double y, double phi, double sphi, double cphi, double& t,
                double& u, double& v) {
    const double xi = x + sphi;
    const double eta = y - 1.0 - cphi;
    const double rho = 0.25 * (2.0 + std::hypot(xi, eta));
    if (rho <= 1.0) {
        u = std::acos(rho);
        tau_omega(u, -u, xi, eta, phi, t, v);
        if (t >= -kZero && v <= kZero) return true;
    }
    return false;
}

bool LpRumLumRp(double x, double y, double phi, double sphi, double cphi, double& t,
                double& u, double& v) {
    const double xi = x + sphi;
    const double eta = y - 1.0 - cphi;
    const double rho = (20.0 - xi * xi - eta * eta) / 16.0;
    if (rho >= 0.0 && rho <= 1.0) {
        u = -std::acos(rho);
        if (u >= -0.5 * M_PI) {
            tau_omega(u, u, xi, eta, phi, t, v);
            if (t >= -kZero && v >= -kZero) return true;
        }
    }
    return false;
}

bool LpRmSmLm(double x, double y, double phi, double sphi, double cphi, double& t,
              double& u, double& v) {
    const double xi = x - sphi;
    const double eta = y - 1.0 + cphi;
    double rho, theta;
    polar(xi, eta, rho, theta);
    if (rho >= 2.0) {
        const double r = std::sqrt(rho * rho - 4.0);
        u = 2.0 - r;
        t = mod2pi(theta + std::atan2(r, -2.0));
        v = mod2pi(phi - 0.5 * M_PI - t);
        if (t >= -kZero && u <= kZero && v <= kZero) return true;
    }
    return false;
}

bool LpRmSmRm(double x, double y, double phi, double sphi, double cphi, double& t,
              double& u, double& v) {
    const double xi = x + sphi;
    const double eta = y - 1.0 - cphi;
    double rho, theta;
    polar(-eta, xi, rho, theta);
    if (rho >= 2.0) {
        t = theta;
        u = 2.0 - rho;
        v = mod2pi(t + 0.5 * M_PI - phi);
        if (t >= -kZero && u <= kZero && v <= kZero) return true;
    }
    return false;
}

bool LpRmSLmRp(double x, double y, double phi, double sphi, double cphi, double& t,
               double& u, double& v) {
    const double xi = x + sphi;
    const double eta = y - 1.0 - cphi;
    double rho, theta;
    polar(xi, eta, rho, theta);
    if (rho >= 2.0) {
        u = 4.0 - std::sqrt(rho * rho - 4.0);
        if (u <= kZero) {
            t = mod2pi(std::atan2((4.0 - u) * xi - 2.0 * eta, -2.0 * xi + (u - 4.0) * eta));
            v = mod2pi(t - phi);
            if (t >= -kZero && v >= -kZero) return true;
        }
    }
    return false;
}

constexpr Steer L = Steer::Left;
constexpr Steer S = Steer::Straight;
constexpr Steer R = Steer::Right;

struct Candidate {
    std::array<Steer, 5> steers;
    std::array<double, 5> params;  // signed extents, unit curvature space
    int count = 0;                 // used entries in steers/params
    int word = -1;
    double length = 0.0;           // sum of |params|
    int nonzero = 0;

    void finalize(int word_index) {
        word = word_index;
        length = 0.0;
        nonzero = 0;
        for (int i = 0; i < count; ++i) {
            length += std::abs(params[i]);
            if (std::abs(params[i]) > kTieTol) ++nonzero;
        }
    }
};

class Best {
public:
    bool valid() const { return best_.word >= 0; }
    const Candidate& get() const { return best_; }

    void offer(Candidate c, int word_index) {
        c.finalize(word_index);
        if (!valid() || c.length < best_.length - kTieTol ||
            (std::abs(c.length - best_.length) <= kTieTol &&
             (c.nonzero < best_.nonzero ||
              (c.nonzero == best_.nonzero && c.word < best_.word)))) {
            best_ = c;
        }
    }

private:
    Candidate best_;
};

Candidate make3(Steer a, Steer b, Steer c, double p0, double p1, double p2) {
    Candidate cand;
    cand.steers = {a, b, c, L, L};
    cand.params = {p0, p1, p2, 0.0, 0.0};
    cand.count = 3;
    return cand;
}

Candidate make4(Steer a, Steer b, Steer c, Steer d, double p0, double p1, double p2,
                double p3) {
    Candidate cand;
    cand.steers = {a, b, c, d, L};
    cand.params = {p0, p1, p2, p3, 0.0};
    cand.count = 4;
    return cand;
}

Candidate make5(Steer a, Steer b, Steer c, Steer d, Steer e, double p0, double p1,
                double p2, double p3, double p4) {
    Candidate cand;
    cand.steers = {a, b, c, d, e};
    cand.params = {p0, p1, p2, p3, p4};
    cand.count = 5;
    return cand;
}

/// Enumerates all Reeds-Shepp words for target (x, y, phi), unit curvature.
Candidate solve_unit(double x, double y, double phi) {
    Best best;
    double t, u, v;
    const double sphi = std::sin(phi), cphi = std::cos(phi);
    int w = 0;  // running word index, fixed enumeration order

    // --- CSC ---------------------------------------------------------------
    if (LpSpLp(x, y, phi, sphi, cphi, t, u, v)) best.offer(make3(L, S, L, t, u, v), w);
    ++w;
    if (LpSpLp(-x, y, -phi, -sphi, cphi, t, u, v)) best.offer(make3(L, S, L, -t, -u, -v), w);
    ++w;
    if (LpSpLp(x, -y, -phi, -sphi, cphi, t, u, v)) best.offer(make3(R, S, R, t, u, v), w);
    ++w;
    if (LpSpLp(-x, -y, phi, sphi, cphi, t, u, v)) best.offer(make3(R, S, R, -t, -u, -v), w);
    ++w;
    if (LpSpRp(x, y, phi, sphi, cphi, t, u, v)) best.offer(make3(L, S, R, t, u, v), w);
    ++w;
    if (LpSpRp(-x, y, -phi, -sphi, cphi, t, u, v)) best.offer(make3(L, S, R, -t, -u, -v), w);
    ++w;
    if (LpSpRp(x, -y, -phi, -sphi, cphi, t, u, v)) best.offer(make3(R, S, L, t, u, v), w);
    ++w;
    if (LpSpRp(-x, -y, phi, sphi, cphi, t, u, v)) best.offer(make3(R, S, L, -t, -u, -v), w);
    ++w;

    // --- CCC ---------------------------------------------------------------
    if (LpRmL(x, y, phi, sphi, cphi, t, u, v)) best.offer(make3(L, R, L, t, u, v), w);
    ++w;
    if (LpRmL(-x, y, -phi, -sphi, cphi, t, u, v)) best.offer(make3(L, R, L, -t, -u, -v), w);
    ++w;
    if (LpRmL(x, -y, -phi, -sphi, cphi, t, u, v)) best.offer(make3(R, L, R, t, u, v), w);
    ++w;
    if (LpRmL(-x, -y, phi, sphi, cphi, t, u, v)) best.offer(make3(R, L, R, -t, -u, -v), w);
    ++w;
    {
        // time-reversed words, solved on the backwards-transformed target
        const double xb = x * cphi + y * sphi;
        const double yb = x * sphi - y * cphi;
        if (LpRmL(xb, yb, phi, sphi, cphi, t, u, v)) best.offer(make3(L, R, L, v, u, t), w);
        ++w;
        if (LpRmL(-xb, yb, -phi, -sphi, cphi, t, u, v)) best.offer(make3(L, R, L, -v, -u, -t), w);
        ++w;
        if (LpRmL(xb, -yb, -phi, -sphi, cphi, t, u, v)) best.offer(make3(R, L, R, v, u, t), w);
        ++w;
        if (LpRmL(-xb, -yb, phi, sphi, cphi, t, u, v)) best.offer(make3(R, L, R, -v, -u, -t), w);
        ++w;
    }

    // --- CCCC --------------------------------------------------------------
    if (LpRupLumRm(x, y, phi, sphi, cphi, t, u, v)) best.offer(make4(L, R, L, R, t, u, -u, v), w);
    ++w;
    if (LpRupLumRm(-x, y, -phi, -sphi, cphi, t, u, v)) best.offer(make4(L, R, L, R, -t, -u, u, -v), w);
    ++w;
    if (LpRupLumRm(x, -y, -phi, -sphi, cphi, t, u, v)) best.offer(make4(R, L, R, L, t, u, -u, v), w);
    ++w;
    if (LpRupLumRm(-x, -y, phi, sphi, cphi, t, u, v)) best.offer(make4(R, L, R, L, -t, -u, u, -v), w);
    ++w;
    if (LpRumLumRp(x, y, phi, sphi, cphi, t, u, v)) best.offer(make4(L, R, L, R, t, u, u, v), w);
    ++w;
    if (LpRumLumRp(-x, y, -phi, -sphi, cphi, t, u, v)) best.offer(make4(L, R, L, R, -t, -u, -u, -v), w);
    ++w;
    if (LpRumLumRp(x, -y, -phi, -sphi, cphi, t, u, v)) best.offer(make4(R, L, R, L, t, u, u, v), w);
    ++w;
    if (LpRumLumRp(-x, -y, phi, sphi, cphi, t, u, v)) best.offer(make4(R, L, R, L, -t, -u, -u, -v), w);
    ++w;

    // --- CCSC --------------------------------------------------------------
    const double hp = 0.5 * M_PI;
    if (LpRmSmLm(x, y, phi, sphi, cphi, t, u, v)) best.offer(make4(L, R, S, L, t, -hp, u, v), w);
    ++w;
    if (LpRmSmLm(-x, y, -phi, -sphi, cphi, t, u, v)) best.offer(make4(L, R, S, L, -t, hp, -u, -v), w);
    ++w;
    if (LpRmSmLm(x, -y, -phi, -sphi, cphi, t, u, v)) best.offer(make4(R, L, S, R, t, -hp, u, v), w);
    ++w;
    if (LpRmSmLm(-x, -y, phi, sphi, cphi, t, u, v)) best.offer(make4(R, L, S, R, -t, hp, -u, -v), w);
    ++w;
    if (LpRmSmRm(x, y, phi, sphi, cphi, t, u, v)) best.offer(make4(L, R, S, R, t, -hp, u, v), w);
    ++w;
    if (LpRmSmRm(-x, y, -phi, -sphi, cphi, t, u, v)) best.offer(make4(L, R, S, R, -t, hp, -u, -v), w);
    ++w;
    if (LpRmSmRm(x, -y, -phi, -sphi, cphi, t, u, v)) best.offer(make4(R, L, S, L, t, -hp, u, v), w);
    ++w;
    if (LpRmSmRm(-x, -y, phi, sphi, cphi, t, u, v)) best.offer(make4(R, L, S, L, -t, hp, -u, -v), w);
    ++w;
    {
        const double xb = x * cphi + y * sphi;
        const double yb = x * sphi - y * cphi;
        if (LpRmSmLm(xb, yb, phi, sphi, cphi, t, u, v)) best.offer(make4(L, S, R, L, v, u, -hp, t), w);
        ++w;
        if (LpRmSmLm(-xb, yb, -phi, -sphi, cphi, t, u, v)) best.offer(make4(L, S, R, L, -v, -u, hp, -t), w);
        ++w;
        if (LpRmSmLm(xb, -yb, -phi, -sphi, cphi, t, u, v)) best.offer(make4(R, S, L, R, v, u, -hp, t), w);
        ++w;
        if (LpRmSmLm(-xb, -yb, phi, sphi, cphi, t, u, v)) best.offer(make4(R, S, L, R, -v, -u, hp, -t), w);
        ++w;
        if (LpRmSmRm(xb, yb, phi, sphi, cphi, t, u, v)) best.offer(make4(R, S, R, L, v, u, -hp, t), w);
        ++w;
        if (LpRmSmRm(-xb, yb, -phi, -sphi, cphi, t, u, v)) best.offer(make4(R, S, R, L, -v, -u, hp, -t), w);
        ++w;
        if (LpRmSmRm(xb, -yb, -phi, -sphi, cphi, t, u, v)) best.offer(make4(L, S, L, R, v, u, -hp, t), w);
        ++w;
        if (LpRmSmRm(-xb, -yb, phi, sphi, cphi, t, u, v)) best.offer(make4(L, S, L, R, -v, -u, hp, -t), w);
        ++w;
    }

    // --- CCSCC -------------------------------------------------------------
    if (LpRmSLmRp(x, y, phi, sphi, cphi, t, u, v))
        best.offer(make5(L, R, S, L, R, t, -hp, u, -hp, v), w);
    ++w;
    if (LpRmSLmRp(-x, y, -phi, -sphi, cphi, t, u, v))
        best.offer(make5(L, R, S, L, R, -t, hp, -u, hp, -v), w);
    ++w;
    if (LpRmSLmRp(x, -y, -phi, -sphi, cphi, t, u, v))
        best.offer(make5(R, L, S, R, L, t, -hp, u, -hp, v), w);
    ++w;
    if (LpRmSLmRp(-x, -y, phi, sphi, cphi, t, u, v))
        best.offer(make5(R, L, S, R, L, -t, hp, -u, hp, -v), w);
    ++w;

    return best.get();
}

/// Advance a pose along one segment by a (possibly partial) signed extent:
/// meters for straights, arc angle for turns.
Pose advance(const Pose& p, Steer steer, double signed_extent, double kappa) {
    Pose out = p;
    if (steer == Steer::Straight) {
        out.x += signed_extent * std::cos(p.theta);
        out.y += signed_extent * std::sin(p.theta);
        return out;
    }
    const double dir = (steer == Steer::Left) ? 1.0 : -1.0;
    const double dtheta = dir * signed_extent;
    out.theta = wrap_to_2pi(p.theta + dtheta);
    const double r = 1.0 / kappa;
    out.x += r * dir * (std::sin(p.theta + dtheta) - std::sin(p.theta));
    out.y += r * dir * (std::cos(p.theta) - std::cos(p.theta + dtheta));
    return out;
}

Pose lateral_in(const Pose& p) { return {p.x, p.y, wrap_to_2pi(p.theta - M_PI / 2.0)}; }
Pose lateral_out(const Pose& p) { return {p.x, p.y, wrap_to_2pi(p.theta + M_PI / 2.0)}; }

}  // namespace

RSPath rs_shortest(const PoseDelta& delta, double kappa) {
    RSPath path;
    path.curvature = kappa;
    const double dth = wrap_to_pi(delta.theta);
    if (std::abs(delta.x) < 1e-12 && std::abs(delta.y) < 1e-12 && std::abs(dth) < 1e-12)
        return path;  // identity

    const Candidate cand = solve_unit(delta.x * kappa, delta.y * kappa, dth);
    path.word = cand.word;
    for (int i = 0; i < cand.count; ++i) {
        const double p = cand.params[i];
        if (std::abs(p) < kTieTol) continue;
        RSSegment seg;
        seg.steer = cand.steers[i];
        seg.gear = p >= 0.0 ? 1 : -1;
        seg.extent = (cand.steers[i] == Steer::Straight) ? std::abs(p) / kappa : std::abs(p);
        path.segments.push_back(seg);
    }
    path.total_length = cand.length / kappa;
    return path;
}

std::optional<RSPath> mode_rs(const Pose& start, const Pose& goal, MotionMode mode,
                              const RobotParams& params, double eps_parallel) {
    switch (mode) {
        case MotionMode::Ackermann: {
            const Pose rel = relative_pose(start, goal);
            RSPath p = rs_shortest({rel.x, rel.y, rel.theta},
                                   max_curvature(params, MotionMode::Ackermann));
            p.mode = MotionMode::Ackermann;
            return p;
        }
        case MotionMode::Lateral: {
            const Pose rel = relative_pose(lateral_in(start), lateral_in(goal));
            RSPath p = rs_shortest({rel.x, rel.y, rel.theta},
                                   max_curvature(params, MotionMode::Lateral));
            p.mode = MotionMode::Lateral;
            return p;
        }
        case MotionMode::Parallel: {
            if (std::abs(angle_diff(start.theta, goal.theta)) > eps_parallel)
                return std::nullopt;
            RSPath p;
            p.mode = MotionMode::Parallel;
            p.curvature = 0.0;
            const Vec2 d{goal.x - start.x, goal.y - start.y};
            p.total_length = d.norm();
            if (p.total_length > 0.0) {
                p.translate_dir = wrap_to_pi(std::atan2(d.y, d.x) - start.theta);
                p.segments.push_back({Steer::Straight, 1, p.total_length});
            }
            return p;
        }
    }
    return std::nullopt;
}

std::vector<RSSample> sample_path_detailed(const RSPath& path, const Pose& start,
                                           double step) {
    std::vector<RSSample> out;
    out.push_back({start, path.segments.empty() ? 1 : path.segments.front().gear, 0.0});
    if (path.segments.empty()) return out;

    if (path.mode == MotionMode::Parallel) {
        const double heading = start.theta + path.translate_dir;
        const Vec2 dir{std::cos(heading), std::sin(heading)};
        const double len = path.total_length;
        const int n = std::max(1, static_cast<int>(std::ceil(len / step)));
        for (int k = 1; k <= n; ++k) {
            const double s = len * k / n;
            out.push_back({{start.x + s * dir.x, start.y + s * dir.y, start.theta}, 1, s});
        }
        return out;
    }

    const bool lateral = path.mode == MotionMode::Lateral;
    Pose cursor = lateral ? lateral_in(start) : start;
    double cum = 0.0;
    for (const RSSegment& seg : path.segments) {
        const double seg_len =
            (seg.steer == Steer::Straight) ? seg.extent : seg.extent / path.curvature;
        if (seg_len <= 0.0) continue;
        const int n = std::max(1, static_cast<int>(std::ceil(seg_len / step)));
        for (int k = 1; k <= n; ++k) {
            const double frac = static_cast<double>(k) / n;
            Pose p = advance(cursor, seg.steer, seg.gear * seg.extent * frac, path.curvature);
            out.push_back({lateral ? lateral_out(p) : p, seg.gear, cum + seg_len * frac});
        }
        cursor = advance(cursor, seg.steer, seg.gear * seg.extent, path.curvature);
        cum += seg_len;
    }
    return out;
}

std::vector<Pose> sample_path(const RSPath& path, const Pose& start, double step) {
    std::vector<Pose> poses;
    for (const RSSample& s : sample_path_detailed(path, start, step)) poses.push_back(s.pose);
    return poses;
}

Pose rs_endpoint(const RSPath& path, const Pose& start) {
    if (path.segments.empty()) return start;
    if (path.mode == MotionMode::Parallel) {
        const double heading = start.theta + path.translate_dir;
        return {start.x + path.total_length * std::cos(heading),
                start.y + path.total_length * std::sin(heading), start.theta};
    }
    const bool lateral = path.mode == MotionMode::Lateral;
    Pose cursor = lateral ? lateral_in(start) : start;
    for (const RSSegment& seg : path.segments)
        cursor = advance(cursor, seg.steer, seg.gear * seg.extent, path.curvature);
    return lateral ? lateral_out(cursor) : cursor;
}

}  // namespace fourwis
