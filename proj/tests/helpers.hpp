// Shared fixtures for the test binaries: hand-built motion plans with known
// event structure, and a tiny subprocess harness for exercising the CLI.
#pragma once

#include <tropbraid/braid_motion.hpp>
#include <tropbraid/rng.hpp>
#include <tropbraid/sphere_geom.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace testutil {

inline tropbraid::SpherePoint sph(double colat, double lon) {
    return {std::sin(colat) * std::cos(lon), std::sin(colat) * std::sin(lon),
            std::cos(colat)};
}

inline tropbraid::Trajectory still(tropbraid::SpherePoint p) {
    return {{{0.0, p}, {1.0, p}}};
}

// Five points on the colatitude-0.5 circle plus two southern spectators.
// A rotating radial wobble (second harmonic, so the innermost vertex steps
// by +2 and each transition is a single flip) drives the cap diagonals
// around one full pentagon cycle: exactly 5 flip events that return the
// triangulation to its start.
inline tropbraid::MotionPlan pentagon_plan(std::uint64_t seed) {
    using namespace tropbraid;
    const double pi = std::numbers::pi;
    Rng rng(seed);
    const double psi0 = rng.uniform(0.0, 2.0 * pi);
    double lon[5];
    for (int i = 0; i < 5; ++i)
        lon[i] = 2.0 * pi * i / 5.0 + rng.uniform(-0.02, 0.02);

    constexpr double kTheta0 = 0.5;
    constexpr double kAmp = 0.01;
    constexpr int kKeyframes = 64;

    MotionPlan plan;
    for (int i = 0; i < 5; ++i) {
        Trajectory traj;
        for (int j = 0; j <= kKeyframes; ++j) {
            const double t = static_cast<double>(j) / kKeyframes;
            const double th =
                kTheta0 + kAmp * std::cos(2.0 * pi * t + 4.0 * pi * i / 5.0 + psi0);
            traj.keyframes.push_back({t, sph(th, lon[i])});
        }
        plan.trajectories.push_back(std::move(traj));
    }
    const double spectators[2][2] = {{2.75, 1.0}, {2.95, 4.2}};
    for (const auto& s : spectators) {
        const double th = s[0] + rng.uniform(-0.05, 0.05);
        const double lo = s[1] + rng.uniform(-0.05, 0.05);
        plan.trajectories.push_back(still(sph(th, lo)));
    }
    return plan;
}

// n = 5: one mover dips into the circumcap of face (1,2,3) and retreats.
// Exactly two events: 2-3 -> 1-5 at t ~ 0.32 and the inverse flip at ~ 0.68.
// (A deeper dip, colatitude 0.9, also crosses circle(2,3,4) and yields four
// events; 1.55 stays between the two critical circles.)
inline tropbraid::MotionPlan in_and_out_plan() {
    using namespace tropbraid;
    MotionPlan plan;
    plan.trajectories.push_back(still(sph(0.02, 0.3)));
    plan.trajectories.push_back(still(sph(1.2, 0.05)));
    plan.trajectories.push_back(still(sph(1.2, 2.15)));
    plan.trajectories.push_back(still(sph(1.2, 4.25)));
    const SpherePoint rest = sph(2.5, 1.1), deep = sph(1.55, 1.13);
    plan.trajectories.push_back({{{0.0, rest}, {0.5, deep}, {1.0, rest}}});
    return plan;
}

// Two disjoint caps on the exact circles z = +-0.8 (3-4-5 coordinates).
// Each cap has three static points on its circle and a mover whose t = 0.5
// keyframe lies exactly ON the circle, so both cap diagonals flip within
// ~1e-16 of t = 0.5: a simultaneous double event no bisection can split.
inline tropbraid::MotionPlan double_event_plan() {
    using namespace tropbraid;
    const double pi = std::numbers::pi;
    MotionPlan plan;
    plan.trajectories.push_back(still({0.6, 0.0, 0.8}));
    plan.trajectories.push_back(still({0.0, 0.6, 0.8}));
    plan.trajectories.push_back(still({-0.6, 0.0, 0.8}));
    for (double psi : {0.7, 2.8, 4.9})
        plan.trajectories.push_back(
            still(normalized({0.6 * std::cos(psi), 0.6 * std::sin(psi), -0.8})));
    const SpherePoint pa{0.0, -0.6, 0.8};
    plan.trajectories.push_back({{{0.0, sph(0.70, -pi / 2)},
                                  {0.5, pa},
                                  {0.7, sph(0.58, -pi / 2 + 0.03)},
                                  {1.0, sph(0.70, -pi / 2)}}});
    const SpherePoint pb =
        normalized({0.6 * std::cos(5.9), 0.6 * std::sin(5.9), -0.8});
    plan.trajectories.push_back({{{0.0, sph(pi - 0.70, 5.9)},
                                  {0.5, pb},
                                  {0.7, sph(pi - 0.58, 5.93)},
                                  {1.0, sph(pi - 0.70, 5.9)}}});
    return plan;
}

// --- subprocess harness -----------------------------------------------

struct CmdResult {
    int exit_code = -1;
    std::string out; // stdout + stderr, in that order
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

// Scratch directory shared by one test binary; lives under the build dir.
inline std::string scratch_dir(const std::string& name) {
    const std::string dir = "scratch_" + name;
    std::filesystem::create_directories(dir);
    return dir;
}

inline CmdResult run_cmd(const std::string& cmd) {
    const std::string dir = scratch_dir("cmd");
    const std::string out_path = dir + "/stdout.txt";
    const std::string err_path = dir + "/stderr.txt";
    const int status =
        std::system((cmd + " > " + out_path + " 2> " + err_path).c_str());
    CmdResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_path) + slurp(err_path);
    return r;
}

} // namespace testutil
