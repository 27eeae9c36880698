#include "tropbraid/braid_motion.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include "tropbraid/rng.hpp"

namespace tropbraid {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt_time(double t) {
    std::ostringstream os;
    os.precision(17);
    os << t;
    return os.str();
}

double angle_between(const SpherePoint& a, const SpherePoint& b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

} // namespace

SpherePoint slerp(const SpherePoint& a, const SpherePoint& b, double s) {
    if (s <= 0) return a;
    if (s >= 1) return b;
    const double omega = angle_between(a, b);
    if (omega < 1e-15) return a;
    const double so = std::sin(omega);
    const double wa = std::sin((1 - s) * omega) / so;
    const double wb = std::sin(s * omega) / so;
    return {wa * a.x + wb * b.x, wa * a.y + wb * b.y, wa * a.z + wb * b.z};
}

SpherePoint rotate(const SpherePoint& v, const SpherePoint& u, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    const SpherePoint uxv = cross(u, v);
    const double ud = dot(u, v) * (1 - c);
    return {v.x * c + uxv.x * s + u.x * ud, v.y * c + uxv.y * s + u.y * ud,
            v.z * c + uxv.z * s + u.z * ud};
}

SpherePoint Trajectory::at(double t) const {
    const auto& kfs = keyframes;
    if (kfs.empty()) throw MotionError("trajectory has no keyframes");
    if (t <= kfs.front().t) return kfs.front().p;
    if (t >= kfs.back().t) return kfs.back().p;
    // last keyframe with time <= t
    size_t lo = 0, hi = kfs.size() - 1;
    while (lo + 1 < hi) {
        const size_t mid = (lo + hi) / 2;
        if (kfs[mid].t <= t) lo = mid;
        else hi = mid;
    }
    if (t == kfs[lo].t) return kfs[lo].p; // bitwise at keyframes
    const double span = kfs[hi].t - kfs[lo].t;
    return slerp(kfs[lo].p, kfs[hi].p, (t - kfs[lo].t) / span);
}

Configuration eval(const MotionPlan& plan, double t) {
    std::vector<SpherePoint> pts;
    pts.reserve(plan.trajectories.size());
    for (const Trajectory& tr : plan.trajectories) pts.push_back(tr.at(t));
    return Configuration::from_raw(std::move(pts));
}

std::vector<int> strand_permutation(const MotionPlan& plan, double tol) {
    const int n = plan.n();
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        const SpherePoint end = plan.trajectories[i].keyframes.back().p;
        int best = -1;
        double best_d = tol;
        for (int j = 0; j < n; ++j) {
            const double d = dist(end, plan.trajectories[j].keyframes.front().p);
            if (d <= best_d) {
                best = j;
                best_d = d;
            }
        }
        if (best < 0)
            throw MotionError("trajectory " + std::to_string(i + 1) +
                              " does not end at any start point: not a loop");
        if (used[best])
            throw MotionError("two trajectories end at start point " +
                              std::to_string(best + 1) + ": not a loop");
        used[best] = true;
        perm[i] = best;
    }
    return perm;
}

void validate_plan(const MotionPlan& plan, double eps_geo) {
    if (plan.n() == 0) throw MotionError("plan has no trajectories");
    std::set<double> times;
    for (int i = 0; i < plan.n(); ++i) {
        const auto& kfs = plan.trajectories[i].keyframes;
        const std::string who = "trajectory " + std::to_string(i + 1);
        if (kfs.size() < 2)
            throw MotionError(who + " needs keyframes at t=0 and t=1");
        if (kfs.front().t != 0.0 || kfs.back().t != 1.0)
            throw MotionError(who + " must span t=0 to t=1 exactly");
        for (size_t k = 0; k < kfs.size(); ++k) {
            times.insert(kfs[k].t);
            if (k == 0) continue;
            if (!(kfs[k - 1].t < kfs[k].t))
                throw MotionError(who + ": keyframe times not strictly increasing");
            if (dot(normalized(kfs[k - 1].p), normalized(kfs[k].p)) <= -1.0 + 1e-9)
                throw MotionError(who + ": consecutive keyframes are antipodal");
        }
    }
    strand_permutation(plan); // throws unless the loop closes as a set

    for (int k = 0; k <= 256; ++k) times.insert(k / 256.0);
    for (double t : times) {
        const Configuration c = eval(plan, t);
        for (int i = 0; i < c.n(); ++i)
            for (int j = i + 1; j < c.n(); ++j)
                if (dist(c.points[i], c.points[j]) <= eps_geo)
                    throw MotionError("points " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " collide at t=" +
                                      fmt_time(t));
    }
}

BraidWord parse_braid_word(const std::string& text, int n) {
    if (n < 1) throw IndexOutOfRange("strand count must be positive");
    BraidWord w;
    w.n = n;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const size_t start = i;
        if (text[i] != 's')
            throw ParseError("expected 's' at position " + std::to_string(start));
        ++i;
        const size_t d0 = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == d0)
            throw ParseError("expected generator index at position " +
                             std::to_string(d0));
        int gi = 0;
        try {
            gi = std::stoi(text.substr(d0, i - d0));
        } catch (const std::exception&) {
            throw ParseError("generator index too large at position " +
                             std::to_string(d0));
        }
        int sign = 1;
        if (text.compare(i, 3, "^-1") == 0) {
            sign = -1;
            i += 3;
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError("unexpected character at position " + std::to_string(i));
        if (gi < 1 || gi > n - 1)
            throw IndexOutOfRange("generator s" + std::to_string(gi) +
                                  " out of range 1.." + std::to_string(n - 1) +
                                  " at position " + std::to_string(start));
        w.letters.emplace_back(gi, sign);
    }
    return w;
}

std::vector<int> word_permutation(const BraidWord& w) {
    std::vector<int> strand_at(w.n); // strand occupying each slot
    for (int i = 0; i < w.n; ++i) strand_at[i] = i;
    for (const auto& [gi, sign] : w.letters)
        std::swap(strand_at[gi - 1], strand_at[gi]);
    std::vector<int> perm(w.n);
    for (int slot = 0; slot < w.n; ++slot) perm[strand_at[slot]] = slot;
    return perm;
}

MotionPlan word_to_motion(const BraidWord& w, std::uint64_t seed) {
    const int n = w.n;
    if (n < 2) throw LayoutError("layout needs at least 2 strands");

    // base points on the latitude-45 circle; the jitter breaks the mirror
    // symmetry of the regular layout, which would otherwise schedule
    // mirror-image cocircularity events simultaneously
    Rng rng(seed);
    std::vector<SpherePoint> base(n);
    for (int i = 0; i < n; ++i) {
        const double theta = kPi / 4 + rng.uniform(-1e-3, 1e-3);
        const double phi = 2 * kPi * i / n + rng.uniform(-1e-3, 1e-3);
        base[i] = {std::sin(theta) * std::cos(phi),
                   std::sin(theta) * std::sin(phi), std::cos(theta)};
    }

    MotionPlan plan;
    plan.trajectories.resize(n);
    std::vector<int> strand_at(n);
    for (int i = 0; i < n; ++i) {
        strand_at[i] = i;
        plan.trajectories[i].keyframes.push_back({0.0, base[i]});
    }

    const int L = static_cast<int>(w.letters.size());
    constexpr int K = 8; // sub-keyframes per letter slot
    for (int l = 0; l < L; ++l) {
        const auto [gi, sign] = w.letters[l];
        const int ja = gi - 1, jb = gi; // slots being swapped
        const int sa = strand_at[ja], sb = strand_at[jb];
        const SpherePoint pa = base[ja], pb = base[jb];
        const SpherePoint axis =
            normalized({pa.x + pb.x, pa.y + pb.y, pa.z + pb.z});
        const double orbit = angle_between(pa, axis);
        for (int s = 0; s < n; ++s) {
            if (s == ja || s == jb) continue;
            if (angle_between(base[s], axis) <= 1.25 * orbit)
                throw LayoutError("letter " + std::to_string(l + 1) + " (s" +
                                  std::to_string(gi) + "): swap cap is not "
                                  "disjoint from point " + std::to_string(s + 1));
        }
        for (int k = 1; k < K; ++k) {
            const double ang = sign * kPi * k / K;
            const double t = (l + static_cast<double>(k) / K) / L;
            plan.trajectories[sa].keyframes.push_back({t, rotate(pa, axis, ang)});
            plan.trajectories[sb].keyframes.push_back({t, rotate(pb, axis, ang)});
        }
        // a half-turn about the midpoint axis exchanges the base points;
        // snap to them so slot boundaries are bitwise reproducible
        const double tend = static_cast<double>(l + 1) / L;
        plan.trajectories[sa].keyframes.push_back({tend, pb});
        plan.trajectories[sb].keyframes.push_back({tend, pa});
        std::swap(strand_at[ja], strand_at[jb]);
    }

    for (int i = 0; i < n; ++i) {
        auto& kfs = plan.trajectories[i].keyframes;
        if (kfs.back().t < 1.0) kfs.push_back({1.0, kfs.back().p});
    }
    validate_plan(plan);
    return plan;
}

namespace {

// probe the hull at t, nudging the time deterministically when the
// configuration is exactly degenerate there
Triangulation probe(const MotionPlan& plan, double t, double dt_min) {
    static constexpr double offsets[] = {0, 1, -1, 2, -2, 4, -4, 8, -8};
    std::string last;
    for (double o : offsets) {
        const double tt = t + o * (dt_min / 64.0);
        if (tt < 0 || tt > 1) continue;
        try {
            return hull_triangulation(eval(plan, tt));
        } catch (const GeneralPositionViolation& ex) {
            last = ex.what();
        }
    }
    throw NonGenericMotion("degenerate configuration at every probe near t=" +
                           fmt_time(t) + "; last: " + last);
}

std::optional<std::pair<Edge, Edge>> single_flip_diff(const Triangulation& t1,
                                                      const Triangulation& t2) {
    const auto e1 = t1.edges(), e2 = t2.edges();
    std::vector<Edge> gone, born;
    std::set_difference(e1.begin(), e1.end(), e2.begin(), e2.end(),
                        std::back_inserter(gone));
    std::set_difference(e2.begin(), e2.end(), e1.begin(), e1.end(),
                        std::back_inserter(born));
    if (gone.size() != 1 || born.size() != 1) return std::nullopt;
    try {
        auto [flipped, created] = apply_flip(t1, gone.front());
        if (flipped == t2 && created == born.front())
            return std::make_pair(gone.front(), born.front());
    } catch (const DataError&) {
    }
    return std::nullopt;
}

std::string non_generic_report(const MotionPlan& plan, double lo, double hi,
                               const Triangulation& t_lo,
                               const Triangulation& t_hi, double eps_geo) {
    std::ostringstream os;
    os << "change in (" << fmt_time(lo) << ", " << fmt_time(hi)
       << "] is not a single flip; differing edges:";
    const auto e1 = t_lo.edges(), e2 = t_hi.edges();
    std::vector<Edge> gone, born;
    std::set_difference(e1.begin(), e1.end(), e2.begin(), e2.end(),
                        std::back_inserter(gone));
    std::set_difference(e2.begin(), e2.end(), e1.begin(), e1.end(),
                        std::back_inserter(born));
    os << " removed";
    for (const Edge& e : gone) os << " " << to_string(e);
    os << "; added";
    for (const Edge& e : born) os << " " << to_string(e);
    const auto near = is_general_position(eval(plan, 0.5 * (lo + hi)),
                                          std::max(eps_geo, 1e-6));
    int quads = 0;
    for (const Violation& v : near)
        if (v.kind == Violation::Kind::CocircularQuadruple) {
            if (quads == 0) os << "; near-cocircular quadruples:";
            if (++quads > 8) break;
            os << " " << to_string(v);
        }
    return os.str();
}

} // namespace

namespace {

// Scan times: every keyframe time of every trajectory, each interval between
// consecutive keyframe times filled with steps of dt anchored at its left end.
// Velocity kinks live at keyframe times, so a flip-and-back pair around a kink
// always has a sample between its two events; the anchored offsets make the
// dt/2 grid a superset of the dt grid, so refining never merges windows.
std::vector<double> scan_grid(const MotionPlan& plan, double dt) {
    std::set<double> anchors{0.0, 1.0};
    for (const Trajectory& tr : plan.trajectories)
        for (const Keyframe& k : tr.keyframes) anchors.insert(k.t);
    std::vector<double> grid;
    auto it = anchors.begin();
    for (double a = *it++; it != anchors.end(); a = *it++) {
        grid.push_back(a);
        for (int j = 1; a + j * dt < *it; ++j) grid.push_back(a + j * dt);
    }
    grid.push_back(1.0);
    return grid;
}

} // namespace

FlipSequence detect_flip_events(const MotionPlan& plan, double eps_geo,
                                double dt_init, double dt_min) {
    if (!(eps_geo > 0) || !(dt_init > 0) || !(dt_min > 0) || !(dt_min < dt_init))
        throw MotionError("need 0 < dt_min < dt_init and eps > 0");
    validate_plan(plan, eps_geo);

    FlipSequence seq;
    Triangulation t_cur = delaunay(eval(plan, 0), eps_geo);
    const Triangulation t_end = delaunay(eval(plan, 1), eps_geo);
    seq.triangulations.push_back(t_cur);

    const std::vector<double> grid = scan_grid(plan, dt_init);
    double prev_event_hi = -1; // right end of the last event's bracket
    for (size_t gi = 1; gi < grid.size(); ++gi) {
        const double wend = grid[gi];
        const Triangulation t_wend =
            wend == 1.0 ? t_end : probe(plan, wend, dt_min);
        double cur = grid[gi - 1];
        while (!(t_wend == t_cur)) {
            // bisect to the first change in (cur, wend]
            double lo = cur, hi = wend;
            Triangulation t_hi = t_wend;
            while (hi - lo > dt_min) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break; // double resolution floor
                Triangulation t_mid = probe(plan, mid, dt_min);
                if (t_mid == t_cur) {
                    lo = mid;
                } else {
                    hi = mid;
                    t_hi = std::move(t_mid);
                }
            }
            const auto diff = single_flip_diff(t_cur, t_hi);
            if (!diff)
                throw NonGenericMotion(
                    non_generic_report(plan, lo, hi, t_cur, t_hi, eps_geo));

            // events closer than the bisection floor cannot be ordered
            if (prev_event_hi >= 0 && lo - prev_event_hi < dt_min)
                throw NonGenericMotion(
                    "flip of " + to_string(diff->first) + " at t=" +
                    fmt_time(0.5 * (lo + hi)) +
                    " is within dt_min of the previous flip: cocircular "
                    "quadruples cannot be ordered at this resolution");

            // the flip's quadruple must actually pass through cocircularity
            const Quad q = edge_quad(t_cur, diff->first);
            const Configuration c_lo = eval(plan, lo), c_hi = eval(plan, hi);
            const auto sign_at = [&q](const Configuration& c) {
                return coplanarity_sign(c.points[q.corners[0] - 1],
                                        c.points[q.corners[1] - 1],
                                        c.points[q.corners[2] - 1],
                                        c.points[q.corners[3] - 1]);
            };
            const int s_lo = sign_at(c_lo), s_hi = sign_at(c_hi);
            if (s_lo == s_hi && s_lo != 0)
                throw NonGenericMotion(
                    "flip of " + to_string(diff->first) + " localized to (" +
                    fmt_time(lo) + ", " + fmt_time(hi) +
                    "] but its quadruple's determinant does not change sign");

            seq.events.push_back({0.5 * (lo + hi), diff->first, diff->second});
            seq.triangulations.push_back(t_hi);
            t_cur = std::move(t_hi);
            cur = hi;
            prev_event_hi = hi;
        }
    }

    if (seq.triangulations.back() != t_end)
        throw NonGenericMotion("scan ended away from the t=1 triangulation");
    return seq;
}

SimplifyReport simplify_check(const FlipSequence& seq) {
    SimplifyReport rep;
    rep.length = static_cast<int>(seq.events.size());

    // adjacent involution pairs cancel (stack reduction)
    std::vector<FlipEvent> stack;
    for (const FlipEvent& ev : seq.events) {
        if (!stack.empty() && stack.back().created == ev.flipped &&
            stack.back().flipped == ev.created) {
            stack.pop_back();
            ++rep.involution_pairs;
        } else {
            stack.push_back(ev);
        }
    }
    rep.reduced_length = static_cast<int>(stack.size());

    for (size_t k = 0; k + 1 < seq.events.size(); ++k) {
        const Triangulation& t = seq.triangulations[k];
        const Edge& e1 = seq.events[k].flipped;
        const Edge& e2 = seq.events[k + 1].flipped;
        if (!t.has_edge(e2)) continue;
        try {
            if (are_far(t, e1, e2)) ++rep.far_adjacent_pairs;
        } catch (const DataError&) {
        }
    }

    // pentagon pattern: five flips where each created diagonal is flipped two
    // steps later and the last two flips recreate the first two diagonals
    const auto& ev = seq.events;
    for (size_t k = 0; k + 5 <= ev.size(); ++k) {
        const bool chain = ev[k + 2].flipped == ev[k].created &&
                           ev[k + 3].flipped == ev[k + 1].created &&
                           ev[k + 4].flipped == ev[k + 2].created &&
                           ev[k + 3].created == ev[k].flipped &&
                           ev[k + 4].created == ev[k + 1].flipped;
        if (chain && seq.triangulations[k] == seq.triangulations[k + 5])
            ++rep.pentagon_cycles;
    }

    std::ostringstream os;
    os << "reduced length after cancelling " << rep.involution_pairs
       << " involution pair(s): " << rep.reduced_length << "\n"
       << "adjacent far-commuting pairs: " << rep.far_adjacent_pairs << "\n"
       << "pentagon 5-cycles: " << rep.pentagon_cycles << "\n";
    rep.text = os.str();
    return rep;
}

MotionPlan reparametrize(const MotionPlan& plan,
                         const std::function<double(double)>& warp) {
    MotionPlan out = plan;
    for (Trajectory& tr : out.trajectories) {
        for (Keyframe& kf : tr.keyframes) kf.t = warp(kf.t);
        if (tr.keyframes.front().t != 0.0 || tr.keyframes.back().t != 1.0)
            throw MotionError("time warp must fix t=0 and t=1");
        for (size_t k = 1; k < tr.keyframes.size(); ++k)
            if (!(tr.keyframes[k - 1].t < tr.keyframes[k].t))
                throw MotionError("time warp must be strictly increasing");
    }
    return out;
}

MotionPlan jitter_keyframes(const MotionPlan& plan, double magnitude,
                            std::uint64_t seed) {
    Rng rng(seed);
    MotionPlan out = plan;
    for (Trajectory& tr : out.trajectories)
        for (size_t k = 1; k + 1 < tr.keyframes.size(); ++k) {
            SpherePoint& p = tr.keyframes[k].p;
            const SpherePoint d{rng.uniform(-magnitude, magnitude),
                                rng.uniform(-magnitude, magnitude),
                                rng.uniform(-magnitude, magnitude)};
            p = normalized({p.x + d.x, p.y + d.y, p.z + d.z});
        }
    return out;
}

} // namespace tropbraid
