#include "tropbraid/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tropbraid {

namespace {

using Json = nlohmann::ordered_json;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileFormatError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& ex) {
        throw FileFormatError(path + ": " + ex.what());
    }
}

void dump_json(const Json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FileFormatError("cannot write " + path);
    out << j.dump(2) << "\n";
}

SpherePoint point_from(const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() ||
        !j[1].is_number() || !j[2].is_number())
        throw FileFormatError(path + ": point must be [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Json point_to(const SpherePoint& p) { return Json::array({p.x, p.y, p.z}); }

std::string fmt17(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

Configuration read_configuration(const std::string& path) {
    const Json j = load_json(path);
    if (!j.is_array())
        throw FileFormatError(path + ": expected a list of [x, y, z] triples");
    std::vector<SpherePoint> pts;
    pts.reserve(j.size());
    for (const Json& p : j) pts.push_back(point_from(p, path));
    try {
        return Configuration::from_raw(std::move(pts));
    } catch (const GeometryError& ex) {
        throw FileFormatError(path + ": " + ex.what());
    }
}

void write_configuration(const Configuration& c, const std::string& path) {
    Json j = Json::array();
    for (const SpherePoint& p : c.raw) j.push_back(point_to(p));
    dump_json(j, path);
}

Triangulation read_triangulation(const std::string& path) {
    const Json j = load_json(path);
    if (!j.is_object() || !j.contains("faces") || !j["faces"].is_array())
        throw FileFormatError(path + ": expected {\"faces\": [[a,b,c], ...]}");
    std::vector<Face> faces;
    for (const Json& f : j["faces"]) {
        if (!f.is_array() || f.size() != 3)
            throw FileFormatError(path + ": face must be [a, b, c]");
        faces.push_back(Face{f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
    return Triangulation::from_faces(std::move(faces));
}

void write_triangulation(const Triangulation& t, const std::string& path) {
    Json j;
    j["n"] = t.vertex_count();
    Json faces = Json::array();
    for (const Face& f : t.faces())
        faces.push_back(Json::array({f[0], f[1], f[2]}));
    j["faces"] = std::move(faces);
    j["edge_count"] = t.edges().size();
    dump_json(j, path);
}

MotionPlan read_motion_plan(const std::string& path) {
    const Json j = load_json(path);
    if (!j.is_object() || !j.contains("n") || !j.contains("trajectories") ||
        !j["trajectories"].is_array())
        throw FileFormatError(path +
                              ": expected {\"n\":..., \"trajectories\":[...]}");
    MotionPlan plan;
    for (const Json& traj : j["trajectories"]) {
        if (!traj.is_array())
            throw FileFormatError(path + ": trajectory must be a keyframe list");
        Trajectory tr;
        for (const Json& kf : traj) {
            if (!kf.is_array() || kf.size() != 2 || !kf[0].is_number())
                throw FileFormatError(path + ": keyframe must be [t, [x,y,z]]");
            tr.keyframes.push_back(
                {kf[0].get<double>(), point_from(kf[1], path)});
        }
        plan.trajectories.push_back(std::move(tr));
    }
    if (plan.n() != j["n"].get<int>())
        throw FileFormatError(path + ": n does not match the trajectory count");
    return plan;
}

void write_motion_plan(const MotionPlan& plan, const std::string& path) {
    Json j;
    j["n"] = plan.n();
    Json trajs = Json::array();
    for (const Trajectory& tr : plan.trajectories) {
        Json kfs = Json::array();
        for (const Keyframe& kf : tr.keyframes)
            kfs.push_back(Json::array({kf.t, point_to(kf.p)}));
        trajs.push_back(std::move(kfs));
    }
    j["trajectories"] = std::move(trajs);
    dump_json(j, path);
}

void write_flip_sequence(const FlipSequence& seq, const std::string& path) {
    Json j;
    Json events = Json::array();
    for (const FlipEvent& ev : seq.events) {
        Json e;
        e["t"] = ev.t;
        e["flipped"] = to_string(ev.flipped);
        e["created"] = to_string(ev.created);
        events.push_back(std::move(e));
    }
    j["events"] = std::move(events);
    dump_json(j, path);
}

LabelMap read_label_map(const std::string& path) {
    const Json j = load_json(path);
    if (!j.is_object())
        throw FileFormatError(path + ": expected {\"u-v\": \"p/q\", ...}");
    LabelMap labels;
    for (const auto& [key, val] : j.items()) {
        const Edge e = parse_edge(key);
        if (!val.is_string())
            throw FileFormatError(path + ": label of " + key +
                                  " must be a rational string");
        const auto [_, fresh] =
            labels.emplace(e, TropicalValue(parse_rational(val.get<std::string>())));
        if (!fresh)
            throw FileFormatError(path + ": duplicate label for edge " +
                                  to_string(e));
    }
    return labels;
}

void write_label_map(const LabelMap& labels, const std::string& path) {
    Json j = Json::object();
    for (const auto& [e, lab] : labels) // map order = lexicographic
        j[to_string(e)] = format_rational(lab.value);
    dump_json(j, path);
}

InvariantVector read_invariant(const std::string& path) {
    const Json j = load_json(path);
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j.contains("labels"))
        throw FileFormatError(
            path + ": expected {\"n\":..., \"edges\":[...], \"labels\":[...]}");
    InvariantVector v;
    v.n = j["n"].get<int>();
    for (const Json& e : j["edges"]) v.edges.push_back(parse_edge(e.get<std::string>()));
    for (const Json& s : j["labels"])
        v.labels.emplace_back(parse_rational(s.get<std::string>()));
    if (v.edges.size() != v.labels.size())
        throw FileFormatError(path + ": edges and labels differ in length");
    return v;
}

void write_invariant(const InvariantVector& v, const std::string& path) {
    Json j;
    j["n"] = v.n;
    Json edges = Json::array(), labels = Json::array();
    for (const Edge& e : v.edges) edges.push_back(to_string(e));
    for (const TropicalValue& lab : v.labels)
        labels.push_back(format_rational(lab.value));
    j["edges"] = std::move(edges);
    j["labels"] = std::move(labels);
    dump_json(j, path);
}

std::string to_tsv(const Configuration& c) {
    std::string out;
    for (const SpherePoint& p : c.raw)
        out += fmt17(p.x) + "\t" + fmt17(p.y) + "\t" + fmt17(p.z) + "\n";
    return out;
}

std::string to_tsv(const Triangulation& t) {
    std::string out;
    for (const Face& f : t.faces())
        out += std::to_string(f[0]) + "\t" + std::to_string(f[1]) + "\t" +
               std::to_string(f[2]) + "\n";
    return out;
}

std::string to_tsv(const FlipSequence& seq) {
    std::string out;
    for (const FlipEvent& ev : seq.events)
        out += fmt17(ev.t) + "\t" + to_string(ev.flipped) + "\t" +
               to_string(ev.created) + "\n";
    return out;
}

std::string to_tsv(const InvariantVector& v) {
    std::string out;
    for (size_t i = 0; i < v.edges.size(); ++i)
        out += to_string(v.edges[i]) + "\t" + format_rational(v.labels[i].value) +
               "\n";
    return out;
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FileFormatError("cannot write " + path);
    out << text;
}

} // namespace tropbraid
