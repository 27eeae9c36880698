#pragma once

#include <string>

#include "tropbraid/braid_motion.hpp"
#include "tropbraid/invariant.hpp"
#include "tropbraid/labeling.hpp"
#include "tropbraid/sphere_geom.hpp"

namespace tropbraid {

// JSON file formats (readers throw FileFormatError on malformed input):
//   configuration   [[x,y,z], ...]
//   triangulation   {"n":..., "faces":[[a,b,c],...], "edge_count":...}
//   motion plan     {"n":..., "trajectories":[[[t,[x,y,z]],...],...]}
//   flip sequence   {"events":[{"t":...,"flipped":"u-v","created":"u-v"},...]}
//   labels          {"u-v":"p/q", ...}
//   invariant       {"n":..., "edges":["u-v",...], "labels":["p/q",...]}
// Writers emit a stable field and key order, so identical values give
// byte-identical files.

Configuration read_configuration(const std::string& path);
void write_configuration(const Configuration& c, const std::string& path);

Triangulation read_triangulation(const std::string& path);
void write_triangulation(const Triangulation& t, const std::string& path);

MotionPlan read_motion_plan(const std::string& path);
void write_motion_plan(const MotionPlan& plan, const std::string& path);

void write_flip_sequence(const FlipSequence& seq, const std::string& path);

LabelMap read_label_map(const std::string& path);
void write_label_map(const LabelMap& labels, const std::string& path);

InvariantVector read_invariant(const std::string& path);
void write_invariant(const InvariantVector& v, const std::string& path);

// tab-separated exports of the same payloads (one row per point / face /
// event / edge)
std::string to_tsv(const Configuration& c);
std::string to_tsv(const Triangulation& t);
std::string to_tsv(const FlipSequence& seq);
std::string to_tsv(const InvariantVector& v);

void write_text(const std::string& text, const std::string& path);

} // namespace tropbraid
