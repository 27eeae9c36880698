#pragma once

#include <stdexcept>
#include <string>

namespace tropbraid {

// Error categories map one-to-one onto CLI exit codes:
//   GeometryError -> 2, MotionError -> 3, DataError -> 4.

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MotionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// complex / labeling
struct MissingEdge : DataError {
    using DataError::DataError;
};
struct DegenerateQuad : DataError {
    using DataError::DataError;
};
struct DuplicateEdge : DataError {
    using DataError::DataError;
};
struct NotFar : DataError {
    using DataError::DataError;
};

// sphere_geom
struct DegenerateFace : GeometryError {
    using GeometryError::GeometryError;
};

// braid_motion
struct NonGenericMotion : MotionError {
    using MotionError::MotionError;
};
struct LayoutError : MotionError {
    using MotionError::MotionError;
};
struct ParseError : DataError {
    using DataError::DataError;
};
struct IndexOutOfRange : DataError {
    using DataError::DataError;
};

// invariant_engine / io
struct FileFormatError : DataError {
    using DataError::DataError;
};
struct MissingEdgeLabel : DataError {
    using DataError::DataError;
};
struct ShapeMismatch : DataError {
    using DataError::DataError;
};

} // namespace tropbraid
