#pragma once

#include <stdexcept>
#include <string>

namespace facediv {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Geometric input does not admit the requested construction
/// (coincident eye centers, collinear anchor points, inverted landmarks, ...).
struct DegenerateGeometry : Error {
    using Error::Error;
};

/// A polygonal region rasterized to zero pixels, or a masked region has
/// too few pixels to score.
struct EmptyRegion : Error {
    using Error::Error;
};

/// Every gradient magnitude in the image fell below the edge threshold.
struct NoEdges : Error {
    using Error::Error;
};

/// A ratio denominator is numerically too small to divide by.
struct NumericDegenerate : Error {
    using Error::Error;
};

/// A softmax vector does not describe a probability distribution.
struct InvalidDistribution : Error {
    using Error::Error;
};

/// An empty vote list cannot be aggregated.
struct NoVotes : Error {
    using Error::Error;
};

/// Record carries a pose class that should have been filtered out.
struct InvalidPose : Error {
    using Error::Error;
};

/// No finite values to bin.
struct EmptyInput : Error {
    using Error::Error;
};

/// Manifest is syntactically or structurally invalid. Fatal; carries the
/// 1-based line number of the offending record.
struct ManifestParse : Error {
    int line;
    ManifestParse(int line_, const std::string& msg)
        : Error("manifest line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// An image file could not be read or decoded. Per-record, non-fatal.
struct ImageRead : Error {
    using Error::Error;
};

/// Cannot build a report from a feature table with no rows.
struct EmptyTable : Error {
    using Error::Error;
};

}  // namespace facediv
