#pragma once

#include <string>
#include <vector>

#include "facediv/record.hpp"

namespace facediv {

/// One manifest line: the face record plus pipeline-level attachments.
struct ManifestRecord {
    FaceRecord face;
    std::string mask_path;  // empty when no skin mask is provided
};

struct Manifest {
    std::vector<ManifestRecord> records;
};

/// Parses a line-delimited JSON manifest. Validation failures throw
/// ManifestParse with the offending 1-based line number: malformed JSON,
/// missing fields, keypoint count != 68, non-positive bbox, pose class
/// outside 0..4, duplicate face_id, or a softmax that is no distribution.
Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::string& path);

}  // namespace facediv
