#include "facediv/manifest.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace facediv {

namespace {

using nlohmann::json;

Point2 parse_point(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::runtime_error("keypoint must be an [x, y] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<double> load_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open vector file: " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    // Accept either a JSON array or whitespace-separated numbers.
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        return json::parse(text).get<std::vector<double>>();
    }
    std::vector<double> values;
    std::istringstream ss(text);
    double v;
    while (ss >> v) values.push_back(v);
    return values;
}

ManifestRecord parse_record(const json& j) {
    ManifestRecord rec;
    FaceRecord& f = rec.face;

    f.face_id = j.at("face_id").get<std::string>();
    if (f.face_id.empty() || f.face_id.find_first_of(",\"\n\r") != std::string::npos) {
        throw std::runtime_error("face_id must be non-empty and free of CSV metacharacters");
    }
    f.image_path = j.at("image_path").get<std::string>();

    const json& bb = j.at("bbox");
    if (!bb.is_array() || bb.size() != 4) {
        throw std::runtime_error("bbox must be [x, y, width, height]");
    }
    f.bbox = {bb[0].get<double>(), bb[1].get<double>(), bb[2].get<double>(), bb[3].get<double>()};
    if (!(f.bbox.width > 0.0) || !(f.bbox.height > 0.0)) {
        throw std::runtime_error("bbox width and height must be positive");
    }

    const json& kp = j.at("keypoints");
    if (!kp.is_array() || kp.size() != 68) {
        throw std::runtime_error("keypoints must hold exactly 68 points, got " +
                                 std::to_string(kp.size()));
    }
    for (std::size_t i = 0; i < 68; ++i) {
        f.keypoints[i] = parse_point(kp[i]);
        if (!std::isfinite(f.keypoints[i].x) || !std::isfinite(f.keypoints[i].y)) {
            throw std::runtime_error("keypoint " + std::to_string(i) + " is not finite");
        }
    }

    f.pose_class = j.at("pose_class").get<int>();
    if (f.pose_class < 0 || f.pose_class > 4) {
        throw std::runtime_error("pose_class must be in 0..4");
    }

    if (j.contains("mask_path")) rec.mask_path = j["mask_path"].get<std::string>();

    AuxAnnotations aux;
    bool has_aux = false;
    if (j.contains("age_softmax")) {
        aux.age_softmax = j["age_softmax"].get<std::vector<double>>();
        has_aux = true;
    } else if (j.contains("age_softmax_path")) {
        aux.age_softmax = load_vector_file(j["age_softmax_path"].get<std::string>());
        has_aux = true;
    }
    if (aux.age_softmax && aux.age_softmax->size() != 101) {
        throw std::runtime_error("age_softmax must have 101 entries");
    }
    if (j.contains("gender_score")) {
        aux.gender_score = j["gender_score"].get<double>();
        has_aux = true;
    }
    if (j.contains("votes")) {
        std::vector<Vote> votes;
        for (const auto& vj : j["votes"]) {
            Vote v;
            v.annotator_id = vj.value("annotator_id", "");
            const std::string g = vj.at("gender").get<std::string>();
            if (g == "male") {
                v.gender = GenderLabel::male;
            } else if (g == "female") {
                v.gender = GenderLabel::female;
            } else {
                throw std::runtime_error("vote gender must be 'male' or 'female'");
            }
            v.age_group = vj.at("age_group").get<int>();
            if (v.age_group < 0 || v.age_group >= kAgeGroupCount) {
                throw std::runtime_error("vote age_group must be in 0..6");
            }
            v.age_value = vj.at("age_value").get<double>();
            v.weight = vj.at("weight").get<double>();
            if (v.weight < 0.0 || v.weight > 1.0) {
                throw std::runtime_error("vote weight must be in [0,1]");
            }
            votes.push_back(std::move(v));
        }
        aux.votes = std::move(votes);
        has_aux = true;
    }
    if (has_aux) f.aux = std::move(aux);
    return rec;
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
    Manifest m;
    std::set<std::string> seen_ids;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ManifestParse(line_no, std::string("invalid JSON: ") + e.what());
        }
        try {
            ManifestRecord rec = parse_record(j);
            if (!seen_ids.insert(rec.face.face_id).second) {
                throw std::runtime_error("duplicate face_id '" + rec.face.face_id + "'");
            }
            m.records.push_back(std::move(rec));
        } catch (const std::exception& e) {
            throw ManifestParse(line_no, e.what());
        }
    }
    return m;
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ManifestParse(0, "cannot open manifest: " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str());
}

}  // namespace facediv
