#include "facediv/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "facediv/image_io.hpp"

namespace facediv::synth {

namespace fs = std::filesystem;
using nlohmann::json;

KeypointSet68 canonical_keypoints() {
    // Mirror-symmetric about x = 64; integer coordinates by construction.
    static constexpr double pts[68][2] = {
        // jawline 0-16
        {24, 48},  {25, 58},  {27, 68},  {30, 78},  {34, 88},  {40, 97},  {47, 104}, {55, 109},
        {64, 111}, {73, 109}, {81, 104}, {88, 97},  {94, 88},  {98, 78},  {101, 68}, {103, 58},
        {104, 48},
        // brows 17-26
        {32, 40},  {38, 37},  {44, 36},  {50, 37},  {56, 40},  {72, 40},  {78, 37},  {84, 36},
        {90, 37},  {96, 40},
        // nose 27-35
        {64, 48},  {64, 56},  {64, 64},  {64, 72},  {56, 78},  {60, 79},  {64, 80},  {68, 79},
        {72, 78},
        // eyes 36-47
        {36, 48},  {41, 45},  {47, 45},  {52, 48},  {47, 51},  {41, 51},  {76, 48},  {81, 45},
        {87, 45},  {92, 48},  {87, 51},  {81, 51},
        // mouth outer 48-59
        {48, 92},  {53, 89},  {58, 87},  {64, 88},  {70, 87},  {75, 89},  {80, 92},  {75, 95},
        {70, 97},  {64, 98},  {58, 97},  {53, 95},
        // mouth inner 60-67
        {52, 92},  {58, 91},  {64, 91},  {70, 91},  {76, 92},  {70, 94},  {64, 95},  {58, 94},
    };
    KeypointSet68 k;
    for (int i = 0; i < 68; ++i) k[i] = {pts[i][0], pts[i][1]};
    return k;
}

KeypointSet68 transform_keypoints(const KeypointSet68& k, const Affine2& t) {
    KeypointSet68 out;
    for (std::size_t i = 0; i < 68; ++i) out[i] = t.apply(k[i]);
    return out;
}

Affine2 face_placement(Point2 center, double scale, double angle_radians) {
    const double ca = std::cos(angle_radians) * scale;
    const double sa = std::sin(angle_radians) * scale;
    Affine2 t;
    t.a = ca;
    t.b = -sa;
    t.c = sa;
    t.d = ca;
    // Canonical frame center (64, 64) maps onto `center`.
    t.tx = center.x - (t.a * 64.0 + t.b * 64.0);
    t.ty = center.y - (t.c * 64.0 + t.d * 64.0);
    return t;
}

namespace {

// Deterministic per-pixel noise keyed on (seed, x, y).
int noise_at(std::uint32_t seed, int x, int y, int amplitude) {
    std::uint32_t h = seed;
    h ^= static_cast<std::uint32_t>(x) * 0x9E3779B9u;
    h ^= static_cast<std::uint32_t>(y) * 0x85EBCA6Bu;
    h ^= h >> 13;
    h *= 0xC2B2AE35u;
    h ^= h >> 16;
    return static_cast<int>(h % (2u * amplitude + 1u)) - amplitude;
}

void fill_poly_rgb(ImageU8& img, const std::vector<Point2>& poly, std::uint8_t r, std::uint8_t g,
                   std::uint8_t b) {
    std::vector<std::uint8_t> mask;
    fill_polygon(poly, img.width, img.height, mask);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            if (!mask[static_cast<std::size_t>(y) * img.width + x]) continue;
            img.at(x, y, 0) = r;
            img.at(x, y, 1) = g;
            img.at(x, y, 2) = b;
        }
    }
}

std::vector<Point2> ring(const KeypointSet68& k, int first, int count) {
    std::vector<Point2> poly;
    for (int i = first; i < first + count; ++i) poly.push_back(k[i]);
    return poly;
}

}  // namespace

ImageU8 render_face(int width, int height, const KeypointSet68& k, const FaceStyle& style) {
    ImageU8 img(width, height, 3);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            img.at(x, y, 0) = 44;
            img.at(x, y, 1) = 46;
            img.at(x, y, 2) = 50;
        }
    }

    // Head ellipse from the keypoint extent, with room for the forehead.
    double min_x = k[0].x, max_x = k[0].x, min_y = k[0].y, max_y = k[0].y;
    for (int i = 0; i < 68; ++i) {
        min_x = std::min(min_x, k[i].x);
        max_x = std::max(max_x, k[i].x);
        min_y = std::min(min_y, k[i].y);
        max_y = std::max(max_y, k[i].y);
    }
    const double cx = (min_x + max_x) / 2.0;
    const double face_h = max_y - min_y;
    const double top = min_y - 0.55 * face_h;
    const double cy = (top + max_y) / 2.0;
    const double rx = (max_x - min_x) * 0.62;
    const double ry = (max_y - top) * 0.56;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double dx = (x - cx) / rx;
            const double dy = (y - cy) / ry;
            if (dx * dx + dy * dy <= 1.0) {
                img.at(x, y, 0) = style.skin_r;
                img.at(x, y, 1) = style.skin_g;
                img.at(x, y, 2) = style.skin_b;
            }
        }
    }

    // Nose shading strip along the bridge.
    const Point2 n = k[27], tip = k[30];
    const double nw = std::max(2.0, 0.08 * (max_x - min_x));
    fill_poly_rgb(img,
                  {{n.x - nw / 2, n.y}, {n.x + nw / 2, n.y},
                   {tip.x + nw, tip.y}, {tip.x - nw, tip.y}},
                  static_cast<std::uint8_t>(style.skin_r * 0.85),
                  static_cast<std::uint8_t>(style.skin_g * 0.85),
                  static_cast<std::uint8_t>(style.skin_b * 0.85));

    fill_poly_rgb(img, ring(k, 17, 5), style.hair_r, style.hair_g, style.hair_b);
    fill_poly_rgb(img, ring(k, 22, 5), style.hair_r, style.hair_g, style.hair_b);
    fill_poly_rgb(img, ring(k, 36, 6), 70, 50, 40);
    fill_poly_rgb(img, ring(k, 42, 6), 70, 50, 40);
    fill_poly_rgb(img, ring(k, 48, 12), style.lip_r, style.lip_g, style.lip_b);

    if (style.noise_amplitude > 0) {
        for (int y = 0; y < height; ++y) {
            for (int x = 0; x < width; ++x) {
                for (int c = 0; c < 3; ++c) {
                    const int v = img.at(x, y, c) +
                                  noise_at(style.noise_seed + c, x, y, style.noise_amplitude);
                    img.at(x, y, c) = static_cast<std::uint8_t>(std::clamp(v, 0, 255));
                }
            }
        }
    }
    return img;
}

std::string write_corpus(const std::string& dir, int faces) {
    fs::create_directories(fs::path(dir) / "images");

    // Skin tones spanning light to dark.
    static constexpr std::uint8_t tones[12][3] = {
        {244, 222, 204}, {238, 210, 190}, {228, 196, 172}, {218, 182, 156},
        {208, 168, 140}, {196, 152, 124}, {180, 136, 108}, {160, 118, 92},
        {140, 100, 78},  {118, 84, 64},   {96, 68, 52},    {76, 54, 42},
    };

    const KeypointSet68 base = canonical_keypoints();
    std::string manifest_text;

    for (int i = 0; i < faces; ++i) {
        const double scale = 1.0 + 0.05 * (i % 7);
        const double angle = (static_cast<double>(i) - faces / 2.0) * 0.02;
        const Point2 center{160.0 + 3.0 * (i % 5), 158.0 + 2.0 * (i % 3)};
        const Affine2 place = face_placement(center, scale, angle);
        const KeypointSet68 kp = transform_keypoints(base, place);

        FaceStyle style;
        const auto& tone = tones[i % 12];
        style.skin_r = tone[0];
        style.skin_g = tone[1];
        style.skin_b = tone[2];
        style.noise_seed = 0x5151u + static_cast<std::uint32_t>(i) * 977u;
        const ImageU8 img = render_face(320, 320, kp, style);

        char name[32];
        std::snprintf(name, sizeof(name), "face_%02d", i);
        const std::string image_rel = std::string("images/") + name + ".png";
        save_image((fs::path(dir) / image_rel).string(), img);

        // Bounding box: keypoint extent padded by 10% per side.
        double min_x = kp[0].x, max_x = kp[0].x, min_y = kp[0].y, max_y = kp[0].y;
        for (int p = 0; p < 68; ++p) {
            min_x = std::min(min_x, kp[p].x);
            max_x = std::max(max_x, kp[p].x);
            min_y = std::min(min_y, kp[p].y);
            max_y = std::max(max_y, kp[p].y);
        }
        const double pad_x = 0.1 * (max_x - min_x);
        const double pad_y = 0.1 * (max_y - min_y);

        json rec;
        rec["face_id"] = name;
        rec["image_path"] = (fs::path(dir) / image_rel).string();
        rec["bbox"] = {min_x - pad_x, min_y - pad_y, (max_x - min_x) + 2 * pad_x,
                       (max_y - min_y) + 2 * pad_y};
        json kps = json::array();
        for (int p = 0; p < 68; ++p) kps.push_back({kp[p].x, kp[p].y});
        rec["keypoints"] = std::move(kps);
        rec["pose_class"] = (i % 3 == 0) ? 0 : (i % 3 == 1 ? 3 : 4);

        // Two faces carry an explicit skin mask (the head ellipse).
        if (i == 2 || i == 7) {
            ImageF64 mask(320, 320, 0.0);
            const ImageF64 gray = to_grayscale(img);
            for (int y = 0; y < 320; ++y) {
                for (int x = 0; x < 320; ++x) {
                    // Anything brighter than the backdrop belongs to the head.
                    mask.at(x, y) = gray.at(x, y) > 0.25 ? 1.0 : 0.0;
                }
            }
            const std::string mask_rel = std::string("images/") + name + "_mask.png";
            save_mask((fs::path(dir) / mask_rel).string(), mask);
            rec["mask_path"] = (fs::path(dir) / mask_rel).string();
        }

        // Deterministic annotations: a two-point softmax, a gender score
        // and three weighted votes.
        std::vector<double> softmax(101, 0.0);
        const int age_a = 18 + 4 * i;
        const int age_b = std::min(100, age_a + 10);
        softmax[age_a] = 0.7;
        softmax[age_b] = 0.3;
        rec["age_softmax"] = softmax;
        rec["gender_score"] = faces > 1 ? static_cast<double>(i) / (faces - 1) : 0.5;

        const double voted_age = 0.7 * age_a + 0.3 * age_b;
        json votes = json::array();
        const char* genders[2] = {"male", "female"};
        for (int v = 0; v < 3; ++v) {
            json vote;
            vote["annotator_id"] = "ann_" + std::to_string(v);
            vote["gender"] = genders[(i + v) % 2];
            vote["age_group"] = age_group_of(voted_age + (v - 1) * 3.0);
            vote["age_value"] = voted_age + (v - 1) * 3.0;
            vote["weight"] = 0.5 + 0.2 * v;
            votes.push_back(std::move(vote));
        }
        rec["votes"] = std::move(votes);

        manifest_text += rec.dump();
        manifest_text += '\n';
    }

    const std::string manifest_path = (fs::path(dir) / "manifest.jsonl").string();
    std::ofstream out(manifest_path, std::ios::binary);
    out << manifest_text;
    return manifest_path;
}

}  // namespace facediv::synth
