#include "facediv/image_io.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "facediv/errors.hpp"

namespace facediv {

ImageU8 load_image(const std::string& path) {
    cv::Mat bgr = cv::imread(path, cv::IMREAD_COLOR);
    if (bgr.empty()) {
        throw ImageRead("cannot read image: " + path);
    }
    ImageU8 out(bgr.cols, bgr.rows, 3);
    for (int y = 0; y < bgr.rows; ++y) {
        const cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
        for (int x = 0; x < bgr.cols; ++x) {
            out.at(x, y, 0) = row[x][2];
            out.at(x, y, 1) = row[x][1];
            out.at(x, y, 2) = row[x][0];
        }
    }
    return out;
}

ImageF64 load_mask(const std::string& path) {
    cv::Mat gray = cv::imread(path, cv::IMREAD_GRAYSCALE);
    if (gray.empty()) {
        throw ImageRead("cannot read mask: " + path);
    }
    ImageF64 out(gray.cols, gray.rows);
    for (int y = 0; y < gray.rows; ++y) {
        const std::uint8_t* row = gray.ptr<std::uint8_t>(y);
        for (int x = 0; x < gray.cols; ++x) {
            out.at(x, y) = row[x] / 255.0;
        }
    }
    return out;
}

void save_image(const std::string& path, const ImageU8& rgb) {
    cv::Mat bgr(rgb.height, rgb.width, CV_8UC3);
    for (int y = 0; y < rgb.height; ++y) {
        cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
        for (int x = 0; x < rgb.width; ++x) {
            row[x][0] = rgb.channels >= 3 ? rgb.at(x, y, 2) : rgb.at(x, y);
            row[x][1] = rgb.channels >= 3 ? rgb.at(x, y, 1) : rgb.at(x, y);
            row[x][2] = rgb.at(x, y, 0);
        }
    }
    if (!cv::imwrite(path, bgr)) {
        throw ImageRead("cannot write image: " + path);
    }
}

void save_mask(const std::string& path, const ImageF64& mask) {
    cv::Mat gray(mask.height, mask.width, CV_8UC1);
    for (int y = 0; y < mask.height; ++y) {
        std::uint8_t* row = gray.ptr<std::uint8_t>(y);
        for (int x = 0; x < mask.width; ++x) {
            row[x] = mask.at(x, y) >= 0.5 ? 255 : 0;
        }
    }
    if (!cv::imwrite(path, gray)) {
        throw ImageRead("cannot write mask: " + path);
    }
}

}  // namespace facediv
