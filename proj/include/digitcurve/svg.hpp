#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "digitcurve/lattice.hpp"

namespace digitcurve {

/// Minimal SVG 1.1 writer. Lattice point (x, y) maps to pixel
/// ((x - x0 + margin) * scale, (y1 - y + margin) * scale), so every vertex
/// lands on an integer multiple of scale and y points up.
class SvgDocument {
public:
    SvgDocument(int scale, int margin = 2) : scale_(scale), margin_(margin) {}

    void add_polyline(std::span<const LatticeVec> pts, const std::string& stroke, double width);
    void add_polygon(std::span<const LatticeVec> pts, const std::string& fill, const std::string& stroke,
                     double width);

    std::string str() const;
    /// Pixel size of the document.
    std::int64_t width() const;
    std::int64_t height() const;

private:
    struct Shape {
        bool closed = false;
        std::vector<LatticeVec> pts;
        std::string fill, stroke;
        double width = 1;
    };
    void extend(std::span<const LatticeVec> pts);

    int scale_;
    int margin_;
    bool empty_ = true;
    std::int64_t x0_ = 0, y0_ = 0, x1_ = 0, y1_ = 0;
    std::vector<Shape> shapes_;
};

void write_file(const std::string& path, const std::string& bytes);

}  // namespace digitcurve
