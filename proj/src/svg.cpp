#include "digitcurve/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace digitcurve {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

void SvgDocument::extend(std::span<const LatticeVec> pts) {
    for (const auto& p : pts) {
        if (empty_) {
            x0_ = x1_ = p.x;
            y0_ = y1_ = p.y;
            empty_ = false;
        }
        x0_ = std::min(x0_, p.x);
        x1_ = std::max(x1_, p.x);
        y0_ = std::min(y0_, p.y);
        y1_ = std::max(y1_, p.y);
    }
}

void SvgDocument::add_polyline(std::span<const LatticeVec> pts, const std::string& stroke, double width) {
    extend(pts);
    shapes_.push_back({false, {pts.begin(), pts.end()}, "none", stroke, width});
}

void SvgDocument::add_polygon(std::span<const LatticeVec> pts, const std::string& fill, const std::string& stroke,
                              double width) {
    extend(pts);
    shapes_.push_back({true, {pts.begin(), pts.end()}, fill, stroke, width});
}

std::int64_t SvgDocument::width() const { return (x1_ - x0_ + 2 * margin_) * scale_; }
std::int64_t SvgDocument::height() const { return (y1_ - y0_ + 2 * margin_) * scale_; }

std::string SvgDocument::str() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width() << "\" height=\""
       << height() << "\" viewBox=\"0 0 " << width() << ' ' << height() << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& s : shapes_) {
        os << (s.closed ? "<polygon" : "<polyline") << " points=\"";
        for (std::size_t i = 0; i < s.pts.size(); ++i) {
            if (i) os << ' ';
            os << (s.pts[i].x - x0_ + margin_) * scale_ << ',' << (y1_ - s.pts[i].y + margin_) * scale_;
        }
        os << "\" fill=\"" << s.fill << "\" stroke=\"" << s.stroke << "\" stroke-width=\"" << num(s.width)
           << "\" stroke-linejoin=\"round\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace digitcurve
