#include "hkmult/cli/svg.hpp"

#include <algorithm>
#include <sstream>

namespace hkm::cli {

namespace {

std::string num(const Rat& r) { return toDecimal(r, 12); }

class SvgWriter {
public:
    SvgWriter(const Cone2& cone, BigInt scale) : cone_(cone), scale_(std::move(scale)) {}

    // One column box in scaled corner coordinates, drawn in x-space.
    void box(std::ostream& out, const char* cls, const CornerBox& b) const {
        out << "    <polygon class=\"" << cls << "\" points=\"";
        point(out, b.s0, b.t0);
        out << ' ';
        point(out, b.s1, b.t0);
        out << ' ';
        point(out, b.s1, b.t1);
        out << ' ';
        point(out, b.s0, b.t1);
        out << "\"/>\n";
    }

private:
    void point(std::ostream& out, const BigInt& s, const BigInt& t) const {
        auto [x, y] = cone_.realPreimage(Rat(s, scale_), Rat(t, scale_));
        out << num(x) << ',' << num(y);
    }

    const Cone2& cone_;
    BigInt scale_;
};

} // namespace

std::string renderRegionSvg(const ToricInstance& instance, std::optional<unsigned> qMark) {
    const Cone2& cone = instance.cone;
    const MonomialIdeal& ideal = instance.ideal;
    const Staircase& stair = ideal.staircase();
    const Corner threshold = lcThresholds(ideal).asCorner();

    const BigInt k = qMark.value_or(1);
    const BigInt extent = std::max(stair.back().s, stair.front().t) + 2;
    const BigInt edge = k * extent;

    // Viewport: bounding box of the image of the corner square [0, extent]^2.
    std::vector<std::pair<Rat, Rat>> frame = {cone.realPreimage(0, 0), cone.realPreimage(Rat(extent), 0),
                                              cone.realPreimage(0, Rat(extent)),
                                              cone.realPreimage(Rat(extent), Rat(extent))};
    Rat minX = frame[0].first, maxX = minX, minY = frame[0].second, maxY = minY;
    for (const auto& [x, y] : frame) {
        minX = std::min(minX, x);
        maxX = std::max(maxX, x);
        minY = std::min(minY, y);
        maxY = std::max(maxY, y);
    }
    Rat span = std::max(maxX - minX, maxY - minY);
    Rat margin = span / 20;
    minX -= margin;
    maxX += margin;
    minY -= margin;
    maxY += margin;
    Rat width = maxX - minX, height = maxY - minY;
    Rat pixelWidth = 480;
    Rat pixelHeight = pixelWidth * height / width;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(pixelWidth)
        << "\" height=\"" << num(pixelHeight) << "\" viewBox=\"" << num(minX) << ' ' << num(-maxY) << ' '
        << num(width) << ' ' << num(height) << "\">\n"
        << "  <title>" << describe(instance.label) << "</title>\n"
        << "  <style type=\"text/css\">.gray{fill:#c8c8c8}.red{fill:#d62728}.green{fill:#2ca02c}</style>\n"
        << "  <g transform=\"scale(1,-1)\">\n";

    SvgWriter writer(cone, k);

    out << "  <g id=\"ideal\" stroke=\"none\">\n";
    const Staircase scaledStair = stair.scaled(k);
    auto corners = scaledStair.corners();
    for (size_t i = 0; i < corners.size(); ++i) {
        BigInt s1 = i + 1 < corners.size() ? corners[i + 1].s : edge;
        if (corners[i].s < s1 && corners[i].t < edge)
            writer.box(out, "gray", {corners[i].s, s1, corners[i].t, edge});
    }
    out << "  </g>\n";

    out << "  <g id=\"gap\" stroke=\"none\">\n";
    if (k == 1) {
        for (const CornerBox& b : differenceBoxes(Staircase(threshold), stair))
            writer.box(out, "red", b);
    } else {
        const Staircase ordinary = ordinaryPower(ideal, *qMark).staircase();
        for (const CornerBox& b : differenceBoxes(Staircase(k * threshold), ordinary))
            writer.box(out, "red", b);
        for (const CornerBox& b : differenceBoxes(ordinary, scaledStair))
            writer.box(out, "green", b);
    }
    out << "  </g>\n";

    Rat stroke = span / 300;
    auto [r1x, r1y] = cone.realPreimage(0, Rat(extent));
    auto [r2x, r2y] = cone.realPreimage(Rat(extent), 0);
    out << "  <g id=\"cone\" stroke=\"black\" stroke-width=\"" << num(stroke) << "\">\n"
        << "    <line x1=\"0\" y1=\"0\" x2=\"" << num(r1x) << "\" y2=\"" << num(r1y) << "\"/>\n"
        << "    <line x1=\"0\" y1=\"0\" x2=\"" << num(r2x) << "\" y2=\"" << num(r2y) << "\"/>\n"
        << "  </g>\n";

    Rat radius = span / 80;
    out << "  <g id=\"generators\" fill=\"black\">\n";
    for (const LatticePoint& g : ideal.generators())
        out << "    <circle cx=\"" << g.x1 << "\" cy=\"" << g.x2 << "\" r=\"" << num(radius) << "\"/>\n";
    out << "  </g>\n";

    out << "  </g>\n</svg>\n";
    return out.str();
}

} // namespace hkm::cli
