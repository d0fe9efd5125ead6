#include "euphotic/plot.hpp"

#include "euphotic/apartment.hpp"
#include "euphotic/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace euphotic {

namespace {

struct Vec2 {
    double x = 0, y = 0;
};

double dot2(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

double to_double(const Rat& r) { return static_cast<double>(r.raw()); }

/// Euclidean model: simple roots a_1, a_2 realising the invariant form, and
/// x ↦ p with (a_i, p) = x_i.
class Plane {
public:
    explicit Plane(const RootSystem& rs) {
        const double g11 = rs.inner({1, 0}, {1, 0});
        const double g12 = rs.inner({1, 0}, {0, 1});
        const double g22 = rs.inner({0, 1}, {0, 1});
        a1_ = {std::sqrt(g11), 0};
        a2_ = {g12 / a1_.x, std::sqrt(g22 - g12 * g12 / g11)};
    }

    Vec2 root(const IntVec& c) const { return {c[0] * a1_.x + c[1] * a2_.x, c[0] * a1_.y + c[1] * a2_.y}; }

    Vec2 point(double x1, double x2) const {
        // a1.x p.x = x1; a2.x p.x + a2.y p.y = x2.
        const double px = x1 / a1_.x;
        return {px, (x2 - a2_.x * px) / a2_.y};
    }
    Vec2 point(const RatVec& v) const { return point(to_double(v[0]), to_double(v[1])); }

private:
    Vec2 a1_, a2_;
};

using Polygon = std::vector<Vec2>;

/// Keeps the part of `poly` with (a, p) ≥ c (or ≤ c when `below`).
Polygon clip(const Polygon& poly, Vec2 a, double c, bool below) {
    auto inside = [&](Vec2 p) { return below ? dot2(a, p) <= c : dot2(a, p) >= c; };
    Polygon out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Vec2 p = poly[i], q = poly[(i + 1) % poly.size()];
        const bool ip = inside(p), iq = inside(q);
        if (ip) out.push_back(p);
        if (ip != iq) {
            const double t = (c - dot2(a, p)) / dot2(a, {q.x - p.x, q.y - p.y});
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
    return buf;
}

class Canvas {
public:
    Canvas(double half_width, double size) : w_(half_width), size_(size) {}

    std::string xy(Vec2 p) const {
        return num((p.x + w_) / (2 * w_) * size_) + "," + num((w_ - p.y) / (2 * w_) * size_);
    }
    std::string sx(Vec2 p) const { return num((p.x + w_) / (2 * w_) * size_); }
    std::string sy(Vec2 p) const { return num((w_ - p.y) / (2 * w_) * size_); }
    Polygon box() const { return {{-w_, -w_}, {w_, -w_}, {w_, w_}, {-w_, w_}}; }

    /// The segment of the line (a, p) = c inside the box, if any.
    bool segment(Vec2 a, double c, Vec2& p, Vec2& q) const {
        Polygon strip = clip(clip(box(), a, c - 1e-9, false), a, c + 1e-9, true);
        if (strip.size() < 2) return false;
        // Extreme points along the line direction.
        Vec2 d{-a.y, a.x};
        p = q = strip[0];
        for (const auto& v : strip) {
            if (dot2(d, v) < dot2(d, p)) p = v;
            if (dot2(d, v) > dot2(d, q)) q = v;
        }
        return true;
    }

private:
    double w_, size_;
};

std::string polygon(const Canvas& cv, const Polygon& poly, const std::string& style) {
    std::string pts;
    for (std::size_t i = 0; i < poly.size(); ++i) pts += (i ? " " : "") + cv.xy(poly[i]);
    return "<polygon points=\"" + pts + "\" " + style + "/>\n";
}

std::string line(const Canvas& cv, Vec2 p, Vec2 q, const std::string& style) {
    return "<line x1=\"" + cv.sx(p) + "\" y1=\"" + cv.sy(p) + "\" x2=\"" + cv.sx(q) + "\" y2=\"" + cv.sy(q) + "\" " +
           style + "/>\n";
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

} // namespace

std::string render_svg(const RootSystem& rs, const PlotOptions& opts) {
    if (rs.rank() != 2) throw CapabilityError("plots are available for rank-two groups only");
    if (opts.walls < 0) throw InputError("plot: the wall range must be non-negative");
    const Plane plane(rs);

    double min_len = 1e9;
    for (std::size_t k = 0; k < rs.num_roots(); ++k) {
        Vec2 a = plane.root(rs.root(k));
        min_len = std::min(min_len, std::sqrt(dot2(a, a)));
    }
    const double half = (opts.walls + 1) / min_len;
    const double size = 600;
    const Canvas cv(half, size);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "<title>" << escape(opts.title.empty() ? rs.name() + " apartment" : opts.title) << "</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

    // Fundamental alcove: vertices 0 and ω_i^∨ / n_i.
    const IntVec n = marks(rs);
    Polygon alcove{plane.point(0, 0), plane.point(1.0 / n[1], 0), plane.point(0, 1.0 / n[2])};
    os << "<g id=\"alcove\">\n" << polygon(cv, alcove, "fill=\"#c8c8c8\" stroke=\"none\"") << "</g>\n";

    os << "<g id=\"walls\" stroke=\"black\" stroke-width=\"1\">\n";
    for (std::size_t k = 0; k < rs.num_roots(); ++k) {
        if (!rs.is_positive(k)) continue;
        const Vec2 a = plane.root(rs.root(k));
        for (int level = -opts.walls; level <= opts.walls; ++level) {
            Vec2 p, q;
            if (cv.segment(a, -level, p, q)) os << line(cv, p, q, "");
        }
    }
    os << "</g>\n";

    os << "<g id=\"region\">\n";
    for (const auto& b : opts.region) {
        const Vec2 a = plane.root(b.root);
        Polygon strip = cv.box();
        if (b.lower) strip = clip(strip, a, to_double(*b.lower), false);
        if (b.upper) strip = clip(strip, a, to_double(*b.upper), true);
        if (strip.size() >= 3) os << polygon(cv, strip, "fill=\"red\" fill-opacity=\"0.12\" stroke=\"none\"");
        for (const auto& edge : {b.lower, b.upper}) {
            Vec2 p, q;
            if (edge && cv.segment(a, to_double(*edge), p, q))
                os << line(cv, p, q, "stroke=\"red\" stroke-width=\"2.5\"");
        }
    }
    os << "</g>\n";

    os << "<g id=\"points\">\n";
    for (const auto& pt : opts.points) {
        const Vec2 p = plane.point(pt.y);
        os << "<circle cx=\"" << cv.sx(p) << "\" cy=\"" << cv.sy(p) << "\" r=\"4\" stroke=\"blue\" fill=\""
           << (pt.highlighted ? "blue" : "white") << "\"/>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace euphotic
