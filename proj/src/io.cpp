#include "hullkit/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <system_error>

#include "hullkit/errors.hpp"

namespace hullkit {

namespace {

const char* skip_ws(const char* it, const char* end) {
    while (it != end && (*it == ' ' || *it == '\t' || *it == '\r')) ++it;
    return it;
}

double parse_coord(const char*& it, const char* end, std::size_t line_no) {
    it = skip_ws(it, end);
    double value = 0.0;
    const auto [next, ec] = std::from_chars(it, end, value);
    if (ec == std::errc::result_out_of_range)
        throw parse_error("coordinate out of double range", line_no);
    if (ec != std::errc() || next == it)
        throw parse_error("expected a decimal coordinate", line_no);
    if (!std::isfinite(value))
        throw parse_error("non-finite coordinate", line_no);
    it = next;
    return value;
}

}  // namespace

std::vector<Point> read_points(std::istream& in) {
    std::vector<Point> pts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const char* it = line.data();
        const char* end = line.data() + line.size();
        it = skip_ws(it, end);
        if (it == end || *it == '#') continue;
        Point p;
        p.x = parse_coord(it, end, line_no);
        p.y = parse_coord(it, end, line_no);
        it = skip_ws(it, end);
        if (it != end)
            throw parse_error("trailing characters after coordinates", line_no);
        pts.push_back(p);
    }
    return pts;
}

std::vector<Point> read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_points(in);
}

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

void write_points(std::span<const Point> pts, std::ostream& out) {
    for (const Point& p : pts) {
        out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
    }
}

void write_points_file(std::span<const Point> pts, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_points(pts, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace hullkit
