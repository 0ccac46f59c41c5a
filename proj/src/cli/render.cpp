#include <algorithm>
#include <sstream>

#include "rulerwrap/cli.hpp"

namespace rulerwrap::cli {

namespace {

std::string pair_text(const ArcPair& p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

}  // namespace

std::string format_trace(std::span<const TraceStep> trace, std::size_t n) {
    const std::size_t slots = n + 1;
    std::vector<std::vector<std::string>> cells(trace.size(), std::vector<std::string>(slots));
    std::vector<std::size_t> width(slots);
    for (std::size_t s = 0; s < slots; ++s) width[s] = ("P[" + std::to_string(s) + "]").size();

    for (std::size_t r = 0; r < trace.size(); ++r) {
        for (const auto& e : trace[r].live) {
            cells[r][e.slot] = pair_text(e.pair);
            width[e.slot] = std::max(width[e.slot], cells[r][e.slot].size());
        }
    }

    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(w, s.size()), ' ');
        return s;
    };
    auto rstrip = [](std::string s) {
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s;
    };

    std::ostringstream out;
    std::string header = "step |";
    for (std::size_t s = 0; s < slots; ++s) header += " " + pad("P[" + std::to_string(s) + "]", width[s]);
    header += " | discards";
    out << header << '\n';

    for (std::size_t r = 0; r < trace.size(); ++r) {
        const TraceStep& t = trace[r];
        std::string row = std::to_string(t.step);
        row = std::string(row.size() < 4 ? 4 - row.size() : 0, ' ') + row + " |";
        for (std::size_t s = 0; s < slots; ++s) row += " " + pad(cells[r][s], width[s]);
        row += " |";
        for (const auto& p : t.left_discards) row += " left " + pair_text(p);
        for (const auto& p : t.right_discards) row += " right " + pair_text(p);
        out << rstrip(row) << '\n';
    }
    return out.str();
}

std::string render_svg(const Ruler& ruler, std::span<const ArcPair> pairs,
                       const WrapAnswer& answer) {
    const Length x_n = ruler.total();
    Length x_max = x_n;
    Length y_max = 1;
    for (const auto& p : pairs) {
        x_max = std::max(x_max, p.arc_end());
        y_max = std::max(y_max, p.y);
    }
    const double margin = 0.1 * static_cast<double>(x_n);
    const double min_x = -margin;
    const double min_y = -(static_cast<double>(y_max) + margin);
    const double width = static_cast<double>(x_max) + 2 * margin;
    const double height = static_cast<double>(y_max) + 2 * margin;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x << ' ' << min_y << ' '
        << width << ' ' << height << "\">\n";
    svg << "  <g fill=\"none\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\">\n";
    svg << "    <line class=\"ruler\" x1=\"0\" y1=\"0\" x2=\"" << x_n
        << "\" y2=\"0\" stroke=\"black\" vector-effect=\"non-scaling-stroke\"/>\n";

    for (const auto& p : pairs) {
        if (p.hinge == 0) continue;
        const bool chosen = p.hinge == answer.last_fold;
        svg << "    <path class=\"arc" << (chosen ? " chosen" : "") << "\" data-hinge=\""
            << p.hinge << "\" d=\"M " << p.x - p.y << " 0 A " << p.y << ' ' << p.y << " 0 0 1 "
            << p.arc_end() << " 0\" stroke=\"" << (chosen ? "red" : "steelblue")
            << "\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
    svg << "  </g>\n";
    svg << "  <g>\n";
    for (const auto& p : pairs) {
        if (p.hinge == 0) continue;
        svg << "    <circle class=\"apex\" data-hinge=\"" << p.hinge << "\" data-x=\"" << p.x
            << "\" data-y=\"" << p.y << "\" cx=\"" << p.x << "\" cy=\"-" << p.y << "\" r=\""
            << std::max(0.5, static_cast<double>(x_max) / 200.0) << "\" fill=\"red\"/>\n";
    }
    svg << "  </g>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace rulerwrap::cli
