#include "pickqubo/plot.hpp"

#include <algorithm>
#include <array>
#include <string_view>

#include <fmt/format.h>

#include "pickqubo/errors.hpp"

namespace pickqubo {

namespace {

constexpr std::array<std::string_view, 8> kRobotColours = {
    "#d62728", "#1f77b4", "#ffbf00", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
};
constexpr std::string_view kDepotColour = "#ffd700";
constexpr std::string_view kProductColour = "#4a90d9";
constexpr double kCanvas = 600.0;
constexpr double kMargin = 40.0;

std::string escape_xml(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Solution& solution, const Instance& instance) {
    if (!instance.has_positions()) {
        throw InvalidInput("plot: the instance has no node positions; use a positioned instance "
                           "(every node needs \"pos\")");
    }
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const Node& node : instance.nodes()) {
        const auto [x, y] = *node.position;
        min_x = first ? x : std::min(min_x, x);
        max_x = first ? x : std::max(max_x, x);
        min_y = first ? y : std::min(min_y, y);
        max_y = first ? y : std::max(max_y, y);
        first = false;
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double scale = (kCanvas - 2 * kMargin) / span;
    auto sx = [&](double x) { return kMargin + (x - min_x) * scale; };
    auto sy = [&](double y) { return kCanvas - kMargin - (y - min_y) * scale; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{0}\" "
        "viewBox=\"0 0 {0} {0}\">\n",
        kCanvas);
    out += fmt::format("<title>{}</title>\n", instance.name().empty() ? "picking solution" : escape_xml(instance.name()));
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t p = 0; p < solution.routes.size(); ++p) {
        const Route& route = solution.routes[p];
        if (std::none_of(route.begin(), route.end(), [](int node) { return node != 0; })) continue;
        std::string points;
        for (int node : route) {
            if (node < 0 || node > instance.num_products()) throw InvalidInput("plot: unknown node id in route");
            const auto [x, y] = *instance.nodes()[node].position;
            if (!points.empty()) points += ' ';
            points += fmt::format("{:.2f},{:.2f}", sx(x), sy(y));
        }
        out += fmt::format(
            "<polyline class=\"route\" data-robot=\"{}\" points=\"{}\" fill=\"none\" stroke=\"{}\" "
            "stroke-width=\"3\"/>\n",
            p + 1, points, kRobotColours[p % kRobotColours.size()]);
    }

    for (const Node& node : instance.nodes()) {
        const auto [x, y] = *node.position;
        const bool depot = node.id == 0;
        out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{}\" fill=\"{}\" stroke=\"black\"/>\n", sx(x),
                           sy(y), depot ? 14 : 11, depot ? kDepotColour : kProductColour);
        out += fmt::format(
            "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" font-family=\"sans-serif\" "
            "font-size=\"12\">{}</text>\n",
            sx(x), sy(y) + 4, node.id);
    }
    out += "</svg>\n";
    return out;
}

}  // namespace pickqubo
