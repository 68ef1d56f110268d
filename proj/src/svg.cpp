#include "glg/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "glg/error.hpp"

namespace glg {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                          "#bcbd22", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace

std::string render_entropy_svg(const std::vector<double>& entropy,
                               const std::vector<int>& cluster_labels,
                               const std::vector<std::string>& slice_labels) {
    if (entropy.empty()) {
        throw Error(ErrorCode::EmptySeries, "nothing to plot");
    }
    const std::size_t m = entropy.size();
    const double width = 900.0, height = 420.0;
    const double left = 70.0, right = 20.0, top = 20.0, bottom = 50.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double y_max = *std::max_element(entropy.begin(), entropy.end());
    if (y_max <= 0.0) y_max = 1.0;
    y_max *= 1.05;

    auto x_of = [&](std::size_t t) {
        if (m == 1) return left + plot_w / 2.0;
        return left + plot_w * static_cast<double>(t) / static_cast<double>(m - 1);
    };
    auto y_of = [&](double v) { return top + plot_h * (1.0 - v / y_max); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
           "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
           num(height) + "\">\n";
    svg += "<rect width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"white\"/>\n";

    // Axes.
    svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" +
           num(left) + "\" y2=\"" + num(top + plot_h) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top + plot_h) +
           "\" x2=\"" + num(left + plot_w) + "\" y2=\"" + num(top + plot_h) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    // Y ticks.
    const int n_yticks = 5;
    for (int k = 0; k <= n_yticks; ++k) {
        double v = y_max * static_cast<double>(k) / n_yticks;
        double y = y_of(v);
        svg += "<line x1=\"" + num(left - 5.0) + "\" y1=\"" + num(y) +
               "\" x2=\"" + num(left) + "\" y2=\"" + num(y) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + num(left - 9.0) + "\" y=\"" + num(y + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"12\">" + num(v) + "</text>\n";
    }

    // X ticks: at most ~10, always including first and last slice.
    std::size_t stride = std::max<std::size_t>(1, (m + 9) / 10);
    for (std::size_t t = 0; t < m; t += stride) {
        double x = x_of(t);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(top + plot_h) +
               "\" x2=\"" + num(x) + "\" y2=\"" + num(top + plot_h + 5.0) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        std::string label =
            t < slice_labels.size() ? slice_labels[t] : std::to_string(t);
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(top + plot_h + 20.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"12\">" + label + "</text>\n";
    }

    // Axis titles.
    svg += "<text x=\"" + num(left + plot_w / 2.0) + "\" y=\"" +
           num(height - 12.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\">slice</text>\n";
    svg += "<text x=\"18\" y=\"" + num(top + plot_h / 2.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"13\" transform=\"rotate(-90 18 " +
           num(top + plot_h / 2.0) + ")\">entropy</text>\n";

    // The diagram itself: connecting line, then cluster-colored markers.
    if (m > 1) {
        svg += "<polyline fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" points=\"";
        for (std::size_t t = 0; t < m; ++t) {
            if (t) svg += " ";
            svg += num(x_of(t)) + "," + num(y_of(entropy[t]));
        }
        svg += "\"/>\n";
    }
    for (std::size_t t = 0; t < m; ++t) {
        int c = t < cluster_labels.size() ? cluster_labels[t] : -1;
        const char* color = c >= 0 ? kPalette[static_cast<std::size_t>(c) % 10]
                                   : "#555555";
        svg += "<circle cx=\"" + num(x_of(t)) + "\" cy=\"" +
               num(y_of(entropy[t])) + "\" r=\"3.5\" fill=\"" + color + "\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace glg
