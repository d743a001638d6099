/*
 Copyright 2026 The attsmc Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "attsmc/plots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace attsmc {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 170.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

// Series styles follow the usual solid / dashed / dotted convention.
constexpr std::array<const char*, 3> kColors{"#1f77b4", "#d62728", "#2ca02c"};
constexpr std::array<const char*, 3> kDash{"", "8,5", "2,4"};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string coord(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

// Roughly five "nice" tick positions covering [lo, hi].
std::vector<double> ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (span / step <= 6.0) break;
    }
    std::vector<double> out;
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step)
        out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    return out;
}

std::pair<double, double> extent(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return {*lo, *hi};
}

}  // namespace

std::string render_line_chart(const std::string& title, const std::string& y_label, const std::vector<double>& t,
                              const std::array<Series, 3>& series) {
    if (t.empty()) throw std::invalid_argument("render_line_chart: empty time axis");
    for (const auto& s : series)
        if (s.y.size() != t.size()) throw std::invalid_argument("render_line_chart: series length mismatch");

    auto [t0, t1] = extent(t);
    double y0 = series[0].y.front(), y1 = y0;
    for (const auto& s : series) {
        const auto [lo, hi] = extent(s.y);
        y0 = std::min(y0, lo);
        y1 = std::max(y1, hi);
    }
    if (t1 <= t0) t1 = t0 + 1.0;
    if (y1 - y0 <= 1e-300) {
        const double pad = std::max(1e-12, std::abs(y0) * 0.1);
        y0 -= pad;
        y1 += pad;
    } else {
        const double pad = 0.05 * (y1 - y0);
        y0 -= pad;
        y1 += pad;
    }

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - t0) / (t1 - t0) * pw; };
    auto sy = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * ph; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
           "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + coord(kLeft + pw / 2) + "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">" +
           escape(title) + "</text>\n";

    svg += "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    const auto xt = ticks(t0, t1);
    const auto yt = ticks(y0, y1);
    for (double x : xt)
        svg += "<line x1=\"" + coord(sx(x)) + "\" y1=\"" + coord(kTop) + "\" x2=\"" + coord(sx(x)) + "\" y2=\"" +
               coord(kTop + ph) + "\"/>\n";
    for (double y : yt)
        svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(sy(y)) + "\" x2=\"" + coord(kLeft + pw) +
               "\" y2=\"" + coord(sy(y)) + "\"/>\n";
    svg += "</g>\n";
    svg += "<rect x=\"" + coord(kLeft) + "\" y=\"" + coord(kTop) + "\" width=\"" + coord(pw) + "\" height=\"" +
           coord(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

    svg += "<g text-anchor=\"middle\">\n";
    for (double x : xt)
        svg += "<text x=\"" + coord(sx(x)) + "\" y=\"" + coord(kTop + ph + 18) + "\">" + fmt(x) + "</text>\n";
    svg += "</g>\n<g text-anchor=\"end\">\n";
    for (double y : yt)
        svg += "<text x=\"" + coord(kLeft - 6) + "\" y=\"" + coord(sy(y) + 4) + "\">" + fmt(y) + "</text>\n";
    svg += "</g>\n";
    svg += "<text x=\"" + coord(kLeft + pw / 2) + "\" y=\"" + coord(kHeight - 15) +
           "\" text-anchor=\"middle\">time (s)</text>\n";
    svg += "<text transform=\"translate(20," + coord(kTop + ph / 2) + ") rotate(-90)\" text-anchor=\"middle\">" +
           escape(y_label) + "</text>\n";

    for (std::size_t k = 0; k < 3; ++k) {
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(kColors[k]) + "\" stroke-width=\"1.6\"";
        if (*kDash[k]) svg += " stroke-dasharray=\"" + std::string(kDash[k]) + "\"";
        svg += " points=\"";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) svg.push_back(' ');
            svg += coord(sx(t[i])) + "," + coord(sy(series[k].y[i]));
        }
        svg += "\"/>\n";

        const double ly = kTop + 20.0 + 22.0 * static_cast<double>(k);
        const double lx = kLeft + pw + 15.0;
        svg += "<line x1=\"" + coord(lx) + "\" y1=\"" + coord(ly) + "\" x2=\"" + coord(lx + 30) + "\" y2=\"" +
               coord(ly) + "\" stroke=\"" + kColors[k] + "\" stroke-width=\"1.6\"";
        if (*kDash[k]) svg += " stroke-dasharray=\"" + std::string(kDash[k]) + "\"";
        svg += "/>\n<text x=\"" + coord(lx + 36) + "\" y=\"" + coord(ly + 4) + "\">" + escape(series[k].label) +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::vector<std::filesystem::path> emit_plots(const std::vector<TelemetryRecord>& records,
                                              const std::filesystem::path& out_dir) {
    if (records.empty()) throw std::invalid_argument("emit_plots: no records");
    std::filesystem::create_directories(out_dir);

    std::vector<double> t;
    t.reserve(records.size());
    for (const auto& r : records) t.push_back(r.t);

    auto pick = [&](const char* name, Vec3 TelemetryRecord::*field) {
        std::array<Series, 3> out;
        for (std::size_t k = 0; k < 3; ++k) {
            out[k].label = std::string(name) + std::to_string(k + 1);
            out[k].y.reserve(records.size());
            for (const auto& r : records) out[k].y.push_back((r.*field)[k]);
        }
        return out;
    };

    struct Chart {
        const char* file;
        const char* title;
        const char* y_label;
        const char* prefix;
        Vec3 TelemetryRecord::*field;
    };
    const std::array<Chart, 6> charts{{
        {"xi.svg", "Sliding variable xi", "xi", "xi", &TelemetryRecord::xi},
        {"omega.svg", "Body angular velocity omega_lb^b", "rad/s", "omega", &TelemetryRecord::omega},
        {"sigma_db.svg", "Attitude error sigma_db", "MRP", "sigma_db", &TelemetryRecord::sigma_db},
        {"sigma_lb.svg", "Inertial attitude sigma_lb", "MRP", "sigma_lb", &TelemetryRecord::sigma_lb},
        {"u_N.svg", "Reaching control u_N", "N m", "u_N", &TelemetryRecord::u_n},
        {"u_eq.svg", "Equivalent control u_eq", "N m", "u_eq", &TelemetryRecord::u_eq},
    }};

    std::vector<std::filesystem::path> written;
    for (const auto& c : charts) {
        const auto path = out_dir / c.file;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
        out << render_line_chart(c.title, c.y_label, t, pick(c.prefix, c.field));
        if (!out) throw std::runtime_error("write failed for " + path.string());
        written.push_back(path);
    }
    return written;
}

}  // namespace attsmc
