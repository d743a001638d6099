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

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "attsmc/plots.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace attsmc;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Minimal well-formedness check: every element opened is closed in order.
bool balanced_xml(const std::string& text) {
    std::vector<std::string> stack;
    const std::regex tag(R"(<(/?)([A-Za-z][\w:-]*)[^>]*?(/?)>)");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), tag); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        if (m[3].length() > 0) continue;
        if (m[1].length() == 0) {
            stack.push_back(m[2]);
        } else {
            if (stack.empty() || stack.back() != m[2]) return false;
            stack.pop_back();
        }
    }
    return stack.empty();
}

// Last y pixel of the k-th polyline.
double last_point_y(const std::string& svg, int k) {
    std::size_t pos = 0;
    for (int i = 0; i <= k; ++i) pos = svg.find("<polyline", pos + 1);
    const auto start = svg.find("points=\"", pos) + 8;
    const auto end = svg.find('"', start);
    const std::string pts = svg.substr(start, end - start);
    const auto comma = pts.rfind(',');
    return std::stod(pts.substr(comma + 1));
}

}  // namespace

TEST_SUITE("plots") {

TEST_CASE("six well-formed charts for the reference run") {
    const auto records = run_simulation(reference_scenario());
    const auto dir = testing_support::scratch_dir("plots");
    const auto files = emit_plots(records, dir / "nested");
    REQUIRE(files.size() == 6);
    for (const char* name : {"xi.svg", "omega.svg", "sigma_db.svg", "sigma_lb.svg", "u_N.svg", "u_eq.svg"}) {
        const auto text = slurp(dir / "nested" / name);
        CAPTURE(name);
        CHECK(text.rfind("<?xml", 0) == 0);
        CHECK(text.find("<svg") != std::string::npos);
        CHECK(balanced_xml(text));
        // three series plus three legend entries
        std::size_t n = 0;
        for (std::size_t p = text.find("<polyline"); p != std::string::npos; p = text.find("<polyline", p + 1)) ++n;
        CHECK(n == 3);
        CHECK(text.find("time (s)") != std::string::npos);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("series end where the trajectory ends") {
    const auto records = run_simulation(reference_scenario());
    const auto& last = records.back();
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(last.xi[i]) < 1e-6);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(last.sigma_lb[i] - reference_scenario().sigma_ld[i]) < 1e-3);

    // All three xi series end on the same pixel row (the zero line).
    std::vector<double> t;
    std::array<Series, 3> xi;
    for (const auto& r : records) {
        t.push_back(r.t);
        for (std::size_t k = 0; k < 3; ++k) xi[k].y.push_back(r.xi[k]);
    }
    const std::string svg = render_line_chart("xi", "xi", t, xi);
    const double y_end0 = last_point_y(svg, 0);
    const double y_end1 = last_point_y(svg, 1);
    const double y_end2 = last_point_y(svg, 2);
    CHECK(std::abs(y_end0 - y_end1) < 1.0);
    CHECK(std::abs(y_end1 - y_end2) < 1.0);
}

TEST_CASE("degenerate inputs") {
    std::array<Series, 3> flat{Series{"a", {1.0}}, Series{"b", {1.0}}, Series{"c", {1.0}}};
    const auto svg = render_line_chart("flat & <odd>", "y", {0.0}, flat);
    CHECK(balanced_xml(svg));
    CHECK(svg.find("flat &amp; &lt;odd&gt;") != std::string::npos);
    CHECK_THROWS_AS(render_line_chart("x", "y", {}, flat), std::invalid_argument);
    CHECK_THROWS_AS(emit_plots({}, testing_support::scratch_dir("empty")), std::invalid_argument);
}

}
