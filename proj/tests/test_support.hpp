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

#ifndef ATTSMC_TESTS_SUPPORT_HPP
#define ATTSMC_TESTS_SUPPORT_HPP

#include <filesystem>
#include <random>
#include <string>

#include "attsmc/smc.hpp"

namespace testing_support {

/// The sliding-mode law with the sign of the reaching term flipped.
inline attsmc::ControlLaw flipped_reaching_law() {
    return [](const attsmc::InertiaTensor& j, const attsmc::SmcGains& g, const attsmc::Vec3& omega,
              const attsmc::Vec3& sigma_db) {
        auto u = attsmc::total_torque(j, g, omega, sigma_db);
        u.u_n = -u.u_n;
        u.tau = u.u_eq + u.u_n;
        return u;
    };
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() /
                     ("attsmc_test_" + name + "_" + std::to_string(std::random_device{}()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace testing_support

#endif  // ATTSMC_TESTS_SUPPORT_HPP
