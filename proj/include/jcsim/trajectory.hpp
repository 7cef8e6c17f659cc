// Copyright 2026 The jcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace jcsim {

/// Sampled observables: one row of values per time, one column per name.
class Trajectory {
  public:
    explicit Trajectory(std::vector<std::string> columns);

    /// Times must be strictly increasing; row width must match columns().
    void push_back(double t, std::vector<double> row);

    const std::vector<std::string> &columns() const noexcept { return columns_; }
    const std::vector<double> &times() const noexcept { return times_; }
    std::size_t size() const noexcept { return times_.size(); }
    std::span<const double> row(std::size_t i) const { return values_.at(i); }
    double value(std::size_t i, const std::string &column) const;
    std::vector<double> column(const std::string &name) const;
    std::size_t column_index(const std::string &name) const;

    /// Copy with the time axis multiplied by `factor` (e.g. g for g*t units).
    Trajectory rescaled_time(double factor) const;

    /// Header `t,<col1>,<col2>,...`; numbers in shortest round-trip form.
    std::string to_csv() const;
    /// {"columns": [...], "t": [...], "<col>": [...], ...}
    nlohmann::json to_json() const;

  private:
    std::vector<std::string> columns_;
    std::vector<double> times_;
    std::vector<std::vector<double>> values_;
};

/// Shortest decimal that round-trips to `x`.
std::string format_double(double x);

}  // namespace jcsim
