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

#include "jcsim/trajectory.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "jcsim/errors.hpp"

namespace jcsim {

std::string format_double(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

Trajectory::Trajectory(std::vector<std::string> columns) : columns_(std::move(columns)) {
    for (const std::string &c : columns_) {
        if (c.empty() || c == "t" || c.find(',') != std::string::npos) {
            throw ValidationError("Trajectory: invalid column name '" + c + "'");
        }
    }
}

void Trajectory::push_back(double t, std::vector<double> row) {
    if (row.size() != columns_.size()) {
        throw ValidationError("Trajectory: row width does not match columns");
    }
    if (!std::isfinite(t) || (!times_.empty() && !(t > times_.back()))) {
        throw ValidationError("Trajectory: times must be finite and strictly increasing");
    }
    times_.push_back(t);
    values_.push_back(std::move(row));
}

std::size_t Trajectory::column_index(const std::string &name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (columns_[i] == name) {
            return i;
        }
    }
    throw ValidationError("Trajectory: no column named '" + name + "'");
}

double Trajectory::value(std::size_t i, const std::string &column) const {
    return values_.at(i).at(column_index(column));
}

std::vector<double> Trajectory::column(const std::string &name) const {
    const std::size_t c = column_index(name);
    std::vector<double> out;
    out.reserve(values_.size());
    for (const auto &row : values_) {
        out.push_back(row[c]);
    }
    return out;
}

Trajectory Trajectory::rescaled_time(double factor) const {
    if (!(factor > 0.0)) {
        throw ValidationError("Trajectory: time scale factor must be positive");
    }
    Trajectory out(columns_);
    for (std::size_t i = 0; i < times_.size(); ++i) {
        out.push_back(times_[i] * factor, values_[i]);
    }
    return out;
}

std::string Trajectory::to_csv() const {
    std::ostringstream os;
    os << 't';
    for (const std::string &c : columns_) {
        os << ',' << c;
    }
    os << '\n';
    for (std::size_t i = 0; i < times_.size(); ++i) {
        os << format_double(times_[i]);
        for (double v : values_[i]) {
            os << ',' << format_double(v);
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::json Trajectory::to_json() const {
    nlohmann::json j;
    j["columns"] = columns_;
    j["t"] = times_;
    for (const std::string &c : columns_) {
        j[c] = column(c);
    }
    return j;
}

}  // namespace jcsim
