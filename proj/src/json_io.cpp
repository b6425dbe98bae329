// Copyright 2026 The qcorr Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "qcorr/errors.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

namespace {

using nlohmann::json;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

json entries_of(const CMatrix &m) {
    json entries = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            entries.push_back({m(r, c).real(), m(r, c).imag()});
        }
    }
    return entries;
}

CMatrix matrix_from_entries(const json &entries, Eigen::Index rows, Eigen::Index cols) {
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows * cols)) {
        throw DimensionMismatch("expected " + std::to_string(rows * cols) +
                                " matrix entries, got " + std::to_string(entries.size()));
    }
    CMatrix m(rows, cols);
    std::size_t i = 0;
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (Eigen::Index c = 0; c < cols; ++c, ++i) {
            const json &e = entries[i];
            if (!e.is_array() || e.size() != 2) {
                throw DimensionMismatch("matrix entries must be [re, im] pairs");
            }
            m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

SetKind set_kind_from_name(const std::string &name) {
    const std::string k = lower(name);
    if (k == "circle_fixed_ftheta") {
        return SetKind::CircleFixedFTheta;
    }
    if (k == "circle_fixed_phi") {
        return SetKind::CircleFixedPhi;
    }
    if (k == "disc_stack") {
        return SetKind::DiscStack;
    }
    if (k == "sphere_grid") {
        return SetKind::SphereGrid;
    }
    if (k == "triad") {
        return SetKind::Triad;
    }
    if (k == "spin_triad") {
        return SetKind::SpinTriad;
    }
    throw OutOfRange("unknown set kind '" + name + "'");
}

} // namespace

const char *measure_name(Measure m) { return m == Measure::QD ? "qd" : "qwd"; }

Measure measure_from_name(const std::string &name) {
    const std::string m = lower(name);
    if (m == "qd") {
        return Measure::QD;
    }
    if (m == "qwd") {
        return Measure::QWD;
    }
    throw OutOfRange("unknown measure '" + name + "' (expected qd or qwd)");
}

std::string state_to_json(const BipartiteDensityMatrix &rho, int indent) {
    json doc;
    doc["dA"] = rho.dA;
    doc["dB"] = rho.dB;
    doc["entries"] = entries_of(rho.m);
    return doc.dump(indent);
}

BipartiteDensityMatrix state_from_json(const std::string &text) {
    BipartiteDensityMatrix rho;
    try {
        const json doc = json::parse(text);
        rho.dA = doc.at("dA").get<int>();
        rho.dB = doc.at("dB").get<int>();
        if (rho.dA < 1 || rho.dB < 1) {
            throw DimensionMismatch("dA and dB must be positive");
        }
        const auto d = static_cast<Eigen::Index>(rho.dim());
        rho.m = matrix_from_entries(doc.at("entries"), d, d);
    } catch (const json::exception &e) {
        throw DimensionMismatch(std::string("malformed state document: ") + e.what());
    }
    validate_state(rho);
    return rho;
}

std::string set_to_json(const EarmarkedSet &set, int indent) {
    json doc;
    doc["kind"] = set_kind_name(set.kind);
    doc["params"] = set.params;
    doc["n"] = set.size();
    return doc.dump(indent);
}

EarmarkedSet set_from_json(const std::string &text) {
    json doc;
    SetKind kind = SetKind::Triad;
    std::vector<double> params;
    try {
        doc = json::parse(text);
        kind = set_kind_from_name(doc.at("kind").get<std::string>());
        if (doc.contains("params")) {
            params = doc.at("params").get<std::vector<double>>();
        }
    } catch (const json::exception &e) {
        throw OutOfRange(std::string("malformed set recipe: ") + e.what());
    }
    auto param = [&](std::size_t i) {
        if (i >= params.size()) {
            throw OutOfRange("set recipe is missing parameter " + std::to_string(i));
        }
        return params[i];
    };
    EarmarkedSet set;
    switch (kind) {
    case SetKind::CircleFixedFTheta:
        set = circle_fixed_ftheta(param(0), static_cast<int>(param(1)));
        break;
    case SetKind::CircleFixedPhi:
        set = circle_fixed_phi(param(0), static_cast<int>(param(1)));
        break;
    case SetKind::DiscStack:
        set = disc_stack(param(0), static_cast<int>(param(1)), static_cast<int>(param(2)));
        break;
    case SetKind::SphereGrid:
        set = sphere_grid(static_cast<int>(param(0)), static_cast<int>(param(1)));
        break;
    case SetKind::Triad:
        set = triad(2);
        break;
    case SetKind::SpinTriad:
        set = triad(3);
        break;
    }
    if (doc.contains("n")) {
        int declared = 0;
        try {
            declared = doc.at("n").get<int>();
        } catch (const json::exception &e) {
            throw OutOfRange(std::string("malformed set recipe: ") + e.what());
        }
        if (declared != set.size()) {
            throw OutOfRange("set recipe declares " + std::to_string(declared) +
                             " bases but reconstructs to " + std::to_string(set.size()));
        }
    }
    return set;
}

std::string eval_to_json(const CorrelationEval &eval, int indent) {
    json doc;
    doc["measure"] = measure_name(eval.measure);
    doc["value_constrained"] =
        eval.value_constrained ? json(*eval.value_constrained) : json(nullptr);
    doc["value_actual"] = eval.value_actual ? json(*eval.value_actual) : json(nullptr);
    doc["ve"] = eval.ve ? json(*eval.ve) : json(nullptr);
    doc["optimal_basis_index"] = eval.optimal_basis_index;
    if (eval.optimal_params) {
        doc["optimal_params"] = {{"f_theta", eval.optimal_params->f_theta},
                                 {"phi", eval.optimal_params->phi}};
    } else {
        doc["optimal_params"] = nullptr;
    }
    doc["optimal_basis"] = eval.optimal_basis ? entries_of(*eval.optimal_basis) : json(nullptr);
    return doc.dump(indent);
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write file '" + path + "'");
    }
    out << content;
    if (!out) {
        throw Error("write to '" + path + "' failed");
    }
}

} // namespace qcorr
