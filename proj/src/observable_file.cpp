// Copyright 2026 The Shadows Authors
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

#include "shadows/observable_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "shadows/state_library.hpp"

namespace shadows {

namespace {

using nlohmann::json;

Eigen::MatrixXcd parse_matrix(const json &rows, const std::string &where) {
    if (!rows.is_array() || rows.empty()) {
        throw std::invalid_argument(where + ": matrix must be a non-empty list of rows");
    }
    auto dim = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        const json &row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            throw std::invalid_argument(where + ": matrix must be square");
        }
        for (Eigen::Index j = 0; j < dim; j++) {
            const json &entry = row[static_cast<size_t>(j)];
            if (entry.is_number()) {
                m(i, j) = entry.get<double>();
            } else if (entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number()) {
                m(i, j) = {entry[0].get<double>(), entry[1].get<double>()};
            } else {
                throw std::invalid_argument(where + ": matrix entries must be numbers or [re, im] pairs");
            }
        }
    }
    return m;
}

json format_matrix(const Eigen::MatrixXcd &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

size_t qubits_for_dimension(Eigen::Index dim, const std::string &where) {
    size_t n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        n++;
    }
    if ((Eigen::Index{1} << n) != dim) {
        throw std::invalid_argument(where + ": matrix dimension is not a power of two");
    }
    return n;
}

Observable parse_one(const json &entry, const std::string &where) {
    std::string kind = entry.at("kind").get<std::string>();
    if (kind == "fidelity") {
        if (entry.contains("state")) {
            return Observable::fidelity(parse_stabilizer_spec(entry.at("state").get<std::string>()));
        }
        std::vector<PauliString> generators;
        for (const json &p : entry.at("stabilizers")) {
            generators.push_back(PauliString::from_string(p.get<std::string>()));
        }
        return Observable::fidelity(StabilizerTableau::from_stabilizers(generators));
    }
    if (kind == "dense") {
        Eigen::MatrixXcd m = parse_matrix(entry.at("matrix"), where);
        size_t n = qubits_for_dimension(m.rows(), where);
        return Observable::dense(DenseOperator::from_matrix(n, std::move(m)));
    }
    if (kind == "witness") {
        WitnessSpec spec;
        spec.alpha = entry.at("alpha").get<double>();
        const json &locals = entry.at("locals");
        if (!locals.is_array() || locals.size() != 3) {
            throw std::invalid_argument(where + ": a witness needs exactly three local unitaries");
        }
        for (size_t q = 0; q < 3; q++) {
            Eigen::MatrixXcd u = parse_matrix(locals[q], where);
            if (u.rows() != 2) {
                throw std::invalid_argument(where + ": witness locals must be 2x2");
            }
            spec.locals[q] = u;
        }
        return Observable::witness(spec);
    }
    throw std::invalid_argument(where + ": unknown observable kind '" + kind + "'");
}

}  // namespace

std::vector<NamedObservable> parse_observables(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("observable file is not valid JSON: ") + e.what());
    }
    std::vector<NamedObservable> result;
    try {
        const json &list = doc.at("observables");
        if (!list.is_array()) {
            throw std::invalid_argument("'observables' must be a list");
        }
        for (size_t i = 0; i < list.size(); i++) {
            const json &entry = list[i];
            std::string id = entry.contains("id") ? entry.at("id").get<std::string>() : "obs" + std::to_string(i);
            result.push_back({id, parse_one(entry, "observable '" + id + "'")});
        }
        if (doc.contains("num_qubits")) {
            auto n = doc.at("num_qubits").get<size_t>();
            for (const NamedObservable &o : result) {
                if (o.observable.num_qubits() != n) {
                    throw std::invalid_argument("observable '" + o.id + "' acts on " +
                                                std::to_string(o.observable.num_qubits()) +
                                                " qubits, file declares " + std::to_string(n));
                }
            }
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed observable file: ") + e.what());
    }
    return result;
}

std::vector<NamedObservable> load_observables(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open observable file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_observables(buffer.str());
}

std::string format_observables(const std::vector<NamedObservable> &observables) {
    json list = json::array();
    for (const NamedObservable &o : observables) {
        json entry;
        entry["id"] = o.id;
        entry["kind"] = o.observable.kind_name();
        const Observable::Kind &kind = o.observable.kind();
        if (const auto *f = std::get_if<StabilizerFidelity>(&kind)) {
            json gens = json::array();
            for (const PauliString &p : f->target.stabilizers()) {
                gens.push_back(p.to_string());
            }
            entry["stabilizers"] = gens;
        } else if (const auto *w = std::get_if<Witness>(&kind)) {
            entry["alpha"] = w->spec.alpha;
            json locals = json::array();
            for (const Eigen::Matrix2cd &u : w->spec.locals) {
                locals.push_back(format_matrix(u));
            }
            entry["locals"] = locals;
        } else {
            entry["matrix"] = format_matrix(std::get<DenseHermitian>(kind).op.matrix);
        }
        list.push_back(entry);
    }
    json doc;
    if (!observables.empty()) {
        doc["num_qubits"] = observables.front().observable.num_qubits();
    }
    doc["observables"] = list;
    return doc.dump(2);
}

}  // namespace shadows
