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

#pragma once

#include <string>
#include <vector>

#include "shadows/observable.hpp"

namespace shadows {

struct NamedObservable {
    std::string id;
    Observable observable;
};

/// Parses an observable list written as JSON:
///
///   {"num_qubits": 3, "observables": [
///     {"id": "ghz", "kind": "fidelity", "state": "ghz:3"},
///     {"id": "t", "kind": "fidelity", "stabilizers": ["+XXX", "+ZZI", "+IZZ"]},
///     {"id": "z0", "kind": "dense", "matrix": [[[re, im], ...], ...]},
///     {"id": "w", "kind": "witness", "alpha": 0.5, "locals": [U_A, U_B, U_C]}]}
///
/// Matrices are row-major lists of rows of [re, im] pairs; witness locals are
/// 2x2 matrices in the same form. "num_qubits" is optional. Throws
/// std::invalid_argument on malformed input.
std::vector<NamedObservable> parse_observables(const std::string &text);
std::vector<NamedObservable> load_observables(const std::string &path);

/// Inverse of parse_observables (fidelity targets written as stabilizers).
std::string format_observables(const std::vector<NamedObservable> &observables);

}  // namespace shadows
