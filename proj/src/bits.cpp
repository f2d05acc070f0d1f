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

#include "shadows/bits.hpp"

#include <stdexcept>

namespace shadows {

BitVector BitVector::from_string(const std::string &text) {
    BitVector result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            result.set(k, true);
        } else if (text[k] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1': " + text);
        }
    }
    return result;
}

size_t BitVector::count() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

std::string BitVector::to_string() const {
    std::string result(size_, '0');
    for (size_t k = 0; k < size_; k++) {
        if ((*this)[k]) {
            result[k] = '1';
        }
    }
    return result;
}

}  // namespace shadows
