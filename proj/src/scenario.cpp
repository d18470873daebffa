// Copyright 2026 The nonloc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nonloc/scenario.hpp"

#include <algorithm>
#include <sstream>

namespace nonloc {

Scenario::Scenario(std::vector<int> settings, std::vector<int> outcomes, size_t table_cap)
    : settings_(std::move(settings)), outcomes_(std::move(outcomes)) {
    if (settings_.empty() || settings_.size() != outcomes_.size()) {
        throw StructuralError("scenario needs matching nonempty settings/outcomes lists");
    }
    for (size_t i = 0; i < settings_.size(); i++) {
        if (settings_[i] < 1) throw StructuralError("party " + std::to_string(i) + " has setting count < 1");
        if (outcomes_[i] < 2) throw StructuralError("party " + std::to_string(i) + " has outcome count < 2");
    }
    for (int s : settings_) {
        if (setting_tuples_ > table_cap / static_cast<size_t>(s)) throw CapExceededError("scenario table size exceeds cap");
        setting_tuples_ *= static_cast<size_t>(s);
    }
    for (int o : outcomes_) {
        if (outcome_tuples_ > table_cap / static_cast<size_t>(o)) throw CapExceededError("scenario table size exceeds cap");
        outcome_tuples_ *= static_cast<size_t>(o);
    }
    if (setting_tuples_ > table_cap / outcome_tuples_) throw CapExceededError("scenario table size exceeds cap");
}

size_t Scenario::encode(std::span<const int> digits, const std::vector<int> &radix) {
    if (digits.size() != radix.size()) throw StructuralError("tuple length does not match party count");
    size_t idx = 0;
    for (size_t i = 0; i < radix.size(); i++) {
        if (digits[i] < 0 || digits[i] >= radix[i]) {
            throw StructuralError("tuple digit " + std::to_string(digits[i]) + " out of range for party " + std::to_string(i));
        }
        idx = idx * static_cast<size_t>(radix[i]) + static_cast<size_t>(digits[i]);
    }
    return idx;
}

std::vector<int> Scenario::decode(size_t idx, const std::vector<int> &radix) {
    std::vector<int> digits(radix.size());
    for (size_t i = radix.size(); i-- > 0;) {
        digits[i] = static_cast<int>(idx % static_cast<size_t>(radix[i]));
        idx /= static_cast<size_t>(radix[i]);
    }
    return digits;
}

Scenario Scenario::restrict(std::span<const int> parties) const {
    std::vector<int> s, o;
    for (int p : parties) {
        if (p < 0 || p >= party_count()) throw StructuralError("party index out of range");
        s.push_back(settings_[p]);
        o.push_back(outcomes_[p]);
    }
    return Scenario(std::move(s), std::move(o));
}

std::string Scenario::describe() const {
    std::ostringstream out;
    out << party_count() << " parties; settings (";
    for (size_t i = 0; i < settings_.size(); i++) out << (i ? "," : "") << settings_[i];
    out << "); outcomes (";
    for (size_t i = 0; i < outcomes_.size(); i++) out << (i ? "," : "") << outcomes_[i];
    out << ")";
    return out.str();
}

Bipartition::Bipartition(std::vector<int> block_a, std::vector<int> block_b, int party_count)
    : block_a_(std::move(block_a)), block_b_(std::move(block_b)), party_count_(party_count) {
    std::sort(block_a_.begin(), block_a_.end());
    std::sort(block_b_.begin(), block_b_.end());
    if (block_a_.empty() || block_b_.empty()) throw StructuralError("bipartition blocks must be nonempty");
    std::vector<int> all;
    all.reserve(block_a_.size() + block_b_.size());
    all.insert(all.end(), block_a_.begin(), block_a_.end());
    all.insert(all.end(), block_b_.begin(), block_b_.end());
    std::sort(all.begin(), all.end());
    for (int p = 0; p < party_count; p++) {
        if (static_cast<size_t>(p) >= all.size() || all[p] != p) {
            throw StructuralError("bipartition blocks must partition the parties");
        }
    }
    if (all.size() != static_cast<size_t>(party_count)) throw StructuralError("bipartition blocks must partition the parties");
    if (block_a_[0] != 0) std::swap(block_a_, block_b_);
}

bool Bipartition::contains_in_a(int party) const {
    return std::binary_search(block_a_.begin(), block_a_.end(), party);
}

std::string Bipartition::describe() const {
    std::ostringstream out;
    for (size_t i = 0; i < block_a_.size(); i++) out << (i ? "," : "") << block_a_[i];
    out << ":";
    for (size_t i = 0; i < block_b_.size(); i++) out << (i ? "," : "") << block_b_[i];
    return out.str();
}

std::vector<Bipartition> bipartitions(int m) {
    if (m < 2) throw StructuralError("bipartitions need at least 2 parties");
    std::vector<Bipartition> result;
    // Block A always contains party 0; enumerate subsets of the remaining m-1
    // parties joining it, excluding the full set.
    uint64_t limit = uint64_t{1} << (m - 1);
    for (uint64_t mask = 0; mask + 1 < limit; mask++) {
        std::vector<int> a{0}, b;
        for (int p = 1; p < m; p++) {
            if (mask & (uint64_t{1} << (p - 1))) {
                a.push_back(p);
            } else {
                b.push_back(p);
            }
        }
        result.emplace_back(std::move(a), std::move(b), m);
    }
    return result;
}

}  // namespace nonloc
