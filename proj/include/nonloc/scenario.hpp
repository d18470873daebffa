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

#ifndef NONLOC_SCENARIO_HPP
#define NONLOC_SCENARIO_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nonloc/errors.hpp"

namespace nonloc {

/// Measurement scenario: party count with per-party setting and outcome counts.
///
/// Tables over a scenario are indexed row-major with the settings tuple outer
/// and the outcomes tuple inner; within each tuple party 0 is most significant.
class Scenario {
   public:
    Scenario() = default;
    Scenario(std::vector<int> settings, std::vector<int> outcomes, size_t table_cap = kDefaultTableCap);

    static constexpr size_t kDefaultTableCap = size_t{1} << 22;

    int party_count() const { return static_cast<int>(settings_.size()); }
    const std::vector<int> &settings() const { return settings_; }
    const std::vector<int> &outcomes() const { return outcomes_; }
    size_t setting_tuples() const { return setting_tuples_; }
    size_t outcome_tuples() const { return outcome_tuples_; }
    size_t table_size() const { return setting_tuples_ * outcome_tuples_; }

    bool operator==(const Scenario &other) const {
        return settings_ == other.settings_ && outcomes_ == other.outcomes_;
    }

    size_t setting_index(std::span<const int> x) const { return encode(x, settings_); }
    size_t outcome_index(std::span<const int> a) const { return encode(a, outcomes_); }
    size_t index(std::span<const int> x, std::span<const int> a) const {
        return setting_index(x) * outcome_tuples_ + outcome_index(a);
    }

    std::vector<int> decode_setting(size_t idx) const { return decode(idx, settings_); }
    std::vector<int> decode_outcome(size_t idx) const { return decode(idx, outcomes_); }

    /// Scenario restricted to the given parties, order preserved.
    Scenario restrict(std::span<const int> parties) const;

    std::string describe() const;

   private:
    static size_t encode(std::span<const int> digits, const std::vector<int> &radix);
    static std::vector<int> decode(size_t idx, const std::vector<int> &radix);

    std::vector<int> settings_;
    std::vector<int> outcomes_;
    size_t setting_tuples_ = 1;
    size_t outcome_tuples_ = 1;
};

/// Split of the parties into two disjoint nonempty blocks covering everyone.
/// Canonical form keeps the lowest party index in block A.
class Bipartition {
   public:
    Bipartition(std::vector<int> block_a, std::vector<int> block_b, int party_count);

    const std::vector<int> &block_a() const { return block_a_; }
    const std::vector<int> &block_b() const { return block_b_; }
    int party_count() const { return party_count_; }

    bool contains_in_a(int party) const;

    /// True when the two named parties land on opposite sides.
    bool straddles(int party_i, int party_j) const {
        return contains_in_a(party_i) != contains_in_a(party_j);
    }

    bool operator==(const Bipartition &other) const {
        return block_a_ == other.block_a_ && block_b_ == other.block_b_;
    }

    std::string describe() const;

   private:
    std::vector<int> block_a_;
    std::vector<int> block_b_;
    int party_count_ = 0;
};

/// All 2^(m-1) - 1 canonical bipartitions of m parties, in deterministic order.
std::vector<Bipartition> bipartitions(int m);

}  // namespace nonloc

#endif
