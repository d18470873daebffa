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

#ifndef NONLOC_CERTIFY_HPP
#define NONLOC_CERTIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nonloc/dense.hpp"
#include "nonloc/ensemble.hpp"
#include "nonloc/epr2.hpp"

namespace nonloc {

uint64_t fnv1a64(std::string_view text);
std::string hex64(uint64_t v);

/// One audited leaf of a certification run: an outcome record, its total
/// probability, and whether the conditional pair state passed the check.
struct LeafAudit {
    std::vector<int> outcomes;
    Rational weight;
    bool pass = false;
    std::string note;
};

/// Machine-checkable record of a theorem-1 branch audit or a theorem-2
/// bipartition covering. A PASS asserts p_NS = 1 as a theorem-level
/// consequence, never as a finite-LP value; FAIL only means the sufficient
/// criterion was not met.
struct Certificate {
    std::string kind;     // "theorem1" | "theorem2"
    std::string subject;  // state/ensemble identifier
    std::string protocol_hash;
    int parties = 0;
    std::pair<int, int> pair{-1, -1};
    std::string basis = "theorem";
    bool pass = false;
    std::string caveat;  // "criterion not met" on FAIL
    std::string note;
    std::vector<LeafAudit> audit;                                     // theorem1
    std::vector<std::pair<Bipartition, std::pair<int, int>>> covering;  // theorem2
    std::string first_failure;
};

/// Audits a measurement protocol for Theorem 1: every outcome of the
/// protocol (run by parties other than the pair) must leave the designated
/// pair qubits in one definite pure maximally entangled state. Leaves are
/// grouped by outcome record, so ensemble branches that remain mixed after
/// conditioning are caught.
Certificate theorem1_certify(const StabilizerEnsemble &e, const PartySystem &parties, std::pair<int, int> pair,
                             const Protocol &proto, const std::string &subject);

/// Dense fallback for non-stabilizer pure states: projective steps only,
/// tolerance-based checks, flagged in the certificate note.
struct DenseStep {
    int party;
    std::vector<CMatrix> projectors;  // complete projective measurement
};
Certificate theorem1_certify_dense(const PureState &state, std::pair<int, int> pair,
                                   const std::vector<DenseStep> &steps, const std::string &subject, double tol = 1e-9);

/// Theorem 2: PASS iff every bipartition of the parties is straddled by the
/// pair of some PASSing theorem-1 certificate on the same subject.
Certificate theorem2_certify(const std::vector<Certificate> &certs);

/// Complete-graph demonstration: K_m graph state, all pairs certified via
/// Z measurements on the other vertices, then the theorem-2 covering.
struct CertificationBundle {
    std::string subject;
    std::vector<Certificate> pair_certs;
    Certificate theorem2;
    bool pass = false;
};
CertificationBundle certify_complete_graph(int m);

/// Five-copy Smolin demonstration over all 10 party pairs.
CertificationBundle smolin_demo();

/// Negative control: a single Smolin copy with C and D measuring separately
/// cannot certify the pair (A,B).
Certificate smolin_negative_control();

/// Singlet local-fraction upper bounds from the chained measurement family.
struct SweepRow {
    int n_settings;
    double p_local;
};
std::vector<SweepRow> chained_sweep(const std::vector<int> &n_values, const PolytopeCaps &caps = {});

}  // namespace nonloc

#endif
