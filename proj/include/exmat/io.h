// Copyright 2026 The Authors.
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

#ifndef EXMAT_IO_H_
#define EXMAT_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "exmat/base_exchange.h"
#include "exmat/brute_force.h"
#include "exmat/counterexample.h"
#include "exmat/models.h"

// Matroid files and result documents.
//
// Matroid files:
//   {"type": "uniform", "rank": 2, "ground": ["a", "b", "c"]}
//   {"type": "graphic", "vertices": 4, "edges": [[0, 1, "12"], ...]}
//   {"type": "gf2", "columns": {"a": [1, 0], "b": [0, 1]}}
//
// Result documents:
//   {"command": ..., "input_digest": <sha256 hex>, "certificates": [...],
//    "valid": bool}
// Every certificate is an object with a "kind" key and enough data to be
// re-checked against the matroid named by the digest.

namespace exmat::io {

using Json = nlohmann::json;

// Throws ParseError for malformed JSON, unknown types, wrong field types or
// a description that violates its invariants.
MatroidDescription MatroidFromJson(const Json& j);
MatroidDescription ParseMatroid(std::string_view text);

Json MatroidToJson(const MatroidDescription& d);
// Canonical text: sorted keys, two-space indent, trailing newline.
std::string SerializeMatroid(const MatroidDescription& d);

std::string CanonicalDump(const Json& j);
std::string Sha256Hex(std::string_view bytes);
// Digest of SerializeMatroid(d).
std::string MatroidDigest(const MatroidDescription& d);

Json SetToJson(const LabelTable& labels, const ElementSet& s);
// Throws DomainError for unknown labels and ParseError for non-string items.
ElementSet SetFromJson(const LabelTable& labels, const Json& j);

Json SymmetricCertificateJson(const LabelTable& labels, const ElementSet& b0,
                              const ElementSet& b1,
                              const SymmetricExchangeCertificate& cert);
Json PartitionCertificateJson(const LabelTable& labels, const ElementSet& b0,
                              const ElementSet& b1,
                              const PartitionExchangePlan& plan);
Json SerialCertificateJson(const LabelTable& labels, const ElementSet& b0,
                           const ElementSet& b1, const SerialOrder& order);
Json BijectionCertificateJson(
    const LabelTable& labels, const ElementSet& b0, const ElementSet& b1,
    std::size_t max_size,
    const std::vector<std::pair<ElementSet, ElementSet>>& pairs);
Json ForcedPrefixCertificateJson(const ForcedPrefixReport& report);
Json AxiomsCertificateJson(const LabelTable& labels, const OracleReport& report);
Json BasesCertificateJson(const LabelTable& labels,
                          const std::vector<ElementSet>& bases);
Json ExchangeSearchCertificateJson(const LabelTable& labels, const ElementSet& b0,
                                   const ElementSet& b1, const ElementSet& x,
                                   const std::vector<ElementSet>& ys);
Json BijectionSearchCertificateJson(const LabelTable& labels, const ElementSet& b0,
                                    const ElementSet& b1, std::size_t k,
                                    const BijectionSearchResult& result);

// Re-checks one certificate. `m` may be null for kinds that do not refer to
// a matroid. Returns an empty string when the certificate holds.
std::string CheckCertificateJson(const Json& cert, const MatroidView* m);

struct DocumentCheck {
  bool valid = false;
  std::vector<std::string> problems;
};

// Structural checks plus CheckCertificateJson on every certificate. If
// `matroid` is given, the digest must match it.
DocumentCheck CheckResultDocument(const Json& doc,
                                  const MatroidDescription* matroid);

// Assembles a document; "valid" is computed by serializing the certificates,
// parsing them back and re-checking each one.
Json MakeResultDocument(const std::string& command, const std::string& digest,
                        Json certificates, const MatroidView* m);

}  // namespace exmat::io

#endif  // EXMAT_IO_H_
