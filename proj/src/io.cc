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

#include "exmat/io.h"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <optional>
#include <set>

#include "exmat/errors.h"

namespace exmat::io {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t Count(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::string Str(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> StrList(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const Json& item : j) out.push_back(Str(item, what));
  return out;
}

template <typename Desc>
Desc Validated(Desc d) {
  try {
    Validate(d);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return d;
}

}  // namespace

MatroidDescription MatroidFromJson(const Json& j) {
  const std::string type = Str(Field(j, "type"), "type");
  if (type == "uniform") {
    UniformDescription d;
    d.rank = Count(Field(j, "rank"), "rank");
    d.ground = StrList(Field(j, "ground"), "ground");
    return Validated(std::move(d));
  }
  if (type == "graphic") {
    MultiGraph g;
    g.vertex_count = Count(Field(j, "vertices"), "vertices");
    const Json& edges = Field(j, "edges");
    if (!edges.is_array()) throw ParseError("edges must be an array");
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 3) {
        throw ParseError("each edge must be [u, v, \"label\"]");
      }
      g.edges.push_back({Str(e[2], "edge label"), Count(e[0], "edge endpoint"),
                         Count(e[1], "edge endpoint")});
    }
    return Validated(std::move(g));
  }
  if (type == "gf2") {
    Gf2Matrix m;
    const Json& columns = Field(j, "columns");
    if (!columns.is_object()) throw ParseError("columns must be an object");
    bool first = true;
    for (const auto& [label, bits] : columns.items()) {
      if (!bits.is_array()) throw ParseError("column '" + label + "' must be an array");
      std::vector<std::uint8_t> column;
      for (const Json& b : bits) {
        if (!b.is_number_unsigned() || b.get<std::uint64_t>() > 1) {
          throw ParseError("column '" + label + "' has an entry other than 0 or 1");
        }
        column.push_back(b.get<std::uint8_t>());
      }
      if (first) m.row_count = column.size();
      first = false;
      m.columns.emplace(label, std::move(column));
    }
    return Validated(std::move(m));
  }
  throw ParseError("unknown matroid type '" + type + "'");
}

MatroidDescription ParseMatroid(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return MatroidFromJson(j);
}

Json MatroidToJson(const MatroidDescription& d) {
  return std::visit(
      [](const auto& desc) -> Json {
        using T = std::decay_t<decltype(desc)>;
        Json j;
        if constexpr (std::is_same_v<T, UniformDescription>) {
          j["type"] = "uniform";
          j["rank"] = desc.rank;
          j["ground"] = desc.ground;
        } else if constexpr (std::is_same_v<T, MultiGraph>) {
          j["type"] = "graphic";
          j["vertices"] = desc.vertex_count;
          j["edges"] = Json::array();
          for (const GraphEdge& e : desc.edges) {
            j["edges"].push_back(Json::array({e.u, e.v, e.label}));
          }
        } else {
          j["type"] = "gf2";
          j["columns"] = Json::object();
          for (const auto& [label, bits] : desc.columns) {
            Json column = Json::array();
            for (std::uint8_t b : bits) column.push_back(static_cast<int>(b));
            j["columns"][label] = std::move(column);
          }
        }
        return j;
      },
      d);
}

std::string CanonicalDump(const Json& j) { return j.dump(2) + "\n"; }

std::string SerializeMatroid(const MatroidDescription& d) {
  return CanonicalDump(MatroidToJson(d));
}

std::string Sha256Hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw InvariantViolation("SHA-256 computation failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

std::string MatroidDigest(const MatroidDescription& d) {
  return Sha256Hex(SerializeMatroid(d));
}

Json SetToJson(const LabelTable& labels, const ElementSet& s) {
  return labels.Labels(s);
}

ElementSet SetFromJson(const LabelTable& labels, const Json& j) {
  return labels.Set(StrList(j, "element set"));
}

namespace {

Json SeqToJson(const LabelTable& labels, const std::vector<ElementId>& seq) {
  Json out = Json::array();
  for (ElementId e : seq) out.push_back(labels.Label(e));
  return out;
}

std::vector<ElementId> SeqFromJson(const LabelTable& labels, const Json& j) {
  std::vector<ElementId> out;
  for (const std::string& l : StrList(j, "sequence")) out.push_back(labels.Id(l));
  return out;
}

Json PairsToJson(const LabelTable& labels,
                 const std::vector<std::pair<ElementSet, ElementSet>>& pairs) {
  Json out = Json::array();
  for (const auto& [i, j] : pairs) {
    out.push_back(Json::array({SetToJson(labels, i), SetToJson(labels, j)}));
  }
  return out;
}

std::vector<std::pair<ElementSet, ElementSet>> PairsFromJson(const LabelTable& labels,
                                                             const Json& j) {
  if (!j.is_array()) throw ParseError("pairs must be an array");
  std::vector<std::pair<ElementSet, ElementSet>> out;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2) throw ParseError("each pair must be [I, J]");
    out.emplace_back(SetFromJson(labels, p[0]), SetFromJson(labels, p[1]));
  }
  return out;
}

Json Header(const char* kind, const LabelTable& labels, const ElementSet& b0,
            const ElementSet& b1) {
  Json j;
  j["kind"] = kind;
  j["b0"] = SetToJson(labels, b0);
  j["b1"] = SetToJson(labels, b1);
  return j;
}

// Checks that pairs form a bijection between the subsets of b0 and b1 with
// sizes in `sizes`, each pair satisfying the basis condition.
std::string CheckPairs(const MatroidView& m, const ElementSet& b0, const ElementSet& b1,
                       const std::vector<std::pair<ElementSet, ElementSet>>& pairs,
                       const std::vector<std::size_t>& sizes) {
  const LabelTable& labels = m.labels();
  std::set<ElementSet> seen_i;
  std::set<ElementSet> seen_j;
  std::map<std::size_t, std::size_t> per_size;
  for (const auto& [i, j] : pairs) {
    if (!i.IsSubsetOf(b0) || !j.IsSubsetOf(b1)) {
      return "pair " + labels.Format(i) + " -> " + labels.Format(j) +
             " leaves b0 or b1";
    }
    if (i.size() != j.size()) {
      return "pair " + labels.Format(i) + " -> " + labels.Format(j) + " changes size";
    }
    if (std::find(sizes.begin(), sizes.end(), i.size()) == sizes.end()) {
      return "pair " + labels.Format(i) + " has an unexpected size";
    }
    if (!seen_i.insert(i).second) return "I = " + labels.Format(i) + " listed twice";
    if (!seen_j.insert(j).second) return "F(I) = " + labels.Format(j) + " hit twice";
    if (!m.IsBasis(b0.Minus(i).Union(j))) {
      return "(b0 \\ I) + F(I) is not a basis for I = " + labels.Format(i);
    }
    ++per_size[i.size()];
  }
  for (std::size_t k : sizes) {
    if (per_size[k] != Binomial(b0.size(), k)) {
      return "wrong number of pairs of size " + std::to_string(k);
    }
  }
  return "";
}

std::string CheckBases(const MatroidView& m, const ElementSet& b0, const ElementSet& b1) {
  if (!m.IsBasis(b0)) return "b0 is not a basis";
  if (!m.IsBasis(b1)) return "b1 is not a basis";
  return "";
}

std::string CheckUnchecked(const Json& cert, const MatroidView* m) {
  const std::string kind = Str(Field(cert, "kind"), "kind");

  if (kind == "forced_prefix") {
    const std::size_t n = Count(Field(cert, "n"), "n");
    const std::size_t k = Count(Field(cert, "k"), "k");
    ForcedPrefixReport fresh = VerifyForcedPrefix(n, k);
    if (ForcedPrefixCertificateJson(fresh) != cert) {
      return "recorded report differs from a fresh enumeration";
    }
    if (fresh.vacuous) return "no candidates: the check is vacuous";
    if (!fresh.passed) return "the expected prefix is not forced";
    if (n >= 5 && LimitWitness(n) != 2) return "limit witness is not 2";
    return "";
  }

  if (m == nullptr) return "certificate of kind '" + kind + "' needs a matroid";
  const LabelTable& labels = m->labels();

  if (kind == "axioms") {
    OracleReport fresh = CheckAxioms(*m);
    if (AxiomsCertificateJson(labels, fresh) != cert) {
      return "recorded axiom report differs from a fresh check";
    }
    if (!fresh.holds()) return "axiom " + fresh.witnesses.front().axiom + " fails";
    return "";
  }
  if (kind == "bases") {
    std::vector<ElementSet> listed;
    for (const Json& b : Field(cert, "bases")) listed.push_back(SetFromJson(labels, b));
    if (listed != AllBases(*m)) return "basis list is not the full list of bases";
    return "";
  }

  const ElementSet b0 = SetFromJson(labels, Field(cert, "b0"));
  const ElementSet b1 = SetFromJson(labels, Field(cert, "b1"));
  if (std::string p = CheckBases(*m, b0, b1); !p.empty()) return p;

  if (kind == "symmetric_exchange") {
    SymmetricExchangeCertificate c{SetFromJson(labels, Field(cert, "x")),
                                   SetFromJson(labels, Field(cert, "y")),
                                   SetFromJson(labels, Field(cert, "base_a")),
                                   SetFromJson(labels, Field(cert, "base_b"))};
    return CheckCertificate(*m, b0, b1, c);
  }
  if (kind == "partition_exchange") {
    PartitionExchangePlan plan;
    for (const Json& c : Field(cert, "classes")) {
      plan.classes.push_back(
          {SetFromJson(labels, Field(c, "x")), SetFromJson(labels, Field(c, "y"))});
    }
    for (const Json& s : Field(cert, "sigma")) plan.sigma.push_back(Count(s, "sigma"));
    return CheckPlan(*m, b0, b1, plan);
  }
  if (kind == "serial_order") {
    SerialOrder order{SeqFromJson(labels, Field(cert, "e")),
                      SeqFromJson(labels, Field(cert, "f"))};
    return CheckSerialOrder(*m, b0, b1, order);
  }
  if (kind == "subset_bijection") {
    const std::size_t max_size = Count(Field(cert, "max_size"), "max_size");
    if (max_size > b0.size()) return "max_size exceeds the rank";
    std::vector<std::size_t> sizes;
    for (std::size_t k = 0; k <= max_size; ++k) sizes.push_back(k);
    return CheckPairs(*m, b0, b1, PairsFromJson(labels, Field(cert, "pairs")), sizes);
  }
  if (kind == "exchange_search") {
    const ElementSet x = SetFromJson(labels, Field(cert, "x"));
    std::vector<ElementSet> ys;
    for (const Json& y : Field(cert, "ys")) ys.push_back(SetFromJson(labels, y));
    if (ys != ExchangeSearch(*m, b0, b1, x)) return "Y list differs from a fresh search";
    if (ys.empty()) return "no valid Y exists";
    return "";
  }
  if (kind == "bijection_search") {
    const std::size_t k = Count(Field(cert, "k"), "k");
    const bool exists = Field(cert, "exists").get<bool>();
    if (!exists) return "no bijection was found";
    return CheckPairs(*m, b0, b1, PairsFromJson(labels, Field(cert, "pairs")), {k});
  }
  return "unknown certificate kind '" + kind + "'";
}

}  // namespace

Json SymmetricCertificateJson(const LabelTable& labels, const ElementSet& b0,
                              const ElementSet& b1,
                              const SymmetricExchangeCertificate& cert) {
  Json j = Header("symmetric_exchange", labels, b0, b1);
  j["x"] = SetToJson(labels, cert.x);
  j["y"] = SetToJson(labels, cert.y);
  j["base_a"] = SetToJson(labels, cert.base_a);
  j["base_b"] = SetToJson(labels, cert.base_b);
  return j;
}

Json PartitionCertificateJson(const LabelTable& labels, const ElementSet& b0,
                              const ElementSet& b1,
                              const PartitionExchangePlan& plan) {
  Json j = Header("partition_exchange", labels, b0, b1);
  j["classes"] = Json::array();
  for (const ExchangeClass& c : plan.classes) {
    j["classes"].push_back({{"x", SetToJson(labels, c.x)}, {"y", SetToJson(labels, c.y)}});
  }
  j["sigma"] = plan.sigma;
  return j;
}

Json SerialCertificateJson(const LabelTable& labels, const ElementSet& b0,
                           const ElementSet& b1, const SerialOrder& order) {
  Json j = Header("serial_order", labels, b0, b1);
  j["e"] = SeqToJson(labels, order.e_seq);
  j["f"] = SeqToJson(labels, order.f_seq);
  return j;
}

Json BijectionCertificateJson(
    const LabelTable& labels, const ElementSet& b0, const ElementSet& b1,
    std::size_t max_size,
    const std::vector<std::pair<ElementSet, ElementSet>>& pairs) {
  Json j = Header("subset_bijection", labels, b0, b1);
  j["max_size"] = max_size;
  j["pairs"] = PairsToJson(labels, pairs);
  return j;
}

Json ForcedPrefixCertificateJson(const ForcedPrefixReport& report) {
  Json j;
  j["kind"] = "forced_prefix";
  j["n"] = report.vertex_count;
  j["k"] = report.k;
  j["candidate_count"] = report.candidate_count;
  j["checks"] = report.checks;
  j["forced_s0"] = report.forced_s0;
  j["forced_s1"] = report.forced_s1;
  j["expected_s0"] = report.expected_s0;
  j["expected_s1"] = report.expected_s1;
  j["cut_sets"] = report.cut_sets;
  j["vacuous"] = report.vacuous;
  j["passed"] = report.passed;
  j["limit_witness"] =
      report.vertex_count >= 5 ? Json(LimitWitness(report.vertex_count)) : Json();
  return j;
}

Json AxiomsCertificateJson(const LabelTable& labels, const OracleReport& report) {
  Json j;
  j["kind"] = "axioms";
  j["checked"] = report.checked;
  j["witnesses"] = Json::array();
  for (const OracleWitness& w : report.witnesses) {
    Json sets = Json::array();
    for (const ElementSet& s : w.sets) sets.push_back(SetToJson(labels, s));
    j["witnesses"].push_back({{"axiom", w.axiom}, {"sets", sets}});
  }
  j["warnings"] = report.warnings;
  return j;
}

Json BasesCertificateJson(const LabelTable& labels,
                          const std::vector<ElementSet>& bases) {
  Json j;
  j["kind"] = "bases";
  j["bases"] = Json::array();
  for (const ElementSet& b : bases) j["bases"].push_back(SetToJson(labels, b));
  return j;
}

Json ExchangeSearchCertificateJson(const LabelTable& labels, const ElementSet& b0,
                                   const ElementSet& b1, const ElementSet& x,
                                   const std::vector<ElementSet>& ys) {
  Json j = Header("exchange_search", labels, b0, b1);
  j["x"] = SetToJson(labels, x);
  j["ys"] = Json::array();
  for (const ElementSet& y : ys) j["ys"].push_back(SetToJson(labels, y));
  return j;
}

Json BijectionSearchCertificateJson(const LabelTable& labels, const ElementSet& b0,
                                    const ElementSet& b1, std::size_t k,
                                    const BijectionSearchResult& result) {
  Json j = Header("bijection_search", labels, b0, b1);
  j["k"] = k;
  j["exists"] = result.exists;
  j["pairs"] = PairsToJson(labels, result.witness);
  return j;
}

std::string CheckCertificateJson(const Json& cert, const MatroidView* m) {
  try {
    return CheckUnchecked(cert, m);
  } catch (const std::exception& e) {
    return std::string("malformed certificate: ") + e.what();
  }
}

DocumentCheck CheckResultDocument(const Json& doc, const MatroidDescription* matroid) {
  DocumentCheck out;
  auto problem = [&](std::string p) { out.problems.push_back(std::move(p)); };
  if (!doc.is_object()) {
    problem("result document must be a JSON object");
    return out;
  }
  for (const char* key : {"command", "input_digest", "certificates", "valid"}) {
    if (!doc.contains(key)) problem(std::string("missing field '") + key + "'");
  }
  if (!out.problems.empty()) return out;
  if (!doc["certificates"].is_array()) {
    problem("certificates must be an array");
    return out;
  }

  std::optional<MatroidView> m;
  if (matroid != nullptr) {
    m.emplace(BuildMatroid(*matroid));
    if (doc["input_digest"] != MatroidDigest(*matroid)) {
      problem("input_digest does not match the matroid file");
    }
  }
  for (const Json& cert : doc["certificates"]) {
    std::string p = CheckCertificateJson(cert, m ? &*m : nullptr);
    if (!p.empty()) problem(std::move(p));
  }
  const bool recomputed = out.problems.empty();
  if (doc["valid"] != recomputed) problem("recorded 'valid' flag is wrong");
  out.valid = recomputed && out.problems.empty();
  return out;
}

Json MakeResultDocument(const std::string& command, const std::string& digest,
                        Json certificates, const MatroidView* m) {
  // Validate what a reader would load, not the in-memory objects.
  const Json reloaded = Json::parse(certificates.dump());
  bool valid = true;
  for (const Json& cert : reloaded) {
    if (!CheckCertificateJson(cert, m).empty()) valid = false;
  }
  Json doc;
  doc["command"] = command;
  doc["input_digest"] = digest;
  doc["certificates"] = std::move(certificates);
  doc["valid"] = valid;
  return doc;
}

}  // namespace exmat::io
