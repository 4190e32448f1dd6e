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

#include "exmat/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "exmat/base_exchange.h"
#include "exmat/brute_force.h"
#include "exmat/counterexample.h"
#include "exmat/errors.h"
#include "exmat/io.h"
#include "exmat/models.h"
#include "exmat/subset_bijection.h"

namespace exmat::cli {
namespace {

using io::Json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw exmat::ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json ReadJson(const std::string& path) {
  try {
    return Json::parse(ReadFile(path));
  } catch (const Json::parse_error& e) {
    throw exmat::ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

std::vector<std::string> SplitLabels(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (text.back() == ',') out.emplace_back();
  return out;
}

// Set arguments given on the command line as "a,b,c" or in the sidecar file
// under the same key. The command line wins.
struct SetArgs {
  std::optional<std::string> b0;
  std::optional<std::string> b1;
  std::optional<std::string> x;
  std::optional<std::string> classes;
  std::string sidecar;

  void AddBases(CLI::App* cmd) {
    cmd->add_option("--b0", b0, "First basis, comma-separated labels");
    cmd->add_option("--b1", b1, "Second basis, comma-separated labels");
    cmd->add_option("--bases", sidecar,
                    "JSON file with any of b0, b1, x, classes as label lists");
  }
  void AddX(CLI::App* cmd) {
    cmd->add_option("--x", x, "Subset of b0, comma-separated labels");
  }
  void AddClasses(CLI::App* cmd) {
    cmd->add_option("--classes", classes, "Partition of b0: classes separated by ';'");
  }

  const Json& Sidecar() {
    if (!sidecar_loaded_) {
      sidecar_loaded_ = true;
      if (!sidecar.empty()) sidecar_json_ = ReadJson(sidecar);
      if (!sidecar_json_.is_null() && !sidecar_json_.is_object()) {
        throw exmat::ParseError("sidecar must be a JSON object");
      }
    }
    return sidecar_json_;
  }

  ElementSet Set(const LabelTable& labels, const char* key,
                 const std::optional<std::string>& value) {
    if (value.has_value()) return labels.Set(SplitLabels(*value));
    const Json& side = Sidecar();
    if (side.is_object() && side.contains(key)) return io::SetFromJson(labels, side[key]);
    throw exmat::ParseError(std::string("missing --") + key);
  }

  std::vector<ElementSet> Classes(const LabelTable& labels) {
    std::vector<ElementSet> out;
    if (classes.has_value()) {
      std::istringstream in(*classes);
      std::string part;
      while (std::getline(in, part, ';')) out.push_back(labels.Set(SplitLabels(part)));
      return out;
    }
    const Json& side = Sidecar();
    if (side.is_object() && side.contains("classes") && side["classes"].is_array()) {
      for (const Json& c : side["classes"]) out.push_back(io::SetFromJson(labels, c));
      return out;
    }
    throw exmat::ParseError("missing --classes");
  }

 private:
  bool sidecar_loaded_ = false;
  Json sidecar_json_;
};

struct Loaded {
  MatroidDescription desc;
  MatroidView m;
  std::string digest;
};

Loaded Load(const std::string& path) {
  MatroidDescription desc = io::ParseMatroid(ReadFile(path));
  MatroidView m = BuildMatroid(desc);
  std::string digest = io::MatroidDigest(desc);
  return {std::move(desc), std::move(m), std::move(digest)};
}

int Emit(const Json& doc, std::ostream& out) {
  out << io::CanonicalDump(doc);
  return doc.value("valid", false) ? kExitOk : kExitInvalid;
}

std::uint64_t SeedFromEnv() {
  const char* env = std::getenv("EXMAT_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    std::uint64_t seed = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return seed;
  } catch (const std::exception&) {
    throw exmat::ParseError(std::string("EXMAT_SEED is not an integer: ") + env);
  }
}

int Dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Exchange properties of matroid bases, with checkable certificates",
               "exmat"};
  app.require_subcommand(1);

  std::string matroid_path;
  SetArgs sets;

  auto* symmetric = app.add_subcommand("symmetric", "Symmetric subset exchange");
  symmetric->add_option("matroid", matroid_path, "Matroid file")->required();
  sets.AddBases(symmetric);
  sets.AddX(symmetric);

  auto* partition = app.add_subcommand("partition", "Partition exchange with tails");
  partition->add_option("matroid", matroid_path, "Matroid file")->required();
  sets.AddBases(partition);
  sets.AddClasses(partition);

  auto* serial = app.add_subcommand("serial", "Serial exchange order");
  serial->add_option("matroid", matroid_path, "Matroid file")->required();
  sets.AddBases(serial);

  std::optional<std::size_t> max_size;
  auto* bijection = app.add_subcommand("bijection", "Subset bijection graph");
  bijection->add_option("matroid", matroid_path, "Matroid file")->required();
  sets.AddBases(bijection);
  bijection->add_option("--max-size", max_size, "Largest |I| listed (default: rank)");

  std::size_t n = 0;
  std::optional<std::size_t> k;
  auto* counter = app.add_subcommand("verify-counterexample",
                                     "Exhaustive check on a truncation of the two-tree graph");
  counter->add_option("--n", n, "Number of vertices")->required();
  counter->add_option("--k", k, "Prefix length (default: largest admissible)");

  auto* axioms = app.add_subcommand("check-axioms", "Exhaustive axiom check");
  axioms->add_option("matroid", matroid_path, "Matroid file")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference answers");
  oracle->require_subcommand(1);
  auto* o_bases = oracle->add_subcommand("bases", "All bases");
  o_bases->add_option("matroid", matroid_path, "Matroid file")->required();
  auto* o_exchange = oracle->add_subcommand("exchange", "All valid Y for X");
  o_exchange->add_option("matroid", matroid_path, "Matroid file")->required();
  sets.AddBases(o_exchange);
  sets.AddX(o_exchange);
  std::size_t oracle_k = 1;
  auto* o_bijection = oracle->add_subcommand("bijection", "Search for a k-subset bijection");
  o_bijection->add_option("matroid", matroid_path, "Matroid file")->required();
  sets.AddBases(o_bijection);
  o_bijection->add_option("--k", oracle_k, "Subset size");

  std::string kind = "graphic";
  std::size_t size = 6;
  std::optional<std::uint64_t> seed;
  auto* random = app.add_subcommand("random", "Seeded random matroid file (EXMAT_SEED)");
  random->add_option("--kind", kind, "uniform, graphic or gf2");
  random->add_option("--size", size, "Ground set size");
  random->add_option("--seed", seed, "Seed (default: EXMAT_SEED, else 0)");

  std::string result_path;
  auto* verify = app.add_subcommand("verify", "Re-check a result document");
  verify->add_option("result", result_path, "Result document")->required();
  verify->add_option("--matroid", matroid_path, "Matroid file the result refers to");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    const int code = app.exit(e, help_out, err);
    if (code == 0) {
      err << help_out.str();
      return kExitOk;
    }
    return kExitParse;
  }

  if (app.got_subcommand(symmetric)) {
    Loaded in = Load(matroid_path);
    const LabelTable& labels = in.m.labels();
    const ElementSet b0 = sets.Set(labels, "b0", sets.b0);
    const ElementSet b1 = sets.Set(labels, "b1", sets.b1);
    const ElementSet x = sets.Set(labels, "x", sets.x);
    auto cert = SymmetricExchange(in.m, Basis::Certify(in.m, b0, "b0"),
                                  Basis::Certify(in.m, b1, "b1"), x);
    return Emit(io::MakeResultDocument(
                    "symmetric", in.digest,
                    Json::array({io::SymmetricCertificateJson(labels, b0, b1, cert)}),
                    &in.m),
                out);
  }
  if (app.got_subcommand(partition)) {
    Loaded in = Load(matroid_path);
    const LabelTable& labels = in.m.labels();
    const ElementSet b0 = sets.Set(labels, "b0", sets.b0);
    const ElementSet b1 = sets.Set(labels, "b1", sets.b1);
    auto plan = PartitionExchange(in.m, Basis::Certify(in.m, b0, "b0"),
                                  Basis::Certify(in.m, b1, "b1"), sets.Classes(labels));
    return Emit(io::MakeResultDocument(
                    "partition", in.digest,
                    Json::array({io::PartitionCertificateJson(labels, b0, b1, plan)}),
                    &in.m),
                out);
  }
  if (app.got_subcommand(serial)) {
    Loaded in = Load(matroid_path);
    const LabelTable& labels = in.m.labels();
    const ElementSet b0 = sets.Set(labels, "b0", sets.b0);
    const ElementSet b1 = sets.Set(labels, "b1", sets.b1);
    auto order = SerialExchangeOrder(in.m, Basis::Certify(in.m, b0, "b0"),
                                     Basis::Certify(in.m, b1, "b1"));
    return Emit(io::MakeResultDocument(
                    "serial", in.digest,
                    Json::array({io::SerialCertificateJson(labels, b0, b1, order)}),
                    &in.m),
                out);
  }
  if (app.got_subcommand(bijection)) {
    Loaded in = Load(matroid_path);
    const LabelTable& labels = in.m.labels();
    const ElementSet b0 = sets.Set(labels, "b0", sets.b0);
    const ElementSet b1 = sets.Set(labels, "b1", sets.b1);
    SubsetBijection bij = BuildBijection(in.m, Basis::Certify(in.m, b0, "b0"),
                                         Basis::Certify(in.m, b1, "b1"));
    const std::size_t limit = max_size.value_or(b0.size());
    auto pairs = EnumerateGraph(bij, limit);
    return Emit(io::MakeResultDocument(
                    "bijection", in.digest,
                    Json::array({io::BijectionCertificateJson(labels, b0, b1, limit, pairs)}),
                    &in.m),
                out);
  }
  if (app.got_subcommand(counter)) {
    const std::size_t kk = k.value_or(MaxAdmissibleK(n));
    ForcedPrefixReport report = VerifyForcedPrefix(n, kk);
    Json params = {{"k", kk}, {"n", n}};
    return Emit(io::MakeResultDocument("verify-counterexample",
                                       io::Sha256Hex(params.dump()),
                                       Json::array({io::ForcedPrefixCertificateJson(report)}),
                                       nullptr),
                out);
  }
  if (app.got_subcommand(axioms)) {
    Loaded in = Load(matroid_path);
    OracleReport report = CheckAxioms(in.m);
    for (const auto& w : report.warnings) err << "warning: " << w << "\n";
    return Emit(io::MakeResultDocument(
                    "check-axioms", in.digest,
                    Json::array({io::AxiomsCertificateJson(in.m.labels(), report)}), &in.m),
                out);
  }
  if (app.got_subcommand(oracle)) {
    Loaded in = Load(matroid_path);
    const LabelTable& labels = in.m.labels();
    Json cert;
    std::string command;
    if (oracle->got_subcommand(o_bases)) {
      command = "oracle bases";
      cert = io::BasesCertificateJson(labels, AllBases(in.m));
    } else {
      const ElementSet b0 = sets.Set(labels, "b0", sets.b0);
      const ElementSet b1 = sets.Set(labels, "b1", sets.b1);
      Basis::Certify(in.m, b0, "b0");
      Basis::Certify(in.m, b1, "b1");
      if (oracle->got_subcommand(o_exchange)) {
        command = "oracle exchange";
        const ElementSet x = sets.Set(labels, "x", sets.x);
        cert = io::ExchangeSearchCertificateJson(labels, b0, b1, x,
                                                 ExchangeSearch(in.m, b0, b1, x));
      } else {
        command = "oracle bijection";
        cert = io::BijectionSearchCertificateJson(
            labels, b0, b1, oracle_k, BijectionSearch(in.m, b0, b1, oracle_k));
      }
    }
    return Emit(io::MakeResultDocument(command, in.digest, Json::array({cert}), &in.m),
                out);
  }
  if (app.got_subcommand(random)) {
    const std::uint64_t s = seed.has_value() ? *seed : SeedFromEnv();
    InstanceKind parsed;
    try {
      parsed = ParseInstanceKind(kind);
    } catch (const DomainError& e) {
      throw exmat::ParseError(e.what());
    }
    out << io::SerializeMatroid(RandomInstance(parsed, size, s));
    return kExitOk;
  }
  if (app.got_subcommand(verify)) {
    const Json doc = ReadJson(result_path);
    std::optional<MatroidDescription> desc;
    if (!matroid_path.empty()) desc = io::ParseMatroid(ReadFile(matroid_path));
    io::DocumentCheck check = io::CheckResultDocument(doc, desc ? &*desc : nullptr);
    for (const auto& p : check.problems) err << "problem: " << p << "\n";
    Json report = {{"valid", check.valid}, {"problems", check.problems}};
    out << io::CanonicalDump(report);
    return check.valid ? kExitOk : kExitInvalid;
  }
  return kExitParse;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return Dispatch(args, out, err);
  } catch (const exmat::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace exmat::cli
