// Copyright 2026 The exactmip Authors
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

#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "exactmip/certificate.hpp"
#include "exactmip/io.hpp"
#include "exactmip/verifier.hpp"
#include "json.hpp"

namespace exactmip::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<FormatTag> formatOf(const RunConfig& cfg) {
  if (!cfg.format) return std::nullopt;
  return *cfg.format == "mps" ? FormatTag::Mps : FormatTag::Lp;
}

void writeText(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw UsageError("failed writing " + path);
}

std::string readText(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << file.rdbuf();
  return s.str();
}

Instance loadInstance(const RunConfig& cfg) {
  try {
    return readInstanceFile(cfg.input, formatOf(cfg));
  } catch (const IoError& e) {
    std::string where = e.line() > 0 ? ":" + std::to_string(e.line()) : "";
    throw UsageError(cfg.input + where + ": " + e.what());
  } catch (const ModelError& e) {
    throw UsageError(cfg.input + ": " + e.what());
  }
}

Json statsJson(const SolveResult& r) {
  Json j;
  j["status"] = toString(r.status);
  j["primal_bound"] = r.primalBound.str();
  j["dual_bound"] = r.dualBound.str();
  j["nodes"] = r.stats.nodes;
  j["lp_iterations"] = r.stats.lpIterations;
  j["cuts_applied"] = r.stats.cutsApplied;
  j["repaired_solutions"] = r.stats.repairedSolutions;
  j["dual_proofs"] = r.stats.dualProofs;
  j["time_seconds"] = std::round(r.stats.seconds * 1000.0) / 1000.0;
  return j;
}

int runSolve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SolveParams params = cfg.params;
  if (cfg.nodeLimit >= 0) params.nodeLimit = cfg.nodeLimit;
  params.branching = parseBranchingRule(cfg.branching);
  try {
    params.gamma = Rational::parse(cfg.gamma);
  } catch (const std::exception&) {
    throw UsageError("--gamma: '" + cfg.gamma + "' is not a rational number");
  }
  if (params.gamma.sign() < 0 || params.gamma > Rational(1)) {
    throw UsageError("--gamma must lie in [0, 1]");
  }

  Instance instance = loadInstance(cfg);
  SolveResult r = solve(instance, params);
  out << "status=" << toString(r.status) << " primal=" << r.primalBound.str()
      << " dual=" << r.dualBound.str() << '\n';
  if (r.incumbent) {
    for (int j = 0; j < instance.numVariables(); ++j) {
      const Rational& v = (*r.incumbent)[j];
      if (!v.isZero()) {
        out << instance.variable(j).name << ' ' << v.str() << '\n';
      }
    }
  }
  if (!cfg.certificate.empty()) {
    if (r.trace) {
      writeText(cfg.certificate, emitCertificate(*r.trace, instance));
    } else {
      err << "no certificate for status " << toString(r.status) << '\n';
    }
  }
  if (!cfg.stats.empty()) writeText(cfg.stats, statsJson(r).dump(2) + "\n");
  return kExitOk;
}

int runVerify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string content = readText(cfg.input);
  VerifyResult v = verifyCertificate(content);
  if (v.accepted) {
    out << "accepted\n";
    return kExitOk;
  }
  err << cfg.input << ':' << v.line << ": rejected: " << v.reason << '\n';
  return kExitRejected;
}

std::string defaultIisPath(const std::string& input, FormatTag format) {
  fs::path p(input);
  std::string ext = format == FormatTag::Mps ? ".mps" : ".lp";
  return (p.parent_path() / (p.stem().string() + ".iis" + ext)).string();
}

int runIis(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Instance instance = loadInstance(cfg);
  FormatTag format = formatOf(cfg).value_or(
      formatFromPath(cfg.input).value_or(FormatTag::Lp));
  IISResult r;
  try {
    r = parseIISMethod(cfg.iisMethod) == IISMethod::Deletion
            ? deletionFilter(instance, cfg.iisOptions)
            : additiveMethod(instance, cfg.iisOptions);
  } catch (const IISError& e) {
    err << e.what() << '\n';
    return kExitFeasible;
  }
  std::string path =
      cfg.output.empty() ? defaultIisPath(cfg.input, format) : cfg.output;
  Instance reduced = subsystem(instance, r);
  try {
    writeInstanceFile(reduced, path, formatFromPath(path).value_or(format));
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }

  Json summary;
  summary["method"] = toString(r.method);
  summary["irreducible"] = r.irreducible;
  Json rows = Json::array();
  for (int i : r.constraintIndices) rows.push_back(instance.constraint(i).name);
  summary["constraints"] = rows;
  Json bounds = Json::array();
  for (const auto& [j, side] : r.boundIndices) {
    bounds.push_back({{"variable", instance.variable(j).name},
                      {"side", side == BoundSide::Lower ? "lower" : "upper"}});
  }
  summary["bounds"] = bounds;
  summary["oracle_calls"] = r.oracleCalls;
  std::string text = summary.dump(2) + "\n";
  out << text;
  if (!cfg.stats.empty()) writeText(cfg.stats, text);
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Solve:
        return runSolve(config, out, err);
      case Command::Verify:
        return runVerify(config, out, err);
      case Command::Iis:
        return runIis(config, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace exactmip::cli
