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

#include "exactmip/bnb.hpp"

#include <chrono>
#include <deque>
#include <map>
#include <set>

#include "exactmip/propagation.hpp"

namespace exactmip {

const char* toString(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal:
      return "optimal";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::Unbounded:
      return "unbounded";
    case SolveStatus::LimitReached:
      return "limit";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct OpenNode {
  int id = 0;
  LocalBounds local;
  BoundSources sources;
  ExtRational bound = ExtRational::negInf();
  std::optional<int> boundLine;
  std::vector<Rational> parentDuals;
  std::optional<BranchStep> step;
  std::optional<BranchStep> previous;
};

struct TreeNode {
  int asmLine = -1;
  int children[2] = {-1, -1};
  int conclusion = -1;
};

class Solver {
 public:
  Solver(const Instance& instance, SparseVector objective,
         const SolveParams& params, Clock::time_point start)
      : inst_(instance),
        objective_(std::move(objective)),
        params_(params),
        start_(start),
        trace_(std::make_shared<SolveTrace>(instance)),
        store_(instance.numVariables(), params.gamma, params.reliability) {
    integralObjective_ = true;
    for (const auto& t : objective_) {
      if (!t.value.isInteger() || !inst_.variable(t.index).integral) {
        integralObjective_ = false;
      }
    }
    lpInst_ = instance;
    rowRefs_ = modelRowRefs(instance);
    baseRows_ = propagationRows(instance);
  }

  SolveResult run();

 private:
  enum class Outcome { Done, RootUnbounded };

  ProofLog& log() { return trace_->log; }

  bool prunable(const Rational& bound) const {
    if (!upper_) return false;
    if (bound >= *upper_) return true;
    return integralObjective_ && Rational(bound.ceil()) >= *upper_;
  }

  // Line proving objective >= upper_ (or better) from a line proving
  // objective >= bound.
  int pruneLine(int line, const Rational& bound) {
    if (bound >= *upper_) return line;
    return log().round({{ProofRef::line(line), Rational(1)}},
                       Sense::GreaterEqual);
  }

  bool limitHit() const {
    if (params_.nodeLimit && stats_.nodes >= *params_.nodeLimit) return true;
    std::chrono::duration<double> elapsed = Clock::now() - start_;
    return elapsed.count() >= params_.timeLimitSeconds;
  }

  void newIncumbent(const Assignment& point, const Rational& value) {
    incumbent_ = point;
    upper_ = value;
  }

  Outcome process(OpenNode node);
  void addRootCuts(const LPResult& lp, const OpenNode& node);
  void learnDualProof(const LPResult& lp);
  int unsplitConclusion(int id);

  const Instance& inst_;
  SparseVector objective_;
  const SolveParams& params_;
  Clock::time_point start_;
  std::shared_ptr<SolveTrace> trace_;
  PseudocostStore store_;
  bool integralObjective_ = false;

  Instance lpInst_;
  std::vector<RowRefs> rowRefs_;
  std::vector<PropRow> baseRows_;
  std::deque<PropRow> pool_;
  std::vector<CutCandidate> cuts_;

  std::optional<Assignment> incumbent_;
  std::optional<Rational> upper_;
  SolveStats stats_;
  std::vector<TreeNode> tree_;
  std::map<int, OpenNode> open_;
  std::set<std::pair<ExtRational, int>> queue_;
};

void Solver::learnDualProof(const LPResult& lp) {
  bool any = false;
  for (const auto& l : lp.farkas.rows) any = any || !l.isZero();
  if (!any) return;
  int k = logRowsOnly(log(), lpInst_, rowRefs_, lp.farkas);
  const ProofConstraint& c = log().line(k).constraint;
  pool_.push_back({c.coefficients, c.rhs, ProofRef::line(k), 1});
  while (static_cast<int>(pool_.size()) > params_.proofRetention) {
    pool_.pop_front();
  }
  ++stats_.dualProofs;
}

void Solver::addRootCuts(const LPResult& lp, const OpenNode& node) {
  std::vector<int> lines;
  for (const auto& cand : fractionalCandidates(inst_, lp.primal)) {
    bool basic = false;
    for (const auto& b : lp.basis) {
      basic = basic || b == ColumnRef::structural(cand.variable);
    }
    if (!basic) continue;
    auto cut = generateGMI(lpInst_, node.local, lp, cand.variable);
    if (!cut) continue;
    lines.push_back(certifySplitCut(log(), lpInst_, rowRefs_, node.sources,
                                    node.local, *cut));
    cuts_.push_back(std::move(*cut));
  }
  if (cuts_.empty()) return;
  std::vector<LinearConstraint> rows = inst_.constraints();
  for (std::size_t k = 0; k < cuts_.size(); ++k) {
    LinearConstraint c = cuts_[k].constraint;
    c.name = "__cut" + std::to_string(k);
    rows.push_back(c);
    RowRefs refs;
    refs.greater = ProofRef::line(lines[k]);
    rowRefs_.push_back(refs);
    baseRows_.push_back(
        {c.coefficients, c.rhs, ProofRef::line(lines[k]), 1});
  }
  lpInst_ = Instance::build(inst_.variables(), std::move(rows), {});
  stats_.cutsApplied = static_cast<int>(cuts_.size());
}

Solver::Outcome Solver::process(OpenNode node) {
  ++stats_.nodes;
  const int id = node.id;
  const bool root = id == 0;

  std::vector<PropRow> rows = baseRows_;
  rows.insert(rows.end(), pool_.begin(), pool_.end());
  PropagationResult pr =
      propagate(inst_, rows, node.local, params_.propagationRounds,
                {&log(), &node.sources});
  if (pr.infeasible) {
    tree_[id].conclusion = *pr.infeasible->proofLine;
    return Outcome::Done;
  }
  node.local = std::move(pr.bounds);

  if (!node.parentDuals.empty() && upper_) {
    ExtRational safe =
        safeDualBound(lpInst_, node.local, node.parentDuals, objective_);
    if (safe.isFinite() && prunable(safe.value())) {
      auto k = logDualBound(log(), lpInst_, rowRefs_, node.sources,
                            node.local, node.parentDuals, objective_);
      if (k) {
        tree_[id].conclusion = pruneLine(*k, safe.value());
        return Outcome::Done;
      }
    }
  }

  LPResult lp = solveLP(lpInst_, node.local, objective_);
  stats_.lpIterations += lp.iterations;
  bool cutsTried = false;
  bool pseudocostsDone = false;
  int line = -1;
  Rational bound;
  while (true) {
    if (lp.status == LPStatus::Infeasible) {
      tree_[id].conclusion =
          logFarkas(log(), lpInst_, rowRefs_, node.sources, lp.farkas);
      learnDualProof(lp);
      return Outcome::Done;
    }
    if (lp.status == LPStatus::Unbounded) {
      if (root && !cutsTried) return Outcome::RootUnbounded;
      throw LPError("node LP unbounded below a bounded root");
    }
    bound = lp.objective.value();
    auto k = logDualBound(log(), lpInst_, rowRefs_, node.sources, node.local,
                          lp.duals, objective_);
    if (!k) throw ProofError("optimal LP bound without bound sources");
    line = *k;
    if (node.step && !pseudocostsDone) {
      updatePseudocosts(store_, *node.step, node.previous, bound);
      pseudocostsDone = true;
    }
    if (prunable(bound)) {
      tree_[id].conclusion = pruneLine(line, bound);
      return Outcome::Done;
    }
    if (fractionalCandidates(inst_, lp.primal).empty()) {
      newIncumbent(lp.primal, bound);
      tree_[id].conclusion = line;
      return Outcome::Done;
    }
    if (root && params_.cuts && !cutsTried) {
      cutsTried = true;
      addRootCuts(lp, node);
      if (!cuts_.empty()) {
        lp = solveLP(lpInst_, node.local, objective_);
        stats_.lpIterations += lp.iterations;
        continue;
      }
    }
    break;
  }

  if (params_.heuristics) {
    if (auto repaired = repairSolution(inst_, lp.primal)) {
      Rational value = activity(objective_, *repaired);
      if (!upper_ || value < *upper_) {
        newIncumbent(*repaired, value);
        ++stats_.repairedSolutions;
      }
    }
    if (prunable(bound)) {
      tree_[id].conclusion = pruneLine(line, bound);
      return Outcome::Done;
    }
  }

  auto candidates = fractionalCandidates(inst_, lp.primal);
  int j = selectBranchVar(candidates, store_, params_.branching);
  const Rational& x = lp.primal[j];
  Integer v = x.floor();
  for (int side = 0; side < 2; ++side) {
    OpenNode child;
    child.id = static_cast<int>(tree_.size());
    tree_.emplace_back();
    child.local = node.local;
    child.sources = node.sources;
    ProofConstraint split;
    split.coefficients = {{j, Rational(1)}};
    int asmLine;
    if (side == 0) {
      split.sense = Sense::LessEqual;
      split.rhs = Rational(v);
      asmLine = log().assume(split);
      child.local[j].upper = Rational(v);
      child.sources.upper[j] = ProofRef::line(asmLine);
    } else {
      split.sense = Sense::GreaterEqual;
      split.rhs = Rational(Integer(v + 1));
      asmLine = log().assume(split);
      child.local[j].lower = split.rhs;
      child.sources.lower[j] = ProofRef::line(asmLine);
    }
    child.bound = bound;
    child.boundLine = line;
    child.parentDuals = lp.duals;
    child.step = BranchStep{j, side == 0 ? BranchDir::Down : BranchDir::Up,
                            x.fractionalPart(), bound};
    child.previous = node.step;
    tree_[child.id].asmLine = asmLine;
    tree_[id].children[side] = child.id;
    queue_.insert({child.bound, child.id});
    open_.emplace(child.id, std::move(child));
  }
  return Outcome::Done;
}

int Solver::unsplitConclusion(int id) {
  const TreeNode& t = tree_[id];
  const TreeNode& a = tree_[t.children[0]];
  const TreeNode& b = tree_[t.children[1]];
  const ProofConstraint& ca = log().line(a.conclusion).constraint;
  const ProofConstraint& cb = log().line(b.conclusion).constraint;
  ProofConstraint stated;
  if (ca.isContradiction() && cb.isContradiction()) {
    stated = ca.rhs <= cb.rhs ? ca : cb;
  } else if (ca.isContradiction()) {
    stated = cb;
  } else if (cb.isContradiction()) {
    stated = ca;
  } else {
    stated = ca.rhs <= cb.rhs ? ca : cb;
  }
  return log().unsplit(a.conclusion, a.asmLine, b.conclusion, b.asmLine,
                       std::move(stated));
}

SolveResult Solver::run() {
  SolveResult result;
  tree_.emplace_back();
  OpenNode root;
  root.id = 0;
  root.local = globalBounds(inst_);
  root.sources = BoundSources::global(inst_);
  queue_.insert({root.bound, 0});
  open_.emplace(0, std::move(root));

  bool complete = true;
  while (!queue_.empty()) {
    if (limitHit()) {
      complete = false;
      break;
    }
    auto [bound, id] = *queue_.begin();
    queue_.erase(queue_.begin());
    OpenNode node = std::move(open_.at(id));
    open_.erase(id);
    if (node.boundLine && bound.isFinite() && prunable(bound.value())) {
      tree_[id].conclusion = pruneLine(*node.boundLine, bound.value());
      continue;
    }
    if (process(std::move(node)) == Outcome::RootUnbounded) {
      SparseVector zero;
      Solver feasibility(inst_, zero, params_, start_);
      SolveResult sub = feasibility.run();
      sub.stats.nodes += stats_.nodes;
      sub.stats.lpIterations += stats_.lpIterations;
      if (sub.status == SolveStatus::Optimal) {
        sub.status = SolveStatus::Unbounded;
        sub.trace.reset();
        sub.primalBound = inst_.toReported(ExtRational::negInf());
        sub.dualBound = sub.primalBound;
      } else if (sub.status == SolveStatus::Infeasible) {
        sub.primalBound = inst_.toReported(ExtRational::posInf());
        sub.dualBound = sub.primalBound;
      }
      sub.cuts.clear();
      return sub;
    }
  }

  result.stats = stats_;
  result.incumbent = incumbent_;
  result.cuts = cuts_;
  ExtRational primal =
      upper_ ? ExtRational(*upper_) : ExtRational::posInf();
  result.primalBound = inst_.toReported(primal);
  if (!complete) {
    result.status = SolveStatus::LimitReached;
    ExtRational lower = primal;
    if (!queue_.empty() && queue_.begin()->first < lower) {
      lower = queue_.begin()->first;
    }
    result.dualBound = inst_.toReported(lower);
    return result;
  }

  result.status = upper_ ? SolveStatus::Optimal : SolveStatus::Infeasible;
  result.dualBound = result.primalBound;
  for (int id = static_cast<int>(tree_.size()) - 1; id >= 0; --id) {
    if (tree_[id].children[0] >= 0) tree_[id].conclusion = unsplitConclusion(id);
  }
  int final = tree_[0].conclusion;
  if (final != log().size() - 1) {
    final = log().linear({{ProofRef::line(final), Rational(1)}},
                         Sense::GreaterEqual);
  }
  SolveTrace& trace = *trace_;
  trace.finalLine = final;
  trace.infeasible = !upper_;
  if (upper_) {
    trace.lowerBound = *upper_;
    trace.upperBound = *upper_;
    trace.solutions.push_back(*incumbent_);
  }
  result.trace = trace_;
  return result;
}

}  // namespace

SolveResult solve(const Instance& instance, const SolveParams& params) {
  auto start = Clock::now();
  Solver solver(instance, instance.minObjective(), params, start);
  SolveResult r = solver.run();
  std::chrono::duration<double> elapsed = Clock::now() - start;
  r.stats.seconds = elapsed.count();
  return r;
}

std::optional<Assignment> repairSolution(const Instance& instance,
                                         const Assignment& candidate) {
  if (static_cast<int>(candidate.size()) != instance.numVariables()) {
    throw ModelError("candidate length does not match variable count");
  }
  LocalBounds local = globalBounds(instance);
  for (int j = 0; j < instance.numVariables(); ++j) {
    if (!instance.variable(j).integral) continue;
    Rational r((candidate[j] + Rational(1, 2)).floor());
    Domain& d = local[j];
    if (d.lower.isFinite() && ExtRational(r) < d.lower) {
      r = Rational(d.lower.value().ceil());
    }
    if (d.upper.isFinite() && ExtRational(r) > d.upper) {
      r = Rational(d.upper.value().floor());
    }
    if (ExtRational(r) < d.lower || ExtRational(r) > d.upper) {
      return std::nullopt;
    }
    d = {r, r};
  }
  LPResult lp = solveLP(instance, local);
  if (lp.status == LPStatus::Infeasible) return std::nullopt;
  if (!checkFeasible(instance, lp.primal).feasible()) return std::nullopt;
  return lp.primal;
}

LinearConstraint deriveDualProof(const Instance& lp, const LocalBounds& local,
                                 const FarkasProof& farkas) {
  const int m = lp.numConstraints();
  if (static_cast<int>(farkas.rows.size()) != m) {
    throw ProofError("Farkas row count does not match the LP");
  }
  std::map<int, Rational> g;
  Rational beta;
  bool any = false;
  for (int i = 0; i < m; ++i) {
    const Rational& lambda = farkas.rows[i];
    if (lambda.isZero()) continue;
    const auto& row = lp.constraint(i);
    if (row.sense != Sense::Equal && lambda.sign() < 0) {
      throw ProofError("negative Farkas weight on an inequality row");
    }
    any = true;
    Rational w = row.sense == Sense::LessEqual ? -lambda : lambda;
    for (const auto& t : row.coefficients) g[t.index] += w * t.value;
    beta += w * row.rhs;
  }
  if (!any) throw ProofError("empty dual proof");
  LinearConstraint out;
  out.name = "dualproof";
  for (const auto& [j, v] : g) {
    if (!v.isZero()) out.coefficients.push_back({j, v});
  }
  out.sense = Sense::GreaterEqual;
  out.rhs = beta;
  ExtRational maxAct(0);
  for (const auto& t : out.coefficients) {
    const ExtRational& b = t.value.sign() > 0 ? local[t.index].upper
                                              : local[t.index].lower;
    maxAct = maxAct + t.value * b;
  }
  if (!(maxAct < ExtRational(beta))) {
    throw ProofError("dual proof does not cut off the local box");
  }
  return out;
}

}  // namespace exactmip
