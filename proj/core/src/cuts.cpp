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

#include "exactmip/cuts.hpp"

#include <map>

namespace exactmip {

namespace {

SparseVector fromMap(const std::map<int, Rational>& m) {
  SparseVector out;
  for (const auto& [j, v] : m) {
    if (!v.isZero()) out.push_back({j, v});
  }
  return out;
}

}  // namespace

std::optional<CutCandidate> generateGMI(const Instance& instance,
                                        const LocalBounds& local,
                                        const LPResult& lp, int basicVar) {
  if (basicVar < 0 || basicVar >= instance.numVariables() ||
      !instance.variable(basicVar).integral) {
    throw std::invalid_argument("GMI source must be an integral variable");
  }
  if (lp.status != LPStatus::Optimal) {
    throw std::invalid_argument("GMI needs an optimal LP");
  }
  const Rational& value = lp.primal[basicVar];
  if (value.isInteger()) {
    throw std::invalid_argument("GMI source has an integral LP value");
  }
  TableauRow row;
  try {
    row = tableauRow(lp, instance, ColumnRef::structural(basicVar));
  } catch (const LPError& e) {
    throw std::invalid_argument(e.what());
  }
  const Rational f0 = value.fractionalPart();
  const Rational g0 = Rational(1) - f0;

  std::map<int, Rational> cut;
  Rational rhs(1);
  std::map<int, Rational> split;
  split[basicVar] = Rational(1);
  Rational splitConst;

  auto coefficient = [&](const Rational& a, bool integerColumn,
                         Integer* k) -> Rational {
    if (integerColumn) {
      Rational f = a.fractionalPart();
      if (f <= f0) {
        *k = a.floor();
        return f / f0;
      }
      *k = a.ceil();
      return (Rational(1) - f) / g0;
    }
    *k = 0;
    return a.sign() >= 0 ? a / f0 : -a / g0;
  };

  for (const auto& t : row.structural) {
    const int j = t.index;
    const Domain& d = local[j];
    const Rational& x = lp.primal[j];
    bool atLower = d.lower.isFinite() && d.lower.value() == x;
    bool atUpper = !atLower && d.upper.isFinite() && d.upper.value() == x;
    if (!atLower && !atUpper) return std::nullopt;
    // x_j = l + t (at lower) or u - t (at upper).
    Rational a = atLower ? t.value : -t.value;
    const Rational& bound = atLower ? d.lower.value() : d.upper.value();
    bool integerColumn = instance.variable(j).integral && bound.isInteger();
    Integer k;
    Rational pi = coefficient(a, integerColumn, &k);
    if (atLower) {
      cut[j] += pi;
      rhs += pi * bound;
      split[j] += Rational(k);
      splitConst -= Rational(k) * bound;
    } else {
      cut[j] -= pi;
      rhs -= pi * bound;
      split[j] -= Rational(k);
      splitConst += Rational(k) * bound;
    }
  }
  for (const auto& t : row.slack) {
    const auto& c = instance.constraint(t.index);
    Integer k;
    Rational pi = coefficient(t.value, false, &k);
    if (pi.isZero()) continue;
    // s = b - a x for <= rows, a x - b for >= rows.
    Rational sign(c.sense == Sense::LessEqual ? -1 : 1);
    for (const auto& a : c.coefficients) cut[a.index] += sign * pi * a.value;
    rhs += sign * pi * c.rhs;
  }

  CutCandidate out;
  out.constraint.name = "gmi_" + instance.variable(basicVar).name;
  out.constraint.coefficients = fromMap(cut);
  out.constraint.sense = Sense::GreaterEqual;
  out.constraint.rhs = rhs;
  out.sourceBasicVar = ColumnRef::structural(basicVar);
  out.splitVar = basicVar;
  out.splitValue = value.floor();
  out.splitCoefficients = fromMap(split);
  out.splitRhs = (Rational(value.floor()) - splitConst).floor();
  return out;
}

namespace {

std::optional<int> rowMultiple(ProofLog& log, const Instance& instance,
                               const std::vector<RowRefs>& rows,
                               const LinearConstraint& cut) {
  if (cut.coefficients.empty()) return std::nullopt;
  for (int i = 0; i < instance.numConstraints(); ++i) {
    const auto& a = instance.constraint(i).coefficients;
    if (a.size() != cut.coefficients.size()) continue;
    Rational mu = cut.coefficients[0].value / a[0].value;
    bool same = true;
    for (std::size_t k = 0; k < a.size() && same; ++k) {
      same = a[k].index == cut.coefficients[k].index &&
             a[k].value * mu == cut.coefficients[k].value;
    }
    if (!same) continue;
    const std::optional<ProofRef>& ref =
        mu.sign() > 0 ? rows[i].greater : rows[i].less;
    if (!ref) continue;
    if (mu * instance.constraint(i).rhs < cut.rhs) continue;
    return log.linear({{*ref, mu}}, Sense::GreaterEqual, cut.rhs);
  }
  return std::nullopt;
}

}  // namespace

int certifySplitCut(ProofLog& log, const Instance& instance,
                    const std::vector<RowRefs>& rows,
                    const BoundSources& sources, const LocalBounds& local,
                    CutCandidate& cut) {
  if (auto k = rowMultiple(log, instance, rows, cut.constraint)) return *k;

  ProofConstraint down{cut.splitCoefficients, Sense::LessEqual,
                       Rational(cut.splitRhs)};
  ProofConstraint up{cut.splitCoefficients, Sense::GreaterEqual,
                     Rational(Integer(cut.splitRhs + 1))};
  int asmLine[2] = {log.assume(down), log.assume(up)};
  int child[2];
  for (int side = 0; side < 2; ++side) {
    std::vector<LinearConstraint> cons = instance.constraints();
    LinearConstraint split;
    split.name = "split";
    split.coefficients = cut.splitCoefficients;
    split.sense = side == 0 ? Sense::LessEqual : Sense::GreaterEqual;
    split.rhs = side == 0 ? Rational(cut.splitRhs) : Rational(Integer(cut.splitRhs + 1));
    cons.push_back(split);
    for (std::size_t i = 0; i < cons.size(); ++i) cons[i].name.clear();
    Instance sideLp =
        Instance::build(instance.variables(), std::move(cons), {});
    std::vector<RowRefs> sideRefs = rows;
    RowRefs splitRef;
    if (side == 0) {
      splitRef.less = ProofRef::line(asmLine[0]);
    } else {
      splitRef.greater = ProofRef::line(asmLine[1]);
    }
    sideRefs.push_back(splitRef);

    LPResult r = solveLP(sideLp, local, cut.constraint.coefficients);
    if (r.status == LPStatus::Infeasible) {
      child[side] = logFarkas(log, sideLp, sideRefs, sources, r.farkas);
      continue;
    }
    if (r.status != LPStatus::Optimal || r.objective.value() < cut.constraint.rhs) {
      throw CertificationError("cut " + cut.constraint.name +
                               " is not implied on split side " +
                               std::to_string(side));
    }
    auto k = logDualBound(log, sideLp, sideRefs, sources, local, r.duals,
                          cut.constraint.coefficients);
    if (!k) {
      throw CertificationError("cut " + cut.constraint.name +
                               ": side bound uses an unproved bound");
    }
    child[side] = *k;
    cut.branchDuals[side] = r.duals;
  }
  ProofConstraint stated{cut.constraint.coefficients, Sense::GreaterEqual,
                         cut.constraint.rhs};
  return log.unsplit(child[0], asmLine[0], child[1], asmLine[1],
                     std::move(stated));
}

}  // namespace exactmip
