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

#include "exactmip/propagation.hpp"

namespace exactmip {

std::vector<PropRow> propagationRows(const Instance& instance) {
  std::vector<PropRow> rows;
  for (int i = 0; i < instance.numConstraints(); ++i) {
    const auto& c = instance.constraint(i);
    if (c.sense != Sense::LessEqual) {
      rows.push_back({c.coefficients, c.rhs, ProofRef::rowGreater(i), 1});
    }
    if (c.sense != Sense::GreaterEqual) {
      SparseVector g = c.coefficients;
      for (auto& t : g) t.value = -t.value;
      rows.push_back({std::move(g), -c.rhs, ProofRef::rowLess(i), -1});
    }
  }
  return rows;
}

namespace {

class Propagator {
 public:
  Propagator(const Instance& instance, const std::vector<PropRow>& rows,
             LocalBounds local, PropagationLog proof)
      : inst_(instance), rows_(rows), proof_(proof) {
    result_.bounds = std::move(local);
  }

  PropagationResult run(int maxRounds);

 private:
  LocalBounds& box() { return result_.bounds; }

  // Max of g_k x_k over the box, or nullopt if unbounded.
  std::optional<Rational> maxTerm(const Term& t) {
    const Domain& d = box()[t.index];
    const ExtRational& b = t.value.sign() > 0 ? d.upper : d.lower;
    if (!b.isFinite()) return std::nullopt;
    return t.value * b.value();
  }

  // Terms cancelling every variable of `row` except `skip`, scaled by
  // `scale` relative to the row, at the bound that maximizes (deriving >=)
  // or minimizes (deriving <=) the scaled term.
  void boundTerms(const PropRow& row, int skip, const Rational& scale,
                  Sense sense, std::vector<ProofTerm>& terms) {
    for (const auto& t : row.g) {
      if (t.index == skip) continue;
      Rational e = t.value * scale;
      if ((e.sign() > 0) == (sense == Sense::GreaterEqual)) {
        terms.push_back({*proof_.sources->upper[t.index], -e});
      } else {
        terms.push_back({*proof_.sources->lower[t.index], -e});
      }
    }
  }

  // The row as referenced is already "x_j >= nb" or "x_j <= nb".
  static bool restatesBound(const PropRow& row, const Term& t,
                            const Rational& nb, const Rational& bound) {
    return row.g.size() == 1 && nb == bound &&
           t.value * Rational(row.refSign) == Rational(1);
  }

  bool roundIntegral(int j);
  bool emptyDomain(int j);
  bool propagateRow(int r, bool* changed);

  const Instance& inst_;
  const std::vector<PropRow>& rows_;
  PropagationLog proof_;
  PropagationResult result_;
};

bool Propagator::emptyDomain(int j) {
  const Domain& d = box()[j];
  if (!(d.lower > d.upper)) return false;
  Infeasibility inf;
  inf.kind = Infeasibility::Kind::EmptyDomain;
  inf.variable = j;
  if (proof_.log) {
    inf.proofLine = proof_.log->linear(
        {{*proof_.sources->lower[j], Rational(1)},
         {*proof_.sources->upper[j], Rational(-1)}},
        Sense::GreaterEqual);
  }
  result_.infeasible = inf;
  return true;
}

bool Propagator::roundIntegral(int j) {
  if (!inst_.variable(j).integral) return false;
  Domain& d = box()[j];
  bool changed = false;
  if (d.lower.isFinite() && !d.lower.value().isInteger()) {
    d.lower = Rational(d.lower.value().ceil());
    if (proof_.log) {
      proof_.sources->lower[j] = ProofRef::line(proof_.log->round(
          {{*proof_.sources->lower[j], Rational(1)}}, Sense::GreaterEqual));
    }
    changed = true;
  }
  if (d.upper.isFinite() && !d.upper.value().isInteger()) {
    d.upper = Rational(d.upper.value().floor());
    if (proof_.log) {
      proof_.sources->upper[j] = ProofRef::line(proof_.log->round(
          {{*proof_.sources->upper[j], Rational(1)}}, Sense::LessEqual));
    }
    changed = true;
  }
  if (changed) ++result_.tightenings;
  return changed;
}

bool Propagator::propagateRow(int r, bool* changed) {
  const PropRow& row = rows_[r];
  // Max activity with the number of unbounded terms.
  Rational finiteMax;
  int unbounded = 0;
  int unboundedVar = -1;
  for (const auto& t : row.g) {
    if (auto v = maxTerm(t)) {
      finiteMax += *v;
    } else {
      ++unbounded;
      unboundedVar = t.index;
    }
  }
  // A single-variable row falls through to tightening, which then reports
  // the emptied domain of that variable.
  if (unbounded == 0 && finiteMax < row.beta && row.g.size() > 1) {
    Infeasibility inf;
    inf.kind = Infeasibility::Kind::RowInfeasible;
    inf.row = r;
    if (proof_.log) {
      std::vector<ProofTerm> terms{{row.ref, Rational(row.refSign)}};
      boundTerms(row, -1, Rational(1), Sense::GreaterEqual, terms);
      inf.proofLine = proof_.log->linear(terms, Sense::GreaterEqual);
    }
    result_.infeasible = inf;
    return false;
  }
  if (unbounded > 1) return true;

  for (const auto& t : row.g) {
    if (unbounded == 1 && t.index != unboundedVar) continue;
    Rational rest = finiteMax;
    if (unbounded == 0) rest -= *maxTerm(t);
    // g_j x_j >= beta - rest
    Rational bound = (row.beta - rest) / t.value;
    const int j = t.index;
    Domain& d = box()[j];
    bool integral = inst_.variable(j).integral;
    if (t.value.sign() > 0) {
      Rational nb = integral ? Rational(bound.ceil()) : bound;
      if (ExtRational(nb) <= d.lower) continue;
      d.lower = nb;
      if (proof_.log && restatesBound(row, t, nb, bound)) {
        proof_.sources->lower[j] = row.ref;
      } else if (proof_.log) {
        Rational w = Rational(1) / t.value;
        std::vector<ProofTerm> terms{{row.ref, w * Rational(row.refSign)}};
        boundTerms(row, j, w, Sense::GreaterEqual, terms);
        int k = integral ? proof_.log->round(terms, Sense::GreaterEqual)
                         : proof_.log->linear(terms, Sense::GreaterEqual);
        proof_.sources->lower[j] = ProofRef::line(k);
      }
    } else {
      Rational nb = integral ? Rational(bound.floor()) : bound;
      if (ExtRational(nb) >= d.upper) continue;
      d.upper = nb;
      if (proof_.log && restatesBound(row, t, nb, bound)) {
        proof_.sources->upper[j] = row.ref;
      } else if (proof_.log) {
        Rational w = Rational(1) / t.value;
        std::vector<ProofTerm> terms{{row.ref, w * Rational(row.refSign)}};
        boundTerms(row, j, w, Sense::LessEqual, terms);
        int k = integral ? proof_.log->round(terms, Sense::LessEqual)
                         : proof_.log->linear(terms, Sense::LessEqual);
        proof_.sources->upper[j] = ProofRef::line(k);
      }
    }
    ++result_.tightenings;
    *changed = true;
    if (emptyDomain(j)) return false;
    // Recompute activities with the new bound before the next variable.
    return true;
  }
  return true;
}

PropagationResult Propagator::run(int maxRounds) {
  const int n = inst_.numVariables();
  for (int j = 0; j < n; ++j) {
    if (emptyDomain(j)) return std::move(result_);
    roundIntegral(j);
    if (emptyDomain(j)) return std::move(result_);
  }
  for (int round = 0; round < maxRounds; ++round) {
    bool changed = false;
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      // A row is revisited until it stops tightening in this sweep.
      for (int guard = 0; guard <= n; ++guard) {
        bool rowChanged = false;
        if (!propagateRow(r, &rowChanged)) return std::move(result_);
        if (!rowChanged) break;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return std::move(result_);
}

}  // namespace

PropagationResult propagate(const Instance& instance,
                            const std::vector<PropRow>& rows,
                            LocalBounds local, int maxRounds,
                            PropagationLog proof) {
  if (static_cast<int>(local.size()) != instance.numVariables()) {
    throw LPError("local bounds length does not match variable count");
  }
  return Propagator(instance, rows, std::move(local), proof).run(maxRounds);
}

PropagationResult propagateNode(const Instance& instance,
                                const LocalBounds& local) {
  return propagate(instance, propagationRows(instance), local);
}

}  // namespace exactmip
