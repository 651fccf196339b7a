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

#include "exactmip/proof.hpp"

#include <map>

namespace exactmip {

bool ProofConstraint::isContradiction() const {
  if (!coefficients.empty()) return false;
  return sense == Sense::GreaterEqual ? rhs.sign() > 0 : rhs.sign() < 0;
}

namespace {

bool implies(const ProofConstraint& derived, const ProofConstraint& stated) {
  if (derived.isContradiction()) return true;
  if (derived.sense != stated.sense ||
      derived.coefficients != stated.coefficients) {
    return false;
  }
  return stated.sense == Sense::GreaterEqual ? derived.rhs >= stated.rhs
                                             : derived.rhs <= stated.rhs;
}

// x <= v on one side and x >= v+1 on the other, integral in x and v.
bool isSplit(const Instance& inst, ProofConstraint a, ProofConstraint b) {
  if (a.sense == Sense::GreaterEqual) std::swap(a, b);
  if (a.sense != Sense::LessEqual || b.sense != Sense::GreaterEqual ||
      a.coefficients.empty() || a.coefficients != b.coefficients ||
      !a.rhs.isInteger() || b.rhs != a.rhs + Rational(1)) {
    return false;
  }
  for (const auto& t : a.coefficients) {
    if (!inst.variable(t.index).integral || !t.value.isInteger()) return false;
  }
  return true;
}

}  // namespace

ProofConstraint ProofLog::resolve(const ProofRef& ref) const {
  const Instance& inst = *instance_;
  ProofConstraint c;
  switch (ref.kind) {
    case ProofRef::Kind::RowGreater:
    case ProofRef::Kind::RowLess: {
      if (ref.index < 0 || ref.index >= inst.numConstraints()) {
        throw ProofError("row reference out of range");
      }
      const auto& row = inst.constraint(ref.index);
      Sense want = ref.kind == ProofRef::Kind::RowGreater ? Sense::GreaterEqual
                                                          : Sense::LessEqual;
      if (row.sense != Sense::Equal && row.sense != want) {
        throw ProofError("row '" + row.name + "' cannot be read as " +
                         toString(want));
      }
      c.coefficients = row.coefficients;
      c.sense = want;
      c.rhs = row.rhs;
      return c;
    }
    case ProofRef::Kind::LowerBound:
    case ProofRef::Kind::UpperBound: {
      if (ref.index < 0 || ref.index >= inst.numVariables()) {
        throw ProofError("bound reference out of range");
      }
      const auto& v = inst.variable(ref.index);
      bool lower = ref.kind == ProofRef::Kind::LowerBound;
      const ExtRational& b = lower ? v.lower : v.upper;
      if (!b.isFinite()) throw ProofError("reference to an infinite bound");
      c.coefficients = {{ref.index, Rational(1)}};
      c.sense = lower ? Sense::GreaterEqual : Sense::LessEqual;
      c.rhs = b.value();
      return c;
    }
    case ProofRef::Kind::Line:
      if (ref.index < 0 || ref.index >= size()) {
        throw ProofError("line reference out of range");
      }
      return lines_[ref.index].constraint;
  }
  throw ProofError("bad reference");
}

ProofConstraint ProofLog::combine(const std::vector<ProofTerm>& terms,
                                  Sense sense) const {
  if (sense == Sense::Equal) throw ProofError("cannot derive an equality");
  std::map<int, Rational> acc;
  ProofConstraint out;
  out.sense = sense;
  for (const auto& t : terms) {
    if (t.multiplier.isZero()) continue;
    ProofConstraint c = resolve(t.ref);
    // Deriving >=: >= rows need lambda >= 0, <= rows lambda <= 0.
    int need = c.sense == sense ? 1 : -1;
    if (t.multiplier.sign() != need) {
      throw ProofError("sign-invalid multiplier " + t.multiplier.str());
    }
    for (const auto& term : c.coefficients) {
      acc[term.index] += t.multiplier * term.value;
    }
    out.rhs += t.multiplier * c.rhs;
  }
  for (auto& [j, v] : acc) {
    if (!v.isZero()) out.coefficients.push_back({j, v});
  }
  return out;
}

int ProofLog::append(ProofLine line) {
  lines_.push_back(std::move(line));
  return size() - 1;
}

int ProofLog::assume(ProofConstraint constraint) {
  if (constraint.sense == Sense::Equal) {
    throw ProofError("assumptions must be inequalities");
  }
  ProofLine line;
  line.constraint = std::move(constraint);
  line.rule = ProofRule::Asm;
  return append(std::move(line));
}

int ProofLog::linear(const std::vector<ProofTerm>& terms, Sense sense) {
  ProofLine line;
  line.constraint = combine(terms, sense);
  line.rule = ProofRule::Lin;
  for (const auto& t : terms) {
    if (!t.multiplier.isZero()) line.terms.push_back(t);
  }
  return append(std::move(line));
}

int ProofLog::linear(const std::vector<ProofTerm>& terms, Sense sense,
                     const Rational& rhs) {
  ProofLine line;
  line.constraint = combine(terms, sense);
  bool dominated = line.constraint.isContradiction() ||
                   (sense == Sense::GreaterEqual ? line.constraint.rhs >= rhs
                                                 : line.constraint.rhs <= rhs);
  if (!dominated) throw ProofError("stated right-hand side is not implied");
  if (!line.constraint.isContradiction()) line.constraint.rhs = rhs;
  line.rule = ProofRule::Lin;
  for (const auto& t : terms) {
    if (!t.multiplier.isZero()) line.terms.push_back(t);
  }
  return append(std::move(line));
}

int ProofLog::round(const std::vector<ProofTerm>& terms, Sense sense) {
  ProofLine line;
  line.constraint = combine(terms, sense);
  for (const auto& t : line.constraint.coefficients) {
    if (!t.value.isInteger() || !instance_->variable(t.index).integral) {
      throw ProofError("rounding needs integer coefficients on integers");
    }
  }
  Rational& rhs = line.constraint.rhs;
  rhs = Rational(sense == Sense::GreaterEqual ? rhs.ceil() : rhs.floor());
  line.rule = ProofRule::Rnd;
  for (const auto& t : terms) {
    if (!t.multiplier.isZero()) line.terms.push_back(t);
  }
  return append(std::move(line));
}

int ProofLog::unsplit(int child1, int asm1, int child2, int asm2,
                      ProofConstraint stated) {
  for (int k : {child1, asm1, child2, asm2}) {
    if (k < 0 || k >= size()) throw ProofError("unsplit reference out of range");
  }
  if (lines_[asm1].rule != ProofRule::Asm || lines_[asm2].rule != ProofRule::Asm) {
    throw ProofError("unsplit needs assumption lines");
  }
  if (!isSplit(*instance_, lines_[asm1].constraint, lines_[asm2].constraint)) {
    throw ProofError("unsplit assumptions do not form a split");
  }
  if (!implies(lines_[child1].constraint, stated) ||
      !implies(lines_[child2].constraint, stated)) {
    throw ProofError("unsplit child does not imply the stated constraint");
  }
  ProofLine line;
  line.constraint = std::move(stated);
  line.rule = ProofRule::Uns;
  line.child1 = child1;
  line.asm1 = asm1;
  line.child2 = child2;
  line.asm2 = asm2;
  return append(std::move(line));
}

BoundSources BoundSources::global(const Instance& instance) {
  BoundSources s;
  const int n = instance.numVariables();
  s.lower.resize(n);
  s.upper.resize(n);
  for (int j = 0; j < n; ++j) {
    const auto& v = instance.variable(j);
    if (v.lower.isFinite()) s.lower[j] = ProofRef::lowerBound(j);
    if (v.upper.isFinite()) s.upper[j] = ProofRef::upperBound(j);
  }
  return s;
}

std::vector<RowRefs> modelRowRefs(const Instance& instance) {
  std::vector<RowRefs> refs(instance.numConstraints());
  for (int i = 0; i < instance.numConstraints(); ++i) {
    Sense s = instance.constraint(i).sense;
    if (s != Sense::LessEqual) refs[i].greater = ProofRef::rowGreater(i);
    if (s != Sense::GreaterEqual) refs[i].less = ProofRef::rowLess(i);
  }
  return refs;
}

namespace {

// Term for y * (a_i x) on the >= side: a >= ref with y >= 0 or a <= ref
// with y <= 0.
std::optional<ProofTerm> rowTerm(const RowRefs& refs, const Rational& y) {
  if (y.isZero()) return std::nullopt;
  if (y.sign() > 0) {
    if (!refs.greater) throw ProofError("no >= reading for a positive dual");
    return ProofTerm{*refs.greater, y};
  }
  if (!refs.less) throw ProofError("no <= reading for a negative dual");
  return ProofTerm{*refs.less, y};
}

}  // namespace

std::optional<int> logDualBound(ProofLog& log, const Instance& lp,
                                const std::vector<RowRefs>& rows,
                                const BoundSources& sources,
                                const LocalBounds& local,
                                const std::vector<Rational>& duals,
                                const SparseVector& objective) {
  const int n = lp.numVariables();
  std::vector<Rational> r(n);
  for (const auto& t : objective) r[t.index] = t.value;
  std::vector<ProofTerm> terms;
  for (int i = 0; i < lp.numConstraints(); ++i) {
    if (auto t = rowTerm(rows[i], duals[i])) terms.push_back(*t);
    if (duals[i].isZero()) continue;
    for (const auto& t : lp.constraint(i).coefficients) {
      r[t.index] -= duals[i] * t.value;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (r[j].isZero()) continue;
    if (r[j].sign() > 0) {
      if (!sources.lower[j] || !local[j].lower.isFinite()) return std::nullopt;
      terms.push_back({*sources.lower[j], r[j]});
    } else {
      if (!sources.upper[j] || !local[j].upper.isFinite()) return std::nullopt;
      terms.push_back({*sources.upper[j], r[j]});
    }
  }
  return log.linear(terms, Sense::GreaterEqual);
}

int logFarkas(ProofLog& log, const Instance& lp,
              const std::vector<RowRefs>& rows, const BoundSources& sources,
              const FarkasProof& farkas) {
  std::vector<ProofTerm> terms;
  for (int i = 0; i < lp.numConstraints(); ++i) {
    const Rational& lambda = farkas.rows[i];
    if (lambda.isZero()) continue;
    // <= rows carry lambda on -a_i x >= -b_i.
    Rational y = lp.constraint(i).sense == Sense::LessEqual ? -lambda : lambda;
    terms.push_back(*rowTerm(rows[i], y));
  }
  for (int j = 0; j < lp.numVariables(); ++j) {
    if (!farkas.lower[j].isZero()) {
      if (!sources.lower[j]) throw ProofError("Farkas uses an unknown bound");
      terms.push_back({*sources.lower[j], farkas.lower[j]});
    }
    if (!farkas.upper[j].isZero()) {
      if (!sources.upper[j]) throw ProofError("Farkas uses an unknown bound");
      terms.push_back({*sources.upper[j], -farkas.upper[j]});
    }
  }
  int k = log.linear(terms, Sense::GreaterEqual);
  if (!log.line(k).constraint.isContradiction()) {
    throw ProofError("Farkas combination is not a contradiction");
  }
  return k;
}

int logRowsOnly(ProofLog& log, const Instance& lp,
                const std::vector<RowRefs>& rows, const FarkasProof& farkas) {
  std::vector<ProofTerm> terms;
  for (int i = 0; i < lp.numConstraints(); ++i) {
    const Rational& lambda = farkas.rows[i];
    if (lambda.isZero()) continue;
    Rational y = lp.constraint(i).sense == Sense::LessEqual ? -lambda : lambda;
    terms.push_back(*rowTerm(rows[i], y));
  }
  if (terms.empty()) throw ProofError("empty dual proof");
  return log.linear(terms, Sense::GreaterEqual);
}

}  // namespace exactmip
