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

#include "exactmip/lp.hpp"

#include <optional>

namespace exactmip {

LocalBounds globalBounds(const Instance& instance) {
  LocalBounds out;
  out.reserve(instance.numVariables());
  for (const auto& v : instance.variables()) out.push_back({v.lower, v.upper});
  return out;
}

const char* toString(LPStatus status) {
  switch (status) {
    case LPStatus::Optimal:
      return "optimal";
    case LPStatus::Infeasible:
      return "infeasible";
    case LPStatus::Unbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

// Columns: structurals 0..n-1, row activities n..n+m-1, artificials
// n+m..n+2m-1. Row i reads a_i x - s_i + sigma_i r_i = 0.
class Simplex {
 public:
  Simplex(const Instance& instance, const LocalBounds& local,
          const SparseVector& objective)
      : inst_(instance),
        n_(instance.numVariables()),
        m_(instance.numConstraints()),
        cols_(n_ + 2 * m_),
        objective_(objective) {
    if (static_cast<int>(local.size()) != n_) {
      throw LPError("local bounds length does not match variable count");
    }
    local_ = &local;
  }

  LPResult run();

 private:
  Rational& at(int i, int k) { return tab_[static_cast<std::size_t>(i) * cols_ + k]; }
  const Rational& at(int i, int k) const {
    return tab_[static_cast<std::size_t>(i) * cols_ + k];
  }
  bool fixed(int k) const {
    return lo_[k].isFinite() && up_[k].isFinite() && lo_[k] == up_[k];
  }
  int slackCol(int i) const { return n_ + i; }
  int artCol(int i) const { return n_ + m_ + i; }

  void setup();
  std::vector<Rational> reducedCosts(const std::vector<Rational>& cost) const;
  // Returns false when unbounded (entering column in *unboundedCol).
  bool optimize(const std::vector<Rational>& cost, int* unboundedCol,
                int* unboundedDir);
  void pivot(int row, int col);
  std::vector<Rational> duals(const std::vector<Rational>& cost) const;
  LPResult infeasibleFromPhase1(const std::vector<Rational>& cost);
  void verifyOptimal(const LPResult& r) const;

  const Instance& inst_;
  const LocalBounds* local_ = nullptr;
  int n_;
  int m_;
  int cols_;
  const SparseVector& objective_;
  std::vector<Rational> tab_;
  std::vector<ExtRational> lo_, up_;
  std::vector<Rational> val_;
  std::vector<int> head_;   // basic column per row
  std::vector<int> where_;  // row of a basic column, -1 if nonbasic
  std::vector<int> sigma_;
  long iterations_ = 0;
};

void Simplex::setup() {
  tab_.assign(static_cast<std::size_t>(m_) * cols_, Rational());
  lo_.assign(cols_, ExtRational(0));
  up_.assign(cols_, ExtRational(0));
  val_.assign(cols_, Rational());
  head_.assign(m_, -1);
  where_.assign(cols_, -1);
  sigma_.assign(m_, 1);

  for (int j = 0; j < n_; ++j) {
    lo_[j] = (*local_)[j].lower;
    up_[j] = (*local_)[j].upper;
    if (lo_[j].isFinite()) {
      val_[j] = lo_[j].value();
    } else if (up_[j].isFinite()) {
      val_[j] = up_[j].value();
    }
  }
  for (int i = 0; i < m_; ++i) {
    const auto& row = inst_.constraint(i);
    int s = slackCol(i);
    switch (row.sense) {
      case Sense::LessEqual:
        lo_[s] = ExtRational::negInf();
        up_[s] = row.rhs;
        break;
      case Sense::GreaterEqual:
        lo_[s] = row.rhs;
        up_[s] = ExtRational::posInf();
        break;
      case Sense::Equal:
        lo_[s] = row.rhs;
        up_[s] = row.rhs;
        break;
    }
    Rational act = activity(row.coefficients, val_);
    ExtRational a(act);
    bool slackBasic = a >= lo_[s] && a <= up_[s];
    // Multiply the row so that its basic column becomes +e_i.
    Rational scale;
    int basic;
    if (slackBasic) {
      val_[s] = act;
      scale = Rational(-1);
      basic = s;
    } else {
      val_[s] = a < lo_[s] ? lo_[s].value() : up_[s].value();
      sigma_[i] = val_[s] > act ? 1 : -1;
      val_[artCol(i)] = (val_[s] - act).abs();
      up_[artCol(i)] = ExtRational::posInf();
      scale = Rational(sigma_[i]);
      basic = artCol(i);
    }
    for (const auto& t : row.coefficients) at(i, t.index) = scale * t.value;
    at(i, s) = -scale;
    at(i, artCol(i)) = scale * Rational(sigma_[i]);
    head_[i] = basic;
    where_[basic] = i;
  }
}

std::vector<Rational> Simplex::reducedCosts(
    const std::vector<Rational>& cost) const {
  std::vector<Rational> d(cost);
  for (int i = 0; i < m_; ++i) {
    const Rational& cb = cost[head_[i]];
    if (cb.isZero()) continue;
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (!a.isZero()) d[k] -= cb * a;
    }
  }
  return d;
}

void Simplex::pivot(int row, int col) {
  Rational p = at(row, col);
  for (int k = 0; k < cols_; ++k) {
    if (!at(row, k).isZero()) at(row, k) /= p;
  }
  for (int i = 0; i < m_; ++i) {
    if (i == row) continue;
    Rational f = at(i, col);
    if (f.isZero()) continue;
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(row, k);
      if (!a.isZero()) at(i, k) -= f * a;
    }
  }
  where_[head_[row]] = -1;
  head_[row] = col;
  where_[col] = row;
}

bool Simplex::optimize(const std::vector<Rational>& cost, int* unboundedCol,
                       int* unboundedDir) {
  while (true) {
    std::vector<Rational> d = reducedCosts(cost);
    int enter = -1;
    int dir = 0;
    for (int k = 0; k < cols_; ++k) {
      if (where_[k] >= 0 || fixed(k) || d[k].isZero()) continue;
      ExtRational v(val_[k]);
      if (d[k].sign() < 0 && v < up_[k]) {
        enter = k;
        dir = 1;
        break;
      }
      if (d[k].sign() > 0 && v > lo_[k]) {
        enter = k;
        dir = -1;
        break;
      }
    }
    if (enter < 0) return true;

    std::optional<Rational> best;
    int leaveRow = -1;
    for (int i = 0; i < m_; ++i) {
      const Rational& a = at(i, enter);
      if (a.isZero()) continue;
      int b = head_[i];
      // Basic value moves by -dir * a per unit step.
      bool decreasing = (dir > 0) == (a.sign() > 0);
      std::optional<Rational> limit;
      if (decreasing && lo_[b].isFinite()) {
        limit = (val_[b] - lo_[b].value()) / a.abs();
      } else if (!decreasing && up_[b].isFinite()) {
        limit = (up_[b].value() - val_[b]) / a.abs();
      }
      if (!limit) continue;
      if (!best || *limit < *best ||
          (*limit == *best && b < head_[leaveRow])) {
        best = *limit;
        leaveRow = i;
      }
    }
    std::optional<Rational> flip;
    if (lo_[enter].isFinite() && up_[enter].isFinite()) {
      flip = up_[enter].value() - lo_[enter].value();
    }
    if (!best && !flip) {
      *unboundedCol = enter;
      *unboundedDir = dir;
      return false;
    }
    ++iterations_;
    bool doFlip = flip && (!best || *flip <= *best);
    Rational step = doFlip ? *flip : *best;
    Rational delta = dir > 0 ? step : -step;
    if (!step.isZero()) {
      val_[enter] += delta;
      for (int i = 0; i < m_; ++i) {
        const Rational& a = at(i, enter);
        if (!a.isZero()) val_[head_[i]] -= a * delta;
      }
    }
    if (doFlip) {
      val_[enter] = dir > 0 ? up_[enter].value() : lo_[enter].value();
      continue;
    }
    int leaving = head_[leaveRow];
    const Rational& a = at(leaveRow, enter);
    bool decreasing = (dir > 0) == (a.sign() > 0);
    val_[leaving] = decreasing ? lo_[leaving].value() : up_[leaving].value();
    pivot(leaveRow, enter);
    if (leaving >= n_ + m_) {
      lo_[leaving] = ExtRational(0);
      up_[leaving] = ExtRational(0);
    }
  }
}

std::vector<Rational> Simplex::duals(const std::vector<Rational>& cost) const {
  std::vector<Rational> y(m_);
  for (int i = 0; i < m_; ++i) {
    Rational sum;
    int art = artCol(i);
    for (int r = 0; r < m_; ++r) {
      const Rational& cb = cost[head_[r]];
      if (!cb.isZero() && !at(r, art).isZero()) sum += cb * at(r, art);
    }
    y[i] = sigma_[i] > 0 ? sum : -sum;
  }
  return y;
}

LPResult Simplex::infeasibleFromPhase1(const std::vector<Rational>& cost) {
  LPResult r;
  r.status = LPStatus::Infeasible;
  r.objective = ExtRational::posInf();
  r.iterations = iterations_;
  std::vector<Rational> y = duals(cost);
  FarkasProof& f = r.farkas;
  f.rows.assign(m_, Rational());
  f.lower.assign(n_, Rational());
  f.upper.assign(n_, Rational());
  std::vector<Rational> g(n_);
  for (int i = 0; i < m_; ++i) {
    const auto& row = inst_.constraint(i);
    f.rows[i] = row.sense == Sense::LessEqual ? -y[i] : y[i];
    for (const auto& t : row.coefficients) g[t.index] += y[i] * t.value;
  }
  for (int j = 0; j < n_; ++j) {
    if (g[j].sign() > 0) f.upper[j] = g[j];
    if (g[j].sign() < 0) f.lower[j] = -g[j];
  }
  return r;
}

LPResult Simplex::run() {
  for (int j = 0; j < n_; ++j) {
    const Domain& d = (*local_)[j];
    if (d.lower > d.upper) {
      LPResult r;
      r.status = LPStatus::Infeasible;
      r.objective = ExtRational::posInf();
      r.farkas.rows.assign(m_, Rational());
      r.farkas.lower.assign(n_, Rational());
      r.farkas.upper.assign(n_, Rational());
      r.farkas.lower[j] = Rational(1);
      r.farkas.upper[j] = Rational(1);
      return r;
    }
  }
  setup();

  int ubCol = -1;
  int ubDir = 0;
  bool needPhase1 = false;
  for (int i = 0; i < m_; ++i) needPhase1 = needPhase1 || head_[i] >= n_ + m_;
  if (needPhase1) {
    std::vector<Rational> cost1(cols_);
    for (int i = 0; i < m_; ++i) cost1[artCol(i)] = Rational(1);
    optimize(cost1, &ubCol, &ubDir);
    Rational w;
    for (int i = 0; i < m_; ++i) w += val_[artCol(i)];
    if (w.sign() > 0) return infeasibleFromPhase1(cost1);
    for (int i = 0; i < m_; ++i) {
      if (head_[i] < n_ + m_) continue;
      for (int k = 0; k < n_ + m_; ++k) {
        if (!at(i, k).isZero()) {
          pivot(i, k);
          break;
        }
      }
    }
  }
  for (int i = 0; i < m_; ++i) {
    lo_[artCol(i)] = ExtRational(0);
    up_[artCol(i)] = ExtRational(0);
    val_[artCol(i)] = Rational();
  }

  std::vector<Rational> cost(cols_);
  for (const auto& t : objective_) cost[t.index] = t.value;
  bool bounded = optimize(cost, &ubCol, &ubDir);

  LPResult r;
  r.iterations = iterations_;
  r.primal.assign(val_.begin(), val_.begin() + n_);
  if (!bounded) {
    r.status = LPStatus::Unbounded;
    r.objective = ExtRational::negInf();
    r.ray.assign(n_, Rational());
    Rational dir(ubDir);
    if (ubCol < n_) r.ray[ubCol] = dir;
    for (int i = 0; i < m_; ++i) {
      int b = head_[i];
      if (b < n_) r.ray[b] = -dir * at(i, ubCol);
    }
    return r;
  }
  r.status = LPStatus::Optimal;
  r.duals = duals(cost);
  r.reducedCosts.assign(n_, Rational());
  for (int j = 0; j < n_; ++j) r.reducedCosts[j] = cost[j];
  for (int i = 0; i < m_; ++i) {
    for (const auto& t : inst_.constraint(i).coefficients) {
      r.reducedCosts[t.index] -= r.duals[i] * t.value;
    }
  }
  r.basis.reserve(m_);
  for (int i = 0; i < m_; ++i) {
    int b = head_[i];
    r.basis.push_back(b < n_ ? ColumnRef::structural(b)
                             : ColumnRef::slack(b - n_));
  }
  r.objective = activity(objective_, r.primal);
  verifyOptimal(r);
  return r;
}

void Simplex::verifyOptimal(const LPResult& r) const {
  // Exact strong duality: c^T x = y^T b + sum_j d_j x_j with d_j x_j
  // attained at an active bound.
  Rational dualValue;
  for (int i = 0; i < m_; ++i) {
    const auto& row = inst_.constraint(i);
    const Rational& y = r.duals[i];
    if ((row.sense == Sense::GreaterEqual && y.sign() < 0) ||
        (row.sense == Sense::LessEqual && y.sign() > 0)) {
      throw LPError("dual sign violation");
    }
    dualValue += y * row.rhs;
  }
  for (int j = 0; j < n_; ++j) {
    const Rational& d = r.reducedCosts[j];
    if (d.isZero()) continue;
    ExtRational bound = d.sign() > 0 ? lo_[j] : up_[j];
    if (!bound.isFinite() || bound.value() != r.primal[j]) {
      throw LPError("reduced cost not supported by an active bound");
    }
    dualValue += d * r.primal[j];
  }
  if (dualValue != r.objective.value()) {
    throw LPError("strong duality check failed");
  }
}

}  // namespace

LPResult solveLP(const Instance& instance, const LocalBounds& local) {
  return Simplex(instance, local, instance.minObjective()).run();
}

LPResult solveLP(const Instance& instance, const LocalBounds& local,
                 const SparseVector& objective) {
  return Simplex(instance, local, objective).run();
}

TableauRow tableauRow(const LPResult& result, const Instance& instance,
                      ColumnRef basicVar) {
  if (result.status != LPStatus::Optimal) {
    throw LPError("tableau row requested for a non-optimal result");
  }
  const int m = instance.numConstraints();
  const int n = instance.numVariables();
  if (static_cast<int>(result.basis.size()) != m) {
    throw LPError("basis size does not match the instance");
  }
  int pos = -1;
  for (int r = 0; r < m; ++r) {
    if (result.basis[r] == basicVar) pos = r;
  }
  if (pos < 0) throw LPError("column is not basic");

  // Solve B^T u = e_pos by Gauss-Jordan elimination; column r of B is the
  // matrix column of basis[r] (A_j, or -e_i for the activity of row i).
  std::vector<std::vector<Rational>> bt(m, std::vector<Rational>(m + 1));
  for (int r = 0; r < m; ++r) {
    const ColumnRef& c = result.basis[r];
    if (c.kind == ColumnRef::Kind::Slack) {
      bt[r][c.index] = Rational(-1);
    } else {
      for (int i = 0; i < m; ++i) {
        for (const auto& t : instance.constraint(i).coefficients) {
          if (t.index == c.index) bt[r][i] = t.value;
        }
      }
    }
    bt[r][m] = r == pos ? Rational(1) : Rational(0);
  }
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r) {
      if (!bt[r][col].isZero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw LPError("singular basis");
    std::swap(bt[piv], bt[col]);
    Rational p = bt[col][col];
    for (int k = col; k <= m; ++k) bt[col][k] /= p;
    for (int r = 0; r < m; ++r) {
      if (r == col || bt[r][col].isZero()) continue;
      Rational f = bt[r][col];
      for (int k = col; k <= m; ++k) bt[r][k] -= f * bt[col][k];
    }
  }
  std::vector<Rational> u(m);
  for (int i = 0; i < m; ++i) u[i] = bt[i][m];

  std::vector<bool> basicStructural(n, false);
  std::vector<bool> basicSlack(m, false);
  for (const auto& c : result.basis) {
    if (c.kind == ColumnRef::Kind::Structural) {
      basicStructural[c.index] = true;
    } else {
      basicSlack[c.index] = true;
    }
  }

  TableauRow row;
  row.basicVar = basicVar;
  std::vector<Rational> structural(n);
  for (int i = 0; i < m; ++i) {
    if (u[i].isZero()) continue;
    for (const auto& t : instance.constraint(i).coefficients) {
      structural[t.index] += u[i] * t.value;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!basicStructural[j] && !structural[j].isZero()) {
      row.structural.push_back({j, structural[j]});
    }
  }
  // The activity column of row i carries -u_i.
  for (int i = 0; i < m; ++i) {
    if (basicSlack[i] || u[i].isZero()) continue;
    Rational alpha = -u[i];
    const auto& c = instance.constraint(i);
    row.rhs -= alpha * c.rhs;
    if (c.sense == Sense::LessEqual) {
      row.slack.push_back({i, -alpha});
    } else if (c.sense == Sense::GreaterEqual) {
      row.slack.push_back({i, alpha});
    }
  }
  return row;
}

ExtRational safeDualBound(const Instance& instance, const LocalBounds& local,
                          const std::vector<Rational>& candidateDuals) {
  return safeDualBound(instance, local, candidateDuals,
                       instance.minObjective());
}

ExtRational safeDualBound(const Instance& instance, const LocalBounds& local,
                          const std::vector<Rational>& candidateDuals,
                          const SparseVector& objective) {
  const int n = instance.numVariables();
  const int m = instance.numConstraints();
  if (static_cast<int>(candidateDuals.size()) != m ||
      static_cast<int>(local.size()) != n) {
    throw LPError("safeDualBound: dimension mismatch");
  }
  std::vector<Rational> r(n);
  for (const auto& t : objective) r[t.index] = t.value;
  Rational value;
  for (int i = 0; i < m; ++i) {
    const auto& row = instance.constraint(i);
    Rational y = candidateDuals[i];
    if (row.sense == Sense::GreaterEqual && y.sign() < 0) y = Rational();
    if (row.sense == Sense::LessEqual && y.sign() > 0) y = Rational();
    if (y.isZero()) continue;
    value += y * row.rhs;
    for (const auto& t : row.coefficients) r[t.index] -= y * t.value;
  }
  for (int j = 0; j < n; ++j) {
    if (r[j].isZero()) continue;
    const ExtRational& bound = r[j].sign() > 0 ? local[j].lower : local[j].upper;
    if (!bound.isFinite()) return ExtRational::negInf();
    value += r[j] * bound.value();
  }
  return ExtRational(value);
}

}  // namespace exactmip
