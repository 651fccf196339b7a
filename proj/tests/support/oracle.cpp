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

#include "oracle.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

namespace {

long long toLong(const exactmip::Integer& z) {
  if (!z.fits_slong_p()) throw OverflowError();
  return z.get_si();
}

Frac floorOf(const Frac& f) {
  i128 q = f.num() / f.den();
  if (f.num() % f.den() != 0 && f.num() < 0) --q;
  return Frac(q, 1);
}

Frac ceilOf(const Frac& f) {
  Frac fl = floorOf(f);
  return fl == f ? fl : fl + Frac(1);
}

// Solves the square system M y = r; false if singular.
bool solveSquare(std::vector<std::vector<Frac>> m, std::vector<Frac> r,
                 Point* y) {
  const std::size_t d = r.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col].isZero()) ++piv;
    if (piv == d) return false;
    std::swap(m[piv], m[col]);
    std::swap(r[piv], r[col]);
    for (std::size_t row = 0; row < d; ++row) {
      if (row == col || m[row][col].isZero()) continue;
      Frac f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < d; ++k) m[row][k] -= f * m[col][k];
      r[row] -= f * r[col];
    }
  }
  y->assign(d, Frac());
  for (std::size_t k = 0; k < d; ++k) (*y)[k] = r[k] / m[k][k];
  return true;
}

struct Plane {
  std::vector<Frac> a;
  Frac b;
};

}  // namespace

Frac toFrac(const exactmip::Rational& r) {
  return Frac(toLong(r.numerator()), toLong(r.denominator()));
}

exactmip::Rational toRational(const Frac& f) {
  return exactmip::Rational::parse(f.str());
}

Problem fromInstance(const exactmip::Instance& instance) {
  Problem p;
  p.n = instance.numVariables();
  for (const auto& v : instance.variables()) {
    if (!v.lower.isFinite() || !v.upper.isFinite()) {
      throw std::invalid_argument("oracle needs finite bounds");
    }
    p.lo.push_back(toFrac(v.lower.value()));
    p.hi.push_back(toFrac(v.upper.value()));
    p.integral.push_back(v.integral);
  }
  p.c.assign(p.n, Frac());
  for (const auto& t : instance.minObjective()) p.c[t.index] = toFrac(t.value);
  for (const auto& c : instance.constraints()) {
    Row r;
    r.a.assign(p.n, Frac());
    for (const auto& t : c.coefficients) r.a[t.index] = toFrac(t.value);
    r.rel = c.sense == exactmip::Sense::LessEqual      ? Rel::Le
            : c.sense == exactmip::Sense::GreaterEqual ? Rel::Ge
                                                       : Rel::Eq;
    r.b = toFrac(c.rhs);
    p.rows.push_back(std::move(r));
  }
  return p;
}

bool holds(const Row& row, const Point& x) {
  Frac act;
  for (std::size_t j = 0; j < row.a.size(); ++j) {
    if (!row.a[j].isZero()) act += row.a[j] * x[j];
  }
  switch (row.rel) {
    case Rel::Le:
      return act <= row.b;
    case Rel::Ge:
      return act >= row.b;
    case Rel::Eq:
      return act == row.b;
  }
  return false;
}

bool feasible(const Problem& p, const Point& x, bool checkIntegrality) {
  for (int j = 0; j < p.n; ++j) {
    if (x[j] < p.lo[j] || x[j] > p.hi[j]) return false;
    if (checkIntegrality && p.integral[j] && !x[j].isInteger()) return false;
  }
  for (const auto& r : p.rows) {
    if (!holds(r, x)) return false;
  }
  return true;
}

Frac objective(const Problem& p, const Point& x) {
  Frac v;
  for (int j = 0; j < p.n; ++j) v += p.c[j] * x[j];
  return v;
}

std::vector<Point> vertices(const std::vector<Row>& rows,
                            const std::vector<Frac>& lo,
                            const std::vector<Frac>& hi) {
  const std::size_t d = lo.size();
  std::vector<Plane> planes;
  for (const auto& r : rows) {
    bool zero = std::all_of(r.a.begin(), r.a.end(),
                            [](const Frac& f) { return f.isZero(); });
    if (zero) {
      if (!holds(r, Point(d))) return {};
      continue;
    }
    planes.push_back({r.a, r.b});
  }
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Frac> e(d);
    e[k] = Frac(1);
    planes.push_back({e, lo[k]});
    planes.push_back({e, hi[k]});
  }
  auto inside = [&](const Point& y) {
    for (std::size_t k = 0; k < d; ++k) {
      if (y[k] < lo[k] || y[k] > hi[k]) return false;
    }
    for (const auto& r : rows) {
      if (!holds(r, y)) return false;
    }
    return true;
  };

  std::vector<Point> out;
  if (d == 0) {
    out.push_back({});
    return out;
  }
  std::vector<std::size_t> pick(d);
  std::function<void(std::size_t, std::size_t)> choose =
      [&](std::size_t depth, std::size_t from) {
        if (depth == d) {
          std::vector<std::vector<Frac>> m;
          std::vector<Frac> rhs;
          for (std::size_t i : pick) {
            m.push_back(planes[i].a);
            rhs.push_back(planes[i].b);
          }
          Point y;
          if (solveSquare(m, rhs, &y) && inside(y)) out.push_back(y);
          return;
        }
        for (std::size_t i = from; i < planes.size(); ++i) {
          pick[depth] = i;
          choose(depth + 1, i + 1);
        }
      };
  choose(0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Outcome solveLp(const Problem& p) {
  Outcome best;
  for (const auto& v : vertices(p.rows, p.lo, p.hi)) {
    Frac val = objective(p, v);
    if (!best.feasible || val < best.value) {
      best.feasible = true;
      best.value = val;
      best.point = v;
    }
  }
  return best;
}

namespace {

// Calls visit(x) for every integer assignment of the integral variables,
// continuous entries left at zero.
void forEachLatticePoint(const Problem& p,
                         const std::function<void(const Point&)>& visit) {
  std::vector<int> ints;
  for (int j = 0; j < p.n; ++j) {
    if (p.integral[j]) ints.push_back(j);
  }
  Point x(p.n);
  std::vector<Frac> from(ints.size()), to(ints.size());
  for (std::size_t k = 0; k < ints.size(); ++k) {
    from[k] = ceilOf(p.lo[ints[k]]);
    to[k] = floorOf(p.hi[ints[k]]);
    if (from[k] > to[k]) return;
    x[ints[k]] = from[k];
  }
  while (true) {
    visit(x);
    std::size_t k = 0;
    while (k < ints.size()) {
      int j = ints[k];
      if (x[j] < to[k]) {
        x[j] += Frac(1);
        break;
      }
      x[j] = from[k];
      ++k;
    }
    if (k == ints.size()) return;
  }
}

// Vertices of the continuous remainder once the integer part of x is fixed.
std::vector<Point> fiber(const Problem& p, const Point& x) {
  std::vector<int> cont;
  for (int j = 0; j < p.n; ++j) {
    if (!p.integral[j]) cont.push_back(j);
  }
  std::vector<Row> rows;
  for (const auto& r : p.rows) {
    Row reduced;
    reduced.rel = r.rel;
    reduced.b = r.b;
    for (int j = 0; j < p.n; ++j) {
      if (p.integral[j]) reduced.b -= r.a[j] * x[j];
    }
    for (int j : cont) reduced.a.push_back(r.a[j]);
    rows.push_back(std::move(reduced));
  }
  std::vector<Frac> lo, hi;
  for (int j : cont) {
    lo.push_back(p.lo[j]);
    hi.push_back(p.hi[j]);
  }
  std::vector<Point> out;
  for (const auto& y : vertices(rows, lo, hi)) {
    Point full = x;
    for (std::size_t k = 0; k < cont.size(); ++k) full[cont[k]] = y[k];
    out.push_back(std::move(full));
  }
  return out;
}

}  // namespace

Outcome solveMilp(const Problem& p) {
  Outcome best;
  forEachLatticePoint(p, [&](const Point& x) {
    for (const auto& full : fiber(p, x)) {
      Frac val = objective(p, full);
      if (!best.feasible || val < best.value) {
        best.feasible = true;
        best.value = val;
        best.point = full;
      }
    }
  });
  return best;
}

std::vector<Point> mixedExtremePoints(const Problem& p) {
  std::vector<Point> out;
  forEachLatticePoint(p, [&](const Point& x) {
    for (auto& full : fiber(p, x)) out.push_back(std::move(full));
  });
  return out;
}

long long latticeSize(const Problem& p) {
  long long size = 1;
  for (int j = 0; j < p.n; ++j) {
    if (!p.integral[j]) continue;
    Frac width = floorOf(p.hi[j]) - ceilOf(p.lo[j]) + Frac(1);
    if (width.sign() <= 0) return 0;
    size *= static_cast<long long>(width.num());
  }
  return size;
}

}  // namespace oracle
