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

#ifndef EXACTMIP_PROOF_HPP_
#define EXACTMIP_PROOF_HPP_

#include <optional>
#include <stdexcept>
#include <vector>

#include "exactmip/lp.hpp"
#include "exactmip/model.hpp"

namespace exactmip {

class ProofError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A constraint a derivation can reference: a model row read as >= or <=
/// (equality rows can be read both ways), a finite global bound, or an
/// earlier derived line.
struct ProofRef {
  enum class Kind { RowGreater, RowLess, LowerBound, UpperBound, Line };
  Kind kind = Kind::Line;
  int index = 0;

  static ProofRef rowGreater(int i) { return {Kind::RowGreater, i}; }
  static ProofRef rowLess(int i) { return {Kind::RowLess, i}; }
  static ProofRef lowerBound(int j) { return {Kind::LowerBound, j}; }
  static ProofRef upperBound(int j) { return {Kind::UpperBound, j}; }
  static ProofRef line(int k) { return {Kind::Line, k}; }
  friend bool operator==(const ProofRef&, const ProofRef&) = default;
};

struct ProofTerm {
  ProofRef ref;
  Rational multiplier;
};

/// coefficients sense rhs, with sense >= or <= only.
struct ProofConstraint {
  SparseVector coefficients;
  Sense sense = Sense::GreaterEqual;
  Rational rhs;

  /// 0 >= p with p > 0, or 0 <= p with p < 0.
  bool isContradiction() const;
};

enum class ProofRule { Asm, Lin, Rnd, Uns };

struct ProofLine {
  ProofConstraint constraint;
  ProofRule rule = ProofRule::Asm;
  std::vector<ProofTerm> terms;  // Lin and Rnd
  int child1 = -1, asm1 = -1, child2 = -1, asm2 = -1;  // Uns
};

/// Append-only derivation sequence over a fixed instance. Lin and Rnd
/// lines are computed from their terms, so the stated coefficients always
/// match the combination exactly.
class ProofLog {
 public:
  explicit ProofLog(const Instance& instance) : instance_(&instance) {}

  const Instance& instance() const { return *instance_; }
  const std::vector<ProofLine>& lines() const { return lines_; }
  int size() const { return static_cast<int>(lines_.size()); }
  const ProofLine& line(int k) const { return lines_.at(k); }

  /// The constraint behind a reference. Throws ProofError for an invalid
  /// reference (wrong row sense, infinite bound, unknown line).
  ProofConstraint resolve(const ProofRef& ref) const;

  int assume(ProofConstraint constraint);

  /// Conical combination deriving a constraint of `sense`; throws
  /// ProofError on a sign-invalid multiplier.
  int linear(const std::vector<ProofTerm>& terms, Sense sense);
  /// As linear, stating the weaker right-hand side `rhs`.
  int linear(const std::vector<ProofTerm>& terms, Sense sense,
             const Rational& rhs);

  /// Combination followed by rounding of the right-hand side (ceil for >=,
  /// floor for <=). Throws ProofError unless every combined coefficient is
  /// an integer on an integral variable.
  int round(const std::vector<ProofTerm>& terms, Sense sense);

  /// Merges child1 (derived under assumption asm1) and child2 (under asm2)
  /// into `stated`; asm1/asm2 must be x_j <= v and x_j >= v+1.
  int unsplit(int child1, int asm1, int child2, int asm2,
              ProofConstraint stated);

  /// Combination without recording it.
  ProofConstraint combine(const std::vector<ProofTerm>& terms,
                          Sense sense) const;

 private:
  int append(ProofLine line);

  const Instance* instance_;
  std::vector<ProofLine> lines_;
};

/// Current proof source of each finite local bound: a global bound row or
/// a derived line.
struct BoundSources {
  std::vector<std::optional<ProofRef>> lower;
  std::vector<std::optional<ProofRef>> upper;

  static BoundSources global(const Instance& instance);
};

/// How each row of an LP instance is referenced in proofs: `greater` for a
/// >= reading, `less` for a <= reading (both for equality rows).
struct RowRefs {
  std::optional<ProofRef> greater;
  std::optional<ProofRef> less;
};

/// Refs for the rows of the model itself.
std::vector<RowRefs> modelRowRefs(const Instance& instance);

/// Derives objective^T x >= y^T b + sum_j r_j (bound of j), r = c - A^T y,
/// over the LP rows of `lp` and the local box. Dual signs must already be
/// valid. Returns nullopt if a needed bound source is missing.
std::optional<int> logDualBound(ProofLog& log, const Instance& lp,
                                const std::vector<RowRefs>& rows,
                                const BoundSources& sources,
                                const LocalBounds& local,
                                const std::vector<Rational>& duals,
                                const SparseVector& objective);

/// Derives the contradiction of a Farkas proof.
int logFarkas(ProofLog& log, const Instance& lp,
              const std::vector<RowRefs>& rows, const BoundSources& sources,
              const FarkasProof& farkas);

/// Derives sum_i lambda_i (row i in >= form), dropping bound multipliers.
int logRowsOnly(ProofLog& log, const Instance& lp,
                const std::vector<RowRefs>& rows, const FarkasProof& farkas);

}  // namespace exactmip

#endif  // EXACTMIP_PROOF_HPP_
