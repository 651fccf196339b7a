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

#include "exactmip/certificate.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace exactmip {

namespace {

bool plainName(const std::string& name) {
  if (name.empty()) return false;
  for (unsigned char c : name) {
    if (std::isspace(c) || c == '{' || c == '}') return false;
  }
  return true;
}

void writeSparse(std::ostream& out, const SparseVector& v) {
  out << v.size();
  for (const auto& t : v) out << ' ' << t.index << ' ' << t.value.str();
}

const char* senseToken(Sense s) {
  switch (s) {
    case Sense::GreaterEqual:
      return "G";
    case Sense::LessEqual:
      return "L";
    case Sense::Equal:
      return "E";
  }
  return "?";
}

class Layout {
 public:
  explicit Layout(const Instance& inst) {
    int next = 0;
    for (const auto& c : inst.constraints()) {
      Entry e;
      if (c.sense != Sense::LessEqual) e.greater = next++;
      if (c.sense != Sense::GreaterEqual) e.less = next++;
      rows_.push_back(e);
    }
    for (const auto& v : inst.variables()) {
      Entry e;
      if (v.lower.isFinite()) e.greater = next++;
      if (v.upper.isFinite()) e.less = next++;
      bounds_.push_back(e);
    }
    size_ = next;
  }

  int size() const { return size_; }

  int index(const ProofRef& ref) const {
    int k = -1;
    switch (ref.kind) {
      case ProofRef::Kind::RowGreater:
        k = rows_.at(ref.index).greater;
        break;
      case ProofRef::Kind::RowLess:
        k = rows_.at(ref.index).less;
        break;
      case ProofRef::Kind::LowerBound:
        k = bounds_.at(ref.index).greater;
        break;
      case ProofRef::Kind::UpperBound:
        k = bounds_.at(ref.index).less;
        break;
      case ProofRef::Kind::Line:
        return size_ + ref.index;
    }
    if (k < 0) throw CertificateError("reference to a missing row");
    return k;
  }

 private:
  struct Entry {
    int greater = -1;
    int less = -1;
  };
  std::vector<Entry> rows_;
  std::vector<Entry> bounds_;
  int size_ = 0;
};

}  // namespace

std::string emitCertificate(const SolveTrace& trace, const Instance& instance) {
  const ProofLog& log = trace.log;
  if (trace.finalLine < 0 || trace.finalLine != log.size() - 1) {
    throw CertificateError("trace has no final derivation");
  }
  if (&log.instance() != &instance) {
    throw CertificateError("trace belongs to a different instance");
  }
  Layout layout(instance);
  std::ostringstream out;
  out << "VER 1.0\n";

  const int n = instance.numVariables();
  std::vector<std::string> names(n);
  out << "VAR " << n << '\n';
  for (int j = 0; j < n; ++j) {
    const std::string& name = instance.variable(j).name;
    names[j] = plainName(name) ? name : "x" + std::to_string(j);
    out << names[j] << '\n';
  }

  std::vector<int> integral;
  for (int j = 0; j < n; ++j) {
    if (instance.variable(j).integral) integral.push_back(j);
  }
  out << "INT " << integral.size() << '\n';
  for (int j : integral) out << j << '\n';

  out << "OBJ min\n";
  writeSparse(out, instance.minObjective());
  out << '\n';

  out << "CON " << layout.size() << '\n';
  for (int i = 0; i < instance.numConstraints(); ++i) {
    const auto& c = instance.constraint(i);
    std::string name = plainName(c.name) ? c.name : "c" + std::to_string(i);
    auto emit = [&](const std::string& rowName, Sense s) {
      out << rowName << ' ' << senseToken(s) << ' ' << c.rhs.str() << ' ';
      writeSparse(out, c.coefficients);
      out << '\n';
    };
    if (c.sense == Sense::Equal) {
      emit(name + "_G", Sense::GreaterEqual);
      emit(name + "_L", Sense::LessEqual);
    } else {
      emit(name, c.sense);
    }
  }
  for (int j = 0; j < n; ++j) {
    const auto& v = instance.variable(j);
    if (v.lower.isFinite()) {
      out << "lb_" << names[j] << " G " << v.lower.value().str() << " 1 "
          << j << " 1\n";
    }
    if (v.upper.isFinite()) {
      out << "ub_" << names[j] << " L " << v.upper.value().str() << " 1 "
          << j << " 1\n";
    }
  }

  if (trace.infeasible) {
    out << "RTP infeas\n";
  } else {
    out << "RTP range " << trace.lowerBound.str() << ' '
        << trace.upperBound.str() << '\n';
  }

  out << "SOL " << trace.solutions.size() << '\n';
  for (std::size_t s = 0; s < trace.solutions.size(); ++s) {
    SparseVector point;
    for (int j = 0; j < n; ++j) {
      if (!trace.solutions[s][j].isZero()) {
        point.push_back({j, trace.solutions[s][j]});
      }
    }
    out << "sol" << s << ' ';
    writeSparse(out, point);
    out << '\n';
  }

  out << "DER " << log.size() << '\n';
  for (int k = 0; k < log.size(); ++k) {
    const ProofLine& line = log.line(k);
    const ProofConstraint& c = line.constraint;
    out << 'd' << k << ' ' << senseToken(c.sense) << ' ' << c.rhs.str()
        << ' ';
    writeSparse(out, c.coefficients);
    out << " { ";
    switch (line.rule) {
      case ProofRule::Asm:
        out << "asm";
        break;
      case ProofRule::Lin:
      case ProofRule::Rnd:
        out << (line.rule == ProofRule::Lin ? "lin " : "rnd ")
            << line.terms.size();
        for (const auto& t : line.terms) {
          out << ' ' << layout.index(t.ref) << ' ' << t.multiplier.str();
        }
        break;
      case ProofRule::Uns:
        out << "uns " << layout.size() + line.child1 << ' '
            << layout.size() + line.asm1 << ' '
            << layout.size() + line.child2 << ' '
            << layout.size() + line.asm2;
        break;
    }
    out << " }\n";
  }
  return out.str();
}

}  // namespace exactmip
