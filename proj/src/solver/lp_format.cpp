// Copyright 2026 The RML Authors
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

#include "rml/solver/lp_format.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

#include "rml/error.hpp"

namespace rml::solver {

namespace {

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  if (v == 0.0) v = 0.0;
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

constexpr int kTermsPerLine = 8;

// Appends " + 3 x" style terms, wrapping long expressions.
class ExprWriter {
 public:
  explicit ExprWriter(std::string& out) : out_(out) {}

  void term(double coeff, const std::string& name) {
    wrap();
    if (coeff < 0) {
      out_ += first_ ? " -" : " - ";
    } else if (!first_) {
      out_ += " + ";
    } else {
      out_ += " ";
    }
    const double mag = std::abs(coeff);
    if (mag != 1.0) out_ += num(mag) + " ";
    out_ += name;
    first_ = false;
  }

  void quad(double coeff, const std::string& a, const std::string& b) {
    wrap();
    out_ += coeff < 0 ? " - [ " : (first_ ? " [ " : " + [ ");
    const double mag = std::abs(coeff);
    if (mag != 1.0) out_ += num(mag) + " ";
    out_ += a + " * " + b + " ]";
    first_ = false;
  }

  bool empty() const { return first_; }

 private:
  void wrap() {
    if (count_ > 0 && count_ % kTermsPerLine == 0) out_ += "\n  ";
    ++count_;
  }

  std::string& out_;
  bool first_ = true;
  int count_ = 0;
};

}  // namespace

std::string write_lp_format(const LpModel& model) {
  std::string out;
  out += model.sense == ObjSense::kMaximize ? "Maximize\n" : "Minimize\n";
  out += " obj:";
  {
    ExprWriter expr(out);
    for (const Variable& v : model.vars()) {
      if (v.obj != 0.0) expr.term(v.obj, v.name);
    }
  }
  out += "\nSubject To\n";
  for (const Row& row : model.rows()) {
    out += " " + row.name + ":";
    ExprWriter expr(out);
    for (std::size_t k = 0; k < row.index.size(); ++k) {
      expr.term(row.value[k], model.var(row.index[k]).name);
    }
    for (const QuadTerm& q : row.quad) {
      expr.quad(q.coeff, model.var(q.i).name, model.var(q.j).name);
    }
    if (expr.empty() && model.num_vars() > 0) {
      out += " 0 " + model.var(0).name;
    }
    switch (row.sense) {
      case RowSense::kLe: out += " <= "; break;
      case RowSense::kGe: out += " >= "; break;
      case RowSense::kEq: out += " = "; break;
    }
    out += num(row.rhs) + "\n";
  }
  std::string bounds;
  std::vector<const Variable*> binaries, generals;
  for (const Variable& v : model.vars()) {
    if (v.integer && v.lower == 0.0 && v.upper == 1.0) {
      binaries.push_back(&v);
      continue;
    }
    if (v.integer) generals.push_back(&v);
    if (v.lower == 0.0 && std::isinf(v.upper)) continue;
    if (std::isinf(v.lower) && std::isinf(v.upper)) {
      bounds += " " + v.name + " free\n";
    } else if (v.lower == v.upper) {
      bounds += " " + v.name + " = " + num(v.lower) + "\n";
    } else {
      bounds += " " + num(v.lower) + " <= " + v.name + " <= " + num(v.upper) +
                "\n";
    }
  }
  if (!bounds.empty()) out += "Bounds\n" + bounds;
  if (!binaries.empty()) {
    out += "Binaries\n";
    for (const Variable* v : binaries) out += " " + v->name + "\n";
  }
  if (!generals.empty()) {
    out += "Generals\n";
    for (const Variable* v : generals) out += " " + v->name + "\n";
  }
  out += "End\n";
  return out;
}

std::string dump_model(const LpModel& model, const std::string& stem) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::path dir = fs::temp_directory_path(ec);
  if (ec) dir = ".";
  fs::path path;
  for (int i = 0;; ++i) {
    path = dir / (stem + "-" + std::to_string(i) + ".lp");
    if (!fs::exists(path, ec)) break;
  }
  std::ofstream out(path);
  out << write_lp_format(model);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  return path.string();
}

}  // namespace rml::solver
