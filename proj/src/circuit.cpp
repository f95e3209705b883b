// Copyright 2026 The mqs Authors
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

#include "mqs/circuit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mqs/format.hpp"
#include "mqs/random.hpp"

namespace mqs {

namespace {

struct GateInfo {
  std::string_view label;
  GateKind kind;
  bool has_param;
};

constexpr std::array<GateInfo, 16> kGateTable{{
    {"h", GateKind::SingleQubit, false},
    {"x", GateKind::SingleQubit, false},
    {"y", GateKind::SingleQubit, false},
    {"z", GateKind::SingleQubit, false},
    {"s", GateKind::SingleQubit, false},
    {"sdg", GateKind::SingleQubit, false},
    {"t", GateKind::SingleQubit, false},
    {"tdg", GateKind::SingleQubit, false},
    {"rx", GateKind::SingleQubit, true},
    {"ry", GateKind::SingleQubit, true},
    {"rz", GateKind::SingleQubit, true},
    {"cx", GateKind::TwoQubit, false},
    {"cz", GateKind::TwoQubit, false},
    {"cp", GateKind::TwoQubit, true},
    {"swap", GateKind::TwoQubit, false},
    {"measure", GateKind::Measurement, false},
}};

// Gates accepted by the OpenQASM 2.0 reader.
constexpr std::array<std::string_view, 8> kQasmGates{
    "h", "x", "z", "cx", "swap", "cp", "rz", "measure"};

const GateInfo* find_gate(std::string_view label) {
  for (const auto& g : kGateTable) {
    if (g.label == label) return &g;
  }
  return nullptr;
}

int arity(GateKind k) { return k == GateKind::TwoQubit ? 2 : 1; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// ---------------------------------------------------------------- native

Circuit parse_native(std::string_view text) {
  Circuit c;
  bool have_qubits = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto tok = split_ws(line);
    if (tok[0] == "name") {
      c.name = std::string(trim(line.substr(4)));
      continue;
    }
    if (tok[0] == "qubits") {
      if (have_qubits) throw ParseError(line_no, "duplicate 'qubits' line");
      std::optional<int> n;
      if (tok.size() == 2) n = parse_number<int>(tok[1]);
      if (!n || *n <= 0) throw ParseError(line_no, "expected 'qubits <positive int>'");
      c.num_qubits = *n;
      have_qubits = true;
      continue;
    }
    if (!have_qubits) {
      throw ParseError(line_no, "gate before 'qubits' declaration");
    }
    const GateInfo* info = find_gate(tok[0]);
    if (info == nullptr) {
      throw ParseError(line_no, "unknown gate '" + std::string(tok[0]) + "'");
    }
    const std::size_t want =
        1 + static_cast<std::size_t>(arity(info->kind)) + (info->has_param ? 1 : 0);
    if (tok.size() != want) {
      throw ParseError(line_no, "wrong operand count for '" + std::string(tok[0]) + "'");
    }
    std::vector<int> qubits;
    for (int k = 0; k < arity(info->kind); ++k) {
      auto q = parse_number<int>(tok[1 + k]);
      if (!q) throw ParseError(line_no, "bad qubit index '" + std::string(tok[1 + k]) + "'");
      if (*q < 0 || *q >= c.num_qubits) {
        throw ParseError(line_no, "qubit index " + std::to_string(*q) + " out of range");
      }
      qubits.push_back(*q);
    }
    std::optional<double> param;
    if (info->has_param) {
      param = parse_number<double>(tok.back());
      if (!param) throw ParseError(line_no, "bad parameter '" + std::string(tok.back()) + "'");
    }
    try {
      c.add(info->label, std::move(qubits), param);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!have_qubits) throw ParseError(0, "missing 'qubits' declaration");
  return c;
}

// ------------------------------------------------------------ qasm subset

// Recursive-descent evaluator for angle expressions: numbers, pi, + - * /,
// unary minus and parentheses.
class AngleParser {
 public:
  explicit AngleParser(std::string_view s) : s_(s) {}

  std::optional<double> parse() {
    auto v = expr();
    skip();
    if (!v || i_ != s_.size()) return std::nullopt;
    return v;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char ch) {
    skip();
    if (i_ < s_.size() && s_[i_] == ch) {
      ++i_;
      return true;
    }
    return false;
  }
  std::optional<double> expr() {
    auto lhs = term();
    while (lhs) {
      if (eat('+')) {
        auto r = term();
        if (!r) return std::nullopt;
        *lhs += *r;
      } else if (eat('-')) {
        auto r = term();
        if (!r) return std::nullopt;
        *lhs -= *r;
      } else {
        break;
      }
    }
    return lhs;
  }
  std::optional<double> term() {
    auto lhs = factor();
    while (lhs) {
      if (eat('*')) {
        auto r = factor();
        if (!r) return std::nullopt;
        *lhs *= *r;
      } else if (eat('/')) {
        auto r = factor();
        if (!r) return std::nullopt;
        *lhs /= *r;
      } else {
        break;
      }
    }
    return lhs;
  }
  std::optional<double> factor() {
    if (eat('-')) {
      auto v = factor();
      if (v) *v = -*v;
      return v;
    }
    if (eat('(')) {
      auto v = expr();
      if (!v || !eat(')')) return std::nullopt;
      return v;
    }
    skip();
    if (s_.substr(i_).starts_with("pi")) {
      i_ += 2;
      return std::numbers::pi;
    }
    std::size_t j = i_;
    while (j < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '.' ||
            s_[j] == 'e' || s_[j] == 'E' ||
            ((s_[j] == '-' || s_[j] == '+') && j > i_ && (s_[j - 1] == 'e' || s_[j - 1] == 'E')))) {
      ++j;
    }
    auto v = parse_number<double>(s_.substr(i_, j - i_));
    if (v) i_ = j;
    return v;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

struct Register {
  std::string name;
  int offset;
  int size;
};

class QasmReader {
 public:
  Circuit read(std::string_view text) {
    // Strip // comments while keeping line structure, then split on ';'.
    std::string clean;
    clean.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
        while (i < text.size() && text[i] != '\n') ++i;
        if (i < text.size()) clean.push_back('\n');
        continue;
      }
      clean.push_back(text[i]);
    }
    int line = 1;
    std::size_t start = 0;
    for (std::size_t i = 0; i < clean.size(); ++i) {
      if (clean[i] != ';') continue;
      std::string_view stmt(clean.data() + start, i - start);
      int stmt_line = line;
      for (char ch : stmt) {
        if (ch == '\n') ++line;
      }
      // Report the line where the statement's text begins.
      std::size_t lead = 0;
      while (lead < stmt.size() && std::isspace(static_cast<unsigned char>(stmt[lead]))) {
        if (stmt[lead] == '\n') ++stmt_line;
        ++lead;
      }
      statement(trim(stmt), stmt_line);
      start = i + 1;
    }
    if (!trim(std::string_view(clean).substr(start)).empty()) {
      throw ParseError(line, "missing ';' at end of input");
    }
    if (qregs_.empty()) throw ParseError(0, "no qreg declared");
    c_.num_qubits = next_offset_;
    return std::move(c_);
  }

 private:
  void statement(std::string_view s, int line) {
    if (s.empty()) return;
    if (s.starts_with("OPENQASM")) {
      if (trim(s.substr(8)) != "2.0") throw ParseError(line, "only OPENQASM 2.0 is supported");
      return;
    }
    if (s.starts_with("include")) return;
    if (s.starts_with("qreg") || s.starts_with("creg")) {
      declare(s, line);
      return;
    }
    if (s.starts_with("barrier")) return;

    std::size_t name_end = 0;
    while (name_end < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[name_end])) || s[name_end] == '_')) {
      ++name_end;
    }
    const std::string_view name = s.substr(0, name_end);
    if (name.empty()) throw ParseError(line, "syntax error near '" + std::string(s) + "'");
    if (std::find(kQasmGates.begin(), kQasmGates.end(), name) == kQasmGates.end()) {
      throw ParseError(line, "unknown gate '" + std::string(name) + "'");
    }
    const GateInfo* info = find_gate(name);
    std::string_view rest = trim(s.substr(name_end));

    std::optional<double> param;
    if (info->has_param) {
      if (!rest.starts_with('(')) throw ParseError(line, "missing parameter for '" + std::string(name) + "'");
      std::size_t close = std::string_view::npos;
      for (std::size_t i = 0, depth = 0; i < rest.size(); ++i) {
        if (rest[i] == '(') ++depth;
        if (rest[i] == ')' && --depth == 0) {
          close = i;
          break;
        }
      }
      if (close == std::string_view::npos) throw ParseError(line, "unbalanced '('");
      param = AngleParser(rest.substr(1, close - 1)).parse();
      if (!param) throw ParseError(line, "bad parameter expression");
      rest = trim(rest.substr(close + 1));
    } else if (rest.starts_with('(')) {
      throw ParseError(line, "unexpected parameter for '" + std::string(name) + "'");
    }

    if (info->kind == GateKind::Measurement) {
      auto arrow = rest.find("->");
      if (arrow == std::string_view::npos) throw ParseError(line, "expected '->' in measure");
      rest = trim(rest.substr(0, arrow));
    }

    std::vector<std::vector<int>> operands;
    std::size_t p = 0;
    while (p <= rest.size()) {
      auto comma = rest.find(',', p);
      if (comma == std::string_view::npos) comma = rest.size();
      operands.push_back(operand(trim(rest.substr(p, comma - p)), line));
      p = comma + 1;
    }
    if (static_cast<int>(operands.size()) != arity(info->kind)) {
      throw ParseError(line, "wrong operand count for '" + std::string(name) + "'");
    }
    emit(*info, operands, param, line);
  }

  void emit(const GateInfo& info, const std::vector<std::vector<int>>& ops,
            std::optional<double> param, int line) {
    // Whole-register operands broadcast element-wise.
    std::size_t width = 1;
    for (const auto& o : ops) {
      if (o.size() > 1) {
        if (width > 1 && o.size() != width) throw ParseError(line, "register size mismatch");
        width = o.size();
      }
    }
    for (std::size_t k = 0; k < width; ++k) {
      std::vector<int> qs;
      for (const auto& o : ops) qs.push_back(o.size() == 1 ? o[0] : o[k]);
      try {
        c_.add(info.label, std::move(qs), param);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
      }
    }
  }

  std::vector<int> operand(std::string_view s, int line) {
    auto br = s.find('[');
    std::string_view reg = trim(s.substr(0, br));
    auto it = std::find_if(qregs_.begin(), qregs_.end(),
                           [&](const Register& r) { return r.name == reg; });
    if (it == qregs_.end()) throw ParseError(line, "unknown register '" + std::string(reg) + "'");
    if (br == std::string_view::npos) {
      std::vector<int> all(it->size);
      for (int k = 0; k < it->size; ++k) all[k] = it->offset + k;
      return all;
    }
    auto close = s.find(']', br);
    if (close == std::string_view::npos) throw ParseError(line, "expected ']'");
    auto idx = parse_number<int>(trim(s.substr(br + 1, close - br - 1)));
    if (!idx) throw ParseError(line, "bad qubit index");
    if (*idx < 0 || *idx >= it->size) {
      throw ParseError(line, "qubit index " + std::to_string(*idx) + " out of range for " +
                                 it->name + "[" + std::to_string(it->size) + "]");
    }
    return {it->offset + *idx};
  }

  void declare(std::string_view s, int line) {
    const bool quantum = s.starts_with("qreg");
    std::string_view body = trim(s.substr(4));
    auto br = body.find('[');
    auto close = body.find(']');
    if (br == std::string_view::npos || close == std::string_view::npos || close < br) {
      throw ParseError(line, "malformed register declaration");
    }
    auto size = parse_number<int>(trim(body.substr(br + 1, close - br - 1)));
    if (!size || *size <= 0) throw ParseError(line, "bad register size");
    if (!quantum) return;
    qregs_.push_back({std::string(trim(body.substr(0, br))), next_offset_, *size});
    next_offset_ += *size;
    // Keep add()'s range check meaningful while gates stream in.
    c_.num_qubits = next_offset_;
  }

  Circuit c_;
  std::vector<Register> qregs_;
  int next_offset_ = 0;
};

}  // namespace

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

std::optional<GateKind> gate_kind_of(std::string_view label) {
  if (const GateInfo* g = find_gate(label)) return g->kind;
  return std::nullopt;
}

void Circuit::add(std::string_view label, std::vector<int> qs, std::optional<double> param) {
  const GateInfo* info = find_gate(label);
  if (info == nullptr) throw std::invalid_argument("unknown gate '" + std::string(label) + "'");
  if (static_cast<int>(qs.size()) != arity(info->kind)) {
    throw std::invalid_argument("gate '" + std::string(label) + "' expects " +
                                std::to_string(arity(info->kind)) + " qubit(s)");
  }
  for (int q : qs) {
    if (q < 0 || q >= num_qubits) {
      throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
    }
  }
  if (qs.size() == 2 && qs[0] == qs[1]) {
    throw std::invalid_argument("gate '" + std::string(label) + "' repeats qubit " +
                                std::to_string(qs[0]));
  }
  if (info->has_param != param.has_value()) {
    throw std::invalid_argument("gate '" + std::string(label) +
                                (info->has_param ? "' needs a parameter" : "' takes no parameter"));
  }
  gates.push_back(Gate{info->kind, std::string(info->label), std::move(qs), param});
}

Circuit parse_circuit(std::string_view text, CircuitFormat format) {
  if (format == CircuitFormat::Native) return parse_native(text);
  return QasmReader{}.read(text);
}

std::string render_native(const Circuit& c) {
  std::ostringstream out;
  if (!c.name.empty()) out << "name " << c.name << '\n';
  out << "qubits " << c.num_qubits << '\n';
  for (const auto& g : c.gates) {
    out << g.label;
    for (int q : g.qubits) out << ' ' << q;
    if (g.param) out << ' ' << format_number(*g.param);
    out << '\n';
  }
  return out.str();
}

SlicedCircuit slice_circuit(const Circuit& c) {
  SlicedCircuit sc{c, {}};
  // next_free[q] = earliest slice q may appear in.
  std::vector<std::size_t> next_free(static_cast<std::size_t>(c.num_qubits), 0);
  for (const auto& g : c.gates) {
    std::size_t slot = 0;
    for (int q : g.qubits) slot = std::max(slot, next_free[q]);
    if (slot == sc.slices.size()) sc.slices.emplace_back();
    sc.slices[slot].push_back(g);
    for (int q : g.qubits) next_free[q] = slot + 1;
  }
  return sc;
}

Circuit gen_ghz(int n) {
  if (n < 1) throw std::invalid_argument("gen_ghz: n must be >= 1");
  Circuit c{n, {}, "ghz_" + std::to_string(n)};
  c.add("h", {0});
  for (int i = 0; i + 1 < n; ++i) c.add("cx", {i, i + 1});
  return c;
}

Circuit gen_qft(int n) {
  if (n < 1) throw std::invalid_argument("gen_qft: n must be >= 1");
  Circuit c{n, {}, "qft_" + std::to_string(n)};
  for (int i = n - 1; i >= 0; --i) {
    c.add("h", {i});
    for (int j = i - 1; j >= 0; --j) {
      c.add("cp", {j, i}, std::ldexp(std::numbers::pi, -(i - j)));
    }
  }
  for (int i = 0; i < n / 2; ++i) c.add("swap", {i, n - 1 - i});
  return c;
}

namespace {

void toffoli(Circuit& c, int a, int b, int t) {
  c.add("h", {t});
  c.add("cx", {b, t});
  c.add("tdg", {t});
  c.add("cx", {a, t});
  c.add("t", {t});
  c.add("cx", {b, t});
  c.add("tdg", {t});
  c.add("cx", {a, t});
  c.add("t", {b});
  c.add("t", {t});
  c.add("h", {t});
  c.add("cx", {a, b});
  c.add("t", {a});
  c.add("tdg", {b});
  c.add("cx", {a, b});
}

void maj(Circuit& c, int x, int y, int z) {
  c.add("cx", {z, y});
  c.add("cx", {z, x});
  toffoli(c, x, y, z);
}

void uma(Circuit& c, int x, int y, int z) {
  toffoli(c, x, y, z);
  c.add("cx", {z, x});
  c.add("cx", {x, y});
}

}  // namespace

Circuit gen_cuccaro(int bits) {
  if (bits < 1) throw std::invalid_argument("gen_cuccaro: bits must be >= 1");
  const int n = 2 * bits + 2;
  Circuit c{n, {}, "cuccaro_" + std::to_string(bits)};
  const int cin = 0;
  const int cout = n - 1;
  auto b = [](int i) { return 1 + 2 * i; };
  auto a = [](int i) { return 2 + 2 * i; };

  maj(c, cin, b(0), a(0));
  for (int i = 1; i < bits; ++i) maj(c, a(i - 1), b(i), a(i));
  c.add("cx", {a(bits - 1), cout});
  for (int i = bits - 1; i >= 1; --i) uma(c, a(i - 1), b(i), a(i));
  uma(c, cin, b(0), a(0));
  return c;
}

Circuit gen_qvol(int n, int depth, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_qvol: n must be >= 2");
  if (depth < 1) throw std::invalid_argument("gen_qvol: depth must be >= 1");
  Circuit c{n, {}, "qvol_" + std::to_string(n) + "_d" + std::to_string(depth) + "_s" +
                       std::to_string(seed)};
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  auto angle = [&] { return 2.0 * std::numbers::pi * uniform_unit(rng); };
  for (int layer = 0; layer < depth; ++layer) {
    for (int i = 0; i < n; ++i) perm[i] = i;
    portable_shuffle(std::span<int>(perm), rng);
    for (int p = 0; p + 1 < n; p += 2) {
      const int q0 = perm[p];
      const int q1 = perm[p + 1];
      // Two-qubit block: 4 single-qubit positions per qubit around 3 CNOTs.
      for (int pos = 0; pos < 4; ++pos) {
        const char* rot = pos % 2 == 0 ? "rz" : "ry";
        c.add(rot, {q0}, angle());
        c.add(rot, {q1}, angle());
        if (pos < 3) c.add("cx", pos == 1 ? std::vector{q1, q0} : std::vector{q0, q1});
      }
    }
  }
  return c;
}

}  // namespace mqs
