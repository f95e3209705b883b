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

#include "mqs/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "mqs/bottleneck.hpp"
#include "mqs/format.hpp"
#include "mqs/io.hpp"
#include "mqs/mapper.hpp"

namespace mqs {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t p = 0;
  while (p <= s.size()) {
    auto comma = s.find(',', p);
    if (comma == std::string_view::npos) comma = s.size();
    auto item = trim(s.substr(p, comma - p));
    if (!item.empty()) out.emplace_back(item);
    p = comma + 1;
  }
  return out;
}

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
  T v{};
  text = trim(text);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("bad value for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return v;
}

template <typename T>
std::string join(const std::vector<T>& xs, const std::function<std::string(const T&)>& f) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += f(xs[i]);
  }
  return out;
}

std::string num(double v) { return format_number(v); }

using Setter = std::function<void(ExperimentConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> m;
    m["circuits"] = [](ExperimentConfig& c, std::string_view v) {
      c.circuits.clear();
      for (const auto& s : split_list(v)) c.circuits.push_back(parse_circuit_spec(s));
    };
    m["qubits_per_core"] = [](ExperimentConfig& c, std::string_view v) {
      c.qubits_per_core = parse_value<int>("qubits_per_core", v);
    };
    m["topologies"] = [](ExperimentConfig& c, std::string_view v) {
      c.topologies.clear();
      for (const auto& s : split_list(v)) {
        auto k = topology_from_string(s);
        if (!k) throw ConfigError("unknown topology '" + s + "'");
        c.topologies.push_back(*k);
      }
    };
    m["links_min"] = [](ExperimentConfig& c, std::string_view v) { c.links_min = parse_value<int>("links_min", v); };
    m["links_max"] = [](ExperimentConfig& c, std::string_view v) { c.links_max = parse_value<int>("links_max", v); };
    m["link_width"] = [](ExperimentConfig& c, std::string_view v) { c.timing.link_width = parse_value<int>("link_width", v); };
    m["clock_freq_hz"] = [](ExperimentConfig& c, std::string_view v) { c.timing.clock_freq_hz = parse_value<double>("clock_freq_hz", v); };
    m["t_1q"] = [](ExperimentConfig& c, std::string_view v) { c.timing.t_1q = parse_value<double>("t_1q", v); };
    m["t_2q"] = [](ExperimentConfig& c, std::string_view v) { c.timing.t_2q = parse_value<double>("t_2q", v); };
    m["t_meas"] = [](ExperimentConfig& c, std::string_view v) { c.timing.t_meas = parse_value<double>("t_meas", v); };
    m["t_epr"] = [](ExperimentConfig& c, std::string_view v) { c.timing.t_epr = parse_value<double>("t_epr", v); };
    m["delta_time"] = [](ExperimentConfig& c, std::string_view v) { c.timing.delta_time = parse_value<double>("delta_time", v); };
    m["e_1q"] = [](ExperimentConfig& c, std::string_view v) { c.noise.e_1q = parse_value<double>("e_1q", v); };
    m["e_2q"] = [](ExperimentConfig& c, std::string_view v) { c.noise.e_2q = parse_value<double>("e_2q", v); };
    m["e_meas"] = [](ExperimentConfig& c, std::string_view v) { c.noise.e_meas = parse_value<double>("e_meas", v); };
    m["e_epr"] = [](ExperimentConfig& c, std::string_view v) { c.noise.e_epr = parse_value<double>("e_epr", v); };
    m["t1_ns"] = [](ExperimentConfig& c, std::string_view v) { c.noise.t1_ns = parse_value<double>("t1_ns", v); };
    m["t2_ns"] = [](ExperimentConfig& c, std::string_view v) { c.noise.t2_ns = parse_value<double>("t2_ns", v); };
    m["delta_improv"] = [](ExperimentConfig& c, std::string_view v) {
      c.delta_improv.clear();
      for (const auto& s : split_list(v)) c.delta_improv.push_back(parse_value<double>("delta_improv", s));
    };
    m["repetitions"] = [](ExperimentConfig& c, std::string_view v) { c.repetitions = parse_value<int>("repetitions", v); };
    m["seed"] = [](ExperimentConfig& c, std::string_view v) { c.seed = parse_value<std::uint64_t>("seed", v); };
    m["max_cores"] = [](ExperimentConfig& c, std::string_view v) { c.max_cores = parse_value<int>("max_cores", v); };
    m["threads"] = [](ExperimentConfig& c, std::string_view v) { c.threads = parse_value<int>("threads", v); };
    m["output_dir"] = [](ExperimentConfig& c, std::string_view v) { c.output_dir = std::string(trim(v)); };
    m["format"] = [](ExperimentConfig& c, std::string_view v) { c.format = std::string(trim(v)); };
    m["fig5_widths"] = [](ExperimentConfig& c, std::string_view v) {
      c.fig5_widths.clear();
      for (const auto& s : split_list(v)) c.fig5_widths.push_back(parse_value<int>("fig5_widths", s));
    };
    m["fig5_freqs"] = [](ExperimentConfig& c, std::string_view v) {
      c.fig5_freqs.clear();
      for (const auto& s : split_list(v)) c.fig5_freqs.push_back(parse_value<double>("fig5_freqs", s));
    };
    m["fig5_deltas"] = [](ExperimentConfig& c, std::string_view v) {
      c.fig5_deltas.clear();
      for (const auto& s : split_list(v)) c.fig5_deltas.push_back(parse_value<double>("fig5_deltas", s));
    };
    return m;
  }();
  return table;
}

void apply(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  auto it = setters().find(key);
  if (it == setters().end()) throw ConfigError("unknown config key '" + std::string(key) + "'");
  it->second(cfg, value);
}

std::string json_scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) return format_number(v.get<double>());
  throw ConfigError("unsupported JSON value " + v.dump());
}

// splitmix64 finaliser.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

// ------------------------------------------------------------- circuits

CircuitSpec parse_circuit_spec(std::string_view text) {
  text = trim(text);
  CircuitSpec s;
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ConfigError("circuit spec needs '<kind>:<qubits>': '" + std::string(text) + "'");
  s.generator = std::string(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  if (s.generator == "file") {
    if (rest.empty()) throw ConfigError("file circuit spec needs a path");
    s.path = std::string(rest);
    return s;
  }
  if (s.generator != "ghz" && s.generator != "qft" && s.generator != "cuccaro" && s.generator != "qvol") {
    throw ConfigError("unknown circuit generator '" + s.generator + "'");
  }
  const auto colon2 = rest.find(':');
  s.qubits = parse_value<int>("circuit qubits", rest.substr(0, colon2));
  if (colon2 != std::string_view::npos) {
    if (s.generator != "qvol") throw ConfigError("only qvol takes a depth");
    s.depth = parse_value<int>("circuit depth", rest.substr(colon2 + 1));
  }
  if (s.qubits < 1) throw ConfigError("circuit needs at least one qubit");
  if (s.generator == "cuccaro" && (s.qubits < 4 || s.qubits % 2 != 0)) {
    throw ConfigError("cuccaro needs an even qubit count >= 4");
  }
  if (s.generator == "qvol" && s.qubits < 2) throw ConfigError("qvol needs >= 2 qubits");
  return s;
}

std::string to_string(const CircuitSpec& spec) {
  if (spec.generator == "file") return "file:" + spec.path;
  std::string s = spec.generator + ":" + std::to_string(spec.qubits);
  if (spec.depth > 0) s += ":" + std::to_string(spec.depth);
  return s;
}

Circuit make_circuit(const CircuitSpec& spec, std::uint64_t seed) {
  if (spec.generator == "ghz") return gen_ghz(spec.qubits);
  if (spec.generator == "qft") return gen_qft(spec.qubits);
  if (spec.generator == "cuccaro") return gen_cuccaro((spec.qubits - 2) / 2);
  if (spec.generator == "qvol") {
    return gen_qvol(spec.qubits, spec.depth > 0 ? spec.depth : spec.qubits, seed);
  }
  if (spec.generator == "file") {
    std::ifstream in(spec.path);
    if (!in) throw ConfigError("cannot read circuit file '" + spec.path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const bool qasm = std::filesystem::path(spec.path).extension() == ".qasm";
    Circuit c = parse_circuit(buf.str(), qasm ? CircuitFormat::QasmSubset : CircuitFormat::Native);
    if (c.name.empty()) c.name = std::filesystem::path(spec.path).stem().string();
    return c;
  }
  throw ConfigError("unknown circuit generator '" + spec.generator + "'");
}

// --------------------------------------------------------------- config

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  if (trim(text).starts_with('{')) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("config JSON: ") + e.what());
    }
    for (const auto& [key, value] : j.items()) {
      std::string flat;
      if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i) flat += ",";
          flat += json_scalar_text(value[i]);
        }
      } else {
        flat = json_scalar_text(value);
      }
      apply(cfg, key, flat);
    }
  } else {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      if (nl == std::string_view::npos) nl = text.size();
      std::string_view line = text.substr(pos, nl - pos);
      pos = nl + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
      }
      try {
        apply(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
      } catch (const ConfigError& e) {
        throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  validate(cfg);
  return cfg;
}

std::string render_config(const ExperimentConfig& c) {
  std::ostringstream o;
  o << "circuits = " << join<CircuitSpec>(c.circuits, [](const CircuitSpec& s) { return to_string(s); }) << '\n';
  o << "qubits_per_core = " << c.qubits_per_core << '\n';
  o << "topologies = "
    << join<TopologyKind>(c.topologies, [](const TopologyKind& k) { return std::string(to_string(k)); }) << '\n';
  o << "links_min = " << c.links_min << '\n';
  o << "links_max = " << c.links_max << '\n';
  o << "link_width = " << c.timing.link_width << '\n';
  o << "clock_freq_hz = " << num(c.timing.clock_freq_hz) << '\n';
  o << "t_1q = " << num(c.timing.t_1q) << '\n';
  o << "t_2q = " << num(c.timing.t_2q) << '\n';
  o << "t_meas = " << num(c.timing.t_meas) << '\n';
  o << "t_epr = " << num(c.timing.t_epr) << '\n';
  o << "delta_time = " << num(c.timing.delta_time) << '\n';
  o << "e_1q = " << num(c.noise.e_1q) << '\n';
  o << "e_2q = " << num(c.noise.e_2q) << '\n';
  o << "e_meas = " << num(c.noise.e_meas) << '\n';
  o << "e_epr = " << num(c.noise.e_epr) << '\n';
  o << "t1_ns = " << num(c.noise.t1_ns) << '\n';
  o << "t2_ns = " << num(c.noise.t2_ns) << '\n';
  o << "delta_improv = " << join<double>(c.delta_improv, num) << '\n';
  o << "repetitions = " << c.repetitions << '\n';
  o << "seed = " << c.seed << '\n';
  o << "max_cores = " << c.max_cores << '\n';
  o << "threads = " << c.threads << '\n';
  o << "output_dir = " << c.output_dir << '\n';
  o << "format = " << c.format << '\n';
  o << "fig5_widths = " << join<int>(c.fig5_widths, [](const int& w) { return std::to_string(w); }) << '\n';
  o << "fig5_freqs = " << join<double>(c.fig5_freqs, num) << '\n';
  o << "fig5_deltas = " << join<double>(c.fig5_deltas, num) << '\n';
  return o.str();
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate(const ExperimentConfig& c) {
  auto fail = [](const std::string& m) { throw ConfigError(m); };
  if (c.circuits.empty()) fail("no circuits configured");
  if (c.topologies.empty()) fail("no topologies configured");
  if (c.qubits_per_core < 1) fail("qubits_per_core must be >= 1");
  if (c.links_min < 1 || c.links_max < c.links_min) fail("need 1 <= links_min <= links_max");
  if (c.timing.link_width < 1) fail("link_width must be >= 1");
  if (!(c.timing.clock_freq_hz > 0)) fail("clock_freq_hz must be > 0");
  for (double t : {c.timing.t_1q, c.timing.t_2q, c.timing.t_meas, c.timing.t_epr}) {
    if (!(t > 0)) fail("operation durations must be > 0");
  }
  if (!(c.timing.delta_time >= 1)) fail("delta_time must be >= 1");
  for (double e : {c.noise.e_1q, c.noise.e_2q, c.noise.e_meas, c.noise.e_epr}) {
    if (!(e >= 0 && e < 1)) fail("error probabilities must lie in [0, 1)");
  }
  if (!(c.noise.t1_ns > 0 && c.noise.t2_ns > 0)) fail("T1 and T2 must be > 0");
  if (c.delta_improv.empty()) fail("delta_improv list is empty");
  for (double d : c.delta_improv) {
    if (!(d >= 1)) fail("delta_improv values must be >= 1");
  }
  if (c.repetitions < 1) fail("repetitions must be >= 1");
  if (c.max_cores < 2) fail("max_cores must be >= 2");
  if (c.threads < 0) fail("threads must be >= 0");
  if (c.format != "csv" && c.format != "json") fail("format must be csv or json");
}

std::uint64_t repetition_seed(std::uint64_t seed, int rep) {
  return mix(seed ^ mix(static_cast<std::uint64_t>(rep) + 1));
}

// ----------------------------------------------------------------- runs

std::vector<RunRecord> run_cell(const ExperimentConfig& cfg, const CircuitSpec& spec,
                                TopologyKind kind, int links, int rep) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t seed = repetition_seed(cfg.seed, rep);
  const Circuit circuit = make_circuit(spec, seed);

  RunRecord base;
  base.benchmark = to_string(spec);
  base.circuit_name = circuit.name;
  base.topology = kind;
  base.links = links;
  base.repetition = rep;
  base.seed = seed;

  std::vector<RunRecord> out;
  auto infeasible = [&](const std::string& why) {
    for (double d : cfg.delta_improv) {
      RunRecord r = base;
      r.delta_improv = d;
      r.note = why;
      r.fidelity = FidelityReport{0, 0, 0, 0, {}};
      out.push_back(r);
    }
    return out;
  };

  const auto cores = min_cores(kind, cfg.qubits_per_core, links, circuit.num_qubits, cfg.max_cores);
  if (!cores) return infeasible("no core count up to " + std::to_string(cfg.max_cores) + " fits");
  base.num_cores = *cores;

  const CoreGraph g = build_topology(kind, *cores, links, cfg.qubits_per_core);
  const SlicedCircuit sc = slice_circuit(circuit);
  base.num_slices = static_cast<int>(sc.num_slices());
  MappingResult m;
  try {
    m = map_circuit(sc, g, MapperOptions{seed});
  } catch (const MappingError& e) {
    return infeasible(e.what());
  }
  const OperationCounts gate_counts = circuit_counts(circuit);
  const double map_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  for (double d : cfg.delta_improv) {
    const auto t1 = std::chrono::steady_clock::now();
    auto [tp, np] = apply_improvement(cfg.timing, cfg.noise, d);
    const auto times = slice_durations(sc, tp);
    const ScheduleResult sr = schedule(m.transfers, g, tp, times);
    RunRecord r = base;
    r.delta_improv = d;
    r.feasible = true;
    r.total_tlp = sr.total_tlp;
    r.sequential_tlp = sr.sequential_tlp;
    r.makespan_ns = sr.makespan_ns;
    r.fidelity = estimate(sr, gate_counts + teleport_counts(sr.total_tlp), np);
    r.wall_ms = map_ms +
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t1).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  struct Cell {
    const CircuitSpec* spec;
    TopologyKind kind;
    int links;
    int rep;
  };
  std::vector<Cell> cells;
  for (const auto& spec : cfg.circuits) {
    for (auto kind : cfg.topologies) {
      for (int l = cfg.links_min; l <= cfg.links_max; ++l) {
        for (int rep = 0; rep < cfg.repetitions; ++rep) cells.push_back({&spec, kind, l, rep});
      }
    }
  }

  std::vector<std::vector<RunRecord>> results(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        results[i] = run_cell(cfg, *cells[i].spec, cells[i].kind, cells[i].links, cells[i].rep);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t nthreads =
      std::min<std::size_t>(cells.size(), cfg.threads > 0 ? static_cast<std::size_t>(cfg.threads) : hw);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<RunRecord> out;
  for (auto& r : results) {
    for (auto& rec : r) out.push_back(std::move(rec));
  }
  return out;
}

// -------------------------------------------------------------- dataset

Stats summarize(const std::vector<double>& values) {
  Stats s;
  if (values.empty()) return s;
  for (double v : values) s.mean += v;
  s.mean /= static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

namespace {

// A flat table that renders to CSV or to a JSON array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void write(const std::filesystem::path& base, const std::string& format) const {
    const auto path = base.string() + (format == "json" ? ".json" : ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
        arr.push_back(obj);
      }
      out << arr.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out << ',';
        const json& v = r[i];
        if (v.is_string()) {
          out << v.get<std::string>();
        } else if (v.is_boolean()) {
          out << (v.get<bool>() ? 1 : 0);
        } else if (v.is_number_float()) {
          out << format_number(v.get<double>());
        } else {
          out << v.dump();
        }
      }
      out << '\n';
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
  }
};

struct GroupKey {
  std::string benchmark;
  int topology;
  int links;
  double delta;
  auto operator<=>(const GroupKey&) const = default;
};

}  // namespace

void emit_dataset(const std::vector<RunRecord>& records, const ExperimentConfig& cfg,
                  const std::filesystem::path& dir, const std::string& format) {
  if (format != "csv" && format != "json") throw ConfigError("format must be csv or json");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create '" + dir.string() + "': " + ec.message());

  // Groups keep first-appearance order so tables follow the sweep order.
  std::vector<GroupKey> order;
  std::map<GroupKey, std::vector<const RunRecord*>> groups;
  for (const auto& r : records) {
    GroupKey k{r.benchmark, static_cast<int>(r.topology), r.links, r.delta_improv};
    auto [it, fresh] = groups.try_emplace(k);
    if (fresh) order.push_back(k);
    it->second.push_back(&r);
  }
  auto collect = [](const std::vector<const RunRecord*>& rs, auto field) {
    std::vector<double> v;
    for (const auto* r : rs) {
      if (r->feasible) v.push_back(static_cast<double>(field(*r)));
    }
    return v;
  };
  auto topo = [](int k) { return std::string(to_string(static_cast<TopologyKind>(k))); };

  // Transfer counts do not depend on delta_improv: report the first delta.
  Table fig7{{"benchmark", "topology", "links", "feasible", "num_cores", "total_tlp_mean",
              "total_tlp_std", "sequential_tlp_mean", "sequential_tlp_std"},
             {}};
  // Best mean fidelity per (benchmark, delta) for normalisation.
  std::map<std::pair<std::string, double>, double> best;
  for (const auto& k : order) {
    const auto f = summarize(collect(groups[k], [](const RunRecord& r) { return r.fidelity.overall; }));
    const bool feasible = groups[k].front()->feasible;
    if (feasible) {
      auto& b = best[{k.benchmark, k.delta}];
      b = std::max(b, f.mean);
    }
  }

  Table fig8{{"benchmark", "topology", "links", "delta_improv", "feasible", "num_cores",
              "fidelity_mean", "fidelity_std", "relative_fidelity_mean", "relative_fidelity_std"},
             {}};
  Table fig9{{"benchmark", "topology", "links", "delta_improv", "feasible", "coherence_mean",
              "operational_mean", "overall_mean", "makespan_ns_mean"},
             {}};
  for (const auto& k : order) {
    const auto& rs = groups[k];
    const RunRecord& head = *rs.front();
    const bool feasible = head.feasible;
    if (k.delta == cfg.delta_improv.front()) {
      const auto total = summarize(collect(rs, [](const RunRecord& r) { return r.total_tlp; }));
      const auto seq = summarize(collect(rs, [](const RunRecord& r) { return r.sequential_tlp; }));
      fig7.rows.push_back({k.benchmark, topo(k.topology), k.links, feasible, head.num_cores,
                           total.mean, total.stddev, seq.mean, seq.stddev});
    }
    const auto fid = summarize(collect(rs, [](const RunRecord& r) { return r.fidelity.overall; }));
    const double norm = feasible ? best[{k.benchmark, k.delta}] : 0.0;
    const double rel_mean = norm > 0 ? fid.mean / norm : 0.0;
    const double rel_std = norm > 0 ? fid.stddev / norm : 0.0;
    fig8.rows.push_back({k.benchmark, topo(k.topology), k.links, k.delta, feasible, head.num_cores,
                         fid.mean, fid.stddev, rel_mean, rel_std});
    const auto coh = summarize(collect(rs, [](const RunRecord& r) { return r.fidelity.coherence; }));
    const auto op = summarize(collect(rs, [](const RunRecord& r) { return r.fidelity.operational; }));
    const auto span = summarize(collect(rs, [](const RunRecord& r) { return r.makespan_ns; }));
    fig9.rows.push_back({k.benchmark, topo(k.topology), k.links, k.delta, feasible, coh.mean, op.mean,
                         fid.mean, span.mean});
  }
  fig7.write(dir / "fig7", format);
  fig8.write(dir / "fig8", format);
  fig9.write(dir / "fig9", format);

  const auto rows5 = sweep_bottleneck(cfg.fig5_widths, cfg.fig5_freqs, cfg.fig5_deltas, cfg.timing);
  Table fig5{{"width", "freq", "delta_time", "qubits_log2"}, {}};
  for (const auto& r : rows5) {
    fig5.rows.push_back({r.link_width, r.clock_freq_hz, r.delta_time,
                         r.qubits_log2 ? json(*r.qubits_log2) : json("none")});
  }
  fig5.write(dir / "fig5", format);

  {
    std::ofstream out(dir / "runs.jsonl", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write runs.jsonl");
    for (const auto& r : records) {
      out << json{{"benchmark", r.benchmark},
                  {"circuit", r.circuit_name},
                  {"topology", std::string(to_string(r.topology))},
                  {"links", r.links},
                  {"delta_improv", r.delta_improv},
                  {"repetition", r.repetition},
                  {"seed", r.seed},
                  {"feasible", r.feasible},
                  {"note", r.note},
                  {"num_cores", r.num_cores},
                  {"num_slices", r.num_slices},
                  {"total_tlp", r.total_tlp},
                  {"sequential_tlp", r.sequential_tlp},
                  {"makespan_ns", r.makespan_ns},
                  {"fidelity", to_json(r.fidelity)},
                  {"wall_ms", r.wall_ms}}
                 .dump()
          << '\n';
    }
  }
  {
    std::ofstream out(dir / "metadata.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write metadata.json");
    json meta{{"config", render_config(cfg)},
              {"stddev", "sample (n-1)"},
              {"relative_fidelity", "mean overall fidelity / best feasible mean for the same benchmark and delta_improv"},
              {"delta_improv_note", "delta_improv is an arbitrary large factor chosen so fidelities stay comparable"}};
    out << meta.dump(2) << '\n';
  }
}

}  // namespace mqs
