#include "cgeo/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cgeo {

namespace {

double real_number(const Json& j, const char* what) {
  if (!j.is_number()) {
    throw std::invalid_argument(std::string(what) +
                                " must be a plain real number");
  }
  return j.get<double>();
}

Json complex_to_json(const std::complex<double>& z) {
  return Json::array({z.real(), z.imag()});
}

std::complex<double> complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex values serialize as [re, im]");
  }
  return {real_number(j[0], "re"), real_number(j[1], "im")};
}

int n_qubits_of(const Json& j) {
  if (!j.contains("n_qubits") || !j["n_qubits"].is_number_integer()) {
    throw std::invalid_argument("missing integer field n_qubits");
  }
  return j["n_qubits"].get<int>();
}

}  // namespace

Json to_json(const Hamiltonian& h) {
  Json terms = Json::array();
  for (const auto& [p, c] : h.terms) {
    terms.push_back(Json{{"pauli", p.str()}, {"coeff", c}});
  }
  return terms;
}

Hamiltonian hamiltonian_from_json(const Json& j, int n_qubits) {
  if (!j.is_array()) {
    throw std::invalid_argument("terms must be an array");
  }
  Hamiltonian h(n_qubits);
  for (const Json& term : j) {
    const PauliString p = PauliString::parse(term.at("pauli").get<std::string>());
    if (p.n_qubits != n_qubits) {
      throw std::invalid_argument("term length does not match n_qubits");
    }
    h.add(p, real_number(term.at("coeff"), "coeff"));
  }
  return h;
}

Json to_json(const Path& p) {
  Json segments = Json::array();
  for (const PathSegment& seg : p.segments) {
    segments.push_back(
        Json{{"duration", seg.duration}, {"terms", to_json(seg.h)}});
  }
  return Json{{"n_qubits", p.n_qubits},
              {"segments", segments},
              {"global_phase", p.global_phase}};
}

Path path_from_json(const Json& j) {
  Path p(n_qubits_of(j));
  if (j.contains("global_phase")) {
    p.global_phase = real_number(j["global_phase"], "global_phase");
  }
  for (const Json& seg : j.at("segments")) {
    const double duration = real_number(seg.at("duration"), "duration");
    if (!(duration > 0.0)) {
      throw std::invalid_argument("segment durations must be positive");
    }
    p.segments.push_back(
        PathSegment{duration, hamiltonian_from_json(seg.at("terms"), p.n_qubits)});
  }
  return p;
}

Json to_json(const PenaltySchedule& s) {
  Json j{{"n_qubits", s.n_qubits()}};
  switch (s.kind()) {
    case PenaltySchedule::Kind::kCliff:
      j["kind"] = "cliff";
      j["penalty"] = s.param_penalty();
      break;
    case PenaltySchedule::Kind::kBinomial:
      j["kind"] = "binomial";
      j["alpha"] = s.param_alpha();
      break;
    case PenaltySchedule::Kind::kExponential:
      j["kind"] = "exponential";
      j["x"] = s.param_x();
      break;
    case PenaltySchedule::Kind::kDelayedCliff:
      j["kind"] = "delayed_cliff";
      j["k0"] = s.param_k0();
      j["penalty"] = s.param_penalty();
      break;
    case PenaltySchedule::Kind::kTable: {
      j["kind"] = "table";
      Json table = Json::object();
      for (int k = 0; k <= s.n_qubits(); ++k) {
        table[std::to_string(k)] = s.weight_table()[static_cast<std::size_t>(k)];
      }
      j["table"] = table;
      break;
    }
    case PenaltySchedule::Kind::kExplicit: {
      j["kind"] = "explicit";
      Json penalties = Json::object();
      for (const auto& [p, v] : s.explicit_penalties()) {
        penalties[p.str()] = v;
      }
      j["penalties"] = penalties;
      break;
    }
  }
  return j;
}

PenaltySchedule schedule_from_json(const Json& j) {
  const int n = n_qubits_of(j);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "cliff") {
    return PenaltySchedule::cliff(n, real_number(j.at("penalty"), "penalty"));
  }
  if (kind == "binomial") {
    return PenaltySchedule::binomial(n, real_number(j.at("alpha"), "alpha"));
  }
  if (kind == "exponential") {
    return PenaltySchedule::exponential(n, real_number(j.at("x"), "x"));
  }
  if (kind == "delayed_cliff") {
    return PenaltySchedule::delayed_cliff(
        n, j.at("k0").get<int>(), real_number(j.at("penalty"), "penalty"));
  }
  if (kind == "table") {
    std::vector<double> by_weight(static_cast<std::size_t>(n) + 1, 0.0);
    const Json& table = j.at("table");
    for (int k = 0; k <= n; ++k) {
      by_weight[static_cast<std::size_t>(k)] =
          real_number(table.at(std::to_string(k)), "table entry");
    }
    return PenaltySchedule::table(n, std::move(by_weight));
  }
  if (kind == "explicit") {
    std::map<PauliString, double> penalties;
    for (const auto& [key, value] : j.at("penalties").items()) {
      penalties[PauliString::parse(key)] = real_number(value, "penalty");
    }
    return PenaltySchedule::explicit_map(n, std::move(penalties));
  }
  throw std::invalid_argument("unknown schedule kind: " + kind);
}

Json to_json(const Circuit& c) {
  Json gates = Json::array();
  for (const TwoLocalGate& g : c.gates) {
    Json block = Json::array();
    for (int row = 0; row < 4; ++row) {
      for (int col = 0; col < 4; ++col) {
        block.push_back(complex_to_json(g.block(row, col)));
      }
    }
    gates.push_back(Json{{"qubits", Json::array({g.qubit_a, g.qubit_b})},
                         {"block", block}});
  }
  return Json{{"n_qubits", c.n_qubits},
              {"global_phase", complex_to_json(c.global_phase)},
              {"gates", gates}};
}

Circuit circuit_from_json(const Json& j) {
  Circuit c(n_qubits_of(j));
  if (j.contains("global_phase")) {
    c.global_phase = complex_from_json(j["global_phase"]);
  }
  for (const Json& gate : j.at("gates")) {
    TwoLocalGate g;
    g.qubit_a = gate.at("qubits").at(0).get<int>();
    g.qubit_b = gate.at("qubits").at(1).get<int>();
    const Json& block = gate.at("block");
    if (!block.is_array() || block.size() != 16) {
      throw std::invalid_argument("gate block needs 16 row-major entries");
    }
    for (int i = 0; i < 16; ++i) {
      g.block(i / 4, i % 4) = complex_from_json(block[static_cast<std::size_t>(i)]);
    }
    c.gates.push_back(g);
  }
  return c;
}

Json to_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    rows.push_back(row);
  }
  return rows;
}

DenseMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("matrix must be a non-empty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  DenseMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

Json to_json(const CompileReport& r) {
  return Json{{"gate_count", r.gate_count},
              {"segment_count", r.segment_count},
              {"delta", r.delta},
              {"threshold", r.threshold},
              {"n_cheap", r.n_cheap},
              {"threshold_variant", r.threshold_variant},
              {"complexity_length", r.complexity_length},
              {"killing_length", r.killing_length},
              {"measured_error_killing", r.measured_error_killing},
              {"measured_error_fbar", r.measured_error_fbar},
              {"measured_error_op", r.measured_error_op},
              {"predicted_error_bound", r.predicted_error_bound},
              {"predicted_gate_bound", r.predicted_gate_bound}};
}

Json to_json(const GeodesicStats& st) {
  return Json{{"gamma_initial", st.gamma_initial},
              {"gamma_final", st.gamma_final},
              {"max_rel_gamma_drift", st.max_rel_gamma_drift},
              {"max_fbar_drift", st.max_fbar_drift},
              {"max_h_drift", st.max_h_drift},
              {"active_directions", st.active_directions}};
}

std::string bounds_csv_header() {
  return "schedule,N,L,error,kind,threshold,n_cheap,bound,variant";
}

namespace {

std::string num(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

std::string bounds_csv_row(const std::string& schedule_name,
                           const BoundQuery& q, const std::string& error_kind,
                           const GateBound& b) {
  std::ostringstream out;
  out << schedule_name << ',' << q.schedule.n_qubits() << ',' << num(q.length)
      << ',' << num(q.error) << ',' << error_kind << ',' << num(b.threshold)
      << ',' << b.n_cheap << ',' << num(b.bound) << ',' << b.variant;
  return out.str();
}

Json bounds_json_row(const std::string& schedule_name, const BoundQuery& q,
                     const std::string& error_kind, const GateBound& b) {
  return Json{{"schedule", schedule_name},
              {"N", q.schedule.n_qubits()},
              {"L", q.length},
              {"error", q.error},
              {"kind", error_kind},
              {"threshold", b.threshold},
              {"n_cheap", b.n_cheap},
              {"bound", b.bound},
              {"variant", b.variant}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  Json j;
  in >> j;
  return j;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + tmp + " for writing");
    }
    out << content;
    if (!out.good()) {
      throw std::runtime_error("short write to " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace cgeo
