#include "cgeo/path.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace cgeo {

namespace {

void check_match(int path_qubits, const PenaltySchedule& s) {
  if (path_qubits != s.n_qubits()) {
    throw std::invalid_argument("path/schedule qubit-count mismatch");
  }
}

double gamma_of(const Hamiltonian& h, const PenaltySchedule& s) {
  double sum = 0.0;
  for (const auto& [p, c] : h.terms) sum += s.penalty(p) * c * c;
  return std::sqrt(sum);
}

}  // namespace

void Hamiltonian::add(const PauliString& p, double h) {
  if (p.n_qubits != n_qubits) {
    throw std::invalid_argument("term has wrong qubit count");
  }
  if (!std::isfinite(h)) {
    throw std::invalid_argument("coefficient must be finite");
  }
  const auto [it, inserted] = terms.try_emplace(p, h);
  if (!inserted) it->second += h;
  if (it->second == 0.0) terms.erase(it);
}

double Hamiltonian::coeff(const PauliString& p) const {
  const auto it = terms.find(p);
  return it == terms.end() ? 0.0 : it->second;
}

double Hamiltonian::norm_fbar() const {
  double sum = 0.0;
  for (const auto& [p, c] : terms) sum += c * c;
  return std::sqrt(sum);
}

Hamiltonian& Hamiltonian::operator*=(double scale) {
  if (scale == 0.0) {
    terms.clear();
    return *this;
  }
  for (auto& [p, c] : terms) c *= scale;
  return *this;
}

Hamiltonian& Hamiltonian::operator+=(const Hamiltonian& other) {
  if (other.n_qubits != n_qubits) {
    throw std::invalid_argument("Hamiltonian qubit-count mismatch");
  }
  for (const auto& [p, c] : other.terms) add(p, c);
  return *this;
}

DenseMatrix dense(const Hamiltonian& h) {
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits;
  DenseMatrix m = DenseMatrix::Zero(dim, dim);
  for (const auto& [p, c] : h.terms) m += c * dense(p);
  return m;
}

double Path::total_duration() const {
  double sum = 0.0;
  for (const PathSegment& seg : segments) sum += seg.duration;
  return sum;
}

Path normalize(const Path& p) {
  Path out(p.n_qubits);
  out.global_phase = p.global_phase;
  const PauliString id = PauliString::identity(p.n_qubits);
  for (const PathSegment& seg : p.segments) {
    if (seg.duration <= 0.0) {
      throw std::invalid_argument("segment durations must be positive");
    }
    if (seg.h.empty()) {
      throw std::invalid_argument("cannot normalize a zero-Hamiltonian segment");
    }
    Hamiltonian h = seg.h;
    const auto it = h.terms.find(id);
    if (it != h.terms.end()) {
      out.global_phase += it->second * seg.duration;
      h.terms.erase(it);
    }
    const double g = h.norm_fbar();
    if (g == 0.0) continue;  // pure phase segment
    h *= 1.0 / g;
    out.segments.push_back(PathSegment{seg.duration * g, std::move(h)});
  }
  return out;
}

double killing_length(const Path& p) {
  double sum = 0.0;
  for (const PathSegment& seg : p.segments) {
    sum += seg.duration * seg.h.norm_fbar();
  }
  return sum;
}

double complexity_length(const Path& p, const PenaltySchedule& s) {
  check_match(p.n_qubits, s);
  double sum = 0.0;
  for (const PathSegment& seg : p.segments) {
    sum += seg.duration * gamma_of(seg.h, s);
  }
  return sum;
}

Difficulty difficulty(const Hamiltonian& h, const PenaltySchedule& s) {
  check_match(h.n_qubits, s);
  if (std::abs(h.norm_fbar() - 1.0) > 1e-9) {
    throw std::invalid_argument("difficulty needs a unit-F-bar Hamiltonian");
  }
  return Difficulty{gamma_of(h, s)};
}

DenseMatrix evolve(const Path& p) {
  const Eigen::Index dim = Eigen::Index{1} << p.n_qubits;
  DenseMatrix u = DenseMatrix::Identity(dim, dim);
  for (const PathSegment& seg : p.segments) {
    if (seg.duration <= 0.0) {
      throw std::invalid_argument("segment durations must be positive");
    }
    u = (expm_hermitian(dense(seg.h), seg.duration) * u).eval();
  }
  return std::polar(1.0, p.global_phase) * u;
}

namespace {

// Precomputed right side of the geodesic equation over a fixed direction set:
// dh[k]/dt = sum over triples of h[j] * coef * h[jk], with
// coef = r * penalty(sigma_{j xor k}) / penalty(sigma_k) and
// i [sigma_j, sigma_k] = r sigma_{j xor k}, r = +-2 exact.
struct GeodesicSystem {
  struct Triple {
    std::uint32_t k, j, jk;
    double coef;
  };
  std::vector<PauliString> basis;
  std::vector<Triple> triples;

  void rhs(const std::vector<double>& h, std::vector<double>& out) const {
    std::fill(out.begin(), out.end(), 0.0);
    for (const Triple& t : triples) {
      out[t.k] += h[t.j] * t.coef * h[t.jk];
    }
  }
};

constexpr std::size_t kGeodesicDirectionCap = 4096;

GeodesicSystem build_system(const Hamiltonian& h0, const PenaltySchedule& s) {
  GeodesicSystem sys;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  const auto key = [](const PauliString& p) {
    return (p.x_mask << 16) | p.z_mask;
  };
  const auto insert = [&](const PauliString& p) {
    if (index.emplace(key(p), sys.basis.size()).second) sys.basis.push_back(p);
  };
  for (const auto& [p, c] : h0.terms) insert(p);
  // Commutator closure: commutators of set members stay in the set.
  for (std::size_t a = 0; a < sys.basis.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (!commutes(sys.basis[a], sys.basis[b])) {
        insert(multiply(sys.basis[a], sys.basis[b]).pauli);
        if (sys.basis.size() > kGeodesicDirectionCap) {
          throw std::runtime_error(
              "geodesic direction set exceeds cap " +
              std::to_string(kGeodesicDirectionCap));
        }
      }
    }
  }
  for (std::uint32_t k = 0; k < sys.basis.size(); ++k) {
    const double pen_k = s.penalty(sys.basis[k]);
    for (std::uint32_t j = 0; j < sys.basis.size(); ++j) {
      const auto c = commutator(sys.basis[j], sys.basis[k]);
      if (!c) continue;
      const PauliString jk = c->pauli;
      const auto it = index.find(key(jk));
      if (it == index.end()) continue;  // closure guarantees this never fires
      const double r = -c->coefficient.imag();  // i [s_j, s_k] = r s_jk
      sys.triples.push_back(GeodesicSystem::Triple{
          k, j, it->second, r * s.penalty(jk) / pen_k});
    }
  }
  return sys;
}

}  // namespace

Path integrate_geodesic(const Hamiltonian& h0, const PenaltySchedule& s,
                        double total_time, double dt, GeodesicStats* stats) {
  check_match(h0.n_qubits, s);
  if (std::abs(h0.norm_fbar() - 1.0) > 1e-9) {
    throw std::invalid_argument("geodesic needs a unit-F-bar initial Hamiltonian");
  }
  if (!(dt > 0.0) || !(total_time > 0.0) || dt > total_time) {
    throw std::invalid_argument("need 0 < dt <= total_time");
  }

  const GeodesicSystem sys = build_system(h0, s);
  const std::size_t n = sys.basis.size();
  std::vector<double> h(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) h[i] = h0.coeff(sys.basis[i]);

  const auto snapshot = [&](const std::vector<double>& v) {
    Hamiltonian out(h0.n_qubits);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] != 0.0) out.add(sys.basis[i], v[i]);
    }
    return out;
  };
  const auto gamma = [&](const std::vector<double>& v) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += s.penalty(sys.basis[i]) * v[i] * v[i];
    }
    return std::sqrt(sum);
  };

  GeodesicStats st;
  st.active_directions = n;
  st.gamma_initial = gamma(h);
  const double fbar0 = h0.norm_fbar();
  const std::vector<double> h_init = h;

  Path out(h0.n_qubits);
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  double t = 0.0;
  while (t < total_time - 1e-15 * total_time) {
    const double step = std::min(dt, total_time - t);
    out.segments.push_back(PathSegment{step, snapshot(h)});

    sys.rhs(h, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = h[i] + 0.5 * step * k1[i];
    sys.rhs(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = h[i] + 0.5 * step * k2[i];
    sys.rhs(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = h[i] + step * k3[i];
    sys.rhs(tmp, k4);
    double fbar_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      h[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(h[i])) {
        throw std::runtime_error("geodesic integration produced non-finite values");
      }
      fbar_sq += h[i] * h[i];
    }
    t += step;

    const double g = gamma(h);
    st.max_rel_gamma_drift = std::max(
        st.max_rel_gamma_drift,
        std::abs(g - st.gamma_initial) / st.gamma_initial);
    st.max_fbar_drift =
        std::max(st.max_fbar_drift, std::abs(std::sqrt(fbar_sq) - fbar0));
    for (std::size_t i = 0; i < n; ++i) {
      st.max_h_drift = std::max(st.max_h_drift, std::abs(h[i] - h_init[i]));
    }
    st.gamma_final = g;
  }

  if (stats) *stats = st;
  return out;
}

}  // namespace cgeo
