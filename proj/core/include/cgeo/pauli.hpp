#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgeo {

/// A generalized Pauli string on n qubits in symplectic (x, z) mask form.
///
/// Bit j of x_mask is set iff qubit j carries sigma_x or sigma_y; bit j of
/// z_mask is set iff qubit j carries sigma_z or sigma_y.  The text form uses
/// the letters I/X/Y/Z with qubit 0 at string index 0.
struct PauliString {
  int n_qubits = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;

  /// Hard cap on n_qubits for mask-level operations (dense operations are
  /// capped lower, see linalg).
  static constexpr int kMaxQubits = 16;

  static PauliString identity(int n_qubits);

  /// Parses "IXZY"-style text; throws std::invalid_argument on bad letters.
  static PauliString parse(std::string_view text);

  std::string str() const;

  /// Letter at qubit q: 0 = I, 1 = X, 2 = Y, 3 = Z.
  int letter(int q) const;
  PauliString with_letter(int q, int letter) const;

  int weight() const;
  bool is_identity() const { return x_mask == 0 && z_mask == 0; }

  bool operator==(const PauliString&) const = default;
  auto operator<=>(const PauliString&) const = default;
};

/// A Pauli string with an exact fourth-root-of-unity prefactor i^phase_exp.
struct PhasedPauli {
  int phase_exp = 0;  // 0..3, prefactor is i^phase_exp
  PauliString pauli;

  std::complex<double> phase() const;
};

int weight(const PauliString& p);

/// Exact product: dense(a) * dense(b) == phase * dense(result).
PhasedPauli multiply(const PauliString& a, const PauliString& b);

/// True iff the symplectic form popcount(a.x & b.z) + popcount(a.z & b.x)
/// is even.
bool commutes(const PauliString& a, const PauliString& b);

/// [dense(a), dense(b)] == coefficient * dense(pauli); nullopt when the two
/// strings commute.  The coefficient is always +-2i.
struct PauliCommutator {
  std::complex<double> coefficient;
  PauliString pauli;
};
std::optional<PauliCommutator> commutator(const PauliString& a,
                                          const PauliString& b);

/// Number of exactly k-local strings, C(n, k) * 3^k.
std::uint64_t pauli_count_weight(int n_qubits, int k);

/// All Pauli strings on n_qubits, optionally restricted to weight <= cap.
/// Enumeration is limited to n_qubits <= kEnumerationCap (= 10).
inline constexpr int kEnumerationCap = 10;
std::vector<PauliString> enumerate_paulis(
    int n_qubits, std::optional<int> max_weight = std::nullopt);

}  // namespace cgeo
