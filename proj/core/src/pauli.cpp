#include "cgeo/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace cgeo {

namespace {

void check_size(int n_qubits) {
  if (n_qubits < 1 || n_qubits > PauliString::kMaxQubits) {
    throw std::invalid_argument("n_qubits out of range [1, " +
                                std::to_string(PauliString::kMaxQubits) + "]");
  }
}

void check_same_size(const PauliString& a, const PauliString& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("Pauli strings act on different qubit counts");
  }
}

// i-exponent of the phase of the single-qubit product a*b, letters 0..3.
// E.g. X*Y = iZ -> 1, Y*X = -iZ -> 3.
constexpr int kPhaseTable[4][4] = {
    // I  X  Y  Z
    {0, 0, 0, 0},  // I*
    {0, 0, 1, 3},  // X*
    {0, 3, 0, 1},  // Y*
    {0, 1, 3, 0},  // Z*
};

}  // namespace

PauliString PauliString::identity(int n_qubits) {
  check_size(n_qubits);
  return PauliString{n_qubits, 0, 0};
}

PauliString PauliString::parse(std::string_view text) {
  check_size(static_cast<int>(text.size()));
  PauliString p{static_cast<int>(text.size()), 0, 0};
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        p.x_mask |= std::uint64_t{1} << q;
        break;
      case 'Y':
        p.x_mask |= std::uint64_t{1} << q;
        p.z_mask |= std::uint64_t{1} << q;
        break;
      case 'Z':
        p.z_mask |= std::uint64_t{1} << q;
        break;
      default:
        throw std::invalid_argument("Pauli letter must be one of I, X, Y, Z");
    }
  }
  return p;
}

std::string PauliString::str() const {
  static constexpr char kLetters[] = "IXYZ";
  std::string out(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) out[q] = kLetters[letter(q)];
  return out;
}

int PauliString::letter(int q) const {
  const int x = static_cast<int>((x_mask >> q) & 1);
  const int z = static_cast<int>((z_mask >> q) & 1);
  return x ? (z ? 2 : 1) : (z ? 3 : 0);
}

PauliString PauliString::with_letter(int q, int letter) const {
  PauliString out = *this;
  const std::uint64_t bit = std::uint64_t{1} << q;
  out.x_mask &= ~bit;
  out.z_mask &= ~bit;
  if (letter == 1 || letter == 2) out.x_mask |= bit;
  if (letter == 2 || letter == 3) out.z_mask |= bit;
  return out;
}

int PauliString::weight() const {
  return std::popcount(x_mask | z_mask);
}

std::complex<double> PhasedPauli::phase() const {
  static constexpr std::complex<double> kRoots[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kRoots[phase_exp & 3];
}

int weight(const PauliString& p) { return p.weight(); }

PhasedPauli multiply(const PauliString& a, const PauliString& b) {
  check_same_size(a, b);
  int exp = 0;
  std::uint64_t support = (a.x_mask | a.z_mask) & (b.x_mask | b.z_mask);
  while (support) {
    const int q = std::countr_zero(support);
    support &= support - 1;
    exp += kPhaseTable[a.letter(q)][b.letter(q)];
  }
  return PhasedPauli{exp & 3, PauliString{a.n_qubits, a.x_mask ^ b.x_mask,
                                          a.z_mask ^ b.z_mask}};
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_same_size(a, b);
  const int form = std::popcount(a.x_mask & b.z_mask) +
                   std::popcount(a.z_mask & b.x_mask);
  return (form & 1) == 0;
}

std::optional<PauliCommutator> commutator(const PauliString& a,
                                          const PauliString& b) {
  if (commutes(a, b)) return std::nullopt;
  // Anticommuting pair: [a, b] = 2 a b.
  const PhasedPauli ab = multiply(a, b);
  return PauliCommutator{2.0 * ab.phase(), ab.pauli};
}

std::uint64_t pauli_count_weight(int n_qubits, int k) {
  if (k < 0 || k > n_qubits) return 0;
  std::uint64_t binom = 1;
  for (int j = 1; j <= k; ++j) {
    binom = binom * static_cast<std::uint64_t>(n_qubits - k + j) /
            static_cast<std::uint64_t>(j);
  }
  std::uint64_t pow3 = 1;
  for (int j = 0; j < k; ++j) pow3 *= 3;
  return binom * pow3;
}

std::vector<PauliString> enumerate_paulis(int n_qubits,
                                          std::optional<int> max_weight) {
  check_size(n_qubits);
  if (n_qubits > kEnumerationCap) {
    throw std::invalid_argument("enumeration capped at " +
                                std::to_string(kEnumerationCap) + " qubits");
  }
  const std::uint64_t count = std::uint64_t{1} << (2 * n_qubits);
  std::vector<PauliString> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    // Base-4 digits, one per qubit: 0=I, 1=X, 2=Y, 3=Z.
    PauliString p{n_qubits, 0, 0};
    std::uint64_t c = code;
    for (int q = 0; q < n_qubits; ++q, c >>= 2) {
      p = p.with_letter(q, static_cast<int>(c & 3));
    }
    if (max_weight && p.weight() > *max_weight) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace cgeo
