// Copyright 2026 The paulitree authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace paulitree {

/// Phase-tracked n-qubit Pauli operator in symplectic bit-mask form.
///
/// The represented operator is i^k * prod_j X_j^{x_j} Z_j^{z_j} with k taken
/// mod 4. A qubit with x_j = z_j = 1 reads out as the letter Y; the extra i
/// per Y is folded into the global phase so that letter readout always
/// returns literal I/X/Y/Z. The scalar prefactor in front of the literal
/// letter string is i^(k - #Y), and the operator is Hermitian exactly when
/// that prefactor is +1 or -1.
class PauliString {
 public:
  explicit PauliString(std::size_t n);

  static PauliString identity(std::size_t n);

  /// Builds an operator from text such as "ZZZZ" or "-YIZZ". Qubit 0 is the
  /// leftmost character; an optional leading '+' or '-' sets the sign.
  static PauliString parse(std::string_view text);

  std::size_t num_qubits() const { return n_; }

  bool x_bit(std::size_t qubit) const;
  bool z_bit(std::size_t qubit) const;

  /// Literal letter at `qubit`: one of 'I', 'X', 'Y', 'Z'.
  char letter(std::size_t qubit) const;

  /// Replaces the letter at `qubit`, keeping the scalar prefactor unchanged.
  void set_letter(std::size_t qubit, char letter);

  int phase_exponent() const { return phase_; }
  void add_phase_exponent(int k);

  /// Exponent w in {0,1,2,3} of the scalar prefactor i^w on the literal
  /// letter string.
  int prefactor_exponent() const;
  std::complex<double> prefactor() const;

  bool is_hermitian() const { return prefactor_exponent() % 2 == 0; }

  /// True when every letter is I (the scalar prefactor may be anything).
  bool is_identity_letters() const;

  std::vector<std::size_t> support() const;
  std::size_t support_size() const;

  std::size_t count_y() const;

  /// Multiplies the global phase by -1.
  void negate() { add_phase_exponent(2); }

  std::string to_string() const;

  bool operator==(const PauliString& other) const;
  bool operator!=(const PauliString& other) const { return !(*this == other); }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  int phase_;  // 0..3

  friend PauliString multiply(const PauliString&, const PauliString&);
  friend bool commutes(const PauliString&, const PauliString&);
};

/// Exact operator product p*q with full phase tracking.
PauliString multiply(const PauliString& p, const PauliString& q);
inline PauliString operator*(const PauliString& p, const PauliString& q) {
  return multiply(p, q);
}

/// True iff pq = qp; the symplectic inner product of the bit masks is even.
bool commutes(const PauliString& p, const PauliString& q);

/// exp(i*sign*pi/4*o) * p * exp(-i*sign*pi/4*o) for Hermitian o and p.
/// Equals p when [o,p] = 0 and (i*sign)*o*p when {o,p} = 0.
PauliString conjugate_by_quarter_rotation(const PauliString& o,
                                          const PauliString& p, int sign);

struct ResidualStep {
  PauliString h;  // canonical: Hermitian with scalar prefactor +1
  int sign;       // in {-1, +1}
};

/// The single algebraic step of the recursive decomposition: for Hermitian,
/// anticommuting o and p returns h = -i*o*p normalized to prefactor +1 and
/// the sign such that conjugate_by_quarter_rotation(o, h, +1) == sign * p.
ResidualStep residual(const PauliString& o, const PauliString& p);

struct CanonicalSplit {
  PauliString letters;  // prefactor +1
  int sign;             // in {-1, +1}
};

/// Splits a Hermitian operator into its +1-prefactor letter string and sign.
CanonicalSplit canonical_split(const PauliString& p);

}  // namespace paulitree
