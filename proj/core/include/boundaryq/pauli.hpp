#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boundaryq/common.hpp"

namespace boundaryq {

class SparseOperator;

enum class Axis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(Axis a);
Axis axis_from_char(char c);

/// A phase times an n-fold tensor word over {I, X, Y, Z}.
///
/// Qubit 0 is the rightmost tensor factor and the least-significant bit of
/// basis-state indices. The phase is an exact fourth root of unity, stored
/// as the exponent p in i^p, so products of Pauli strings are decided
/// exactly rather than in floating point. Words are bit-packed
/// (X/Y flip mask, Z/Y sign mask), which caps n at 64; every dense-side use
/// is far below that.
class PauliString {
  public:
    /// Identity word on n qubits, phase +1.
    explicit PauliString(int n);

    /// axes[q] is the factor on qubit q (index 0 = rightmost factor).
    PauliString(const std::vector<Axis>& axes, int phase_pow = 0);

    /// Parses a word written leftmost-factor-first, e.g. "ZZX" is
    /// Z on qubit 2, Z on qubit 1, X on qubit 0.
    static PauliString from_word(std::string_view word, int phase_pow = 0);

    /// Single non-identity factor on one qubit.
    static PauliString single(int n, int qubit, Axis a);

    int n() const { return n_; }
    Axis axis(int qubit) const;
    int phase_pow() const { return phase_pow_; }
    complexd phase() const;

    /// Bit q set iff the factor on qubit q flips that bit (X or Y).
    std::uint64_t flip_mask() const { return xmask_; }
    /// Bit q set iff the factor on qubit q contributes a (-1)^bit sign (Z or Y).
    std::uint64_t sign_mask() const { return zmask_; }

    int weight() const; // number of non-identity factors

    /// Word written leftmost-factor-first (qubit n-1 first).
    std::string word() const;

    PauliString adjoint() const;
    PauliString with_phase_pow(int phase_pow) const;

    bool operator==(const PauliString& other) const = default;

  private:
    PauliString(int n, std::uint64_t xmask, std::uint64_t zmask, int phase_pow);

    int n_ = 0;
    std::uint64_t xmask_ = 0;
    std::uint64_t zmask_ = 0;
    std::uint8_t phase_pow_ = 0;
};

/// Exact product pq with phase tracking. Throws std::invalid_argument on
/// mismatched qubit counts.
PauliString multiply(const PauliString& p, const PauliString& q);

/// True iff pq = -qp; decided by the parity of positions where the words
/// differ and neither factor is the identity.
bool anticommutes(const PauliString& p, const PauliString& q);

struct OperatorTerm {
    complexd coeff;
    PauliString string;
};

/// A complex-linear combination of Pauli strings on a common qubit count.
///
/// canonicalize() folds every string phase into its coefficient, sorts terms
/// by word, merges equal words, and drops exact-zero coefficients; it is
/// idempotent. All factory functions and operators return canonical sums.
class OperatorSum {
  public:
    explicit OperatorSum(int n);

    static OperatorSum zero(int n) { return OperatorSum(n); }
    static OperatorSum identity(int n);

    int n() const { return n_; }
    const std::vector<OperatorTerm>& terms() const { return terms_; }

    /// Appends a raw term; call canonicalize() when done building.
    void add_term(complexd coeff, const PauliString& s);

    OperatorSum& canonicalize();

    OperatorSum adjoint() const;

    /// Line-oriented text: "<re> <im> <axes-word>" per term, word written
    /// leftmost-factor-first. Round-trips exactly through from_text.
    std::string to_text() const;
    static OperatorSum from_text(std::string_view text, int n);

    friend OperatorSum operator+(const OperatorSum& a, const OperatorSum& b);
    friend OperatorSum operator-(const OperatorSum& a, const OperatorSum& b);
    friend OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);
    friend OperatorSum operator*(complexd scale, const OperatorSum& a);

    bool operator==(const OperatorSum& other) const;

  private:
    int n_;
    std::vector<OperatorTerm> terms_;
};

/// Jordan-Wigner annihilation operator on mode i of n:
/// a_i = sigma_z^(n-(i+1)) (x) Q+ (x) I^i with Q+ = (X + iY)/2,
/// expanded as two Pauli terms. Throws std::out_of_range on bad mode.
OperatorSum jw_annihilation(int mode, int n);

/// Adjoint of jw_annihilation.
OperatorSum jw_creation(int mode, int n);

/// Exact 2^n x 2^n expansion. Each Pauli term contributes exactly 2^n
/// entries before cancellation. Subject to the dense limit.
SparseOperator to_sparse(const PauliString& p);
SparseOperator to_sparse(const OperatorSum& op);

} // namespace boundaryq
