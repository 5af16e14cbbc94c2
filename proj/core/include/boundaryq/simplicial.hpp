#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "boundaryq/sparse.hpp"

namespace boundaryq {

/// A simplex over n vertices encoded as an n-bit word: bit i (counting from
/// the right, 0-based) is set iff vertex i is in the simplex. popcount(bits)
/// is the vertex count k, i.e. dimension + 1; the all-zeros word is the
/// empty simplex.
struct SimplexState {
    int n;
    std::uint64_t bits;

    int vertex_count() const;
    bool contains(int vertex) const;
    std::string to_string() const; // bit n-1 first, matching axes-words
};

/// Finitely supported chain: map from n-bit simplex words to coefficients.
/// Absent key means zero.
class ChainVector {
  public:
    explicit ChainVector(int n);

    int n() const { return n_; }
    const std::map<std::uint64_t, complexd>& amplitudes() const { return amps_; }

    complexd coefficient(std::uint64_t bits) const;
    void set(std::uint64_t bits, complexd value); // exact zero erases
    void accumulate(std::uint64_t bits, complexd value);

    bool is_zero() const { return amps_.empty(); }

    /// Lines "<re> <im> <bitstring>" sorted by word, bitstring written bit
    /// n-1 first. Round-trips exactly.
    std::string to_text() const;
    static ChainVector from_text(std::string_view text, int n);

    bool operator==(const ChainVector& other) const;

  private:
    int n_;
    std::map<std::uint64_t, complexd> amps_;
};

/// Restricted boundary operator on the full 2^n space: columns whose
/// popcount is not k are zero; a column s with popcount k maps to the signed
/// sum over its set bits i of the word with bit i cleared, with sign
/// (-1)^(number of set bits above i). Entries are exact integers.
SparseOperator restricted_boundary(int k, int n);

/// Classical oracle for the full boundary operator: sum of
/// restricted_boundary(k, n) over k = 1..n, built directly from the
/// bitstring definition.
SparseOperator full_boundary_oracle(int n);

/// Diagonal 0/1 projector onto basis states of popcount exactly k.
SparseOperator projector(int k, int n);

/// Applies the full boundary operator to a chain by the column action above.
ChainVector apply_boundary(const ChainVector& chain);

} // namespace boundaryq
