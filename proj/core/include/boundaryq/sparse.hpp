#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "boundaryq/common.hpp"

namespace boundaryq {

struct SparseEntry {
    std::uint64_t row;
    std::uint64_t col;
    complexd value;
};

/// 2^n x 2^n complex sparse matrix in coordinate form, kept sorted by
/// (col, row) with exact-zero entries dropped. Entries are compared exactly
/// (bit-for-bit complex equality); all boundary-operator constructions stay
/// within dyadic rationals, so cross-construction identity checks are exact.
class SparseOperator {
  public:
    explicit SparseOperator(int n);

    static SparseOperator identity(int n);
    static SparseOperator from_entries(int n, std::vector<SparseEntry> entries);

    int n() const { return n_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_; }
    std::size_t nnz() const { return entries_.size(); }

    /// Sorted by (col, row); deterministic, used directly for serialization.
    const std::vector<SparseEntry>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }
    complexd trace() const;
    SparseOperator adjoint() const;

    Eigen::MatrixXcd to_dense() const;

    /// Exact structural equality (same nonzero pattern, identical values).
    bool operator==(const SparseOperator& other) const;

    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(complexd scale, const SparseOperator& a);

    /// Lines "<row> <col> <re> <im>", sorted by (col, row). Lines starting
    /// with '#' are ignored by from_text.
    std::string to_text() const;
    static SparseOperator from_text(std::string_view text, int n);

  private:
    int n_;
    std::vector<SparseEntry> entries_;
};

double frobenius_norm(const SparseOperator& a);
double frobenius_distance(const SparseOperator& a, const SparseOperator& b);

} // namespace boundaryq
