#include "boundaryq/fermionic.hpp"

namespace boundaryq {

OperatorSum full_boundary_fermionic(int n) {
    OperatorSum out(n);
    for (int i = 0; i < n; ++i) {
        const OperatorSum mode = jw_annihilation(i, n);
        for (const auto& term : mode.terms()) {
            out.add_term(term.coeff, term.string);
        }
    }
    return out.canonicalize();
}

SparseOperator full_boundary_recurrence(int n) {
    check_dense_limit(n, "full_boundary_recurrence");
    // d(1) = Q+
    std::vector<SparseEntry> entries = {{0, 1, complexd{1.0, 0.0}}};
    for (int m = 2; m <= n; ++m) {
        const std::uint64_t half = std::uint64_t{1} << (m - 1);
        std::vector<SparseEntry> next;
        next.reserve(2 * entries.size() + half);
        // sigma_z (x) d(m-1): top-left block d(m-1), bottom-right -d(m-1).
        for (const auto& e : entries) {
            next.push_back(e);
            next.push_back({e.row + half, e.col + half, -e.value});
        }
        // Q+ (x) I^(m-1): top-right identity block.
        for (std::uint64_t r = 0; r < half; ++r) {
            next.push_back({r, r + half, complexd{1.0, 0.0}});
        }
        entries = std::move(next);
    }
    return SparseOperator::from_entries(n, std::move(entries));
}

PauliString hermitian_term(int i, int n) {
    if (i < 0 || i >= n) {
        throw std::out_of_range("term index out of range");
    }
    std::vector<Axis> axes(static_cast<std::size_t>(n), Axis::I);
    axes[static_cast<std::size_t>(i)] = Axis::X;
    for (int q = i + 1; q < n; ++q) {
        axes[static_cast<std::size_t>(q)] = Axis::Z;
    }
    return PauliString(axes);
}

OperatorSum hermitian_boundary(int n) {
    OperatorSum out(n);
    for (int i = 0; i < n; ++i) {
        out.add_term(complexd{1.0, 0.0}, hermitian_term(i, n));
    }
    return out.canonicalize();
}

} // namespace boundaryq
