#include "boundaryq/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace boundaryq {

namespace {

bool entry_order(const SparseEntry& a, const SparseEntry& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.row < b.row;
}

void check_same_n(const SparseOperator& a, const SparseOperator& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("incompatible operand sizes: " + std::to_string(a.n()) +
                                    " vs " + std::to_string(b.n()) + " qubits");
    }
}

} // namespace

SparseOperator::SparseOperator(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("qubit count must be positive");
    }
    check_dense_limit(n, "SparseOperator");
}

SparseOperator SparseOperator::identity(int n) {
    SparseOperator out(n);
    out.entries_.reserve(out.dim());
    for (std::uint64_t i = 0; i < out.dim(); ++i) {
        out.entries_.push_back({i, i, complexd{1.0, 0.0}});
    }
    return out;
}

SparseOperator SparseOperator::from_entries(int n, std::vector<SparseEntry> entries) {
    SparseOperator out(n);
    const std::uint64_t dim = out.dim();
    for (const auto& e : entries) {
        if (e.row >= dim || e.col >= dim) {
            throw std::out_of_range("sparse entry index out of range");
        }
    }
    std::sort(entries.begin(), entries.end(), entry_order);
    std::vector<SparseEntry> merged;
    merged.reserve(entries.size());
    for (const auto& e : entries) {
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
            merged.back().value += e.value;
        } else {
            merged.push_back(e);
        }
    }
    std::erase_if(merged, [](const SparseEntry& e) { return e.value == complexd{0.0, 0.0}; });
    out.entries_ = std::move(merged);
    return out;
}

complexd SparseOperator::trace() const {
    complexd sum{0.0, 0.0};
    for (const auto& e : entries_) {
        if (e.row == e.col) {
            sum += e.value;
        }
    }
    return sum;
}

SparseOperator SparseOperator::adjoint() const {
    std::vector<SparseEntry> entries;
    entries.reserve(entries_.size());
    for (const auto& e : entries_) {
        entries.push_back({e.col, e.row, std::conj(e.value)});
    }
    return from_entries(n_, std::move(entries));
}

Eigen::MatrixXcd SparseOperator::to_dense() const {
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& e : entries_) {
        out(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
    }
    return out;
}

bool SparseOperator::operator==(const SparseOperator& other) const {
    if (n_ != other.n_ || entries_.size() != other.entries_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& a = entries_[i];
        const auto& b = other.entries_[i];
        if (a.row != b.row || a.col != b.col || a.value != b.value) {
            return false;
        }
    }
    return true;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    check_same_n(a, b);
    std::vector<SparseEntry> entries = a.entries_;
    entries.insert(entries.end(), b.entries_.begin(), b.entries_.end());
    return SparseOperator::from_entries(a.n(), std::move(entries));
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    return a + (complexd{-1.0, 0.0} * b);
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    check_same_n(a, b);
    const std::uint64_t dim = a.dim();
    // Column offsets into a's entry list (entries are sorted by column).
    std::vector<std::size_t> col_start(dim + 1, 0);
    {
        std::size_t pos = 0;
        for (std::uint64_t c = 0; c <= dim; ++c) {
            while (pos < a.entries_.size() && a.entries_[pos].col < c) {
                ++pos;
            }
            col_start[c] = pos;
        }
    }
    std::vector<SparseEntry> result;
    std::size_t i = 0;
    std::vector<std::pair<std::uint64_t, complexd>> column;
    while (i < b.entries_.size()) {
        const std::uint64_t out_col = b.entries_[i].col;
        column.clear();
        for (; i < b.entries_.size() && b.entries_[i].col == out_col; ++i) {
            const auto& eb = b.entries_[i];
            for (std::size_t j = col_start[eb.row]; j < col_start[eb.row + 1]; ++j) {
                column.emplace_back(a.entries_[j].row, a.entries_[j].value * eb.value);
            }
        }
        std::sort(column.begin(), column.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (std::size_t j = 0; j < column.size();) {
            complexd sum{0.0, 0.0};
            const std::uint64_t row = column[j].first;
            for (; j < column.size() && column[j].first == row; ++j) {
                sum += column[j].second;
            }
            if (sum != complexd{0.0, 0.0}) {
                result.push_back({row, out_col, sum});
            }
        }
    }
    return SparseOperator::from_entries(a.n(), std::move(result));
}

SparseOperator operator*(complexd scale, const SparseOperator& a) {
    std::vector<SparseEntry> entries;
    entries.reserve(a.entries_.size());
    for (const auto& e : a.entries_) {
        entries.push_back({e.row, e.col, scale * e.value});
    }
    return SparseOperator::from_entries(a.n(), std::move(entries));
}

std::string SparseOperator::to_text() const {
    std::string out;
    for (const auto& e : entries_) {
        out += std::to_string(e.row);
        out += ' ';
        out += std::to_string(e.col);
        out += ' ';
        out += format_double(e.value.real());
        out += ' ';
        out += format_double(e.value.imag());
        out += '\n';
    }
    return out;
}

SparseOperator SparseOperator::from_text(std::string_view text, int n) {
    std::vector<SparseEntry> entries;
    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::uint64_t row = 0;
        std::uint64_t col = 0;
        double re = 0.0;
        double im = 0.0;
        if (!(fields >> row >> col >> re >> im)) {
            throw std::invalid_argument("malformed sparse entry line: " + line);
        }
        entries.push_back({row, col, complexd{re, im}});
    }
    return from_entries(n, std::move(entries));
}

double frobenius_norm(const SparseOperator& a) {
    double sum = 0.0;
    for (const auto& e : a.entries()) {
        sum += std::norm(e.value);
    }
    return std::sqrt(sum);
}

double frobenius_distance(const SparseOperator& a, const SparseOperator& b) {
    return frobenius_norm(a - b);
}

} // namespace boundaryq
