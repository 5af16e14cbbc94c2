#include "boundaryq/simplicial.hpp"

#include <bit>
#include <sstream>

namespace boundaryq {

namespace {

void check_vertex_count(int n) {
    if (n < 1 || n > 64) {
        throw std::invalid_argument("vertex count must be in [1, 64]");
    }
}

// Sign of removing vertex i from word s: (-1)^(number of set bits above i).
int removal_sign(std::uint64_t s, int i) {
    const std::uint64_t above = s >> (i + 1);
    return (std::popcount(above) & 1) ? -1 : 1;
}

} // namespace

int SimplexState::vertex_count() const {
    return std::popcount(bits);
}

bool SimplexState::contains(int vertex) const {
    return ((bits >> vertex) & 1) != 0;
}

std::string SimplexState::to_string() const {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if (contains(i)) {
            out[static_cast<std::size_t>(n - 1 - i)] = '1';
        }
    }
    return out;
}

ChainVector::ChainVector(int n) : n_(n) {
    check_vertex_count(n);
}

complexd ChainVector::coefficient(std::uint64_t bits) const {
    auto it = amps_.find(bits);
    return it == amps_.end() ? complexd{0.0, 0.0} : it->second;
}

void ChainVector::set(std::uint64_t bits, complexd value) {
    if (value == complexd{0.0, 0.0}) {
        amps_.erase(bits);
    } else {
        amps_[bits] = value;
    }
}

void ChainVector::accumulate(std::uint64_t bits, complexd value) {
    auto [it, inserted] = amps_.try_emplace(bits, value);
    if (!inserted) {
        it->second += value;
        if (it->second == complexd{0.0, 0.0}) {
            amps_.erase(it);
        }
    }
}

std::string ChainVector::to_text() const {
    std::string out;
    for (const auto& [bits, amp] : amps_) {
        out += format_double(amp.real());
        out += ' ';
        out += format_double(amp.imag());
        out += ' ';
        out += SimplexState{n_, bits}.to_string();
        out += '\n';
    }
    return out;
}

ChainVector ChainVector::from_text(std::string_view text, int n) {
    ChainVector out(n);
    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        double re = 0.0;
        double im = 0.0;
        std::string bits;
        if (!(fields >> re >> im >> bits) || static_cast<int>(bits.size()) != n) {
            throw std::invalid_argument("malformed chain line: " + line);
        }
        std::uint64_t word = 0;
        for (int i = 0; i < n; ++i) {
            char c = bits[static_cast<std::size_t>(n - 1 - i)];
            if (c == '1') {
                word |= std::uint64_t{1} << i;
            } else if (c != '0') {
                throw std::invalid_argument("malformed bitstring: " + bits);
            }
        }
        out.accumulate(word, complexd{re, im});
    }
    return out;
}

bool ChainVector::operator==(const ChainVector& other) const {
    return n_ == other.n_ && amps_ == other.amps_;
}

SparseOperator restricted_boundary(int k, int n) {
    check_vertex_count(n);
    if (k < 1 || k > n) {
        throw std::out_of_range("dimension index k must satisfy 1 <= k <= n");
    }
    check_dense_limit(n, "restricted_boundary");
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<SparseEntry> entries;
    for (std::uint64_t col = 0; col < dim; ++col) {
        if (std::popcount(col) != k) {
            continue;
        }
        for (int i = 0; i < n; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if ((col & bit) == 0) {
                continue;
            }
            entries.push_back(
                {col & ~bit, col, complexd{static_cast<double>(removal_sign(col, i)), 0.0}});
        }
    }
    return SparseOperator::from_entries(n, std::move(entries));
}

SparseOperator full_boundary_oracle(int n) {
    check_vertex_count(n);
    check_dense_limit(n, "full_boundary_oracle");
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<SparseEntry> entries;
    for (std::uint64_t col = 0; col < dim; ++col) {
        for (int i = 0; i < n; ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if ((col & bit) == 0) {
                continue;
            }
            entries.push_back(
                {col & ~bit, col, complexd{static_cast<double>(removal_sign(col, i)), 0.0}});
        }
    }
    return SparseOperator::from_entries(n, std::move(entries));
}

SparseOperator projector(int k, int n) {
    check_vertex_count(n);
    if (k < 0 || k > n) {
        throw std::out_of_range("occupancy k must satisfy 0 <= k <= n");
    }
    check_dense_limit(n, "projector");
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<SparseEntry> entries;
    for (std::uint64_t i = 0; i < dim; ++i) {
        if (std::popcount(i) == k) {
            entries.push_back({i, i, complexd{1.0, 0.0}});
        }
    }
    return SparseOperator::from_entries(n, std::move(entries));
}

ChainVector apply_boundary(const ChainVector& chain) {
    ChainVector out(chain.n());
    for (const auto& [word, amp] : chain.amplitudes()) {
        for (int i = 0; i < chain.n(); ++i) {
            const std::uint64_t bit = std::uint64_t{1} << i;
            if ((word & bit) == 0) {
                continue;
            }
            out.accumulate(word & ~bit, amp * static_cast<double>(removal_sign(word, i)));
        }
    }
    return out;
}

} // namespace boundaryq
