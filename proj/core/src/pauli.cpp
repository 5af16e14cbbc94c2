#include "boundaryq/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "boundaryq/sparse.hpp"

namespace boundaryq {

namespace {

constexpr int kMaxQubits = 64;

void check_n(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, 64], got " + std::to_string(n));
    }
}

void check_same_n(const PauliString& p, const PauliString& q) {
    if (p.n() != q.n()) {
        throw std::invalid_argument("incompatible operand sizes: " + std::to_string(p.n()) +
                                    " vs " + std::to_string(q.n()) + " qubits");
    }
}

complexd phase_value(int phase_pow) {
    switch (phase_pow & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// Single-qubit product table: result axis and the power of i it carries.
// Indexed [left][right] with I=0, X=1, Y=2, Z=3.
struct AxisProduct {
    Axis axis;
    int phase_pow;
};

constexpr AxisProduct kAxisTable[4][4] = {
    {{Axis::I, 0}, {Axis::X, 0}, {Axis::Y, 0}, {Axis::Z, 0}},
    {{Axis::X, 0}, {Axis::I, 0}, {Axis::Z, 1}, {Axis::Y, 3}},
    {{Axis::Y, 0}, {Axis::Z, 3}, {Axis::I, 0}, {Axis::X, 1}},
    {{Axis::Z, 0}, {Axis::Y, 1}, {Axis::X, 3}, {Axis::I, 0}},
};

} // namespace

char axis_char(Axis a) {
    switch (a) {
        case Axis::I: return 'I';
        case Axis::X: return 'X';
        case Axis::Y: return 'Y';
        case Axis::Z: return 'Z';
    }
    return '?';
}

Axis axis_from_char(char c) {
    switch (c) {
        case 'I': return Axis::I;
        case 'X': return Axis::X;
        case 'Y': return Axis::Y;
        case 'Z': return Axis::Z;
        default: throw std::invalid_argument(std::string("invalid axis character '") + c + "'");
    }
}

PauliString::PauliString(int n) : n_(n) {
    check_n(n);
}

PauliString::PauliString(int n, std::uint64_t xmask, std::uint64_t zmask, int phase_pow)
    : n_(n), xmask_(xmask), zmask_(zmask), phase_pow_(static_cast<std::uint8_t>(phase_pow & 3)) {
    check_n(n);
}

PauliString::PauliString(const std::vector<Axis>& axes, int phase_pow)
    : PauliString(static_cast<int>(axes.size())) {
    for (std::size_t q = 0; q < axes.size(); ++q) {
        Axis a = axes[q];
        if (a == Axis::X || a == Axis::Y) {
            xmask_ |= std::uint64_t{1} << q;
        }
        if (a == Axis::Z || a == Axis::Y) {
            zmask_ |= std::uint64_t{1} << q;
        }
    }
    phase_pow_ = static_cast<std::uint8_t>(phase_pow & 3);
}

PauliString PauliString::from_word(std::string_view word, int phase_pow) {
    int n = static_cast<int>(word.size());
    check_n(n);
    std::vector<Axis> axes(n);
    for (int q = 0; q < n; ++q) {
        axes[q] = axis_from_char(word[word.size() - 1 - q]);
    }
    return PauliString(axes, phase_pow);
}

PauliString PauliString::single(int n, int qubit, Axis a) {
    check_n(n);
    if (qubit < 0 || qubit >= n) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for n = " +
                                std::to_string(n));
    }
    std::uint64_t bit = std::uint64_t{1} << qubit;
    std::uint64_t x = (a == Axis::X || a == Axis::Y) ? bit : 0;
    std::uint64_t z = (a == Axis::Z || a == Axis::Y) ? bit : 0;
    return PauliString(n, x, z, 0);
}

Axis PauliString::axis(int qubit) const {
    if (qubit < 0 || qubit >= n_) {
        throw std::out_of_range("qubit index out of range");
    }
    bool x = (xmask_ >> qubit) & 1;
    bool z = (zmask_ >> qubit) & 1;
    if (x && z) return Axis::Y;
    if (x) return Axis::X;
    if (z) return Axis::Z;
    return Axis::I;
}

complexd PauliString::phase() const {
    return phase_value(phase_pow_);
}

int PauliString::weight() const {
    return std::popcount(xmask_ | zmask_);
}

std::string PauliString::word() const {
    std::string out(static_cast<std::size_t>(n_), 'I');
    for (int q = 0; q < n_; ++q) {
        out[static_cast<std::size_t>(n_ - 1 - q)] = axis_char(axis(q));
    }
    return out;
}

PauliString PauliString::adjoint() const {
    // Each axis is Hermitian; only the phase conjugates.
    return PauliString(n_, xmask_, zmask_, (4 - phase_pow_) & 3);
}

PauliString PauliString::with_phase_pow(int phase_pow) const {
    return PauliString(n_, xmask_, zmask_, phase_pow);
}

PauliString multiply(const PauliString& p, const PauliString& q) {
    check_same_n(p, q);
    int phase_pow = p.phase_pow() + q.phase_pow();
    std::vector<Axis> axes(static_cast<std::size_t>(p.n()));
    for (int qu = 0; qu < p.n(); ++qu) {
        const AxisProduct& prod =
            kAxisTable[static_cast<int>(p.axis(qu))][static_cast<int>(q.axis(qu))];
        axes[static_cast<std::size_t>(qu)] = prod.axis;
        phase_pow += prod.phase_pow;
    }
    return PauliString(axes, phase_pow & 3);
}

bool anticommutes(const PauliString& p, const PauliString& q) {
    check_same_n(p, q);
    // Parity of positions where the words differ and neither factor is I,
    // i.e. the symplectic form popcount(p.x & q.z) + popcount(p.z & q.x).
    int parity = std::popcount(p.flip_mask() & q.sign_mask()) +
                 std::popcount(p.sign_mask() & q.flip_mask());
    return (parity & 1) != 0;
}

OperatorSum::OperatorSum(int n) : n_(n) {
    check_n(n);
}

OperatorSum OperatorSum::identity(int n) {
    OperatorSum out(n);
    out.add_term(1.0, PauliString(n));
    return out.canonicalize();
}

void OperatorSum::add_term(complexd coeff, const PauliString& s) {
    if (s.n() != n_) {
        throw std::invalid_argument("term qubit count " + std::to_string(s.n()) +
                                    " does not match operator qubit count " + std::to_string(n_));
    }
    terms_.push_back({coeff, s});
}

OperatorSum& OperatorSum::canonicalize() {
    for (auto& term : terms_) {
        term.coeff *= term.string.phase();
        term.string = term.string.with_phase_pow(0);
    }
    std::sort(terms_.begin(), terms_.end(), [](const OperatorTerm& a, const OperatorTerm& b) {
        return a.string.word() < b.string.word();
    });
    std::vector<OperatorTerm> merged;
    merged.reserve(terms_.size());
    for (const auto& term : terms_) {
        if (!merged.empty() && merged.back().string == term.string) {
            merged.back().coeff += term.coeff;
        } else {
            merged.push_back(term);
        }
    }
    std::erase_if(merged, [](const OperatorTerm& t) { return t.coeff == complexd{0.0, 0.0}; });
    terms_ = std::move(merged);
    return *this;
}

OperatorSum OperatorSum::adjoint() const {
    OperatorSum out(n_);
    for (const auto& term : terms_) {
        out.add_term(std::conj(term.coeff), term.string.adjoint());
    }
    return out.canonicalize();
}

OperatorSum operator+(const OperatorSum& a, const OperatorSum& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("incompatible operand sizes in OperatorSum sum");
    }
    OperatorSum out(a.n());
    out.terms_ = a.terms_;
    out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
    return out.canonicalize();
}

OperatorSum operator-(const OperatorSum& a, const OperatorSum& b) {
    return a + (complexd{-1.0, 0.0} * b);
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("incompatible operand sizes in OperatorSum product");
    }
    OperatorSum out(a.n());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            out.add_term(ta.coeff * tb.coeff, multiply(ta.string, tb.string));
        }
    }
    return out.canonicalize();
}

OperatorSum operator*(complexd scale, const OperatorSum& a) {
    OperatorSum out(a.n());
    for (const auto& term : a.terms_) {
        out.add_term(scale * term.coeff, term.string);
    }
    return out.canonicalize();
}

bool OperatorSum::operator==(const OperatorSum& other) const {
    if (n_ != other.n_ || terms_.size() != other.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != other.terms_[i].coeff ||
            !(terms_[i].string == other.terms_[i].string)) {
            return false;
        }
    }
    return true;
}

std::string OperatorSum::to_text() const {
    std::string out;
    for (const auto& term : terms_) {
        out += format_double(term.coeff.real());
        out += ' ';
        out += format_double(term.coeff.imag());
        out += ' ';
        out += term.string.word();
        out += '\n';
    }
    return out;
}

OperatorSum OperatorSum::from_text(std::string_view text, int n) {
    OperatorSum out(n);
    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        double re = 0.0;
        double im = 0.0;
        std::string word;
        if (!(fields >> re >> im >> word)) {
            throw std::invalid_argument("malformed OperatorSum line: " + line);
        }
        out.add_term(complexd{re, im}, PauliString::from_word(word));
    }
    return out.canonicalize();
}

OperatorSum jw_annihilation(int mode, int n) {
    check_n(n);
    if (mode < 0 || mode >= n) {
        throw std::out_of_range("mode index " + std::to_string(mode) + " out of range for n = " +
                                std::to_string(n));
    }
    // a_i = Z^(n-(i+1)) (x) (X + iY)/2 (x) I^i
    std::vector<Axis> x_word(static_cast<std::size_t>(n), Axis::I);
    std::vector<Axis> y_word(static_cast<std::size_t>(n), Axis::I);
    for (int q = mode + 1; q < n; ++q) {
        x_word[static_cast<std::size_t>(q)] = Axis::Z;
        y_word[static_cast<std::size_t>(q)] = Axis::Z;
    }
    x_word[static_cast<std::size_t>(mode)] = Axis::X;
    y_word[static_cast<std::size_t>(mode)] = Axis::Y;

    OperatorSum out(n);
    out.add_term(complexd{0.5, 0.0}, PauliString(x_word));
    out.add_term(complexd{0.0, 0.5}, PauliString(y_word));
    return out.canonicalize();
}

OperatorSum jw_creation(int mode, int n) {
    return jw_annihilation(mode, n).adjoint();
}

SparseOperator to_sparse(const PauliString& p) {
    OperatorSum op(p.n());
    op.add_term(1.0, p);
    return to_sparse(op.canonicalize());
}

SparseOperator to_sparse(const OperatorSum& op) {
    check_dense_limit(op.n(), "to_sparse");
    const std::uint64_t dim = std::uint64_t{1} << op.n();
    std::unordered_map<std::uint64_t, complexd> slots;
    slots.reserve(op.terms().size() * dim);
    for (const auto& term : op.terms()) {
        const std::uint64_t flips = term.string.flip_mask();
        const std::uint64_t signs = term.string.sign_mask();
        const int ys = std::popcount(flips & signs);
        const complexd base = term.coeff * term.string.phase() * phase_value(ys);
        for (std::uint64_t col = 0; col < dim; ++col) {
            const std::uint64_t row = col ^ flips;
            const bool negative = (std::popcount(col & signs) & 1) != 0;
            slots[col * dim + row] += negative ? -base : base;
        }
    }
    std::vector<SparseEntry> entries;
    entries.reserve(slots.size());
    for (const auto& [key, value] : slots) {
        entries.push_back({key % dim, key / dim, value});
    }
    return SparseOperator::from_entries(op.n(), std::move(entries));
}

} // namespace boundaryq
