#include "qlan/oracle/tableau.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qlan/error.hpp"

namespace qlan::oracle {

namespace {

constexpr std::uint64_t bit(std::size_t j) { return std::uint64_t{1} << j; }

// Exponent of i picked up when the single-qubit Pauli (x1,z1) multiplies
// (x2,z2) from the left, with Y encoded as (1,1).
int phase_exponent(int x1, int z1, int x2, int z2) {
    if (x1 == 0 && z1 == 0) return 0;
    if (x1 == 1 && z1 == 1) return z2 - x2;
    if (x1 == 1) return z2 * (2 * x2 - 1);
    return x2 * (1 - 2 * z2);
}

// Drops bit j and shifts the higher bits down.
std::uint64_t squeeze(std::uint64_t v, std::size_t j) {
    std::uint64_t low = bit(j) - 1;
    return (v & low) | ((v >> 1) & ~low);
}

// Incremental GF(2) basis over 128-bit symplectic vectors, remembering which
// original generators each basis vector combines.
class SymplecticBasis {
public:
    // Returns false when v was already in the span.
    bool insert(std::uint64_t x, std::uint64_t z, std::uint64_t combo) {
        reduce(x, z, combo);
        if (x == 0 && z == 0) return false;
        basis_[lead(x, z)] = {x, z, combo};
        return true;
    }

    // Reduces (x,z) against the basis. On return (x,z) is zero iff the input
    // was in the span, and `combo` holds the generators used.
    void reduce(std::uint64_t& x, std::uint64_t& z, std::uint64_t& combo) const {
        while (x != 0 || z != 0) {
            auto it = basis_.find(lead(x, z));
            if (it == basis_.end()) return;
            x ^= it->second.x;
            z ^= it->second.z;
            combo ^= it->second.combo;
        }
    }

private:
    struct Entry {
        std::uint64_t x, z, combo;
    };
    static int lead(std::uint64_t x, std::uint64_t z) {
        if (x != 0) return 64 + std::bit_width(x) - 1;
        return std::bit_width(z) - 1;
    }
    std::map<int, Entry> basis_;
};

}  // namespace

PauliRow multiply(const PauliRow& a, const PauliRow& b) {
    int exponent = 2 * (a.negative ? 1 : 0) + 2 * (b.negative ? 1 : 0);
    std::uint64_t touched = (a.x | a.z) & (b.x | b.z);
    while (touched != 0) {
        std::size_t j = static_cast<std::size_t>(std::countr_zero(touched));
        touched &= touched - 1;
        exponent += phase_exponent((a.x >> j) & 1, (a.z >> j) & 1, (b.x >> j) & 1, (b.z >> j) & 1);
    }
    exponent = ((exponent % 4) + 4) % 4;
    if (exponent % 2 != 0) {
        throw std::logic_error("multiplying anticommuting Pauli strings");
    }
    return PauliRow{a.x ^ b.x, a.z ^ b.z, exponent == 2};
}

bool commute(const PauliRow& a, const PauliRow& b) {
    return std::popcount((a.x & b.z) ^ (a.z & b.x)) % 2 == 0;
}

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "Sdg";
        case GateKind::Z: return "Z";
    }
    return "?";
}

void conjugate(PauliRow& row, std::size_t index, GateKind kind) {
    const bool x = (row.x >> index) & 1;
    const bool z = (row.z >> index) & 1;
    const std::uint64_t m = bit(index);
    switch (kind) {
        case GateKind::H:
            row.negative ^= x && z;
            row.x = (row.x & ~m) | (z ? m : 0);
            row.z = (row.z & ~m) | (x ? m : 0);
            break;
        case GateKind::S:
            row.negative ^= x && z;
            if (x) row.z ^= m;
            break;
        case GateKind::Sdg:
            row.negative ^= x && !z;
            if (x) row.z ^= m;
            break;
        case GateKind::Z:
            row.negative ^= x;
            break;
    }
}

StabilizerTableau::StabilizerTableau(std::vector<VertexId> labels, std::vector<PauliRow> rows)
    : labels_(std::move(labels)), rows_(std::move(rows)) {
    const std::size_t n = labels_.size();
    if (n > 64) {
        throw Error(ErrorKind::Resource, "stabilizer tableaux are limited to 64 qubits, got " + std::to_string(n));
    }
    if (!std::is_sorted(labels_.begin(), labels_.end()) ||
        std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw Error(ErrorKind::Parameter, "qubit labels must be strictly increasing");
    }
    if (rows_.size() != n) {
        throw Error(ErrorKind::Rank, "expected " + std::to_string(n) + " generators, got " + std::to_string(rows_.size()));
    }
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    SymplecticBasis basis;
    for (std::size_t i = 0; i < n; ++i) {
        if ((rows_[i].x | rows_[i].z) & ~mask) {
            throw Error(ErrorKind::Rank, "generator " + std::to_string(i) + " acts outside the register");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!commute(rows_[i], rows_[j])) {
                throw Error(ErrorKind::Rank,
                            "generators " + std::to_string(j) + " and " + std::to_string(i) + " anticommute");
            }
        }
        if (!basis.insert(rows_[i].x, rows_[i].z, 0)) {
            throw Error(ErrorKind::Rank, "generator " + std::to_string(i) + " is dependent on earlier ones");
        }
    }
}

std::size_t StabilizerTableau::index_of(VertexId label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        throw Error(ErrorKind::UnknownVertex, "qubit " + std::to_string(label) + " is not in the tableau");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

void StabilizerTableau::apply(const LocalGate& gate) {
    std::size_t j = index_of(gate.qubit);
    for (PauliRow& row : rows_) {
        conjugate(row, j, gate.kind);
    }
}

StabilizerTableau graph_to_tableau(const Graph& g) {
    std::vector<VertexId> labels(g.vertices().begin(), g.vertices().end());
    if (labels.size() > 64) {
        throw Error(ErrorKind::Resource, "graph has more than 64 vertices");
    }
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
    std::vector<PauliRow> rows;
    for (VertexId a : labels) {
        PauliRow row;
        row.x = bit(index[a]);
        for (VertexId b : g.neighbors(a)) row.z |= bit(index[b]);
        rows.push_back(row);
    }
    return StabilizerTableau(std::move(labels), std::move(rows));
}

PauliRow single_qubit_pauli(std::size_t index, PauliBasis basis) {
    PauliRow p;
    if (basis != PauliBasis::Z) p.x = bit(index);
    if (basis != PauliBasis::X) p.z = bit(index);
    return p;
}

namespace {

// Sign with which P (given without sign) lies in the group, or 0 when it
// anticommutes with some generator. Sets `combo` to the generators used.
int group_sign(const std::vector<PauliRow>& rows, const PauliRow& p, std::uint64_t& combo) {
    for (const PauliRow& r : rows) {
        if (!commute(r, p)) return 0;
    }
    SymplecticBasis basis;
    for (std::size_t i = 0; i < rows.size(); ++i) basis.insert(rows[i].x, rows[i].z, bit(i));
    std::uint64_t x = p.x, z = p.z;
    combo = 0;
    basis.reduce(x, z, combo);
    if (x != 0 || z != 0) {
        // Full rank groups contain every commuting Pauli up to sign.
        throw std::logic_error("commuting Pauli outside a full-rank stabilizer group");
    }
    PauliRow product;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if ((combo >> i) & 1) product = multiply(product, rows[i]);
    }
    return product.negative ? -1 : 1;
}

}  // namespace

int deterministic_outcome(const StabilizerTableau& t, VertexId q, PauliBasis basis) {
    std::uint64_t combo = 0;
    return group_sign(t.rows(), single_qubit_pauli(t.index_of(q), basis), combo);
}

StabilizerTableau measure_pauli(const StabilizerTableau& t, VertexId q, PauliBasis basis, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw Error(ErrorKind::Parameter, "measurement outcome must be +1 or -1");
    }
    const std::size_t j = t.index_of(q);
    const PauliRow p = single_qubit_pauli(j, basis);
    std::vector<PauliRow> rows = t.rows();

    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!commute(rows[i], p)) {
            pivot = i;
            break;
        }
    }
    if (pivot < rows.size()) {
        // Random outcome: fold the other anticommuting generators into the
        // pivot's complement, then the pivot becomes the measured operator.
        for (std::size_t i = pivot + 1; i < rows.size(); ++i) {
            if (!commute(rows[i], p)) rows[i] = multiply(rows[i], rows[pivot]);
        }
    } else {
        std::uint64_t combo = 0;
        int sign = group_sign(rows, p, combo);
        if (sign != outcome) {
            throw Error(ErrorKind::InconsistentOutcome, "measuring " + std::string(to_string(basis)) + " on qubit " +
                                                            std::to_string(q) + " gives " + std::to_string(sign) +
                                                            " with certainty");
        }
        // Replace one generator of the combination by the product; the group
        // is unchanged.
        pivot = static_cast<std::size_t>(std::countr_zero(combo));
    }
    rows[pivot] = p;
    rows[pivot].negative = outcome == -1;

    // Clear qubit j from every other generator, then drop the pivot.
    std::vector<PauliRow> kept;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pivot) continue;
        PauliRow r = rows[i];
        if (((r.x | r.z) >> j) & 1) r = multiply(r, rows[pivot]);
        if (((r.x | r.z) >> j) & 1) {
            throw std::logic_error("measured qubit survived elimination");
        }
        kept.push_back(PauliRow{squeeze(r.x, j), squeeze(r.z, j), r.negative});
    }
    std::vector<VertexId> labels = t.labels();
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(j));
    return StabilizerTableau(std::move(labels), std::move(kept));
}

CanonicalForm tableau_to_graph_canonical(const StabilizerTableau& t) {
    const std::size_t n = t.size();
    std::vector<PauliRow> rows = t.rows();
    std::vector<LocalGate> gates;
    auto apply = [&](std::size_t j, GateKind kind) {
        for (PauliRow& r : rows) conjugate(r, j, kind);
        gates.push_back({t.labels()[j], kind});
    };

    // Row-reduce the X block and note its pivot columns.
    std::vector<bool> pivot_col(n, false);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < n; ++c) {
        std::size_t found = rank;
        while (found < n && !((rows[found].x >> c) & 1)) ++found;
        if (found == n) continue;
        std::swap(rows[rank], rows[found]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != rank && ((rows[i].x >> c) & 1)) rows[i] = multiply(rows[i], rows[rank]);
        }
        pivot_col[c] = true;
        ++rank;
    }
    // Hadamards on the remaining columns make the X block invertible.
    for (std::size_t c = 0; c < n; ++c) {
        if (!pivot_col[c]) apply(c, GateKind::H);
    }
    // Gauss-Jordan to X = identity, row c owning qubit c.
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t found = c;
        while (found < n && !((rows[found].x >> c) & 1)) ++found;
        if (found == n) {
            throw Error(ErrorKind::Rank, "X block stayed singular after Hadamard fix-up");
        }
        std::swap(rows[c], rows[found]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != c && ((rows[i].x >> c) & 1)) rows[i] = multiply(rows[i], rows[c]);
        }
    }
    // Y on the diagonal becomes X; negative generators get a Z flip.
    for (std::size_t c = 0; c < n; ++c) {
        if ((rows[c].z >> c) & 1) apply(c, GateKind::Sdg);
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (rows[c].negative) apply(c, GateKind::Z);
    }

    VertexSet vertices(t.labels().begin(), t.labels().end());
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a) {
        if (rows[a].x != bit(a) || rows[a].negative || ((rows[a].z >> a) & 1)) {
            throw std::logic_error("canonical form not reached");
        }
        for (std::size_t b = a + 1; b < n; ++b) {
            bool ab = (rows[a].z >> b) & 1;
            bool ba = (rows[b].z >> a) & 1;
            if (ab != ba) throw std::logic_error("asymmetric Z block in canonical form");
            if (ab) edges.emplace_back(t.labels()[a], t.labels()[b]);
        }
    }
    return CanonicalForm{Graph(std::move(vertices), edges), std::move(gates)};
}

}  // namespace qlan::oracle
