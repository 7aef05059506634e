#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qlan/graph.hpp"
#include "qlan/measurement.hpp"

namespace qlan::oracle {

// One Pauli string on up to 64 qubits. Bit j of (x, z) encodes the factor on
// qubit j: (1,0) = X, (0,1) = Z, (1,1) = Y, (0,0) = I. `negative` is the
// overall sign; all operators handled here are Hermitian, so the phase is
// always real.
struct PauliRow {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    bool negative = false;

    bool operator==(const PauliRow&) const = default;
};

// Product a*b of two commuting Pauli strings. Throws std::logic_error when
// they anticommute (the product would carry an imaginary phase).
PauliRow multiply(const PauliRow& a, const PauliRow& b);

// True when the symplectic inner product vanishes.
bool commute(const PauliRow& a, const PauliRow& b);

enum class GateKind { H, S, Sdg, Z };

std::string_view to_string(GateKind kind);

// Single-qubit Clifford acting on a labelled qubit.
struct LocalGate {
    VertexId qubit = 0;
    GateKind kind = GateKind::H;

    bool operator==(const LocalGate&) const = default;
};

// Conjugates `row` by the gate acting on bit `index`: row <- U row U^dagger.
void conjugate(PauliRow& row, std::size_t index, GateKind kind);

// Full-rank stabilizer group on n <= 64 qubits. Qubit i carries label
// labels()[i]; the labels are kept sorted so that tableaux over the same
// vertex set line up.
class StabilizerTableau {
public:
    // Throws Rank when the rows are not n independent, pairwise commuting
    // generators, and Resource above 64 qubits.
    StabilizerTableau(std::vector<VertexId> labels, std::vector<PauliRow> rows);

    std::size_t size() const { return labels_.size(); }
    const std::vector<VertexId>& labels() const { return labels_; }
    const std::vector<PauliRow>& rows() const { return rows_; }

    // Position of a label. Throws UnknownVertex.
    std::size_t index_of(VertexId label) const;

    // U S U^dagger for every generator S.
    void apply(const LocalGate& gate);

private:
    std::vector<VertexId> labels_;
    std::vector<PauliRow> rows_;
};

// Generators K_a = X_a prod_{b in N_a} Z_b, all with sign +1.
StabilizerTableau graph_to_tableau(const Graph& g);

// The single-qubit Pauli `basis` on qubit `index`.
PauliRow single_qubit_pauli(std::size_t index, PauliBasis basis);

// +1 / -1 when measuring `basis` on qubit `q` has a fixed outcome, 0 when the
// outcome is random.
int deterministic_outcome(const StabilizerTableau& t, VertexId q, PauliBasis basis);

// Projects onto the `outcome` (+1 or -1) eigenspace of `basis` on qubit q and
// discards q. The result is a full-rank tableau on the remaining labels.
// Throws InconsistentOutcome when the outcome is fixed and differs, and
// Parameter when outcome is not +-1.
StabilizerTableau measure_pauli(const StabilizerTableau& t, VertexId q, PauliBasis basis, int outcome);

struct CanonicalForm {
    Graph graph;
    // Applying these gates in order to the input state yields the graph
    // state of `graph` exactly, up to a global phase.
    std::vector<LocalGate> gates;
};

// Brings any stabilizer state to graph form with single-qubit Cliffords.
CanonicalForm tableau_to_graph_canonical(const StabilizerTableau& t);

}  // namespace qlan::oracle
