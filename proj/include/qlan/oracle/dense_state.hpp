#pragma once

#include <complex>
#include <vector>

#include "qlan/graph.hpp"
#include "qlan/oracle/config.hpp"
#include "qlan/oracle/tableau.hpp"

namespace qlan::oracle {

// State vector over labelled qubits. Basis index bit i is qubit labels[i].
struct DenseState {
    std::vector<VertexId> labels;
    std::vector<std::complex<double>> amplitudes;

    double norm() const;
};

// Amplitude of |x> is 2^{-n/2} (-1)^{#edges inside x}. Throws Resource above
// config.dense_max qubits.
DenseState graph_to_dense(const Graph& g, const OracleConfig& config = OracleConfig::from_env());

// Linear cluster state on `order`, built gate by gate: CZ on consecutive
// qubits applied to |+...+>. Used as an independent cross-check of the
// closed-form amplitudes.
DenseState linear_cluster_dense(const std::vector<VertexId>& order, const OracleConfig& config = OracleConfig::from_env());

// The unique state stabilized by the tableau, normalized, obtained by
// projecting a fixed generic vector with prod (I + g)/2.
DenseState tableau_to_dense(const StabilizerTableau& t, const OracleConfig& config = OracleConfig::from_env());

// psi <- P psi for a Pauli string over the state's qubit order.
void apply_pauli(DenseState& psi, const PauliRow& p);

// psi <- U psi for a single-qubit Clifford.
void apply_gate(DenseState& psi, const LocalGate& gate);

// |<a|b>|. Labels must agree.
double overlap(const DenseState& a, const DenseState& b);

}  // namespace qlan::oracle
