#include "qlan/oracle/dense_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "qlan/error.hpp"

namespace qlan::oracle {

namespace {

using amp = std::complex<double>;

void guard(std::size_t n, const OracleConfig& config) {
    if (n > config.dense_max) {
        throw Error(ErrorKind::Resource, "dense state on " + std::to_string(n) + " qubits exceeds the cap of " +
                                             std::to_string(config.dense_max));
    }
}

void normalize(DenseState& psi) {
    double nrm = psi.norm();
    for (amp& a : psi.amplitudes) a /= nrm;
}

}  // namespace

double DenseState::norm() const {
    double sum = 0;
    for (const amp& a : amplitudes) sum += std::norm(a);
    return std::sqrt(sum);
}

DenseState graph_to_dense(const Graph& g, const OracleConfig& config) {
    const std::size_t n = g.order();
    guard(n, config);
    DenseState psi{{g.vertices().begin(), g.vertices().end()}, {}};
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[psi.labels[i]] = i;
    std::vector<std::uint64_t> edge_masks;
    for (const Edge& e : g.edges()) {
        edge_masks.push_back((std::uint64_t{1} << index[e.a]) | (std::uint64_t{1} << index[e.b]));
    }
    const double scale = std::pow(2.0, -static_cast<double>(n) / 2.0);
    psi.amplitudes.resize(std::size_t{1} << n);
    for (std::uint64_t x = 0; x < psi.amplitudes.size(); ++x) {
        int inside = 0;
        for (std::uint64_t m : edge_masks) inside += (x & m) == m;
        psi.amplitudes[x] = inside % 2 == 0 ? scale : -scale;
    }
    return psi;
}

DenseState linear_cluster_dense(const std::vector<VertexId>& order, const OracleConfig& config) {
    const std::size_t n = order.size();
    guard(n, config);
    DenseState psi{order, std::vector<amp>(std::size_t{1} << n, std::pow(2.0, -static_cast<double>(n) / 2.0))};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::uint64_t m = (std::uint64_t{3} << i);
        for (std::uint64_t x = 0; x < psi.amplitudes.size(); ++x) {
            if ((x & m) == m) psi.amplitudes[x] = -psi.amplitudes[x];
        }
    }
    // Reorder qubits so labels ascend like every other dense state.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return order[a] < order[b]; });
    DenseState sorted{{}, std::vector<amp>(psi.amplitudes.size())};
    for (std::size_t i = 0; i < n; ++i) sorted.labels.push_back(order[perm[i]]);
    for (std::uint64_t x = 0; x < psi.amplitudes.size(); ++x) {
        std::uint64_t y = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((x >> perm[i]) & 1) y |= std::uint64_t{1} << i;
        }
        sorted.amplitudes[y] = psi.amplitudes[x];
    }
    return sorted;
}

void apply_pauli(DenseState& psi, const PauliRow& p) {
    static const amp powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const int ys = std::popcount(p.x & p.z);
    const amp base = powers[(ys + (p.negative ? 2 : 0)) % 4];
    std::vector<amp> out(psi.amplitudes.size());
    for (std::uint64_t b = 0; b < psi.amplitudes.size(); ++b) {
        amp v = base * psi.amplitudes[b];
        if (std::popcount(b & p.z) % 2 != 0) v = -v;
        out[b ^ p.x] = v;
    }
    psi.amplitudes = std::move(out);
}

void apply_gate(DenseState& psi, const LocalGate& gate) {
    auto it = std::lower_bound(psi.labels.begin(), psi.labels.end(), gate.qubit);
    if (it == psi.labels.end() || *it != gate.qubit) {
        throw Error(ErrorKind::UnknownVertex, "qubit " + std::to_string(gate.qubit) + " is not in the state");
    }
    const std::uint64_t m = std::uint64_t{1} << (it - psi.labels.begin());
    const double r = 1.0 / std::sqrt(2.0);
    for (std::uint64_t b = 0; b < psi.amplitudes.size(); ++b) {
        if (b & m) continue;
        amp& lo = psi.amplitudes[b];
        amp& hi = psi.amplitudes[b | m];
        switch (gate.kind) {
            case GateKind::H: {
                amp a0 = lo, a1 = hi;
                lo = r * (a0 + a1);
                hi = r * (a0 - a1);
                break;
            }
            case GateKind::S: hi *= amp(0, 1); break;
            case GateKind::Sdg: hi *= amp(0, -1); break;
            case GateKind::Z: hi = -hi; break;
        }
    }
}

DenseState tableau_to_dense(const StabilizerTableau& t, const OracleConfig& config) {
    guard(t.size(), config);
    DenseState psi{t.labels(), std::vector<amp>(std::size_t{1} << t.size())};
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> gauss;
    for (amp& a : psi.amplitudes) a = amp(gauss(rng), gauss(rng));
    for (const PauliRow& g : t.rows()) {
        DenseState moved = psi;
        apply_pauli(moved, g);
        for (std::size_t i = 0; i < psi.amplitudes.size(); ++i) {
            psi.amplitudes[i] = 0.5 * (psi.amplitudes[i] + moved.amplitudes[i]);
        }
    }
    if (psi.norm() < 1e-9) {
        throw std::logic_error("projection onto the stabilizer state vanished");
    }
    normalize(psi);
    return psi;
}

double overlap(const DenseState& a, const DenseState& b) {
    if (a.labels != b.labels) {
        throw Error(ErrorKind::Parameter, "overlap between states on different qubits");
    }
    amp sum = 0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) sum += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return std::abs(sum);
}

}  // namespace qlan::oracle
