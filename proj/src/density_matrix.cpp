// Copyright 2026 The ctele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctele/density_matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace ctele {

namespace {

// Remaining qubits (ascending) after removing `keep` from [0, total).
std::vector<std::size_t> complement(std::size_t total, std::span<const std::size_t> keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial trace needs a nonempty set of kept qubits");
    }
    std::vector<bool> kept(total, false);
    for (auto q : keep) {
        if (q >= total) {
            throw std::out_of_range("kept qubit " + std::to_string(q) + " out of range for " +
                                    std::to_string(total) + " qubits");
        }
        if (kept[q]) {
            throw std::invalid_argument("kept qubit " + std::to_string(q) + " listed twice");
        }
        kept[q] = true;
    }
    std::vector<std::size_t> env;
    for (std::size_t q = 0; q < total; ++q) {
        if (!kept[q]) {
            env.push_back(q);
        }
    }
    return env;
}

Eigen::MatrixXcd to_eigen(const DensityMatrix &rho) {
    const auto dim = static_cast<Eigen::Index>(rho.dimension());
    Eigen::MatrixXcd out(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            out(r, c) = rho(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    return out;
}

Eigen::VectorXd eigenvalues(const DensityMatrix &rho) {
    Eigen::MatrixXcd m = to_eigen(rho);
    // Symmetrize so tiny rounding asymmetries do not leak into the solver.
    m = 0.5 * (m + m.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

}  // namespace

DensityMatrix::DensityMatrix(std::size_t num_qubits, std::vector<Complex> entries)
    : num_qubits_(num_qubits), dimension_(std::size_t{1} << num_qubits), entries_(std::move(entries)) {}

DensityMatrix DensityMatrix::from_state(const StateVector &state) {
    const std::size_t dim = state.dimension();
    std::vector<Complex> out(dim * dim);
    const auto amps = state.amplitudes();
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            out[r * dim + c] = cmul(amps[r], std::conj(amps[c]));
        }
    }
    return DensityMatrix(state.num_qubits(), std::move(out));
}

DensityMatrix DensityMatrix::from_entries(std::size_t num_qubits, std::vector<Complex> row_major) {
    if (num_qubits > 14) {
        throw std::invalid_argument("density matrices are limited to 14 qubits");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (row_major.size() != dim * dim) {
        throw std::invalid_argument("density matrix needs " + std::to_string(dim * dim) + " entries, got " +
                                    std::to_string(row_major.size()));
    }
    for (const auto &z : row_major) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("density matrix entries must be finite");
        }
    }
    DensityMatrix rho(num_qubits, std::move(row_major));
    if (rho.hermiticity_error() > kHermitianTolerance) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > kTraceTolerance) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    if (rho.min_eigenvalue() < -kPsdTolerance) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
    return rho;
}

Complex DensityMatrix::trace() const {
    Complex total{0.0, 0.0};
    for (std::size_t i = 0; i < dimension_; ++i) {
        total += (*this)(i, i);
    }
    return total;
}

double DensityMatrix::hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dimension_; ++r) {
        for (std::size_t c = r; c < dimension_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

double DensityMatrix::min_eigenvalue() const { return eigenvalues(*this).minCoeff(); }

double DensityMatrix::max_eigenvalue() const { return eigenvalues(*this).maxCoeff(); }

double DensityMatrix::off_diagonal_norm() const {
    double total = 0.0;
    for (std::size_t r = 0; r < dimension_; ++r) {
        for (std::size_t c = 0; c < dimension_; ++c) {
            if (r != c) {
                total += std::norm((*this)(r, c));
            }
        }
    }
    return std::sqrt(total);
}

double DensityMatrix::max_abs_diff(const DensityMatrix &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("comparing density matrices of different sizes");
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

double DensityMatrix::expectation(const StateVector &ket) const {
    if (ket.num_qubits() != num_qubits_) {
        throw std::invalid_argument("fidelity: dimension mismatch (" + std::to_string(num_qubits_) + " vs " +
                                    std::to_string(ket.num_qubits()) + " qubits)");
    }
    const auto amps = ket.amplitudes();
    Complex total{0.0, 0.0};
    for (std::size_t r = 0; r < dimension_; ++r) {
        if (amps[r] == Complex{0.0, 0.0}) {
            continue;
        }
        Complex row{0.0, 0.0};
        for (std::size_t c = 0; c < dimension_; ++c) {
            row += (*this)(r, c) * amps[c];
        }
        total += std::conj(amps[r]) * row;
    }
    return total.real();
}

DensityMatrix DensityMatrix::conjugated(const Matrix2 &unitary) const {
    if (num_qubits_ != 1) {
        throw std::invalid_argument("conjugated() applies to single-qubit density matrices");
    }
    Matrix2 rho{{entries_[0], entries_[1], entries_[2], entries_[3]}};
    const Matrix2 out = unitary * rho * unitary.adjoint();
    return DensityMatrix(1, {out.m.begin(), out.m.end()});
}

DensityMatrix partial_trace(const StateVector &state, std::span<const std::size_t> keep) {
    const auto env = complement(state.num_qubits(), keep);
    const std::size_t keep_dim = std::size_t{1} << keep.size();
    const std::size_t env_dim = std::size_t{1} << env.size();

    // Column e of `blocks` holds the kept-subsystem amplitudes conditioned on
    // environment configuration e; rho = sum_e v_e v_e^dagger.
    std::vector<Complex> blocks(keep_dim * env_dim, Complex{0.0, 0.0});
    std::vector<bool> touched(env_dim, false);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (amps[i] == Complex{0.0, 0.0}) {
            continue;
        }
        const auto k = gather_bits(i, keep);
        const auto e = gather_bits(i, env);
        blocks[e * keep_dim + k] = amps[i];
        touched[e] = true;
    }
    std::vector<Complex> out(keep_dim * keep_dim, Complex{0.0, 0.0});
    for (std::size_t e = 0; e < env_dim; ++e) {
        if (!touched[e]) {
            continue;
        }
        const Complex *v = &blocks[e * keep_dim];
        for (std::size_t r = 0; r < keep_dim; ++r) {
            if (v[r] == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t c = 0; c < keep_dim; ++c) {
                out[r * keep_dim + c] += cmul(v[r], std::conj(v[c]));
            }
        }
    }
    return DensityMatrix(keep.size(), std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep) {
    const auto env = complement(rho.num_qubits(), keep);
    const std::size_t keep_dim = std::size_t{1} << keep.size();
    const std::size_t env_dim = std::size_t{1} << env.size();
    std::vector<std::uint64_t> keep_offsets(keep_dim), env_offsets(env_dim);
    for (std::size_t k = 0; k < keep_dim; ++k) {
        keep_offsets[k] = scatter_bits(k, keep);
    }
    for (std::size_t e = 0; e < env_dim; ++e) {
        env_offsets[e] = scatter_bits(e, env);
    }
    std::vector<Complex> out(keep_dim * keep_dim, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < keep_dim; ++r) {
        for (std::size_t c = 0; c < keep_dim; ++c) {
            Complex total{0.0, 0.0};
            for (std::size_t e = 0; e < env_dim; ++e) {
                total += rho(keep_offsets[r] | env_offsets[e], keep_offsets[c] | env_offsets[e]);
            }
            out[r * keep_dim + c] = total;
        }
    }
    return DensityMatrix(keep.size(), std::move(out));
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("fidelity: dimension mismatch (" + std::to_string(a.num_qubits()) + " vs " +
                                    std::to_string(b.num_qubits()) + " qubits)");
    }
    return std::clamp(std::norm(a.inner_product(b)), 0.0, 1.0);
}

double fidelity(const DensityMatrix &rho, const StateVector &b) {
    return std::clamp(rho.expectation(b), 0.0, 1.0);
}

}  // namespace ctele
