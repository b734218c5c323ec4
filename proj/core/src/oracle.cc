// Copyright 2026 The hybridstab Authors
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

#include "hybridstab/oracle.h"

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hybridstab::oracle {

namespace {

using Complex = std::complex<double>;

Complex root_of_unity(std::int64_t numerator, std::int64_t denominator) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(numerator) / static_cast<double>(denominator));
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

std::size_t dense_cap() {
    const char* env = std::getenv("HYBRIDSTAB_DENSE_CAP");
    if (env == nullptr) return kDefaultDenseCap;
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value == 0) return kDefaultDenseCap;
    return value;
}

std::size_t dense_dimension(int qudit_dim, int num_sites) {
    const std::size_t cap = dense_cap();
    std::size_t dim = 1;
    for (int j = 0; j < num_sites; ++j) {
        dim *= static_cast<std::size_t>(qudit_dim);
        if (dim > cap) {
            throw CapExceeded("dense dimension " + std::to_string(qudit_dim) + "^" + std::to_string(num_sites) +
                              " exceeds the cap of " + std::to_string(cap));
        }
    }
    return dim;
}

namespace {

// M |c> = value[c] |image[c]>; every rendered Pauli has this shape.
struct Monomial {
    std::vector<std::size_t> image;
    std::vector<Complex> value;

    Monomial operator*(const Monomial& rhs) const {
        Monomial out;
        out.image.resize(rhs.image.size());
        out.value.resize(rhs.value.size());
        for (std::size_t c = 0; c < rhs.image.size(); ++c) {
            out.image[c] = image[rhs.image[c]];
            out.value[c] = value[rhs.image[c]] * rhs.value[c];
        }
        return out;
    }
};

Monomial identity_monomial(std::size_t dim) {
    Monomial out;
    out.image.resize(dim);
    for (std::size_t c = 0; c < dim; ++c) out.image[c] = c;
    out.value.assign(dim, Complex(1.0, 0.0));
    return out;
}

Monomial monomial(const PauliOperator& g) {
    const int d = g.qudit_dim();
    const int n = g.num_sites();
    const std::size_t dim = dense_dimension(d, n);
    const Complex global = root_of_unity(g.phase_exp(), 2 * static_cast<std::int64_t>(d));
    Monomial out;
    out.image.resize(dim);
    out.value.resize(dim);
    std::vector<int> digits(n, 0);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t row = 0;
        std::int64_t clock = 0;
        for (int j = 0; j < n; ++j) {
            row = row * d + (digits[j] + g.x(j)) % d;
            clock += static_cast<std::int64_t>(g.z(j)) * digits[j];
        }
        out.image[col] = row;
        out.value[col] = global * root_of_unity(clock % d, d);
        for (int j = n - 1; j >= 0 && ++digits[j] == d; --j) digits[j] = 0;
    }
    return out;
}

void accumulate(const Monomial& m, DenseOperator& target) {
    for (std::size_t c = 0; c < m.image.size(); ++c) {
        target(static_cast<Eigen::Index>(m.image[c]), static_cast<Eigen::Index>(c)) += m.value[c];
    }
}

void accumulate_group(const std::vector<Monomial>& factors, const std::vector<std::int64_t>& orders, std::size_t depth,
                      const Monomial& prefix, DenseOperator& target) {
    if (depth == factors.size()) {
        accumulate(prefix, target);
        return;
    }
    Monomial current = prefix;
    for (std::int64_t k = 0; k < orders[depth]; ++k) {
        accumulate_group(factors, orders, depth + 1, current, target);
        current = current * factors[depth];
    }
}

}  // namespace

DenseOperator render(const PauliOperator& g) {
    const Monomial m = monomial(g);
    const auto dim = static_cast<Eigen::Index>(m.image.size());
    DenseOperator out = DenseOperator::Zero(dim, dim);
    accumulate(m, out);
    return out;
}

DenseOperator stabilizer_projector(const PauliSubgroup& stabilizer) {
    const int d = stabilizer.qudit_dim();
    if (stabilizer.includes_all_phases() || !stabilizer.abelian() || stabilizer.scalar_step() != 2 * d) {
        throw std::invalid_argument("stabilizer_projector requires an abelian group without scalars");
    }
    const std::size_t dim = dense_dimension(d, stabilizer.num_sites());
    const auto& orders = stabilizer.echelon().basis_orders();
    std::size_t count = 1;
    for (auto order : orders) {
        count *= static_cast<std::size_t>(order);
        if (count > (std::size_t{1} << 20)) throw std::invalid_argument("stabilizer group too large to enumerate");
    }
    // Products of powers of the basis elements with exponents below their
    // orders visit every group element exactly once.
    std::vector<Monomial> factors;
    for (const auto& b : stabilizer.basis_elements()) factors.push_back(monomial(b));
    DenseOperator sum = DenseOperator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    accumulate_group(factors, orders, 0, identity_monomial(dim), sum);
    return sum / static_cast<double>(count);
}

Eigen::MatrixXcd orthonormal_basis(const Eigen::MatrixXcd& m, double tolerance) {
    if (m.cols() == 0) return Eigen::MatrixXcd(m.rows(), 0);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
    const auto& values = svd.singularValues();
    if (values.size() == 0 || values(0) == 0.0) return Eigen::MatrixXcd(m.rows(), 0);
    Eigen::Index rank = 0;
    while (rank < values.size() && values(rank) > tolerance * values(0)) ++rank;
    return svd.matrixU().leftCols(rank);
}

Eigen::MatrixXcd projector_range(const DenseOperator& projector) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(projector);
    const auto& values = solver.eigenvalues();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (values(i) > 0.5) keep.push_back(i);
    }
    Eigen::MatrixXcd basis(projector.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) basis.col(static_cast<Eigen::Index>(c)) = solver.eigenvectors().col(keep[c]);
    return basis;
}

double subspace_residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    const Eigen::MatrixXcd qa = orthonormal_basis(a);
    const Eigen::MatrixXcd qb = orthonormal_basis(b);
    if (qa.cols() != qb.cols()) return 1.0;
    if (qa.cols() == 0) return 0.0;
    // ||(I - Qa Qa^dagger) Qb||_2 is the sine of the largest principal angle.
    const Eigen::MatrixXcd outside = qb - qa * (qa.adjoint() * qb);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(outside);
    return svd.singularValues()(0);
}

double check_coset_orthogonality(const HybridCode& code) {
    const DenseOperator p = stabilizer_projector(code.stabilizer());
    const auto& transversal = code.transversal();
    std::vector<DenseOperator> rendered;
    for (const auto& g : transversal) rendered.push_back(render(g));
    double residual = 0;
    for (std::size_t i = 0; i < rendered.size(); ++i) {
        for (std::size_t j = 0; j < rendered.size(); ++j) {
            if (i == j) continue;
            const DenseOperator middle = rendered[i].adjoint() * rendered[j];
            residual = std::max(residual, max_abs(p * middle * p));
        }
    }
    return residual;
}

SubsystemCheck check_subsystem_structure(const HybridCode& code) {
    SubsystemCheck out;
    const int d = code.qudit_dim();
    const DenseOperator p = stabilizer_projector(code.stabilizer());
    const Eigen::MatrixXcd basis = projector_range(p);
    out.code_dimension = static_cast<std::size_t>(basis.cols());
    out.expected_dimension = 1;
    for (const auto* pairs : {&code.gauge_pairs(), &code.logical_pairs()}) {
        for (const auto& [a, b] : *pairs) {
            out.expected_dimension *= static_cast<std::size_t>(zmod::additive_order(symplectic_form(a, b), d));
        }
    }

    auto restrict = [&](const PauliOperator& g) -> Eigen::MatrixXcd { return basis.adjoint() * render(g) * basis; };
    std::vector<Eigen::MatrixXcd> gauge, logical;
    for (const auto& g : code.gauge_generators()) gauge.push_back(restrict(g));
    for (const auto& g : code.logical_generators()) logical.push_back(restrict(g));
    for (const auto& g : gauge) {
        for (const auto& l : logical) out.commutation_residual = std::max(out.commutation_residual, max_abs(g * l - l * g));
    }

    const std::size_t r = out.code_dimension;
    if (r == 0) return out;
    if (r > kCommutantCap) {
        throw CapExceeded("code dimension " + std::to_string(r) + " exceeds the commutant cap of " +
                          std::to_string(kCommutantCap));
    }
    // vec(M Y - Y M) = (I (x) M - M^T (x) I) vec(Y); the commutant is the
    // common null space of the stacked system over all restricted generators.
    const auto rr = static_cast<Eigen::Index>(r * r);
    const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r));
    auto kron = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
        Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
        return out;
    };
    const auto count = static_cast<Eigen::Index>(gauge.size() + logical.size());
    if (count == 0) {
        out.commutant_dimension = r * r;
        return out;
    }
    Eigen::MatrixXcd system(count * rr, rr);
    Eigen::Index block = 0;
    for (const auto* group : {&gauge, &logical}) {
        for (const auto& m : *group) system.middleRows(rr * block++, rr) = kron(identity, m) - kron(m.transpose(), identity);
    }
    // Rank from singular values of the stacked system, not of its Gram matrix.
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(system);
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) < 1e-8) ++out.commutant_dimension;
    }
    return out;
}

bool check_oaqec_conditions(const HybridCode& code, const std::vector<PauliOperator>& errors) {
    const SubsystemCheck structure = check_subsystem_structure(code);
    if (!structure.passed()) throw Refusal("code fails the subsystem structure check; the OAQEC test would be unreliable");

    const DenseOperator p = stabilizer_projector(code.stabilizer());
    std::vector<DenseOperator> sectors;
    std::vector<DenseOperator> generators;
    DenseOperator q = DenseOperator::Zero(p.rows(), p.cols());
    for (const auto& g : code.transversal()) {
        const DenseOperator rendered = render(g);
        const DenseOperator pi = rendered * p * rendered.adjoint();
        q += pi;
        generators.push_back(pi);
        for (const auto& l : code.logical_generators()) generators.push_back(pi * (rendered * render(l) * rendered.adjoint()) * pi);
    }

    std::vector<DenseOperator> rendered_errors;
    for (const auto& e : errors) rendered_errors.push_back(render(e));
    for (const auto& ek : rendered_errors) {
        for (const auto& el : rendered_errors) {
            const DenseOperator m = q * ek.adjoint() * el * q;
            for (const auto& x : generators) {
                if (max_abs(m * x - x * m) >= 1e-8) return false;
            }
        }
    }
    return true;
}

DegeneracyCheck check_degeneracy_example(int z_step) {
    constexpr int d = 18;
    const HybridCode code = build_gkp18();
    const DenseOperator p = stabilizer_projector(code.stabilizer());
    DenseOperator q = DenseOperator::Zero(p.rows(), p.cols());
    for (const auto& g : code.transversal()) {
        const DenseOperator rendered = render(g);
        q += rendered * p * rendered.adjoint();
    }
    const Eigen::MatrixXcd hybrid_space = projector_range(q);
    auto z_power = [&](int k) { return render(PauliOperator::single(d, 1, 0, 0, static_cast<std::uint32_t>(((k % d) + d) % d))); };

    DegeneracyCheck out;
    const Eigen::MatrixXcd base = z_power(z_step) * hybrid_space;
    out.z7_residual = subspace_residual(base, z_power(z_step + 6) * hybrid_space);
    out.z13_residual = subspace_residual(base, z_power(z_step + 12) * hybrid_space);

    const Eigen::MatrixXcd images[] = {
        orthonormal_basis(z_power(z_step) * hybrid_space),
        orthonormal_basis(z_power(3 * z_step) * hybrid_space),
        orthonormal_basis(z_power(5 * z_step) * hybrid_space),
    };
    out.orthogonality_residual = 0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) out.orthogonality_residual = std::max(out.orthogonality_residual, max_abs(images[i].adjoint() * images[j]));
    }

    const DenseOperator x = render(PauliOperator::single(d, 1, 0, 1, 0));
    const Eigen::MatrixXcd shifted = orthonormal_basis(x * projector_range(p));
    const Complex scalar = root_of_unity(6, d);
    out.z6_scalar_residual = max_abs(z_power(6) * shifted - scalar * shifted);
    return out;
}

}  // namespace hybridstab::oracle
