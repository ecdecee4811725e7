#include "qsearch/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsearch {

Matrix Matrix::identity(int dim) {
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: inner dimensions differ");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix operator*(cplx scalar, const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = scalar * m(i, j);
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum: shapes differ");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    return a + (cplx{-1.0, 0.0} * b);
}

Matrix dagger(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (int r = 0; r < b.rows(); ++r)
                for (int s = 0; s < b.cols(); ++s)
                    out(i * b.rows() + r, j * b.cols() + s) = aij * b(r, s);
        }
    return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shapes differ");
    double worst = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

bool is_unitary(const Matrix& m, double eps) {
    if (m.rows() != m.cols()) throw std::invalid_argument("is_unitary: matrix not square");
    const Matrix id = Matrix::identity(m.rows());
    const Matrix adj = dagger(m);
    return max_abs_diff(adj * m, id) < eps && max_abs_diff(m * adj, id) < eps;
}

StateVector StateVector::basis(int m, std::uint64_t index) {
    StateVector s(m);
    if (index >= s.dim()) throw std::out_of_range("basis state index out of range");
    s.amps[index] = 1.0;
    return s;
}

StateVector StateVector::uniform(int m) {
    StateVector s(m);
    const double amp = 1.0 / std::sqrt(static_cast<double>(s.dim()));
    for (auto& a : s.amps) a = amp;
    return s;
}

cplx inner(const StateVector& bra, const StateVector& ket) {
    if (bra.num_qubits != ket.num_qubits)
        throw std::invalid_argument("inner product: qubit counts differ");
    cplx acc{};
    for (std::size_t i = 0; i < bra.amps.size(); ++i)
        acc += std::conj(bra.amps[i]) * ket.amps[i];
    return acc;
}

Matrix outer(const StateVector& ket, const StateVector& bra) {
    Matrix out(static_cast<int>(ket.dim()), static_cast<int>(bra.dim()));
    for (int i = 0; i < out.rows(); ++i) {
        if (ket.amps[i] == cplx{}) continue;
        for (int j = 0; j < out.cols(); ++j)
            out(i, j) = ket.amps[i] * std::conj(bra.amps[j]);
    }
    return out;
}

double norm(const StateVector& s) {
    double acc = 0.0;
    for (const auto& a : s.amps) acc += std::norm(a);
    return std::sqrt(acc);
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    StateVector out(a.num_qubits + b.num_qubits);
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        if (a.amps[i] == cplx{}) continue;
        for (std::size_t j = 0; j < b.amps.size(); ++j)
            out.amps[i * b.amps.size() + j] = a.amps[i] * b.amps[j];
    }
    return out;
}

Matrix as_column(const StateVector& s) {
    Matrix out(static_cast<int>(s.dim()), 1);
    for (int i = 0; i < out.rows(); ++i) out(i, 0) = s.amps[i];
    return out;
}

StateVector apply(const Matrix& m, const StateVector& s) {
    if (m.cols() != static_cast<int>(s.dim()))
        throw std::invalid_argument("apply: matrix/state dimensions differ");
    if (m.rows() != m.cols())
        throw std::invalid_argument("apply: matrix not square");
    StateVector out(s.num_qubits);
    for (int i = 0; i < m.rows(); ++i) {
        cplx acc{};
        for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * s.amps[j];
        out.amps[i] = acc;
    }
    return out;
}

bool all_finite(const StateVector& s) {
    for (const auto& a : s.amps)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
    return true;
}

bool all_finite(const Matrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    return true;
}

} // namespace qsearch
