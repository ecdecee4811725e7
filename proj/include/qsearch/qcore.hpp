#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qsearch {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

// Library-wide tolerances: one for norms/amplitudes, one for dense-matrix
// comparisons. Every check in the library and tests refers to these.
inline constexpr double kAmpTol = 1e-12;
inline constexpr double kMatTol = 1e-10;

// Dense complex matrix, row-major. One dimension may be 1, so kets and bras
// can be fed through the same tensor-product machinery as operators.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static Matrix identity(int dim);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const cplx& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cplx scalar, const Matrix& m);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Conjugate transpose.
Matrix dagger(const Matrix& m);

/// Kronecker product of arbitrary p×q and r×s matrices (block formula).
Matrix tensor(const Matrix& a, const Matrix& b);

/// Largest entrywise |a(i,j) - b(i,j)|; shapes must match.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// True iff max-norm of both U†U − I and UU† − I is below eps.
bool is_unitary(const Matrix& m, double eps = kMatTol);

// State of m qubits as 2^m amplitudes; index i labels basis state |i> whose
// binary expansion j1 j2 ... jm has qubit 0 as the MOST significant bit, so
// |101> lives at index 5.
struct StateVector {
    int num_qubits = 0;
    std::vector<cplx> amps;

    StateVector() = default;
    explicit StateVector(int m)
        : num_qubits(m), amps(std::size_t{1} << m) {}

    static StateVector basis(int m, std::uint64_t index);
    static StateVector uniform(int m);

    std::uint64_t dim() const { return amps.size(); }
};

/// <bra|ket>; conjugate-linear in the first argument.
cplx inner(const StateVector& bra, const StateVector& ket);

/// |ket><bra| as a dense dim(ket) × dim(bra) matrix.
Matrix outer(const StateVector& ket, const StateVector& bra);

/// sqrt(sum |amps_i|^2).
double norm(const StateVector& s);

StateVector tensor(const StateVector& a, const StateVector& b);

/// The state as a 2^m × 1 column, for feeding vectors into matrix code.
Matrix as_column(const StateVector& s);

/// Dense matrix–vector product; the brute-force oracle the tests check
/// in-place kernels against.
StateVector apply(const Matrix& m, const StateVector& s);

bool all_finite(const StateVector& s);
bool all_finite(const Matrix& m);

} // namespace qsearch
