#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wharf {

using cplx = std::complex<double>;
using Vec = std::vector<cplx>;

/// Dense complex matrix, row-major.
struct CMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    Vec data;

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, cplx(0.0, 0.0)) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    cplx& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    std::size_t size() const { return data.size(); }
    bool square() const { return rows == cols; }

    CMatrix adjoint() const {
        CMatrix out(cols, rows);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    cplx trace() const {
        cplx t = 0;
        for (std::size_t i = 0; i < rows && i < cols; ++i) t += (*this)(i, i);
        return t;
    }

    CMatrix& operator+=(const CMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < data.size(); ++i) data[i] -= o.data[i];
        return *this;
    }
    CMatrix& operator*=(cplx s) {
        for (auto& v : data) v *= s;
        return *this;
    }

    void check_same_shape(const CMatrix& o) const {
        if (rows != o.rows || cols != o.cols)
            throw std::invalid_argument("matrix shape mismatch");
    }
};

inline CMatrix operator+(CMatrix a, const CMatrix& b) { a += b; return a; }
inline CMatrix operator-(CMatrix a, const CMatrix& b) { a -= b; return a; }
inline CMatrix operator*(cplx s, CMatrix a) { a *= s; return a; }

/// Eigen-decomposition result of a Hermitian matrix.
struct EigReport {
    std::vector<double> eigenvalues;   // ascending
    CMatrix eigenvectors;              // columns, empty when values-only
    bool hermitian_flag = true;
};

double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool all_finite(const CMatrix& m);

}  // namespace wharf
