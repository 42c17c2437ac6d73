#include "coxfold/linalg.hpp"

namespace coxfold {

GMat operator*(const GMat& x, const GMat& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matmul shape mismatch");
    GMat r(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const Golden& xv = x(i, k);
            if (xv.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) {
                const Golden& yv = y(k, j);
                if (yv.is_zero()) continue;
                r(i, j) += xv * yv;
            }
        }
    }
    return r;
}

GVec operator*(const GMat& m, const GVec& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matvec shape mismatch");
    GVec r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += m(i, j) * v[j];
        }
    }
    return r;
}

GMat operator+(const GMat& x, const GMat& y) {
    GMat r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) + y(i, j);
    return r;
}

GMat operator-(const GMat& x, const GMat& y) {
    GMat r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) - y(i, j);
    return r;
}

GMat transpose(const GMat& m) {
    GMat r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
    return r;
}

GVec operator+(const GVec& x, const GVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vec add shape mismatch");
    GVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

GVec operator-(const GVec& x, const GVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vec sub shape mismatch");
    GVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

GVec operator*(const Golden& c, const GVec& v) {
    GVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Golden dot(const GVec& x, const GVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot shape mismatch");
    Golden r;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero() || y[i].is_zero()) continue;
        r += x[i] * y[i];
    }
    return r;
}

Golden determinant(GMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
    const std::size_t n = m.rows();
    Golden det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Golden();
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        Golden inv = golden_inverse(m(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            Golden f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

// Gauss-Jordan on [m | rhs].
static void eliminate(GMat& m, GMat& rhs) {
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                std::swap(rhs(pivot, j), rhs(col, j));
        }
        Golden inv = golden_inverse(m(col, col));
        for (std::size_t j = 0; j < n; ++j) m(col, j) *= inv;
        for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(col, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col).is_zero()) continue;
            Golden f = m(i, col);
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(col, j);
            for (std::size_t j = 0; j < rhs.cols(); ++j)
                rhs(i, j) -= f * rhs(col, j);
        }
    }
}

GMat inverse(GMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square");
    GMat rhs = GMat::identity(m.rows());
    eliminate(m, rhs);
    return rhs;
}

GVec solve(const GMat& m, GVec rhs) {
    if (m.rows() != m.cols() || m.rows() != rhs.size())
        throw std::invalid_argument("solve shape mismatch");
    GMat a = m;
    GMat b(m.rows(), 1);
    for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
    eliminate(a, b);
    GVec out(m.rows());
    for (std::size_t i = 0; i < rhs.size(); ++i) out[i] = b(i, 0);
    return out;
}

std::string key_of(const GVec& v) {
    std::string s;
    for (const auto& c : v) {
        s += to_string(c);
        s += ';';
    }
    return s;
}

std::string key_of(const GMat& m) {
    std::string s = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            s += to_string(m(i, j));
            s += ';';
        }
    return s;
}

}  // namespace coxfold
