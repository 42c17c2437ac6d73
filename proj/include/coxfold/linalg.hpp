#pragma once

// Small dense exact linear algebra over Q(tau). Matrices here are at most
// 9x9 (extended Cartan of E8), so plain Gaussian elimination over the field
// is all we need.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxfold/golden.hpp"

namespace coxfold {

using GVec = std::vector<Golden>;

class GMat {
  public:
    GMat() : rows_(0), cols_(0) {}
    GMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), d_(rows * cols) {}

    static GMat identity(std::size_t n) {
        GMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Golden(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Golden& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const Golden& operator()(std::size_t i, std::size_t j) const {
        return d_[i * cols_ + j];
    }

    friend bool operator==(const GMat& x, const GMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.d_ == y.d_;
    }
    friend bool operator!=(const GMat& x, const GMat& y) { return !(x == y); }

  private:
    std::size_t rows_, cols_;
    std::vector<Golden> d_;
};

GMat operator*(const GMat& x, const GMat& y);
GVec operator*(const GMat& m, const GVec& v);
GMat operator+(const GMat& x, const GMat& y);
GMat operator-(const GMat& x, const GMat& y);
GMat transpose(const GMat& m);

GVec operator+(const GVec& x, const GVec& y);
GVec operator-(const GVec& x, const GVec& y);
GVec operator*(const Golden& c, const GVec& v);
Golden dot(const GVec& x, const GVec& y);

inline GVec negate(const GVec& v) { return Golden(-1) * v; }
inline bool is_zero(const GVec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Golden determinant(GMat m);
GMat inverse(GMat m);                 // throws on singular input
GVec solve(const GMat& m, GVec rhs);  // m square, throws on singular input

// Least-integer-free keys for hashing exact values in sets and maps.
std::string key_of(const GVec& v);
std::string key_of(const GMat& m);

}  // namespace coxfold
