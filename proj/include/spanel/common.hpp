// Shared base types: error type, missing-value convention, row-major matrix.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spanel {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class CovariateKind { quantitative, categorical };

struct FeatureInfo {
    CovariateKind kind = CovariateKind::quantitative;
    int n_levels = 0;  // categorical only
};

inline double missing_value() { return std::numeric_limits<double>::quiet_NaN(); }
inline bool is_missing(double v) { return std::isnan(v); }

// Row-major dense matrix of doubles. NaN encodes a missing cell.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    std::span<const double> row(int i) const {
        return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
    }
    std::span<double> row(int i) {
        return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
    }
    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Shortest decimal form that round-trips a double exactly (%.17g), locale-independent
// digits for model files and CSV output.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace spanel
