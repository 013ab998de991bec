#ifndef KELPSEG_GRID_HPP
#define KELPSEG_GRID_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "kelpseg/errors.hpp"

namespace kelpseg {

// Row-major 2D raster. Used for bands (uint16), masks (uint8) and
// floating-point maps (double).
template <typename T>
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    T* data() { return data_.data(); }
    const T* data() const { return data_.data(); }

    std::vector<T>& raw() { return data_; }
    const std::vector<T>& raw() const { return data_; }

    bool same_shape(const Grid& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    bool operator==(const Grid& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    template <typename U>
    Grid<U> cast() const {
        Grid<U> out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.raw()[i] = static_cast<U>(data_[i]);
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Dense n-dimensional double tensor, row-major. Shapes are explicit;
// the model code indexes it by hand.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape, double fill = 0.0)
        : shape_(std::move(shape)),
          data_(count(shape_), fill) {}

    static std::size_t count(const std::vector<std::size_t>& shape) {
        std::size_t n = 1;
        for (std::size_t d : shape) n *= d;
        return shape.empty() ? 0 : n;
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t dim(std::size_t i) const { return shape_[i]; }
    std::size_t ndim() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& raw() { return data_; }
    const std::vector<double>& raw() const { return data_; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    // CHW accessors for 3-d tensors.
    double& at3(std::size_t c, std::size_t h, std::size_t w) {
        return data_[(c * shape_[1] + h) * shape_[2] + w];
    }
    double at3(std::size_t c, std::size_t h, std::size_t w) const {
        return data_[(c * shape_[1] + h) * shape_[2] + w];
    }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    bool operator==(const Tensor& other) const {
        return shape_ == other.shape_ && data_ == other.data_;
    }

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

using BandGrid = Grid<std::uint16_t>;
using MaskGrid = Grid<std::uint8_t>;
using FloatGrid = Grid<double>;

} // namespace kelpseg

#endif // KELPSEG_GRID_HPP
