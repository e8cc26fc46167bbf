#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dkp {

using Shape = std::vector<int>;

inline int64_t numel(const Shape& s) {
    int64_t n = 1;
    for (int d : s) n *= d;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += "x";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

// Dense row-major float64 array. grad is allocated lazily and only ever
// accumulated into when requires_grad is set.
struct Tensor {
    Shape shape;
    std::vector<double> data;
    bool requires_grad = false;
    std::vector<double> grad;  // empty or same size as data

    Tensor() = default;
    explicit Tensor(Shape s, bool rg = false)
        : shape(std::move(s)), data(static_cast<size_t>(numel(shape)), 0.0), requires_grad(rg) {
        for (int d : shape)
            if (d <= 0) throw std::invalid_argument("tensor: nonpositive dim in " + shape_str(shape));
    }
    Tensor(Shape s, std::vector<double> values, bool rg = false)
        : shape(std::move(s)), data(std::move(values)), requires_grad(rg) {
        if (static_cast<int64_t>(data.size()) != numel(shape))
            throw std::invalid_argument("tensor: data size " + std::to_string(data.size()) +
                                        " does not match shape " + shape_str(shape));
    }

    int64_t size() const { return static_cast<int64_t>(data.size()); }
    int dim(int i) const { return shape[static_cast<size_t>(i)]; }
    int ndim() const { return static_cast<int>(shape.size()); }
    bool is_scalar() const { return size() == 1; }

    void ensure_grad() {
        if (grad.size() != data.size()) grad.assign(data.size(), 0.0);
    }
    void zero_grad() { std::fill(grad.begin(), grad.end(), 0.0); }

    double& at(int64_t i) { return data[static_cast<size_t>(i)]; }
    double at(int64_t i) const { return data[static_cast<size_t>(i)]; }
};

using TensorPtr = std::shared_ptr<Tensor>;

inline TensorPtr make_tensor(Shape s, bool requires_grad = false) {
    return std::make_shared<Tensor>(std::move(s), requires_grad);
}

inline TensorPtr make_tensor(Shape s, std::vector<double> values, bool requires_grad = false) {
    return std::make_shared<Tensor>(std::move(s), std::move(values), requires_grad);
}

inline TensorPtr make_scalar(double v, bool requires_grad = false) {
    return make_tensor({1}, {v}, requires_grad);
}

}  // namespace dkp
