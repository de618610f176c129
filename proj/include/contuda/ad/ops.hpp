#pragma once

#include <optional>
#include <vector>

#include "contuda/ad/tensor.hpp"

namespace contuda::ad {

// ---- elementwise binary (right-aligned broadcasting) ----
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor div(const Tensor& a, const Tensor& b);

Tensor add(const Tensor& a, double b);
Tensor sub(const Tensor& a, double b);
Tensor sub(double a, const Tensor& b);
Tensor mul(const Tensor& a, double b);
Tensor div(const Tensor& a, double b);
Tensor div(double a, const Tensor& b);

inline Tensor operator+(const Tensor& a, const Tensor& b) { return add(a, b); }
inline Tensor operator-(const Tensor& a, const Tensor& b) { return sub(a, b); }
inline Tensor operator*(const Tensor& a, const Tensor& b) { return mul(a, b); }
inline Tensor operator/(const Tensor& a, const Tensor& b) { return div(a, b); }
inline Tensor operator+(const Tensor& a, double b) { return add(a, b); }
inline Tensor operator+(double a, const Tensor& b) { return add(b, a); }
inline Tensor operator-(const Tensor& a, double b) { return sub(a, b); }
inline Tensor operator-(double a, const Tensor& b) { return sub(a, b); }
inline Tensor operator*(const Tensor& a, double b) { return mul(a, b); }
inline Tensor operator*(double a, const Tensor& b) { return mul(b, a); }
inline Tensor operator/(const Tensor& a, double b) { return div(a, b); }
inline Tensor operator/(double a, const Tensor& b) { return div(a, b); }

Tensor neg(const Tensor& a);
inline Tensor operator-(const Tensor& a) { return neg(a); }

// ---- elementwise unary ----
Tensor exp(const Tensor& a);
Tensor log(const Tensor& a);
Tensor sqrt(const Tensor& a);
Tensor abs(const Tensor& a);
Tensor tanh(const Tensor& a);
Tensor sigmoid(const Tensor& a);
Tensor softplus(const Tensor& a);
Tensor relu(const Tensor& a);
Tensor leaky_relu(const Tensor& a, double slope);
Tensor square(const Tensor& a);
Tensor pow_scalar(const Tensor& a, double p);
Tensor clamp_min(const Tensor& a, double lo);

// ---- reductions ----
Tensor sum(const Tensor& a);
Tensor sum(const Tensor& a, const std::vector<long>& axes, bool keepdims = false);
Tensor mean(const Tensor& a);
Tensor mean(const Tensor& a, const std::vector<long>& axes, bool keepdims = false);

// Row-wise max along `axis`, returned as a constant (no gradient). Intended
// for numerically-stable softmax shifts, where the max cancels analytically.
Tensor max_detached(const Tensor& a, long axis, bool keepdims = true);

// ---- shape ----
Tensor reshape(const Tensor& a, Shape shape);
Tensor permute(const Tensor& a, const std::vector<long>& perm);
Tensor concat(const std::vector<Tensor>& parts, long axis);
Tensor slice(const Tensor& a, long axis, long start, long len);
Tensor detach(const Tensor& a);

// ---- linear algebra ----
// [m,k] x [k,n] -> [m,n]
Tensor matmul(const Tensor& a, const Tensor& b);

// ---- gather / scatter (mutual vjps; both linear maps) ----
// out.value[i] = a.value[idx[i]]
Tensor gather_linear(const Tensor& a, std::shared_ptr<const std::vector<long>> idx,
                     Shape out_shape);
// out.value[idx[i]] += a.value[i]; out has shape out_shape
Tensor scatter_linear(const Tensor& a, std::shared_ptr<const std::vector<long>> idx,
                      Shape out_shape);
// rows of a 2-D table
Tensor gather_rows(const Tensor& table, const std::vector<long>& rows);

// ---- image patch extraction (conv support; mutual vjps) ----
// x: [N,C,H,W] -> [N*OH*OW, C*KH*KW] with zero padding.
Tensor im2col(const Tensor& x, long kh, long kw, long stride, long pad);
Tensor col2im(const Tensor& cols, Shape x_shape, long kh, long kw, long stride,
              long pad);

// ---- composites ----
// w: [OC,IC,KH,KW], b (optional): [OC]
Tensor conv2d(const Tensor& x, const Tensor& w, const Tensor& b, long stride,
              long pad);
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);  // w: [out,in]
Tensor global_avg_pool(const Tensor& x);      // [N,C,H,W] -> [N,C]
Tensor upsample_nearest2x(const Tensor& x);   // [N,C,H,W] -> [N,C,2H,2W]
Tensor max_pool2d(const Tensor& x, long k, long stride);

// Constant one-hot matrix [n, num_classes].
Tensor one_hot(const std::vector<int>& idx, long num_classes);

bool all_finite(const Tensor& a);

}  // namespace contuda::ad
