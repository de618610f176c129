#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "contuda/common/error.hpp"
#include "contuda/common/rng.hpp"

namespace contuda::ad {

class Shape {
 public:
  Shape() = default;
  Shape(std::initializer_list<long> dims) : dims_(dims) {}
  explicit Shape(std::vector<long> dims) : dims_(std::move(dims)) {}

  long rank() const { return static_cast<long>(dims_.size()); }
  long operator[](long i) const { return dims_[static_cast<std::size_t>(i)]; }
  const std::vector<long>& dims() const { return dims_; }

  long numel() const {
    long n = 1;
    for (long d : dims_) n *= d;
    return n;
  }

  bool operator==(const Shape& o) const { return dims_ == o.dims_; }
  bool operator!=(const Shape& o) const { return dims_ != o.dims_; }

  std::string str() const;

 private:
  std::vector<long> dims_;
};

class Tensor;
// Vector-Jacobian product: maps the gradient w.r.t. this node's output to
// gradients w.r.t. each parent (an undefined Tensor skips a parent).
using VjpFn = std::function<std::vector<Tensor>(const Tensor&)>;

struct Node {
  std::vector<double> value;
  Shape shape;
  bool requires_grad = false;
  std::vector<Tensor> parents;
  VjpFn vjp;
  std::uint64_t seq = 0;
  const char* op = "leaf";
};

// Reverse-mode autodiff tensor. Ops record the tape only while it is enabled
// (see TapeGuard); vjp closures are built from the same op set, so taking
// gradients of gradients works by re-entering grad() with create_graph=true.
class Tensor {
 public:
  Tensor() = default;

  static Tensor from_data(Shape shape, std::vector<double> value,
                          bool requires_grad = false);
  static Tensor scalar(double v);
  static Tensor zeros(Shape shape);
  static Tensor ones(Shape shape);
  static Tensor full(Shape shape, double v);
  static Tensor randn(Shape shape, Rng& rng, double stddev = 1.0);
  static Tensor uniform(Shape shape, Rng& rng, double lo, double hi);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const { return node_->shape; }
  long numel() const { return node_->shape.numel(); }
  long dim(long i) const { return node_->shape[i]; }

  const std::vector<double>& value() const { return node_->value; }
  // Mutable access to the raw buffer. Only for leaf parameters updated
  // in-place between graph builds (optimizer steps, EMA, checkpoint load).
  std::vector<double>& raw() { return node_->value; }

  double item() const;

  bool requires_grad() const { return node_ && node_->requires_grad; }
  Tensor& set_requires_grad(bool v) {
    node_->requires_grad = v;
    return *this;
  }

  // Copy of the value with the graph history dropped.
  Tensor detached(bool requires_grad = false) const;

  std::shared_ptr<Node> node() const { return node_; }

  static Tensor wrap(std::shared_ptr<Node> n) {
    Tensor t;
    t.node_ = std::move(n);
    return t;
  }

 private:
  std::shared_ptr<Node> node_;
};

bool tape_enabled();

// Scoped switch for graph recording. Constructing ops with the tape off
// yields plain eager evaluation (no parents, no vjp).
class TapeGuard {
 public:
  explicit TapeGuard(bool enabled);
  ~TapeGuard();
  TapeGuard(const TapeGuard&) = delete;
  TapeGuard& operator=(const TapeGuard&) = delete;

 private:
  bool saved_;
};

// Creates an op node: records parents/vjp only when the tape is on and some
// parent requires grad.
Tensor make_op(Shape shape, std::vector<double> value,
               std::vector<Tensor> parents, VjpFn vjp, const char* op_name);

// d(loss)/d(wrt[i]) for a scalar loss. With create_graph=true the returned
// tensors are themselves differentiable. Unreached targets yield zeros.
std::vector<Tensor> grad(const Tensor& loss, const std::vector<Tensor>& wrt,
                         bool create_graph = false);

}  // namespace contuda::ad
