#pragma once

#include "radalign/tensor.hpp"

namespace radalign::nn {

enum class Reduction { sum, mean };

// Elementwise logistic sigmoid.
double sigmoid(double x);

// Binary cross entropy over probabilities, targets in [0,1]. Probabilities
// are clamped into [1e-7, 1 - 1e-7] before the logs; within the clamp range
// the gradient is exact, outside it is 0 (gradient of the clamped function).
// Reduction is over all elements.
double bce_loss(const Tensor& p, const Tensor& y, Reduction reduction, Tensor* dp = nullptr);

// Binary-symmetric label smoothing: y' = y*(1-eps) + eps/2, eps in [0,1).
Tensor smooth_labels(const Tensor& y, double epsilon);

// Voxelwise sigmoid BCE between mask logits and {0,1} masks, mean-reduced over
// structures and voxels. Uses the numerically stable logit form.
double aux_seg_loss(const Tensor& mask_logits, const Tensor& masks, Tensor* d_logits = nullptr);

// S[i][j] = z_i . t_j over {N,d} embedding matrices. With l2_normalize the
// rows of both matrices are scaled to unit norm first (zero-norm rows are an
// error).
Tensor similarity_matrix(const Tensor& Z, const Tensor& T, bool l2_normalize);

// Symmetric contrastive loss: coefficient * -(1/2N) * sum_i of the log row
// and column softmax probabilities of the diagonal. Temperature is fixed to 1
// (no hidden scaling); softmaxes subtract the row/column max for stability.
double clip_loss(const Tensor& S, double coefficient, Tensor* dS = nullptr);

}  // namespace radalign::nn
