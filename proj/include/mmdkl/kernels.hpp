#ifndef MMDKL_KERNELS_HPP
#define MMDKL_KERNELS_HPP

#include <string>

#include "mmdkl/types.hpp"

namespace mmdkl {

enum class KernelFamily {
    GaussianRbf,        // k(x,y) = exp(-gamma * ||x-y||^2)
    InversePolynomial,  // k(x,y) = (1 + ||x-y||^2)^(-gamma)
};

std::string family_name(KernelFamily family);
KernelFamily family_from_name(const std::string& name);

// Elementwise bijective map applied to each sample before kernel evaluation.
// Identity by default; affine-diagonal otherwise (scale must be nonzero).
class Transform {
public:
    Transform() = default;

    static Transform identity() { return Transform{}; }
    static Transform affine_diagonal(Vector scale, Vector offset);

    bool is_identity() const { return scale_.size() == 0; }
    Index dim() const { return scale_.size(); }
    const Vector& scale() const { return scale_; }
    const Vector& offset() const { return offset_; }

    Vector apply(const Vector& x) const;
    Matrix apply_rows(const Matrix& rows) const;

    bool operator==(const Transform& other) const;

private:
    Vector scale_;   // empty means identity
    Vector offset_;
};

struct KernelSpec {
    KernelFamily family = KernelFamily::GaussianRbf;
    double gamma = 1.0;
    Transform pre_transform;

    static KernelSpec rbf(double gamma) { return {KernelFamily::GaussianRbf, gamma, {}}; }
    static KernelSpec inverse_polynomial(double gamma) {
        return {KernelFamily::InversePolynomial, gamma, {}};
    }
    KernelSpec with_transform(Transform t) const { return {family, gamma, std::move(t)}; }
};

struct GramMatrix {
    Matrix entries;  // rows index the left set, columns the right set

    Index left_n() const { return entries.rows(); }
    Index right_n() const { return entries.cols(); }
};

double eval_kernel(const KernelSpec& spec, const Vector& x, const Vector& y);

GramMatrix gram(const KernelSpec& spec, const SampleSet& left, const SampleSet& right);

// max_x k(x,x); equals 1 for both supported families, transformed or not.
double sup_bound(const KernelSpec& spec, const SampleSet* domain_hint = nullptr);

// Scalar kernel value from a precomputed squared distance.
double kernel_from_sqdist(const KernelSpec& spec, double sqdist);

// entries(i,j) = ||a_i - b_j||^2, evaluated pairwise (no factored expansion,
// so gram() stays bit-identical to per-entry eval_kernel).
Matrix pairwise_sqdist(const Matrix& a, const Matrix& b);

} // namespace mmdkl

#endif // MMDKL_KERNELS_HPP
