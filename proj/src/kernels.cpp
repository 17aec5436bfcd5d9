#include "mmdkl/kernels.hpp"

#include <cmath>
#include <utility>

namespace mmdkl {

std::string family_name(KernelFamily family) {
    switch (family) {
        case KernelFamily::GaussianRbf: return "rbf";
        case KernelFamily::InversePolynomial: return "invpoly";
    }
    throw input_error("unknown kernel family");
}

KernelFamily family_from_name(const std::string& name) {
    if (name == "rbf") return KernelFamily::GaussianRbf;
    if (name == "invpoly") return KernelFamily::InversePolynomial;
    throw input_error("unknown kernel family '" + name + "' (expected rbf|invpoly)");
}

Transform Transform::affine_diagonal(Vector scale, Vector offset) {
    if (scale.size() != offset.size()) {
        throw input_error("Transform: scale and offset dimensions differ");
    }
    if (scale.size() == 0) {
        throw input_error("Transform: empty scale");
    }
    if ((scale.array() == 0.0).any()) {
        throw input_error("Transform: scale entries must be nonzero (bijectivity)");
    }
    Transform t;
    t.scale_ = std::move(scale);
    t.offset_ = std::move(offset);
    return t;
}

Vector Transform::apply(const Vector& x) const {
    if (is_identity()) return x;
    if (x.size() != scale_.size()) {
        throw input_error("Transform: input dimension does not match transform");
    }
    return (scale_.array() * x.array() + offset_.array()).matrix();
}

Matrix Transform::apply_rows(const Matrix& rows) const {
    if (is_identity()) return rows;
    if (rows.cols() != scale_.size()) {
        throw input_error("Transform: sample dimension does not match transform");
    }
    Matrix out = rows.array().rowwise() * scale_.transpose().array();
    out.rowwise() += offset_.transpose();
    return out;
}

bool Transform::operator==(const Transform& other) const {
    return scale_.size() == other.scale_.size() && scale_ == other.scale_ &&
           offset_ == other.offset_;
}

namespace {

void check_gamma(const KernelSpec& spec) {
    if (!(spec.gamma > 0.0)) {
        throw input_error("KernelSpec: gamma must be positive");
    }
}

} // namespace

double kernel_from_sqdist(const KernelSpec& spec, double sqdist) {
    switch (spec.family) {
        case KernelFamily::GaussianRbf:
            return std::exp(-spec.gamma * sqdist);
        case KernelFamily::InversePolynomial:
            return std::pow(1.0 + sqdist, -spec.gamma);
    }
    throw input_error("unknown kernel family");
}

double eval_kernel(const KernelSpec& spec, const Vector& x, const Vector& y) {
    check_gamma(spec);
    if (x.size() != y.size()) {
        throw input_error("eval_kernel: x and y dimensions differ");
    }
    const Vector gx = spec.pre_transform.apply(x);
    const Vector gy = spec.pre_transform.apply(y);
    return kernel_from_sqdist(spec, (gx - gy).squaredNorm());
}

Matrix pairwise_sqdist(const Matrix& a, const Matrix& b) {
    Matrix d(a.rows(), b.cols() == a.cols() ? b.rows() : 0);
    if (a.cols() != b.cols()) {
        throw input_error("pairwise_sqdist: sample dimensions differ");
    }
    for (Index j = 0; j < b.rows(); ++j) {
        for (Index i = 0; i < a.rows(); ++i) {
            d(i, j) = (a.row(i) - b.row(j)).squaredNorm();
        }
    }
    return d;
}

GramMatrix gram(const KernelSpec& spec, const SampleSet& left, const SampleSet& right) {
    check_gamma(spec);
    if (left.dim() != right.dim()) {
        throw input_error("gram: left and right sample dimensions differ");
    }
    const Matrix gl = spec.pre_transform.apply_rows(left.data());
    const Matrix gr = spec.pre_transform.apply_rows(right.data());
    Matrix d = pairwise_sqdist(gl, gr);
    switch (spec.family) {
        case KernelFamily::GaussianRbf:
            d = (-spec.gamma * d.array()).exp();
            break;
        case KernelFamily::InversePolynomial:
            d = Eigen::exp(-spec.gamma * Eigen::log1p(d.array()));
            break;
    }
    return GramMatrix{std::move(d)};
}

double sup_bound(const KernelSpec& spec, const SampleSet* /*domain_hint*/) {
    check_gamma(spec);
    // k(x,x) = kernel at zero distance = 1 for both families; the pre-transform
    // cannot change the diagonal since g(x) = g(x).
    return 1.0;
}

} // namespace mmdkl
