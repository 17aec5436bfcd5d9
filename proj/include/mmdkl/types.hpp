#ifndef MMDKL_TYPES_HPP
#define MMDKL_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace mmdkl {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Invalid arguments, shape mismatches, malformed input files.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Failed factorizations and results outside numerical tolerances.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense sample matrix, one row per sample.
class SampleSet {
public:
    explicit SampleSet(Matrix data) : data_(std::move(data)) {
        if (data_.rows() < 1 || data_.cols() < 1) {
            throw input_error("SampleSet: need at least one sample and one dimension");
        }
        if (!data_.allFinite()) {
            throw input_error("SampleSet: entries must be finite");
        }
    }

    const Matrix& data() const { return data_; }
    Index size() const { return data_.rows(); }
    Index dim() const { return data_.cols(); }
    Eigen::RowVectorXd row(Index i) const { return data_.row(i); }

private:
    Matrix data_;
};

} // namespace mmdkl

#endif // MMDKL_TYPES_HPP
