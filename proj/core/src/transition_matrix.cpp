#include "cavq/transition_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cavq {

TransitionMatrix::TransitionMatrix(Eigen::MatrixXd probs) : probs_(std::move(probs)) {
    if (probs_.rows() != probs_.cols())
        throw std::invalid_argument("TransitionMatrix: matrix must be square");
    if (probs_.rows() == 0) throw std::invalid_argument("TransitionMatrix: matrix must be nonempty");
    if ((probs_.array() < -1e-12).any())
        throw std::invalid_argument("TransitionMatrix: negative probability entry");
}

TransitionMatrix TransitionMatrix::identity(int size) {
    return TransitionMatrix(Eigen::MatrixXd::Identity(size, size));
}

double TransitionMatrix::max_row_sum_deviation() const {
    return (probs_.rowwise().sum().array() - 1.0).abs().maxCoeff();
}

bool TransitionMatrix::row_stochastic(double tol) const {
    return max_row_sum_deviation() <= tol;
}

TransitionMatrix kronecker(const TransitionMatrix& a, const TransitionMatrix& b) {
    const int na = a.size();
    const int nb = b.size();
    Eigen::MatrixXd out(static_cast<Eigen::Index>(na) * nb, static_cast<Eigen::Index>(na) * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            out.block(static_cast<Eigen::Index>(i) * nb, static_cast<Eigen::Index>(j) * nb, nb, nb) =
                a(i, j) * b.probs();
    return TransitionMatrix(std::move(out));
}

}  // namespace cavq
