#pragma once

#include <Eigen/Dense>

namespace cavq {

/// Row-stochastic square matrix over a discrete alphabet.
/// Entry (i, j) is the probability of receiving symbol j given that
/// symbol i was transmitted. Rows and columns are indexed by the
/// transmitted bit pattern of the symbol.
class TransitionMatrix {
   public:
    TransitionMatrix() = default;
    explicit TransitionMatrix(Eigen::MatrixXd probs);

    static TransitionMatrix identity(int size);

    int size() const { return static_cast<int>(probs_.rows()); }
    double operator()(int in, int out) const { return probs_(in, out); }
    const Eigen::MatrixXd& probs() const { return probs_; }

    /// Largest |row sum - 1| over all rows.
    double max_row_sum_deviation() const;
    bool row_stochastic(double tol = 1e-9) const;

   private:
    Eigen::MatrixXd probs_;
};

/// Kronecker product; the first factor supplies the high-order digits of
/// the composite alphabet.
TransitionMatrix kronecker(const TransitionMatrix& a, const TransitionMatrix& b);

}  // namespace cavq
