#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cavq/transition_matrix.hpp"

namespace cavq {

/// Reflected-binary Gray code of k and its inverse.
inline int gray_encode(int k) { return k ^ (k >> 1); }
inline int gray_decode(int g) {
    int k = 0;
    for (; g; g >>= 1) k ^= g;
    return k;
}

/// Equalized AWGN noise level. snr_db is the ratio of unit symbol energy
/// to the total complex noise variance sigma^2; each I/Q axis then carries
/// variance sigma^2 / 2.
struct NoiseSpec {
    double snr_db = 0.0;

    double noise_variance() const;  // sigma^2
    double sigma_axis() const;      // sqrt(sigma^2 / 2)
};

/// Square QAM constellation with unit average symbol energy.
///
/// Symbols are indexed by their transmitted bit pattern: symbol value v
/// carries label bits v (MSB first). Geometrically the points live on an
/// L x L grid (L = 2^(m_c/2)); the label of grid cell (row, col) is the
/// concatenation gray(row) | gray(col), in-phase bits first, so that
/// axis-adjacent points always differ in exactly one bit.
class Constellation {
   public:
    /// Builds a square QAM constellation. bits_per_symbol must be one of
    /// {2, 4, 6, 8}.
    static Constellation square_qam(int bits_per_symbol);

    int bits_per_symbol() const { return bits_; }
    int size() const { return static_cast<int>(points_.size()); }
    int axis_levels() const { return axis_levels_; }

    std::complex<double> point(int symbol) const { return points_[symbol]; }
    const std::vector<std::complex<double>>& points() const { return points_; }

    /// Grid position of a symbol (in-phase level index, quadrature level index).
    int grid_row(int symbol) const { return row_[symbol]; }
    int grid_col(int symbol) const { return col_[symbol]; }
    /// Symbol value (= label) sitting at a grid cell.
    int symbol_at(int row, int col) const;
    /// Coordinate of a per-axis level index after energy normalization.
    double amplitude(int level) const;

   private:
    Constellation() = default;

    int bits_ = 0;
    int axis_levels_ = 0;
    double scale_ = 1.0;
    std::vector<std::complex<double>> points_;  // indexed by symbol value
    std::vector<int> row_, col_;                // per symbol value
};

/// Maps symbol values to constellation points. Rejects out-of-range values.
std::vector<std::complex<double>> modulate(std::span<const int> symbols, const Constellation& cst);

/// Nearest-neighbor demodulation; ties resolve to the lowest symbol value.
std::vector<int> demodulate_nn(std::span<const std::complex<double>> received,
                               const Constellation& cst);

/// Exact symbol transition probabilities under equalized AWGN, computed as
/// the product of two per-axis PAM transition probabilities (differences of
/// Gaussian tail integrals at the decision boundaries).
TransitionMatrix transition_matrix_analytic(const Constellation& cst, const NoiseSpec& noise);

/// Empirical transition probabilities from n_samples noisy transmissions
/// per input symbol. Deterministic for a fixed seed.
TransitionMatrix transition_matrix_monte_carlo(const Constellation& cst, const NoiseSpec& noise,
                                               std::uint64_t n_samples, std::uint64_t seed);

}  // namespace cavq
