#include "cavq/constellation.hpp"

#include <cmath>
#include <stdexcept>

#include "cavq/rng.hpp"

namespace cavq {

namespace {

/// Gaussian tail probability Q(x) = P(N(0,1) > x).
double q_func(double x) { return 0.5 * std::erfc(x / M_SQRT2); }

}  // namespace

double NoiseSpec::noise_variance() const {
    if (!std::isfinite(snr_db)) throw std::invalid_argument("NoiseSpec: snr_db must be finite");
    return std::pow(10.0, -snr_db / 10.0);
}

double NoiseSpec::sigma_axis() const { return std::sqrt(noise_variance() / 2.0); }

Constellation Constellation::square_qam(int bits_per_symbol) {
    if (bits_per_symbol < 2 || bits_per_symbol > 8 || bits_per_symbol % 2 != 0)
        throw std::invalid_argument("unsupported modulation order: bits per symbol must be in {2,4,6,8}");

    Constellation cst;
    cst.bits_ = bits_per_symbol;
    const int half = bits_per_symbol / 2;
    const int levels = 1 << half;
    const int size = 1 << bits_per_symbol;
    cst.axis_levels_ = levels;
    // Unnormalized grid {+-1, +-3, ...} has mean energy 2(M-1)/3.
    cst.scale_ = std::sqrt(3.0 / (2.0 * (size - 1)));

    cst.points_.resize(size);
    cst.row_.resize(size);
    cst.col_.resize(size);
    for (int symbol = 0; symbol < size; ++symbol) {
        const int row = gray_decode(symbol >> half);
        const int col = gray_decode(symbol & (levels - 1));
        cst.row_[symbol] = row;
        cst.col_[symbol] = col;
        cst.points_[symbol] = {cst.amplitude(row), cst.amplitude(col)};
    }
    return cst;
}

int Constellation::symbol_at(int row, int col) const {
    const int half = bits_ / 2;
    return (gray_encode(row) << half) | gray_encode(col);
}

double Constellation::amplitude(int level) const {
    return (2.0 * level - (axis_levels_ - 1)) * scale_;
}

std::vector<std::complex<double>> modulate(std::span<const int> symbols, const Constellation& cst) {
    std::vector<std::complex<double>> out;
    out.reserve(symbols.size());
    for (int s : symbols) {
        if (s < 0 || s >= cst.size())
            throw std::invalid_argument("modulate: symbol value out of range");
        out.push_back(cst.point(s));
    }
    return out;
}

std::vector<int> demodulate_nn(std::span<const std::complex<double>> received,
                               const Constellation& cst) {
    const auto& pts = cst.points();
    std::vector<int> out;
    out.reserve(received.size());
    for (const auto& r : received) {
        int best = 0;
        double best_d = std::norm(r - pts[0]);
        for (int s = 1; s < cst.size(); ++s) {
            const double d = std::norm(r - pts[s]);
            if (d < best_d) {
                best_d = d;
                best = s;
            }
        }
        out.push_back(best);
    }
    return out;
}

TransitionMatrix transition_matrix_analytic(const Constellation& cst, const NoiseSpec& noise) {
    const int levels = cst.axis_levels();
    const double sigma = noise.sigma_axis();

    // Per-axis PAM transition probabilities. Decision boundaries sit at the
    // midpoints between adjacent levels; the probability of landing in the
    // region of level j given level i was sent is a difference of Q values.
    Eigen::MatrixXd axis(levels, levels);
    for (int i = 0; i < levels; ++i) {
        const double a = cst.amplitude(i);
        for (int j = 0; j < levels; ++j) {
            const double upper =
                (j == levels - 1) ? 0.0 : q_func((cst.amplitude(j) + cst.amplitude(j + 1)) * 0.5 / sigma - a / sigma);
            const double lower =
                (j == 0) ? 1.0 : q_func((cst.amplitude(j - 1) + cst.amplitude(j)) * 0.5 / sigma - a / sigma);
            axis(i, j) = lower - upper;
        }
    }

    const int size = cst.size();
    Eigen::MatrixXd probs(size, size);
    for (int in = 0; in < size; ++in)
        for (int out = 0; out < size; ++out)
            probs(in, out) =
                axis(cst.grid_row(in), cst.grid_row(out)) * axis(cst.grid_col(in), cst.grid_col(out));
    return TransitionMatrix(std::move(probs));
}

TransitionMatrix transition_matrix_monte_carlo(const Constellation& cst, const NoiseSpec& noise,
                                               std::uint64_t n_samples, std::uint64_t seed) {
    if (n_samples == 0)
        throw std::invalid_argument("transition_matrix_monte_carlo: n_samples must be >= 1");

    const int size = cst.size();
    const double sigma = noise.sigma_axis();
    Eigen::MatrixXd probs = Eigen::MatrixXd::Zero(size, size);
    const auto& pts = cst.points();

    for (int in = 0; in < size; ++in) {
        // Independent substream per input symbol; rows can be sampled in any
        // order (or in parallel) without changing the result.
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(in)));
        std::vector<std::int64_t> counts(size, 0);
        const std::complex<double> sent = pts[in];
        for (std::uint64_t k = 0; k < n_samples; ++k) {
            // complex_standard_normal has per-axis variance 1/2; rescale so
            // each axis carries variance sigma^2.
            const std::complex<double> r = sent + sigma * M_SQRT2 * complex_standard_normal(rng);
            int best = 0;
            double best_d = std::norm(r - pts[0]);
            for (int s = 1; s < size; ++s) {
                const double d = std::norm(r - pts[s]);
                if (d < best_d) {
                    best_d = d;
                    best = s;
                }
            }
            ++counts[best];
        }
        for (int out = 0; out < size; ++out)
            probs(in, out) = static_cast<double>(counts[out]) / static_cast<double>(n_samples);
    }
    return TransitionMatrix(std::move(probs));
}

}  // namespace cavq
