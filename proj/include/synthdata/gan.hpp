#pragma once

// A small adversarial pair trained from scratch: generator and discriminator
// are both 3-layer perceptrons,
//   G(z) = sigmoid(W3 . relu(W2 . relu(W1 . z + b1) + b2) + b3)
// and the discriminator has the same shape with a single sigmoid output.
// Losses are the binary cross-entropy forms
//   disc loss = -[log D(x_real) + log(1 - D(G(z)))]
//   gen  loss = -log D(G(z))
// averaged over the batch, with probabilities clamped to [1e-7, 1 - 1e-7]
// before the logs. Training is plain SGD with strict 1:1 alternation.
//
// Batches are row-major: each row of a Matrix is one example.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "synthdata/dataset.hpp"
#include "synthdata/matrix.hpp"
#include "synthdata/rng.hpp"

namespace synthdata {

inline constexpr double kProbClamp = 1e-7;

struct LayerSizes {
    std::size_t in = 0;
    std::size_t h1 = 0;
    std::size_t h2 = 0;
    std::size_t out = 0;
};

/// Weights and biases of one 3-layer perceptron. W1 is h1 x in, W2 is
/// h2 x h1, W3 is out x h2; biases match the destination layer.
struct MlpParams {
    Matrix w1, w2, w3;
    std::vector<double> b1, b2, b3;

    LayerSizes sizes() const {
        return LayerSizes{w1.cols(), w1.rows(), w2.rows(), w3.rows()};
    }
};

/// Gradients shaped exactly like MlpParams.
struct MlpGrads {
    Matrix w1, w2, w3;
    std::vector<double> b1, b2, b3;
};

namespace detail {

inline void check_mlp_shapes(const MlpParams& p) {
    if (p.w2.cols() != p.w1.rows() || p.w3.cols() != p.w2.rows() ||
        p.b1.size() != p.w1.rows() || p.b2.size() != p.w2.rows() ||
        p.b3.size() != p.w3.rows()) {
        throw ShapeError("MlpParams: inconsistent layer dimensions");
    }
}

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// z = x . w^T + b, x is batch x in, w is out x in.
inline Matrix affine(const Matrix& x, const Matrix& w, const std::vector<double>& b) {
    if (x.cols() != w.cols()) {
        throw ShapeError("mlp: input width " + std::to_string(x.cols()) +
                         " does not match layer fan-in " + std::to_string(w.cols()));
    }
    Matrix z(x.rows(), w.rows());
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t o = 0; o < w.rows(); ++o) {
            double acc = b[o];
            for (std::size_t i = 0; i < x.cols(); ++i) acc += x(r, i) * w(o, i);
            z(r, o) = acc;
        }
    }
    return z;
}

inline Matrix relu(const Matrix& z) {
    Matrix a = z;
    for (double& v : a.data()) v = v > 0.0 ? v : 0.0;
    return a;
}

}  // namespace detail

/// Forward pass with retained pre-activations, for backprop.
struct MlpTrace {
    Matrix z1, a1, z2, a2, z3, out;
};

inline MlpTrace mlp_forward_trace(const MlpParams& p, const Matrix& x) {
    detail::check_mlp_shapes(p);
    MlpTrace t;
    t.z1 = detail::affine(x, p.w1, p.b1);
    t.a1 = detail::relu(t.z1);
    t.z2 = detail::affine(t.a1, p.w2, p.b2);
    t.a2 = detail::relu(t.z2);
    t.z3 = detail::affine(t.a2, p.w3, p.b3);
    t.out = t.z3;
    for (double& v : t.out.data()) v = detail::sigmoid(v);
    return t;
}

/// Plain forward pass: sigmoid(W3 . relu(W2 . relu(W1 . x + b1) + b2) + b3).
inline Matrix mlp_forward(const MlpParams& p, const Matrix& x) {
    return mlp_forward_trace(p, x).out;
}

/// Exact gradients of a scalar loss through the 3-layer composition, given
/// dLoss/d(out). The ReLU subgradient at 0 is 0. When `d_input` is non-null
/// it receives dLoss/d(x), which is how generator gradients flow through a
/// frozen discriminator.
inline MlpGrads mlp_backward(const MlpParams& p, const Matrix& x, const MlpTrace& t,
                             const Matrix& d_out, Matrix* d_input = nullptr) {
    detail::check_mlp_shapes(p);
    if (d_out.rows() != t.out.rows() || d_out.cols() != t.out.cols()) {
        throw ShapeError("mlp_backward: upstream gradient shape mismatch");
    }
    const std::size_t batch = x.rows();

    // dz3 = d_out * sigmoid'(z3), sigmoid' = out (1 - out)
    Matrix dz3(batch, t.out.cols());
    for (std::size_t r = 0; r < batch; ++r) {
        for (std::size_t o = 0; o < t.out.cols(); ++o) {
            const double s = t.out(r, o);
            dz3(r, o) = d_out(r, o) * s * (1.0 - s);
        }
    }

    MlpGrads g;
    g.w3 = Matrix(p.w3.rows(), p.w3.cols());
    g.b3.assign(p.b3.size(), 0.0);
    for (std::size_t r = 0; r < batch; ++r) {
        for (std::size_t o = 0; o < p.w3.rows(); ++o) {
            const double d = dz3(r, o);
            g.b3[o] += d;
            for (std::size_t i = 0; i < p.w3.cols(); ++i) g.w3(o, i) += d * t.a2(r, i);
        }
    }

    Matrix dz2(batch, p.w2.rows());
    for (std::size_t r = 0; r < batch; ++r) {
        for (std::size_t i = 0; i < p.w2.rows(); ++i) {
            double acc = 0.0;
            for (std::size_t o = 0; o < p.w3.rows(); ++o) acc += dz3(r, o) * p.w3(o, i);
            dz2(r, i) = t.z2(r, i) > 0.0 ? acc : 0.0;
        }
    }
    g.w2 = Matrix(p.w2.rows(), p.w2.cols());
    g.b2.assign(p.b2.size(), 0.0);
    for (std::size_t r = 0; r < batch; ++r) {
        for (std::size_t o = 0; o < p.w2.rows(); ++o) {
            const double d = dz2(r, o);
            g.b2[o] += d;
            for (std::size_t i = 0; i < p.w2.cols(); ++i) g.w2(o, i) += d * t.a1(r, i);
        }
    }

    Matrix dz1(batch, p.w1.rows());
    for (std::size_t r = 0; r < batch; ++r) {
        for (std::size_t i = 0; i < p.w1.rows(); ++i) {
            double acc = 0.0;
            for (std::size_t o = 0; o < p.w2.rows(); ++o) acc += dz2(r, o) * p.w2(o, i);
            dz1(r, i) = t.z1(r, i) > 0.0 ? acc : 0.0;
        }
    }
    g.w1 = Matrix(p.w1.rows(), p.w1.cols());
    g.b1.assign(p.b1.size(), 0.0);
    for (std::size_t r = 0; r < batch; ++r) {
        for (std::size_t o = 0; o < p.w1.rows(); ++o) {
            const double d = dz1(r, o);
            g.b1[o] += d;
            for (std::size_t i = 0; i < p.w1.cols(); ++i) g.w1(o, i) += d * x(r, i);
        }
    }

    if (d_input != nullptr) {
        *d_input = Matrix(batch, p.w1.cols());
        for (std::size_t r = 0; r < batch; ++r) {
            for (std::size_t i = 0; i < p.w1.cols(); ++i) {
                double acc = 0.0;
                for (std::size_t o = 0; o < p.w1.rows(); ++o) acc += dz1(r, o) * p.w1(o, i);
                (*d_input)(r, i) = acc;
            }
        }
    }
    return g;
}

namespace detail {

inline double clamp_prob(double p) {
    return std::min(1.0 - kProbClamp, std::max(kProbClamp, p));
}

}  // namespace detail

/// Discriminator loss: mean of -log D(x_real) plus mean of -log(1 - D(G(z))),
/// probabilities clamped to [1e-7, 1-1e-7]. Always finite and >= 0.
inline double disc_loss(const std::vector<double>& d_real, const std::vector<double>& d_fake) {
    if (d_real.empty() || d_fake.empty()) {
        throw EmptyInputError("disc_loss: probability batches must be nonempty");
    }
    double real_term = 0.0;
    for (double p : d_real) real_term += -std::log(detail::clamp_prob(p));
    double fake_term = 0.0;
    for (double p : d_fake) fake_term += -std::log(1.0 - detail::clamp_prob(p));
    return real_term / static_cast<double>(d_real.size()) +
           fake_term / static_cast<double>(d_fake.size());
}

/// Generator loss: mean of -log D(G(z)), clamped as above.
inline double gen_loss(const std::vector<double>& d_fake) {
    if (d_fake.empty()) {
        throw EmptyInputError("gen_loss: probability batch must be nonempty");
    }
    double acc = 0.0;
    for (double p : d_fake) acc += -std::log(detail::clamp_prob(p));
    return acc / static_cast<double>(d_fake.size());
}

namespace detail {

inline std::vector<double> first_column(const Matrix& m) {
    std::vector<double> v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, 0);
    return v;
}

inline bool inside_clamp(double p) {
    return p > kProbClamp && p < 1.0 - kProbClamp;
}

inline void accumulate(MlpGrads& into, const MlpGrads& grads) {
    for (std::size_t i = 0; i < into.w1.data().size(); ++i) into.w1.data()[i] += grads.w1.data()[i];
    for (std::size_t i = 0; i < into.w2.data().size(); ++i) into.w2.data()[i] += grads.w2.data()[i];
    for (std::size_t i = 0; i < into.w3.data().size(); ++i) into.w3.data()[i] += grads.w3.data()[i];
    for (std::size_t i = 0; i < into.b1.size(); ++i) into.b1[i] += grads.b1[i];
    for (std::size_t i = 0; i < into.b2.size(); ++i) into.b2[i] += grads.b2[i];
    for (std::size_t i = 0; i < into.b3.size(); ++i) into.b3[i] += grads.b3[i];
}

}  // namespace detail

/// Gradients of disc_loss with respect to every discriminator parameter,
/// given a real batch and an (already generated, detached) fake batch.
inline MlpGrads disc_loss_grads(const MlpParams& d, const Matrix& real_batch,
                                const Matrix& fake_batch, double* loss_out = nullptr) {
    if (d.w3.rows() != 1) {
        throw ShapeError("disc_loss_grads: discriminator must have one output");
    }
    const MlpTrace real_trace = mlp_forward_trace(d, real_batch);
    const MlpTrace fake_trace = mlp_forward_trace(d, fake_batch);
    const double m_real = static_cast<double>(real_batch.rows());
    const double m_fake = static_cast<double>(fake_batch.rows());

    // d/dp of -log(clamp(p)) and -log(1 - clamp(p)); zero where the clamp is
    // active so the gradient matches the actual (clamped) loss.
    Matrix d_real_out(real_batch.rows(), 1);
    for (std::size_t r = 0; r < real_batch.rows(); ++r) {
        const double p = real_trace.out(r, 0);
        d_real_out(r, 0) = detail::inside_clamp(p) ? -1.0 / (m_real * p) : 0.0;
    }
    Matrix d_fake_out(fake_batch.rows(), 1);
    for (std::size_t r = 0; r < fake_batch.rows(); ++r) {
        const double p = fake_trace.out(r, 0);
        d_fake_out(r, 0) = detail::inside_clamp(p) ? 1.0 / (m_fake * (1.0 - p)) : 0.0;
    }

    MlpGrads grads = mlp_backward(d, real_batch, real_trace, d_real_out);
    const MlpGrads fake_grads = mlp_backward(d, fake_batch, fake_trace, d_fake_out);
    detail::accumulate(grads, fake_grads);
    if (loss_out != nullptr) {
        *loss_out = disc_loss(detail::first_column(real_trace.out),
                              detail::first_column(fake_trace.out));
    }
    return grads;
}

/// Gradients of gen_loss with respect to every generator parameter; the
/// discriminator is frozen and only routes the gradient back to its input.
inline MlpGrads gen_loss_grads(const MlpParams& g, const MlpParams& d,
                               const Matrix& z_batch, double* loss_out = nullptr) {
    if (d.w3.rows() != 1) {
        throw ShapeError("gen_loss_grads: discriminator must have one output");
    }
    const MlpTrace g_trace = mlp_forward_trace(g, z_batch);
    const MlpTrace d_trace = mlp_forward_trace(d, g_trace.out);
    const double m = static_cast<double>(z_batch.rows());

    Matrix d_out(z_batch.rows(), 1);
    for (std::size_t r = 0; r < z_batch.rows(); ++r) {
        const double p = d_trace.out(r, 0);
        d_out(r, 0) = detail::inside_clamp(p) ? -1.0 / (m * p) : 0.0;
    }
    Matrix d_fake_data;
    mlp_backward(d, g_trace.out, d_trace, d_out, &d_fake_data);
    if (loss_out != nullptr) {
        *loss_out = gen_loss(detail::first_column(d_trace.out));
    }
    return mlp_backward(g, z_batch, g_trace, d_fake_data);
}

// ---- Training ---------------------------------------------------------------

struct GanConfig {
    std::size_t noise_dim = 8;
    std::size_t hidden1 = 32;
    std::size_t hidden2 = 32;
    double learning_rate = 0.01;
    std::size_t batch_size = 64;
    std::size_t epochs = 2000;  // number of batch steps (one D + one G update each)
    std::uint64_t seed = 0;
};

/// Per-column min-max scaling retained with the model; training happens on
/// (x - min) / (max - min) and samples are mapped back.
struct ColumnScaling {
    std::string name;
    double min = 0.0;
    double max = 1.0;
};

struct TrainStep {
    std::size_t step;
    double d_loss;
    double g_loss;
};

/// Post-training spread diagnostic: per-column sample std of a fixed
/// 1000-row generator draw against the real column std. `collapse_warning`
/// flags columns whose synthetic spread fell below 5% of the real spread.
struct CollapseDiagnostic {
    std::string column;
    double real_std = 0.0;
    double synth_std = 0.0;
    bool collapse_warning = false;
};

struct TrainLog {
    std::vector<TrainStep> steps;
    std::vector<CollapseDiagnostic> diagnostics;
};

struct GanModel {
    GanConfig config;
    std::vector<ColumnScaling> scaling;
    MlpParams generator;
    MlpParams discriminator;
};

struct TrainResult {
    GanModel model;
    TrainLog log;
};

namespace detail {

// Symmetric uniform init, half-width sqrt(6/(fan_in+fan_out)); biases zero.
inline MlpParams init_mlp(const LayerSizes& sz, RngStream& stream) {
    auto init_matrix = [&stream](std::size_t rows, std::size_t cols) {
        const double s = std::sqrt(6.0 / static_cast<double>(rows + cols));
        Matrix m(rows, cols);
        for (double& v : m.data()) v = stream.next_uniform(-s, s);
        return m;
    };
    MlpParams p;
    p.w1 = init_matrix(sz.h1, sz.in);
    p.w2 = init_matrix(sz.h2, sz.h1);
    p.w3 = init_matrix(sz.out, sz.h2);
    p.b1.assign(sz.h1, 0.0);
    p.b2.assign(sz.h2, 0.0);
    p.b3.assign(sz.out, 0.0);
    return p;
}

inline void sgd_update(MlpParams& p, const MlpGrads& g, double lr) {
    for (std::size_t i = 0; i < p.w1.data().size(); ++i) p.w1.data()[i] -= lr * g.w1.data()[i];
    for (std::size_t i = 0; i < p.w2.data().size(); ++i) p.w2.data()[i] -= lr * g.w2.data()[i];
    for (std::size_t i = 0; i < p.w3.data().size(); ++i) p.w3.data()[i] -= lr * g.w3.data()[i];
    for (std::size_t i = 0; i < p.b1.size(); ++i) p.b1[i] -= lr * g.b1[i];
    for (std::size_t i = 0; i < p.b2.size(); ++i) p.b2[i] -= lr * g.b2[i];
    for (std::size_t i = 0; i < p.b3.size(); ++i) p.b3[i] -= lr * g.b3[i];
}

inline Matrix draw_noise(RngStream& stream, std::size_t rows, std::size_t dim) {
    Matrix z(rows, dim);
    for (double& v : z.data()) v = stream.next_standard_normal();
    return z;
}

}  // namespace detail

/// Samples n rows from a trained (or freshly initialized) generator and maps
/// them back to the original column ranges. Noise is drawn row-major from the
/// caller's stream; every output cell lies inside [min, max] of its column.
inline Dataset gan_sample(const MlpParams& generator,
                          const std::vector<ColumnScaling>& scaling, std::size_t n,
                          RngStream& stream) {
    const LayerSizes sz = generator.sizes();
    if (scaling.size() != sz.out) {
        throw ShapeError("gan_sample: scaling entries (" + std::to_string(scaling.size()) +
                         ") do not match generator outputs (" + std::to_string(sz.out) + ")");
    }
    std::vector<Column> cols;
    cols.reserve(scaling.size());
    for (const auto& s : scaling) cols.push_back(Column{s.name, std::vector<double>(n)});
    if (n > 0) {
        const Matrix z = detail::draw_noise(stream, n, sz.in);
        const Matrix y = mlp_forward(generator, z);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < scaling.size(); ++c) {
                cols[c].values[r] =
                    scaling[c].min + (scaling[c].max - scaling[c].min) * y(r, c);
            }
        }
    }
    return Dataset(std::move(cols));
}

inline Dataset gan_sample(const GanModel& model, std::size_t n, RngStream& stream) {
    return gan_sample(model.generator, model.scaling, n, stream);
}

/// Adversarial training: per step, one discriminator SGD update on
/// (real batch, fresh fake batch) followed by one generator update on a fresh
/// noise batch. Sub-streams of the seed: 0 generator init, 1 discriminator
/// init, 2 training draws, 3 collapse diagnostics.
inline TrainResult train_gan(const Dataset& real_data, const GanConfig& cfg) {
    if (real_data.n_rows() == 0 || real_data.n_cols() == 0) {
        throw EmptyInputError("train_gan: training dataset is empty");
    }
    if (cfg.noise_dim < 1 || cfg.hidden1 < 1 || cfg.hidden2 < 1 || cfg.batch_size < 1) {
        throw DomainError("train_gan: sizes must all be >= 1");
    }
    if (!(cfg.learning_rate > 0.0)) {
        throw DomainError("train_gan: learning rate must be positive");
    }
    const std::size_t k = real_data.n_cols();
    const std::size_t n = real_data.n_rows();

    std::vector<ColumnScaling> scaling;
    scaling.reserve(k);
    for (const auto& col : real_data.columns()) {
        const auto [lo_it, hi_it] = std::minmax_element(col.values.begin(), col.values.end());
        if (*lo_it == *hi_it) {
            throw DegenerateColumnError("train_gan: degenerate scaling, column \"" +
                                        col.name + "\" is constant");
        }
        scaling.push_back(ColumnScaling{col.name, *lo_it, *hi_it});
    }
    Matrix scaled(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        const auto& v = real_data.column(c).values;
        const double span = scaling[c].max - scaling[c].min;
        for (std::size_t r = 0; r < n; ++r) scaled(r, c) = (v[r] - scaling[c].min) / span;
    }

    RngStream root(cfg.seed);
    RngStream g_init = root.substream(0);
    RngStream d_init = root.substream(1);
    RngStream train_stream = root.substream(2);

    TrainResult result;
    result.model.config = cfg;
    result.model.scaling = scaling;
    result.model.generator =
        detail::init_mlp(LayerSizes{cfg.noise_dim, cfg.hidden1, cfg.hidden2, k}, g_init);
    result.model.discriminator =
        detail::init_mlp(LayerSizes{k, cfg.hidden1, cfg.hidden2, 1}, d_init);

    result.log.steps.reserve(cfg.epochs);
    Matrix real_batch(cfg.batch_size, k);
    for (std::size_t step = 1; step <= cfg.epochs; ++step) {
        for (std::size_t r = 0; r < cfg.batch_size; ++r) {
            const std::size_t pick = train_stream.next_index(n);
            for (std::size_t c = 0; c < k; ++c) real_batch(r, c) = scaled(pick, c);
        }
        const Matrix z1 = detail::draw_noise(train_stream, cfg.batch_size, cfg.noise_dim);
        const Matrix fake = mlp_forward(result.model.generator, z1);

        double d_loss_value = 0.0;
        const MlpGrads d_grads =
            disc_loss_grads(result.model.discriminator, real_batch, fake, &d_loss_value);
        detail::sgd_update(result.model.discriminator, d_grads, cfg.learning_rate);

        const Matrix z2 = detail::draw_noise(train_stream, cfg.batch_size, cfg.noise_dim);
        double g_loss_value = 0.0;
        const MlpGrads g_grads = gen_loss_grads(result.model.generator,
                                                result.model.discriminator, z2, &g_loss_value);
        detail::sgd_update(result.model.generator, g_grads, cfg.learning_rate);

        if (!std::isfinite(d_loss_value) || !std::isfinite(g_loss_value)) {
            throw Error("train_gan: non-finite loss at step " + std::to_string(step));
        }
        result.log.steps.push_back(TrainStep{step, d_loss_value, g_loss_value});
    }

    // Spread diagnostic on a fixed 1000-row draw; collapse is a warning in
    // the log, never an error.
    RngStream diag_stream = root.substream(3);
    const Dataset probe = gan_sample(result.model, 1000, diag_stream);
    for (std::size_t c = 0; c < k; ++c) {
        CollapseDiagnostic diag;
        diag.column = real_data.column(c).name;
        diag.real_std = column_stats(real_data, diag.column).std;
        diag.synth_std = column_stats(probe, diag.column).std;
        diag.collapse_warning = diag.synth_std < 0.05 * diag.real_std;
        result.log.diagnostics.push_back(diag);
    }
    return result;
}

// ---- Persistence --------------------------------------------------------------

namespace detail {

inline nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const nlohmann::json& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.at(0).size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows.at(i).size() != c) throw ParseError("model: ragged weight matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows.at(i).at(j).get<double>();
    }
    return m;
}

inline nlohmann::json mlp_to_json(const MlpParams& p) {
    return nlohmann::json{{"w1", matrix_to_json(p.w1)}, {"b1", p.b1},
                          {"w2", matrix_to_json(p.w2)}, {"b2", p.b2},
                          {"w3", matrix_to_json(p.w3)}, {"b3", p.b3}};
}

inline MlpParams mlp_from_json(const nlohmann::json& j) {
    MlpParams p;
    p.w1 = matrix_from_json(j.at("w1"));
    p.w2 = matrix_from_json(j.at("w2"));
    p.w3 = matrix_from_json(j.at("w3"));
    p.b1 = j.at("b1").get<std::vector<double>>();
    p.b2 = j.at("b2").get<std::vector<double>>();
    p.b3 = j.at("b3").get<std::vector<double>>();
    check_mlp_shapes(p);
    return p;
}

}  // namespace detail

/// Model document: a single JSON text holding layer sizes, every weight and
/// bias, the min-max scaling parameters, and the training config. Numbers are
/// serialized losslessly, so save/load round-trips bit-exactly.
inline std::string save_gan_model(const GanModel& model) {
    const LayerSizes g = model.generator.sizes();
    nlohmann::json scaling = nlohmann::json::array();
    for (const auto& s : model.scaling) {
        scaling.push_back({{"name", s.name}, {"min", s.min}, {"max", s.max}});
    }
    const nlohmann::json doc{
        {"format", "synthdata-gan-model"},
        {"version", 1},
        {"config",
         {{"noise_dim", model.config.noise_dim},
          {"hidden1", model.config.hidden1},
          {"hidden2", model.config.hidden2},
          {"learning_rate", model.config.learning_rate},
          {"batch_size", model.config.batch_size},
          {"epochs", model.config.epochs},
          {"seed", model.config.seed}}},
        {"layer_sizes", {g.in, g.h1, g.h2, g.out}},
        {"scaling", scaling},
        {"generator", detail::mlp_to_json(model.generator)},
        {"discriminator", detail::mlp_to_json(model.discriminator)},
    };
    return doc.dump(2) + "\n";
}

inline GanModel load_gan_model(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("model: invalid JSON: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != "synthdata-gan-model") {
            throw ParseError("model: unrecognized format field");
        }
        GanModel model;
        const auto& cfg = doc.at("config");
        model.config.noise_dim = cfg.at("noise_dim").get<std::size_t>();
        model.config.hidden1 = cfg.at("hidden1").get<std::size_t>();
        model.config.hidden2 = cfg.at("hidden2").get<std::size_t>();
        model.config.learning_rate = cfg.at("learning_rate").get<double>();
        model.config.batch_size = cfg.at("batch_size").get<std::size_t>();
        model.config.epochs = cfg.at("epochs").get<std::size_t>();
        model.config.seed = cfg.at("seed").get<std::uint64_t>();
        for (const auto& s : doc.at("scaling")) {
            model.scaling.push_back(ColumnScaling{s.at("name").get<std::string>(),
                                                  s.at("min").get<double>(),
                                                  s.at("max").get<double>()});
        }
        model.generator = detail::mlp_from_json(doc.at("generator"));
        model.discriminator = detail::mlp_from_json(doc.at("discriminator"));
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("model: missing or mistyped field: ") + e.what());
    }
}

inline void save_gan_model_file(const GanModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("model: cannot open \"" + path + "\" for writing");
    out << save_gan_model(model);
}

inline GanModel load_gan_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("model: cannot open file \"" + path + "\"");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_gan_model(text);
}

}  // namespace synthdata
