#include "qmra/wavelet.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qmra/error.hpp"

namespace qmra {

namespace {

std::size_t wrap(std::ptrdiff_t n, std::size_t len) {
    const auto l = static_cast<std::ptrdiff_t>(len);
    return static_cast<std::size_t>(((n % l) + l) % l);
}

void require_even(std::size_t n) {
    if (n == 0 || n % 2 != 0) {
        throw ShapeError("filter step needs an even, non-empty sequence, got length " + std::to_string(n));
    }
}

} // namespace

FilterPair FilterPair::haar() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {{s, s}, {s, -s}};
}

std::size_t PyramidDecomposition::coefficient_count() const {
    std::size_t n = approximation.size();
    for (const auto& d : details) n += d.size();
    return n;
}

std::pair<std::vector<double>, std::vector<double>> haar_step(std::span<const double> s) {
    require_even(s.size());
    const double r = std::numbers::sqrt2;
    std::vector<double> approx(s.size() / 2), detail(s.size() / 2);
    for (std::size_t k = 0; k < approx.size(); ++k) {
        approx[k] = (s[2 * k] + s[2 * k + 1]) / r;
        detail[k] = (s[2 * k] - s[2 * k + 1]) / r;
    }
    return {approx, detail};
}

std::pair<std::vector<double>, std::vector<double>> analysis_step(std::span<const double> s,
                                                                  const FilterPair& f) {
    require_even(s.size());
    const std::size_t half = s.size() / 2;
    std::vector<double> approx(half, 0.0), detail(half, 0.0);
    for (std::size_t i = 0; i < half; ++i) {
        for (std::size_t t = 0; t < f.h.size(); ++t) {
            approx[i] += f.h[t] * s[wrap(static_cast<std::ptrdiff_t>(t + 2 * i), s.size())];
        }
        for (std::size_t t = 0; t < f.g.size(); ++t) {
            detail[i] += f.g[t] * s[wrap(static_cast<std::ptrdiff_t>(t + 2 * i), s.size())];
        }
    }
    return {approx, detail};
}

std::vector<double> synthesis_step(std::span<const double> approx, std::span<const double> detail,
                                   const FilterPair& f) {
    if (approx.size() != detail.size() || approx.empty()) {
        throw ShapeError("approximation and detail must have equal, non-zero length");
    }
    const std::size_t len = 2 * approx.size();
    std::vector<double> out(len, 0.0);
    for (std::size_t i = 0; i < approx.size(); ++i) {
        for (std::size_t t = 0; t < f.h.size(); ++t) {
            out[wrap(static_cast<std::ptrdiff_t>(t + 2 * i), len)] += f.h[t] * approx[i];
        }
        for (std::size_t t = 0; t < f.g.size(); ++t) {
            out[wrap(static_cast<std::ptrdiff_t>(t + 2 * i), len)] += f.g[t] * detail[i];
        }
    }
    return out;
}

double reconstruction_error(const FilterPair& f, std::span<const double> signal) {
    const auto [a, d] = analysis_step(signal, f);
    const auto back = synthesis_step(a, d, f);
    double err = 0.0;
    for (std::size_t i = 0; i < signal.size(); ++i) err = std::max(err, std::abs(back[i] - signal[i]));
    return err;
}

PyramidDecomposition pyramid_forward(std::span<const double> s, int levels, const FilterPair& f) {
    if (s.empty() || !std::has_single_bit(s.size())) {
        throw ShapeError("pyramid input length must be a power of two, got " + std::to_string(s.size()));
    }
    const int max_levels = std::countr_zero(s.size());
    if (levels < 0 || levels > max_levels) {
        throw ShapeError("level count " + std::to_string(levels) + " outside 0.." + std::to_string(max_levels));
    }
    PyramidDecomposition p;
    p.approximation.assign(s.begin(), s.end());
    for (int j = 0; j < levels; ++j) {
        auto [a, d] = analysis_step(p.approximation, f);
        p.approximation = std::move(a);
        p.details.push_back(std::move(d));
    }
    return p;
}

std::vector<double> pyramid_inverse(const PyramidDecomposition& p, const FilterPair& f) {
    std::vector<double> s = p.approximation;
    for (auto it = p.details.rbegin(); it != p.details.rend(); ++it) {
        if (it->size() != s.size()) {
            throw ShapeError("detail length " + std::to_string(it->size()) + " does not match approximation length " +
                             std::to_string(s.size()));
        }
        s = synthesis_step(s, *it, f);
    }
    return s;
}

std::vector<double> flatten(const PyramidDecomposition& p) {
    std::vector<double> out = p.approximation;
    for (auto it = p.details.rbegin(); it != p.details.rend(); ++it) {
        out.insert(out.end(), it->begin(), it->end());
    }
    return out;
}

PyramidDecomposition unflatten(std::span<const double> coefficients, int levels) {
    const std::size_t n = coefficients.size();
    if (n == 0 || !std::has_single_bit(n) || levels < 0 || levels > std::countr_zero(n)) {
        throw ShapeError("coefficient count must be 2^M with levels <= M");
    }
    PyramidDecomposition p;
    std::size_t len = n >> levels;
    p.approximation.assign(coefficients.begin(), coefficients.begin() + static_cast<std::ptrdiff_t>(len));
    std::size_t pos = len;
    std::vector<std::vector<double>> coarse_first;
    for (int j = 0; j < levels; ++j) {
        coarse_first.emplace_back(coefficients.begin() + static_cast<std::ptrdiff_t>(pos),
                                  coefficients.begin() + static_cast<std::ptrdiff_t>(pos + len));
        pos += len;
        len *= 2;
    }
    p.details.assign(coarse_first.rbegin(), coarse_first.rend());
    return p;
}

} // namespace qmra
