#pragma once

#include <span>
#include <utility>
#include <vector>

namespace qmra {

/// Analysis filters: (Hs)_i = sum_n h_(n-2i) s_n and (Gs)_i = sum_n g_(n-2i) s_n.
/// Indices n wrap around the (dyadic) signal length.
struct FilterPair {
    std::vector<double> h;
    std::vector<double> g;

    static FilterPair haar();
};

/// Largest |s - (H*H + G*G) s| over the given signal.
double reconstruction_error(const FilterPair& f, std::span<const double> signal);

/// Approximation s^L and details d^1 ... d^L (d^1 finest, longest).
struct PyramidDecomposition {
    std::vector<double> approximation;
    std::vector<std::vector<double>> details;

    std::size_t coefficient_count() const;
};

/// One Haar level: s'_k = (s_2k + s_2k+1)/sqrt2, d'_k = (s_2k - s_2k+1)/sqrt2.
/// Throws ShapeError for odd or empty input.
std::pair<std::vector<double>, std::vector<double>> haar_step(std::span<const double> s);

/// One analysis level with arbitrary filters.
std::pair<std::vector<double>, std::vector<double>> analysis_step(std::span<const double> s,
                                                                  const FilterPair& f);

/// Adjoint of `analysis_step`: H* a + G* d.
std::vector<double> synthesis_step(std::span<const double> approx, std::span<const double> detail,
                                   const FilterPair& f);

/// Throws ShapeError unless the length is 2^M and levels <= M.
PyramidDecomposition pyramid_forward(std::span<const double> s, int levels,
                                     const FilterPair& f = FilterPair::haar());

/// Throws ShapeError if the detail lengths are not consistent halvings.
std::vector<double> pyramid_inverse(const PyramidDecomposition& p, const FilterPair& f = FilterPair::haar());

/// Flat layout s^L, d^L, d^(L-1), ..., d^1.
std::vector<double> flatten(const PyramidDecomposition& p);
PyramidDecomposition unflatten(std::span<const double> coefficients, int levels);

} // namespace qmra
