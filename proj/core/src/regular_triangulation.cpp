#include "simplexity/regular_triangulation.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace simplexity {

Triangulation regular_triangulation(const ConfigPtr& config, std::span<const Coordinate> heights)
{
    const std::size_t n = config->size();
    const std::size_t d = config->dim();
    if (heights.size() != n) throw std::invalid_argument("regular_triangulation: one height per point required");
    if (n < d + 1) throw std::invalid_argument("regular_triangulation: too few points");
    Triangulation out(config);
    std::vector<Index> subset(d + 1);
    for (std::size_t i = 0; i <= d; ++i) subset[i] = static_cast<Index>(i);
    std::vector<Integer> lambda(d + 1);
    SimplexFrame frame;
    while (true) {
        const Integer det = signed_volume(*config, subset);
        if (det != 0) {
            if (!make_simplex_frame(*config, subset, frame)) {
                throw std::overflow_error("regular_triangulation: coordinates too large");
            }
            // Lifted point q lies above the hyperplane through the lifted subset
            // iff det * (h_q - sum lambda_i h_i) has the sign of det.
            bool lower = true;
            bool tie = false;
            for (std::size_t q = 0; q < n && lower; ++q) {
                if (std::binary_search(subset.begin(), subset.end(), static_cast<Index>(q))) continue;
                frame.scaled_barycentric(config->point(q), lambda);
                Integer gap = Integer(frame.det) * heights[q];
                for (std::size_t i = 0; i <= d; ++i) gap -= lambda[i] * heights[subset[i]];
                const int s = gap.sign() * det.sign();
                if (s < 0) lower = false;
                if (s == 0) tie = true;
            }
            if (lower && tie) throw std::invalid_argument("regular_triangulation: heights are not generic");
            if (lower) out.add(subset);
        }
        std::size_t k = d + 1;
        while (k > 0 && subset[k - 1] == n - (d + 1) + k - 1) --k;
        if (k == 0) break;
        ++subset[k - 1];
        for (std::size_t j = k; j <= d; ++j) subset[j] = subset[j - 1] + 1;
    }
    return out;
}

} // namespace simplexity
