#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "ich/scalar.hpp"

namespace ich::pbw {

enum class GenKind : std::uint8_t { X = 0, G = 1, Y = 2 };

struct Gen {
    GenKind kind;
    std::uint8_t i = 0, j = 0;  // 1-based; j only for G

    static Gen x(int i) { return {GenKind::X, static_cast<std::uint8_t>(i), 0}; }
    static Gen g(int i, int j) { return {GenKind::G, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}; }
    static Gen y(int i) { return {GenKind::Y, static_cast<std::uint8_t>(i), 0}; }

    auto operator<=>(const Gen&) const = default;
};

using Word = std::vector<Gen>;
using GExp = std::vector<std::uint32_t>;

/// Exponents of a normally ordered monomial x^a g^c y^b. The g block is
/// indexed by the configured basis rank, so the same struct serves both the
/// row-major U(g) order and the triangular (lower, diagonal, upper) order.
struct TriExp {
    std::vector<std::uint32_t> x, g, y;
    auto operator<=>(const TriExp&) const = default;

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (auto k : x) d += k;
        for (auto k : g) d += k;
        for (auto k : y) d += k;
        return d;
    }
};

using Elem = std::map<TriExp, Scalar>;
using UgData = std::map<GExp, Scalar>;  // row-major exponent keys

enum class Strategy { Leftmost, Rightmost };

struct Config {
    int n = 1;
    unsigned long p = 0;
    std::vector<int> rank_of_rm;               // row-major index -> basis rank
    std::vector<std::pair<int, int>> pair_of_rank;  // rank -> (i,j), 1-based
    // [y_i, x_j] expansions in U(g), row-major exponent keys; null for pure U(g)
    const std::vector<std::vector<UgData>>* yx = nullptr;
    Strategy strategy = Strategy::Leftmost;

    int rank(const Gen& g) const { return rank_of_rm[(g.i - 1) * n + (g.j - 1)]; }
};

Config rowmajor_config(int n, unsigned long p);
Config triangular_config(int n, unsigned long p);

/// Normal form of coeff * word under the configured order. Words over
/// {x_i, e[i,j], y_i} with the gl_n relations, the module actions and,
/// when a bracket table is configured, the y-past-x deformation.
Elem normal_form(const Config& cfg, const Word& w, const Scalar& coeff);

/// Accumulating variant: adds coeff * NF(word) into acc.
void normal_form_into(const Config& cfg, const Word& w, const Scalar& coeff, Elem& acc);

/// Letters of a normal monomial, in the configured order.
Word word_of(const Config& cfg, const TriExp& m);

void add_into(Elem& acc, const TriExp& m, const Scalar& c);

}  // namespace ich::pbw
