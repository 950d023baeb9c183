#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ich {

/// Variable kinds, in canonical order. a[u,v] are matrix coordinates
/// (functions on gl_n), e[i,j] Lie generators, x[i] covectors, y[i]
/// vectors, t/tau formal series variables.
enum class VarKind : std::uint8_t { A = 0, E = 1, X = 2, Y = 3, T = 4, Tau = 5 };

struct VarId {
    VarKind kind = VarKind::A;
    std::uint16_t i = 0;  // 1-based
    std::uint16_t j = 0;  // 1-based, zero for x/y/t/tau

    static VarId a(int u, int v) { return make(VarKind::A, u, v); }
    static VarId e(int i, int j) { return make(VarKind::E, i, j); }
    static VarId x(int i) { return make(VarKind::X, i, 0); }
    static VarId y(int i) { return make(VarKind::Y, i, 0); }
    static VarId t() { return VarId{VarKind::T, 0, 0}; }
    static VarId tau() { return VarId{VarKind::Tau, 0, 0}; }

    auto operator<=>(const VarId&) const = default;

    std::string str() const {
        switch (kind) {
            case VarKind::A: return "a[" + std::to_string(i) + "," + std::to_string(j) + "]";
            case VarKind::E: return "e[" + std::to_string(i) + "," + std::to_string(j) + "]";
            case VarKind::X: return "x[" + std::to_string(i) + "]";
            case VarKind::Y: return "y[" + std::to_string(i) + "]";
            case VarKind::T: return "t";
            case VarKind::Tau: return "tau";
        }
        return "?";
    }

private:
    static VarId make(VarKind k, int i, int j) {
        if (i < 1 || i > 0xffff || j < 0 || j > 0xffff)
            throw std::out_of_range("VarId: index out of range");
        return VarId{k, static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)};
    }
};

}  // namespace ich
