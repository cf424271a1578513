#include "genpoly/golden_tables.hpp"

#include <array>

namespace genpoly {

namespace {

constexpr std::array kSTable = {
    GoldenEntry{1, 1, "1"},
    GoldenEntry{2, 1, "0"},
    GoldenEntry{2, 2, "q^4"},
    GoldenEntry{2, 3, "q^3+q^2"},
    GoldenEntry{2, 4, "1"},
    GoldenEntry{3, 1, "0"},
    GoldenEntry{3, 2, "q^14+q^13-q^11-q^10"},
    GoldenEntry{3, 3, "q^18+q^17+2q^16+3q^15+2q^14+q^13-2q^11-3q^10-2q^9-q^8"},
    GoldenEntry{3, 4,
                "q^20 + q^19 + 2q^18 + 3q^17 + 5q^16 + 6q^15 + 6q^14 + 5q^13 + 3q^12 - 3q^10"
                " - 5q^9 - 5q^8 - 3q^7 - q^6"},
    GoldenEntry{3, 5,
                "q^20 + q^19 + 2q^18 + 3q^17 + 5q^16 + 6q^15 + 8q^14 + 9q^13 + 9q^12 + 7q^11"
                " + 4q^10 + q^9 - 2q^8 - 4q^7 - 5q^6 - 4q^5 - 2q^4"},
    GoldenEntry{3, 6,
                "q^18 + q^17 + 2q^16 + 3q^15 + 4q^14 + 5q^13 + 7q^12 + 7q^11 + 8q^10 + 8q^9"
                " + 6q^8 + 3q^7 + q^6 - q^5 - 2q^4 - 2q^3 - 2q^2 - q"},
    GoldenEntry{3, 7,
                "q^14 + q^13 + 2q^12 + 2q^11 + 3q^10 + 3q^9 + 4q^8 + 4q^7 + 4q^6 + 3q^5 + 3q^4"
                " + 2q^3 - q - 1"},
    GoldenEntry{3, 8, "q^8 + q^7 + q^6 + q^5 + q^4 + q^3 + q^2 + q + 1"},
    GoldenEntry{3, 9, "1"},
};

constexpr std::array kATwoVariable = {
    GoldenEntry{1, 0, "u"},
    GoldenEntry{2, 0, "u^2(u-1)(u-q)/(q(q-1)(q+1))"},
    GoldenEntry{3, 0,
                "u^3(u-1)(u-q)(u+q)(u^3+u^2-(q+1)^2u+q^2(q+1))"
                " / (q^3(q-1)^2(q+1)(q^2+q+1))"},
    GoldenEntry{4, 0,
                "u^4(u-1)(u-q) / (q^6(q-1)^3(q+1)^2(q^2+1)(q^2+q+1)) * ("
                "u^10 + (q+1)u^9 + (q^2+q+1)u^8"
                " - (q+1)(q^2+1)u^7 - (2q^4+4q^3+5q^2+4q+2)u^6"
                " + (q+1)(q^2-q+1)(q^2+q+1)u^5 + q(q^2+q+1)(q^3+q^2+1)u^4"
                " + q^2(q+1)(q^2+1)(q^2+q+1)u^3 - q^4(q+1)(q^2+1)(q^2+q+1)u^2"
                " - q^4(q+1)(q^2+1)(q^2+q+1)u + q^6(q^2+1)(q^2+q+1))"},
};

constexpr std::array kR49Low = {1, 1, 1, 0, -1, -2, 1};

}  // namespace

std::span<const GoldenEntry> golden_s_table() { return kSTable; }
std::span<const GoldenEntry> golden_a_two_variable() { return kATwoVariable; }
GoldenRPolynomial golden_r_4_9() { return {4, 9, kR49Low, 39, 2}; }

}  // namespace genpoly
