#include "qperm/reference_data.hpp"

#include "qperm/errors.hpp"

namespace qperm {
namespace refdata {

namespace {

ExponentMatrix m3(std::array<long, 9> e) {
    ExponentMatrix m(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = Rat(e[i * 3 + j]);
    return m;
}

ExponentMatrix m4(std::array<long, 16> e) {
    ExponentMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = Rat(e[i * 4 + j]);
    return m;
}

} // namespace

const std::vector<ConverterBase>& converter_bases_n3() {
    static const std::vector<ConverterBase> table = {
        {"id", 1, m3({0, 0, 0, 0, 0, 0, 0, 0, 0})},
        {"(12)", -1, m3({0, 0, 0, 0, 0, -2, 5, 5, 1})},
        {"(23)", -1, m3({0, 0, 0, 0, -2, -2, 7, 3, 3})},
        {"(13)", -1, m3({0, 0, 0, 0, 0, 0, 3, 3, 3})},
        {"(123)", 1, m3({0, 0, 0, 0, 2, 2, -4, 0, 0})},
        {"(132)", 1, m3({0, 0, 0, 0, 0, 2, -2, -2, 2})},
    };
    return table;
}

const ExponentMatrix& converter_base_matrix(const std::string& label) {
    for (const ConverterBase& e : converter_bases_n3())
        if (e.label == label) return e.matrix;
    throw Error("converter_base_matrix: unknown label '" + label + "'");
}

Perm converter_base_acting_perm(const std::string& label) {
    return Perm::from_cycles(label, 3).inverse();
}

const std::vector<std::vector<long>>& mixed_targets_n3() {
    static const std::vector<std::vector<long>> v = {
        {-1, 0, 0, 1, 2, 2}, {0, 0, 1, 2, 2, 3}, {0, 0, 1, 1, 2, 2},
        {-1, 0, 0, 2, 1, 2}, {0, 0, 0, 1, 2, 3}, {0, 1, 0, 2, 2, 3},
        {-1, 0, 0, 2, 2, 3}, {0, 1, 0, 1, 2, 2}, {-1, 1, 0, 2, 2, 2},
        {-1, 0, 1, 2, 2, 2}, {0, 0, 0, 2, 1, 3}, {0, 0, 1, 2, 1, 2},
        {0, 0, 0, 1, 1, 2},  {0, 1, 0, 2, 1, 2}, {0, 1, 1, 2, 2, 2},
    };
    return v;
}

const std::vector<std::vector<long>>& mixed_targets_n4() {
    static const std::vector<std::vector<long>> v = {
        {0, 1, 1, 2, 2, 2, 0, 1, 2, 3, 3, 3, 1, 2, 2, 3, 4, 4, 3, 3, 4, 4, 5, 5},
        {0, 1, 1, 2, 2, 2, 0, 1, 1, 3, 2, 3, 2, 3, 2, 4, 4, 5, 3, 3, 3, 4, 4, 5},
        {0, 1, 0, 2, 1, 2, 0, 1, 1, 3, 2, 3, 1, 3, 2, 4, 4, 4, 3, 4, 4, 5, 5, 5},
        {0, 1, 0, 1, 2, 2, 0, 1, 1, 3, 3, 4, 1, 2, 2, 4, 4, 5, 3, 3, 4, 5, 4, 5},
        {0, 0, 1, 2, 1, 2, 1, 1, 2, 3, 2, 3, 2, 3, 2, 3, 4, 4, 3, 4, 3, 4, 5, 5},
        {0, 0, 1, 1, 2, 2, 1, 1, 2, 3, 3, 4, 2, 2, 2, 3, 4, 5, 3, 3, 3, 4, 4, 5},
        {0, 0, 0, 1, 1, 2, 1, 1, 2, 3, 3, 4, 1, 2, 2, 3, 4, 4, 3, 4, 4, 5, 5, 5},
        {0, 0, 0, 1, 1, 2, 1, 1, 1, 3, 2, 4, 2, 3, 2, 4, 4, 5, 3, 4, 3, 5, 4, 5},
    };
    return v;
}

const SignSpectra& sign_spectra(int n) {
    static const SignSpectra s2{{-2, 0, 2}, {-2, 0, 2}, {0, 2}};
    static const SignSpectra s3{{-4, 0, 4}, {2}, {-1, 1, 3}};
    static const SignSpectra s4{{0}, {0}, {0, 4}};
    switch (n) {
        case 2: return s2;
        case 3: return s3;
        case 4: return s4;
        default: throw Error("sign_spectra: only n = 2, 3, 4 are tabulated");
    }
}

const ExponentMatrix& mixed_example_n3() {
    static const ExponentMatrix m = m3({0, 1, 2, -1, 0, 0, 0, 0, 0});
    return m;
}

const ExponentMatrix& mixed_example_n4() {
    static const ExponentMatrix m =
        m4({3, 5, 6, 8, -4, -2, -2, 0, -2, -1, -1, 0, 0, 0, 0, 0});
    return m;
}

} // namespace refdata
} // namespace qperm
